#pragma once

#include "qsymb/bigint.hpp"
#include "qsymb/combinat.hpp"
#include "qsymb/tableaux.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsymb {

/// Truncated alphabet descriptor. The exponent layout always reserves a slot
/// for x0 (and y0 when a second alphabet is present); with_x0 says whether
/// the constructors may actually use it.
struct AlphabetSpec {
    int x_max = 0;
    bool with_x0 = false;
    int y_max = -1;      // -1: single alphabet
    bool with_y0 = false;

    int x_slots() const { return x_max + 1; }
    int y_slots() const { return y_max >= 0 ? y_max + 1 : 0; }
    int slots() const { return x_slots() + y_slots(); }
    bool has_y() const { return y_max >= 0; }

    static AlphabetSpec type_a(int m) { return {m, false, -1, false}; }
    static AlphabetSpec type_b(int m) { return {m, true, -1, false}; }
    static AlphabetSpec type_a_xy(int mx, int my) { return {mx, false, my, false}; }
    static AlphabetSpec type_b_xy(int mx, int my) { return {mx, true, my, true}; }

    bool operator==(const AlphabetSpec&) const = default;
};

/// Which block of a two-alphabet spec a constructor writes into.
enum class Block { X, Y };

/// Exponent vector over the alphabet's slots: x0..x_max then y0..y_max.
using Monomial = std::vector<int>;

/// Laurent polynomial in the half-spin unit t (t*t represents q), with exact
/// integer coefficients.
class TCoeff {
public:
    TCoeff() = default;
    TCoeff(BigInt v);
    TCoeff(long long v) : TCoeff(BigInt(v)) {}
    static TCoeff t_power(int k, BigInt v = BigInt(1));

    bool is_zero() const { return c_.empty(); }
    const std::map<int, BigInt>& parts() const { return c_; }

    TCoeff& operator+=(const TCoeff& o);
    TCoeff& operator-=(const TCoeff& o);
    TCoeff operator-() const;
    friend TCoeff operator+(TCoeff a, const TCoeff& b) { return a += b; }
    friend TCoeff operator-(TCoeff a, const TCoeff& b) { return a -= b; }
    friend TCoeff operator*(const TCoeff& a, const TCoeff& b);

    /// Sum of all coefficients, i.e. the value at t = 1.
    BigInt at_t1() const;

    /// "t^2 + 1", "-2t", "3"; terms by decreasing t-exponent.
    std::string to_string() const;

    bool operator==(const TCoeff&) const = default;

private:
    std::map<int, BigInt> c_;  // t-exponent -> coefficient, no zeros
    void prune();
};

/// Graded lexicographic order: total degree first, then the exponent vector
/// itself (x0 most significant).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact sparse polynomial over a truncated alphabet. Immutable in spirit:
/// operations return new values.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(AlphabetSpec spec);

    const AlphabetSpec& spec() const { return spec_; }
    const std::map<Monomial, TCoeff, MonomialLess>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& mon, TCoeff coeff);
    TCoeff coefficient_of(const Monomial& mon) const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly scaled(const TCoeff& c) const;

    bool operator==(const SparsePoly& o) const;

    /// Total degree when homogeneous (0 for the zero polynomial).
    /// Product-alphabet terms count both blocks.
    bool is_homogeneous(int* degree = nullptr) const;

    /// All t-coefficients evaluated at t = 1.
    SparsePoly at_t1() const;

    /// Canonical text: one line per (monomial, t-power), monomials in
    /// decreasing graded-lex order.
    std::string canonical_text() const;
    /// FNV-1a over the canonical text, as fixed-width hex.
    std::string digest() const;

    static SparsePoly constant(const TCoeff& c, AlphabetSpec spec);
    static SparsePoly parse(const std::string& text, AlphabetSpec spec);

private:
    AlphabetSpec spec_;
    std::map<Monomial, TCoeff, MonomialLess> terms_;
    void check_same_spec(const SparsePoly& o) const;
};

std::string monomial_text(const Monomial& mon, const AlphabetSpec& spec);

// --- generating functions ---------------------------------------------------

/// Chain sum over 1 <= i_1 <= ... <= i_n <= M with strict rises at I.
SparsePoly fundamental_a(const DescentSetA& des, int n, const AlphabetSpec& spec,
                         Block block = Block::X);

/// Chain sum anchored at i_0 = 0, values in 0..M, strict rises at I.
SparsePoly fundamental_b(const DescentSetB& des, int n, const AlphabetSpec& spec,
                         Block block = Block::X);

/// Chain sum with one slot per unit of each nonzero entry and one
/// exponent-zero slot per zero entry; strict rises where the nonzero entries
/// end.
SparsePoly fundamental_wc(const WeakComposition& alpha, const AlphabetSpec& spec,
                          Block block = Block::X);

/// Generating function of order-preserving maps from the letter chain into
/// the alphabet; overlined letters contribute exponent zero.
SparsePoly gamma_poly(const ColouredPermutation& pi, const AlphabetSpec& spec,
                      Block block = Block::X);

/// Content sum over semistandard tableaux with entries in lowest..x_max.
SparsePoly schur_poly(const Partition& shape, const AlphabetSpec& spec, Block block = Block::X,
                      int lowest = 1);

/// Content sum over semistandard bi-tableaux, recording only the shaped
/// component.
SparsePoly schur_p_poly(const Partition& shape, int p, const AlphabetSpec& spec,
                        Block block = Block::X);

/// Weighted content sum over semistandard domino tableaux; the t-exponent of
/// each term is the tableau's vertical-domino count.
SparsePoly domino_poly(const Partition& shape, const AlphabetSpec& spec, Block block = Block::X);

/// Chain sum over the product alphabet {x_i y_j} in lexicographic pair order.
SparsePoly fundamental_a_xy(const DescentSetA& des, int n, const AlphabetSpec& spec);

/// Schur sum over the product alphabet.
SparsePoly schur_xy(const Partition& shape, const AlphabetSpec& spec);

/// Quasisymmetry: for single-alphabet polynomials, packing the positive
/// support indices of any monomial down to 1..p preserves the coefficient.
/// Returns an offending monomial if the property fails.
std::optional<Monomial> shift_property_violation(const SparsePoly& p);

} // namespace qsymb
