#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsymb {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Weak composition: tuple of non-negative integers. Zero entries are
/// meaningful; they add phantom slots to the index chains of the generating
/// functions built on top.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int weight() const;        // sum of entries
    int zero_length() const;   // number of zero entries
    int total_weight() const { return weight() + zero_length(); }

    /// Partial-sum positions marking the end of each nonzero entry, counting
    /// one slot per zero entry and k slots per entry k.
    std::vector<int> descent_set() const;

    bool operator==(const WeakComposition&) const = default;
    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> entries_;
};

/// Descent set living inside {1, ..., n-1}.
struct DescentSetA {
    int n = 0;
    std::vector<int> elems;  // sorted, strictly increasing

    DescentSetA() = default;
    DescentSetA(int n, std::vector<int> elems);
    bool contains(int i) const;
    bool operator==(const DescentSetA&) const = default;
    auto operator<=>(const DescentSetA&) const = default;
};

/// Descent set living inside {0} u {1, ..., n-1}; position 0 records a
/// leading sign change.
struct DescentSetB {
    int n = 0;
    std::vector<int> elems;

    DescentSetB() = default;
    DescentSetB(int n, std::vector<int> elems);
    bool contains(int i) const;
    bool operator==(const DescentSetB&) const = default;
    auto operator<=>(const DescentSetB&) const = default;
};

/// Permutation of [n] as a word, 1-based values.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    Permutation inverse() const;
    /// (a*b)(i) = a(b(i))
    Permutation compose(const Permutation& b) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

/// Signed permutation: word of nonzero integers whose absolute values are a
/// permutation of [n]; the negative half is determined by symmetry.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    SignedPermutation inverse() const;

    bool operator==(const SignedPermutation&) const = default;
    auto operator<=>(const SignedPermutation&) const = default;

private:
    std::vector<int> word_;
};

/// One letter of a coloured permutation; overlined letters sort below all
/// plain letters, and carry exponent 0 in the generating functions.
struct ColouredLetter {
    int value = 0;
    bool overlined = false;

    bool operator==(const ColouredLetter&) const = default;
    auto operator<=>(const ColouredLetter&) const = default;
};

/// Strict order overlined 1 < overlined 2 < ... < 1 < 2 < ...
bool letter_less(const ColouredLetter& a, const ColouredLetter& b);

/// Coloured permutation: word of letters with distinct absolute values
/// exactly 1..l.
class ColouredPermutation {
public:
    ColouredPermutation() = default;
    explicit ColouredPermutation(std::vector<ColouredLetter> letters);

    const std::vector<ColouredLetter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    bool operator==(const ColouredPermutation&) const = default;
    auto operator<=>(const ColouredPermutation&) const = default;

private:
    std::vector<ColouredLetter> letters_;
};

// --- descent statistics ---------------------------------------------------

DescentSetA descent_set(const Permutation& p);

/// Descents of a signed permutation; 0 is present exactly when the first
/// letter is negative.
DescentSetB descent_set(const SignedPermutation& p);

/// Number of negative letters.
int total_colour(const SignedPermutation& p);

// --- shuffle products -----------------------------------------------------

/// All interleavings of a with b shifted above a's values. Result size is
/// always C(n+m, n).
std::vector<Permutation> shuffle(const Permutation& a, const Permutation& b);

/// Same for signed permutations; signs travel with their letters.
std::vector<SignedPermutation> shuffle(const SignedPermutation& a, const SignedPermutation& b);

/// Group signature of a coloured permutation: counts of plain and overlined
/// letters.
struct SnpSignature {
    int n = 0;  // plain letters
    int p = 0;  // overlined letters
};

/// Signature when the overlined values increase left to right; nullopt
/// otherwise (non-membership is a normal result).
std::optional<SnpSignature> snp_signature(const ColouredPermutation& p);

/// Coloured shuffle: a's plain letters shift by q, b's overlined letters by
/// p, b's plain letters by p + n, then all interleavings are taken. Both
/// operands must have sorted overlined letters.
std::vector<ColouredPermutation> shuffle(const ColouredPermutation& a, const ColouredPermutation& b);

/// Run lengths of maximal increasing blocks of plain letters, with one zero
/// entry per overlined letter, in word order. Requires sorted overlined
/// letters.
WeakComposition weak_composition_of(const ColouredPermutation& p);

// --- enumeration ----------------------------------------------------------

std::vector<Permutation> all_permutations(int n);
std::vector<SignedPermutation> all_signed_permutations(int n);

/// All coloured permutations with n plain and p overlined letters whose
/// overlined values increase left to right, in lexicographic word order.
std::vector<ColouredPermutation> all_coloured_snp(int n, int p);

std::vector<Permutation> descent_class(int n, const DescentSetA& target);
std::vector<SignedPermutation> descent_class(int n, const DescentSetB& target);

/// All subsets of {1..n-1} (type A) / {0..n-1} (type B), in a fixed order.
std::vector<DescentSetA> all_descent_sets_a(int n);
std::vector<DescentSetB> all_descent_sets_b(int n);

std::vector<Partition> partitions_of(int n);

/// Partitions of 2n whose diagram admits a domino tiling (equivalently,
/// balanced beta-number parities on a two-runner abacus).
std::vector<Partition> domino_tileable_partitions(int n);
bool is_domino_tileable(const Partition& shape);

// --- textual formats --------------------------------------------------------

Partition parse_partition(std::string_view s);          // "5,5,4,1,1"; "" = empty
WeakComposition parse_weak_composition(std::string_view s);  // "2,1,0,0,1"
Permutation parse_permutation(std::string_view s);      // "3 1 2"
SignedPermutation parse_signed_permutation(std::string_view s);  // "-2 1"
ColouredPermutation parse_coloured_permutation(std::string_view s);  // "5 ~1 2"
std::vector<int> parse_descent_elems(std::string_view s);  // "{0,3,5,6}"

std::string to_string(const Partition& p);
std::string to_string(const WeakComposition& w);
std::string to_string(const Permutation& p);
std::string to_string(const SignedPermutation& p);
std::string to_string(const ColouredPermutation& p);
std::string to_string(const DescentSetA& d);
std::string to_string(const DescentSetB& d);

} // namespace qsymb
