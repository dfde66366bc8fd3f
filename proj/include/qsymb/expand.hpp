#pragma once

#include "qsymb/bigint.hpp"
#include "qsymb/combinat.hpp"
#include "qsymb/qpoly.hpp"
#include "qsymb/tableaux.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsymb {

/// Insertion and recording tableau of a permutation under row insertion.
struct RskPair {
    YoungTableau p;  // insertion
    YoungTableau q;  // recording
};

RskPair rsk(const Permutation& w);

/// All permutations whose insertion tableau equals the given standard
/// tableau.
struct KnuthClass {
    YoungTableau tableau;
    std::vector<Permutation> members;
};

KnuthClass knuth_class(const YoungTableau& t, int n);

/// Expansion in the Schur basis; reconstruction is exact by construction.
using SchurExpansion = std::map<Partition, BigInt>;

/// Expand a symmetric homogeneous polynomial of the given degree over
/// x_1..x_M. Requires M >= degree. Throws NotSymmetric when no exact
/// expansion exists.
SchurExpansion schur_expansion(const SparsePoly& p, int degree);

/// Coefficients of the product of two Schur polynomials in the Schur basis,
/// computed over an internally chosen alphabet.
SchurExpansion lr_expansion(const Partition& lambda, const Partition& mu);
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Expansions over the chain-sum bases, by Boolean-lattice Moebius inversion
/// on the coefficients of the packed monomials. Coefficients may carry t.
using FundamentalExpansionA = std::map<DescentSetA, TCoeff>;
using FundamentalExpansionB = std::map<DescentSetB, TCoeff>;

FundamentalExpansionA fundamental_a_expansion(const SparsePoly& p, int degree);
FundamentalExpansionB fundamental_b_expansion(const SparsePoly& p, int degree);

/// Outcome of an attempted expansion in the domino-function basis.
struct DominoExpansion {
    bool expandable = false;
    std::map<Partition, TCoeff> coefficients;
    /// When not expandable: up to ten (witness, mismatch) pairs describing
    /// where the best candidate combination misses the input.
    std::vector<std::pair<std::string, std::string>> residual;
};

enum class QMode { One, Generic };

/// Expand a polynomial of the given degree over x_0..x_M in the basis of
/// domino functions of that degree. At q = 1 the basis is complete and the
/// solve can only fail for inputs outside its span; at generic q the solve
/// is exploratory and an inexpressible input is a normal outcome.
DominoExpansion domino_basis_expansion(const SparsePoly& p, int degree, QMode mode);

} // namespace qsymb
