#pragma once

#include "qsymb/combinat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsymb {

/// Parameters a verification case may take; identities use the subset they
/// need and reject the rest via validation.
struct IdentityParams {
    std::optional<int> n, m, alphabet, alphabet_y, p, q;
    std::optional<Partition> lambda, mu;

    std::string to_string() const;
};

struct IdentityCase {
    std::string id;
    IdentityParams params;
};

struct Mismatch {
    std::string key;  // monomial or witness
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    IdentityParams params;  // resolved, defaults filled in
    std::string status;     // "verified" | "failed" | "not-expandable"
    size_t lhs_terms = 0;
    size_t rhs_terms = 0;
    std::string lhs_digest;
    std::string rhs_digest;
    std::vector<Mismatch> mismatches;  // at most 10
    long long ms = 0;

    bool ok() const { return status == "verified"; }
};

struct RegistryEntry {
    std::string id;
    std::string description;
    IdentityParams defaults;
};

/// The fixed table of verifiable identities, in report order.
const std::vector<RegistryEntry>& registry();

/// Run one case; user params override the registry defaults. Throws
/// InvalidParams for unknown ids or out-of-range parameters.
IdentityReport verify(const IdentityCase& c);

/// Run every registry entry at its defaults, optionally on several threads.
/// Reports come back in registry order regardless of scheduling.
std::vector<IdentityReport> verify_all(int jobs = 1);

std::string report_to_json(const IdentityReport& r);
std::string report_to_text(const IdentityReport& r);

class SparsePoly;

/// Diff two polynomials through the same reporting machinery the identity
/// checkers use; mismatching monomials land in the report.
IdentityReport compare_polynomials(const std::string& label, const SparsePoly& lhs,
                                   const SparsePoly& rhs);

} // namespace qsymb
