#include "qsymb/harness.hpp"

#include "qsymb/bigint.hpp"
#include "qsymb/errors.hpp"
#include "qsymb/expand.hpp"
#include "qsymb/qpoly.hpp"
#include "qsymb/tableaux.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <set>
#include <sstream>

namespace qsymb {

std::string IdentityParams::to_string() const {
    std::ostringstream os;
    auto put = [&os, first = true](const std::string& k, const std::string& v) mutable {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    };
    if (n) put("n", std::to_string(*n));
    if (m) put("m", std::to_string(*m));
    if (alphabet) put("M", std::to_string(*alphabet));
    if (alphabet_y) put("My", std::to_string(*alphabet_y));
    if (p) put("p", std::to_string(*p));
    if (q) put("q", std::to_string(*q));
    if (lambda) put("lambda", qsymb::to_string(*lambda));
    if (mu) put("mu", qsymb::to_string(*mu));
    return os.str();
}

namespace {

IdentityParams defaults(std::optional<int> n, std::optional<int> m, std::optional<int> M,
                        std::optional<int> My, std::optional<int> p, std::optional<int> q,
                        std::optional<Partition> lambda = std::nullopt,
                        std::optional<Partition> mu = std::nullopt) {
    IdentityParams out;
    out.n = n;
    out.m = m;
    out.alphabet = M;
    out.alphabet_y = My;
    out.p = p;
    out.q = q;
    out.lambda = std::move(lambda);
    out.mu = std::move(mu);
    return out;
}

const std::vector<RegistryEntry>& registry_table() {
    static const std::vector<RegistryEntry> table = {
        {"eq2", "Schur sum over semistandard tableaux equals the chain-basis sum over standard tableaux",
         defaults(4, {}, 5, {}, {}, {})},
        {"eq3", "coproduct: a fundamental on the product alphabet splits over factorizations",
         defaults(3, {}, 3, 3, {}, {})},
        {"eq4", "Cauchy kernel: paired Schur sum equals the one-row Schur on the product alphabet",
         defaults(3, {}, 3, 3, {}, {})},
        {"eq5", "double sum over same-shape tableau pairs equals the empty-descent fundamental on the product alphabet",
         defaults(3, {}, 3, 3, {}, {})},
        {"eq6", "product of two fundamentals expands over the shuffle set",
         defaults(3, 2, 5, {}, {}, {})},
        {"eq7", "product of two Schur polynomials expands over shuffled insertion classes",
         defaults({}, {}, 5, {}, {}, {}, Partition({2, 1}), Partition({2}))},
        {"eq11", "descent-class counts of shuffled classes match the weighted standard-tableau counts",
         defaults({}, {}, {}, {}, {}, {}, Partition({2, 1}), Partition({2}))},
        {"eq13", "product of weak-composition fundamentals expands over coloured shuffles",
         defaults(2, 1, 3, {}, 1, 1)},
        {"eq14", "product of zero-composition fundamentals via signed binomial recombination",
         defaults({}, {}, 4, {}, 2, 2)},
        {"lemma1", "bi-tableau generating function is a binomial multiple of the Schur polynomial",
         defaults(3, {}, 4, {}, 2, {})},
        {"prop2", "bi-tableau generating function expands over weak-composition fundamentals",
         defaults(3, {}, 4, {}, 2, {})},
        {"thm1", "product of bi-tableau sums equals the signed binomial recombination over standard bi-tableaux",
         defaults({}, {}, 5, {}, 1, 2, Partition({2}), Partition({1}))},
        {"cor1", "coloured-shuffle sum of chain generating functions equals the recombination side",
         defaults({}, {}, 4, {}, 1, 1, Partition({1}), Partition({1}))},
        {"lemma2", "domino function expands over the x0-anchored fundamentals with spin weights",
         defaults(3, {}, 4, {}, {}, {})},
        {"fig1", "reference domino tableaux: tilings, descent sets, spins and weight",
         defaults({}, {}, {}, {}, {}, {})},
        {"qfactor", "domino function at t = 1 factors through the two-runner quotient pair",
         defaults(3, {}, 4, {}, {}, {})},
        {"eq18", "product of two domino functions at t = 1 expands with paired coefficients",
         defaults(2, 2, 4, {}, {}, {})},
        {"thm2", "basis coefficients of a domino-function product count descent-filtered tableaux",
         defaults(2, 1, 4, {}, {}, {})},
        {"prop3", "signed-permutation double sum equals the domino-tableau double sum with spin weights",
         defaults(3, {}, 3, 3, {}, {})},
        {"gamma-ex", "chain generating function of one unsorted word as a difference of fundamentals",
         defaults({}, {}, 3, {}, {}, {})},
    };
    return table;
}

// --- comparison plumbing -----------------------------------------------------

using Entries = std::map<std::string, std::string>;

void put_value(Entries& e, const std::string& key, const std::string& value) {
    e[key] = value;
}

void put_poly(Entries& e, const std::string& prefix, const SparsePoly& poly) {
    for (const auto& [mon, c] : poly.terms()) {
        e[prefix + " | " + monomial_text(mon, poly.spec())] = c.to_string();
    }
}

std::string entries_digest(const Entries& e) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (char ch : s) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        h ^= 0x1e;
        h *= 1099511628211ull;
    };
    for (const auto& [k, v] : e) {
        mix(k);
        mix(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

IdentityReport compare_sides(const std::string& id, const IdentityParams& params,
                             const Entries& lhs, const Entries& rhs) {
    IdentityReport r;
    r.id = id;
    r.params = params;
    r.lhs_terms = lhs.size();
    r.rhs_terms = rhs.size();
    r.lhs_digest = entries_digest(lhs);
    r.rhs_digest = entries_digest(rhs);
    std::set<std::string> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const auto& k : keys) {
        auto lit = lhs.find(k);
        auto rit = rhs.find(k);
        std::string lv = lit == lhs.end() ? "0" : lit->second;
        std::string rv = rit == rhs.end() ? "0" : rit->second;
        if (lv != rv && r.mismatches.size() < 10) r.mismatches.push_back({k, lv, rv});
    }
    r.status = r.mismatches.empty() ? "verified" : "failed";
    return r;
}

// --- resolved parameters ------------------------------------------------------

struct Resolved {
    int n = 0, m = 0, M = 0, My = 0, p = 0, q = 0;
    Partition lambda, mu;
};

int need(const std::optional<int>& v, const char* name, int lo = 0) {
    if (!v) throw InvalidParams(std::string("missing parameter ") + name);
    if (*v < lo)
        throw InvalidParams(std::string("parameter ") + name + " must be at least " +
                            std::to_string(lo));
    return *v;
}

Partition need(const std::optional<Partition>& v, const char* name) {
    if (!v) throw InvalidParams(std::string("missing parameter ") + name);
    return *v;
}

// --- shared builders ----------------------------------------------------------

/// Memoized weak-composition fundamentals; compositions repeat heavily in
/// the recombination sums.
class WcCache {
public:
    explicit WcCache(AlphabetSpec spec) : spec_(spec) {}
    const SparsePoly& get(const WeakComposition& a) {
        auto it = cache_.find(a);
        if (it == cache_.end()) it = cache_.emplace(a, fundamental_wc(a, spec_)).first;
        return it->second;
    }

private:
    AlphabetSpec spec_;
    std::map<WeakComposition, SparsePoly> cache_;
};

/// Right side shared by thm1 and cor1: signed binomial recombination over
/// standard bi-tableaux of all shapes of the product weight.
SparsePoly recombination_rhs(const Partition& lambda, const Partition& mu, int p, int q,
                             const AlphabetSpec& spec, WcCache& wc) {
    SchurExpansion lr = lr_expansion(lambda, mu);
    SparsePoly rhs(spec);
    for (int j = 0; j <= p; ++j) {
        BigInt coef = binomial(p, j) * binomial(p + q - j, p);
        if (j % 2 == 1) coef = -coef;
        if (coef.is_zero()) continue;
        for (const auto& [nu, c] : lr) {
            BigInt weight = coef * c;
            for (const auto& v : standard_bitableaux(nu, p + q - j)) {
                rhs += wc.get(weak_composition_of(v)).scaled(TCoeff(weight));
            }
        }
    }
    return rhs;
}

ColouredPermutation epsilon(int p) {
    std::vector<ColouredLetter> ls;
    for (int v = 1; v <= p; ++v) ls.push_back({v, true});
    return ColouredPermutation(std::move(ls));
}

ColouredPermutation as_coloured(const Permutation& w) {
    std::vector<ColouredLetter> ls;
    for (int v : w.word()) ls.push_back({v, false});
    return ColouredPermutation(std::move(ls));
}

// --- checkers -----------------------------------------------------------------

void check_eq2(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    for (const auto& lambda : partitions_of(r.n)) {
        std::string tag = "lambda=" + to_string(lambda);
        put_poly(lhs, tag, schur_poly(lambda, spec));
        SparsePoly sum(spec);
        for (const auto& t : standard_tableaux(lambda))
            sum += fundamental_a(descent_set(t), r.n, spec);
        put_poly(rhs, tag, sum);
    }
}

void check_eq3(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a_xy(r.M, r.My);
    auto group = all_permutations(r.n);
    for (const auto& pi : group) {
        std::string tag = "pi=" + to_string(pi);
        put_poly(lhs, tag, fundamental_a_xy(descent_set(pi), r.n, spec));
        SparsePoly sum(spec);
        for (const auto& sigma : group) {
            // factorizations compose left to right: sigma first, then rho
            Permutation rho = pi.compose(sigma.inverse());
            sum += fundamental_a(descent_set(sigma), r.n, spec) *
                   fundamental_a(descent_set(rho), r.n, spec, Block::Y);
        }
        put_poly(rhs, tag, sum);
    }
}

void check_eq4(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a_xy(r.M, r.My);
    SparsePoly sum(spec);
    for (const auto& lambda : partitions_of(r.n)) {
        sum += schur_poly(lambda, spec) * schur_poly(lambda, spec, Block::Y);
    }
    put_poly(lhs, "paired", sum);
    put_poly(rhs, "paired",
             r.n == 0 ? SparsePoly::constant(TCoeff(BigInt(1)), spec)
                      : schur_xy(Partition({r.n}), spec));
}

void check_eq5(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a_xy(r.M, r.My);
    SparsePoly tableau_side(spec);
    for (const auto& lambda : partitions_of(r.n)) {
        auto syt = standard_tableaux(lambda);
        std::vector<SparsePoly> fx, fy;
        for (const auto& t : syt) {
            fx.push_back(fundamental_a(descent_set(t), r.n, spec));
            fy.push_back(fundamental_a(descent_set(t), r.n, spec, Block::Y));
        }
        for (size_t i = 0; i < syt.size(); ++i) {
            for (size_t j = 0; j < syt.size(); ++j) tableau_side += fx[i] * fy[j];
        }
    }
    SparsePoly kernel = fundamental_a_xy(DescentSetA(r.n, {}), r.n, spec);
    SparsePoly perm_side(spec);
    for (const auto& pi : all_permutations(r.n)) {
        perm_side += fundamental_a(descent_set(pi), r.n, spec) *
                     fundamental_a(descent_set(pi.inverse()), r.n, spec, Block::Y);
    }
    put_poly(lhs, "tableaux-vs-kernel", tableau_side);
    put_poly(rhs, "tableaux-vs-kernel", kernel);
    put_poly(lhs, "kernel-vs-permutations", kernel);
    put_poly(rhs, "kernel-vs-permutations", perm_side);
}

void check_eq6(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    const int total = r.n + r.m;
    for (const auto& a : all_permutations(r.n)) {
        SparsePoly fa = fundamental_a(descent_set(a), r.n, spec);
        for (const auto& b : all_permutations(r.m)) {
            std::string tag = "alpha=" + to_string(a) + ",beta=" + to_string(b);
            put_poly(lhs, tag, fa * fundamental_a(descent_set(b), r.m, spec));
            SparsePoly sum(spec);
            for (const auto& g : shuffle(a, b))
                sum += fundamental_a(descent_set(g), total, spec);
            put_poly(rhs, tag, sum);
        }
    }
}

void check_eq7(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    const int total = r.lambda.weight() + r.mu.weight();
    SparsePoly product = schur_poly(r.lambda, spec) * schur_poly(r.mu, spec);
    for (const auto& t : standard_tableaux(r.lambda)) {
        KnuthClass ct = knuth_class(t, r.lambda.weight());
        for (const auto& u : standard_tableaux(r.mu)) {
            KnuthClass cu = knuth_class(u, r.mu.weight());
            std::string tag = "T=" + to_string(t) + ",U=" + to_string(u);
            put_poly(lhs, tag, product);
            SparsePoly sum(spec);
            for (const auto& a : ct.members) {
                for (const auto& b : cu.members) {
                    for (const auto& g : shuffle(a, b))
                        sum += fundamental_a(descent_set(g), total, spec);
                }
            }
            put_poly(rhs, tag, sum);
        }
    }
}

void check_eq11(const Resolved& r, Entries& lhs, Entries& rhs) {
    const int total = r.lambda.weight() + r.mu.weight();
    SchurExpansion lr = lr_expansion(r.lambda, r.mu);
    // per-shape counts of standard tableaux by descent set
    std::map<Partition, std::map<std::vector<int>, BigInt>> counts;
    for (const auto& [nu, c] : lr) {
        for (const auto& v : standard_tableaux(nu)) counts[nu][descent_set(v).elems] += BigInt(1);
    }
    for (const auto& t : standard_tableaux(r.lambda)) {
        KnuthClass ct = knuth_class(t, r.lambda.weight());
        for (const auto& u : standard_tableaux(r.mu)) {
            KnuthClass cu = knuth_class(u, r.mu.weight());
            std::map<std::vector<int>, BigInt> shuffle_counts;
            for (const auto& a : ct.members) {
                for (const auto& b : cu.members) {
                    for (const auto& g : shuffle(a, b))
                        shuffle_counts[descent_set(g).elems] += BigInt(1);
                }
            }
            for (const auto& des : all_descent_sets_a(total)) {
                std::string tag = "T=" + to_string(t) + ",U=" + to_string(u) +
                                  ",I=" + to_string(des);
                BigInt weighted;
                for (const auto& [nu, c] : lr) {
                    auto it = counts[nu].find(des.elems);
                    if (it != counts[nu].end()) weighted += c * it->second;
                }
                auto sit = shuffle_counts.find(des.elems);
                put_value(lhs, tag, weighted.to_string());
                put_value(rhs, tag,
                          (sit == shuffle_counts.end() ? BigInt(0) : sit->second).to_string());
            }
        }
    }
    // class cardinality in a fixed descent class is independent of the
    // representative tableau of each shape
    for (int k = 1; k <= std::min(total, 4); ++k) {
        for (const auto& nu : partitions_of(k)) {
            auto tabs = standard_tableaux(nu);
            std::vector<KnuthClass> classes;
            for (const auto& v : tabs) classes.push_back(knuth_class(v, k));
            for (const auto& des : all_descent_sets_a(k)) {
                auto count_in = [&des](const KnuthClass& cls) {
                    int c = 0;
                    for (const auto& w : cls.members) {
                        if (descent_set(w) == des) ++c;
                    }
                    return c;
                };
                int first = count_in(classes[0]);
                for (size_t vi = 0; vi < classes.size(); ++vi) {
                    std::string tag = "independence nu=" + to_string(nu) + ",I=" + to_string(des) +
                                      ",V#" + std::to_string(vi);
                    put_value(lhs, tag, std::to_string(first));
                    put_value(rhs, tag, std::to_string(count_in(classes[vi])));
                }
            }
        }
    }
}

void check_eq13(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    WcCache wc(spec);
    for (const auto& a : all_coloured_snp(r.n, r.p)) {
        const SparsePoly& fa = wc.get(weak_composition_of(a));
        for (const auto& b : all_coloured_snp(r.m, r.q)) {
            std::string tag = "alpha=" + to_string(a) + ",beta=" + to_string(b);
            put_poly(lhs, tag, fa * wc.get(weak_composition_of(b)));
            SparsePoly sum(spec);
            for (const auto& g : shuffle(a, b)) sum += gamma_poly(g, spec);
            put_poly(rhs, tag, sum);
        }
    }
    if (r.n == 2 && r.p == 1 && r.m == 1 && r.q == 1) {
        // worked shuffle instance: 3 2 ~1 with ~1 2
        auto shuffled = shuffle(parse_coloured_permutation("3 2 ~1"),
                                parse_coloured_permutation("~1 2"));
        std::vector<std::string> got;
        for (const auto& g : shuffled) got.push_back(to_string(g));
        std::sort(got.begin(), got.end());
        std::vector<std::string> expected = {
            "4 3 ~1 ~2 5", "4 3 ~2 ~1 5", "4 ~2 3 ~1 5", "~2 4 3 ~1 5", "4 3 ~2 5 ~1",
            "4 ~2 3 5 ~1", "~2 4 3 5 ~1", "4 ~2 5 3 ~1", "~2 4 5 3 ~1", "~2 5 4 3 ~1"};
        std::sort(expected.begin(), expected.end());
        for (size_t i = 0; i < std::max(got.size(), expected.size()); ++i) {
            std::string tag = "example-shuffle#" + std::to_string(i);
            put_value(lhs, tag, i < got.size() ? got[i] : "(none)");
            put_value(rhs, tag, i < expected.size() ? expected[i] : "(none)");
        }
    }
}

void check_eq14(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    WcCache wc(spec);
    auto zeros = [](int k) { return WeakComposition(std::vector<int>(k, 0)); };
    put_poly(lhs, "product", wc.get(zeros(r.p)) * wc.get(zeros(r.q)));
    SparsePoly sum(spec);
    for (int j = 0; j <= r.p; ++j) {
        BigInt coef = binomial(r.p, j) * binomial(r.p + r.q - j, r.p);
        if (j % 2 == 1) coef = -coef;
        sum += wc.get(zeros(r.p + r.q - j)).scaled(TCoeff(coef));
    }
    put_poly(rhs, "product", sum);
    for (int k : {r.p, r.q}) {
        put_poly(lhs, "constant p=" + std::to_string(k), wc.get(zeros(k)));
        put_poly(rhs, "constant p=" + std::to_string(k),
                 SparsePoly::constant(TCoeff(binomial(r.M + k - 1, k)), spec));
    }
}

void check_lemma1(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    BigInt factor = binomial(r.M + r.p - 1, r.p);
    for (const auto& lambda : partitions_of(r.n)) {
        std::string tag = "lambda=" + to_string(lambda);
        put_poly(lhs, tag, schur_p_poly(lambda, r.p, spec));
        put_poly(rhs, tag, schur_poly(lambda, spec).scaled(TCoeff(factor)));
    }
}

void check_prop2(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    WcCache wc(spec);
    for (const auto& lambda : partitions_of(r.n)) {
        std::string tag = "lambda=" + to_string(lambda);
        put_poly(lhs, tag, schur_p_poly(lambda, r.p, spec));
        SparsePoly sum(spec);
        for (const auto& t : standard_bitableaux(lambda, r.p))
            sum += wc.get(weak_composition_of(t));
        put_poly(rhs, tag, sum);
    }
}

void check_thm1(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    WcCache wc(spec);
    SparsePoly left(spec);
    for (const auto& t : standard_bitableaux(r.lambda, r.p)) {
        const SparsePoly& ft = wc.get(weak_composition_of(t));
        for (const auto& u : standard_bitableaux(r.mu, r.q)) {
            left += ft * wc.get(weak_composition_of(u));
        }
    }
    put_poly(lhs, "sum", left);
    put_poly(rhs, "sum", recombination_rhs(r.lambda, r.mu, r.p, r.q, spec, wc));
}

void check_cor1(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    WcCache wc(spec);
    SparsePoly right = recombination_rhs(r.lambda, r.mu, r.p, r.q, spec, wc);
    for (const auto& t : standard_tableaux(r.lambda)) {
        KnuthClass ct = knuth_class(t, r.lambda.weight());
        std::set<ColouredPermutation> left_set;
        for (const auto& a : ct.members) {
            for (const auto& g : shuffle(epsilon(r.p), as_coloured(a))) left_set.insert(g);
        }
        for (const auto& u : standard_tableaux(r.mu)) {
            KnuthClass cu = knuth_class(u, r.mu.weight());
            std::set<ColouredPermutation> right_set;
            for (const auto& b : cu.members) {
                for (const auto& g : shuffle(epsilon(r.q), as_coloured(b))) right_set.insert(g);
            }
            SparsePoly sum(spec);
            for (const auto& ga : left_set) {
                for (const auto& gb : right_set) {
                    for (const auto& g : shuffle(ga, gb)) sum += gamma_poly(g, spec);
                }
            }
            std::string tag = "T=" + to_string(t) + ",U=" + to_string(u);
            put_poly(lhs, tag, sum);
            put_poly(rhs, tag, right);
        }
    }
}

void check_lemma2(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_b(r.M);
    for (const auto& lambda : domino_tileable_partitions(r.n)) {
        std::string tag = "lambda=" + to_string(lambda);
        put_poly(lhs, tag, domino_poly(lambda, spec));
        SparsePoly sum(spec);
        for (const auto& t : standard_domino_tableaux(lambda)) {
            sum += fundamental_b(descent_set(t), r.n, spec)
                       .scaled(TCoeff::t_power(t.two_spin()));
        }
        put_poly(rhs, tag, sum);
    }
}

void check_fig1(const Resolved&, Entries& lhs, Entries& rhs) {
    DominoTableau t1 = parse_domino_tableau(
        "5,5,4,1,1", "(1,1,V,1)(1,2,V,2)(1,3,V,3)(3,1,H,4)(1,4,H,5)(2,4,H,6)(4,1,V,7)(3,3,H,8)");
    DominoTableau t2 = parse_domino_tableau(
        "5,5,4,1,1", "(1,1,V,1)(1,2,V,2)(1,3,H,3)(2,3,H,4)(1,5,V,5)(3,1,H,6)(4,1,V,7)(3,3,H,8)");
    DominoTableau t3 = parse_domino_tableau(
        "5,5,4,3,1",
        "(1,1,H,0)(1,3,H,0)(2,1,V,2)(2,2,H,2)(4,1,V,5)(3,2,H,5)(2,4,V,5)(1,5,V,5)(4,2,H,7)");

    auto sdt = standard_domino_tableaux(Partition({5, 5, 4, 1, 1}));
    auto member = [&sdt](const DominoTableau& t) {
        return std::find(sdt.begin(), sdt.end(), t) != sdt.end();
    };
    put_value(lhs, "T1 member", member(t1) ? "yes" : "no");
    put_value(rhs, "T1 member", "yes");
    put_value(lhs, "T2 member", member(t2) ? "yes" : "no");
    put_value(rhs, "T2 member", "yes");
    put_value(lhs, "T1 descents", to_string(descent_set(t1)));
    put_value(rhs, "T1 descents", "{0,3,5,6}");
    put_value(lhs, "T2 descents", to_string(descent_set(t2)));
    put_value(rhs, "T2 descents", "{0,3,5,6}");
    put_value(lhs, "T1 spin (doubled)", std::to_string(t1.two_spin()));
    put_value(rhs, "T1 spin (doubled)", "4");
    put_value(lhs, "T2 spin (doubled)", std::to_string(t2.two_spin()));
    put_value(rhs, "T2 spin (doubled)", "4");

    auto ssdt = semistandard_domino_tableaux(Partition({5, 5, 4, 3, 1}), 7);
    put_value(lhs, "T3 member",
              std::find(ssdt.begin(), ssdt.end(), t3) != ssdt.end() ? "yes" : "no");
    put_value(rhs, "T3 member", "yes");
    std::ostringstream w;
    for (size_t i = 0; i < t3.weight().size(); ++i) w << (i ? "," : "") << t3.weight()[i];
    put_value(lhs, "T3 weight", w.str());
    put_value(rhs, "T3 weight", "2,0,2,0,0,4,0,1");
    put_value(lhs, "T3 spin (doubled)", std::to_string(t3.two_spin()));
    put_value(rhs, "T3 spin (doubled)", "4");
}

void check_qfactor(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_b(r.M);
    for (const auto& lambda : domino_tileable_partitions(r.n)) {
        std::string tag = "lambda=" + to_string(lambda);
        put_poly(lhs, tag, domino_poly(lambda, spec).at_t1());
        BiShape qpair = two_quotient(lambda);
        put_poly(rhs, tag, schur_poly(qpair.minus, spec, Block::X, 1) *
                               schur_poly(qpair.plus, spec, Block::X, 0));
    }
}

void check_eq18(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_b(r.M);
    std::map<Partition, SparsePoly> g1;  // t = 1 domino functions by shape
    auto dom1 = [&](const Partition& shape) -> const SparsePoly& {
        auto it = g1.find(shape);
        if (it == g1.end()) it = g1.emplace(shape, domino_poly(shape, spec).at_t1()).first;
        return it->second;
    };
    auto nus = domino_tileable_partitions(r.n + r.m);
    std::map<Partition, BiShape> quotients;
    for (const auto& nu : nus) quotients.emplace(nu, two_quotient(nu));
    for (const auto& lambda : domino_tileable_partitions(r.n)) {
        BiShape ql = two_quotient(lambda);
        for (const auto& mu : domino_tileable_partitions(r.m)) {
            BiShape qm = two_quotient(mu);
            std::string tag = "lambda=" + to_string(lambda) + ",mu=" + to_string(mu);
            put_poly(lhs, tag, dom1(lambda) * dom1(mu));
            SparsePoly sum(spec);
            for (const auto& nu : nus) {
                const BiShape& qn = quotients.at(nu);
                BigInt c = lr_coefficient(ql.minus, qm.minus, qn.minus) *
                           lr_coefficient(ql.plus, qm.plus, qn.plus);
                if (!c.is_zero()) sum += dom1(nu).scaled(TCoeff(c));
            }
            put_poly(rhs, tag, sum);
        }
    }
}

void check_thm2(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_b(r.M);
    const int total = r.n + r.m;
    auto nus = domino_tileable_partitions(total);
    // descent-set counts per shape
    std::map<Partition, std::map<std::vector<int>, BigInt>> delta;
    for (const auto& nu : nus) {
        for (const auto& t : standard_domino_tableaux(nu))
            delta[nu][descent_set(t).elems] += BigInt(1);
    }
    for (const auto& lambda : domino_tileable_partitions(r.n)) {
        BiShape ql = two_quotient(lambda);
        for (const auto& mu : domino_tileable_partitions(r.m)) {
            BiShape qm = two_quotient(mu);
            SparsePoly product =
                domino_poly(lambda, spec).at_t1() * domino_poly(mu, spec).at_t1();
            FundamentalExpansionB expansion = fundamental_b_expansion(product, total);
            for (const auto& des : all_descent_sets_b(total)) {
                std::string tag = "lambda=" + to_string(lambda) + ",mu=" + to_string(mu) +
                                  ",I=" + to_string(des);
                auto it = expansion.find(des);
                put_value(lhs, tag, (it == expansion.end() ? TCoeff() : it->second).to_string());
                BigInt count;
                for (const auto& nu : nus) {
                    BiShape qn = two_quotient(nu);
                    auto dit = delta[nu].find(des.elems);
                    if (dit == delta[nu].end()) continue;
                    count += lr_coefficient(ql.minus, qm.minus, qn.minus) *
                             lr_coefficient(ql.plus, qm.plus, qn.plus) * dit->second;
                }
                put_value(rhs, tag, TCoeff(count).to_string());
            }
        }
    }
}

void check_prop3(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_b_xy(r.M, r.My);
    std::map<std::vector<int>, SparsePoly> fx, fy;
    auto chow = [&](const DescentSetB& d, Block block) -> const SparsePoly& {
        auto& cache = block == Block::X ? fx : fy;
        auto it = cache.find(d.elems);
        if (it == cache.end())
            it = cache.emplace(d.elems, fundamental_b(d, r.n, spec, block)).first;
        return it->second;
    };
    SparsePoly left(spec);
    for (const auto& pi : all_signed_permutations(r.n)) {
        SparsePoly prod = chow(descent_set(pi), Block::X) * chow(descent_set(pi.inverse()), Block::Y);
        left += prod.scaled(TCoeff::t_power(2 * total_colour(pi)));
    }
    SparsePoly right(spec);
    for (const auto& lambda : domino_tileable_partitions(r.n)) {
        auto sdt = standard_domino_tableaux(lambda);
        for (const auto& t : sdt) {
            for (const auto& u : sdt) {
                SparsePoly prod = chow(descent_set(t), Block::X) * chow(descent_set(u), Block::Y);
                right += prod.scaled(TCoeff::t_power(t.two_spin() + u.two_spin()));
            }
        }
    }
    put_poly(lhs, "sum", left);
    put_poly(rhs, "sum", right);
}

void check_gamma_ex(const Resolved& r, Entries& lhs, Entries& rhs) {
    AlphabetSpec spec = AlphabetSpec::type_a(r.M);
    put_poly(lhs, "gamma", gamma_poly(parse_coloured_permutation("3 ~2 ~1"), spec));
    put_poly(rhs, "gamma",
             fundamental_wc(WeakComposition({1, 0, 0}), spec) -
                 fundamental_wc(WeakComposition({1, 0}), spec));
}

// --- dispatch -----------------------------------------------------------------

Resolved resolve(const std::string& id, const IdentityParams& user, const IdentityParams& def) {
    IdentityParams merged = def;
    if (user.n) merged.n = user.n;
    if (user.m) merged.m = user.m;
    if (user.alphabet) merged.alphabet = user.alphabet;
    if (user.alphabet_y) merged.alphabet_y = user.alphabet_y;
    if (user.p) merged.p = user.p;
    if (user.q) merged.q = user.q;
    if (user.lambda) merged.lambda = user.lambda;
    if (user.mu) merged.mu = user.mu;

    // when the user overrides the x alphabet only, the y alphabet follows it
    std::optional<int> my = user.alphabet_y ? user.alphabet_y
                            : user.alphabet ? user.alphabet
                            : merged.alphabet_y ? merged.alphabet_y
                                                : merged.alphabet;

    Resolved r;
    if (id == "eq2") {
        r.n = need(merged.n, "n");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "eq3" || id == "eq4" || id == "eq5") {
        r.n = need(merged.n, "n");
        r.M = need(merged.alphabet, "alphabet", 1);
        r.My = need(my, "alphabet-y", 1);
    } else if (id == "eq6") {
        r.n = need(merged.n, "n");
        r.m = need(merged.m, "m");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "eq7") {
        r.lambda = need(merged.lambda, "lambda");
        r.mu = need(merged.mu, "mu");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "eq11") {
        r.lambda = need(merged.lambda, "lambda");
        r.mu = need(merged.mu, "mu");
    } else if (id == "eq13") {
        r.n = need(merged.n, "n");
        r.p = need(merged.p, "p");
        r.m = need(merged.m, "m");
        r.q = need(merged.q, "q");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "eq14") {
        r.p = need(merged.p, "p");
        r.q = need(merged.q, "q");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "lemma1" || id == "prop2") {
        r.n = need(merged.n, "n");
        r.p = need(merged.p, "p");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "thm1" || id == "cor1") {
        r.lambda = need(merged.lambda, "lambda");
        r.mu = need(merged.mu, "mu");
        r.p = need(merged.p, "p");
        r.q = need(merged.q, "q");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "lemma2" || id == "qfactor") {
        r.n = need(merged.n, "n");
        r.M = need(merged.alphabet, "alphabet", 1);
    } else if (id == "fig1") {
        // fixed references, no parameters
    } else if (id == "eq18" || id == "thm2") {
        r.n = need(merged.n, "n");
        r.m = need(merged.m, "m");
        r.M = need(merged.alphabet, "alphabet", 1);
        if (id == "thm2" && r.M < r.n + r.m)
            throw InvalidParams("alphabet must reach the combined degree for basis extraction");
    } else if (id == "prop3") {
        r.n = need(merged.n, "n");
        r.M = need(merged.alphabet, "alphabet", 1);
        r.My = need(my, "alphabet-y", 1);
    } else if (id == "gamma-ex") {
        r.M = need(merged.alphabet, "alphabet", 1);
    } else {
        throw InvalidParams("unknown identity id: " + id);
    }
    return r;
}

IdentityParams echo_params(const std::string& id, const Resolved& r) {
    IdentityParams out;
    auto set_n = [&] { out.n = r.n; };
    auto set_m = [&] { out.m = r.m; };
    auto set_M = [&] { out.alphabet = r.M; };
    if (id == "eq2" || id == "lemma2" || id == "qfactor") {
        set_n();
        set_M();
    } else if (id == "eq3" || id == "eq4" || id == "eq5" || id == "prop3") {
        set_n();
        set_M();
        out.alphabet_y = r.My;
    } else if (id == "eq6") {
        set_n();
        set_m();
        set_M();
    } else if (id == "eq7") {
        out.lambda = r.lambda;
        out.mu = r.mu;
        set_M();
    } else if (id == "eq11") {
        out.lambda = r.lambda;
        out.mu = r.mu;
    } else if (id == "eq13") {
        set_n();
        set_m();
        out.p = r.p;
        out.q = r.q;
        set_M();
    } else if (id == "eq14") {
        out.p = r.p;
        out.q = r.q;
        set_M();
    } else if (id == "lemma1" || id == "prop2") {
        set_n();
        out.p = r.p;
        set_M();
    } else if (id == "thm1" || id == "cor1") {
        out.lambda = r.lambda;
        out.mu = r.mu;
        out.p = r.p;
        out.q = r.q;
        set_M();
    } else if (id == "eq18" || id == "thm2") {
        set_n();
        set_m();
        set_M();
    } else if (id == "gamma-ex") {
        set_M();
    }
    return out;
}

} // namespace

const std::vector<RegistryEntry>& registry() { return registry_table(); }

IdentityReport verify(const IdentityCase& c) {
    const RegistryEntry* entry = nullptr;
    for (const auto& e : registry_table()) {
        if (e.id == c.id) {
            entry = &e;
            break;
        }
    }
    if (!entry) throw InvalidParams("unknown identity id: " + c.id);
    Resolved r = resolve(c.id, c.params, entry->defaults);

    auto start = std::chrono::steady_clock::now();
    Entries lhs, rhs;
    if (c.id == "eq2") check_eq2(r, lhs, rhs);
    else if (c.id == "eq3") check_eq3(r, lhs, rhs);
    else if (c.id == "eq4") check_eq4(r, lhs, rhs);
    else if (c.id == "eq5") check_eq5(r, lhs, rhs);
    else if (c.id == "eq6") check_eq6(r, lhs, rhs);
    else if (c.id == "eq7") check_eq7(r, lhs, rhs);
    else if (c.id == "eq11") check_eq11(r, lhs, rhs);
    else if (c.id == "eq13") check_eq13(r, lhs, rhs);
    else if (c.id == "eq14") check_eq14(r, lhs, rhs);
    else if (c.id == "lemma1") check_lemma1(r, lhs, rhs);
    else if (c.id == "prop2") check_prop2(r, lhs, rhs);
    else if (c.id == "thm1") check_thm1(r, lhs, rhs);
    else if (c.id == "cor1") check_cor1(r, lhs, rhs);
    else if (c.id == "lemma2") check_lemma2(r, lhs, rhs);
    else if (c.id == "fig1") check_fig1(r, lhs, rhs);
    else if (c.id == "qfactor") check_qfactor(r, lhs, rhs);
    else if (c.id == "eq18") check_eq18(r, lhs, rhs);
    else if (c.id == "thm2") check_thm2(r, lhs, rhs);
    else if (c.id == "prop3") check_prop3(r, lhs, rhs);
    else if (c.id == "gamma-ex") check_gamma_ex(r, lhs, rhs);
    auto elapsed = std::chrono::steady_clock::now() - start;

    IdentityReport report = compare_sides(c.id, echo_params(c.id, r), lhs, rhs);
    report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return report;
}

std::vector<IdentityReport> verify_all(int jobs) {
    const auto& table = registry_table();
    std::vector<IdentityReport> out(table.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < table.size(); ++i) out[i] = verify({table[i].id, {}});
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= table.size()) return;
            out[i] = verify({table[i].id, {}});
        }
    };
    std::vector<std::future<void>> pool;
    for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

std::string report_to_json(const IdentityReport& r) {
    nlohmann::json j;
    j["identity"] = r.id;
    nlohmann::json params = nlohmann::json::object();
    if (r.params.n) params["n"] = *r.params.n;
    if (r.params.m) params["m"] = *r.params.m;
    if (r.params.alphabet) params["alphabet"] = *r.params.alphabet;
    if (r.params.alphabet_y) params["alphabet_y"] = *r.params.alphabet_y;
    if (r.params.p) params["p"] = *r.params.p;
    if (r.params.q) params["q"] = *r.params.q;
    if (r.params.lambda) params["lambda"] = to_string(*r.params.lambda);
    if (r.params.mu) params["mu"] = to_string(*r.params.mu);
    j["params"] = params;
    j["status"] = r.status;
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    j["lhs_digest"] = r.lhs_digest;
    j["rhs_digest"] = r.rhs_digest;
    j["mismatches"] = nlohmann::json::array();
    for (const auto& m : r.mismatches) {
        j["mismatches"].push_back({{"monomial", m.key}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    }
    j["ms"] = r.ms;
    return j.dump(2);
}

IdentityReport compare_polynomials(const std::string& label, const SparsePoly& lhs,
                                   const SparsePoly& rhs) {
    Entries le, re;
    put_poly(le, label, lhs);
    put_poly(re, label, rhs);
    return compare_sides("compare", {}, le, re);
}

std::string report_to_text(const IdentityReport& r) {
    std::ostringstream os;
    os << r.id << ": " << r.status;
    std::string params = r.params.to_string();
    if (!params.empty()) os << " [" << params << "]";
    os << " (lhs_terms=" << r.lhs_terms << ", rhs_terms=" << r.rhs_terms << ", ms=" << r.ms << ")";
    for (const auto& m : r.mismatches) {
        os << "\n  mismatch at " << m.key << ": lhs=" << m.lhs << " rhs=" << m.rhs;
    }
    return os.str();
}

} // namespace qsymb
