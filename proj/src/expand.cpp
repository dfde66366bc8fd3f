#include "qsymb/expand.hpp"

#include "qsymb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsymb {

// --- RSK ---------------------------------------------------------------------

RskPair rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int step = 0; step < w.size(); ++step) {
        int x = w.word()[step];
        size_t r = 0;
        for (;; ++r) {
            if (r == p.size()) {
                p.emplace_back();
                q.emplace_back();
            }
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q[r].push_back(step + 1);
                break;
            }
            std::swap(*it, x);
        }
    }
    std::vector<int> parts;
    for (const auto& row : p) parts.push_back(static_cast<int>(row.size()));
    Partition shape(parts);
    return {YoungTableau(shape, std::move(p)), YoungTableau(shape, std::move(q))};
}

KnuthClass knuth_class(const YoungTableau& t, int n) {
    if (!t.is_standard()) throw MalformedInput("knuth class needs a standard tableau");
    if (t.cell_count() != n) throw MalformedInput("tableau size does not match n");
    KnuthClass out{t, {}};
    for (auto& w : all_permutations(n)) {
        if (rsk(w).p == t) out.members.push_back(std::move(w));
    }
    return out;
}

// --- Schur expansion -----------------------------------------------------------

namespace {

Monomial partition_monomial(const Partition& lambda, const AlphabetSpec& spec) {
    Monomial mon(spec.slots(), 0);
    for (int i = 0; i < lambda.length(); ++i) mon[i + 1] = lambda.parts()[i];
    return mon;
}

BigInt integer_coefficient(const TCoeff& c, const char* what) {
    for (const auto& [k, v] : c.parts()) {
        if (k != 0) throw NotSymmetric(std::string(what) + ": coefficient carries t");
    }
    return c.at_t1();
}

} // namespace

SchurExpansion schur_expansion(const SparsePoly& p, int degree) {
    const AlphabetSpec& spec = p.spec();
    if (spec.has_y()) throw MalformedInput("schur expansion works over a single alphabet");
    if (spec.x_max < degree)
        throw MalformedInput("schur expansion needs alphabet size at least the degree");
    int d = 0;
    if (!p.is_homogeneous(&d) || (!p.is_zero() && d != degree))
        throw NotSymmetric("polynomial is not homogeneous of the stated degree");
    SparsePoly residual = p;
    SchurExpansion out;
    // lexicographically decreasing = a linear extension of dominance, so the
    // leading monomial of each candidate is untouched by later candidates
    auto parts_list = partitions_of(degree);
    std::sort(parts_list.begin(), parts_list.end(),
              [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
    for (const auto& lambda : parts_list) {
        if (lambda.length() > spec.x_max) continue;
        TCoeff c = residual.coefficient_of(partition_monomial(lambda, spec));
        if (c.is_zero()) continue;
        BigInt ci = integer_coefficient(c, "schur expansion");
        residual -= schur_poly(lambda, spec).scaled(TCoeff(ci));
        out[lambda] = ci;
    }
    if (!residual.is_zero()) throw NotSymmetric("residual after all partitions is nonzero");
    return out;
}

SchurExpansion lr_expansion(const Partition& lambda, const Partition& mu) {
    const int n = lambda.weight() + mu.weight();
    AlphabetSpec spec = AlphabetSpec::type_a(std::max(n, 1));
    SparsePoly product = schur_poly(lambda, spec) * schur_poly(mu, spec);
    return schur_expansion(product, n);
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    auto exp = lr_expansion(lambda, mu);
    auto it = exp.find(nu);
    return it == exp.end() ? BigInt(0) : it->second;
}

// --- fundamental expansions ------------------------------------------------------

namespace {

// composition (c_1..c_k) of n associated with a subset of {1..n-1}
std::vector<int> subset_composition(const std::vector<int>& elems, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int e : elems) {
        parts.push_back(e - prev);
        prev = e;
    }
    if (n - prev > 0) parts.push_back(n - prev);
    return parts;
}

} // namespace

FundamentalExpansionA fundamental_a_expansion(const SparsePoly& p, int degree) {
    const AlphabetSpec& spec = p.spec();
    if (spec.has_y()) throw MalformedInput("expansion works over a single alphabet");
    if (spec.x_max < degree)
        throw MalformedInput("expansion needs alphabet size at least the degree");
    auto subsets = all_descent_sets_a(degree);
    // packed-monomial coefficient per subset
    std::map<std::vector<int>, TCoeff> packed;
    for (const auto& s : subsets) {
        Monomial mon(spec.slots(), 0);
        auto parts = subset_composition(s.elems, degree);
        for (size_t i = 0; i < parts.size(); ++i) mon[i + 1] = parts[i];
        packed[s.elems] = p.coefficient_of(mon);
    }
    FundamentalExpansionA out;
    for (const auto& s : subsets) {
        // Moebius inversion over the Boolean lattice of subsets of s
        TCoeff a;
        std::vector<std::vector<int>> below{{}};
        for (int v : s.elems) {
            size_t sz = below.size();
            for (size_t i = 0; i < sz; ++i) {
                auto sub = below[i];
                sub.push_back(v);
                below.push_back(std::move(sub));
            }
        }
        for (const auto& sub : below) {
            TCoeff term = packed[sub];
            if ((s.elems.size() - sub.size()) % 2 == 1) term = -term;
            a += term;
        }
        if (!a.is_zero()) out[s] = a;
    }
    SparsePoly rebuilt(spec);
    for (const auto& [s, c] : out) rebuilt += fundamental_a(s, degree, spec).scaled(c);
    if (!(rebuilt == p)) throw NotQuasisymmetric("reconstruction from the expansion failed");
    return out;
}

FundamentalExpansionB fundamental_b_expansion(const SparsePoly& p, int degree) {
    const AlphabetSpec& spec = p.spec();
    if (spec.has_y()) throw MalformedInput("expansion works over a single alphabet");
    if (!spec.with_x0) throw MalformedInput("expansion needs the index-0 variable");
    if (spec.x_max < degree)
        throw MalformedInput("expansion needs alphabet size at least the degree");
    auto subsets = all_descent_sets_b(degree);
    std::map<std::vector<int>, TCoeff> packed;
    for (const auto& s : subsets) {
        // value of slot j in the minimal chain: descents of the subset seen so far
        Monomial mon(spec.slots(), 0);
        for (int slot = 1; slot <= degree; ++slot) {
            int v = static_cast<int>(std::count_if(s.elems.begin(), s.elems.end(),
                                                   [slot](int b) { return b < slot; }));
            mon[v] += 1;
        }
        packed[s.elems] = p.coefficient_of(mon);
    }
    FundamentalExpansionB out;
    for (const auto& s : subsets) {
        TCoeff a;
        std::vector<std::vector<int>> below{{}};
        for (int v : s.elems) {
            size_t sz = below.size();
            for (size_t i = 0; i < sz; ++i) {
                auto sub = below[i];
                sub.push_back(v);
                below.push_back(std::move(sub));
            }
        }
        for (const auto& sub : below) {
            TCoeff term = packed[sub];
            if ((s.elems.size() - sub.size()) % 2 == 1) term = -term;
            a += term;
        }
        if (!a.is_zero()) out[s] = a;
    }
    SparsePoly rebuilt(spec);
    for (const auto& [s, c] : out) rebuilt += fundamental_b(s, degree, spec).scaled(c);
    if (!(rebuilt == p)) throw NotQuasisymmetricB("reconstruction from the expansion failed");
    return out;
}

// --- domino-basis expansion -------------------------------------------------------

namespace {

struct TRange {
    int lo = 0;
    int hi = -1;  // empty when hi < lo
};

TRange t_range(const SparsePoly& p) {
    TRange r{0, -1};
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [k, v] : c.parts()) {
            if (first) {
                r.lo = r.hi = k;
                first = false;
            } else {
                r.lo = std::min(r.lo, k);
                r.hi = std::max(r.hi, k);
            }
        }
    }
    return r;
}

/// Row-echelon solve of A x = b over exact rationals. Inconsistent rows are
/// skipped; free unknowns are zero. Returns the partial solution and whether
/// every row was satisfied.
bool solve_rational(std::vector<std::vector<BigRational>>& rows, size_t unknowns,
                    std::vector<BigRational>& solution) {
    size_t pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (size_t col = 0; col < unknowns && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        BigRational inv = BigRational(BigInt(1)) / rows[pivot_row][col];
        for (auto& v : rows[pivot_row]) v = v * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            BigRational f = rows[r][col];
            for (size_t c2 = col; c2 <= unknowns; ++c2)
                rows[r][c2] = rows[r][c2] - f * rows[pivot_row][c2];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++pivot_row;
    }
    solution.assign(unknowns, BigRational());
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        solution[pivot_col_of_row[r]] = rows[r][unknowns];
    bool consistent = true;
    for (size_t r = pivot_col_of_row.size(); r < rows.size(); ++r) {
        if (!rows[r][unknowns].is_zero()) consistent = false;
    }
    return consistent;
}

} // namespace

DominoExpansion domino_basis_expansion(const SparsePoly& p, int degree, QMode mode) {
    const AlphabetSpec& spec = p.spec();
    if (spec.has_y() || !spec.with_x0)
        throw MalformedInput("domino-basis expansion works over a single x0-anchored alphabet");
    DominoExpansion out;

    std::vector<Partition> shapes = domino_tileable_partitions(degree);
    std::vector<SparsePoly> basis;
    basis.reserve(shapes.size());
    for (const auto& nu : shapes) {
        SparsePoly g = domino_poly(nu, spec);
        basis.push_back(mode == QMode::One ? g.at_t1() : std::move(g));
    }
    SparsePoly target = mode == QMode::One ? p.at_t1() : p;

    // At collapsed spin the family spans but is not independent (for
    // instance the shapes (2,2), (3,1) and (2,1,1) are related), so prefer
    // the sparsest answer: a single shape, scaled.
    for (size_t s = 0; s < shapes.size(); ++s) {
        if (basis[s].is_zero() || target.is_zero()) break;
        const auto& [mon, lead] = *basis[s].terms().begin();
        TCoeff have = target.coefficient_of(mon);
        if (have.is_zero() || lead.parts().size() != 1) continue;
        const auto& [lk, lv] = *lead.parts().begin();
        TCoeff ratio;
        bool divides = true;
        for (const auto& [k, v] : have.parts()) {
            auto dm = divmod(v, lv);
            if (!dm.rem.is_zero()) {
                divides = false;
                break;
            }
            ratio += TCoeff::t_power(k - lk, dm.quot);
        }
        if (!divides || ratio.is_zero()) continue;
        if (basis[s].scaled(ratio) == target) {
            out.expandable = true;
            out.coefficients[shapes[s]] = ratio;
            return out;
        }
    }

    // unknowns: one t-shift per shape (a single shift at q = 1)
    struct Unknown {
        size_t shape;
        int shift;
    };
    std::vector<Unknown> unknowns;
    TRange pr = t_range(target);
    for (size_t s = 0; s < shapes.size(); ++s) {
        if (mode == QMode::One) {
            unknowns.push_back({s, 0});
            continue;
        }
        TRange gr = t_range(basis[s]);
        if (gr.hi < gr.lo) continue;  // zero basis element cannot occur
        int lo = (pr.hi < pr.lo ? 0 : pr.lo) - gr.hi;
        int hi = (pr.hi < pr.lo ? 0 : pr.hi) - gr.lo;
        for (int k = lo; k <= hi; ++k) unknowns.push_back({s, k});
    }

    // equation keys: (monomial, t-exponent)
    std::map<std::pair<Monomial, int>, size_t> eq_index;
    auto touch = [&eq_index](const Monomial& m, int k) {
        eq_index.emplace(std::make_pair(m, k), eq_index.size());
    };
    for (const auto& [m, c] : target.terms()) {
        for (const auto& [k, v] : c.parts()) touch(m, k);
    }
    for (const auto& u : unknowns) {
        for (const auto& [m, c] : basis[u.shape].terms()) {
            for (const auto& [k, v] : c.parts()) touch(m, k + u.shift);
        }
    }

    std::vector<std::vector<BigRational>> rows(
        eq_index.size(), std::vector<BigRational>(unknowns.size() + 1));
    for (size_t ui = 0; ui < unknowns.size(); ++ui) {
        const auto& u = unknowns[ui];
        for (const auto& [m, c] : basis[u.shape].terms()) {
            for (const auto& [k, v] : c.parts())
                rows[eq_index.at({m, k + u.shift})][ui] = BigRational(v);
        }
    }
    for (const auto& [m, c] : target.terms()) {
        for (const auto& [k, v] : c.parts()) rows[eq_index.at({m, k})].back() = BigRational(v);
    }

    std::vector<BigRational> solution;
    bool consistent = solve_rational(rows, unknowns.size(), solution);

    bool integral = true;
    std::map<Partition, TCoeff> coeffs;
    for (size_t ui = 0; ui < unknowns.size(); ++ui) {
        if (solution[ui].is_zero()) continue;
        if (!solution[ui].is_integer()) {
            integral = false;
            continue;
        }
        TCoeff& c = coeffs[shapes[unknowns[ui].shape]];
        c += TCoeff::t_power(unknowns[ui].shift, solution[ui].num());
    }

    if (consistent && integral) {
        // exact reconstruction check in integer arithmetic
        SparsePoly rebuilt(spec);
        for (const auto& [nu, c] : coeffs) {
            size_t si = std::find(shapes.begin(), shapes.end(), nu) - shapes.begin();
            rebuilt += basis[si].scaled(c);
        }
        if (rebuilt == target) {
            out.expandable = true;
            out.coefficients = std::move(coeffs);
            return out;
        }
        consistent = false;
    }

    // report where the best partial combination misses the input
    for (const auto& [key, idx] : eq_index) {
        BigRational lhs;
        for (size_t ui = 0; ui < unknowns.size(); ++ui) {
            const auto& u = unknowns[ui];
            TCoeff c = basis[u.shape].coefficient_of(key.first);
            auto it = c.parts().find(key.second - u.shift);
            if (it != c.parts().end()) lhs = lhs + solution[ui] * BigRational(it->second);
        }
        TCoeff rc = target.coefficient_of(key.first);
        auto rit = rc.parts().find(key.second);
        BigRational rhs(rit == rc.parts().end() ? BigInt(0) : rit->second);
        BigRational gap = rhs - lhs;
        if (!gap.is_zero() && out.residual.size() < 10) {
            std::ostringstream os;
            os << "t^" << key.second << " " << monomial_text(key.first, spec);
            out.residual.emplace_back(os.str(), gap.to_string());
        }
    }
    if (!integral && out.residual.empty())
        out.residual.emplace_back("(coefficients)", "solution is not integral");
    return out;
}

} // namespace qsymb
