#include "qsymb/qpoly.hpp"

#include "qsymb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsymb {

// --- TCoeff -----------------------------------------------------------------

TCoeff::TCoeff(BigInt v) {
    if (!v.is_zero()) c_[0] = std::move(v);
}

TCoeff TCoeff::t_power(int k, BigInt v) {
    TCoeff out;
    if (!v.is_zero()) out.c_[k] = std::move(v);
    return out;
}

void TCoeff::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero())
            it = c_.erase(it);
        else
            ++it;
    }
}

TCoeff& TCoeff::operator+=(const TCoeff& o) {
    for (const auto& [k, v] : o.c_) c_[k] += v;
    prune();
    return *this;
}

TCoeff& TCoeff::operator-=(const TCoeff& o) {
    for (const auto& [k, v] : o.c_) c_[k] -= v;
    prune();
    return *this;
}

TCoeff TCoeff::operator-() const {
    TCoeff out;
    for (const auto& [k, v] : c_) out.c_[k] = -v;
    return out;
}

TCoeff operator*(const TCoeff& a, const TCoeff& b) {
    TCoeff out;
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) out.c_[ka + kb] += va * vb;
    }
    out.prune();
    return out;
}

BigInt TCoeff::at_t1() const {
    BigInt out;
    for (const auto& [k, v] : c_) out += v;
    return out;
}

std::string TCoeff::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [k, v] = *it;
        BigInt mag = v.abs();
        if (out.empty()) {
            if (v.is_negative()) out += "-";
        } else {
            out += v.is_negative() ? " - " : " + ";
        }
        std::string ms = mag.to_string();
        if (k == 0) {
            out += ms;
        } else {
            if (ms != "1") out += ms;
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// --- SparsePoly --------------------------------------------------------------

SparsePoly::SparsePoly(AlphabetSpec spec) : spec_(spec) {
    if (spec_.x_max < 0) throw MalformedInput("alphabet truncation must be non-negative");
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

void SparsePoly::check_same_spec(const SparsePoly& o) const {
    if (!(spec_ == o.spec_)) throw AlphabetMismatch("polynomials over different alphabets");
}

void SparsePoly::add_term(const Monomial& mon, TCoeff coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<int>(mon.size()) != spec_.slots())
        throw MalformedInput("monomial has the wrong number of slots");
    auto it = terms_.find(mon);
    if (it == terms_.end()) {
        terms_.emplace(mon, std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TCoeff SparsePoly::coefficient_of(const Monomial& mon) const {
    auto it = terms_.find(mon);
    return it == terms_.end() ? TCoeff() : it->second;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_same_spec(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_same_spec(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same_spec(b);
    SparsePoly out(a.spec());
    Monomial mon(a.spec().slots());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (size_t i = 0; i < mon.size(); ++i) mon[i] = ma[i] + mb[i];
            out.add_term(mon, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::scaled(const TCoeff& c) const {
    SparsePoly out(spec_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    check_same_spec(o);
    return terms_ == o.terms_;
}

bool SparsePoly::is_homogeneous(int* degree) const {
    int deg = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return false;
        }
    }
    if (degree) *degree = deg;
    return true;
}

SparsePoly SparsePoly::at_t1() const {
    SparsePoly out(spec_);
    for (const auto& [m, c] : terms_) out.add_term(m, TCoeff(c.at_t1()));
    return out;
}

std::string monomial_text(const Monomial& mon, const AlphabetSpec& spec) {
    std::ostringstream os;
    for (int i = 0; i < spec.x_slots(); ++i) {
        if (i || spec.with_x0) os << (i ? " " : "") << "x" << i << "^" << mon[i];
    }
    for (int j = 0; j < spec.y_slots(); ++j) {
        os << " y" << j << "^" << mon[spec.x_slots() + j];
    }
    std::string s = os.str();
    if (!s.empty() && s.front() == ' ') s.erase(s.begin());
    return s;
}

std::string SparsePoly::canonical_text() const {
    std::ostringstream os;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        for (auto jt = c.parts().rbegin(); jt != c.parts().rend(); ++jt) {
            os << jt->second.to_string() << " t^" << jt->first << " " << monomial_text(m, spec_)
               << "\n";
        }
    }
    return os.str();
}

std::string SparsePoly::digest() const {
    uint64_t h = 1469598103934665603ull;
    for (char ch : canonical_text()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SparsePoly SparsePoly::constant(const TCoeff& c, AlphabetSpec spec) {
    SparsePoly out(spec);
    out.add_term(Monomial(spec.slots(), 0), c);
    return out;
}

SparsePoly SparsePoly::parse(const std::string& text, AlphabetSpec spec) {
    SparsePoly out(spec);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string coeff_tok, t_tok;
        if (!(is >> coeff_tok >> t_tok)) throw MalformedInput("bad polynomial line: " + line);
        if (t_tok.rfind("t^", 0) != 0) throw MalformedInput("missing t-power in: " + line);
        int t_exp = std::stoi(t_tok.substr(2));
        Monomial mon(spec.slots(), 0);
        std::string var_tok;
        while (is >> var_tok) {
            size_t caret = var_tok.find('^');
            if (caret == std::string::npos || var_tok.size() < 3)
                throw MalformedInput("bad variable token: " + var_tok);
            char kind = var_tok[0];
            int index = std::stoi(var_tok.substr(1, caret - 1));
            int expo = std::stoi(var_tok.substr(caret + 1));
            if (index < 0 || expo < 0)
                throw MalformedInput("negative index or exponent in: " + var_tok);
            int slot;
            if (kind == 'x') {
                if (index > spec.x_max) throw MalformedInput("variable outside alphabet: " + var_tok);
                slot = index;
            } else if (kind == 'y') {
                if (index > spec.y_max) throw MalformedInput("variable outside alphabet: " + var_tok);
                slot = spec.x_slots() + index;
            } else {
                throw MalformedInput("bad variable token: " + var_tok);
            }
            mon[slot] += expo;
        }
        out.add_term(mon, TCoeff::t_power(t_exp, BigInt::from_string(coeff_tok)));
    }
    return out;
}

// --- chain machinery ---------------------------------------------------------

namespace {

int block_max(const AlphabetSpec& spec, Block block) {
    if (block == Block::Y && !spec.has_y())
        throw MalformedInput("alphabet has no second block");
    return block == Block::X ? spec.x_max : spec.y_max;
}

int block_offset(const AlphabetSpec& spec, Block block) {
    return block == Block::X ? 0 : spec.x_slots();
}

/// Sum over value chains v_1 <= ... <= v_L in [first_min..hi] with
/// v_i < v_{i+1} where strict_after[i-1] is set; slot i contributes
/// exponent[i-1] to variable v_i of the chosen block.
SparsePoly chain_sum(const std::vector<int>& exponent, const std::vector<bool>& strict_after,
                     int first_min, int hi, const AlphabetSpec& spec, Block block) {
    const int L = static_cast<int>(exponent.size());
    const int off = block_offset(spec, block);
    SparsePoly out(spec);
    Monomial mon(spec.slots(), 0);
    auto rec = [&](auto&& self, int slot, int min_v) -> void {
        if (slot == L) {
            out.add_term(mon, TCoeff(BigInt(1)));
            return;
        }
        for (int v = min_v; v <= hi; ++v) {
            mon[off + v] += exponent[slot];
            self(self, slot + 1, slot + 1 < L && strict_after[slot] ? v + 1 : v);
            mon[off + v] -= exponent[slot];
        }
    };
    rec(rec, 0, first_min);
    return out;
}

Monomial content_of(const YoungTableau& t, const AlphabetSpec& spec, Block block) {
    Monomial mon(spec.slots(), 0);
    const int off = block_offset(spec, block);
    for (const auto& row : t.rows()) {
        for (int v : row) mon[off + v] += 1;
    }
    return mon;
}

} // namespace

SparsePoly fundamental_a(const DescentSetA& des, int n, const AlphabetSpec& spec, Block block) {
    if (des.n != n) throw MalformedInput("descent set sized for a different degree");
    std::vector<int> expo(n, 1);
    std::vector<bool> strict(n > 0 ? n - 1 : 0, false);
    for (int i : des.elems) {
        if (i >= 1 && i < n) strict[i - 1] = true;
    }
    return chain_sum(expo, strict, 1, block_max(spec, block), spec, block);
}

SparsePoly fundamental_b(const DescentSetB& des, int n, const AlphabetSpec& spec, Block block) {
    if (des.n != n) throw MalformedInput("descent set sized for a different degree");
    if (block == Block::X ? !spec.with_x0 : !spec.with_y0)
        throw MalformedInput("this basis needs the index-0 variable");
    std::vector<int> expo(n, 1);
    std::vector<bool> strict(n > 0 ? n - 1 : 0, false);
    for (int i : des.elems) {
        if (i >= 1 && i < n) strict[i - 1] = true;
    }
    int first_min = des.contains(0) ? 1 : 0;
    return chain_sum(expo, strict, first_min, block_max(spec, block), spec, block);
}

SparsePoly fundamental_wc(const WeakComposition& alpha, const AlphabetSpec& spec, Block block) {
    std::vector<int> expo;
    std::vector<bool> strict;
    expo.reserve(alpha.total_weight());
    for (int e : alpha.entries()) {
        if (e == 0) {
            expo.push_back(0);
        } else {
            for (int k = 0; k < e; ++k) expo.push_back(1);
        }
    }
    const int L = static_cast<int>(expo.size());
    strict.assign(L > 0 ? L - 1 : 0, false);
    for (int d : alpha.descent_set()) {
        if (d >= 1 && d < L) strict[d - 1] = true;
    }
    return chain_sum(expo, strict, 1, block_max(spec, block), spec, block);
}

SparsePoly gamma_poly(const ColouredPermutation& pi, const AlphabetSpec& spec, Block block) {
    const auto& ls = pi.letters();
    const int L = pi.size();
    std::vector<int> expo(L);
    for (int i = 0; i < L; ++i) expo[i] = ls[i].overlined ? 0 : 1;
    std::vector<bool> strict(L > 0 ? L - 1 : 0, false);
    for (int i = 0; i + 1 < L; ++i) strict[i] = letter_less(ls[i + 1], ls[i]);
    return chain_sum(expo, strict, 1, block_max(spec, block), spec, block);
}

SparsePoly schur_poly(const Partition& shape, const AlphabetSpec& spec, Block block, int lowest) {
    if (lowest == 0 && (block == Block::X ? !spec.with_x0 : !spec.with_y0))
        throw MalformedInput("index-0 variable not part of this alphabet");
    SparsePoly out(spec);
    for (const auto& t : semistandard_tableaux(shape, lowest, block_max(spec, block))) {
        out.add_term(content_of(t, spec, block), TCoeff(BigInt(1)));
    }
    return out;
}

SparsePoly schur_p_poly(const Partition& shape, int p, const AlphabetSpec& spec, Block block) {
    SparsePoly out(spec);
    for (const auto& t : semistandard_bitableaux(shape, p, block_max(spec, block))) {
        out.add_term(content_of(t.plus, spec, block), TCoeff(BigInt(1)));
    }
    return out;
}

SparsePoly domino_poly(const Partition& shape, const AlphabetSpec& spec, Block block) {
    if (block == Block::X ? !spec.with_x0 : !spec.with_y0)
        throw MalformedInput("domino functions need the index-0 variable");
    const int off = block_offset(spec, block);
    SparsePoly out(spec);
    for (const auto& t : semistandard_domino_tableaux(shape, block_max(spec, block))) {
        Monomial mon(spec.slots(), 0);
        for (const auto& d : t.dominoes()) mon[off + d.label] += 1;
        out.add_term(mon, TCoeff::t_power(t.two_spin()));
    }
    return out;
}

SparsePoly fundamental_a_xy(const DescentSetA& des, int n, const AlphabetSpec& spec) {
    if (des.n != n) throw MalformedInput("descent set sized for a different degree");
    if (!spec.has_y()) throw MalformedInput("product-alphabet sum needs two alphabets");
    const int mx = spec.x_max, my = spec.y_max;
    const int pair_count = mx * my;
    SparsePoly out(spec);
    Monomial mon(spec.slots(), 0);
    // pair rank r = (i-1)*my + (j-1) for (x_i, y_j); rank order is lex order
    auto rec = [&](auto&& self, int slot, int min_rank) -> void {
        if (slot == n) {
            out.add_term(mon, TCoeff(BigInt(1)));
            return;
        }
        for (int r = min_rank; r < pair_count; ++r) {
            int xi = r / my + 1, yj = r % my + 1;
            mon[xi] += 1;
            mon[spec.x_slots() + yj] += 1;
            self(self, slot + 1, des.contains(slot + 1) ? r + 1 : r);
            mon[xi] -= 1;
            mon[spec.x_slots() + yj] -= 1;
        }
    };
    rec(rec, 0, 0);
    return out;
}

SparsePoly schur_xy(const Partition& shape, const AlphabetSpec& spec) {
    if (!spec.has_y()) throw MalformedInput("product-alphabet sum needs two alphabets");
    const int my = spec.y_max;
    SparsePoly out(spec);
    for (const auto& t : semistandard_tableaux(shape, 1, spec.x_max * my)) {
        Monomial mon(spec.slots(), 0);
        for (const auto& row : t.rows()) {
            for (int v : row) {
                int r = v - 1;
                mon[r / my + 1] += 1;
                mon[spec.x_slots() + r % my + 1] += 1;
            }
        }
        out.add_term(mon, TCoeff(BigInt(1)));
    }
    return out;
}

std::optional<Monomial> shift_property_violation(const SparsePoly& p) {
    if (p.spec().has_y()) throw MalformedInput("shift check applies to single alphabets");
    for (const auto& [m, c] : p.terms()) {
        Monomial packed(m.size(), 0);
        packed[0] = m[0];
        int next = 1;
        for (size_t i = 1; i < m.size(); ++i) {
            if (m[i] > 0) packed[next++] = m[i];
        }
        if (packed != m && !(p.coefficient_of(packed) == c)) return m;
    }
    return std::nullopt;
}

} // namespace qsymb
