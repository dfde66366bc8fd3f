#include "qsymb/combinat.hpp"

#include "qsymb/config.hpp"
#include "qsymb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsymb {

// --- Partition --------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw MalformedInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw MalformedInput("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

// --- WeakComposition ---------------------------------------------------------

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw MalformedInput("weak composition entries must be non-negative");
    }
}

int WeakComposition::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int WeakComposition::zero_length() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 0));
}

std::vector<int> WeakComposition::descent_set() const {
    std::vector<int> out;
    int pos = 0;
    for (int e : entries_) {
        if (e == 0) {
            ++pos;
        } else {
            pos += e;
            out.push_back(pos);
        }
    }
    return out;
}

// --- descent sets -------------------------------------------------------------

namespace {

std::vector<int> checked_elems(std::vector<int> elems, int lo, int hi, const char* what) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int e : elems) {
        if (e < lo || e > hi) throw MalformedInput(std::string(what) + ": element out of range");
    }
    return elems;
}

} // namespace

DescentSetA::DescentSetA(int n_, std::vector<int> elems_)
    : n(n_), elems(checked_elems(std::move(elems_), 1, n_ - 1, "descent set")) {}

bool DescentSetA::contains(int i) const {
    return std::binary_search(elems.begin(), elems.end(), i);
}

DescentSetB::DescentSetB(int n_, std::vector<int> elems_)
    : n(n_), elems(checked_elems(std::move(elems_), 0, n_ - 1, "signed descent set")) {}

bool DescentSetB::contains(int i) const {
    return std::binary_search(elems.begin(), elems.end(), i);
}

// --- permutations ---------------------------------------------------------

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
            throw MalformedInput("permutation word must use 1..n once each");
        seen[v - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& b) const {
    if (size() != b.size()) throw MalformedInput("composing permutations of different sizes");
    std::vector<int> out(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) out[i] = word_[b.word_[i] - 1];
    return Permutation(std::move(out));
}

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        int a = std::abs(v);
        if (a < 1 || a > static_cast<int>(word_.size()) || seen[a - 1])
            throw MalformedInput("signed permutation must use each absolute value 1..n once");
        seen[a - 1] = true;
    }
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) {
        int v = word_[i];
        if (v > 0)
            inv[v - 1] = static_cast<int>(i) + 1;
        else
            inv[-v - 1] = -(static_cast<int>(i) + 1);
    }
    return SignedPermutation(std::move(inv));
}

bool letter_less(const ColouredLetter& a, const ColouredLetter& b) {
    if (a.overlined != b.overlined) return a.overlined;  // overlined sorts low
    return a.value < b.value;
}

ColouredPermutation::ColouredPermutation(std::vector<ColouredLetter> letters)
    : letters_(std::move(letters)) {
    std::vector<bool> seen(letters_.size(), false);
    for (const auto& l : letters_) {
        if (l.value < 1 || l.value > static_cast<int>(letters_.size()) || seen[l.value - 1])
            throw MalformedInput("coloured permutation must use each value 1..l once");
        seen[l.value - 1] = true;
    }
}

// --- descent statistics -----------------------------------------------------

DescentSetA descent_set(const Permutation& p) {
    std::vector<int> elems;
    const auto& w = p.word();
    for (int i = 0; i + 1 < p.size(); ++i) {
        if (w[i] > w[i + 1]) elems.push_back(i + 1);
    }
    return {p.size(), std::move(elems)};
}

DescentSetB descent_set(const SignedPermutation& p) {
    std::vector<int> elems;
    const auto& w = p.word();
    if (!w.empty() && w[0] < 0) elems.push_back(0);
    for (int i = 0; i + 1 < p.size(); ++i) {
        if (w[i] > w[i + 1]) elems.push_back(i + 1);
    }
    return {p.size(), std::move(elems)};
}

int total_colour(const SignedPermutation& p) {
    return static_cast<int>(std::count_if(p.word().begin(), p.word().end(),
                                          [](int v) { return v < 0; }));
}

// --- shuffles --------------------------------------------------------------

namespace {

// All interleavings of two words, preserving internal order.
template <typename Letter>
void interleave(const std::vector<Letter>& a, const std::vector<Letter>& b,
                std::vector<Letter>& acc, size_t ia, size_t ib,
                std::vector<std::vector<Letter>>& out) {
    if (ia == a.size() && ib == b.size()) {
        out.push_back(acc);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        interleave(a, b, acc, ia + 1, ib, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        interleave(a, b, acc, ia, ib + 1, out);
        acc.pop_back();
    }
}

template <typename Letter>
std::vector<std::vector<Letter>> all_interleavings(const std::vector<Letter>& a,
                                                   const std::vector<Letter>& b) {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> acc;
    acc.reserve(a.size() + b.size());
    interleave(a, b, acc, 0, 0, out);
    return out;
}

} // namespace

std::vector<Permutation> shuffle(const Permutation& a, const Permutation& b) {
    std::vector<int> shifted = b.word();
    for (int& v : shifted) v += a.size();
    std::vector<Permutation> out;
    for (auto& w : all_interleavings(a.word(), shifted)) out.emplace_back(std::move(w));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPermutation> shuffle(const SignedPermutation& a, const SignedPermutation& b) {
    std::vector<int> shifted = b.word();
    for (int& v : shifted) v += v > 0 ? a.size() : -a.size();
    std::vector<SignedPermutation> out;
    for (auto& w : all_interleavings(a.word(), shifted)) out.emplace_back(std::move(w));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<SnpSignature> snp_signature(const ColouredPermutation& p) {
    SnpSignature sig;
    int last_overlined = 0;
    for (const auto& l : p.letters()) {
        if (l.overlined) {
            if (l.value <= last_overlined) return std::nullopt;
            last_overlined = l.value;
            ++sig.p;
        } else {
            ++sig.n;
        }
    }
    return sig;
}

namespace {

// The shuffle shifts only make sense when the overlined letters are exactly
// the values 1..p; otherwise the shifted words would collide.
bool canonical_snp(const ColouredPermutation& w, const SnpSignature& sig) {
    for (const auto& l : w.letters()) {
        if (l.overlined != (l.value <= sig.p)) return false;
    }
    return true;
}

} // namespace

std::vector<ColouredPermutation> shuffle(const ColouredPermutation& a, const ColouredPermutation& b) {
    auto sa = snp_signature(a);
    auto sb = snp_signature(b);
    if (!sa || !sb)
        throw MalformedInput("coloured shuffle operands must have sorted overlined letters");
    if (!canonical_snp(a, *sa) || !canonical_snp(b, *sb))
        throw MalformedInput("coloured shuffle operands must overline the smallest values");
    std::vector<ColouredLetter> wa = a.letters();
    for (auto& l : wa) {
        if (!l.overlined) l.value += sb->p;
    }
    std::vector<ColouredLetter> wb = b.letters();
    for (auto& l : wb) l.value += l.overlined ? sa->p : sa->p + sa->n;
    std::vector<ColouredPermutation> out;
    for (auto& w : all_interleavings(wa, wb)) out.emplace_back(std::move(w));
    std::sort(out.begin(), out.end());
    return out;
}

WeakComposition weak_composition_of(const ColouredPermutation& p) {
    if (!snp_signature(p))
        throw MalformedInput("composition undefined: overlined letters not sorted");
    std::vector<int> entries;
    int run = 0;
    int prev = 0;
    for (const auto& l : p.letters()) {
        if (l.overlined) {
            if (run > 0) entries.push_back(run);
            run = 0;
            entries.push_back(0);
        } else {
            if (run > 0 && l.value < prev) {
                entries.push_back(run);
                run = 0;
            }
            ++run;
            prev = l.value;
        }
    }
    if (run > 0) entries.push_back(run);
    return WeakComposition(std::move(entries));
}

// --- enumeration -----------------------------------------------------------

std::vector<Permutation> all_permutations(int n) {
    if (n < 0) throw MalformedInput("negative size");
    if (n > config().cap_type_a_n)
        throw SizeLimit("permutation enumeration exceeds cap n <= " +
                        std::to_string(config().cap_type_a_n));
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    if (n < 0) throw MalformedInput("negative size");
    if (n > config().cap_type_b_n)
        throw SizeLimit("signed enumeration exceeds cap n <= " +
                        std::to_string(config().cap_type_b_n));
    std::vector<SignedPermutation> out;
    std::vector<int> acc;
    std::vector<bool> used(n, false);
    // lexicographic over the letter order -n < ... < -1 < 1 < ... < n
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(acc.size()) == n) {
            out.emplace_back(acc);
            return;
        }
        for (int v = -n; v <= n; ++v) {
            if (v == 0 || used[std::abs(v) - 1]) continue;
            used[std::abs(v) - 1] = true;
            acc.push_back(v);
            self(self);
            acc.pop_back();
            used[std::abs(v) - 1] = false;
        }
    };
    rec(rec);
    return out;
}

std::vector<ColouredPermutation> all_coloured_snp(int n, int p) {
    if (n < 0 || p < 0) throw MalformedInput("negative size");
    if (n + p > config().cap_coloured_total)
        throw SizeLimit("coloured enumeration exceeds cap n + p <= " +
                        std::to_string(config().cap_coloured_total));
    // canonical form: values 1..p are overlined and appear in increasing
    // order, values p+1..p+n are plain and appear in any order; count is
    // C(n+p, p) * n!
    const int l = n + p;
    std::vector<ColouredPermutation> out;
    std::vector<ColouredLetter> acc;
    std::vector<bool> used_plain(l + 1, false);
    int over = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(acc.size()) == l) {
            out.emplace_back(acc);
            return;
        }
        if (over < p) {
            acc.push_back({over + 1, true});
            ++over;
            self(self);
            --over;
            acc.pop_back();
        }
        for (int v = p + 1; v <= l; ++v) {
            if (used_plain[v]) continue;
            used_plain[v] = true;
            acc.push_back({v, false});
            self(self);
            acc.pop_back();
            used_plain[v] = false;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> descent_class(int n, const DescentSetA& target) {
    if (target.n != n) throw MalformedInput("descent set sized for a different group");
    std::vector<Permutation> out;
    for (auto& p : all_permutations(n)) {
        if (descent_set(p) == target) out.push_back(std::move(p));
    }
    return out;
}

std::vector<SignedPermutation> descent_class(int n, const DescentSetB& target) {
    if (target.n != n) throw MalformedInput("descent set sized for a different group");
    std::vector<SignedPermutation> out;
    for (auto& p : all_signed_permutations(n)) {
        if (descent_set(p) == target) out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<std::vector<int>> all_subsets(int lo, int hi) {
    std::vector<std::vector<int>> out{{}};
    for (int v = lo; v <= hi; ++v) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) {
            auto s = out[i];
            s.push_back(v);
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<DescentSetA> all_descent_sets_a(int n) {
    std::vector<DescentSetA> out;
    for (auto& s : all_subsets(1, n - 1)) out.emplace_back(n, std::move(s));
    return out;
}

std::vector<DescentSetB> all_descent_sets_b(int n) {
    std::vector<DescentSetB> out;
    for (auto& s : all_subsets(0, n - 1)) out.emplace_back(n, std::move(s));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw MalformedInput("negative weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int next = std::min(rest, max_part); next >= 1; --next) {
            acc.push_back(next);
            self(self, rest - next, next);
            acc.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

bool is_domino_tileable(const Partition& shape) {
    // two-runner abacus: balanced beta-number parities with an even number
    // of beta numbers
    int len = shape.length();
    int padded = len + (len % 2);
    if (padded == 0) padded = 2;
    int even = 0, odd = 0;
    for (int i = 0; i < padded; ++i) {
        int beta = shape.part(i) + padded - 1 - i;
        (beta % 2 == 0 ? even : odd) += 1;
    }
    return even == odd;
}

std::vector<Partition> domino_tileable_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(2 * n)) {
        if (is_domino_tileable(p)) out.push_back(std::move(p));
    }
    return out;
}

// --- textual formats --------------------------------------------------------

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c)) || sep != ',') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw MalformedInput("expected integer, got '" + s + "'");
    }
    if (used != s.size()) throw MalformedInput("expected integer, got '" + s + "'");
    return v;
}

} // namespace

Partition parse_partition(std::string_view s) {
    std::vector<int> parts;
    for (auto& tok : split(s, ',')) parts.push_back(parse_int(tok));
    return Partition(std::move(parts));
}

WeakComposition parse_weak_composition(std::string_view s) {
    std::vector<int> entries;
    for (auto& tok : split(s, ',')) entries.push_back(parse_int(tok));
    return WeakComposition(std::move(entries));
}

Permutation parse_permutation(std::string_view s) {
    std::vector<int> w;
    for (auto& tok : split(s, ' ')) w.push_back(parse_int(tok));
    return Permutation(std::move(w));
}

SignedPermutation parse_signed_permutation(std::string_view s) {
    std::vector<int> w;
    for (auto& tok : split(s, ' ')) w.push_back(parse_int(tok));
    return SignedPermutation(std::move(w));
}

ColouredPermutation parse_coloured_permutation(std::string_view s) {
    std::vector<ColouredLetter> letters;
    for (auto& tok : split(s, ' ')) {
        if (tok[0] == '~')
            letters.push_back({parse_int(tok.substr(1)), true});
        else
            letters.push_back({parse_int(tok), false});
    }
    return ColouredPermutation(std::move(letters));
}

std::vector<int> parse_descent_elems(std::string_view s) {
    std::string body(s);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    std::vector<int> out;
    for (auto& tok : split(body, ',')) out.push_back(parse_int(tok));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <typename It, typename F>
std::string join(It first, It last, const char* sep, F f) {
    std::ostringstream os;
    for (It it = first; it != last; ++it) {
        if (it != first) os << sep;
        os << f(*it);
    }
    return os.str();
}

std::string ident(int v) { return std::to_string(v); }

} // namespace

std::string to_string(const Partition& p) {
    return join(p.parts().begin(), p.parts().end(), ",", ident);
}

std::string to_string(const WeakComposition& w) {
    return join(w.entries().begin(), w.entries().end(), ",", ident);
}

std::string to_string(const Permutation& p) {
    return join(p.word().begin(), p.word().end(), " ", ident);
}

std::string to_string(const SignedPermutation& p) {
    return join(p.word().begin(), p.word().end(), " ", ident);
}

std::string to_string(const ColouredPermutation& p) {
    return join(p.letters().begin(), p.letters().end(), " ", [](const ColouredLetter& l) {
        return l.overlined ? "~" + std::to_string(l.value) : std::to_string(l.value);
    });
}

std::string to_string(const DescentSetA& d) {
    return "{" + join(d.elems.begin(), d.elems.end(), ",", ident) + "}";
}

std::string to_string(const DescentSetB& d) {
    return "{" + join(d.elems.begin(), d.elems.end(), ",", ident) + "}";
}

} // namespace qsymb
