#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsymb/combinat.hpp"
#include "qsymb/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace qsymb;

namespace {

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// independent tileability oracle: profile DP over rows counting tilings
long long count_tilings_dp(const Partition& shape) {
    int rows = shape.length();
    if (rows == 0) return 1;
    // profile: bitmask of columns of the current row already covered by a
    // vertical domino reaching down from the previous row
    std::map<int, long long> cur{{0, 1}};
    for (int r = 0; r < rows; ++r) {
        int len = shape.part(r);
        int next_len = shape.part(r + 1);
        std::map<int, long long> nxt;
        for (const auto& [mask, ways] : cur) {
            auto fill = [&](auto&& self, int col, int covered, int out_mask) -> void {
                if (col == len) {
                    nxt[out_mask] += ways;
                    return;
                }
                if (covered & (1 << col)) {
                    self(self, col + 1, covered, out_mask);
                    return;
                }
                // horizontal
                if (col + 1 < len && !(covered & (1 << (col + 1))))
                    self(self, col + 2, covered | (1 << (col + 1)), out_mask);
                // vertical into the next row
                if (col < next_len) self(self, col + 1, covered, out_mask | (1 << col));
            };
            fill(fill, 0, mask, 0);
        }
        cur = std::move(nxt);
    }
    auto it = cur.find(0);
    return it == cur.end() ? 0 : it->second;
}

} // namespace

TEST_CASE("descent sets of plain words") {
    CHECK(descent_set(parse_permutation("3 1 2")).elems == std::vector<int>{1});
    CHECK(descent_set(parse_permutation("1 2 3")).elems.empty());
    CHECK(descent_set(parse_permutation("3 2 1")).elems == std::vector<int>{1, 2});
}

TEST_CASE("descent sets of signed words") {
    CHECK(descent_set(parse_signed_permutation("-2 1")).elems == std::vector<int>{0});
    CHECK(descent_set(parse_signed_permutation("1 2")).elems.empty());
    CHECK(descent_set(parse_signed_permutation("2 -1")).elems == std::vector<int>{1});
}

TEST_CASE("total colour") {
    CHECK(total_colour(parse_signed_permutation("-2 1")) == 1);
    CHECK(total_colour(parse_signed_permutation("1 2")) == 0);
    CHECK(total_colour(parse_signed_permutation("-1 -2")) == 2);
}

TEST_CASE("inverses") {
    CHECK(parse_permutation("2 3 1").inverse() == parse_permutation("3 1 2"));
    CHECK(parse_permutation("1 2 3 4").inverse() == parse_permutation("1 2 3 4"));
    CHECK(parse_signed_permutation("-2 1").inverse() == parse_signed_permutation("2 -1"));
    for (const auto& w : all_permutations(4)) {
        CHECK(w.inverse().inverse() == w);
        CHECK(descent_set(w.inverse().inverse()) == descent_set(w));
    }
}

TEST_CASE("signed inverse composes to the identity") {
    for (const auto& pi : all_signed_permutations(3)) {
        SignedPermutation inv = pi.inverse();
        for (int i = 1; i <= 3; ++i) {
            int image = pi.word()[i - 1];
            int back = image > 0 ? inv.word()[image - 1] : -inv.word()[-image - 1];
            CHECK(back == i);
        }
        CHECK(descent_set(pi.inverse().inverse()) == descent_set(pi));
    }
}

TEST_CASE("plain shuffle counts and the empty case") {
    auto s1 = shuffle(parse_permutation("1"), parse_permutation("1"));
    CHECK(s1.size() == 2);
    CHECK(std::find(s1.begin(), s1.end(), parse_permutation("1 2")) != s1.end());
    CHECK(std::find(s1.begin(), s1.end(), parse_permutation("2 1")) != s1.end());

    auto s2 = shuffle(parse_permutation("3 1 2"), parse_permutation("2 1"));
    CHECK(s2.size() == 10);
    CHECK(std::set<Permutation>(s2.begin(), s2.end()).size() == 10);

    auto s3 = shuffle(Permutation(), parse_permutation("2 1"));
    CHECK(s3.size() == 1);
    CHECK(s3[0] == parse_permutation("2 1"));
}

TEST_CASE("every shuffle element decomposes uniquely") {
    Permutation a = parse_permutation("2 1 3");
    Permutation b = parse_permutation("1 2");
    for (const auto& g : shuffle(a, b)) {
        std::vector<int> low, high;
        for (int v : g.word()) (v <= a.size() ? low : high).push_back(v);
        CHECK(low == a.word());
        std::vector<int> shifted = b.word();
        for (int& v : shifted) v += a.size();
        CHECK(high == shifted);
    }
}

TEST_CASE("signed shuffle keeps signs with their letters") {
    auto s1 = shuffle(parse_signed_permutation("-1"), parse_signed_permutation("1"));
    CHECK(s1.size() == 2);
    CHECK(std::find(s1.begin(), s1.end(), parse_signed_permutation("-1 2")) != s1.end());
    CHECK(std::find(s1.begin(), s1.end(), parse_signed_permutation("2 -1")) != s1.end());

    auto s2 = shuffle(parse_signed_permutation("1"), parse_signed_permutation("-1"));
    CHECK(s2.size() == 2);
    CHECK(std::find(s2.begin(), s2.end(), parse_signed_permutation("1 -2")) != s2.end());
    CHECK(std::find(s2.begin(), s2.end(), parse_signed_permutation("-2 1")) != s2.end());

    auto s3 = shuffle(parse_signed_permutation("-2 1"), parse_signed_permutation("1 -2"));
    CHECK(s3.size() == binom_ll(4, 2));
}

TEST_CASE("signature of coloured words") {
    auto sig = snp_signature(parse_coloured_permutation("5 9 7 ~1 ~2 6 ~3 8 ~4"));
    REQUIRE(sig.has_value());
    CHECK(sig->n == 5);
    CHECK(sig->p == 4);
    CHECK(!snp_signature(parse_coloured_permutation("3 ~2 ~1")).has_value());
    auto sig2 = snp_signature(parse_coloured_permutation("1 2 3"));
    REQUIRE(sig2.has_value());
    CHECK(sig2->n == 3);
    CHECK(sig2->p == 0);
}

TEST_CASE("coloured shuffle reproduces the worked ten-word instance") {
    auto got = shuffle(parse_coloured_permutation("3 2 ~1"), parse_coloured_permutation("~1 2"));
    std::set<std::string> got_s;
    for (const auto& g : got) got_s.insert(to_string(g));
    std::set<std::string> expected = {
        "4 3 ~1 ~2 5", "4 3 ~2 ~1 5", "4 ~2 3 ~1 5", "~2 4 3 ~1 5", "4 3 ~2 5 ~1",
        "4 ~2 3 5 ~1", "~2 4 3 5 ~1", "4 ~2 5 3 ~1", "~2 4 5 3 ~1", "~2 5 4 3 ~1"};
    CHECK(got_s == expected);
}

TEST_CASE("coloured shuffle edge cases and sizes") {
    auto s1 = shuffle(parse_coloured_permutation("~1"), parse_coloured_permutation("~1"));
    std::set<std::string> got;
    for (const auto& g : s1) got.insert(to_string(g));
    CHECK(got == std::set<std::string>{"~1 ~2", "~2 ~1"});

    auto s2 = shuffle(ColouredPermutation(), parse_coloured_permutation("~1 2"));
    CHECK(s2.size() == 1);
    CHECK(to_string(s2[0]) == "~1 2");

    auto s3 = shuffle(parse_coloured_permutation("~1 3 2"), parse_coloured_permutation("2 ~1"));
    CHECK(s3.size() == binom_ll(5, 3));
    CHECK(std::set<ColouredPermutation>(s3.begin(), s3.end()).size() == s3.size());

    CHECK_THROWS_AS(
        shuffle(parse_coloured_permutation("3 ~2 ~1"), parse_coloured_permutation("~1 2")),
        MalformedInput);
}

TEST_CASE("run composition of coloured words") {
    CHECK(weak_composition_of(parse_coloured_permutation("5 9 7 ~1 ~2 6 ~3 8 ~4")) ==
          WeakComposition({2, 1, 0, 0, 1, 0, 1, 0}));
    CHECK(weak_composition_of(parse_coloured_permutation("~1 ~2 ~3")) ==
          WeakComposition({0, 0, 0}));
    CHECK(weak_composition_of(parse_coloured_permutation("1 2 3")) == WeakComposition({3}));
    CHECK_THROWS_AS(weak_composition_of(parse_coloured_permutation("3 ~2 ~1")), MalformedInput);
}

TEST_CASE("weak composition statistics and descent positions") {
    WeakComposition a({2, 1, 0, 0, 1, 0, 1, 0});
    CHECK(a.weight() == 5);
    CHECK(a.length() == 8);
    CHECK(a.zero_length() == 4);
    CHECK(a.total_weight() == 9);
    CHECK(a.descent_set() == std::vector<int>{2, 3, 6, 8});
    CHECK(WeakComposition({0, 0, 0}).descent_set().empty());
    CHECK(WeakComposition({1, 0}).descent_set() == std::vector<int>{1});
    CHECK(a.weight() + a.zero_length() == a.total_weight());
}

TEST_CASE("composition of a coloured word matches its run ends") {
    for (int n = 0; n <= 3; ++n) {
        for (int p = 0; p <= 2; ++p) {
            for (const auto& pi : all_coloured_snp(n, p)) {
                WeakComposition c = weak_composition_of(pi);
                CHECK(c.total_weight() == pi.size());
                CHECK(c.weight() == n);
                CHECK(c.zero_length() == p);
                // descent positions are the word positions ending each plain run
                std::vector<int> expected;
                const auto& ls = pi.letters();
                for (int i = 0; i < pi.size(); ++i) {
                    if (ls[i].overlined) continue;
                    bool run_ends = i + 1 == pi.size() || ls[i + 1].overlined ||
                                    ls[i + 1].value < ls[i].value;
                    if (run_ends) expected.push_back(i + 1);
                }
                CHECK(c.descent_set() == expected);
            }
        }
    }
}

TEST_CASE("group enumeration sizes") {
    CHECK(all_permutations(0).size() == 1);
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_signed_permutations(2).size() == 8);
    CHECK(all_signed_permutations(3).size() == 48);
    CHECK(all_coloured_snp(1, 1).size() == 2);
    CHECK(all_coloured_snp(2, 1).size() == binom_ll(3, 1) * 2);
    CHECK(all_coloured_snp(2, 2).size() == binom_ll(4, 2) * 2);
    CHECK(all_coloured_snp(0, 3).size() == 1);
}

TEST_CASE("enumeration respects the caps") {
    CHECK_THROWS_AS(all_permutations(9), SizeLimit);
    CHECK_THROWS_AS(all_signed_permutations(6), SizeLimit);
}

TEST_CASE("descent classes partition each group") {
    for (int n = 0; n <= 4; ++n) {
        size_t total = 0;
        for (const auto& des : all_descent_sets_a(n)) total += descent_class(n, des).size();
        CHECK(total == all_permutations(n).size());
    }
    for (int n = 0; n <= 3; ++n) {
        size_t total = 0;
        for (const auto& des : all_descent_sets_b(n)) total += descent_class(n, des).size();
        CHECK(total == all_signed_permutations(n).size());
    }
}

TEST_CASE("descent class anchors") {
    auto c1 = descent_class(3, DescentSetA(3, {}));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == parse_permutation("1 2 3"));
    auto c2 = descent_class(3, DescentSetA(3, {1, 2}));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0] == parse_permutation("3 2 1"));
    auto c3 = descent_class(1, DescentSetB(1, {0}));
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == parse_signed_permutation("-1"));
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(7).size() == 15);
    for (const auto& p : partitions_of(6)) CHECK(p.weight() == 6);
}

TEST_CASE("tileable shapes by abacus match the brute-force tiler") {
    CHECK(domino_tileable_partitions(1) ==
          std::vector<Partition>{Partition({2}), Partition({1, 1})});
    CHECK(domino_tileable_partitions(2).size() == 5);  // every shape of weight 4
    for (int n = 0; n <= 4; ++n) {
        for (const auto& shape : partitions_of(2 * n)) {
            bool abacus = is_domino_tileable(shape);
            long long tilings = count_tilings_dp(shape);
            CHECK(abacus == (tilings > 0));
        }
    }
    // odd weights never tile
    CHECK_FALSE(is_domino_tileable(Partition({3})));
    CHECK_FALSE(is_domino_tileable(Partition({2, 1})));
}

TEST_CASE("textual formats round trip") {
    CHECK(to_string(parse_partition("5,5,4,1,1")) == "5,5,4,1,1");
    CHECK(to_string(parse_weak_composition("2,1,0,0,1,0,1,0")) == "2,1,0,0,1,0,1,0");
    CHECK(to_string(parse_permutation("3 1 2")) == "3 1 2");
    CHECK(to_string(parse_signed_permutation("-2 1")) == "-2 1");
    CHECK(to_string(parse_coloured_permutation("5 9 7 ~1 ~2 6 ~3 8 ~4")) ==
          "5 9 7 ~1 ~2 6 ~3 8 ~4");
    CHECK(parse_descent_elems("{0,3,5,6}") == std::vector<int>{0, 3, 5, 6});
    CHECK(parse_descent_elems("{}").empty());
    CHECK(to_string(Partition()) == "");
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(parse_partition("1,2"), MalformedInput);
    CHECK_THROWS_AS(parse_partition("0"), MalformedInput);
    CHECK_THROWS_AS(parse_permutation("1 1"), MalformedInput);
    CHECK_THROWS_AS(parse_permutation("2 3"), MalformedInput);
    CHECK_THROWS_AS(parse_signed_permutation("1 -1"), MalformedInput);
    CHECK_THROWS_AS(parse_coloured_permutation("~1 ~1"), MalformedInput);
    CHECK_THROWS_AS(WeakComposition({1, -1}), MalformedInput);
    CHECK_THROWS_AS(DescentSetA(3, {3}), MalformedInput);
    CHECK_THROWS_AS(DescentSetB(3, {-1}), MalformedInput);
}
