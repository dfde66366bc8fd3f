#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsymb/errors.hpp"
#include "qsymb/expand.hpp"

#include <map>
#include <set>

using namespace qsymb;

TEST_CASE("row insertion anchors") {
    RskPair pq = rsk(parse_permutation("2 1 3"));
    CHECK(pq.p == parse_young_tableau("1 3/2"));
    CHECK(pq.q == parse_young_tableau("1 3/2"));

    RskPair id = rsk(parse_permutation("1 2 3 4"));
    CHECK(id.p == parse_young_tableau("1 2 3 4"));
    CHECK(id.q == parse_young_tableau("1 2 3 4"));

    // shape multiset over the full group of degree 3
    std::map<Partition, int> shapes;
    for (const auto& w : all_permutations(3)) shapes[rsk(w).p.shape()] += 1;
    CHECK(shapes[Partition({3})] == 1);
    CHECK(shapes[Partition({2, 1})] == 4);
    CHECK(shapes[Partition({1, 1, 1})] == 1);
}

TEST_CASE("insertion is a bijection onto same-shape pairs with descent transport") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::pair<YoungTableau, YoungTableau>> images;
        long long same_shape_pairs = 0;
        for (const auto& shape : partitions_of(n)) {
            long long k = static_cast<long long>(standard_tableaux(shape).size());
            same_shape_pairs += k * k;
        }
        for (const auto& w : all_permutations(n)) {
            RskPair pq = rsk(w);
            CHECK(pq.p.shape() == pq.q.shape());
            CHECK(pq.p.is_standard());
            CHECK(pq.q.is_standard());
            CHECK(images.emplace(pq.p, pq.q).second);
            CHECK(descent_set(pq.q) == descent_set(w));
            CHECK(descent_set(pq.p) == descent_set(w.inverse()));
        }
        CHECK(static_cast<long long>(images.size()) == same_shape_pairs);
    }
}

TEST_CASE("insertion classes") {
    KnuthClass c = knuth_class(parse_young_tableau("1 3/2"), 3);
    std::set<Permutation> members(c.members.begin(), c.members.end());
    CHECK(members == std::set<Permutation>{parse_permutation("2 1 3"),
                                           parse_permutation("2 3 1")});
    // every member's inverse shares the tableau's descent set
    for (const auto& shape : partitions_of(4)) {
        for (const auto& t : standard_tableaux(shape)) {
            for (const auto& w : knuth_class(t, 4).members) {
                CHECK(descent_set(w.inverse()) == descent_set(t));
            }
        }
    }

    KnuthClass row = knuth_class(parse_young_tableau("1 2 3 4"), 4);
    REQUIRE(row.members.size() == 1);
    CHECK(row.members[0] == parse_permutation("1 2 3 4"));

    // classes partition the group
    size_t covered = 0;
    for (const auto& shape : partitions_of(4)) {
        for (const auto& t : standard_tableaux(shape)) covered += knuth_class(t, 4).members.size();
    }
    CHECK(covered == all_permutations(4).size());
}

TEST_CASE("schur expansion of basis elements and small products") {
    AlphabetSpec spec = AlphabetSpec::type_a(3);
    SchurExpansion basis = schur_expansion(schur_poly(Partition({2, 1}), spec), 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis.at(Partition({2, 1})) == BigInt(1));

    SparsePoly s1 = schur_poly(Partition({1}), AlphabetSpec::type_a(2));
    SchurExpansion sq = schur_expansion(s1 * s1, 2);
    CHECK(sq.size() == 2);
    CHECK(sq.at(Partition({2})) == BigInt(1));
    CHECK(sq.at(Partition({1, 1})) == BigInt(1));

    AlphabetSpec spec3 = AlphabetSpec::type_a(3);
    SchurExpansion pieri = schur_expansion(
        schur_poly(Partition({2}), spec3) * schur_poly(Partition({1}), spec3), 3);
    CHECK(pieri.size() == 2);
    CHECK(pieri.at(Partition({3})) == BigInt(1));
    CHECK(pieri.at(Partition({2, 1})) == BigInt(1));
}

TEST_CASE("schur expansion round trips") {
    AlphabetSpec spec = AlphabetSpec::type_a(4);
    SparsePoly p = schur_poly(Partition({2, 1, 1}), spec).scaled(TCoeff(BigInt(3))) +
                   schur_poly(Partition({4}), spec);
    SchurExpansion e = schur_expansion(p, 4);
    REQUIRE(e.size() == 2);
    CHECK(e.at(Partition({2, 1, 1})) == BigInt(3));
    CHECK(e.at(Partition({4})) == BigInt(1));
    SparsePoly rebuilt(spec);
    for (const auto& [nu, c] : e) rebuilt += schur_poly(nu, spec).scaled(TCoeff(c));
    CHECK(rebuilt == p);
}

TEST_CASE("non-symmetric input is rejected") {
    AlphabetSpec spec = AlphabetSpec::type_a(2);
    SparsePoly lone = SparsePoly::parse("1 t^0 x1^1 x2^0", spec);
    CHECK_THROWS_AS(schur_expansion(lone, 1), NotSymmetric);
    SparsePoly inhomogeneous = lone + SparsePoly::parse("1 t^0 x1^1 x2^1", spec);
    CHECK_THROWS_AS(schur_expansion(inhomogeneous, 1), NotSymmetric);
}

TEST_CASE("littlewood-richardson anchors") {
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == BigInt(1));
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == BigInt(1));
    // empty left factor: delta
    for (const auto& mu : partitions_of(3)) {
        for (const auto& nu : partitions_of(3)) {
            CHECK(lr_coefficient(Partition(), mu, nu) == BigInt(mu == nu ? 1 : 0));
        }
    }
    // dimension consistency: sum of c * f^nu equals C(6,3) * f^lambda * f^mu
    SchurExpansion e = lr_expansion(Partition({2, 1}), Partition({2, 1}));
    BigInt weighted;
    for (const auto& [nu, c] : e)
        weighted += c * BigInt(static_cast<long long>(standard_tableaux(nu).size()));
    CHECK(weighted == BigInt(20 * 2 * 2));
}

TEST_CASE("chain-basis expansion by inversion") {
    AlphabetSpec spec = AlphabetSpec::type_a(4);
    FundamentalExpansionA single =
        fundamental_a_expansion(fundamental_a(DescentSetA(2, {1}), 2, spec), 2);
    REQUIRE(single.size() == 1);
    CHECK(single.begin()->first.elems == std::vector<int>{1});
    CHECK(single.begin()->second == TCoeff(BigInt(1)));

    AlphabetSpec spec3 = AlphabetSpec::type_a(3);
    FundamentalExpansionA hook = fundamental_a_expansion(schur_poly(Partition({2, 1}), spec3), 3);
    REQUIRE(hook.size() == 2);
    CHECK(hook.at(DescentSetA(3, {1})) == TCoeff(BigInt(1)));
    CHECK(hook.at(DescentSetA(3, {2})) == TCoeff(BigInt(1)));

    CHECK(fundamental_a_expansion(SparsePoly(spec), 2).empty());
}

TEST_CASE("chain-basis expansions invert the constructors (both kinds)") {
    for (int n = 1; n <= 5; ++n) {
        AlphabetSpec spec = AlphabetSpec::type_a(5);
        for (const auto& des : all_descent_sets_a(n)) {
            FundamentalExpansionA e =
                fundamental_a_expansion(fundamental_a(des, n, spec), n);
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == des);
            CHECK(e.begin()->second == TCoeff(BigInt(1)));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        AlphabetSpec spec = AlphabetSpec::type_b(4);
        for (const auto& des : all_descent_sets_b(n)) {
            FundamentalExpansionB e =
                fundamental_b_expansion(fundamental_b(des, n, spec), n);
            REQUIRE(e.size() == 1);
            CHECK(e.begin()->first == des);
            CHECK(e.begin()->second == TCoeff(BigInt(1)));
        }
    }
}

TEST_CASE("non-quasisymmetric input is rejected") {
    AlphabetSpec spec = AlphabetSpec::type_a(3);
    // x2 alone: its packed coefficient table cannot rebuild it
    SparsePoly skew = SparsePoly::parse("1 t^0 x1^0 x2^1 x3^0", spec);
    CHECK_THROWS_AS(fundamental_a_expansion(skew, 1), NotQuasisymmetric);
    AlphabetSpec bspec = AlphabetSpec::type_b(3);
    SparsePoly bskew = SparsePoly::parse("1 t^0 x0^0 x1^0 x2^1 x3^0", bspec);
    CHECK_THROWS_AS(fundamental_b_expansion(bskew, 1), NotQuasisymmetricB);
}

TEST_CASE("x0-anchored expansion of domino functions counts descents with spin") {
    AlphabetSpec spec = AlphabetSpec::type_b(4);
    FundamentalExpansionB vertical =
        fundamental_b_expansion(domino_poly(Partition({1, 1}), spec), 1);
    REQUIRE(vertical.size() == 1);
    CHECK(vertical.at(DescentSetB(1, {0})) == TCoeff::t_power(1));

    FundamentalExpansionB horizontal =
        fundamental_b_expansion(domino_poly(Partition({2}), spec), 1);
    REQUIRE(horizontal.size() == 1);
    CHECK(horizontal.at(DescentSetB(1, {})) == TCoeff(BigInt(1)));

    // coefficients tabulate the standard tableaux by descent set and spin
    for (int n = 2; n <= 3; ++n) {
        for (const auto& shape : domino_tileable_partitions(n)) {
            FundamentalExpansionB e = fundamental_b_expansion(domino_poly(shape, spec), n);
            std::map<std::vector<int>, TCoeff> expected;
            for (const auto& t : standard_domino_tableaux(shape))
                expected[descent_set(t).elems] += TCoeff::t_power(t.two_spin());
            REQUIRE(e.size() == expected.size());
            for (const auto& [des, c] : e) CHECK(c == expected.at(des.elems));
        }
    }
}

TEST_CASE("domino-basis expansion at collapsed spin") {
    AlphabetSpec spec = AlphabetSpec::type_b(4);
    for (const auto& nu : domino_tileable_partitions(2)) {
        DominoExpansion e = domino_basis_expansion(domino_poly(nu, spec).at_t1(), 2, QMode::One);
        REQUIRE(e.expandable);
        REQUIRE(e.coefficients.size() == 1);
        CHECK(e.coefficients.begin()->first == nu);
        CHECK(e.coefficients.begin()->second == TCoeff(BigInt(1)));
    }
    // a product admits an exact expansion that rebuilds it; the paired
    // coefficients of the product identity are themselves one valid
    // expansion (the family is spanning but not independent at t = 1)
    SparsePoly prod = domino_poly(Partition({2}), spec).at_t1() *
                      domino_poly(Partition({1, 1}), spec).at_t1();
    DominoExpansion e = domino_basis_expansion(prod, 2, QMode::One);
    REQUIRE(e.expandable);
    SparsePoly rebuilt(spec);
    for (const auto& [nu, c] : e.coefficients)
        rebuilt += domino_poly(nu, spec).at_t1().scaled(c);
    CHECK(rebuilt == prod);
    SparsePoly paired(spec);
    BiShape ql = two_quotient(Partition({2}));
    BiShape qm = two_quotient(Partition({1, 1}));
    for (const auto& nu : domino_tileable_partitions(2)) {
        BiShape qn = two_quotient(nu);
        BigInt c = lr_coefficient(ql.minus, qm.minus, qn.minus) *
                   lr_coefficient(ql.plus, qm.plus, qn.plus);
        paired += domino_poly(nu, spec).at_t1().scaled(TCoeff(c));
    }
    CHECK(paired == prod);
}

TEST_CASE("collapsed-spin domino functions satisfy a three-term relation") {
    // the dependence that rules out unique expansions at t = 1
    AlphabetSpec spec = AlphabetSpec::type_b(4);
    SparsePoly lhs = domino_poly(Partition({2, 2}), spec).at_t1() -
                     domino_poly(Partition({3, 1}), spec).at_t1();
    CHECK(lhs == domino_poly(Partition({2, 1, 1}), spec).at_t1());
}

TEST_CASE("domino-basis expansion rejects inputs outside the span") {
    AlphabetSpec spec = AlphabetSpec::type_b(4);
    // x1 alone has no x0 weight pattern reachable by the basis
    SparsePoly stray = SparsePoly::parse("1 t^0 x0^0 x1^1 x2^0 x3^0 x4^0", spec);
    DominoExpansion e = domino_basis_expansion(stray, 1, QMode::One);
    CHECK_FALSE(e.expandable);
    CHECK(!e.residual.empty());
}

TEST_CASE("generic-spin expansion runs and reports an outcome") {
    AlphabetSpec spec = AlphabetSpec::type_b(4);
    // single basis element: trivially expandable with coefficient 1
    DominoExpansion self =
        domino_basis_expansion(domino_poly(Partition({2, 2}), spec), 2, QMode::Generic);
    REQUIRE(self.expandable);
    CHECK(self.coefficients.at(Partition({2, 2})) == TCoeff(BigInt(1)));

    // exploratory product: the outcome is recorded, not asserted
    SparsePoly prod = domino_poly(Partition({2}), spec) * domino_poly(Partition({2}), spec);
    DominoExpansion outcome = domino_basis_expansion(prod, 2, QMode::Generic);
    if (outcome.expandable) {
        SparsePoly rebuilt(spec);
        for (const auto& [nu, c] : outcome.coefficients)
            rebuilt += domino_poly(nu, spec).scaled(c);
        CHECK(rebuilt == prod);
    } else {
        CHECK(!outcome.residual.empty());
    }
    MESSAGE("generic-spin product expandable: ",
            std::string(outcome.expandable ? "yes" : "no"));
}
