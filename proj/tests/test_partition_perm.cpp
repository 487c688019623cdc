#include "llt/partition.hpp"
#include "llt/permutation.hpp"

#include "llt/laurent.hpp"

#include <doctest.h>

#include <map>
#include <set>

using llt::Partition;
using llt::Permutation;

TEST_CASE("partition construction and accessors") {
    Partition p({3, 2, 2});
    CHECK(p.size() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 3);
    CHECK(p.part(4) == 0);
    CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
    CHECK_THROWS_AS(Partition({2, 3}), llt::InvalidInput);
    CHECK_THROWS_AS(Partition({1, -1}), llt::InvalidInput);
}

TEST_CASE("partition ordering puts dominant shapes first within a size") {
    Partition s3({3}), s21({2, 1}), s111({1, 1, 1});
    CHECK(s3 < s21);
    CHECK(s21 < s111);
    CHECK(Partition({2}) < s3);
    std::map<Partition, int> m;
    m[s111] = 1;
    m[s3] = 2;
    m[s21] = 3;
    auto it = m.begin();
    CHECK(it++->first == s3);
    CHECK(it++->first == s21);
    CHECK(it->first == s111);
}

TEST_CASE("partition conjugate is an involution") {
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& p : Partition::all_of(8)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition containment and dominance") {
    CHECK(Partition({3, 2}).contains(Partition({2, 2})));
    CHECK(Partition({3, 2}).contains(Partition()));
    CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
    CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
    CHECK_FALSE(Partition({2, 2}).dominates(Partition({3, 1})));
    CHECK(Partition({2, 2}).dominates(Partition({2, 2})));
    CHECK_THROWS_AS(Partition({2}).dominates(Partition({1})), llt::InvalidInput);
}

TEST_CASE("partition union and multiplicities") {
    CHECK(Partition({3, 1}).union_with(Partition({2, 1})) == Partition({3, 2, 1, 1}));
    auto mult = Partition({2, 2, 1}).part_multiplicities();
    CHECK(mult[1] == 1);
    CHECK(mult[2] == 2);
}

TEST_CASE("partition counting matches the classical sequence") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(Partition::all_of(n).size() == static_cast<size_t>(expected[n]));
}

TEST_CASE("staircase and subdiagram enumeration") {
    CHECK(Partition::staircase(4) == Partition({3, 2, 1}));
    CHECK(Partition::staircase(1) == Partition());

    auto subs = Partition::subdiagrams_of(Partition({2, 1}));
    // (), (1), (2), (1,1), (2,1)
    CHECK(subs.size() == 5);
    std::set<Partition> set(subs.begin(), subs.end());
    CHECK(set.count(Partition()));
    CHECK(set.count(Partition({2, 1})));
    CHECK_FALSE(set.count(Partition({2, 2})));

    // Subdiagrams of an m x m box are counted by binomial(2m, m).
    CHECK(Partition::subdiagrams_of_box(2, 2).size() == 6);
    CHECK(Partition::subdiagrams_of_box(3, 3).size() == 20);

    for (const auto& p : Partition::subdiagrams_of(Partition::staircase(5)))
        CHECK(Partition::staircase(5).contains(p));
}

TEST_CASE("partition json round trip") {
    Partition p({4, 4, 1});
    CHECK(Partition::from_json(p.to_json()) == p);
    CHECK(Partition::from_json(nlohmann::json::array()) == Partition());
    CHECK(p.str() == "[4,4,1]");
    CHECK(Partition().str() == "[]");
}

TEST_CASE("permutation basics") {
    Permutation w({2, 4, 1, 3});
    CHECK(w.n() == 4);
    CHECK(w(1) == 2);
    CHECK(w.inverse() == Permutation({3, 1, 4, 2}));
    CHECK(w.inverse().inverse() == w);
    CHECK_THROWS_AS(Permutation({1, 1}), llt::InvalidInput);
    CHECK_THROWS_AS(Permutation({0, 1}), llt::InvalidInput);
}

TEST_CASE("permutation inversions and descents") {
    Permutation w({3, 1, 2});
    CHECK(w.inversion_count() == 2);
    CHECK(w.inverts(1, 2));
    CHECK_FALSE(w.inverts(2, 3));
    CHECK(w.descents().elements() == std::vector<int>{1});
    // w^{-1} = [2,3,1], whose descent set is {2}.
    CHECK(w.inverse_descents().elements() == std::vector<int>{2});
    CHECK(w.descents().str() == "{1}");
    CHECK(Permutation::identity(3).descents().str() == "{}");
}

TEST_CASE("permutation adjacent swap acts on positions") {
    Permutation w({2, 4, 1, 3});
    CHECK(w.swapped_positions(2) == Permutation({2, 1, 4, 3}));
    CHECK(w.swapped_positions(2).swapped_positions(2) == w);
    CHECK_THROWS_AS(w.swapped_positions(4), llt::InvalidInput);
}

TEST_CASE("permutation enumeration") {
    CHECK(Permutation::all_of(4).size() == 24);
    int count = 0;
    Permutation::for_each(3, [&](const Permutation&) { ++count; });
    CHECK(count == 6);
    // Identity appears exactly once and first.
    CHECK(Permutation::all_of(3).front() == Permutation::identity(3));
}

TEST_CASE("descent set ordering and membership") {
    llt::DescentSet a{4, 0b001}, b{4, 0b010};
    CHECK(a < b);
    CHECK(a.contains(1));
    CHECK_FALSE(a.contains(2));
    CHECK_FALSE(a.contains(0));
    CHECK_FALSE(a.contains(4));
}
