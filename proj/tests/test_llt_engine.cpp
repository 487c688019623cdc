#include "llt/llt_poly.hpp"
#include "llt/shape_tuple.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using llt::Cell;
using llt::LaurentPoly;
using llt::Partition;
using llt::SchurVector;
using llt::ShapeTuple;
using llt::SkewComponent;
using llt::StandardFilling;
using llt::TwoDiagTuple;
using llt::XPoly;

namespace {

ShapeTuple tuple(const std::string& pieces) { return TwoDiagTuple::parse(pieces).shape(); }

std::vector<StandardFilling> all_fillings(const ShapeTuple& t) {
    std::vector<StandardFilling> out;
    llt::for_each_standard_filling(t, [&](const StandardFilling& T) { out.push_back(T); });
    return out;
}

std::vector<TwoDiagTuple> all_two_diag(int max_pieces) {
    std::vector<TwoDiagTuple> out;
    std::vector<std::string> words{""};
    for (int len = 1; len <= max_pieces; ++len) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : {'H', 'V', '0', '1'}) next.push_back(w + c);
        for (const auto& w : next) out.push_back(TwoDiagTuple::parse(w));
        words = std::move(next);
    }
    return out;
}

SchurVector at_q1(const SchurVector& v) {
    SchurVector out;
    for (const auto& [lam, c] : v.terms()) out.add_term(lam, LaurentPoly(c.evaluate(1)));
    return out;
}

}  // namespace

TEST_CASE("skew component validation") {
    auto comp = [](std::vector<Cell> cells, int off) { return SkewComponent{std::move(cells), off}; };
    CHECK_NOTHROW(comp({{1, 1}}, 5).validate());
    CHECK_NOTHROW(comp({{1, 1}, {1, 2}}, 0).validate());
    CHECK_NOTHROW(comp({{1, 1}, {2, 1}}, 1).validate());
    CHECK_NOTHROW(comp({{1, 1}, {1, 2}, {2, 1}, {2, 2}}, 0).validate());
    CHECK_NOTHROW(comp({{1, 2}, {2, 1}, {2, 2}}, 0).validate());
    CHECK_NOTHROW(comp({{1, 2}, {2, 1}}, 0).validate());

    CHECK_THROWS_AS(comp({}, 0).validate(), llt::InvalidInput);
    CHECK_THROWS_AS(comp({{1, 1}, {1, 1}}, 0).validate(), llt::InvalidInput);
    CHECK_THROWS_AS(comp({{1, 1}, {1, 3}}, 0).validate(), llt::InvalidInput);
    CHECK_THROWS_AS(comp({{1, 1}, {3, 1}}, 0).validate(), llt::InvalidInput);
    CHECK_THROWS_AS(comp({{1, 1}, {2, 2}}, 0).validate(), llt::InvalidInput);
    // Rows contiguous but column 1 has a hole between rows 1 and 3.
    CHECK_THROWS_AS(comp({{1, 1}, {1, 2}, {3, 1}, {3, 2}}, 0).validate(), llt::InvalidInput);
    // Lower row sticks out to the right.
    CHECK_THROWS_AS(comp({{1, 1}, {2, 1}, {2, 2}}, 0).validate(), llt::InvalidInput);
}

TEST_CASE("shape tuple contents and layout") {
    ShapeTuple t = tuple("VH");
    CHECK(t.d() == 2);
    CHECK(t.n() == 4);
    // Component 0 is the vertical domino: top cell content 1, bottom 0.
    CHECK(t.content(0) == 1);
    CHECK(t.content(1) == 0);
    CHECK(t.content(2) == 0);
    CHECK(t.content(3) == 1);
    CHECK(t.shifted_content(0) == 2);
    CHECK(t.shifted_content(1) == 0);
    CHECK(t.shifted_content(2) == 1);
    CHECK(t.shifted_content(3) == 3);
    CHECK(t.reading_order() == std::vector<int>{1, 2, 0, 3});
    CHECK(t.str() == "(1,1):1 (2,1):0 | (1,1):0 (1,2):1");

    ShapeTuple s = ShapeTuple::single_cells({0, 1, 0});
    CHECK(s.d() == 3);
    CHECK(s.n() == 3);
    CHECK(s.content(1) == 1);
    CHECK(s.shifted_content(2) == 2);
}

TEST_CASE("shape tuple json roundtrip") {
    for (const char* w : {"H", "V", "01", "VH", "0V1H"}) {
        ShapeTuple t = tuple(w);
        CHECK(ShapeTuple::from_json(t.to_json()) == t);
    }
    ShapeTuple skew({SkewComponent{{{1, 2}, {2, 1}, {2, 2}}, -1}, SkewComponent{{{1, 1}}, 3}});
    CHECK(ShapeTuple::from_json(skew.to_json()) == skew);
    CHECK_THROWS_AS(ShapeTuple::from_json(nlohmann::json::array()), llt::InvalidInput);
    nlohmann::json bad;
    bad["components"] = nlohmann::json::array();
    bad["components"].push_back({{"kind", "mystery"}, {"cells", nlohmann::json::array()}});
    CHECK_THROWS_AS(ShapeTuple::from_json(bad), llt::InvalidInput);
}

TEST_CASE("shifted content ties are rejected") {
    // A 2x2 square has two cells of equal content in one component.
    ShapeTuple square({SkewComponent{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}, 0}});
    CHECK_THROWS_AS(square.reading_order(), llt::InvalidInput);
    CHECK_THROWS_AS(llt::llt_fund(square), llt::InvalidInput);
}

TEST_CASE("standard filling enumeration") {
    CHECK(all_fillings(tuple("H")).size() == 1);
    CHECK(all_fillings(tuple("V")).size() == 1);
    CHECK(all_fillings(tuple("00")).size() == 2);
    CHECK(all_fillings(tuple("HV")).size() == 6);  // choose entries for one domino

    ShapeTuple t = tuple("HV");
    for (const auto& T : all_fillings(t)) CHECK(llt::is_standard_filling(t, T));
    CHECK_FALSE(llt::is_standard_filling(t, {2, 1, 3, 4}));  // domino decreasing
    CHECK_FALSE(llt::is_standard_filling(t, {1, 2, 3, 3}));  // repeated entry
    CHECK_FALSE(llt::is_standard_filling(t, {1, 2, 3}));     // wrong size
}

TEST_CASE("inversion statistic") {
    // d = 1: no admissible content gaps at all.
    ShapeTuple hook({SkewComponent{{{1, 1}, {1, 2}, {2, 1}}, 0}});
    CHECK(llt::admissible_pairs(hook).empty());
    for (const auto& T : all_fillings(hook)) CHECK(llt::inv_d(hook, T) == 0);

    ShapeTuple s = ShapeTuple::single_cells({0, 0});
    CHECK(llt::inv_d(s, {2, 1}) == 1);
    CHECK(llt::inv_d(s, {1, 2}) == 0);
    CHECK_THROWS_AS(llt::inv_d(s, {1, 1}), llt::InvalidInput);
}

TEST_CASE("llt basic values") {
    CHECK(llt::llt_schur(tuple("H")) == llt::schur_of(Partition({2})));
    CHECK(llt::llt_schur(tuple("V")) == llt::schur_of(Partition({1, 1})));

    SchurVector expect = llt::schur_of(Partition({2}));
    expect.add_term(Partition({1, 1}), LaurentPoly::q_power(1));
    CHECK(llt::llt_schur(ShapeTuple::single_cells({0, 0})) == expect);

    llt::FundVector empty = llt::llt_fund(ShapeTuple());
    CHECK(empty.terms().size() == 1);
    CHECK(empty.terms().begin()->second == LaurentPoly(1));

    CHECK_THROWS_AS(llt::llt_fund(ShapeTuple::single_cells(std::vector<int>(11, 0))),
                    llt::BoundExceeded);
}

TEST_CASE("llt specialization") {
    XPoly one_cell = llt::llt_specialized(tuple("0"), 2);
    XPoly e1;
    e1[{1, 0}] = LaurentPoly(1);
    e1[{0, 1}] = LaurentPoly(1);
    CHECK(one_cell == e1);

    XPoly vert = llt::llt_specialized(tuple("V"), 2);
    XPoly e2;
    e2[{1, 1}] = LaurentPoly(1);
    CHECK(vert == e2);

    XPoly two = llt::llt_specialized(ShapeTuple::single_cells({0, 0}), 2);
    XPoly e3;
    e3[{2, 0}] = LaurentPoly(1);
    e3[{0, 2}] = LaurentPoly(1);
    e3[{1, 1}] = LaurentPoly(1) + LaurentPoly::q_power(1);
    CHECK(two == e3);
}

TEST_CASE("llt specialization agrees with the fundamental expansion") {
    for (const auto& td : all_two_diag(3)) {
        ShapeTuple t = td.shape();
        if (t.n() > 6) continue;
        CHECK(llt::llt_specialized(t, t.n()) == llt::specialize_fund(llt::llt_fund(t), t.n()));
    }
}

TEST_CASE("llt symmetry, positivity, and q=1 factorization") {
    for (const auto& td : all_two_diag(3)) {
        ShapeTuple t = td.shape();
        SchurVector v = llt::llt_schur(t);  // throws NotSymmetric on failure
        for (const auto& [lam, c] : v.terms()) {
            CHECK(c.is_nonneg());
            CHECK(c.min_degree() >= 0);
        }
        SchurVector product = llt::schur_of(Partition());
        for (const auto& comp : t.components()) {
            SchurVector factor = llt::llt_schur(ShapeTuple({comp}));
            product = llt::schur_multiply(product, factor);
        }
        CHECK(at_q1(v) == product);
    }
}

TEST_CASE("splitting a pair of cells into dominoes") {
    auto [h0, v0, eps0] = llt::split_cells(ShapeTuple::single_cells({0, 1}), 0);
    CHECK(eps0 == 0);
    CHECK(h0 == tuple("H"));
    CHECK(v0 == tuple("V"));
    auto [h1, v1, eps1] = llt::split_cells(ShapeTuple::single_cells({1, 0}), 0);
    CHECK(eps1 == 1);
    CHECK(h1 == tuple("H"));
    CHECK(v1 == tuple("V"));

    CHECK_THROWS_AS(llt::split_cells(ShapeTuple::single_cells({0, 0}), 0), llt::InvalidInput);
    CHECK_THROWS_AS(llt::split_cells(tuple("HV"), 0), llt::InvalidInput);

    // llt(t) = llt(horizontal merge) + q^eps llt(vertical merge), with any
    // company around the split pair.
    for (const char* w : {"01", "10", "H01", "01V", "110", "010", "V10H"}) {
        ShapeTuple t = tuple(w);
        for (int i = 0; i + 1 < t.d(); ++i) {
            const auto& a = t.components()[i];
            const auto& b = t.components()[i + 1];
            if (a.cells.size() != 1 || b.cells.size() != 1) continue;
            int ca = a.content(a.cells[0]), cb = b.content(b.cells[0]);
            if (ca + cb != 1) continue;
            auto split = llt::split_cells(t, i);
            SchurVector rhs = llt::llt_schur(split.horizontal_merge) +
                              llt::llt_schur(split.vertical_merge).scaled(LaurentPoly::q_power(split.eps));
            CHECK(llt::llt_schur(t) == rhs);
        }
    }
}

TEST_CASE("domino swap bijection") {
    // Entries a > d > c > b on (vertical, horizontal) stay put under the swap:
    // both sides carry exactly two inversions.
    ShapeTuple vh = tuple("VH");
    StandardFilling T{1, 4, 2, 3};  // vertical top 1 / bottom 4, horizontal 2 3
    CHECK(llt::inv_d(vh, T) == 2);
    StandardFilling image = llt::swap_psi(vh, 0, T);
    CHECK(image == StandardFilling{2, 3, 1, 4});
    CHECK(llt::inv_d(llt::swapped_components(vh, 0), image) == 2);

    CHECK_THROWS_AS(llt::swap_psi(tuple("00"), 0, {1, 2}), llt::InvalidInput);
    CHECK_THROWS_AS(llt::swap_psi(tuple("HH"), 0, {1, 2, 3, 4}), llt::InvalidInput);

    // Exhaustive over tuples holding an adjacent (H,V) or (V,H) pair.
    for (const auto& td : all_two_diag(3)) {
        ShapeTuple t = td.shape();
        for (int i = 0; i + 1 < t.d(); ++i) {
            auto p0 = td.pieces()[i], p1 = td.pieces()[i + 1];
            bool hv = p0 == TwoDiagTuple::Piece::H && p1 == TwoDiagTuple::Piece::V;
            bool vh2 = p0 == TwoDiagTuple::Piece::V && p1 == TwoDiagTuple::Piece::H;
            if (!hv && !vh2) continue;

            ShapeTuple swapped = llt::swapped_components(t, i);
            int start = 0;
            for (int k = 0; k < i; ++k)
                start += static_cast<int>(t.components()[k].cells.size());

            std::set<StandardFilling> images;
            for (const auto& T2 : all_fillings(t)) {
                StandardFilling img = llt::swap_psi(t, i, T2);
                CHECK(llt::is_standard_filling(swapped, img));
                CHECK(llt::inv_d(swapped, img) == llt::inv_d(t, T2));
                for (int c = 0; c < t.n(); ++c)
                    if (c < start || c >= start + 4) CHECK(img[c] == T2[c]);
                images.insert(img);
            }
            // Injective onto all fillings of the swapped tuple.
            CHECK(images.size() == all_fillings(swapped).size());
            CHECK(llt::llt_schur(t) == llt::llt_schur(swapped));
        }
    }
}

TEST_CASE("two diagonal tuples") {
    TwoDiagTuple td = TwoDiagTuple::parse("H0V1");
    CHECK(td.str() == "H0V1");
    CHECK(td.d() == 4);
    CHECK(td.n() == 6);
    CHECK(td.content_one_count() == 3);  // H, V, S1
    CHECK(td.vertical_count() == 1);
    CHECK(td.conjugated().str() == "0V1H");
    CHECK(td.conjugated().conjugated() == td);
    CHECK_THROWS_AS(TwoDiagTuple::parse("HX"), llt::InvalidInput);

    CHECK(llt::domino_tuple({0}, false).str() == "H");
    CHECK(llt::domino_tuple({1, 0}, false).str() == "VH");
    CHECK(llt::domino_tuple({1}, true).str() == "V0");
    CHECK(llt::domino_tuple({1, 0}, false).n() == 4);
    CHECK_THROWS_AS(llt::domino_tuple({2}, false), llt::InvalidInput);
}

TEST_CASE("conjugating a tuple preserves llt") {
    for (const auto& td : all_two_diag(3)) {
        ShapeTuple t = td.shape();
        CHECK(llt::llt_schur(t) == llt::llt_schur(td.conjugated().shape()));
    }
}
