#include "llt/kschur.hpp"
#include "llt/unicellular.hpp"

#include <doctest.h>

#include <vector>

using llt::LaurentPoly;
using llt::Partition;
using llt::SchurVector;
using llt::TwoSchurVector;

namespace {

SchurVector sv(std::initializer_list<std::pair<std::vector<int>, LaurentPoly>> terms) {
    SchurVector out;
    for (const auto& [parts, c] : terms) out.add_term(Partition(parts), c);
    return out;
}

SchurVector at_q0(const SchurVector& v) {
    SchurVector out;
    for (const auto& [lam, c] : v.terms()) out.add_term(lam, LaurentPoly(c.evaluate(0)));
    return out;
}

const LaurentPoly one(1);
const LaurentPoly q = LaurentPoly::q_power(1);

std::vector<Partition> two_bounded_up_to(int maxdeg) {
    std::vector<Partition> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& lam : Partition::all_of(d))
            if (lam.part(1) <= 2) out.push_back(lam);
    return out;
}

}  // namespace

TEST_CASE("creation operators") {
    for (int a = 1; a <= 4; ++a)
        CHECK(llt::creation_S(a, llt::schur_of(Partition())) == llt::schur_of(Partition({a})));
    CHECK(llt::creation_S(0, llt::schur_of(Partition())) == llt::schur_of(Partition()));
    CHECK(llt::creation_S(1, llt::schur_of(Partition({1}))) == llt::schur_of(Partition({1, 1})));

    // Prepending a row at least as long as the first builds the Schur function.
    for (const auto& lam : Partition::all_of(4))
        for (int a = lam.part(1); a <= lam.part(1) + 2; ++a) {
            std::vector<int> parts{a};
            for (int p : lam.parts()) parts.push_back(p);
            CHECK(llt::creation_S(a, llt::schur_of(lam)) == llt::schur_of(Partition(parts)));
        }
}

TEST_CASE("jing operators") {
    for (int a = 1; a <= 4; ++a)
        CHECK(llt::jing_B(a, llt::schur_of(Partition())) == llt::schur_of(Partition({a})));
    CHECK(llt::jing_B(0, llt::schur_of(Partition())) == llt::schur_of(Partition()));
    CHECK(llt::jing_B(0, llt::schur_of(Partition({1}))) ==
          llt::schur_of(Partition({1})).scaled(q));
    CHECK(llt::jing_B(1, llt::schur_of(Partition({1}))) ==
          sv({{{1, 1}, one}, {{2}, q}}));

    // At q = 0 the Jing operator collapses to the creation operator.
    for (int d = 0; d <= 5; ++d)
        for (const auto& lam : Partition::all_of(d))
            for (int a = -1; a <= 3; ++a)
                CHECK(at_q0(llt::jing_B(a, llt::schur_of(lam))) ==
                      llt::creation_S(a, llt::schur_of(lam)));
}

TEST_CASE("hall littlewood polynomials") {
    CHECK(llt::hall_littlewood(Partition()) == llt::schur_of(Partition()));
    CHECK(llt::hall_littlewood(Partition({1})) == llt::schur_of(Partition({1})));
    CHECK(llt::hall_littlewood(Partition({1, 1})) == sv({{{1, 1}, one}, {{2}, q}}));
    CHECK(llt::hall_littlewood(Partition({1, 1, 1})) ==
          sv({{{1, 1, 1}, one},
              {{2, 1}, q + LaurentPoly::q_power(2)},
              {{3}, LaurentPoly::q_power(3)}}));

    for (int d = 0; d <= 7; ++d)
        for (const auto& lam : Partition::all_of(d))
            CHECK(at_q0(llt::hall_littlewood(lam)) == llt::schur_of(lam));

    // Column case: unitriangular with q-nonnegative coefficients.
    for (int n = 1; n <= 7; ++n) {
        SchurVector h = llt::hall_littlewood(Partition(std::vector<int>(n, 1)));
        CHECK(h.terms().rbegin()->first == Partition(std::vector<int>(n, 1)));
        CHECK(h.terms().rbegin()->second == one);
        for (const auto& [mu, c] : h.terms()) CHECK(c.is_nonneg());
    }
}

TEST_CASE("rectangle operators") {
    const SchurVector unit = llt::schur_of(Partition());
    CHECK(llt::rect_B(Partition({1}), unit) == llt::schur_of(Partition({1})));
    CHECK(llt::rect_B(Partition({2}), unit) == llt::schur_of(Partition({2})));
    CHECK(llt::rect_B(Partition({1, 1}), unit) == llt::schur_of(Partition({1, 1})));
    CHECK_THROWS_AS(llt::rect_B(Partition({2, 2}), unit), llt::InvalidInput);
}

TEST_CASE("splitting into hook-bounded pieces") {
    using P = Partition;
    CHECK(llt::k_split(P({3, 2, 2, 2, 1, 1}), 3) ==
          std::vector<P>{P({3}), P({2, 2}), P({2, 1}), P({1})});
    CHECK(llt::k_split(P({2, 1, 1}), 2) == std::vector<P>{P({2}), P({1, 1})});
    CHECK(llt::k_split(P({1}), 2) == std::vector<P>{P({1})});
    CHECK(llt::k_split(P(), 2).empty());
    CHECK_THROWS_AS(llt::k_split(P({3}), 2), llt::InvalidInput);

    for (int k = 2; k <= 3; ++k)
        for (int d = 1; d <= 8; ++d)
            for (const auto& lam : Partition::all_of(d)) {
                if (lam.part(1) > k) continue;
                auto pieces = llt::k_split(lam, k);
                std::vector<int> glued;
                for (size_t i = 0; i < pieces.size(); ++i) {
                    int hook = pieces[i].part(1) + pieces[i].length() - 1;
                    if (i + 1 < pieces.size()) {
                        CHECK(hook == k);
                    } else {
                        CHECK(hook <= k);
                    }
                    for (int p : pieces[i].parts()) glued.push_back(p);
                }
                CHECK(Partition(glued) == lam);
            }
}

TEST_CASE("two schur functions") {
    CHECK(llt::kschur2(Partition({2})) == llt::schur_of(Partition({2})));
    CHECK(llt::kschur2(Partition({1, 1})) == llt::schur_of(Partition({1, 1})));
    CHECK(llt::kschur2(Partition({2, 1})) == sv({{{2, 1}, one}, {{3}, q}}));
    CHECK(llt::kschur2(Partition({1, 1, 1})) == sv({{{1, 1, 1}, one}, {{2, 1}, q}}));
    CHECK(llt::kschur2(Partition({2, 2})) ==
          sv({{{2, 2}, one}, {{3, 1}, q}, {{4}, LaurentPoly::q_power(2)}}));
    CHECK(llt::kschur2(Partition({2, 1, 1})) == sv({{{2, 1, 1}, one}, {{3, 1}, q}}));
    CHECK(llt::kschur2(Partition({2, 1})) == llt::gen_HL({Partition({2}), Partition({1})}));
    CHECK_THROWS_AS(llt::kschur2(Partition({3})), llt::InvalidInput);

    for (const auto& lam : two_bounded_up_to(8)) {
        SchurVector k = llt::kschur2(lam);
        CHECK(at_q0(k) == llt::schur_of(lam));
        CHECK(k.terms().rbegin()->first == lam);
        for (const auto& [mu, c] : k.terms()) {
            CHECK(c.is_nonneg());
            if (!(mu == lam)) {
                CHECK(mu.dominates(lam));
                CHECK_FALSE(lam.dominates(mu));
            }
        }
    }
}

TEST_CASE("split basis and projections") {
    for (int n = 0; n <= 8; ++n) {
        const llt::SplitBasis& basis = llt::split_basis(n);
        CHECK(basis.n() == n);
        for (size_t p = 0; p < basis.index().size(); ++p) {
            // Unitriangular: own index is the canonically last term, coefficient one.
            CHECK(basis.expansions()[p].terms().rbegin()->first == basis.index()[p]);
            CHECK(basis.expansions()[p].terms().rbegin()->second == one);
            // Coordinates of a basis element are a unit vector.
            auto coords = basis.coordinates(basis.expansions()[p]);
            for (size_t r = 0; r < coords.size(); ++r)
                CHECK(coords[r] == (r == p ? one : LaurentPoly()));
            // Projection keeps or kills a basis element by its first part.
            for (int i = 0; i <= 2; ++i) {
                SchurVector proj = llt::project_T2(i, basis.expansions()[p], basis);
                if (basis.index()[p].part(1) == i) {
                    CHECK(proj == basis.expansions()[p]);
                } else {
                    CHECK(proj.is_zero());
                }
            }
        }
    }
    CHECK_THROWS_AS(llt::split_basis(3).coordinates(llt::schur_of(Partition({3}))),
                    llt::SolveError);

    // Filtering a mixed combination keeps exactly the selected coordinates.
    SchurVector mix = llt::kschur2(Partition({2, 2})).scaled(q) +
                      llt::kschur2(Partition({2, 1, 1})) +
                      llt::kschur2(Partition({1, 1, 1, 1})).scaled(LaurentPoly(3));
    CHECK(llt::project_T2(2, mix, llt::split_basis(4)) ==
          llt::kschur2(Partition({2, 2})).scaled(q) + llt::kschur2(Partition({2, 1, 1})));
    CHECK(llt::project_T2(1, mix, llt::split_basis(4)) ==
          llt::kschur2(Partition({1, 1, 1, 1})).scaled(LaurentPoly(3)));
}

TEST_CASE("recursive two schur definition agrees") {
    for (const auto& lam : two_bounded_up_to(8))
        CHECK(llt::kschur2_def53(lam) == llt::kschur2(lam));
}

TEST_CASE("two schur expansion") {
    TwoSchurVector e = llt::two_schur_expand(llt::kschur2(Partition({2, 1})).scaled(q));
    CHECK(e.terms().size() == 1);
    CHECK(e.terms().begin()->first == Partition({2, 1}));
    CHECK(e.terms().begin()->second == q);

    for (const auto& lam : two_bounded_up_to(6)) {
        TwoSchurVector unit;
        unit.add_term(lam, one);
        CHECK(llt::two_schur_expand(llt::kschur2(lam)) == unit);
    }
    SchurVector mix = llt::kschur2(Partition({2, 2, 1})).scaled(q + LaurentPoly(2)) +
                      llt::kschur2(Partition({1, 1, 1, 1, 1}));
    CHECK(llt::two_schur_to_schur(llt::two_schur_expand(mix)) == mix);
    CHECK_THROWS_AS(llt::two_schur_expand(llt::schur_of(Partition({4}))), llt::SolveError);
}

TEST_CASE("worked example in the two schur basis") {
    TwoSchurVector L = llt::two_schur_expand(llt::L_of(6, Partition({1, 1})));
    TwoSchurVector expect;
    expect.add_term(Partition({1, 1, 1, 1, 1, 1}), one);
    expect.add_term(Partition({2, 1, 1, 1, 1}), LaurentPoly::q_power(4) + LaurentPoly::q_power(3, 2));
    expect.add_term(Partition({2, 2, 1, 1}), LaurentPoly::q_power(6, 2) + LaurentPoly::q_power(5));
    expect.add_term(Partition({2, 2, 2}), LaurentPoly::q_power(7));
    CHECK(L == expect);
    CHECK(L.str() == "k[1,1,1,1,1,1] + (q^4+2q^3)k[2,1,1,1,1] + (2q^6+q^5)k[2,2,1,1] + q^7k[2,2,2]");
}

TEST_CASE("rectangle recursion") {
    CHECK(llt::krec_verify(1, Partition(), Partition()));
    CHECK(llt::krec_verify(2, Partition(), Partition({1})));
    CHECK(llt::krec_verify(1, Partition({2}), Partition({1})));
    CHECK_THROWS_AS(llt::krec_verify(1, Partition({1}), Partition()), llt::InvalidInput);
    CHECK_THROWS_AS(llt::krec_verify(3, Partition(), Partition()), llt::InvalidInput);
    CHECK_THROWS_AS(llt::krec_verify(2, Partition(), Partition({3})), llt::InvalidInput);
}
