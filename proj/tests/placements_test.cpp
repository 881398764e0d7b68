#include "normord/placements.hpp"
#include "normord/classical.hpp"
#include "normord/compositions.hpp"
#include "normord/errors.hpp"

#include <doctest.h>

#include <set>

using namespace normord;

namespace {

CoeffPoly P(const char* text, int s = 1) { return CoeffPoly::parse(text, s); }

std::string violatedRule(const Board& b, const StaticOrePlacement& p) {
    try {
        validateStatic(b, p);
    } catch (const ConstraintViolation& e) {
        return e.rule();
    }
    return "";
}

mpz_class atOne(const CoeffPoly& p) {
    std::vector<mpq_class> alpha(static_cast<std::size_t>(p.ringS()) + 1, 1);
    return mpz_class(p.evaluate(1, alpha));
}

}  // namespace

TEST_CASE("placement types") {
    PlacementType k({1, 0, 2});
    CHECK(k.s() == 2);
    CHECK(k.total() == 3);
    CHECK(k.creationSum() == 1);
    CHECK(k.toString() == "(1,0,2)");
    CHECK(k.minus(2)->toString() == "(1,0,1)");
    CHECK_FALSE(k.minus(1).has_value());
    CHECK(k.plus(1).toString() == "(1,1,2)");
    CHECK(k.alphaMonomial() == P("alpha0*alpha2^2", 2));
    CHECK(placementTypesUpTo(1, 2).size() == 6);
    CHECK_THROWS_AS(PlacementType({1, -1}), DomainError);
}

TEST_CASE("weak compositions") {
    for (int parts = 1; parts <= 4; ++parts) {
        for (int total = 0; total <= 6; ++total) {
            auto cs = weakCompositions(parts, total);
            CHECK(cs.size() == binomial(total + parts - 1, parts - 1));
            std::set<PlacementType> distinct(cs.begin(), cs.end());
            CHECK(distinct.size() == cs.size());
        }
    }
    // k = 2 rooks, creation sum 0 with s = 2: (1,0,1) and (0,2,0).
    CHECK(weakCompositions(3, 2, 0).size() == 2);
}

TEST_CASE("static placement rules") {
    const Board b({1, 1, 2, 3, 3});
    CHECK(violatedRule(b, {{{0, 1}}, {}}) == "cell-outside-board");
    CHECK(violatedRule(b, {{{3, 0}, {4, 0}}, {}}) == "rook-row-conflict");
    CHECK(violatedRule(b, {{{3, 0}, {3, 1}}, {}}) == "rook-column-conflict");
    CHECK(violatedRule(b, {{}, {{3, 0}, {3, 2}}}) == "file-column-conflict");
    CHECK(violatedRule(b, {{{3, 0}}, {{3, 2}}}) == "file-rook-column-conflict");
    CHECK(violatedRule(b, {{{1, 0}}, {{3, 0}}}) == "file-left-of-rook");
    // A file to the right of a rook in its row is allowed, as are files sharing a row.
    CHECK(violatedRule(b, {{{3, 0}}, {{1, 0}, {0, 0}}}) == "");
    CHECK_THROWS_AS(validateStatic(Board({2, 1}), {}), UnsupportedBoard);
}

TEST_CASE("box classification of a rook placement") {
    const Board b({1, 1, 2, 3, 3});
    StaticOrePlacement p{{{1, 0}, {3, 2}}, {}};
    BoxClassification cls = classifyStatic(b, p);
    CHECK(cls.cancelledCount == 5);
    CHECK(cls.emptyCount == 3);
    CHECK(cls.weight == P("q^3*alpha0^2"));
    CHECK(renderClassification(b, cls) == "x  x  x  R0 .\n.  x  .\nx  R0\n");
}

TEST_CASE("box classification of a mixed placement") {
    const Board b({1, 1, 2, 3, 5, 6, 6});
    StaticOrePlacement p{{{5, 2}, {4, 4}}, {{3, 2}, {2, 0}, {1, 0}}};
    BoxClassification cls = classifyStatic(b, p);
    CHECK(cls.cancelledCount == 11);
    CHECK(cls.emptyCount == 8);
    CHECK(cls.weight == P("q^8*alpha0^2*alpha1^3"));
}

TEST_CASE("J_3 carries 13 mixed placements") {
    const Board j3 = staircase(3);
    CHECK(countStaticPlacements(j3) == 13);
    mpz_class total = 0;
    for (const auto& [kl, poly] : allStaticNumbers(j3)) total += atOne(poly);
    CHECK(total == 13);
    CHECK(mixedNumberStatic(j3, 1, 1) == P("2*alpha0*alpha1 + q*alpha0*alpha1"));
    CHECK(mixedNumberStatic(j3, 0, 0) == P("q^3"));
}

TEST_CASE("weight-2 rooks on J_3") {
    const Board j3 = staircase(3);
    const PlacementType one({0, 0, 1}), two({0, 0, 2});
    CHECK(mixedNumberSequential(j3, one) == P("q*alpha2 + q^2*alpha2 + q^3*alpha2", 2));
    CHECK(mixedNumberSequential(j3, two) == P("alpha2^2 + q*alpha2^2 + q^2*alpha2^2", 2));
    CHECK(mixedNumberDP(j3, one).value == mixedNumberSequential(j3, one));
    CHECK(mixedNumberDP(j3, two).value == mixedNumberSequential(j3, two));
    CHECK(mixedNumberSequentialMemo(j3, two) == mixedNumberSequential(j3, two));
}

TEST_CASE("sequential placements record their decisions") {
    std::size_t count = 0;
    forEachSequentialPlacement(staircase(3), 1, -1, [&](const SequentialPlacement& sp) {
        ++count;
        CHECK(sp.decisions.size() == 3);
        CHECK(sp.type.s() == 1);
    });
    CHECK(count == 13);
}

TEST_CASE("staircase rook numbers are Stirling numbers at q=1") {
    for (int n = 0; n <= 8; ++n) {
        auto r = rookNumbers(staircase(n), 0);
        for (int k = 0; k < n; ++k) CHECK(atOne(r[static_cast<std::size_t>(k)]) == stirling2(n, n - k));
    }
}

TEST_CASE("three engines agree on assorted Ferrers boards") {
    for (const auto& hs : std::vector<std::vector<int>>{{0, 1, 2, 3}, {2, 2, 2}, {1, 1, 2, 3, 3}, {0, 0, 3}, {3, 4}}) {
        const Board b(hs);
        auto dp = allMixedNumbersDP(b, 1);
        CHECK_FALSE(dp.outOfModel);
        auto seq = allSequentialNumbers(b, 1);
        CHECK(dp.numbers == seq);
        for (const auto& [kl, poly] : allStaticNumbers(b)) CHECK(seq.at(PlacementType::ore(kl.first, kl.second)) == poly);
    }
}

TEST_CASE("recurrence on non-Ferrers boards is flagged") {
    const Board b({2, 0});
    DpResult r = mixedNumberDP(b, PlacementType::ore(0, 0));
    CHECK(r.outOfModel);
    CHECK(r.value == P("q^2"));
    CHECK_THROWS_AS(mixedNumberDP(b, PlacementType({2})), OutOfModel);
    CHECK_THROWS_AS(mixedNumberStatic(b, 1, 0), UnsupportedBoard);
}
