#include "normord/rewriter.hpp"
#include "normord/errors.hpp"

#include <doctest.h>

#include <random>

using namespace normord;

namespace {

CoeffPoly P(const char* text, int s = 1) { return CoeffPoly::parse(text, s); }

Word randomWord(std::mt19937_64& rng, std::size_t maxLen) {
    std::string s(1 + rng() % maxLen, 'Y');
    for (auto& c : s) {
        if (rng() & 1) c = 'X';
    }
    return Word(s);
}

}  // namespace

TEST_CASE("the defining relation") {
    NormalForm xy = normalOrder(Word("XY"), 1);
    NormalForm expected(1);
    expected.addTerm(1, 1, P("q"));
    expected.addTerm(1, 0, P("alpha1"));
    expected.addTerm(0, 0, P("alpha0"));
    CHECK(equalNormalForms(xy, expected).equal);
    CHECK(xy.toPretty() == "q*YX + alpha1*Y + alpha0");

    NormalForm xy0 = normalOrder(Word("XY"), 0);
    CHECK(xy0.toPretty() == "q*YX + alpha0");
    CHECK(normalOrder(Word("XY"), 3).toPretty() == "alpha3*Y^3 + alpha2*Y^2 + q*YX + alpha1*Y + alpha0");
}

TEST_CASE("words already in normal order are fixed") {
    CHECK(normalOrder(Word("YYX"), 2).toPretty() == "Y^2X");
    CHECK(normalOrder(Word(), 1).toPretty() == "1");
    CHECK(equalNormalForms(normalOrder(Word(), 0), NormalForm::identity(0)).equal);
}

TEST_CASE("(YX)^3 with s = 1") {
    NormalForm nf = normalOrder(parseWord("(YX)^3"), 1);
    CHECK(nf.coefficient(3, 3) == P("q^3"));
    CHECK(nf.coefficient(3, 2) == P("q*alpha1 + 2*q^2*alpha1"));
    CHECK(nf.coefficient(3, 1) == P("alpha1^2 + q*alpha1^2"));
    CHECK(nf.coefficient(2, 2) == P("2*q*alpha0 + q^2*alpha0"));
    CHECK(nf.coefficient(2, 1) == P("2*alpha0*alpha1 + q*alpha0*alpha1"));
    CHECK(nf.coefficient(1, 1) == P("alpha0^2"));
    CHECK(nf.terms().size() == 6);
}

TEST_CASE("X^2 Y by hand") {
    // X(qYX + a1 Y + a0) = q(qYX + a1Y + a0)X + a1(qYX + a1Y + a0) + a0 X
    NormalForm nf = normalOrder(Word("XXY"), 1);
    CHECK(nf.coefficient(1, 2) == P("q^2"));
    CHECK(nf.coefficient(1, 1) == P("2*q*alpha1"));
    CHECK(nf.coefficient(0, 1) == P("alpha0 + q*alpha0"));
    CHECK(nf.coefficient(1, 0) == P("alpha1^2"));
    CHECK(nf.coefficient(0, 0) == P("alpha0*alpha1"));
    CHECK(nf.terms().size() == 5);
}

TEST_CASE("redex choice does not change the result") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        const Word w = randomWord(rng, 9);
        const int s = i % 4;
        NormalForm a = normalOrder(w, s, {RedexStrategy::Rightmost, 0});
        NormalForm b = normalOrder(w, s, {RedexStrategy::Leftmost, 0});
        NormalForm c = normalOrder(w, s, {RedexStrategy::Random, rng()});
        CHECK(equalNormalForms(a, b).equal);
        CHECK(equalNormalForms(a, c).equal);
    }
}

TEST_CASE("ordering a prefix first gives the same result") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const Word u = randomWord(rng, 5), v = randomWord(rng, 5);
        const int s = i % 3;
        MixedExpression e(s);
        const NormalForm prefix = normalOrder(u, s);
        for (const auto& [key, c] : prefix.terms()) {
            Word mono = Word::power('Y', static_cast<std::size_t>(key.first)) + Word::power('X', static_cast<std::size_t>(key.second));
            e.add(mono + v, c);
        }
        CHECK(equalNormalForms(normalOrderExpression(e, s), normalOrder(u + v, s)).equal);
    }
}

TEST_CASE("binomial expansion lists all words") {
    MixedExpression e = binomialExpansion(2, 1);
    CHECK(e.terms().size() == 4);
    NormalForm nf = normalOrderExpression(e, 1);
    CHECK(nf.toPretty() == "Y^2 + (1 + q)*YX + alpha1*Y + X^2 + alpha0");
    CHECK_THROWS(binomialExpansion(25, 1));
}

TEST_CASE("normal form comparison explains the first difference") {
    NormalForm a = normalOrder(Word("XY"), 1), b = normalOrder(Word("YX"), 1);
    auto cmp = equalNormalForms(a, b);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.describe() == "differ at YX: 1 * q vs 1");
    CHECK_THROWS_AS(equalNormalForms(a, normalOrder(Word("XY"), 2)), ConfigError);
}
