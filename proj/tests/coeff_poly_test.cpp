#include "normord/coeff_poly.hpp"
#include "normord/classical.hpp"
#include "normord/errors.hpp"

#include <doctest.h>

#include <random>

using namespace normord;

namespace {

CoeffPoly P(const char* text, int s = 1) { return CoeffPoly::parse(text, s); }

CoeffPoly randomPoly(std::mt19937_64& rng, int s) {
    CoeffPoly p(s);
    const int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
        Exponents e(static_cast<std::size_t>(s) + 2);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
        p.addTerm(e, mpz_class(static_cast<long>(rng() % 11) - 5));
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
    CoeffPoly onePlusQ = CoeffPoly::one(1) + CoeffPoly::qPower(1, 1);
    CHECK(onePlusQ * onePlusQ == P("1 + 2*q + q^2"));
    CHECK(onePlusQ - onePlusQ == CoeffPoly::zero(1));
    CHECK((onePlusQ * CoeffPoly::alpha(1, 0)).toPretty() == "alpha0 + q*alpha0");
    CHECK(-onePlusQ == P("-1 - q"));
    CHECK(onePlusQ.shiftQ(2) == P("q^2 + q^3"));
    CHECK(onePlusQ.qDegree() == 1);
    CHECK_THROWS_AS(onePlusQ + CoeffPoly::one(2), ConfigError);
}

TEST_CASE("canonical text orders monomials by degree, then lexicographically larger first") {
    CoeffPoly p = CoeffPoly::alpha(1, 0) + CoeffPoly::qPower(1, 1) + CoeffPoly::one(1) + CoeffPoly::monomial(1, 3, 2, {1, 0});
    CHECK(p.toString() == "1 + 1 * q + 1 * alpha0 + 3 * q^2 * alpha0");
    CHECK(CoeffPoly::zero(2).toString() == "0");
    CHECK(CoeffPoly::monomial(2, -4, 0, {0, 2, 1}).toString() == "-4 * alpha1^2 * alpha2");
}

TEST_CASE("parse inverts both text forms") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const int s = static_cast<int>(rng() % 4);
        CoeffPoly p = randomPoly(rng, s);
        CHECK(CoeffPoly::parse(p.toString(), s) == p);
        CHECK(CoeffPoly::parse(p.toPretty(), s) == p);
    }
    CHECK_THROWS_AS(CoeffPoly::parse("q +", 1), ParseError);
    CHECK_THROWS_AS(CoeffPoly::parse("alpha3", 1), ParseError);
}

TEST_CASE("q-integers, factorials and Gaussian binomials") {
    CHECK(qInt(0) == CoeffPoly::zero(1));
    CHECK(qInt(3) == P("1 + q + q^2"));
    CHECK_THROWS_AS(qInt(-1), DomainError);
    CHECK(qFactorial(3) == P("1 + 2*q + 2*q^2 + q^3"));
    CHECK(qBinomial(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK_THROWS_AS(qBinomial(2, 3), DomainError);
}

TEST_CASE("Gaussian binomials satisfy the second q-Pascal rule and reduce to binomials") {
    for (int m = 1; m <= 12; ++m) {
        for (int k = 1; k < m; ++k) {
            CHECK(qBinomial(m, k) == qBinomial(m - 1, k - 1).shiftQ(static_cast<unsigned>(m - k)) + qBinomial(m - 1, k));
        }
        for (int k = 0; k <= m; ++k) {
            CHECK(qBinomial(m, k).evaluate(1, std::vector<mpq_class>{0, 0}) == binomial(m, k));
            // [m]!/([k]![m-k]!) as a product check.
            CHECK(qBinomial(m, k) * qFactorial(k) * qFactorial(m - k) == qFactorial(m));
        }
    }
}

TEST_CASE("evaluation and partial specialization") {
    CoeffPoly p = P("alpha0 + q*alpha0 + 3*alpha1^2");
    CHECK(p.evaluate(mpq_class(1, 2), std::vector<mpq_class>{2, 1}) == mpq_class(6));
    CHECK_THROWS_AS(p.evaluate(1, std::vector<mpq_class>{1}), ConfigError);

    std::vector<std::optional<mpz_class>> alpha{std::nullopt, mpz_class(0)};
    CHECK(p.specialize(std::nullopt, alpha) == P("alpha0 + q*alpha0"));
    CHECK(p.specialize(mpz_class(2), {}) == P("3*alpha0 + 3*alpha1^2"));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const int s = static_cast<int>(rng() % 3);
        CoeffPoly a = randomPoly(rng, s), b = randomPoly(rng, s);
        mpq_class q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        std::vector<mpq_class> alpha;
        for (int j = 0; j <= s; ++j) alpha.emplace_back(static_cast<long>(rng() % 5) - 2);
        CHECK((a * b).evaluate(q, alpha) == a.evaluate(q, alpha) * b.evaluate(q, alpha));
        CHECK((a + b).evaluate(q, alpha) == a.evaluate(q, alpha) + b.evaluate(q, alpha));
    }
}

TEST_CASE("changing the ring keeps or refuses exponents") {
    CoeffPoly p = P("q*alpha0");
    CHECK(p.withRing(3).toString() == "1 * q * alpha0");
    CHECK(p.withRing(0).withRing(1) == p);
    CHECK_THROWS(P("alpha1").withRing(0));
}
