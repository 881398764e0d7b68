#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normord {

/// Exponent vector (q, alpha_0, ..., alpha_s).
using Exponents = std::vector<std::uint32_t>;

/// Graded order: lower total degree first; within a degree, the vector that
/// is lexicographically larger comes first (so q^2 precedes q*alpha0).
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in q and alpha_0..alpha_s over the integers.
///
/// The ring parameter s is fixed at construction. Mixing two different rings
/// throws ConfigError.
class CoeffPoly {
public:
    using Terms = std::map<Exponents, mpz_class, MonomialOrder>;

    explicit CoeffPoly(int ringS = 1);

    static CoeffPoly zero(int s) { return CoeffPoly(s); }
    static CoeffPoly one(int s) { return constant(s, 1); }
    static CoeffPoly constant(int s, const mpz_class& c);
    static CoeffPoly qPower(int s, unsigned e);
    static CoeffPoly alpha(int s, int j, unsigned e = 1);
    static CoeffPoly monomial(int s, const mpz_class& c, unsigned qExp,
                              const std::vector<unsigned>& alphaExps);

    int ringS() const { return s_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /// Adds c * (monomial with exponent vector e).
    void addTerm(const Exponents& e, const mpz_class& c);

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const CoeffPoly& o);
    CoeffPoly operator-() const;

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
        return a.s_ == b.s_ && a.terms_ == b.terms_;
    }

    /// Multiply by q^e.
    CoeffPoly shiftQ(unsigned e) const;
    CoeffPoly scaled(const mpz_class& c) const;

    /// Highest power of q appearing (0 for the zero polynomial).
    unsigned qDegree() const;

    mpq_class evaluate(const mpq_class& q, std::span<const mpq_class> alpha) const;

    /// Substitutes integer values for any subset of the variables; the rest
    /// stay symbolic. alpha may be empty (no alpha substituted) or of length s+1.
    CoeffPoly specialize(std::optional<mpz_class> q,
                         std::span<const std::optional<mpz_class>> alpha) const;

    /// Re-embeds into the ring with parameter newS. Fails if a nonzero
    /// exponent would be dropped.
    CoeffPoly withRing(int newS) const;

    /// Canonical text: "c * q^a * alpha0^e0 ..." joined by " + "; "0" if empty.
    std::string toString() const;
    /// Human-oriented form, e.g. "q + 2*q^2".
    std::string toPretty() const;

    static CoeffPoly parse(std::string_view text, int s);

private:
    void checkRing(const CoeffPoly& o) const;

    int s_;
    Terms terms_;
};

/// [n]_q = 1 + q + ... + q^(n-1).
CoeffPoly qInt(long n, int s = 1);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
CoeffPoly qFactorial(long n, int s = 1);
/// Gaussian binomial by the Pascal recurrence; k > m throws DomainError.
CoeffPoly qBinomial(long m, long k, int s = 1);

}  // namespace normord
