#pragma once

#include "normord/coeff_poly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace normord {

/// Orders (y, x) keys with larger y first, then larger x first.
struct TermKeyOrder {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const { return a > b; }
};

/// Sum of c_{y,x} Y^y X^x with coefficients in the ring with parameter s.
class NormalForm {
public:
    using Key = std::pair<int, int>;  // (y exponent, x exponent)
    using Terms = std::map<Key, CoeffPoly, TermKeyOrder>;

    explicit NormalForm(int ringS = 1) : s_(ringS) {}

    static NormalForm identity(int s);

    int ringS() const { return s_; }
    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void addTerm(int y, int x, const CoeffPoly& c);
    /// Zero polynomial if the key is absent.
    CoeffPoly coefficient(int y, int x) const;

    NormalForm& operator+=(const NormalForm& o);
    NormalForm scaled(const CoeffPoly& c) const;
    /// Apply f to every coefficient, dropping those that become zero.
    NormalForm mapCoefficients(const std::function<CoeffPoly(const CoeffPoly&)>& f) const;
    NormalForm specialize(std::optional<mpz_class> q, std::span<const std::optional<mpz_class>> alpha) const;

    /// "c * Y^y X^x" terms in key order, e.g. "q^3*Y^3X^3 + (q + 2*q^2)*Y^2X".
    std::string toPretty() const;

    friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.s_ == b.s_ && a.terms_ == b.terms_; }

private:
    int s_;
    Terms terms_;
};

/// "Y^3X^2", "Y", "X^2" or "1".
std::string monomialText(int y, int x);

struct NormalFormDifference {
    NormalForm::Key key;
    CoeffPoly lhs;
    CoeffPoly rhs;
};

struct NormalFormComparison {
    bool equal = true;
    std::optional<NormalFormDifference> firstDifference;
    std::string describe() const;
};

/// Exact comparison; throws ConfigError on a ring mismatch.
NormalFormComparison equalNormalForms(const NormalForm& a, const NormalForm& b);

}  // namespace normord
