#include "normord/normal_form.hpp"

#include "normord/errors.hpp"

namespace normord {

NormalForm NormalForm::identity(int s) {
    NormalForm nf(s);
    nf.addTerm(0, 0, CoeffPoly::one(s));
    return nf;
}

void NormalForm::addTerm(int y, int x, const CoeffPoly& c) {
    if (c.ringS() != s_) throw ConfigError("normal form ring s=" + std::to_string(s_) + " given coefficient from ring s=" + std::to_string(c.ringS()));
    if (c.isZero()) return;
    if (y < 0 || x < 0) throw DomainError("normal form exponents must be nonnegative");
    auto [it, inserted] = terms_.try_emplace({y, x}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

CoeffPoly NormalForm::coefficient(int y, int x) const {
    auto it = terms_.find({y, x});
    return it == terms_.end() ? CoeffPoly(s_) : it->second;
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
    if (o.s_ != s_) throw ConfigError("normal form ring mismatch");
    for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, c);
    return *this;
}

NormalForm NormalForm::scaled(const CoeffPoly& c) const {
    return mapCoefficients([&](const CoeffPoly& p) { return p * c; });
}

NormalForm NormalForm::mapCoefficients(const std::function<CoeffPoly(const CoeffPoly&)>& f) const {
    NormalForm out(s_);
    for (const auto& [k, c] : terms_) out.addTerm(k.first, k.second, f(c));
    return out;
}

NormalForm NormalForm::specialize(std::optional<mpz_class> q, std::span<const std::optional<mpz_class>> alpha) const {
    return mapCoefficients([&](const CoeffPoly& p) { return p.specialize(q, alpha); });
}

std::string monomialText(int y, int x) {
    std::string out;
    if (y > 0) out += y == 1 ? "Y" : "Y^" + std::to_string(y);
    if (x > 0) out += x == 1 ? "X" : "X^" + std::to_string(x);
    return out.empty() ? "1" : out;
}

std::string NormalForm::toPretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.toPretty();
        std::string mono = monomialText(k.first, k.second);
        bool single = c.size() == 1 && coeff.find(' ') == std::string::npos;
        if (mono == "1") {
            out += single ? coeff : "(" + coeff + ")";
        } else if (coeff == "1") {
            out += mono;
        } else {
            out += (single ? coeff : "(" + coeff + ")") + "*" + mono;
        }
    }
    return out;
}

std::string NormalFormComparison::describe() const {
    if (equal || !firstDifference) return "equal";
    const auto& d = *firstDifference;
    return "differ at " + monomialText(d.key.first, d.key.second) + ": " + d.lhs.toString() + " vs " + d.rhs.toString();
}

NormalFormComparison equalNormalForms(const NormalForm& a, const NormalForm& b) {
    if (a.ringS() != b.ringS()) throw ConfigError("cannot compare normal forms from rings s=" + std::to_string(a.ringS()) + " and s=" + std::to_string(b.ringS()));
    NormalFormComparison r;
    auto ia = a.terms().begin(), ib = b.terms().begin();
    TermKeyOrder before;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        NormalForm::Key key;
        if (ib == b.terms().end() || (ia != a.terms().end() && before(ia->first, ib->first))) {
            key = ia->first;
        } else {
            key = ib->first;
        }
        CoeffPoly ca = (ia != a.terms().end() && ia->first == key) ? ia->second : CoeffPoly(a.ringS());
        CoeffPoly cb = (ib != b.terms().end() && ib->first == key) ? ib->second : CoeffPoly(b.ringS());
        if (!(ca == cb)) {
            r.equal = false;
            r.firstDifference = NormalFormDifference{key, ca, cb};
            return r;
        }
        if (ia != a.terms().end() && ia->first == key) ++ia;
        if (ib != b.terms().end() && ib->first == key) ++ib;
    }
    return r;
}

}  // namespace normord
