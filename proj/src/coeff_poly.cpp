#include "normord/coeff_poly.hpp"

#include "normord/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace normord {

namespace {

std::uint64_t totalDegree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::string varName(std::size_t idx) {
    return idx == 0 ? std::string("q") : "alpha" + std::to_string(idx - 1);
}

}  // namespace

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
    auto da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return b < a;
}

CoeffPoly::CoeffPoly(int ringS) : s_(ringS) {
    if (ringS < 0) throw ConfigError("ring parameter s must be nonnegative");
}

CoeffPoly CoeffPoly::constant(int s, const mpz_class& c) {
    CoeffPoly p(s);
    p.addTerm(Exponents(s + 2, 0), c);
    return p;
}

CoeffPoly CoeffPoly::qPower(int s, unsigned e) {
    CoeffPoly p(s);
    Exponents ex(s + 2, 0);
    ex[0] = e;
    p.addTerm(ex, 1);
    return p;
}

CoeffPoly CoeffPoly::alpha(int s, int j, unsigned e) {
    if (j < 0 || j > s) throw ConfigError("alpha index " + std::to_string(j) + " outside ring s=" + std::to_string(s));
    CoeffPoly p(s);
    Exponents ex(s + 2, 0);
    ex[j + 1] = e;
    p.addTerm(ex, 1);
    return p;
}

CoeffPoly CoeffPoly::monomial(int s, const mpz_class& c, unsigned qExp,
                              const std::vector<unsigned>& alphaExps) {
    if (alphaExps.size() != static_cast<std::size_t>(s) + 1)
        throw ConfigError("alpha exponent vector has length " + std::to_string(alphaExps.size()) +
                          ", ring expects " + std::to_string(s + 1));
    CoeffPoly p(s);
    Exponents ex(s + 2, 0);
    ex[0] = qExp;
    std::copy(alphaExps.begin(), alphaExps.end(), ex.begin() + 1);
    p.addTerm(ex, c);
    return p;
}

void CoeffPoly::addTerm(const Exponents& e, const mpz_class& c) {
    if (e.size() != static_cast<std::size_t>(s_) + 2) throw ConfigError("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void CoeffPoly::checkRing(const CoeffPoly& o) const {
    if (s_ != o.s_)
        throw ConfigError("ring mismatch: s=" + std::to_string(s_) + " vs s=" + std::to_string(o.s_));
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    checkRing(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
    checkRing(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) {
    *this = *this * o;
    return *this;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    a.checkRing(b);
    CoeffPoly r(a.s_);
    Exponents ex(a.s_ + 2);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = ea[i] + eb[i];
            r.addTerm(ex, ca * cb);
        }
    }
    return r;
}

CoeffPoly CoeffPoly::shiftQ(unsigned e) const {
    if (e == 0) return *this;
    CoeffPoly r(s_);
    for (const auto& [ex, c] : terms_) {
        Exponents shifted = ex;
        shifted[0] += e;
        r.terms_.emplace(std::move(shifted), c);
    }
    return r;
}

CoeffPoly CoeffPoly::scaled(const mpz_class& c) const {
    CoeffPoly r(s_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

unsigned CoeffPoly::qDegree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[0]);
    return d;
}

mpq_class CoeffPoly::evaluate(const mpq_class& q, std::span<const mpq_class> alpha) const {
    if (alpha.size() != static_cast<std::size_t>(s_) + 1)
        throw ConfigError("evaluate: expected " + std::to_string(s_ + 1) + " alpha values, got " +
                          std::to_string(alpha.size()));
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const mpq_class& base = i == 0 ? q : alpha[i - 1];
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), e[i]);
            mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), e[i]);
            pw.canonicalize();
            term *= pw;
        }
        sum += term;
    }
    return sum;
}

CoeffPoly CoeffPoly::specialize(std::optional<mpz_class> q,
                                std::span<const std::optional<mpz_class>> alpha) const {
    if (!alpha.empty() && alpha.size() != static_cast<std::size_t>(s_) + 1)
        throw ConfigError("specialize: expected " + std::to_string(s_ + 1) + " alpha values, got " +
                          std::to_string(alpha.size()));
    CoeffPoly r(s_);
    for (const auto& [e, c] : terms_) {
        Exponents ex = e;
        mpz_class coeff = c;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            const std::optional<mpz_class>* v = nullptr;
            if (i == 0) {
                v = &q;
            } else if (!alpha.empty()) {
                v = &alpha[i - 1];
            }
            if (v == nullptr || !v->has_value() || ex[i] == 0) continue;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), (**v).get_mpz_t(), ex[i]);
            coeff *= pw;
            ex[i] = 0;
        }
        r.addTerm(ex, coeff);
    }
    return r;
}

CoeffPoly CoeffPoly::withRing(int newS) const {
    CoeffPoly r(newS);
    for (const auto& [e, c] : terms_) {
        Exponents ex(newS + 2, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i < ex.size()) {
                ex[i] = e[i];
            } else if (e[i] != 0) {
                throw ConfigError("withRing: alpha" + std::to_string(i - 1) + " does not exist in ring s=" +
                                  std::to_string(newS));
            }
        }
        r.addTerm(ex, c);
    }
    return r;
}

std::string CoeffPoly::toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += " * " + varName(i);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

std::string CoeffPoly::toPretty() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += varName(i);
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += factors;
        } else {
            out += mag.get_str() + "*" + factors;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, int s) : text_(text), s_(s) {}

    CoeffPoly run() {
        CoeffPoly result(s_);
        skipSpace();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        bool firstTerm = true;
        while (true) {
            skipSpace();
            int sign = 1;
            if (!firstTerm) {
                if (peek() == '+') {
                    ++pos_;
                } else if (peek() == '-') {
                    sign = -1;
                    ++pos_;
                } else {
                    throw ParseError("expected '+' or '-'", pos_);
                }
                skipSpace();
            }
            while (peek() == '-' || peek() == '+') {
                if (peek() == '-') sign = -sign;
                ++pos_;
                skipSpace();
            }
            parseMonomial(result, sign);
            firstTerm = false;
            skipSpace();
            if (pos_ == text_.size()) break;
        }
        return result;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    void parseMonomial(CoeffPoly& into, int sign) {
        mpz_class coeff = sign;
        Exponents ex(s_ + 2, 0);
        while (true) {
            skipSpace();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= mpz_class(digits());
            } else if (c == 'q') {
                ++pos_;
                ex[0] += parseExponent();
            } else if (text_.substr(pos_, 5) == "alpha") {
                std::size_t at = pos_;
                pos_ += 5;
                unsigned long idx = std::stoul(digits());
                if (idx > static_cast<unsigned long>(s_))
                    throw ParseError("alpha" + std::to_string(idx) + " not in ring s=" + std::to_string(s_), at);
                ex[idx + 1] += parseExponent();
            } else {
                throw ParseError("expected coefficient or variable", pos_);
            }
            skipSpace();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        into.addTerm(ex, coeff);
    }

    std::uint32_t parseExponent() {
        skipSpace();
        if (peek() != '^') return 1;
        ++pos_;
        skipSpace();
        return static_cast<std::uint32_t>(std::stoul(digits()));
    }

    std::string_view text_;
    int s_;
    std::size_t pos_ = 0;
};

}  // namespace

CoeffPoly CoeffPoly::parse(std::string_view text, int s) {
    return PolyParser(text, s).run();
}

CoeffPoly qInt(long n, int s) {
    if (n < 0) throw DomainError("q-integer of negative argument " + std::to_string(n));
    CoeffPoly r(s);
    Exponents ex(s + 2, 0);
    for (long i = 0; i < n; ++i) {
        ex[0] = static_cast<std::uint32_t>(i);
        r.addTerm(ex, 1);
    }
    return r;
}

CoeffPoly qFactorial(long n, int s) {
    if (n < 0) throw DomainError("q-factorial of negative argument " + std::to_string(n));
    CoeffPoly r = CoeffPoly::one(s);
    for (long i = 2; i <= n; ++i) r *= qInt(i, s);
    return r;
}

CoeffPoly qBinomial(long m, long k, int s) {
    if (m < 0 || k < 0) throw DomainError("q-binomial needs nonnegative arguments");
    if (k > m) throw DomainError("q-binomial with k=" + std::to_string(k) + " > m=" + std::to_string(m));
    // row[k] holds binom(i, k)_q for the current i.
    std::vector<CoeffPoly> row(k + 1, CoeffPoly(s));
    row[0] = CoeffPoly::one(s);
    for (long i = 1; i <= m; ++i) {
        for (long j = std::min(i, k); j >= 1; --j) {
            row[j] = row[j - 1] + row[j].shiftQ(static_cast<unsigned>(j));
        }
    }
    return row[k];
}

}  // namespace normord
