#pragma once

#include "normord/coeff_poly.hpp"
#include "normord/normal_form.hpp"
#include "normord/word.hpp"

#include <cstdint>
#include <map>

namespace normord {

/// Finite linear combination of words with coefficients in one ring.
class MixedExpression {
public:
    explicit MixedExpression(int ringS = 1) : s_(ringS) {}

    int ringS() const { return s_; }
    const std::map<Word, CoeffPoly>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void add(const Word& w, const CoeffPoly& c);
    void add(const Word& w) { add(w, CoeffPoly::one(s_)); }

private:
    int s_;
    std::map<Word, CoeffPoly> terms_;
};

enum class RedexStrategy { Rightmost, Leftmost, Random };

struct RewriteOptions {
    RedexStrategy strategy = RedexStrategy::Rightmost;
    std::uint64_t seed = 0;  // used by RedexStrategy::Random
};

/// Normal-orders w by rewriting XY -> q YX + sum_j alpha_j Y^j until every
/// word has the shape Y^j X^k.
NormalForm normalOrder(const Word& w, int s, RewriteOptions opts = {});
NormalForm normalOrderExpression(const MixedExpression& e, int s, RewriteOptions opts = {});

/// (X + Y)^m expanded into its 2^m words, each with coefficient 1.
MixedExpression binomialExpansion(int m, int s);

}  // namespace normord
