#include "normord/binomial.hpp"

#include "normord/board.hpp"
#include "normord/compositions.hpp"
#include "normord/errors.hpp"
#include "normord/placements.hpp"
#include "normord/word.hpp"

namespace normord {

namespace {

Board diagramBoard(const YoungDiagram& lambda) {
    return boardFromWord(diagramTail(lambda));
}

void checkArgs(int m, int s) {
    if (m < 0) throw DomainError("binomial power must be nonnegative");
    if (s < 0) throw ConfigError("s must be nonnegative");
}

}  // namespace

std::map<std::tuple<int, int, int>, CoeffPoly> binomialCoefficientsM(int m, int s) {
    checkArgs(m, s);
    std::map<std::tuple<int, int, int>, CoeffPoly> out;
    for (int ell = 0; ell <= m; ++ell) {
        for (const YoungDiagram& lambda : enumerateDiagrams(static_cast<std::size_t>(m), static_cast<std::size_t>(ell))) {
            for (const auto& [type, poly] : allMixedNumbersDP(diagramBoard(lambda), s).numbers) {
                auto key = std::make_tuple(ell - type.total(), ell, type.creationSum());
                auto [it, inserted] = out.try_emplace(key, poly);
                if (!inserted) {
                    it->second += poly;
                    if (it->second.isZero()) out.erase(it);
                }
            }
        }
    }
    return out;
}

CoeffPoly binomialCoefficientM(int m, int r, int ell, int t, int s) {
    checkArgs(m, s);
    CoeffPoly sum(s);
    if (ell < 0 || ell > m || r < 0 || r > ell) return sum;
    const auto types = weakCompositions(s + 1, ell - r, t);
    if (types.empty()) return sum;
    for (const YoungDiagram& lambda : enumerateDiagrams(static_cast<std::size_t>(m), static_cast<std::size_t>(ell))) {
        const Board b = diagramBoard(lambda);
        for (const PlacementType& k : types) sum += mixedNumberDP(b, k).value;
    }
    return sum;
}

CoeffPoly binomialCoefficientO(int m, int k, int ell, int t) {
    checkArgs(m, 1);
    CoeffPoly sum(1);
    if (ell < 0 || ell > m || t < 0 || ell - k - t < 0) return sum;
    for (const YoungDiagram& lambda : enumerateDiagrams(static_cast<std::size_t>(m), static_cast<std::size_t>(ell))) {
        sum += mixedNumberDP(diagramBoard(lambda), PlacementType::ore(t, ell - k - t)).value;
    }
    return sum;
}

NormalForm binomialNormalForm(int m, int s) {
    NormalForm nf(s);
    for (const auto& [key, coeff] : binomialCoefficientsM(m, s)) {
        const auto [r, ell, t] = key;
        nf.addTerm(m - ell + t, r, coeff);
    }
    return nf;
}

NormalForm oreBinomialNormalForm(int m) {
    checkArgs(m, 1);
    NormalForm nf(1);
    for (int k = 0; k <= m; ++k) {
        for (int ell = k; ell <= m; ++ell) {
            for (int t = 0; t <= ell - k; ++t) {
                nf.addTerm(m - ell - t, k, binomialCoefficientO(m, k, ell, t));
            }
        }
    }
    return nf;
}

}  // namespace normord
