#include "normord/combinatorial_form.hpp"

#include "normord/board.hpp"
#include "normord/compositions.hpp"
#include "normord/errors.hpp"
#include "normord/placements.hpp"

#include <map>
#include <string>

namespace normord {

Engine parseEngine(std::string_view name) {
    if (name == "dp") return Engine::Dp;
    if (name == "sequential") return Engine::Sequential;
    if (name == "static") return Engine::Static;
    throw ConfigError("unknown engine '" + std::string(name) + "' (expected dp, sequential or static)");
}

const char* engineName(Engine e) {
    switch (e) {
        case Engine::Dp: return "dp";
        case Engine::Sequential: return "sequential";
        case Engine::Static: return "static";
    }
    return "?";
}

namespace {

std::map<PlacementType, CoeffPoly> staticAsTypes(const Board& b, int s) {
    if (s > 1) throw ConfigError("static placements only cover s <= 1");
    std::map<PlacementType, CoeffPoly> out;
    for (const auto& [kl, poly] : allStaticNumbers(b)) {
        if (s == 1) {
            out.emplace(PlacementType::ore(kl.first, kl.second), poly);
        } else if (kl.second == 0) {
            out.emplace(PlacementType({kl.first}), poly.withRing(0));
        }
    }
    return out;
}

}  // namespace

NormalForm combinatorialNormalForm(const Word& w, int s, Engine engine) {
    if (s < 0) throw ConfigError("s must be nonnegative");
    const BlockForm bf = blockForm(w);
    const Board board = boardFromWord(w);
    const int maxRooks = static_cast<int>(bf.totalM - bf.m1());
    std::map<PlacementType, CoeffPoly> numbers;
    switch (engine) {
        case Engine::Dp: numbers = allMixedNumbersDP(board, s, maxRooks).numbers; break;
        case Engine::Sequential: numbers = allSequentialNumbers(board, s, maxRooks); break;
        case Engine::Static: numbers = staticAsTypes(board, s); break;
    }
    NormalForm nf(s);
    const int n = static_cast<int>(bf.totalN);
    const int m = static_cast<int>(bf.totalM);
    for (int k = 0; k <= maxRooks; ++k) {
        for (const PlacementType& type : weakCompositions(s + 1, k)) {
            auto it = numbers.find(type);
            if (it == numbers.end()) continue;
            nf.addTerm(n + type.creationSum(), m - k, it->second);
        }
    }
    return nf;
}

NormalForm oreDoubleSum(const Word& w) {
    const BlockForm bf = blockForm(w);
    const Board board = boardFromWord(w);
    const int n = static_cast<int>(bf.totalN);
    const int m = static_cast<int>(bf.totalM);
    const auto numbers = allStaticNumbers(board);
    NormalForm nf(1);
    for (int k = 0; k <= std::min(n, m); ++k) {
        for (int ell = 0; ell <= m - k; ++ell) {
            auto it = numbers.find({k, ell});
            if (it != numbers.end()) nf.addTerm(n - k, m - k - ell, it->second);
        }
    }
    return nf;
}

}  // namespace normord
