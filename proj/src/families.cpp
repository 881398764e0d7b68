#include "normord/families.hpp"

#include "normord/board.hpp"
#include "normord/classical.hpp"
#include "normord/compositions.hpp"
#include "normord/errors.hpp"
#include "normord/placements.hpp"

#include <mutex>

namespace normord {

int Family::jump() const {
    switch (kind) {
        case FamilyKind::OreStirling:
        case FamilyKind::PolyStirling: return 1;
        case FamilyKind::OreLah:
        case FamilyKind::PolyLah: return 2;
        case FamilyKind::OreScherk:
        case FamilyKind::PolyScherk: return r;
    }
    return 1;
}

int Family::ringS() const {
    switch (kind) {
        case FamilyKind::OreStirling:
        case FamilyKind::OreLah:
        case FamilyKind::OreScherk: return 1;
        default: return s;
    }
}

std::string Family::name() const {
    switch (kind) {
        case FamilyKind::OreStirling: return "ore-stirling";
        case FamilyKind::OreLah: return "ore-lah";
        case FamilyKind::OreScherk: return "ore-scherk(r=" + std::to_string(r) + ")";
        case FamilyKind::PolyStirling: return "poly-stirling(s=" + std::to_string(s) + ")";
        case FamilyKind::PolyLah: return "poly-lah(s=" + std::to_string(s) + ")";
        case FamilyKind::PolyScherk: return "poly-scherk(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
    }
    return "?";
}

Family parseFamily(std::string_view name, int r, int s) {
    Family f;
    f.r = r;
    f.s = s;
    if (name == "ore-stirling") {
        f.kind = FamilyKind::OreStirling;
    } else if (name == "ore-lah") {
        f.kind = FamilyKind::OreLah;
    } else if (name == "ore-scherk") {
        f.kind = FamilyKind::OreScherk;
    } else if (name == "poly-stirling") {
        f.kind = FamilyKind::PolyStirling;
    } else if (name == "poly-lah") {
        f.kind = FamilyKind::PolyLah;
    } else if (name == "poly-scherk") {
        f.kind = FamilyKind::PolyScherk;
    } else {
        throw ConfigError("unknown family '" + std::string(name) + "'");
    }
    if (r < 1) throw ConfigError("family parameter r must be at least 1");
    if (s < 0) throw ConfigError("family parameter s must be nonnegative");
    return f;
}

namespace {

CoeffPoly oreEntry(const Board& b, int rooks, int files) {
    if (rooks < 0 || files < 0) return CoeffPoly(1);
    return mixedNumberDP(b, PlacementType::ore(rooks, files)).value;
}

CoeffPoly polyEntry(const Board& b, int s, int n, int j, int k, int jump) {
    CoeffPoly sum(s);
    if (n < 0 || k < 0 || k > n) return sum;
    for (const PlacementType& t : weakCompositions(s + 1, n - k, j - jump * n)) sum += mixedNumberDP(b, t).value;
    return sum;
}

}  // namespace

CoeffPoly oreStirling(int n, int j, int k) {
    if (n < 0 || k < 0) return CoeffPoly(1);
    return oreEntry(staircase(n), n - j, j - k);
}

CoeffPoly oreLah(int n, int j, int k) {
    if (n < 0 || k < 0) return CoeffPoly(1);
    return oreEntry(lahBoard(n), 2 * n - j, j - n - k);
}

CoeffPoly oreScherk(int r, int n, int j, int k) {
    if (r < 1) throw ConfigError("Scherk parameter r must be at least 1");
    if (n < 0 || k < 0) return CoeffPoly(1);
    return oreEntry(jumpBoard(n, r), r * n - j, j - (r - 1) * n - k);
}

CoeffPoly polyStirling(int s, int n, int j, int k) {
    if (n < 0) return CoeffPoly(s);
    return polyEntry(staircase(n), s, n, j, k, 1);
}

CoeffPoly polyLah(int s, int n, int j, int k) {
    if (n < 0) return CoeffPoly(s);
    return polyEntry(lahBoard(n), s, n, j, k, 2);
}

CoeffPoly polyScherk(int r, int s, int n, int j, int k) {
    if (r < 1) throw ConfigError("Scherk parameter r must be at least 1");
    if (n < 0) return CoeffPoly(s);
    return polyEntry(jumpBoard(n, r), s, n, j, k, r);
}

CoeffPoly familyEntry(const Family& f, int n, int j, int k) {
    switch (f.kind) {
        case FamilyKind::OreStirling: return oreStirling(n, j, k);
        case FamilyKind::OreLah: return oreLah(n, j, k);
        case FamilyKind::OreScherk: return oreScherk(f.r, n, j, k);
        case FamilyKind::PolyStirling: return polyStirling(f.s, n, j, k);
        case FamilyKind::PolyLah: return polyLah(f.s, n, j, k);
        case FamilyKind::PolyScherk: return polyScherk(f.r, f.s, n, j, k);
    }
    return CoeffPoly(f.ringS());
}

CoeffPoly oreStirlingFactorization(int n, int j, int k) {
    if (n < 0 || j < 0 || k < 0 || j > n || k > j) return CoeffPoly(1);
    mpz_class c = stirling2(n, j) * stirling1(j, k);
    return CoeffPoly::monomial(1, c, 0, {static_cast<unsigned>(n - j), static_cast<unsigned>(j - k)});
}

TriangularTable::TriangularTable(Family family, int maxN) : family_(family), maxN_(maxN) {
    if (maxN < 0) throw ConfigError("table bound must be nonnegative");
    const int s = family_.ringS();
    const int r = family_.jump();
    for (int n = 0; n <= maxN; ++n) {
        const Board b = jumpBoard(n, r);
        // Each type k contributes to Y^{rn + creation} X^{n - |k|}.
        for (const auto& [type, poly] : allMixedNumbersDP(b, s).numbers) {
            Index idx{n, r * n + type.creationSum(), n - type.total()};
            auto [it, inserted] = entries_.try_emplace(idx, poly);
            if (!inserted) {
                it->second += poly;
                if (it->second.isZero()) entries_.erase(it);
            }
        }
    }
}

CoeffPoly TriangularTable::at(int n, int j, int k) const {
    auto it = entries_.find({n, j, k});
    return it == entries_.end() ? CoeffPoly(family_.ringS()) : it->second;
}

std::shared_ptr<const TriangularTable> familyTable(const Family& f, int maxN) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const TriangularTable>> cache;
    const std::tuple<int, int, int> key{static_cast<int>(f.kind), f.jump(), f.ringS()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->maxN() >= maxN) return it->second;
    }
    auto table = std::make_shared<const TriangularTable>(f, maxN);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot || slot->maxN() < maxN) slot = table;
    return slot;
}

}  // namespace normord
