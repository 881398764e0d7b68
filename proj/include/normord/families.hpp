#pragma once

#include "normord/coeff_poly.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <tuple>

namespace normord {

enum class FamilyKind { OreStirling, OreLah, OreScherk, PolyStirling, PolyLah, PolyScherk };

/// A number family: normal-ordering coefficients of (Y^r X)^n in the ring s.
struct Family {
    FamilyKind kind = FamilyKind::OreStirling;
    int r = 1;  // only meaningful for the Scherk families
    int s = 1;  // only meaningful for the polynomial families

    /// Y-power per factor: 1 for Stirling, 2 for Lah, r for Scherk.
    int jump() const;
    /// Ring parameter: 1 for the Ore families, s otherwise.
    int ringS() const;
    /// E.g. "ore-stirling", "poly-scherk(r=3,s=2)".
    std::string name() const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.kind == b.kind && a.jump() == b.jump() && a.ringS() == b.ringS();
    }
};

/// Accepts ore-stirling, ore-lah, ore-scherk, poly-stirling, poly-lah, poly-scherk.
Family parseFamily(std::string_view name, int r = 1, int s = 1);

// Entries; indices outside the support give the zero polynomial.

/// m_{n-j, j-k}(J_n; q).
CoeffPoly oreStirling(int n, int j, int k);
/// m_{2n-j, j-n-k}(L_n; q).
CoeffPoly oreLah(int n, int j, int k);
/// m_{rn-j, j-(r-1)n-k}(J_{n,r}; q).
CoeffPoly oreScherk(int r, int n, int j, int k);
/// Sum of m_k(J_n; q) over types k with |k| = n - k and creation sum j - n.
CoeffPoly polyStirling(int s, int n, int j, int k);
/// Same over the Lah board, creation sum j - 2n.
CoeffPoly polyLah(int s, int n, int j, int k);
/// Same over J_{n,r}, creation sum j - rn.
CoeffPoly polyScherk(int r, int s, int n, int j, int k);
/// Family entry dispatch.
CoeffPoly familyEntry(const Family& f, int n, int j, int k);

/// mu^{n-j} nu^{j-k} S(n, j) |s(j, k)| in the ring s = 1 (no q).
CoeffPoly oreStirlingFactorization(int n, int j, int k);

/// Entries (n, j, k) for n = 0..maxN, zero entries omitted.
class TriangularTable {
public:
    using Index = std::tuple<int, int, int>;

    TriangularTable(Family family, int maxN);

    const Family& family() const { return family_; }
    int maxN() const { return maxN_; }
    const std::map<Index, CoeffPoly>& entries() const { return entries_; }
    /// Zero polynomial outside the stored support.
    CoeffPoly at(int n, int j, int k) const;

private:
    Family family_;
    int maxN_;
    std::map<Index, CoeffPoly> entries_;
};

/// Lazily built, cached tables; safe to call from several threads.
std::shared_ptr<const TriangularTable> familyTable(const Family& f, int maxN);

}  // namespace normord
