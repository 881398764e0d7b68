#pragma once

#include "normord/board.hpp"
#include "normord/normal_form.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace normord {

/// Placement counts (q = 1, unit weights) on the m-column, height-n rectangle.
struct RectangleCounts {
    mpz_class rooks;  // r_k
    mpz_class files;  // f_k
    mpz_class mixed;  // |M_{k,ell}|
};

/// k! C(n,k) C(m,k).
mpz_class rectangleRookCount(int m, int n, int k);
/// n^k C(m,k).
mpz_class rectangleFileCount(int m, int n, int k);
/// Sum over rook columns pi and file distributions rho bounded by the gaps of pi
/// of k! C(n,k) prod_j C(m_j(pi), rho_j) (n+1-j)^{rho_j}.
mpz_class rectangleMixedCount(int m, int n, int k, int ell);
RectangleCounts rectangleClosedForms(int m, int n, int k, int ell);

/// The inner sum over pi and rho above, without the k! C(n,k) factor.
mpz_class rectangleCompositionSum(int m, int n, int t, int r);

/// q_n(r,t) = sum_{k=n-t}^{n} (-1)^{n-k} C(t, n-k) k^r, with 0^0 = 1.
mpz_class alternatingQ(int n, int r, int t);
/// sum_{l=1}^{n} C(r-t+l, l) A(r, n-l), with C(a, l) = 0 for a < 0.
mpz_class eulerianClosedQ(int n, int r, int t);

/// X^m Y^n at q = 1, mu = nu = 1: sum C(n,t) C(m,r) q_n(r,t) Y^{n-t} X^{m-r},
/// returned in the ring s = 1 with constant coefficients.
NormalForm basicWordOreFormula(int m, int n);

struct EulerianComparisonEntry {
    int m = 0, n = 0, r = 0, t = 0;
    mpz_class alternating;
    mpz_class closed;
    bool agree = true;
};

/// Compares the two expressions for every (m, n, r, t) with 1 <= m <= maxM,
/// 1 <= n <= maxN, r <= m, t <= n. Informational only.
std::vector<EulerianComparisonEntry> eulerianComparison(int maxM, int maxN);

struct NamedBoardCheck {
    std::string label;
    mpz_class formula;
    mpz_class rectangle;
    mpz_class enumerated;
    bool ok() const { return formula == rectangle && rectangle == enumerated; }
};

/// Abel, restricted Abel, Laguerre and restricted Laguerre identities for
/// n <= maxN, r <= maxR, each against the rectangle counts and a brute-force count.
std::vector<NamedBoardCheck> namedBoardSpecializations(int maxN = 6, int maxR = 2);

/// Brute-force counts of k non-attacking rooks / k files (one per column).
mpz_class countRooks(const Board& b, int k);
mpz_class countFiles(const Board& b, int k);

}  // namespace normord
