#include "normord/closed_forms.hpp"

#include "normord/classical.hpp"
#include "normord/compositions.hpp"
#include "normord/errors.hpp"

#include <functional>

namespace normord {

mpz_class rectangleRookCount(int m, int n, int k) {
    if (k < 0) return 0;
    return factorial(k) * binomial(n, k) * binomial(m, k);
}

mpz_class rectangleFileCount(int m, int n, int k) {
    if (k < 0) return 0;
    return ipow(n, static_cast<unsigned long>(k)) * binomial(m, k);
}

mpz_class rectangleCompositionSum(int m, int n, int t, int r) {
    mpz_class total = 0;
    const int ell = r - t;
    if (t < 0 || ell < 0) return total;
    for (const auto& pi : columnChoices(m, t)) {
        const std::vector<int> gaps = blockSizes(pi, m);
        for (const auto& rho : boundedCompositions(ell, gaps)) {
            mpz_class term = 1;
            for (std::size_t j = 0; j < rho.size(); ++j) {
                const long rows = static_cast<long>(n) + 1 - static_cast<long>(j + 1);
                term *= binomial(gaps[j], rho[j]) * ipow(rows, static_cast<unsigned long>(rho[j]));
            }
            total += term;
        }
    }
    return total;
}

mpz_class rectangleMixedCount(int m, int n, int k, int ell) {
    if (k < 0 || ell < 0) return 0;
    return factorial(k) * binomial(n, k) * rectangleCompositionSum(m, n, k, k + ell);
}

RectangleCounts rectangleClosedForms(int m, int n, int k, int ell) {
    if (m < 0 || n < 0) throw DomainError("rectangle dimensions must be nonnegative");
    return {rectangleRookCount(m, n, k), rectangleFileCount(m, n, k), rectangleMixedCount(m, n, k, ell)};
}

mpz_class alternatingQ(int n, int r, int t) {
    mpz_class sum = 0;
    for (int k = std::max(n - t, 0); k <= n; ++k) {
        mpz_class term = binomial(t, n - k) * ipow(k, static_cast<unsigned long>(r));
        if ((n - k) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

mpz_class eulerianClosedQ(int n, int r, int t) {
    mpz_class sum = 0;
    for (int l = 1; l <= n; ++l) {
        const int top = r - t + l;
        if (top < 0) continue;
        sum += binomial(top, l) * eulerian(r, n - l);
    }
    return sum;
}

NormalForm basicWordOreFormula(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("basic word exponents must be nonnegative");
    NormalForm nf(1);
    for (int t = 0; t <= n; ++t) {
        for (int r = 0; r <= m; ++r) {
            mpz_class c = binomial(n, t) * binomial(m, r) * alternatingQ(n, r, t);
            nf.addTerm(n - t, m - r, CoeffPoly::constant(1, c));
        }
    }
    return nf;
}

std::vector<EulerianComparisonEntry> eulerianComparison(int maxM, int maxN) {
    std::vector<EulerianComparisonEntry> out;
    for (int m = 1; m <= maxM; ++m) {
        for (int n = 1; n <= maxN; ++n) {
            for (int r = 0; r <= m; ++r) {
                for (int t = 0; t <= n; ++t) {
                    EulerianComparisonEntry e;
                    e.m = m;
                    e.n = n;
                    e.r = r;
                    e.t = t;
                    e.alternating = alternatingQ(n, r, t);
                    e.closed = eulerianClosedQ(n, r, t);
                    e.agree = e.alternating == e.closed;
                    out.push_back(e);
                }
            }
        }
    }
    return out;
}

mpz_class countRooks(const Board& b, int k) {
    if (k < 0) return 0;
    mpz_class count = 0;
    std::vector<char> used(static_cast<std::size_t>(b.maxHeight()), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
        if (left == 0) {
            ++count;
            return;
        }
        if (b.columns() - c < static_cast<std::size_t>(left)) return;
        rec(c + 1, left);
        for (int row = 0; row < b.height(c); ++row) {
            if (used[static_cast<std::size_t>(row)]) continue;
            used[static_cast<std::size_t>(row)] = 1;
            rec(c + 1, left - 1);
            used[static_cast<std::size_t>(row)] = 0;
        }
    };
    rec(0, k);
    return count;
}

mpz_class countFiles(const Board& b, int k) {
    if (k < 0) return 0;
    mpz_class count = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
        if (left == 0) {
            ++count;
            return;
        }
        if (b.columns() - c < static_cast<std::size_t>(left)) return;
        rec(c + 1, left);
        for (int row = 0; row < b.height(c); ++row) rec(c + 1, left - 1);
    };
    rec(0, k);
    return count;
}

std::vector<NamedBoardCheck> namedBoardSpecializations(int maxN, int maxR) {
    std::vector<NamedBoardCheck> out;
    auto label = [](const std::string& what, int n, int r, int k) {
        std::string s = what + " n=" + std::to_string(n);
        if (r > 0) s += " r=" + std::to_string(r);
        return s + " k=" + std::to_string(k);
    };
    for (int n = 1; n <= maxN; ++n) {
        for (int k = 0; k <= n; ++k) {
            // f_{n-k}(A_n) = n^{n-k} C(n-1, k-1)
            Board abel = abelBoard(n);
            out.push_back({label("abel f", n, 0, k), ipow(n, static_cast<unsigned long>(n - k)) * binomial(n - 1, k - 1),
                           rectangleFileCount(n - 1, n, n - k), countFiles(abel, n - k)});
            // r_{n-k}(L_n) = n!/k! C(n-1, k-1) = L(n, k)
            Board lag = laguerreBoard(n);
            mpz_class formula = factorial(n) / factorial(k) * binomial(n - 1, k - 1);
            out.push_back({label("laguerre r", n, 0, k), formula, rectangleRookCount(n, n - 1, n - k), countRooks(lag, n - k)});
            out.push_back({label("laguerre lah", n, 0, k), lah(n, k), formula, countRooks(lag, n - k)});
            for (int r = 1; r <= maxR && r <= n; ++r) {
                // f_{n-k}(R_{n-r,n}) = n^{n-k} C(n-r, k-r)
                Board ra = restrictedAbelBoard(n, r);
                out.push_back({label("restricted abel f", n, r, k),
                               ipow(n, static_cast<unsigned long>(n - k)) * binomial(n - r, k - r),
                               rectangleFileCount(n - r, n, n - k), countFiles(ra, n - k)});
                // r_{n-k}(R_{n+r-1,n-r}) = (n+r-1)!/(k+r-1)! C(n-r, k-r)
                Board rl = restrictedLaguerreBoard(n, r);
                mpz_class rlFormula = k + r - 1 >= 0 ? factorial(n + r - 1) / factorial(k + r - 1) * binomial(n - r, k - r) : mpz_class(0);
                out.push_back({label("restricted laguerre r", n, r, k), rlFormula,
                               rectangleRookCount(n + r - 1, n - r, n - k), countRooks(rl, n - k)});
            }
        }
    }
    return out;
}

}  // namespace normord
