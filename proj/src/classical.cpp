#include "normord/classical.hpp"

#include "normord/errors.hpp"

#include <functional>
#include <vector>

namespace normord {

mpz_class binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class ipow(long base, unsigned long e) {
    mpz_class r;
    mpz_class b = base;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

namespace {

using Row = std::vector<mpz_class>;

/// Builds rows 0..n of a triangle T(i, j), 0 <= j <= i, from T(0, 0) = 1 and
/// T(i+1, j) = step(i, j, T(i, j-1), T(i, j)).
mpz_class triangle(int n, int k, const std::function<mpz_class(int, int, const mpz_class&, const mpz_class&)>& step) {
    if (n < 0 || k < 0 || k > n) return 0;
    Row row{1};
    for (int i = 0; i < n; ++i) {
        Row next(static_cast<std::size_t>(i) + 2, 0);
        for (int j = 0; j <= i + 1; ++j) {
            mpz_class left = j >= 1 ? row[static_cast<std::size_t>(j) - 1] : mpz_class(0);
            mpz_class same = j <= i ? row[static_cast<std::size_t>(j)] : mpz_class(0);
            next[static_cast<std::size_t>(j)] = step(i, j, left, same);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace

mpz_class stirling2(int n, int k) {
    return triangle(n, k, [](int, int j, const mpz_class& left, const mpz_class& same) -> mpz_class { return left + j * same; });
}

mpz_class stirling1(int n, int k) {
    return triangle(n, k, [](int i, int, const mpz_class& left, const mpz_class& same) -> mpz_class { return left + i * same; });
}

mpz_class lah(int n, int k) {
    // L(i+1, j) = L(i, j-1) + (i + j) L(i, j)
    return triangle(n, k, [](int i, int j, const mpz_class& left, const mpz_class& same) -> mpz_class { return left + (i + j) * same; });
}

mpz_class eulerian(int r, int d) {
    if (r == 0) return d == 0 ? 1 : 0;
    if (r < 0 || d < 0 || d >= r) return 0;
    // A(i+1, j) = (j + 1) A(i, j) + (i + 1 - j) A(i, j - 1), rows of length i.
    Row row{1};  // r = 1
    for (int i = 1; i < r; ++i) {
        Row next(static_cast<std::size_t>(i) + 1, 0);
        for (int j = 0; j <= i; ++j) {
            mpz_class same = j < i ? row[static_cast<std::size_t>(j)] : mpz_class(0);
            mpz_class left = j >= 1 ? row[static_cast<std::size_t>(j) - 1] : mpz_class(0);
            next[static_cast<std::size_t>(j)] = (j + 1) * same + (i + 1 - j) * left;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(d)];
}

mpz_class jumpRookNumber(int n, int r, int k) {
    if (n < 0 || k < 0) return 0;
    // Adding a column of height r*i to the left of J_{i,r}: a new rook sees
    // r*i rows minus the k-1 rows already taken.
    Row row{1};
    for (int i = 0; i < n; ++i) {
        Row next(row.size() + 1, 0);
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (j < row.size()) next[j] += row[j];
            if (j >= 1) {
                long free = static_cast<long>(r) * i - static_cast<long>(j - 1);
                if (free > 0) next[j] += free * row[j - 1];
            }
        }
        row = std::move(next);
    }
    return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : mpz_class(0);
}

}  // namespace normord
