#pragma once

#include "normord/coeff_poly.hpp"
#include "normord/normal_form.hpp"

#include <map>
#include <tuple>

namespace normord {

/// Coefficients M(m, r, ell, t): for each diagram lambda in the
/// (m - ell) x ell box and each type k with |k| = ell - r and creation sum t,
/// the sum of m_k over the board of X Y^{lambda_1 - lambda_2} ... X Y^{lambda_ell}.
/// Keyed by (r, ell, t); zero entries omitted.
std::map<std::tuple<int, int, int>, CoeffPoly> binomialCoefficientsM(int m, int s);

/// One coefficient M(m, r, ell, t), computed directly.
CoeffPoly binomialCoefficientM(int m, int r, int ell, int t, int s);
/// The s = 1 coefficient O(m, k, ell, t): sum over lambda of m_{t, ell-k-t}.
CoeffPoly binomialCoefficientO(int m, int k, int ell, int t);

/// (X + Y)^m normal ordered: sum over (r, ell, t) of M(m, r, ell, t) Y^{m - ell + t} X^r.
NormalForm binomialNormalForm(int m, int s);
/// The s = 1 form: sum over (k, ell, t) of O(m, k, ell, t) Y^{m - ell - t} X^k.
NormalForm oreBinomialNormalForm(int m);

}  // namespace normord
