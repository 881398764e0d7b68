#pragma once

#include "normord/normal_form.hpp"
#include "normord/word.hpp"

#include <string_view>

namespace normord {

/// Which placement engine supplies the mixed placement numbers.
enum class Engine { Dp, Sequential, Static };

Engine parseEngine(std::string_view name);
const char* engineName(Engine e);

/// Normal form of w as a sum over placement types k of
/// m_k(B_w; q) Y^{|n| + sum (j-1) k_j} X^{|m| - |k|}, |k| <= |m| - m_1.
/// The static engine only covers s <= 1.
NormalForm combinatorialNormalForm(const Word& w, int s, Engine engine = Engine::Dp);

/// The s = 1 double sum over rooks k and files ell of
/// m_{k,ell}(B_w; q) Y^{|n| - k} X^{|m| - k - ell}, from static placements.
NormalForm oreDoubleSum(const Word& w);

}  // namespace normord
