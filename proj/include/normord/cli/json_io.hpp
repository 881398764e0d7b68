#pragma once

#include "normord/board.hpp"
#include "normord/coeff_poly.hpp"
#include "normord/normal_form.hpp"

#include <json.hpp>

#include <string>

namespace normord::cli {

using nlohmann::json;

/// [{"q": a, "alpha": [e0, ..., es], "c": "decimal"}, ...] in canonical order.
json coeffToJson(const CoeffPoly& p);
CoeffPoly coeffFromJson(const json& j, int s);

/// {"word": ..., "s": ..., "terms": [{"y", "x", "coeff"}]}, terms by (y desc, x desc).
json normalFormToJson(const NormalForm& nf, const std::string& word);
NormalForm normalFormFromJson(const json& j);

json boardToJson(const Board& b);
Board boardFromJson(const json& j);

}  // namespace normord::cli
