#pragma once

#include "magnetic/qseries.hpp"

#include <json.hpp>

#include <string>

namespace magnetic {

using Json = nlohmann::ordered_json;

// {"lead": int, "prec": int, "coeffs": ["num/den", ...]}
Json to_json(const QSeries& f);
QSeries series_from_json(const Json& j);

std::string encode_series(const QSeries& f);
QSeries decode_series(const std::string& text);

}  // namespace magnetic
