#include "magnetic/series_json.hpp"

namespace magnetic {

Json to_json(const QSeries& f) {
    Json j;
    j["lead"] = f.lead();
    j["prec"] = f.prec();
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

QSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lead") || !j.contains("prec") || !j.contains("coeffs"))
        throw UsageError("series JSON needs lead, prec and coeffs");
    if (!j["lead"].is_number_integer() || !j["prec"].is_number_integer() || !j["coeffs"].is_array())
        throw UsageError("series JSON has ill-typed fields");
    long lead = j["lead"].get<long>();
    long prec = j["prec"].get<long>();
    const auto& arr = j["coeffs"];
    if (prec < lead || arr.size() != static_cast<std::size_t>(prec - lead + 1))
        throw UsageError("series JSON: coeffs length does not match [lead, prec]");
    std::vector<Rational> v;
    v.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_string()) throw UsageError("series JSON coefficients must be strings");
        v.push_back(parse_rational(c.get<std::string>()));
    }
    return QSeries(lead, std::move(v));
}

std::string encode_series(const QSeries& f) { return to_json(f).dump(); }

QSeries decode_series(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("series JSON does not parse: ") + e.what());
    }
    return series_from_json(j);
}

}  // namespace magnetic
