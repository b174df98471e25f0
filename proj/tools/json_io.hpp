#pragma once

#include "json.hpp"

#include "regkit/curve.hpp"
#include "regkit/filfmic.hpp"
#include "regkit/padic.hpp"
#include "regkit/series.hpp"

namespace regkit::cli {

using Json = nlohmann::ordered_json;

/// {"v", "u", "prec"}; exact values carry "prec": "exact" and exact zero "v": "inf".
Json to_json(const Padic& x);
Json to_json(const Eis& x);

/// {"pole", "coeffs", "trunc", "prec_ledger"} with every coefficient capped at
/// min(cap, its own precision).
Json to_json(const ESeries& s, long cap = kInfinite);
Json to_json(const PSeries& s, long cap = kInfinite);
/// Exact rationals as decimal strings.
Json to_json(const QSeries& s);

Json to_json(const SeriesMatrix& m, long cap = kInfinite);
Json to_json(const FilFMIC& obj, long cap = kInfinite);
Json to_json(const ResidualCheck& r);

}  // namespace regkit::cli
