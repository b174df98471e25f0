#include "json_io.hpp"

namespace regkit::cli {

namespace {

Json precision_value(long prec) { return prec >= kInfinite ? Json("exact") : Json(prec); }

template <class S, class Cap>
Json series_json(const S& s, long cap, Cap capped) {
  Json out;
  const long low = std::min(0L, s.valuation() < s.trunc() ? s.valuation() : 0L);
  out["pole"] = -low;
  Json coeffs = Json::array();
  Json ledger = Json::array();
  const long end = std::min(s.end(), s.trunc());
  for (long e = low; e < end; ++e) {
    const auto c = capped(s[e], cap);
    coeffs.push_back(to_json(c));
    ledger.push_back(precision_value(c.precision()));
  }
  out["coeffs"] = std::move(coeffs);
  out["trunc"] = precision_value(s.trunc());
  out["prec_ledger"] = std::move(ledger);
  return out;
}

}  // namespace

Json to_json(const Padic& x) {
  Json out;
  if (x.is_exact_zero()) {
    out["v"] = "inf";
    out["u"] = "0";
    out["prec"] = "exact";
    return out;
  }
  if (x.is_zero()) {
    out["v"] = x.precision();
    out["u"] = "0";
    out["prec"] = x.precision();
    return out;
  }
  out["v"] = x.valuation();
  out["u"] = x.unit().get_str();
  out["prec"] = precision_value(x.precision());
  return out;
}

Json to_json(const Eis& x) {
  Json out;
  out["a"] = to_json(x.a());
  out["b"] = to_json(x.b());
  return out;
}

Json to_json(const ESeries& s, long cap) {
  return series_json(s, cap, [](const Eis& c, long n) { return c.precision() > n ? c.with_precision(n) : c; });
}

Json to_json(const PSeries& s, long cap) {
  return series_json(s, cap, [](const Padic& c, long n) { return c.precision() > n ? c.with_precision(n) : c; });
}

Json to_json(const QSeries& s) {
  Json out;
  out["pole"] = s.pole_order();
  Json coeffs = Json::array();
  const long end = std::min(s.end(), s.trunc());
  for (long e = std::min(0L, s.low()); e < end; ++e) coeffs.push_back(s[e].get_str());
  out["coeffs"] = std::move(coeffs);
  out["trunc"] = precision_value(s.trunc());
  return out;
}

Json to_json(const SeriesMatrix& m, long cap) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j), cap));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FilFMIC& obj, long cap) {
  Json out;
  out["labels"] = obj.labels;
  out["jumps"] = obj.jumps;
  out["connection"] = to_json(obj.connection, cap);
  out["frobenius"] = to_json(obj.frobenius, cap);
  return out;
}

Json to_json(const ResidualCheck& r) {
  Json out;
  out["vanishes"] = r.vanishes;
  out["trunc"] = precision_value(r.trunc);
  out["precision"] = precision_value(r.precision);
  out["detail"] = r.detail;
  return out;
}

}  // namespace regkit::cli
