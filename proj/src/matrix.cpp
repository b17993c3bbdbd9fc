#include "qons/matrix.hpp"

namespace qons {

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return Json{{"dimension", m.dim()}, {"entries", rows}};
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("entries"))
    throw Error(Errc::ParseError, "matrix must have \"dimension\" and \"entries\"");
  if (!j.at("dimension").is_number_integer() || j.at("dimension").get<long>() < 1)
    throw Error(Errc::ParseError, "/dimension must be a positive integer");
  auto n = static_cast<size_t>(j.at("dimension").get<long>());
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) throw Error(Errc::ParseError, "/entries must have dimension rows");
  QMatrix m(n);
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw Error(Errc::ParseError, "/entries/" + std::to_string(i) + " must have dimension entries");
    for (size_t k = 0; k < n; ++k) {
      const Json& e = rows[i][k];
      if (e.is_string())
        m(i, k) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer())
        m(i, k) = Rational(e.get<long>());
      else
        throw Error(Errc::ParseError, "/entries/" + std::to_string(i) + "/" + std::to_string(k) + " is not a rational");
    }
  }
  return m;
}

size_t rank(std::vector<std::vector<Rational>> rows) {
  size_t r = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace qons
