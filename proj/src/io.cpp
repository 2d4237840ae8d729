#include "hartogs/io.hpp"

#include "hartogs/error.hpp"

namespace hartogs {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& why) {
  throw Error(ErrorKind::MalformedInput, path + ": " + why);
}

// Re-throws library errors with the JSON path prepended.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  } catch (const json::exception& e) {
    malformed(path, e.what());
  }
}

}  // namespace

PolyTuple parse_poly_tuple(const json& doc) {
  if (!doc.is_object()) malformed("$", "expected an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) malformed("n", "missing integer");
  const long n = doc["n"].get<long>();
  if (n < 1) malformed("n", "must be >= 1");
  if (!doc.contains("polys") || !doc["polys"].is_array()) malformed("polys", "missing array");
  const json& polys = doc["polys"];
  if (polys.size() != static_cast<std::size_t>(n)) {
    malformed("polys", "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(polys.size()));
  }
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    const std::string base = "polys[" + std::to_string(j) + "]";
    if (!polys[j].is_object() || !polys[j].contains("terms") || !polys[j]["terms"].is_array()) {
      malformed(base + ".terms", "missing array");
    }
    Polynomial::TermMap terms;
    const json& tj = polys[j]["terms"];
    for (std::size_t t = 0; t < tj.size(); ++t) {
      const std::string path = base + ".terms[" + std::to_string(t) + "]";
      if (!tj[t].is_object() || !tj[t].contains("alpha") || !tj[t].contains("coeff")) {
        malformed(path, "term needs alpha and coeff");
      }
      MultiIndex alpha =
          at_path(path + ".alpha", [&] { return parse_multi_index(tj[t]["alpha"], "alpha"); });
      if (alpha.size() != static_cast<std::size_t>(n)) {
        malformed(path + ".alpha", "expected length " + std::to_string(n));
      }
      if (!tj[t]["coeff"].is_string()) malformed(path + ".coeff", "expected a \"p/q\" string");
      Rational c =
          at_path(path + ".coeff", [&] { return parse_rational(tj[t]["coeff"].get<std::string>()); });
      if (sgn(c) < 0) {
        throw Error(ErrorKind::NegativeCoefficient, path + ".coeff: " + format_rational(c));
      }
      terms[alpha] += c;
    }
    out.push_back(at_path(base, [&] { return Polynomial(static_cast<std::size_t>(n), terms); }));
  }
  return PolyTuple(std::move(out));
}

json to_json(const PolyTuple& p) {
  json polys = json::array();
  for (const auto& poly : p.polys()) {
    json terms = json::array();
    for (const auto& [alpha, c] : poly.terms()) {
      terms.push_back({{"alpha", to_json(alpha)}, {"coeff", format_rational(c)}});
    }
    polys.push_back({{"terms", terms}});
  }
  return {{"n", p.dim()}, {"polys", polys}};
}

MultiIndex parse_multi_index(const json& j, const char* what) {
  if (!j.is_array()) malformed(what, "expected an integer array");
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) malformed(what, "expected integers");
    const long x = e.get<long>();
    if (x < 0) malformed(what, "entries must be nonnegative");
    v.push_back(static_cast<int>(x));
  }
  return MultiIndex(std::move(v));
}

json to_json(const MultiIndex& a) { return json(a.entries()); }

std::complex<double> parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("complex", "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

Point parse_point(const json& j) {
  if (!j.is_array()) malformed("point", "expected an array of [re, im]");
  Point p;
  for (const auto& c : j) p.push_back(parse_complex(c));
  return p;
}

json to_json(const Point& p) {
  json out = json::array();
  for (auto z : p) out.push_back(to_json(z));
  return out;
}

Eigen::MatrixXcd parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix", "expected nonempty rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) malformed("matrix", "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(j[r][c]);
    }
  }
  return m;
}

json to_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

}  // namespace hartogs
