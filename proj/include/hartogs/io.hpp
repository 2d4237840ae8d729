#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "hartogs/geometry.hpp"
#include "hartogs/multi_index.hpp"
#include "hartogs/polytuple.hpp"

namespace hartogs {

// {"n": 2, "polys": [{"terms": [{"alpha": [1, 0], "coeff": "1"}]}, ...]}
// Errors carry the offending path, e.g. "polys[0].terms[1].coeff".
PolyTuple parse_poly_tuple(const nlohmann::json& doc);
nlohmann::json to_json(const PolyTuple& p);

MultiIndex parse_multi_index(const nlohmann::json& j, const char* what);
nlohmann::json to_json(const MultiIndex& a);

// [re, im]
std::complex<double> parse_complex(const nlohmann::json& j);
nlohmann::json to_json(std::complex<double> z);

Point parse_point(const nlohmann::json& j);
nlohmann::json to_json(const Point& p);

// Nested rows of [re, im] pairs.
Eigen::MatrixXcd parse_matrix(const nlohmann::json& j);
nlohmann::json to_json(const Eigen::MatrixXcd& m);

}  // namespace hartogs
