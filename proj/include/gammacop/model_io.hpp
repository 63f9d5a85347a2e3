#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gammacop/polynomial.hpp"

namespace gammacop {

/// Model from JSON text:
///   {"n": 2, "coeffs": {"1": 1.0, "2": 1.0, "1,2": 0.5}, "lambda": 1.5, "lambdas": [2.0, 3.0]}
/// Subset keys are sorted 1-based indices; "" (constant term) is optional and
/// must be 1. Missing coefficients are 0. Throws ParseError naming the key.
AffineModel parse_model_json(const std::string& text);
AffineModel parse_model_file(const std::string& path);

/// Canonical JSON of a model (non-zero coefficients only, keys by subset
/// size then mask). Re-parses to an identical model.
std::string model_to_json(const AffineModel& model, int indent = 2);

/// Marginals file: {"marginals": [{"scale": 1.0, "shape": 2.0}, ...]}.
std::vector<std::pair<double, double>> parse_marginals_json(const std::string& text);
std::vector<std::pair<double, double>> parse_marginals_file(const std::string& path);

/// JSON text with every floating-point number printed to 17 significant
/// digits; non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

/// "%.17g" formatting.
std::string format_double(double x);

}  // namespace gammacop
