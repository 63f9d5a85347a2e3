#include "gammacop/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gammacop/errors.hpp"

namespace gammacop {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double finite_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ParseError("'" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError("'" + key + "' must be finite");
  return x;
}

std::uint32_t parse_subset_key(const std::string& key, int n) {
  if (key.empty()) return 0;
  std::uint32_t bits = 0;
  int prev = 0;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t comma = std::min(key.find(',', pos), key.size());
    const std::string tok = key.substr(pos, comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        tok.size() > 3)
      throw ParseError("coeffs key \"" + key + "\" is not a comma-separated list of indices");
    const int idx = std::stoi(tok);
    if (idx < 1 || idx > n) throw ParseError("coeffs key \"" + key + "\" has index out of range 1.." + std::to_string(n));
    if (idx <= prev) throw ParseError("coeffs key \"" + key + "\" must list strictly increasing indices");
    bits |= std::uint32_t{1} << (idx - 1);
    prev = idx;
    pos = comma + 1;
  }
  return bits;
}

void write_json(std::ostringstream& os, const nlohmann::ordered_json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string((depth + 1) * indent, ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(depth * indent, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << '{' << nl;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ',' << nl;
      first = false;
      os << pad << nlohmann::ordered_json(it.key()).dump() << colon;
      write_json(os, it.value(), indent, depth + 1);
    }
    os << nl << close_pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << '[' << nl;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ',' << nl;
      os << pad;
      write_json(os, j[i], indent, depth + 1);
    }
    os << nl << close_pad << ']';
  } else if (j.is_number_float()) {
    const double x = j.get<double>();
    os << (std::isfinite(x) ? format_double(x) : "null");
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent, 0);
  return os.str();
}

AffineModel parse_model_json(const std::string& text) {
  const json root = parse_text(text);
  if (!root.is_object()) throw ParseError("model must be a JSON object");
  for (auto it = root.begin(); it != root.end(); ++it)
    if (it.key() != "n" && it.key() != "coeffs" && it.key() != "lambda" && it.key() != "lambdas")
      throw ParseError("unknown key '" + it.key() + "'");

  if (!root.contains("n")) throw ParseError("missing key 'n'");
  if (!root["n"].is_number_integer()) throw ParseError("'n' must be an integer");
  const long n = root["n"].get<long>();
  if (n < 1 || n > kMaxDim) throw ParseError("'n' must lie in [1, 16]");

  if (!root.contains("coeffs")) throw ParseError("missing key 'coeffs'");
  const json& cj = root["coeffs"];
  if (!cj.is_object()) throw ParseError("'coeffs' must be an object");
  std::vector<double> coeffs(std::size_t{1} << n, 0.0);
  coeffs[0] = 1.0;
  for (auto it = cj.begin(); it != cj.end(); ++it) {
    const std::string key = "coeffs.\"" + it.key() + "\"";
    const std::uint32_t bits = parse_subset_key(it.key(), static_cast<int>(n));
    const double v = finite_number(it.value(), key);
    if (bits == 0 && v != 1.0) throw ParseError("'" + key + "' (constant term) must equal 1");
    coeffs[bits] = v;
  }
  for (int i = 0; i < n; ++i)
    if (!(coeffs[std::size_t{1} << i] > 0.0))
      throw ParseError("'coeffs.\"" + std::to_string(i + 1) + "\"' must be positive (p_" + std::to_string(i + 1) +
                       " > 0)");

  if (!root.contains("lambda")) throw ParseError("missing key 'lambda'");
  const double lambda = finite_number(root["lambda"], "lambda");
  if (!(lambda > 0.0)) throw ParseError("'lambda' must be positive");
  std::vector<double> lambdas(n, lambda);
  if (root.contains("lambdas")) {
    const json& lj = root["lambdas"];
    if (!lj.is_array() || static_cast<long>(lj.size()) != n)
      throw ParseError("'lambdas' must be an array of n = " + std::to_string(n) + " numbers");
    for (long i = 0; i < n; ++i) {
      const std::string key = "lambdas[" + std::to_string(i) + "]";
      lambdas[i] = finite_number(lj[i], key);
      if (!(lambdas[i] >= lambda)) throw ParseError("'" + key + "' must be >= lambda");
    }
  }
  try {
    return AffineModel(AffinePolynomial(static_cast<int>(n), std::move(coeffs)), ShapeParams{lambda, lambdas});
  } catch (const Error& e) {
    throw ParseError(std::string("invalid model: ") + e.what());
  }
}

AffineModel parse_model_file(const std::string& path) { return parse_model_json(read_file(path)); }

std::string model_to_json(const AffineModel& model, int indent) {
  const int n = model.dim();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << n); ++b)
    if (model.poly.coeff_bits(b) != 0.0) masks.push_back(b);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  nlohmann::ordered_json j;
  j["n"] = n;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (std::uint32_t b : masks) coeffs[SubsetMask(b, n).label()] = model.poly.coeff_bits(b);
  j["coeffs"] = coeffs;
  j["lambda"] = model.shapes.lambda;
  j["lambdas"] = model.shapes.lambdas;
  return dump_json(j, indent);
}

std::vector<std::pair<double, double>> parse_marginals_json(const std::string& text) {
  const json root = parse_text(text);
  if (!root.is_object() || !root.contains("marginals") || !root["marginals"].is_array())
    throw ParseError("marginals file must be {\"marginals\": [{\"scale\": .., \"shape\": ..}, ...]}");
  std::vector<std::pair<double, double>> out;
  const json& arr = root["marginals"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string key = "marginals[" + std::to_string(i) + "]";
    if (!arr[i].is_object() || !arr[i].contains("scale") || !arr[i].contains("shape"))
      throw ParseError("'" + key + "' needs 'scale' and 'shape'");
    const double p = finite_number(arr[i]["scale"], key + ".scale");
    const double s = finite_number(arr[i]["shape"], key + ".shape");
    if (!(p > 0.0)) throw ParseError("'" + key + ".scale' must be positive");
    if (!(s > 0.0)) throw ParseError("'" + key + ".shape' must be positive");
    out.emplace_back(p, s);
  }
  return out;
}

std::vector<std::pair<double, double>> parse_marginals_file(const std::string& path) {
  return parse_marginals_json(read_file(path));
}

}  // namespace gammacop
