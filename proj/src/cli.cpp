#include "gammacop/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gammacop/copulas.hpp"
#include "gammacop/densities.hpp"
#include "gammacop/dependence.hpp"
#include "gammacop/divisibility.hpp"
#include "gammacop/errors.hpp"
#include "gammacop/model_io.hpp"
#include "gammacop/sampling.hpp"
#include "gammacop/validation.hpp"

namespace gammacop {
namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string model_path;
  std::string out_path;
  std::string points_path;
  std::string marginals_path;
  std::string json_path;
  std::string grid_path;
  std::string method = "closed";
  std::string space = "copula";
  std::string function;
  std::vector<double> x, v, args, upper, lower;
  double z = 0.0;
  double tol = 1e-12;
  double rel_tol = 0.0;
  int max_terms = 0;
  long n_samples = 1000000;
  long n = 1000;
  std::uint64_t seed = 42;
  std::uint64_t stream = 0;
  bool log = false, pdf = false, conditional = false, force = false, full = false;
};

// Writes to --out when given, else to stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ArgumentError("cannot write '" + path + "'");
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

SeriesControl series_control(const Options& o) {
  SeriesControl ctl = SeriesControl::from_env();
  if (o.rel_tol > 0.0) ctl.rel_tol = o.rel_tol;
  if (o.max_terms > 0) ctl.max_terms = o.max_terms;
  ctl.validate();
  return ctl;
}

ojson vec(const std::vector<double>& v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(x);
  return a;
}

void emit(std::ostream& out, const ojson& j) { out << dump_json(j) << '\n'; }

CopulaModel build_copula(const AffineModel& m, const Options& o) {
  CopulaBuildOptions opt;
  opt.force = o.force;
  return CopulaModel::build(m, opt);
}

std::vector<std::vector<double>> read_points(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::vector<double>> pts;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string tok;
    bool numeric = true;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(tok, &used));
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (lineno == 1 && pts.empty()) continue;  // header
      throw ParseError(path + ":" + std::to_string(lineno) + ": not a row of numbers");
    }
    if (static_cast<int>(row.size()) != n)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(n) + " columns");
    pts.push_back(std::move(row));
  }
  return pts;
}

std::string csv_header(const char* prefix, int n, const char* extra = nullptr) {
  std::string h;
  for (int i = 0; i < n; ++i) h += (i ? "," : "") + std::string(prefix) + std::to_string(i + 1);
  if (extra) h += std::string(",") + extra;
  return h;
}

void csv_row(std::ostream& os, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
  os << '\n';
}

int cmd_check(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  const DivisibilityReport rep = check_infinite_divisibility(m.poly, o.tol);
  ojson j;
  j["n"] = m.dim();
  j["divisible"] = rep.divisible;
  j["singleton_ok"] = rep.singleton_ok;
  j["btilde_ok"] = rep.btilde_ok;
  j["tol"] = o.tol;
  ojson dual = ojson::object();
  for (std::uint32_t b = 0; b < rep.dual.size(); ++b) dual[SubsetMask(b, m.dim()).label()] = rep.dual.at_bits(b);
  j["dual"] = dual;
  ojson bt = ojson::object();
  for (const auto& [s, val] : rep.btilde) bt[s.label()] = val;
  j["btilde"] = bt;
  emit(out, j);
  return kExitOk;
}

int cmd_pdf(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  const SeriesControl ctl = series_control(o);
  if (!o.points_path.empty()) {
    const auto pts = read_points(o.points_path, m.dim());
    Sink sink(o.out_path, out);
    *sink << csv_header("x", m.dim(), "logpdf") << '\n';
    for (auto row : pts) {
      row.push_back(evaluate_density(m, std::vector<double>(row), ctl).logpdf);
      csv_row(*sink, row);
    }
    return kExitOk;
  }
  if (o.x.empty()) throw ArgumentError("give --x or --points");
  const DensityPoint p = evaluate_density(m, o.x, ctl);
  ojson j;
  j["x"] = vec(p.x);
  if (o.log)
    j["logpdf"] = p.logpdf;
  else
    j["pdf"] = p.pdf;
  Sink sink(o.out_path, out);
  emit(*sink, j);
  return kExitOk;
}

int cmd_copula(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  const CopulaModel c = build_copula(m, o);
  if (o.v.empty()) throw ArgumentError("give --v");
  if (static_cast<int>(o.v.size()) != m.dim()) throw ArgumentError("--v needs n = " + std::to_string(m.dim()) + " values");
  ojson j;
  j["v"] = vec(o.v);
  if (o.pdf)
    j["pdf"] = copula_pdf(c, o.v);
  else if (o.conditional)
    j["conditional"] = conditional_cdf(c, o.v[0], o.v[1]);
  else
    j["cdf"] = copula_cdf(c, o.v);
  if (c.forced()) j["forced"] = true;
  emit(out, j);
  return kExitOk;
}

int cmd_assembled(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  const CopulaModel c = build_copula(m, o);
  std::vector<std::pair<double, double>> marg;
  if (o.marginals_path.empty()) {
    for (int i = 0; i < m.dim(); ++i) marg.emplace_back(m.poly.singleton(i), m.shapes.lambdas[i]);
  } else {
    marg = parse_marginals_file(o.marginals_path);
  }
  const AssembledDistribution d(c, marg);
  if (static_cast<int>(o.x.size()) != m.dim()) throw ArgumentError("--x needs n = " + std::to_string(m.dim()) + " values");
  ojson j;
  j["x"] = vec(o.x);
  if (o.pdf) {
    const double lp = assembled_logpdf(d, o.x);
    j["logpdf"] = lp;
    j["pdf"] = std::exp(lp);
  } else {
    j["cdf"] = assembled_cdf(d, o.x);
  }
  emit(out, j);
  return kExitOk;
}

int cmd_dependence(const Options& o, std::ostream& out, bool tau) {
  const AffineModel m = parse_model_file(o.model_path);
  if (m.dim() != 2) throw ArgumentError("tau and rho need a bivariate model");
  const CopulaModel c = build_copula(m, o);
  const DependenceMethod method = parse_dependence_method(o.method);
  const SeriesControl ctl = series_control(o);
  DependenceResult r;
  if (method == DependenceMethod::closed_form) {
    const double r12 = copula_r12(c);
    r = tau ? kendall_tau_closed(r12, c.lambda(), c.lambdas()[0], c.lambdas()[1], ctl)
            : spearman_rho_closed(r12, c.lambda(), c.lambdas()[0], c.lambdas()[1], ctl);
  } else if (method == DependenceMethod::quadrature) {
    r = tau ? kendall_tau_quadrature(c) : spearman_rho_quadrature(c);
  } else {
    const RankDependence mc = dependence_monte_carlo(c, o.n_samples, o.seed, o.stream);
    r = tau ? mc.tau : mc.rho;
  }
  ojson j;
  j[tau ? "tau" : "rho"] = r.value;
  j["method"] = to_string(r.method);
  j["est_error"] = r.est_error;
  if (!tau && method == DependenceMethod::closed_form) j["cross_check_gap"] = r.cross_check_gap;
  if (method == DependenceMethod::monte_carlo) {
    j["n_samples"] = o.n_samples;
    j["seed"] = o.seed;
  }
  emit(out, j);
  return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  if (o.n < 1) throw ArgumentError("--n must be positive");
  const bool gamma_space = o.space == "gamma";
  if (!gamma_space && o.space != "copula") throw ArgumentError("--space must be copula or gamma");
  const int n = m.dim();
  Rng rng(o.seed, o.stream);
  Sink sink(o.out_path, out);
  std::ostream& os = *sink;
  os << csv_header(gamma_space ? "x" : "v", n) << '\n';
  if (gamma_space && n == 2) {
    const MultifactorSampler s(m);
    for (long i = 0; i < o.n; ++i) {
      const auto x = s(rng);
      csv_row(os, {x[0], x[1]});
    }
    return kExitOk;
  }
  const CopulaModel c = build_copula(m, o);
  for (long i = 0; i < o.n; ++i) {
    std::vector<double> v;
    if (n == 2) {
      const auto d = sample_copula(c, rng);
      v = {d[0], d[1]};
    } else {
      v = sample_copula_rosenblatt(c, rng);
    }
    if (gamma_space)
      for (int k = 0; k < n; ++k) v[k] = gamma_quantile(m.poly.singleton(k), m.shapes.lambdas[k], v[k]);
    csv_row(os, v);
  }
  return kExitOk;
}

ojson report_json(const ValidationReport& rep) {
  ojson j;
  j["overall"] = rep.overall;
  ojson checks = ojson::array();
  for (const auto& e : rep.checks) {
    ojson c;
    c["name"] = e.name;
    c["status"] = e.skipped ? "skipped" : (e.pass ? "pass" : "fail");
    c["target"] = e.target;
    c["computed"] = e.computed;
    c["tolerance"] = e.tolerance;
    if (!e.note.empty()) c["note"] = e.note;
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j;
}

void emit_grid(const AffineModel& m, const std::string& path) {
  if (m.dim() != 2) throw ArgumentError("--emit-grid supports bivariate models");
  const CopulaModel c = CopulaModel::build(m);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ArgumentError("cannot write '" + path + "'");
  os << "v1,v2,cdf,pdf\n";
  for (int i = 1; i < 50; ++i)
    for (int k = 1; k < 50; ++k) {
      const std::vector<double> v = {i / 50.0, k / 50.0};
      csv_row(os, {v[0], v[1], copula_cdf(c, v), copula_pdf2(c, v)});
    }
}

int cmd_validate(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  ValidationOptions opt;
  opt.full = o.full;
  opt.seed = o.seed;
  const ValidationReport rep = run_full_validation(m, opt, series_control(o));
  for (const auto& e : rep.checks) {
    out << (e.skipped ? "SKIP" : (e.pass ? "PASS" : "FAIL")) << ' ' << e.name;
    if (!e.skipped)
      out << " computed=" << format_double(e.computed) << " target=" << format_double(e.target)
          << " tol=" << format_double(e.tolerance);
    if (!e.note.empty()) out << " (" << e.note << ')';
    out << '\n';
  }
  out << (rep.overall ? "OVERALL PASS" : "OVERALL FAIL") << '\n';
  if (!o.json_path.empty()) {
    std::ofstream js(o.json_path, std::ios::binary);
    if (!js) throw ArgumentError("cannot write '" + o.json_path + "'");
    js << dump_json(report_json(rep)) << '\n';
  }
  if (!o.grid_path.empty()) emit_grid(m, o.grid_path);
  return rep.overall ? kExitOk : kExitValidationFail;
}

int cmd_fn(const Options& o, std::ostream& out) {
  const SeriesControl ctl = series_control(o);
  const auto& a = o.args;
  auto need = [&](std::size_t k, const char* usage) {
    if (a.size() != k) throw ArgumentError(std::string("--args expects ") + usage);
  };
  SeriesValue s;
  if (o.function == "phi3") {
    need(4, "a,b,x,y");
    s = horn_phi3(a[0], a[1], a[2], a[3], ctl);
  } else if (o.function == "fi") {
    need(6, "a,b,c,z1,z2,z3");
    s = lauricella_fi(a[0], a[1], a[2], a[3], a[4], a[5], ctl);
  } else if (o.function == "fii") {
    need(6, "l1,l2,z1,z2,z3,z4");
    s = lauricella_fii(a[0], a[1], a[2], a[3], a[4], a[5], ctl);
  } else {
    s = pfq(o.upper, o.lower, o.z, ctl);
  }
  ojson j;
  j["function"] = o.function;
  j["value"] = s.value();
  j["log_abs"] = s.log_abs();
  j["sign"] = s.mantissa < 0.0 ? -1 : 1;
  j["rel_error"] = s.rel_error();
  j["terms"] = s.terms;
  emit(out, j);
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const AffineModel m = parse_model_file(o.model_path);
  Sink sink(o.out_path, out);
  *sink << model_to_json(m) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multivariate gamma laws, their Laplace copulas and dependence measures", "gammacop"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto model_opt = [&](CLI::App* s) { s->add_option("--model", o.model_path, "Model JSON file")->required()->check(CLI::ExistingFile); };
  auto series_opts = [&](CLI::App* s) {
    s->add_option("--rel-tol", o.rel_tol, "Series relative tolerance");
    s->add_option("--max-terms", o.max_terms, "Series term budget per index (overrides GAMMACOP_MAX_TERMS)");
  };

  auto* check = app.add_subcommand("check", "Infinite-divisibility test");
  model_opt(check);
  check->add_option("--tol", o.tol, "Tolerance for btilde_S >= -tol")->capture_default_str();

  auto* pdf = app.add_subcommand("pdf", "Closed-form density of the model's law");
  model_opt(pdf);
  auto* px = pdf->add_option("--x", o.x, "Point, comma separated")->delimiter(',');
  auto* pp = pdf->add_option("--points", o.points_path, "CSV of points (batch mode)")->check(CLI::ExistingFile);
  px->excludes(pp);
  pdf->add_flag("--log", o.log, "Report log density");
  pdf->add_option("--out", o.out_path, "Output file");
  series_opts(pdf);

  auto* cop = app.add_subcommand("copula", "Laplace copula cdf, density or conditional cdf");
  model_opt(cop);
  cop->add_option("--v", o.v, "Point in [0,1]^n, comma separated")->delimiter(',')->required();
  auto* fpdf = cop->add_flag("--pdf", o.pdf, "Copula density");
  auto* fcond = cop->add_flag("--conditional", o.conditional, "dC/dv1 (bivariate)");
  fpdf->excludes(fcond);
  cop->add_flag("--force", o.force, "Skip the divisibility gate (empirical checks instead)");

  auto* asm_ = app.add_subcommand("assembled", "Copula with gamma marginals");
  model_opt(asm_);
  asm_->add_option("--marginals", o.marginals_path, "Marginals JSON file")->check(CLI::ExistingFile);
  asm_->add_option("--x", o.x, "Point, comma separated")->delimiter(',')->required();
  asm_->add_flag("--pdf", o.pdf, "Density instead of cdf");
  asm_->add_flag("--force", o.force, "Skip the divisibility gate");

  CLI::App* dep[2];
  const char* dep_names[2] = {"tau", "rho"};
  const char* dep_desc[2] = {"Kendall's tau of the bivariate copula", "Spearman's rho of the bivariate copula"};
  for (int i = 0; i < 2; ++i) {
    dep[i] = app.add_subcommand(dep_names[i], dep_desc[i]);
    model_opt(dep[i]);
    dep[i]->add_option("--method", o.method, "closed | quad | mc")->capture_default_str();
    dep[i]->add_option("--n-samples", o.n_samples, "Monte-Carlo sample size")->capture_default_str();
    dep[i]->add_option("--seed", o.seed, "Monte-Carlo seed")->capture_default_str();
    dep[i]->add_option("--stream", o.stream, "Monte-Carlo stream")->capture_default_str();
    dep[i]->add_flag("--force", o.force, "Skip the divisibility gate");
    series_opts(dep[i]);
  }

  auto* smp = app.add_subcommand("sample", "Draw samples as CSV");
  model_opt(smp);
  smp->add_option("--n", o.n, "Number of draws")->capture_default_str();
  smp->add_option("--seed", o.seed, "Seed")->capture_default_str();
  smp->add_option("--stream", o.stream, "Stream")->capture_default_str();
  smp->add_option("--space", o.space, "copula | gamma")->capture_default_str();
  smp->add_option("--out", o.out_path, "Output CSV (default stdout)");
  smp->add_flag("--force", o.force, "Skip the divisibility gate");

  auto* val = app.add_subcommand("validate", "Run the oracle checks on a model");
  model_opt(val);
  val->add_flag("--full", o.full, "Include Monte-Carlo and 3-D quadrature checks");
  val->add_option("--json", o.json_path, "Write the report as JSON");
  val->add_option("--emit-grid", o.grid_path, "Write a copula cdf/pdf grid as CSV (bivariate)");
  val->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  series_opts(val);

  auto* fn = app.add_subcommand("fn", "Evaluate a series special function");
  fn->add_option("function", o.function, "phi3 | fi | fii | pfq")
      ->required()
      ->check(CLI::IsMember({"phi3", "fi", "fii", "pfq"}));
  fn->add_option("--args", o.args, "Arguments, comma separated")->delimiter(',');
  fn->add_option("--upper", o.upper, "pfq upper parameters")->delimiter(',');
  fn->add_option("--lower", o.lower, "pfq lower parameters")->delimiter(',');
  fn->add_option("--z", o.z, "pfq argument");
  series_opts(fn);

  auto* norm = app.add_subcommand("normalize", "Rewrite a model in canonical form");
  model_opt(norm);
  norm->add_option("--out", o.out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (pdf->parsed()) return cmd_pdf(o, out);
    if (cop->parsed()) return cmd_copula(o, out);
    if (asm_->parsed()) return cmd_assembled(o, out);
    if (dep[0]->parsed()) return cmd_dependence(o, out, true);
    if (dep[1]->parsed()) return cmd_dependence(o, out, false);
    if (smp->parsed()) return cmd_sample(o, out);
    if (val->parsed()) return cmd_validate(o, out);
    if (fn->parsed()) return cmd_fn(o, out);
    if (norm->parsed()) return cmd_normalize(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (partial " << format_double(e.partial()) << ", estimated error "
        << format_double(e.estimated_error()) << ")\n";
    return kExitConvergence;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace gammacop
