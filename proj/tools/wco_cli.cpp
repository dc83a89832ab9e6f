// Command-line front end. Exit codes: 0 pass, 1 analytic failure, 2 usage error.
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wco/apply.hpp"
#include "wco/bounds.hpp"
#include "wco/certificates.hpp"
#include "wco/errors.hpp"
#include "wco/finite_section.hpp"
#include "wco/generator.hpp"
#include "wco/json_io.hpp"
#include "wco/presets.hpp"
#include "wco/selfmap.hpp"
#include "wco/tables.hpp"

namespace {

using namespace wco;

struct RunConfig {
  std::string preset;
  std::string spec_path;
  double alpha = 1.0;
  std::string z = "0.5";
  double t = 0.5;
  int n = 20;
  std::string grid = "21x64";
  int quad_nodes = 64;
  double tol = 1e-11;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cplx parse_complex(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw UsageError("cannot parse complex number '" + text + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw UsageError("cannot parse complex number '" + text + "'");
  }
  return {re, im};
}

DiscGrid parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("grid must look like RADIIxANGLES, e.g. 21x64");
  try {
    return DiscGrid::polar(std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1)));
  } catch (const std::logic_error&) {
    throw UsageError("grid must look like RADIIxANGLES, e.g. 21x64");
  }
}

QuadratureConfig quad_config(const RunConfig& cfg) {
  QuadratureConfig q;
  q.nodes = cfg.quad_nodes;
  q.tol = cfg.tol;
  validate(q);
  return q;
}

OperatorSpec resolve_spec(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.spec_path.empty()) throw UsageError("give exactly one of --preset or --spec");
  return cfg.preset.empty() ? load_spec_file(cfg.spec_path) : preset_spec(cfg.preset);
}

void add_spec_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--preset", cfg.preset, "named operator");
  sub->add_option("--spec", cfg.spec_path, "operator JSON file {phi1, phi2, p, q}");
}

void add_format(CLI::App* sub, RunConfig& cfg, std::vector<std::string> allowed) {
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(allowed));
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_check(const RunConfig& cfg) {
  const OperatorSpec spec = resolve_spec(cfg);
  const DiscGrid grid = parse_grid(cfg.grid);
  const std::vector<Certificate> certs = {well_defined_certificate(spec, grid),
                                          selfmap_condition_sampled(spec, interior_t_grid(33), grid),
                                          selfmap_certificate_exact(spec, grid)};
  bool pass = true;
  for (const auto& c : certs) pass = pass && c.pass;
  if (cfg.format == "text") {
    for (const auto& c : certs) {
      std::cout << to_string(c.kind) << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.nodes << " nodes, "
                << c.failures << " failures, min margin " << c.min_margin << ")\n";
      for (std::size_t i = 0; i < std::min<std::size_t>(3, c.witnesses.size()); ++i) {
        const auto& w = c.witnesses[i];
        std::cout << "  witness z=" << w.z.real() << (w.z.imag() < 0 ? "" : "+") << w.z.imag() << "i";
        if (w.t) std::cout << " t=" << *w.t;
        std::cout << " margin=" << w.margin << (w.note.empty() ? "" : " (" + w.note + ")") << '\n';
      }
    }
  } else {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(to_json(c));
    emit({{"spec", to_json(spec)}, {"pass", pass}, {"certificates", arr}});
  }
  return pass ? 0 : 1;
}

int cmd_kernel(const RunConfig& cfg) {
  const OperatorSpec spec = resolve_spec(cfg);
  const cplx z = parse_complex(cfg.z);
  emit({{"t", cfg.t}, {"z", to_json(z)}, {"kernel", to_json(kernel(spec, cfg.t, z))}});
  return 0;
}

int cmd_apply(const RunConfig& cfg, const std::string& f_text, const std::string& method) {
  const OperatorSpec spec = resolve_spec(cfg);
  const AnalyticSeries f = series_from_json(parse_json(f_text));
  const cplx z = parse_complex(cfg.z);
  const QuadratureConfig quad = quad_config(cfg);
  const cplx v = method == "composed" ? apply_composed(spec, f, z, quad) : apply_direct(spec, f, z, quad);
  emit({{"z", to_json(z)}, {"method", method}, {"value", to_json(v)}});
  return 0;
}

int cmd_matrix(const RunConfig& cfg, const std::string& family, const std::string& params) {
  MatrixFamily fam;
  if (!params.empty()) {
    std::vector<double> v;
    std::stringstream ss(params);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        v.push_back(std::stod(item));
      } catch (const std::logic_error&) {
        throw UsageError("--params expects four comma-separated numbers");
      }
    }
    if (v.size() != 4) throw UsageError("--params expects four comma-separated numbers");
    if (family == "m1")
      fam = M1Params{v[0], v[1], v[2], v[3]};
    else if (family == "m2")
      fam = M2Params{v[0], v[1], v[2], v[3]};
    else
      throw UsageError("--family must be m1 or m2 with --params");
  } else {
    if (cfg.preset.empty()) throw UsageError("give --preset (hilbert, reduced-hilbert, cesaro) or --family/--params");
    fam = matrix_preset(cfg.preset);
  }
  const DenseMatrix m = truncate(fam, cfg.n);
  if (cfg.format == "csv")
    std::cout << to_csv(m);
  else
    emit(to_json(m));
  return 0;
}

int cmd_bound(const RunConfig& cfg, bool with_theorem3) {
  const OperatorSpec spec = resolve_spec(cfg);
  const LinearFractionalData lf = lf_data(spec);
  EndpointIntegralConfig ic;
  ic.tol = cfg.tol;
  BoundReport rep = prop4_bound(lf, cfg.alpha, ic);
  if (with_theorem3) {
    const Theorem3Result th = theorem3_bound(spec, cfg.alpha);
    rep.theorem3_value = th.value;
  }
  emit(to_json(rep));
  return rep.bound_value ? 0 : 1;
}

int cmd_norm(const RunConfig& cfg, const std::string& method) {
  const OperatorSpec spec = resolve_spec(cfg);
  SectionOptions opts;
  opts.method = method == "sampled" ? SectionMethod::sampled : SectionMethod::series;
  std::vector<int> sizes;
  for (const int d : {4, 2, 1})
    if (cfg.n / d >= 1 && (sizes.empty() || sizes.back() != cfg.n / d)) sizes.push_back(cfg.n / d);
  json rows = json::array();
  double last = 0.0;
  bool ok = true;
  for (const int n : sizes) {
    const FiniteSection fs = finite_section(spec, cfg.alpha, n, opts);
    const SpectralNorm sn = spectral_norm(fs.matrix);
    last = sn.value;
    ok = ok && fs.converged && sn.converged;
    rows.push_back({{"n", n},
                    {"norm", sn.value},
                    {"converged", fs.converged && sn.converged},
                    {"ill_conditioned", fs.ill_conditioned}});
  }
  if (cfg.format == "csv") {
    std::cout << "n,norm,converged\n";
    for (const auto& r : rows) std::cout << r["n"] << ',' << r["norm"] << ',' << r["converged"] << '\n';
  } else {
    emit({{"alpha", cfg.alpha}, {"lower_bound", last}, {"sections", rows}});
  }
  return ok ? 0 : 1;
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.spec_path.empty()) throw UsageError("give exactly one of --preset or --spec");
  const GeneratorInput gin =
      cfg.preset.empty() ? generator_from_json(read_json_file(cfg.spec_path)) : generator_preset(cfg.preset);
  const OperatorSpec spec = generated_spec(gin);
  const Certificate cert = verify_generated(gin, parse_grid(cfg.grid), interior_t_grid(33));
  emit({{"input", to_json(gin)}, {"spec", to_json(spec)}, {"certificate", to_json(cert)}});
  return cert.pass ? 0 : 1;
}

int cmd_tables(const RunConfig& cfg, int table, const std::string& golden_path) {
  const json golden = golden_path.empty() ? default_golden() : read_json_file(golden_path);
  const TablesReport rep = run_tables(golden, table > 0 ? std::optional<int>(table) : std::nullopt);
  if (cfg.format == "text") {
    for (const auto& c : rep.checks)
      std::cout << "table " << c.table << "  " << c.row << "  " << c.column << "  " << (c.pass ? "ok" : "MISMATCH")
                << "  max error " << c.max_error << '\n';
  } else {
    emit(to_json(rep));
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral operators as integrals of weighted composition operators"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "well-definedness and self-map certificates");
  add_spec_options(check, cfg);
  check->add_option("--grid", cfg.grid, "polar grid RADIIxANGLES");
  add_format(check, cfg, {"json", "text"});

  auto* kern = app.add_subcommand("kernel", "weight and symbol of the composition kernel at (t, z)");
  add_spec_options(kern, cfg);
  kern->add_option("--t", cfg.t)->check(CLI::Range(0.0, 1.0));
  kern->add_option("--z", cfg.z, "re or re,im");

  std::string f_text = "[1]", method = "direct";
  auto* apply = app.add_subcommand("apply", "evaluate I(f)(z)");
  add_spec_options(apply, cfg);
  apply->add_option("--f", f_text, "Taylor coefficients as JSON, e.g. [1, 0.5] or [[1,0],[0,1]]");
  apply->add_option("--z", cfg.z, "re or re,im");
  apply->add_option("--method", method)->check(CLI::IsMember({"direct", "composed"}));
  apply->add_option("--quad-nodes", cfg.quad_nodes);
  apply->add_option("--tol", cfg.tol);

  std::string family, params;
  auto* matrix = app.add_subcommand("matrix", "sections of the M1 / M2 matrix families");
  matrix->add_option("--preset", cfg.preset, "hilbert, reduced-hilbert or cesaro");
  matrix->add_option("--family", family)->check(CLI::IsMember({"m1", "m2"}));
  matrix->add_option("--params", params, "p0,q0,x1,x2 (m1) or p0,q0,lambda1,lambda2 (m2)");
  matrix->add_option("--n", cfg.n)->check(CLI::PositiveNumber);
  add_format(matrix, cfg, {"json", "csv"});

  bool theorem3 = false;
  auto* bound = app.add_subcommand("bound", "boundedness criterion for linear fractional kernels");
  add_spec_options(bound, cfg);
  bound->add_option("--alpha", cfg.alpha)->check(CLI::Range(0.0, 2.0));
  bound->add_option("--tol", cfg.tol);
  bound->add_flag("--theorem3", theorem3, "also integrate the general two-term bracket (slow)");

  std::string norm_method = "series";
  auto* norm = app.add_subcommand("norm", "finite-section lower bounds for the D_alpha norm");
  add_spec_options(norm, cfg);
  norm->add_option("--alpha", cfg.alpha)->check(CLI::Range(0.0, 2.0));
  norm->add_option("--n", cfg.n)->check(CLI::PositiveNumber);
  norm->add_option("--method", norm_method)->check(CLI::IsMember({"series", "sampled"}));
  add_format(norm, cfg, {"json", "csv"});

  auto* gen = app.add_subcommand("generate", "manufacture an operator from (phi1, phi2, p, omega)");
  gen->add_option("--preset", cfg.preset, "table6-case1 ... table6-case6");
  gen->add_option("--spec", cfg.spec_path, "generator JSON file {phi1, phi2, p, omega}");
  gen->add_option("--grid", cfg.grid, "polar grid RADIIxANGLES");

  int table = 0;
  std::string golden;
  auto* tables = app.add_subcommand("tables", "regenerate the reference tables and diff against golden values");
  tables->add_option("--table", table)->check(CLI::Range(1, 7));
  tables->add_option("--golden", golden, "golden JSON file overriding the embedded values");
  add_format(tables, cfg, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(cfg);
    if (kern->parsed()) return cmd_kernel(cfg);
    if (apply->parsed()) return cmd_apply(cfg, f_text, method);
    if (matrix->parsed()) return cmd_matrix(cfg, family, params);
    if (bound->parsed()) return cmd_bound(cfg, theorem3);
    if (norm->parsed()) return cmd_norm(cfg, norm_method);
    if (gen->parsed()) return cmd_generate(cfg);
    if (tables->parsed()) return cmd_tables(cfg, table, golden);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const SpecError& e) {
    std::cerr << "invalid specification: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "analytic failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
