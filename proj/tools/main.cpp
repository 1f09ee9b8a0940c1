#include <CLI11.hpp>
#include <Eigen/Core>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "torus/antisym.hpp"
#include "torus/arith.hpp"
#include "torus/construct.hpp"
#include "torus/io.hpp"
#include "torus/nodal.hpp"
#include "torus/spectra.hpp"

namespace {

using torus::Rational;
using nlohmann::json;
namespace spectra = torus::spectra;
namespace nodal = torus::nodal;
namespace antisym = torus::antisym;
namespace construct = torus::construct;
namespace io = torus::io;

constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;
constexpr int kExitUnstable = 4;
constexpr int kExitIo = 5;

// "a/b" or "irrational:<float>".
spectra::TorusShape parse_torus(const std::string& spec) {
  const std::string prefix = "irrational:";
  if (spec.rfind(prefix, 0) == 0) {
    return spectra::TorusShape::irrational_mode(std::stod(spec.substr(prefix.size())));
  }
  return spectra::TorusShape::from_rho_sq(Rational::parse(spec));
}

void emit(const json& j, const std::string& output_path) {
  std::string text = j.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open '" + output_path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + output_path + "'");
}

json torus_json(const spectra::TorusShape& t) {
  json j;
  j["irrational"] = t.irrational;
  if (!t.irrational) j["rho_sq"] = io::to_json(t.rho_sq);
  j["rho"] = t.rho_value;
  return j;
}

spectra::Eigenfunction random_eigenfunction(const spectra::TorusShape& torus,
                                            const spectra::Eigenspace& space,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd c(space.multiplicity());
  for (int i = 0; i < c.size(); ++i) c[i] = normal(rng);
  if (c.lpNorm<Eigen::Infinity>() == 0.0) c[0] = 1.0;
  return spectra::make_eigenfunction(torus, space, std::move(c));
}

int cmd_spectrum(const std::string& torus_spec, const std::string& lambda_max,
                 const std::string& output) {
  auto torus = parse_torus(torus_spec);
  auto spaces = spectra::enumerate_eigenspaces(torus, Rational::parse(lambda_max));
  json j;
  j["torus"] = torus_json(torus);
  j["lambda_max"] = lambda_max;
  json list = json::array();
  for (const auto& s : spaces) list.push_back(io::to_json(s));
  j["eigenspaces"] = list;
  emit(j, output);
  return 0;
}

int cmd_antisym(const std::string& torus_spec, const std::string& lambda,
                int samples, std::uint64_t seed, const std::string& output) {
  auto torus = parse_torus(torus_spec);
  auto space = spectra::eigenspace_of(torus, Rational::parse(lambda));
  auto v = antisym::antisymmetry_vector(space, torus);
  auto action = antisym::verify_on_basis(space, v);
  json j;
  j["torus"] = torus_json(torus);
  j["lambda"] = lambda;
  j["vector"] = io::to_json(v);
  json terms = json::array();
  for (const auto& t : action.terms) {
    terms.push_back(json{{"basis", io::to_json(t.function)},
                         {"phase1", t.phase1},
                         {"phase2", t.phase2},
                         {"sign", t.sign}});
  }
  j["basis_action"] = terms;
  if (samples > 0) {
    auto u = random_eigenfunction(torus, space, seed);
    j["sampling_residual"] = antisym::verify_by_sampling(u, v, samples, seed);
    j["seed"] = seed;
  }
  emit(j, output);
  return 0;
}

int cmd_verify_arith(std::int64_t alpha, std::int64_t beta, std::int64_t lambda_max,
                     const std::string& output) {
  auto report =
      torus::arith::verify_generalized_lemma({alpha, beta}, lambda_max);
  json j;
  j["form"] = {{"alpha", alpha}, {"beta", beta}};
  j["lambda_max"] = lambda_max;
  j["representations_checked"] = report.representations_checked;
  j["violations"] = json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back(json{{"lambda", v.lambda}, {"m", v.rep.m}, {"n", v.rep.n}});
  }
  j["pass"] = report.ok();
  emit(j, output);
  return report.ok() ? 0 : 1;
}

nodal::CountConfig make_count_config(int base_res, int max_res, double tau_rel) {
  nodal::CountConfig cfg;
  cfg.base_resolution = base_res;
  cfg.max_resolution = max_res;
  cfg.tau_relative = tau_rel;
  return cfg;
}

spectra::Eigenfunction load_function(const spectra::TorusShape& torus,
                                     const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j = json::parse(in);
  return io::eigenfunction_from_json(torus, j);
}

int cmd_count(const std::string& torus_spec, const std::string& function_path,
              int base_res, int max_res, double tau_rel, const std::string& output) {
  auto torus = parse_torus(torus_spec);
  auto u = load_function(torus, function_path);
  auto result = nodal::count_nodal_domains(u, make_count_config(base_res, max_res, tau_rel));
  json j;
  j["torus"] = torus_json(torus);
  j["config"] = {{"base_resolution", base_res},
                 {"max_resolution", max_res},
                 {"tau_relative", tau_rel}};
  j["count"] = result.count;
  j["resolution"] = result.resolution;
  j["summary"] = io::decomposition_summary(result.decomposition, torus);
  emit(j, output);
  return 0;
}

int cmd_parity_scan(const std::string& torus_spec, const std::string& lambda_max,
                    int per_space, std::uint64_t seed, int base_res, int max_res,
                    const std::string& output) {
  auto torus = parse_torus(torus_spec);
  if (!antisym::supported_regime(torus))
    throw antisym::UnsupportedRegime("no parity guarantee for this torus (rho^2 = " +
                                     torus.rho_sq.str() + ")");
  auto spaces = spectra::enumerate_eigenspaces(torus, Rational::parse(lambda_max));
  json j;
  j["torus"] = torus_json(torus);
  j["lambda_max"] = lambda_max;
  j["per_space"] = per_space;
  j["seed"] = seed;
  json entries = json::array();
  bool all_ok = true;
  std::uint64_t stream = 0;
  for (const auto& space : spaces) {
    if (space.lambda_value == 0.0) continue;
    auto v = antisym::antisymmetry_vector(space, torus);
    antisym::verify_on_basis(space, v);
    json entry;
    entry["lambda"] = space.exact ? json(space.lambda.str()) : json(space.lambda_value);
    entry["multiplicity"] = space.multiplicity();
    entry["vector"] = io::to_json(v);
    json funcs = json::array();
    for (int r = 0; r < per_space; ++r) {
      auto u = random_eigenfunction(torus, space, seed + 1000003 * (++stream));
      auto result =
          nodal::count_nodal_domains(u, make_count_config(base_res, max_res, 1e-9));
      auto pairing = antisym::pair_domains(result.decomposition, v);
      bool even = result.count % 2 == 0;
      bool balanced = pairing.max_discrepancy() == 0;
      all_ok = all_ok && even && balanced;
      funcs.push_back(json{{"count", result.count},
                           {"resolution", result.resolution},
                           {"even", even},
                           {"pairs", pairing.pairs.size()},
                           {"max_discrepancy", pairing.max_discrepancy()}});
    }
    entry["functions"] = funcs;
    entries.push_back(entry);
  }
  j["eigenspaces"] = entries;
  j["pass"] = all_ok;
  emit(j, output);
  return all_ok ? 0 : 1;
}

int cmd_construct(std::int64_t m, std::int64_t n, std::int64_t k, double eps,
                  int base_res, int max_res, const std::string& render_path,
                  int hyperbola_grid, const std::string& output) {
  auto c = construct::make_construction(m, n, k, eps);
  auto report = construct::verify_odd_count(c, make_count_config(base_res, max_res, 1e-9));
  json j = io::to_json(report);
  j["torus"] = torus_json(c.torus);
  if (c.is_base_case()) {
    auto points = construct::extract_zero_points(c.u, hyperbola_grid);
    j["hyperbola_residual"] = construct::hyperbola_residual(c, points);
    auto quad = construct::branch_quadrant_check(c, hyperbola_grid);
    j["branch_quadrants"] = {{"lower_left", quad.lower_left},
                             {"upper_right", quad.upper_right},
                             {"off_diagonal", quad.off_diagonal},
                             {"pass", quad.pass}};
  }
  j["reflection_residual"] = construct::reflection_symmetry_check(c.u, 1000);
  if (!render_path.empty()) {
    auto g = nodal::sign_grid(c.u, report.resolution, report.resolution);
    auto d = nodal::label_components(g);
    io::write_ppm(render_path, io::render_domains(d, {512, 512, true}));
    j["render"] = render_path;
  }
  emit(j, output);
  return 0;
}

int cmd_render(const std::string& torus_spec, const std::string& function_path,
               const std::string& out_path, int res, int width, int height,
               bool per_domain, const std::string& pgm_path) {
  auto torus = parse_torus(torus_spec);
  auto u = load_function(torus, function_path);
  auto g = nodal::sign_grid(u, res, res);
  io::RenderSpec spec{width, height, per_domain};
  if (per_domain || !pgm_path.empty()) {
    auto d = nodal::label_components(g);
    if (per_domain) io::write_ppm(out_path, io::render_domains(d, spec));
    else io::write_ppm(out_path, io::render_signs(g, spec));
    if (!pgm_path.empty()) io::write_pgm_labels(pgm_path, d);
  } else {
    io::write_ppm(out_path, io::render_signs(g, spec));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("NODAL_THREADS")) {
    Eigen::setNbThreads(std::max(1, std::atoi(threads)));
  }

  CLI::App app{"Nodal-domain parity toolkit for Laplacian eigenfunctions on flat tori"};
  app.require_subcommand(1);

  std::string torus_spec = "1/1";
  std::string lambda_max = "100";
  std::string lambda = "2";
  std::string output;
  std::string function_path;
  std::string render_path;
  std::string out_path = "out.ppm";
  std::string pgm_path;
  std::int64_t alpha = 1, beta = 1, lam_max_int = 1000000;
  std::int64_t m = 1, n = 1, k = 2;
  double eps = -1.0;  // default min(0.1, 1/(4kmn))
  double tau_rel = 1e-9;
  int base_res = 256, max_res = 4096;
  int per_space = 5;
  int samples = 0;
  int res = 512, width = 512, height = 512;
  int hyperbola_grid = 1024;
  bool per_domain = false;
  std::uint64_t seed = 42;

  auto* spectrum = app.add_subcommand("spectrum", "List eigenspaces up to lambda-max");
  spectrum->add_option("--rho-sq", torus_spec, "rho^2 as a/b, or irrational:<rho>");
  spectrum->add_option("--lambda-max", lambda_max, "eigenvalue bound (rational a/b)");
  spectrum->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* anti = app.add_subcommand("antisym", "Anti-symmetry vector for one eigenspace");
  anti->add_option("--rho-sq", torus_spec, "rho^2 as a/b, or irrational:<rho>");
  anti->add_option("--lambda", lambda, "eigenvalue as a/b")->required();
  anti->add_option("--samples", samples, "also sample a random eigenfunction");
  anti->add_option("--seed", seed, "RNG seed");
  anti->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* varith = app.add_subcommand("verify-arith", "Exhaustive valuation-lemma scan");
  varith->add_option("--alpha", alpha, "form coefficient (odd)");
  varith->add_option("--beta", beta, "form coefficient (odd, alpha+beta = 2 mod 4)");
  varith->add_option("--lambda-max", lam_max_int, "scan bound");
  varith->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* count = app.add_subcommand("count", "Count nodal domains of an eigenfunction");
  count->add_option("--rho-sq", torus_spec, "rho^2 as a/b, or irrational:<rho>");
  count->add_option("--function", function_path, "eigenfunction JSON file")->required();
  count->add_option("--base-res", base_res, "starting grid resolution");
  count->add_option("--max-res", max_res, "refinement ceiling");
  count->add_option("--tau", tau_rel, "relative zero-band half-width");
  count->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* scan = app.add_subcommand("parity-scan", "Even-count verification sweep");
  scan->add_option("--rho-sq", torus_spec, "rho^2 as a/b, or irrational:<rho>");
  scan->add_option("--lambda-max", lambda_max, "eigenvalue bound");
  scan->add_option("--per-space", per_space, "random eigenfunctions per eigenspace");
  scan->add_option("--seed", seed, "RNG seed");
  scan->add_option("--base-res", base_res, "starting grid resolution");
  scan->add_option("--max-res", max_res, "refinement ceiling");
  scan->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* cons = app.add_subcommand("construct", "Odd-count eigenfunction family");
  cons->add_option("-m", m, "first index");
  cons->add_option("-n", n, "second index");
  cons->add_option("-k", k, "perturbation index multiplier (>= 2)");
  cons->add_option("--eps", eps, "perturbation size in (0,1)");
  cons->add_option("--base-res", base_res, "starting grid resolution");
  cons->add_option("--max-res", max_res, "refinement ceiling");
  cons->add_option("--render", render_path, "write per-domain PPM here");
  cons->add_option("--hyperbola-grid", hyperbola_grid, "zero-extraction grid (base case)");
  cons->add_option("-o,--output", output, "write JSON here instead of stdout");

  auto* rend = app.add_subcommand("render", "Rasterize a nodal set to PPM");
  rend->add_option("--rho-sq", torus_spec, "rho^2 as a/b, or irrational:<rho>");
  rend->add_option("--function", function_path, "eigenfunction JSON file")->required();
  rend->add_option("--out", out_path, "output PPM path");
  rend->add_option("--res", res, "sampling grid resolution");
  rend->add_option("--width", width, "image width");
  rend->add_option("--height", height, "image height");
  rend->add_flag("--per-domain", per_domain, "color per domain instead of per sign");
  rend->add_option("--pgm", pgm_path, "also write the label matrix as PGM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(torus_spec, lambda_max, output);
    if (anti->parsed()) return cmd_antisym(torus_spec, lambda, samples, seed, output);
    if (varith->parsed()) return cmd_verify_arith(alpha, beta, lam_max_int, output);
    if (count->parsed())
      return cmd_count(torus_spec, function_path, base_res, max_res, tau_rel, output);
    if (scan->parsed())
      return cmd_parity_scan(torus_spec, lambda_max, per_space, seed, base_res, max_res,
                             output);
    if (cons->parsed())
      return cmd_construct(m, n, k, eps, base_res, max_res, render_path, hyperbola_grid,
                           output);
    if (rend->parsed())
      return cmd_render(torus_spec, function_path, out_path, res, width, height, per_domain,
                        pgm_path);
  } catch (const antisym::UnsupportedRegime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const antisym::NotAntisymmetric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nodal::UnstableCount& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
