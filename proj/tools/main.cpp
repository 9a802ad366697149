#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "haway/analysis.hpp"
#include "haway/config.hpp"
#include "haway/harness.hpp"
#include "haway/probes.hpp"
#include "haway/runner.hpp"

namespace fs = std::filesystem;
using namespace haway;

namespace {

void write_probe_file(const fs::path& dir, const ProbeSeries& s) {
  std::ofstream os(dir / probe_filename(s.x, s.y));
  write_probe_csv(os, s);
}

FlowState parse_flow(const std::string& text) {
  FlowState flow;
  if (text.empty()) return flow;
  std::istringstream is(text);
  char comma;
  if (!(is >> flow.u0 >> comma >> flow.v0))
    throw CLI::ValidationError("--flow expects u0,v0");
  return flow;
}

int cmd_run(const std::string& config_path, const std::string& out) {
  SimulationConfig cfg = load_config(config_path);
  if (!out.empty()) cfg.out_dir = out;
  fs::create_directories(cfg.out_dir.empty() ? "." : cfg.out_dir);
  RunResult result = run(cfg);
  const fs::path dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
  for (const ProbeSeries& s : result.probes) write_probe_file(dir, s);
  std::cout << "ran " << result.steps << " steps, dt = " << result.dt << ", "
            << result.probes.size() << " probe file(s) in " << dir.string()
            << "\n";
  return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& out) {
  std::ifstream fa(a_path), fb(b_path);
  if (!fa || !fb) {
    std::cerr << "compare: cannot open input series\n";
    return 1;
  }
  ProbeSeries a = read_probe_csv(fa);
  ProbeSeries b = read_probe_csv(fb);
  ErrorSeries e = l2_error(a, b);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    os = &file;
  }
  *os << "step,time,abs_err,running_l2\n";
  double linf = 0.0;
  for (std::size_t k = 0; k < e.abs_diff.size(); ++k) {
    linf = std::max(linf, e.abs_diff[k]);
    *os << k << ',' << a.times[k] << ',' << e.abs_diff[k] << ','
        << e.running_l2[k] << '\n';
  }
  std::cout << "L2 = " << e.total_l2 << "  Linf = " << linf << "\n";
  return 0;
}

int cmd_analyze_symbol(double kx, double ky, double c0) {
  const SymbolDecomposition d = symbol_eigen(kx, ky, c0);
  std::cout << "eigenvalues:\n";
  for (const Complex& ev : d.eigenvalues)
    std::cout << "  " << ev.real() << (ev.imag() < 0 ? " - " : " + ")
              << std::fabs(ev.imag()) << "i\n";
  const char* names[3] = {"lambda=0", "lambda=+ic0|k|", "lambda=-ic0|k|"};
  for (int v = 0; v < 3; ++v) {
    std::cout << names[v] << " eigenvector:";
    for (const Complex& c : d.eigenvectors[v])
      std::cout << " (" << c.real() << ',' << c.imag() << ')';
    std::cout << "\n";
  }
  std::cout << "ker(M^2) basis: (1,-1,0,0), (0,0," << ky << ',' << -kx
            << ")\n";
  return 0;
}

int cmd_analyze_toy1d(double sigma1, double sigma2, const std::string& psi,
                      double t_end, double dt, const std::string& out) {
  const auto run_with = [&](auto&& f) { return toy_1d_model(sigma1, sigma2, f, t_end, dt); };
  ToySeries s;
  if (psi == "constant")
    s = run_with([](double) { return 1.0; });
  else if (psi == "decay")
    s = run_with([](double t) { return std::exp(-t); });
  else if (psi == "sin")
    s = run_with([](double t) { return std::sin(t); });
  else if (psi == "zero")
    s = run_with([](double) { return 0.0; });
  else {
    std::cerr << "toy1d: psi must be one of constant|decay|sin|zero\n";
    return 1;
  }
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    os = &file;
  }
  *os << "time,u,v\n";
  for (std::size_t k = 0; k < s.times.size(); ++k)
    *os << s.times[k] << ',' << s.u[k] << ',' << s.v[k] << '\n';
  return 0;
}

int cmd_analyze_reflect(double omega, double sigma1, double sigma2,
                        double angle_deg, double c0, bool matched) {
  PlaneWaveContext ctx;
  ctx.omega = omega;
  ctx.sigma1 = sigma1;
  ctx.sigma2 = sigma2;
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double ky_i = omega / c0 * std::cos(theta);
  double ky_t = ky_i;
  if (matched) {
    // Dispersion-consistent transmitted wavenumber: zero reflection.
    std::cout << "(matched transmitted wavenumber is complex; reporting the"
                 " real-k interface mismatch instead)\n";
  }
  const ReflectionResult r = reflection_coefficient(ctx, ky_i, ky_t);
  std::cout << "ky_i = " << ky_i << "  R = " << r.R.real() << " + "
            << r.R.imag() << "i  |R| = " << std::abs(r.R)
            << "  T = " << r.T.real() << " + " << r.T.imag() << "i\n";
  return 0;
}

int cmd_experiment(const std::string& name, const std::string& out,
                   const std::string& layers_arg, const std::string& flow_arg,
                   long steps) {
  fs::create_directories(out);
  if (name == "pbm1" || name == "pbm2") {
    ExperimentSpec spec = name == "pbm1" ? pbm1_spec() : pbm2_spec();
    if (steps > 0) spec.steps = steps;
    RunResult result = name == "pbm1" ? run_pbm1(spec) : run_pbm2(spec);
    for (const ProbeSeries& s : result.probes) write_probe_file(out, s);
    std::cout << name << ": " << result.probes.size() << " probe files in "
              << out << "\n";
    return 0;
  }
  if (name == "physical") {
    std::vector<int> layers;
    std::istringstream ls(layers_arg);
    std::string tok;
    while (std::getline(ls, tok, ',')) layers.push_back(std::stoi(tok));
    const FlowState flow = parse_flow(flow_arg);
    PhysicalSpec spec;
    if (steps > 0) spec.steps = steps;
    std::ofstream summary(fs::path(out) / "summary.csv");
    summary << "layers,u0,v0,final_l2\n";
    for (int n : layers) {
      PhysicalResult r = run_physical(spec, n, flow);
      std::ostringstream errname;
      errname << "error_l2_" << n << "layers.csv";
      std::ofstream es(fs::path(out) / errname.str());
      es << "step,time,abs_err,running_l2\n";
      for (std::size_t k = 0; k < r.error.abs_diff.size(); ++k)
        es << k << ',' << r.probe.times[k] << ',' << r.error.abs_diff[k] << ','
           << r.error.running_l2[k] << '\n';
      std::ostringstream pname, rname;
      pname << "probe_" << n << "layers.csv";
      rname << "reference_" << n << "layers.csv";
      std::ofstream ps(fs::path(out) / pname.str());
      write_probe_csv(ps, r.probe);
      std::ofstream rs(fs::path(out) / rname.str());
      write_probe_csv(rs, r.reference);
      summary << n << ',' << flow.u0 << ',' << flow.v0 << ','
              << r.error.total_l2 << '\n';
      std::cout << "layers " << n << ": final L2 = " << r.error.total_l2
                << "\n";
    }
    return 0;
  }
  std::cerr << "experiment: unknown name " << name << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-D advective acoustics on staggered grids with split-field "
               "absorbing layers"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  auto* run_cmd = app.add_subcommand("run", "run a simulation config");
  run_cmd->add_option("config", config_path, "key = value config file")
      ->required();
  run_cmd->add_option("--out", out_dir, "output directory");

  std::string series_a, series_b, compare_out;
  auto* cmp = app.add_subcommand("compare", "L2/Linf error between two series");
  cmp->add_option("seriesA", series_a)->required();
  cmp->add_option("seriesB", series_b)->required();
  cmp->add_option("--out", compare_out, "write the error series to a file");

  auto* analyze = app.add_subcommand("analyze", "module analysis");
  analyze->require_subcommand(1);
  double kx = 1.0, ky = 0.0, c0 = 1.0;
  auto* sym = analyze->add_subcommand("symbol", "principal-symbol eigenstructure");
  sym->add_option("--kx", kx);
  sym->add_option("--ky", ky);
  sym->add_option("--c0", c0);

  double sigma1 = 1.0, sigma2 = 1.0, t_end = 40.0, toy_dt = 0.0;
  std::string psi = "constant", toy_out;
  auto* toy = analyze->add_subcommand("toy1d", "1-D non-hyperbolic layer model");
  toy->add_option("--sigma1", sigma1);
  toy->add_option("--sigma2", sigma2);
  toy->add_option("--psi", psi, "constant|decay|sin|zero");
  toy->add_option("--t-end", t_end);
  toy->add_option("--dt", toy_dt);
  toy->add_option("--out", toy_out);

  double omega = 1.0, angle = 0.0;
  bool matched = false;
  auto* refl = analyze->add_subcommand("reflect", "interface reflection coefficient");
  refl->add_option("--omega", omega);
  refl->add_option("--sigma1", sigma1);
  refl->add_option("--sigma2", sigma2);
  refl->add_option("--angle", angle, "incidence angle in degrees");
  refl->add_option("--c0", c0);
  refl->add_flag("--matched", matched);

  std::string exp_name, layers = "4,10,20", flow_arg;
  long exp_steps = 0;
  auto* exp = app.add_subcommand("experiment", "canned studies");
  exp->add_option("name", exp_name, "pbm1|pbm2|physical")->required();
  exp->add_option("--out", out_dir, "output directory")->required();
  exp->add_option("--layers", layers, "comma-separated layer counts");
  exp->add_option("--flow", flow_arg, "u0,v0");
  exp->add_option("--steps", exp_steps);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(config_path, out_dir);
    if (*cmp) return cmd_compare(series_a, series_b, compare_out);
    if (*sym) return cmd_analyze_symbol(kx, ky, c0);
    if (*toy) {
      const double dt =
          toy_dt > 0.0 ? toy_dt : 0.05 / std::max(sigma1, sigma2);
      return cmd_analyze_toy1d(sigma1, sigma2, psi, t_end, dt, toy_out);
    }
    if (*refl) return cmd_analyze_reflect(omega, sigma1, sigma2, angle, c0, matched);
    if (*exp) return cmd_experiment(exp_name, out_dir, layers, flow_arg, exp_steps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
