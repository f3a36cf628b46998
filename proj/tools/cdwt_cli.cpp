// Command-line front end for the cdwt shared library.  All numerics go
// through the C API; this tool only handles flags, CSV and JSON.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdwt.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;
constexpr int kExitIo = 66;
constexpr int kExitCompute = 70;

constexpr double kTwoPi = 6.283185307179586476925286766559;

[[noreturn]] void die(int code, const std::string& msg) {
  std::fprintf(stderr, "cdwt: %s\n", msg.c_str());
  std::exit(code);
}

void check(int rc) {
  if (rc == CDWT_OK) return;
  const int code = (rc == CDWT_ERR_INPUT) ? kExitInput : kExitCompute;
  die(code, cdwt_last_error());
}

std::vector<double> make_grid(double e_min, double e_max, int n) {
  if (!(e_min < e_max) || n < 2) die(kExitInput, "grid requires e-min < e-max and n >= 2");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = e_min + (e_max - e_min) * i / (n - 1);
  return g;
}

void write_csv(const std::string& path, const char* header,
               const std::vector<double>& x, const std::vector<double>& y) {
  std::ofstream out(path);
  if (!out) die(kExitIo, "cannot open output file: " + path);
  out << header << "\n";
  char buf[80];
  for (size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x[i], y[i]);
    out << buf;
  }
  if (!out) die(kExitIo, "write failed: " + path);
}

void read_csv(const std::string& path, std::vector<double>& e, std::vector<double>& i) {
  std::ifstream in(path);
  if (!in) die(kExitIo, "cannot open input file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) die(kExitInput, "malformed CSV row: " + line);
    char* end = nullptr;
    const double ev = std::strtod(line.c_str(), &end);
    if (end == line.c_str()) continue;  // header row
    const double iv = std::strtod(line.c_str() + comma + 1, &end);
    e.push_back(ev);
    i.push_back(iv);
  }
  if (e.empty()) die(kExitInput, "no data rows in " + path);
}

ordered_json result_json(const cdwt_fit_result& r) {
  ordered_json j;
  j["model_kind"] = r.model_kind == CDWT_MODEL_SOLITON ? "soliton" : "zener";
  ordered_json p;
  if (r.model_kind == CDWT_MODEL_SOLITON) {
    p["c1"] = r.params[0];
    p["et"] = r.params[1];
    p["cv"] = r.params[2];
  } else {
    p["gp"] = r.params[0];
    p["et"] = r.params[1];
  }
  j["params"] = p;
  j["sum_squared_residual"] = r.sum_squared_residual;
  j["iterations"] = r.iterations;
  j["converged"] = static_cast<bool>(r.converged);
  return j;
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) die(kExitIo, "cannot open output file: " + path);
  out << j.dump(2) << "\n";
  if (!out) die(kExitIo, "write failed: " + path);
}

struct GridOpts {
  double e_min = 0.05;
  double e_max = 3.0;
  int n = 200;
};

void add_grid(CLI::App* cmd, GridOpts& g) {
  cmd->add_option("--e-min", g.e_min, "lower edge of the field grid");
  cmd->add_option("--e-max", g.e_max, "upper edge of the field grid");
  cmd->add_option("--n", g.n, "number of grid points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charge-density-wave tunneling current models"};
  app.require_subcommand(1);

  // eval -----------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate a current model on a field grid");
  std::string eval_model = "soliton";
  double c1 = 1.0, et = 1.0, cv = 1.0, gp = 1.0;
  GridOpts eval_grid;
  std::string eval_out;
  eval->add_option("--model", eval_model, "soliton or zener")
      ->check(CLI::IsMember({"soliton", "zener"}));
  eval->add_option("--c1", c1, "soliton amplitude");
  eval->add_option("--et", et, "threshold field");
  eval->add_option("--cv", cv, "soliton geometric factor");
  eval->add_option("--gp", gp, "Zener conductance");
  add_grid(eval, eval_grid);
  eval->add_option("--out", eval_out, "output CSV path")->required();

  // lin ------------------------------------------------------------------
  auto* lin = app.add_subcommand("lin", "pair-creation rate for D = 1, 2 or 3");
  int lin_d = 1;
  double lin_charge = 1.0, lin_mass = 1.0, lin_rel_tol = 1e-12;
  long lin_max_terms = 1000000;
  GridOpts lin_grid{0.01, 2.0, 100};
  std::string lin_out;
  lin->add_option("--d", lin_d, "spatial dimension")->check(CLI::Range(1, 3));
  lin->add_option("--charge", lin_charge, "charge e");
  lin->add_option("--mass", lin_mass, "mass m");
  lin->add_option("--rel-tol", lin_rel_tol, "series tolerance");
  lin->add_option("--max-terms", lin_max_terms, "series term cap");
  add_grid(lin, lin_grid);
  lin->add_option("--out", lin_out, "output CSV path")->required();

  // fit / compare --------------------------------------------------------
  auto* fit = app.add_subcommand("fit", "fit one model to an I-E dataset");
  auto* compare = app.add_subcommand("compare", "fit both models and pick the better");
  std::string fit_data, fit_out, fit_model_name = "soliton";
  cdwt_fit_options fopts;
  cdwt_fit_options_default(&fopts);
  for (CLI::App* cmd : {fit, compare}) {
    cmd->add_option("--data", fit_data, "input CSV with E,I columns")->required();
    cmd->add_option("--out", fit_out, "output JSON path")->required();
    cmd->add_option("--seed", fopts.seed, "restart seed");
    cmd->add_option("--restarts", fopts.restarts, "number of perturbed restarts");
    cmd->add_option("--max-iter", fopts.max_iterations, "simplex iteration cap");
    cmd->add_option("--tol", fopts.tolerance, "relative residual tolerance");
  }
  fit->add_option("--model", fit_model_name, "soliton or zener")
      ->check(CLI::IsMember({"soliton", "zener"}));

  // potential ------------------------------------------------------------
  auto* pot = app.add_subcommand("potential", "washboard potential over a phase grid");
  double pot_pinning = 100.0, pot_mu_e = 1.0, pot_theta = 0.0;
  double phi_min = -kTwoPi, phi_max = 2.0 * kTwoPi;
  int pot_n = 200;
  std::string pot_out;
  pot->add_option("--pinning", pot_pinning, "pinning coefficient D*omega_p^2");
  pot->add_option("--mu-e", pot_mu_e, "electrostatic coefficient mu_E");
  pot->add_option("--theta", pot_theta, "drive phase Theta");
  pot->add_option("--phi-min", phi_min, "lower phase");
  pot->add_option("--phi-max", phi_max, "upper phase");
  pot->add_option("--n", pot_n, "number of grid points");
  pot->add_option("--out", pot_out, "output CSV path")->required();

  // profile --------------------------------------------------------------
  auto* prof = app.add_subcommand("profile", "soliton-antisoliton phase profile");
  double prof_b = 1.0, prof_xa = -10.0, prof_xb = 10.0;
  double x_min = -30.0, x_max = 30.0;
  int prof_n = 200;
  std::string prof_out;
  prof->add_option("--b", prof_b, "kink steepness");
  prof->add_option("--xa", prof_xa, "soliton center");
  prof->add_option("--xb", prof_xb, "antisoliton center");
  prof->add_option("--x-min", x_min, "lower position");
  prof->add_option("--x-max", x_max, "upper position");
  prof->add_option("--n", prof_n, "number of grid points");
  prof->add_option("--out", prof_out, "output CSV path")->required();

  // overlap-scan ---------------------------------------------------------
  auto* scan = app.add_subcommand("overlap-scan",
                                  "finite-mode wavefunctional overlap vs field");
  double scan_delta_s = 1.0, scan_charge = 2.0, scan_phi_f = 0.0, scan_phi_t = kTwoPi;
  int scan_modes = 64;
  GridOpts scan_grid{0.5, 3.0, 50};
  std::string scan_out;
  scan->add_option("--delta-s", scan_delta_s, "band offset Delta_s");
  scan->add_option("--e-star-charge", scan_charge, "effective pair charge e*");
  scan->add_option("--phi-f", scan_phi_f, "false vacuum phase");
  scan->add_option("--phi-t", scan_phi_t, "true vacuum phase");
  scan->add_option("--n-modes", scan_modes, "modes per overlap product");
  add_grid(scan, scan_grid);
  scan->add_option("--out", scan_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "cdwt: %s\n", e.what());
    return kExitUsage;
  }

  if (eval->parsed()) {
    const std::vector<double> grid = make_grid(eval_grid.e_min, eval_grid.e_max, eval_grid.n);
    std::vector<double> current(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
      if (eval_model == "soliton")
        check(cdwt_soliton_current(grid[i], c1, et, cv, &current[i]));
      else
        check(cdwt_zener_current(grid[i], gp, et, &current[i]));
    }
    write_csv(eval_out, "E,I", grid, current);
    std::printf("eval: wrote %zu %s points to %s\n", grid.size(), eval_model.c_str(),
                eval_out.c_str());
  } else if (lin->parsed()) {
    const std::vector<double> grid = make_grid(lin_grid.e_min, lin_grid.e_max, lin_grid.n);
    std::vector<double> rate(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
      check(cdwt_lin_rate(grid[i], lin_d, lin_charge, lin_mass, lin_rel_tol,
                          lin_max_terms, &rate[i]));
    write_csv(lin_out, "E,I", grid, rate);
    std::printf("lin: wrote %zu D=%d rate points to %s\n", grid.size(), lin_d,
                lin_out.c_str());
  } else if (fit->parsed() || compare->parsed()) {
    std::vector<double> e, i;
    read_csv(fit_data, e, i);
    cdwt_dataset* data = nullptr;
    check(cdwt_dataset_create(e.data(), i.data(), e.size(), &data));
    if (fit->parsed()) {
      const int kind =
          fit_model_name == "soliton" ? CDWT_MODEL_SOLITON : CDWT_MODEL_ZENER;
      cdwt_fit_result r;
      check(cdwt_fit(data, kind, &fopts, &r));
      write_json(fit_out, result_json(r));
      std::printf("fit: %s ssr=%.6g converged=%d -> %s\n", fit_model_name.c_str(),
                  r.sum_squared_residual, r.converged, fit_out.c_str());
    } else {
      cdwt_fit_result rs, rz;
      int preferred = 0, tie = 0;
      check(cdwt_compare_models(data, &fopts, &rs, &rz, &preferred, &tie));
      ordered_json j;
      j["soliton"] = result_json(rs);
      j["zener"] = result_json(rz);
      j["preferred"] = preferred == CDWT_MODEL_SOLITON ? "soliton" : "zener";
      j["tie"] = static_cast<bool>(tie);
      write_json(fit_out, j);
      std::printf("compare: preferred=%s -> %s\n", j["preferred"].get<std::string>().c_str(),
                  fit_out.c_str());
    }
    cdwt_dataset_destroy(data);
  } else if (pot->parsed()) {
    const std::vector<double> grid = make_grid(phi_min, phi_max, pot_n);
    std::vector<double> v(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
      check(cdwt_washboard_potential(grid[i], pot_theta, pot_pinning, pot_mu_e, &v[i]));
    write_csv(pot_out, "phi,V", grid, v);
    std::printf("potential: wrote %zu points to %s\n", grid.size(), pot_out.c_str());
  } else if (prof->parsed()) {
    const std::vector<double> grid = make_grid(x_min, x_max, prof_n);
    std::vector<double> phi(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
      check(cdwt_soliton_profile(grid[i], prof_b, prof_xa, prof_xb, &phi[i]));
    write_csv(prof_out, "x,phi", grid, phi);
    std::printf("profile: wrote %zu points to %s\n", grid.size(), prof_out.c_str());
  } else if (scan->parsed()) {
    const std::vector<double> grid = make_grid(scan_grid.e_min, scan_grid.e_max, scan_grid.n);
    std::vector<double> overlap(grid.size());
    check(cdwt_overlap_scan(grid.data(), grid.size(), scan_delta_s, scan_charge,
                            scan_phi_f, scan_phi_t, scan_modes, overlap.data()));
    write_csv(scan_out, "E,overlap", grid, overlap);
    std::printf("overlap-scan: wrote %zu points to %s\n", grid.size(), scan_out.c_str());
  }
  return 0;
}
