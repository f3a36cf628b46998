// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fitting.hpp"
#include "mathcore.hpp"
#include "models.hpp"
#include "oracles.hpp"
#include "tunneling.hpp"

namespace {

int g_failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail = {}) {
  std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", number, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. lin_rate(D=1) matches -(|E|/2pi) ln(1 - e^(-pi/E)) to 1e-10 relative.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  cdwt::LinRateParams p;
  p.dimension_d = 1;
  for (double e : {0.25, 0.5, 1.0, 2.0}) {
    const double closed = -(e / (2.0 * M_PI)) * std::log1p(-std::exp(-M_PI / e));
    ok = ok && std::fabs(cdwt::lin_rate(e, p) - closed) <= 1e-10 * closed;
  }
  const double dt = elapsed_s(t0);
  ok = ok && dt < 1.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "runtime %.3fs", dt);
  report(1, "Lin D=1 closed-form identity", ok, buf);
}

// 2. D=1 curve strictly more linear than D=3 over 100 points on (0, 2].
void criterion_2() {
  cdwt::LinRateParams d1, d3;
  d1.dimension_d = 1;
  d3.dimension_d = 3;
  std::vector<std::pair<double, double>> c1, c3;
  for (int i = 1; i <= 100; ++i) {
    const double e = 2.0 * i / 100.0;
    c1.emplace_back(e, cdwt::lin_rate(e, d1));
    c3.emplace_back(e, cdwt::lin_rate(e, d3));
  }
  const double s1 = cdwt::linearity_score(c1);
  const double s3 = cdwt::linearity_score(c3);
  char buf[96];
  std::snprintf(buf, sizeof buf, "R2(D=1)=%.6f R2(D=3)=%.6f", s1, s3);
  report(2, "Linearity ordering of pair-creation curves", s1 > s3, buf);
}

// 3. Sub-threshold suppression without any imposed cutoff.
void criterion_3() {
  const cdwt::SolitonCurrentParams p{1.0, 1.0, 1.0};
  const double ratio = cdwt::soliton_current(0.1, p) / cdwt::soliton_current(1.0, p);
  bool ok = ratio < 1e-2;
  for (double e = 0.02; e <= 2.0; e += 0.02)
    ok = ok && cdwt::soliton_current(e, p) > 0.0;
  const cdwt::ZenerParams z{1.0, 1.0};
  for (double e = 0.0; e <= 1.0; e += 0.05) ok = ok && cdwt::zener_current(e, z) == 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "I(0.1)/I(1)=%.4g", ratio);
  report(3, "Threshold suppression of the soliton current", ok, buf);
}

// 4. Bisection on energy_gap locates E_T = E*/2 for randomized parameters.
void criterion_4() {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> pinning(10.0, 1000.0);
  std::uniform_real_distribution<double> ratio(0.0101, 0.015);
  std::uniform_real_distribution<double> estar(0.1, 10.0);
  bool ok = true;
  for (int draw = 0; draw < 10; ++draw) {
    const double pin = pinning(rng);
    const cdwt::WashboardParams p =
        cdwt::WashboardParams::experimental(pin, pin * ratio(rng), estar(rng));
    double lo = 1e-12, hi = p.e_star_field * (1.0 - 1e-12);
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * hi; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (cdwt::energy_gap(mid, p) < 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    ok = ok && std::fabs(root - 0.5 * p.e_star_field) <= 1e-9 * 0.5 * p.e_star_field;
  }
  report(4, "Energy-gap zero at E*/2 (10 randomized draws)", ok);
}

// 5. Fit recovery on noisy synthetic soliton data.
void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const cdwt::SolitonCurrentParams truth{1.0, 1.0, 1.0};
  std::vector<std::pair<double, double>> pts;
  std::mt19937 rng(2718);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (int i = 0; i < 50; ++i) {
    const double e = 0.2 + (3.0 - 0.2) * i / 49.0;
    pts.emplace_back(e, cdwt::soliton_current(e, truth) * (1.0 + noise(rng)));
  }
  cdwt::FitOptions opts;
  opts.seed = 7;
  const auto data = cdwt::IEDataset::ingest(pts);
  const cdwt::ComparisonResult c = cdwt::compare_models(data, opts);
  const auto& p = c.soliton.params;
  const double dt = elapsed_s(t0);
  const bool ok = std::fabs(p[1] - 1.0) <= 0.05 && std::fabs(p[2] - 1.0) <= 0.05 &&
                  std::fabs(p[0] - 1.0) <= 0.10 &&
                  c.preferred == cdwt::ModelKind::soliton && dt < 10.0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "c1=%.4f et=%.4f cv=%.4f runtime %.2fs", p[0], p[1],
                p[2], dt);
  report(5, "Fit recovery on noisy synthetic soliton data", ok, buf);
}

// 6. Taylor remainder bound for the quartic pinning approximation.
void criterion_6() {
  cdwt::WashboardParams p;
  p.pinning_coefficient = 100.0;
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const double phi = -2.0 + 4.0 * i / 999.0;
    const double exact = 0.5 * p.pinning_coefficient * (1.0 - std::cos(phi));
    const double bound =
        0.5 * p.pinning_coefficient * std::pow(std::fabs(phi), 6) / 720.0;
    ok = ok &&
         std::fabs(exact - cdwt::washboard_quartic_approx(phi, p)) <= bound + 1e-12;
  }
  report(6, "Quartic washboard approximation within the Taylor bound", ok);
}

// 7. Unit-norm identity of the wavefunctional normalization constants.
void criterion_7() {
  bool ok = true;
  for (double alpha : {0.1, 1.0, 10.0}) {
    for (double cutoff : {1.0, 10.0, 1e3}) {
      const double c = cdwt::normalization_constant({alpha, 0.0, cutoff});
      const double quad = oracle::integrate(
          [alpha](double phi) { return std::exp(-2.0 * alpha * phi * phi); }, 0.0,
          std::min(cutoff, 50.0 / std::sqrt(alpha)));
      ok = ok && std::fabs(c * c * quad - 1.0) <= 1e-10;
      // erf path vs quadrature path
      ok = ok && std::fabs(cdwt::truncated_gaussian_integral(2.0 * alpha,
                                                            std::min(cutoff, 1e3)) -
                           quad) <= 1e-10 * quad;
    }
  }
  report(7, "Normalization unit-norm identity vs quadrature", ok);
}

// 8. Overlap surrogate sanity.
void criterion_8() {
  const cdwt::FiniteModeGrid grid = cdwt::FiniteModeGrid::uniform(32, 10.0);
  const cdwt::WavefunctionalSpec a{1.0, 0.0, 1.0};
  bool ok = std::fabs(cdwt::finite_mode_overlap(a, a, grid, 1.0) - 1.0) < 1e-12;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> width(0.1, 10.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 100; ++trial) {
    const cdwt::WavefunctionalSpec u{width(rng), phase(rng), 1.0};
    const cdwt::WavefunctionalSpec v{width(rng), phase(rng), 1.0};
    const double uv = cdwt::finite_mode_overlap(u, v, grid, 2.0);
    const double vu = cdwt::finite_mode_overlap(v, u, grid, 2.0);
    ok = ok && uv == vu && uv > 0.0 && uv <= 1.0 + 1e-15;
  }
  report(8, "Finite-mode overlap identity, symmetry and range", ok);
}

// 9. Byte-identical CLI reruns.
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9() {
  const std::string cli = CDWT_CLI_PATH;
  char tmpl[] = "/tmp/cdwt_accept_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  if (!dir) {
    report(9, "CLI determinism", false, "mkdtemp failed");
    return;
  }
  const std::string d(dir);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"eval", " eval --model soliton --et 1 --cv 1 --c1 1 --e-min 0.05 --e-max 3"
               " --n 200 --out "},
      {"evalz", " eval --model zener --gp 2 --et 1 --e-min 0.05 --e-max 3 --n 100"
                " --out "},
      {"lin", " lin --d 1 --e-min 0.01 --e-max 2 --n 100 --out "},
      {"fit", " fit --data " + d + "/eval_a.csv --model soliton --seed 3 --out "},
      {"compare", " compare --data " + d + "/eval_a.csv --seed 3 --out "},
      {"potential", " potential --pinning 100 --mu-e 1 --theta 3.14159 --n 150 --out "},
      {"profile", " profile --b 2 --xa -10 --xb 10 --n 150 --out "},
      {"overlap-scan", " overlap-scan --e-min 0.5 --e-max 3 --n 40 --out "},
  };

  bool ok = true;
  std::string failed;
  for (const auto& [name, args] : commands) {
    const std::string ext = (name == "fit" || name == "compare") ? ".json" : ".csv";
    const std::string out_a = d + "/" + name + "_a" + ext;
    const std::string out_b = d + "/" + name + "_b" + ext;
    for (const std::string& out : {out_a, out_b}) {
      const std::string cmd = cli + args + out + " > /dev/null";
      if (std::system(cmd.c_str()) != 0) {
        ok = false;
        failed = name + " (exit status)";
        break;
      }
    }
    if (!ok) break;
    const std::string a = slurp(out_a), b = slurp(out_b);
    if (a.empty() || a != b) {
      ok = false;
      failed = name + " (outputs differ)";
      break;
    }
  }
  report(9, "CLI determinism (byte-identical reruns)", ok, failed);
  std::system(("rm -rf " + d).c_str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
