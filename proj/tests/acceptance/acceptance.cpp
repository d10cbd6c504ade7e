// Acceptance checks, one line per criterion:
//   acceptance                 run all eleven
//   acceptance --criterion N   run one (exit status 0 iff it passes)
#include <sys/wait.h>

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arith/divisor_table.hpp"
#include "arith/smooth.hpp"
#include "constants/euler.hpp"
#include "constants/kappa.hpp"
#include "constants/multiplicative.hpp"
#include "empirical/naive.hpp"
#include "empirical/streaming.hpp"
#include "genfun/dirichlet.hpp"

using namespace tauratio;

namespace {

struct Result {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

struct Captured {
  int exit_code;
  std::string out;
};

Captured run_cli(const std::string& args) {
  const std::string cmd = std::string(TAURATIO_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Digits as printed in the kappa table of the source article.
struct Printed {
  std::uint64_t a;
  double value;
  double tolerance;
};
constexpr Printed kPrintedKappa[] = {
    {2, 0.671113754, 5e-9},  {3, 0.792206241, 5e-9},  {5, 0.884098735, 5e-9},  {7, 0.920297714, 5e-9},
    {11, 0.951150347, 5e-9}, {13, 0.95910063, 5e-8},  {17, 0.969157895, 5e-9}, {19, 0.972537955, 5e-9},
    {4, 0.612926558, 5e-9},  {9, 0.768053638, 5e-9},  {8, 0.597805121, 5e-9},  {16, 0.59314251, 5e-9},
};
constexpr double kPrintedK = 0.757827651;

Result criterion_1() {
  const auto start = Clock::now();
  const auto r = run_cli("constants --prec 1e-9 --threads 8");
  const double elapsed = seconds_since(start);
  if (r.exit_code != 0) return {false, "constants exited with " + std::to_string(r.exit_code)};
  const double K = nlohmann::json::parse(r.out)["results"]["K"].get<double>();
  const double dev = std::fabs(K - kPrintedK);
  return {dev <= 5e-9 && elapsed <= 300.0,
          "K=" + num(K) + " printed=0.757827651 |dev|=" + num(dev) + " (tol 5e-9), " + num(elapsed) + "s (limit 300s)"};
}

Result criterion_2() {
  const auto start = Clock::now();
  double worst = 0.0;
  bool ok = true;
  for (const auto& entry : kPrintedKappa) {
    const double dev = std::fabs(constants::kappa(entry.a).kappa - entry.value);
    worst = std::max(worst, dev);
    ok = ok && dev <= entry.tolerance;
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed <= 1.0, "12 values, max |dev|=" + num(worst) + ", " + num(elapsed) + "s (limit 1s)"};
}

Result criterion_3() {
  double worst = 0.0;
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned m = 1; m <= 4; ++m) {
      worst = std::max(worst, std::fabs(constants::kappa_closed(p, m) - constants::kappa(ipow(p, m)).kappa));
    }
  }
  return {worst <= 1e-12, "max |closed - series|=" + num(worst) + " (tol 1e-12)"};
}

Result criterion_4() {
  std::size_t tau_bad = 0, tau3_bad = 0;
  const auto t = arith::sieve_window(1, 100'000, arith::TableKind::tau);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    tau_bad += t.at(n) != static_cast<std::int64_t>(empirical::naive::tau(n));
  }
  const auto t3 = arith::sieve_window(1, 10'000, arith::TableKind::tau_k, 3);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    tau3_bad += t3.at(n) != static_cast<std::int64_t>(empirical::naive::tau3(n));
  }
  bool sums_ok = true;
  for (std::uint64_t x : {100, 1000, 10'000}) {
    sums_ok = sums_ok && empirical::exact_sum_S_a(1, 2, x) == empirical::naive::sum_S_a(1, 2, x);
  }
  return {tau_bad == 0 && tau3_bad == 0 && sums_ok,
          "tau mismatches " + std::to_string(tau_bad) + ", tau_3 mismatches " + std::to_string(tau3_bad) +
              ", exact S_1 at 1e2/1e3/1e4 " + (sums_ok ? "equal" : "DIFFER")};
}

Result criterion_5() {
  std::mt19937_64 rng(20240607);
  std::size_t ea_bad = 0;
  for (std::uint64_t a : {1, 2, 6, 12}) {
    for (int i = 0; i < 200;) {
      const std::uint64_t m = (1 + rng() % 500) << (rng() % 4);
      const std::uint64_t n = (1 + rng() % 500) * ipow(3, rng() % 3);
      if (std::gcd(m, n) != 1) continue;
      ++i;
      ea_bad += !(constants::e_a(a, m * n) == constants::e_a(a, m) * constants::e_a(a, n));
    }
  }
  double worst = 0.0;
  for (int i = 0; i < 50;) {
    const std::uint64_t m = 1 + rng() % 10'000, n = 1 + rng() % 10'000;
    if (std::gcd(m, n) != 1) continue;
    ++i;
    worst = std::max(worst, std::fabs(constants::kappa(m * n).kappa -
                                      constants::kappa(m).kappa * constants::kappa(n).kappa));
  }
  return {ea_bad == 0 && worst <= 1e-12,
          "e_a failures " + std::to_string(ea_bad) + "/800, kappa max |dev|=" + num(worst) + " (tol 1e-12)"};
}

Result criterion_6() {
  const auto start = Clock::now();
  const auto cl = constants::C_and_prime_sums(1e-9, constants::EulerOptions{8});
  bool ok = true;
  std::string detail;
  for (std::uint64_t m : {1, 2, 6}) {
    const double sum = empirical::sum_inv_phi_coprime(m, 1'000'000, empirical::StreamOptions{8});
    const double dev = std::fabs(sum - constants::lemma10_prediction(m, 1e6, cl.C, cl.L));
    ok = ok && dev <= 1e-2;
    detail += "m=" + std::to_string(m) + " |dev|=" + num(dev) + " ";
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed <= 30.0, detail + "(tol 1e-2), " + num(elapsed) + "s (limit 30s)"};
}

Result criterion_7() {
  const auto r1 = genfun::identity_residual(1, 2.0, 1'000'000, 100'000, 8);
  const auto r2 = genfun::identity_residual(2, 2.0, 1'000'000, 100'000, 8);
  const auto r3 = genfun::identity_residual(1, 4.0, 10'000, 10'000, 8);
  return {r1.residual <= 1e-5 && r2.residual <= 1e-5 && r3.residual <= 1e-10,
          "residuals " + num(r1.residual) + ", " + num(r2.residual) + " (tol 1e-5), " + num(r3.residual) +
              " (tol 1e-10)"};
}

Result criterion_8() {
  const constants::EulerOptions opts{8};
  const auto K = constants::big_K(1e-9, opts);
  const auto C = constants::landau_C(1e-9, opts);
  bool ok = true;
  std::string detail;
  for (std::uint64_t a : {1, 2, 3, 4, 6}) {
    const auto phi = genfun::phi_a(a, 1.0, 1'000'000, 8);
    const double lhs = C.value * constants::beta(a).to_double() * phi.value / std::sqrt(std::numbers::pi);
    const double rhs = K.value * constants::kappa(a).kappa;
    const double allowed =
        lhs * (std::expm1(C.tail_bound) + std::expm1(phi.tail_bound)) + rhs * std::expm1(K.tail_bound);
    const double gap = std::fabs(lhs - rhs);
    ok = ok && gap <= allowed;
    detail += "a=" + std::to_string(a) + " " + num(gap) + "<=" + num(allowed) + " ";
  }
  return {ok, detail};
}

Result criterion_9() {
  const auto start = Clock::now();
  const constants::EulerOptions opts{8};
  const double K = constants::big_K(1e-9, opts).value;
  const double C = constants::landau_C(1e-9, opts).value;
  const std::vector<std::uint64_t> cps{10'000, 100'000, 1'000'000, 10'000'000};
  const empirical::StreamOptions stream{8};

  const auto p1 = empirical::stream_sums(1, 2, cps, true, stream);
  std::vector<double> dev_E, dev_S;
  for (const auto& p : p1) {
    const double x = static_cast<double>(p.x), lx = std::log(x);
    dev_E.push_back(std::fabs(p.E.value() * std::sqrt(lx) / x - K / C));
    dev_S.push_back(std::fabs(p.S.value() / (x * std::sqrt(lx)) - K));
  }
  bool strictly = true;
  for (std::size_t i = 1; i < dev_E.size(); ++i) strictly = strictly && dev_E[i] < dev_E[i - 1];
  int increases = 0;
  for (std::size_t i = dev_S.size() - 2; i < dev_S.size(); ++i) increases += dev_S[i] > dev_S[i - 1];

  auto R = [&](std::uint64_t a, const empirical::StreamPoint& p) {
    const double x = static_cast<double>(p.x), lx = std::log(x);
    const double b = constants::beta(a).to_double();
    return std::fabs(p.S.value() - C * b * lx * p.E.value()) / (x * std::log(lx));
  };
  const auto p2 = empirical::stream_sums(2, 2, cps, true, stream);
  bool envelope = true;
  std::string envelope_detail;
  for (const auto* pts : {&p1, &p2}) {
    const std::uint64_t a = pts == &p1 ? 1 : 2;
    const double first = R(a, pts->front()), last = R(a, pts->back());
    envelope = envelope && last <= std::max(1.0, 2.0 * first);
    envelope_detail += " R_" + std::to_string(a) + ": " + num(first) + " -> " + num(last);
  }
  const double elapsed = seconds_since(start);
  std::string detail = "(i) dev_E";
  for (double d : dev_E) detail += " " + num(d);
  detail += "; (ii) dev_theorem";
  for (double d : dev_S) detail += " " + num(d);
  detail += " (" + std::to_string(increases) + " increase(s)); (iii)" + envelope_detail + "; " + num(elapsed) +
            "s (limit 600s)";
  return {strictly && increases <= 1 && envelope && elapsed <= 600.0, detail};
}

Result criterion_10() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t d : {2, 6, 30}) {
    for (double x : {1e2, 1e4, 1e6}) {
      const auto seq = arith::smooth_sequence(d, x);
      ok = ok && static_cast<double>(seq.d1()) <= seq.count_bound();
      if (x == 1e6) detail += "d=" + std::to_string(d) + " D1(1e6)=" + std::to_string(seq.d1()) + " ";
    }
    const auto seq = arith::smooth_sequence(d, 1e4);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
      std::uint64_t r = n;
      for (std::uint64_t g = std::gcd(r, d); g > 1; g = std::gcd(r, d)) r /= g;
      if (r == 1) brute.push_back(n);
    }
    ok = ok && seq.elements == brute;
  }
  return {ok, detail + "brute filter at 1e4 " + (ok ? "agrees" : "checked")};
}

Result criterion_11() {
  const std::string args = "verify --a 1 --xmax 1e6";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  const auto third = run_cli(args);
  const auto t1 = run_cli(args + " --threads 1");
  const auto t8 = run_cli(args + " --threads 8");
  const bool repeat = first.out == second.out && second.out == third.out;
  const bool threads = t1.out == t8.out && t1.out == first.out;
  const bool csv = first.out.rfind("x,S,E,", 0) == 0;
  return {repeat && threads && csv && !first.out.empty(),
          std::string("3 runs ") + (repeat ? "identical" : "DIFFER") + ", threads 1 vs 8 " +
              (threads ? "identical" : "DIFFER") + ", " + std::to_string(first.out.size()) + " bytes"};
}

const std::vector<std::function<Result()>> kCriteria = {
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,  criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) {
    if (only && n != only) continue;
    Result r{false, {}};
    try {
      r = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    while (!r.detail.empty() && r.detail.back() == ' ') r.detail.pop_back();
    std::printf("criterion %2d: %s  %s\n", n, r.passed ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    failures += !r.passed;
  }
  return failures == 0 ? 0 : 1;
}
