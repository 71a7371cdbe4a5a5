// congruence: compute, verify, scan and lift from the command line.
//
// Exit status: 0 when every checked claim holds (report-only claims never
// fail), 1 when some claim fails, 2 on usage or configuration errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/giuga.hpp"
#include "congruence/modular.hpp"
#include "congruence/qanalog.hpp"
#include "congruence/report.hpp"
#include "congruence/stirling_harmonic.hpp"
#include "congruence/verify.hpp"
#include "congruence/wilson.hpp"

namespace cg = congruence;

namespace {

constexpr int kUsage = 2;

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw cg::Error(cg::ErrorCode::InvalidArgument, "range must look like A..B, got '" + text + "'");
  }
}

struct VerifyOptions {
  std::string claim;
  std::string primes;
  unsigned power = 0;
  std::string format = "json";
  unsigned parallelism = 0;
  bool no_timing = false;
  std::string cache;
  cg::Limits limits;
};

int run_verify(const VerifyOptions& o) {
  if (o.limits.stirling_cap <= 0 || o.limits.bernoulli_exact_cap <= 0 || o.limits.derby_cap <= 0 ||
      o.limits.factorization_cap <= 0) {
    throw cg::Error(cg::ErrorCode::InvalidArgument, "caps must be positive");
  }
  const Range range = parse_range(o.primes);
  if (range.lo < 3) throw cg::Error(cg::ErrorCode::InvalidArgument, "range lower bound must be >= 3");
  const auto format = cg::parse_output_format(o.format);

  if (std::getenv("CONGRUENCE_CACHE") == nullptr && !o.cache.empty()) {
    cg::BernoulliTable::shared().attach_cache(o.cache);
  }

  std::vector<const cg::Claim*> selected;
  if (o.claim == "all") {
    for (const auto& c : cg::claim_registry()) {
      if (o.power == 0 || c.modulus_power == o.power) selected.push_back(&c);
    }
  } else {
    const auto& c = cg::find_claim(o.claim);
    if (o.power != 0 && c.modulus_power != o.power) {
      throw cg::Error(cg::ErrorCode::InvalidArgument,
                      c.id + " is checked modulo p^" + std::to_string(c.modulus_power) + ", not p^" +
                          std::to_string(o.power));
    }
    selected.push_back(&c);
  }

  const cg::RunOptions run{o.limits, !o.no_timing};
  std::vector<cg::CongruenceReport> reports;
  bool failed = false;
  for (const auto* c : selected) {
    auto part = cg::sweep(c->id, range.lo, range.hi, o.parallelism, run);
    for (auto& r : part) {
      failed = failed || (!r.holds && !c->report_only);
      reports.push_back(std::move(r));
    }
  }
  std::cout << cg::format_reports(reports, format);
  return failed ? 1 : 0;
}

void print_list(const std::vector<std::uint64_t>& v) {
  for (auto x : v) std::cout << x << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact congruences for Wilson quotients, Bernoulli, Stirling and harmonic numbers"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Exact values");
  compute->require_subcommand(1);
  std::int64_t a = 0, b = 0;

  auto* c_bern = compute->add_subcommand("bernoulli", "B_n (B_1 = +1/2)");
  c_bern->add_option("n", a)->required()->check(CLI::NonNegativeNumber);
  c_bern->callback([&] { std::cout << cg::bernoulli_exact(a).to_string() << '\n'; });

  auto* c_stir = compute->add_subcommand("stirling", "unsigned Stirling number of the first kind [n, s]");
  c_stir->add_option("n", a)->required()->check(CLI::NonNegativeNumber);
  c_stir->add_option("s", b)->required()->check(CLI::NonNegativeNumber);
  c_stir->callback([&] { std::cout << cg::stirling_first(a, b).get_str() << '\n'; });

  auto* c_harm = compute->add_subcommand("harmonic", "H_{n,m} = sum 1/j^m");
  c_harm->add_option("n", a)->required()->check(CLI::PositiveNumber);
  c_harm->add_option("m", b)->required()->check(CLI::PositiveNumber);
  c_harm->callback([&] { std::cout << cg::harmonic_exact(a, b).to_string() << '\n'; });

  auto* c_faul = compute->add_subcommand("faulhaber", "coefficients c_i(l) of sum k^(2l+1) in a = n(n+1)/2");
  c_faul->add_option("l", a)->required()->check(CLI::PositiveNumber);
  c_faul->callback([&] {
    auto f = cg::faulhaber_expansion(a);
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
      std::cout << "c_" << i + 1 << " = " << f.coefficients[i].to_string() << '\n';
    }
  });

  auto* c_derby = compute->add_subcommand("derby", "d_i with sum_{k<=n} k^p = sum d_i n^i");
  c_derby->add_option("p", a)->required()->check(CLI::PositiveNumber);
  c_derby->callback([&] {
    auto d = cg::derby_coefficients(static_cast<std::uint64_t>(a));
    for (std::size_t i = 0; i < d.size(); ++i) std::cout << "d_" << i + 1 << " = " << d[i].to_string() << '\n';
  });

  auto* c_qh = compute->add_subcommand("qharmonic", "sum 1/[j]_q^k mod [p]_q as coefficients");
  c_qh->add_option("p", a)->required()->check(CLI::PositiveNumber);
  c_qh->add_option("k", b)->required()->check(CLI::PositiveNumber);
  c_qh->callback([&] {
    std::cout << cg::q_harmonic_mod(static_cast<std::uint64_t>(a), static_cast<unsigned>(b), false, 1).value.to_string()
              << '\n';
  });

  // verify
  VerifyOptions vo;
  int verify_status = 0;
  auto* verify = app.add_subcommand("verify", "Check a registered claim over a range of primes");
  verify->add_option("claim", vo.claim, "claim id or 'all'")->required();
  verify->add_option("--primes", vo.primes, "inclusive range A..B")->required();
  verify->add_option("--power", vo.power, "only claims modulo p^power")->check(CLI::Range(1, 3));
  verify->add_option("--format", vo.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("--parallelism", vo.parallelism, "worker threads (0 = one per core)")->capture_default_str();
  verify->add_flag("--no-timing", vo.no_timing, "report ns = 0 for reproducible output");
  verify->add_option("--cache", vo.cache, "Bernoulli cache file (CONGRUENCE_CACHE takes precedence)");
  verify->add_option("--stirling-cap", vo.limits.stirling_cap)->capture_default_str();
  verify->add_option("--bernoulli-cap", vo.limits.bernoulli_exact_cap)->capture_default_str();
  verify->add_option("--derby-cap", vo.limits.derby_cap)->capture_default_str();
  verify->add_option("--factorization-cap", vo.limits.factorization_cap)->capture_default_str();
  verify->callback([&] { verify_status = run_verify(vo); });

  // list
  auto* list = app.add_subcommand("list", "Registered claims");
  list->callback([] {
    for (const auto& c : cg::claim_registry()) {
      std::cout << c.id << (c.report_only ? " (report-only)" : "") << "\n  " << c.statement << "\n  requires "
                << c.precondition << '\n';
    }
  });

  // scan
  std::string kind;
  std::uint64_t max = 0;
  auto* scan = app.add_subcommand("scan", "Enumerate special numbers up to a bound");
  scan->add_option("kind", kind)->required()->check(CLI::IsMember({"carmichael", "giuga", "irregular", "wilson-prime"}));
  scan->add_option("--max", max)->required();
  scan->callback([&] {
    if (kind == "carmichael" || kind == "giuga") {
      print_list(cg::enumerate(cg::parse_composite_kind(kind), max));
    } else if (kind == "wilson-prime") {
      print_list(cg::wilson_primes(max));
    } else {
      for (auto p : cg::modular::primes_in_range(5, max)) {
        auto pairs = cg::irregular_pairs(p);
        if (pairs.empty()) continue;
        std::cout << p;
        for (const auto& pr : pairs) std::cout << ' ' << pr.index;
        std::cout << '\n';
      }
    }
  });

  // lift
  std::uint64_t lift_p = 0;
  unsigned precision = 3;
  auto* lift = app.add_subcommand("lift", "Hensel lifts of the roots of X^(p-1) + (p-1)!");
  lift->add_option("p", lift_p)->required();
  lift->add_option("--precision", precision)->check(CLI::Range(1, 4))->capture_default_str();
  lift->callback([&] {
    for (const auto& r : cg::all_root_lifts(lift_p, precision)) {
      std::cout << "x_" << r.base << " =";
      for (auto d : r.digits) std::cout << ' ' << d;
      std::cout << "  (" << r.value().to_string() << " mod " << r.value().modulus_string() << ")\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "congruence: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "congruence: " << e.what() << '\n';
    return kUsage;
  }
  return verify_status;
}
