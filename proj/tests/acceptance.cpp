#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "congruence/bernoulli.hpp"
#include "congruence/error.hpp"
#include "congruence/faulhaber.hpp"
#include "congruence/giuga.hpp"
#include "congruence/modular.hpp"
#include "congruence/polynomial.hpp"
#include "congruence/qanalog.hpp"
#include "congruence/residue.hpp"
#include "congruence/stirling_harmonic.hpp"
#include "congruence/verify.hpp"
#include "congruence/wilson.hpp"

using namespace congruence;

namespace {

/// Collects the first few failures of one criterion.
class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 4) notes_.push_back(what);
  }

  void sweep_claim(std::string_view id, std::uint64_t lo, std::uint64_t hi) {
    RunOptions options;
    options.timing = false;
    auto reports = sweep(id, lo, hi, 1, options);
    check(!reports.empty(), std::string(id) + ": nothing admissible in range");
    for (const auto& r : reports) {
      std::string where = std::string(id) + " at " + std::to_string(r.p);
      for (const auto& [name, value] : r.details) {
        if (name == "mismatch") {
          where += " (" + value + ")";
          break;
        }
      }
      check(r.holds, where);
    }
  }

  bool passed() const { return failures_ == 0; }

  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) {
      out << ", " << failures_ << " failed";
      for (const auto& n : notes_) out << "; " << n;
    }
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) { return modular::primes_in_range(lo, hi); }

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

void glaisher_mod_p2(Outcome& o) {
  for (auto p : primes(5, 2000)) {
    auto lhs = pB_mod(as_signed(p) - 1, p, 2) - ResidueModPk(p, 2, as_signed(p));
    o.check(lhs == factorial_mod_pk(p, 2), "p=" + std::to_string(p));
  }
  o.sweep_claim("wilson.glaisher", 5, 2000);
}

void wilson_mod_p3(Outcome& o) {
  const WilsonMethod routes[] = {WilsonMethod::FermatDigits, WilsonMethod::BernoulliCubic, WilsonMethod::PowerSums,
                                 WilsonMethod::Sun};
  for (auto p : primes(5, 500)) {
    auto truth = factorial_mod_pk(p, 3);
    for (auto m : routes) {
      o.check(wilson_predict(p, m) == truth, std::string(to_string(m)) + " p=" + std::to_string(p));
    }
  }
  o.check(factorial_mod_pk(5, 3).value() == 24, "(4)! mod 125");
  for (auto m : routes) o.check(wilson_predict(5, m).value() == 24, std::string(to_string(m)) + " spot value");
}

void stirling_mod_p2(Outcome& o) {
  o.check(stirling_first(5, 3) % 25 == 10, "[5, 3] mod 25");
  for (auto m : {StirlingMethod::Exact, StirlingMethod::SumsMinusHarmonic, StirlingMethod::BernoulliSquare}) {
    o.check(stirling_mod(5, 3, m, 2).value() == 10, std::string(to_string(m)) + " spot value");
  }
  o.sweep_claim("stirling.sums_minus_harmonic", 5, 200);
  o.sweep_claim("stirling.bernoulli_p2", 5, 200);
}

void glaisher_harmonic(Outcome& o) {
  o.sweep_claim("harmonic.glaisher_stirling", 7, 100);
  for (auto p : primes(7, 100)) {
    auto P = as_signed(p);
    for (std::int64_t m = 1; m <= P - 1; ++m) {
      unsigned k = harmonic_method_power(p, m, HarmonicMethod::GlaisherStirling);
      auto exact = rational_mod_pk(harmonic_exact(P - 1, m), p, k);
      o.check(harmonic_mod(p, m, HarmonicMethod::GlaisherStirling, k) == exact,
              "p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
}

void glaisher_bernoulli_harmonic(Outcome& o) {
  for (auto p : primes(5, 200)) {
    auto P = as_signed(p);
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(20, P - 3); ++m) {
      unsigned k = harmonic_method_power(p, m, HarmonicMethod::GlaisherBernoulli);
      auto exact = rational_mod_pk(harmonic_exact(P - 1, m), p, k);
      o.check(harmonic_mod(p, m, HarmonicMethod::GlaisherBernoulli, k) == exact,
              "p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  o.sweep_claim("harmonic.penultimate", 5, 200);
}

void stirling_mod_p3(Outcome& o) {
  o.sweep_claim("stirling.bernoulli_p3", 7, 60);
  for (auto p : primes(7, 60)) {
    auto P = as_signed(p);
    for (std::int64_t k = 1; k <= P - 1; ++k) {
      o.check(stirling_mod(p, k, StirlingMethod::BernoulliCube, 3) == ResidueModPk::from_big(p, 3, stirling_first(P, k)),
              "p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
  }
}

void kummer_and_multiples(Outcome& o) {
  o.sweep_claim("bernoulli.kummer", 5, 200);
  o.sweep_claim("bernoulli.sun_multiple", 5, 200);
  o.sweep_claim("bernoulli.second_digit", 5, 200);
}

void faulhaber_layer(Outcome& o) {
  o.sweep_claim("faulhaber.jacobi", 1, 6);
  for (std::int64_t l = 1; l <= 6; ++l) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      o.check(jacobi_sum(l, n) == Rational(sum_powers_exact(n, 2 * l + 1)),
              "jacobi l=" + std::to_string(l) + " n=" + std::to_string(n));
    }
  }
  o.sweep_claim("faulhaber.trailing_ratio", 2, 12);
  o.sweep_claim("faulhaber.gv_vanishing", 1, 12);
  o.sweep_claim("faulhaber.trailing_bernoulli", 3, 50);
  o.sweep_claim("faulhaber.derby", 3, 50);
  for (auto p : primes(3, 50)) {
    auto d = derby_coefficients(p);
    o.check(d.at(1) == Rational(as_signed(p), 2) * bernoulli_exact(as_signed(p) - 1), "d_2 p=" + std::to_string(p));
  }
}

void enumerations(Outcome& o) {
  o.check(enumerate(CompositeKind::Carmichael, 10'000) ==
              std::vector<std::uint64_t>{561, 1105, 1729, 2465, 2821, 6601, 8911},
          "Carmichael numbers up to 10^4");
  o.check(enumerate(CompositeKind::Giuga, 2000) == std::vector<std::uint64_t>{30, 858, 1722}, "Giuga numbers up to 2000");
  std::vector<std::uint64_t> irregular;
  for (auto p : primes(5, 99)) {
    if (!irregular_pairs(p).empty()) irregular.push_back(p);
  }
  o.check(irregular == std::vector<std::uint64_t>{37, 59, 67}, "irregular primes below 100");
}

void wolstenholme_suite(Outcome& o) {
  for (auto p : primes(5, 500)) o.check(wolstenholme_binomial(p).value() == 1, "binomial p=" + std::to_string(p));
  o.sweep_claim("harmonic.wolstenholme_quotient", 7, 200);
  auto start = std::chrono::steady_clock::now();
  o.check(is_wolstenholme_prime(16843), "16843 not certified");
  auto elapsed = std::chrono::steady_clock::now() - start;
  o.check(elapsed < std::chrono::seconds(10), "16843 took longer than 10 s");
}

void agoh_scan(Outcome& o) {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    bool minus_one = agoh_giuga_residue(n) == n - 1;
    o.check(minus_one == modular::is_prime(n), "n=" + std::to_string(n));
  }
  o.sweep_claim("giuga.agoh", 2, 400);
}

void q_suite(Outcome& o) {
  o.sweep_claim("q.andrews", 3, 29);
  o.sweep_claim("q.shipan", 3, 19);
  o.sweep_claim("q.dilcher", 3, 13);
  o.sweep_claim("q.straub", 5, 13);
  o.sweep_claim("q.clark", 5, 13);
  o.sweep_claim("q.andrews_binomial", 3, 13);
  o.sweep_claim("q.lucas", 2, 31);
  o.sweep_claim("q.kummer_carry", 2, 31);
  // The first Dilcher row is the Andrews sum.
  for (auto p : primes(3, 13)) {
    o.check(dilcher_D(1, as_signed(p), false) == Rational(binomial(as_signed(p) + 1, 2)),
            "Dilcher D_1 p=" + std::to_string(p));
  }
}

Rational random_rational(std::mt19937_64& rng, std::uint64_t p) {
  std::uniform_int_distribution<std::int64_t> num(-100'000, 100'000);
  std::uniform_int_distribution<std::int64_t> den(1, 10'000);
  std::int64_t d = den(rng);
  while (d % as_signed(p) == 0) d = den(rng);
  return Rational(num(rng), d);
}

RationalPolynomial random_polynomial(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
  return RationalPolynomial(std::move(c));
}

void property_suites(Outcome& o) {
  std::mt19937_64 rng(20240601);
  for (auto p : primes(2, 101)) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (int i = 0; i < 20; ++i) {
        auto a = random_rational(rng, p);
        auto b = random_rational(rng, p);
        auto ra = rational_mod_pk(a, p, k);
        auto rb = rational_mod_pk(b, p, k);
        const std::string at = " p=" + std::to_string(p) + " k=" + std::to_string(k);
        o.check(rational_mod_pk(a + b, p, k) == ra + rb, "sum" + at);
        o.check(rational_mod_pk(a * b, p, k) == ra * rb, "product" + at);
        o.check(rational_mod_pk(a - b, p, k) == ra - rb, "difference" + at);
      }
    }
  }

  for (auto p : primes(3, 23)) {
    auto modulus = q_integer(as_signed(p));
    for (int i = 0; i < 10; ++i) {
      auto f = random_polynomial(rng, p + 3);
      if ((f % modulus).is_zero()) continue;
      auto g = poly_inverse_mod(f, modulus);
      o.check((f * g) % modulus == RationalPolynomial{1}, "polynomial inverse p=" + std::to_string(p));
    }
  }

  for (auto p : primes(3, 31)) {
    const std::uint64_t p2 = p * p;
    const std::uint64_t p3 = p2 * p;
    const auto fact = factorial_mod_pk(p, 3).value();
    for (std::uint64_t k = 1; k < p; ++k) {
      std::vector<std::uint64_t> roots;
      for (std::uint64_t x = k; x < p3; x += p) {
        if ((modular::pow(x, p - 1, p3) + fact) % p3 == 0) roots.push_back(x);
      }
      auto lift = hensel_root(as_signed(k), p, 3);
      o.check(roots.size() == 1 && roots[0] == lift.value().value(),
              "Hensel brute force p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
  }

  o.sweep_claim("stirling.newton", 3, 31);
  for (std::int64_t n = 4; n <= 50; n += 2) o.check(miki_identity_check(n), "Miki n=" + std::to_string(n));
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"Glaisher mod p^2, 5 <= p <= 2000", glaisher_mod_p2},
      {"Wilson mod p^3 by four routes, 5 <= p <= 500", wilson_mod_p3},
      {"Stirling mod p^2 by power sums and Bernoulli numbers, 5 <= p <= 200", stirling_mod_p2},
      {"Glaisher harmonic residues from Stirling numbers, 7 <= p <= 100", glaisher_harmonic},
      {"Glaisher harmonic residues from Bernoulli numbers, p <= 200", glaisher_bernoulli_harmonic},
      {"Stirling mod p^3 with the Bernoulli convolution, 7 <= p <= 60", stirling_mod_p3},
      {"Kummer, Bernoulli multiples and second digits, p <= 200", kummer_and_multiples},
      {"Faulhaber layer", faulhaber_layer},
      {"Carmichael, Giuga and irregular prime enumerations", enumerations},
      {"Wolstenholme suite", wolstenholme_suite},
      {"Agoh-Giuga scan, 2 <= n <= 400", agoh_scan},
      {"q-analog suite", q_suite},
      {"Property suites", property_suites},
  };
  return all;
}

bool run(std::size_t index) {
  const auto& c = criteria()[index - 1];
  Outcome outcome;
  try {
    c.run(outcome);
  } catch (const std::exception& e) {
    outcome.check(false, std::string("exception: ") + e.what());
  }
  std::cout << (outcome.passed() ? "PASS" : "FAIL") << " " << index << " " << c.name << ": " << outcome.summary()
            << std::endl;
  return outcome.passed();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = criteria().size();
  if (argc > 2) {
    std::cerr << "usage: acceptance [criterion 1-" << n << "]\n";
    return 2;
  }
  if (argc == 2) {
    char* end = nullptr;
    unsigned long index = std::strtoul(argv[1], &end, 10);
    if (*end != '\0' || index < 1 || index > n) {
      std::cerr << "acceptance: no criterion '" << argv[1] << "'\n";
      return 2;
    }
    return run(index) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t i = 1; i <= n; ++i) all &= run(i);
  return all ? 0 : 1;
}
