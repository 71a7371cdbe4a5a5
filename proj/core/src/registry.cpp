#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "claims.hpp"
#include "congruence/error.hpp"
#include "congruence/modular.hpp"
#include "congruence/verify.hpp"

namespace congruence {

bool CongruenceReport::same_outcome(const CongruenceReport& o) const {
  return claim == o.claim && p == o.p && modulus == o.modulus && lhs == o.lhs && rhs == o.rhs && holds == o.holds;
}

void ReportBuilder::add(std::string lhs, std::string rhs, std::string modulus, std::string label) {
  entries_.push_back({std::move(lhs), std::move(rhs), std::move(modulus), std::move(label)});
}

void ReportBuilder::add(const ResidueModPk& lhs, const ResidueModPk& rhs, std::string label) {
  if (lhs.prime() != rhs.prime() || lhs.power() != rhs.power()) {
    throw Error(ErrorCode::ModulusMismatch, lhs.modulus_string() + " vs " + rhs.modulus_string());
  }
  add(lhs.to_string(), rhs.to_string(), lhs.modulus_string(), std::move(label));
}

void ReportBuilder::add(const QCongruenceSide& lhs, const QCongruenceSide& rhs, std::string label) {
  if (lhs.prime != rhs.prime || lhs.power != rhs.power) {
    throw Error(ErrorCode::ModulusMismatch, lhs.modulus_string() + " vs " + rhs.modulus_string());
  }
  add(lhs.value.to_string(), rhs.value.to_string(), lhs.modulus_string(), std::move(label));
}

void ReportBuilder::add_exact(const Rational& lhs, const Rational& rhs, std::string label) {
  add(lhs.to_string(), rhs.to_string(), "exact", std::move(label));
}

void ReportBuilder::detail(std::string name, std::string value) {
  details_.emplace_back(std::move(name), std::move(value));
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + "]";
}

}  // namespace

CongruenceReport ReportBuilder::finish(std::string claim, std::uint64_t subject) const {
  CongruenceReport r;
  r.claim = std::move(claim);
  r.p = subject;
  r.details = details_;
  if (entries_.size() == 1) {
    const auto& e = entries_.front();
    r.lhs = e.lhs;
    r.rhs = e.rhs;
    r.modulus = e.modulus;
  } else {
    std::vector<std::string> l, rr, m;
    for (const auto& e : entries_) {
      l.push_back(e.lhs);
      rr.push_back(e.rhs);
      m.push_back(e.modulus);
    }
    const bool uniform = !m.empty() && std::all_of(m.begin(), m.end(), [&](const auto& x) { return x == m.front(); });
    r.lhs = join(l);
    r.rhs = join(rr);
    r.modulus = uniform ? m.front() : join(m);
  }
  r.holds = r.lhs == r.rhs;
  for (const auto& e : entries_) {
    if (e.lhs != e.rhs) {
      r.details.emplace_back("mismatch", (e.label.empty() ? std::string("entry") : e.label) + ": " + e.lhs +
                                             " vs " + e.rhs + " mod " + e.modulus);
    }
  }
  return r;
}

bool Claim::admits(std::uint64_t subject) const {
  if (subject < min_subject || subject > max_subject) return false;
  if (this->subject == SubjectKind::Prime && !modular::is_prime(subject)) return false;
  return !admits_extra || admits_extra(subject);
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> out;
    claims::add_wilson(out);
    claims::add_bernoulli(out);
    claims::add_faulhaber(out);
    claims::add_stirling(out);
    claims::add_harmonic(out);
    claims::add_giuga(out);
    claims::add_qanalog(out);
    return out;
  }();
  return registry;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::UnknownClaim, std::string(id));
}

namespace {

CongruenceReport evaluate(const Claim& claim, std::uint64_t subject, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  CongruenceReport r;
  try {
    ReportBuilder b;
    claim.evaluate(subject, options.limits, b);
    r = b.finish(claim.id, subject);
  } catch (const std::exception& e) {
    r.claim = claim.id;
    r.p = subject;
    r.modulus = claim.modulus_power ? std::to_string(subject) + "^" + std::to_string(claim.modulus_power) : "n/a";
    r.lhs = "error";
    r.rhs = e.what();
    r.holds = false;
  }
  if (options.timing) {
    r.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

}  // namespace

CongruenceReport run_claim(std::string_view id, std::uint64_t subject, const RunOptions& options) {
  const Claim& claim = find_claim(id);
  if (!claim.admits(subject)) {
    std::string what = claim.id + " requires " + claim.precondition;
    throw Error(ErrorCode::PreconditionViolated, what + " (got " + std::to_string(subject) + ")");
  }
  ReportBuilder b;
  auto start = std::chrono::steady_clock::now();
  claim.evaluate(subject, options.limits, b);
  auto r = b.finish(claim.id, subject);
  if (options.timing) {
    r.ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::vector<CongruenceReport> sweep(std::string_view id, std::uint64_t lo, std::uint64_t hi, unsigned parallelism,
                                    const RunOptions& options) {
  const Claim& claim = find_claim(id);
  std::vector<std::uint64_t> subjects;
  if (lo <= hi) {
    lo = std::max(lo, claim.min_subject);
    hi = std::min(hi, claim.max_subject);
    for (std::uint64_t n = lo; lo <= hi; ++n) {
      if (claim.admits(n)) subjects.push_back(n);
      if (n == hi) break;
    }
  }
  std::vector<CongruenceReport> out(subjects.size());
  if (parallelism == 0) parallelism = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = std::min<std::size_t>(parallelism, subjects.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < subjects.size(); ++i) out[i] = evaluate(claim, subjects[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < subjects.size(); i = next++) out[i] = evaluate(claim, subjects[i], options);
      });
    }
  }
  return out;
}

}  // namespace congruence
