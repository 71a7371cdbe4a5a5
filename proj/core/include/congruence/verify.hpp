#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congruence/limits.hpp"
#include "congruence/qanalog.hpp"
#include "congruence/rational.hpp"
#include "congruence/residue.hpp"

namespace congruence {

/// One verification outcome. `lhs`, `rhs` and `modulus` are canonical strings:
/// a decimal residue, a reduced fraction, a coefficient list "[c0,...]", or a
/// bracketed list of those when the claim ranges over several indices.
struct CongruenceReport {
  std::string claim;
  std::uint64_t p = 0;
  std::string modulus;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  std::int64_t ns = 0;
  /// Named intermediate quantities. Shown in text output only.
  std::vector<std::pair<std::string, std::string>> details;

  /// Equality of everything except the elapsed time and details.
  bool same_outcome(const CongruenceReport& o) const;
};

/// Collects (lhs, rhs, modulus) entries for one subject.
class ReportBuilder {
 public:
  void add(std::string lhs, std::string rhs, std::string modulus, std::string label = {});
  /// Throws ModulusMismatch when the residues live in different rings.
  void add(const ResidueModPk& lhs, const ResidueModPk& rhs, std::string label = {});
  void add(const QCongruenceSide& lhs, const QCongruenceSide& rhs, std::string label = {});
  /// Exact equality; modulus "exact".
  void add_exact(const Rational& lhs, const Rational& rhs, std::string label = {});
  void detail(std::string name, std::string value);

  bool empty() const { return entries_.empty(); }
  CongruenceReport finish(std::string claim, std::uint64_t subject) const;

 private:
  struct Entry {
    std::string lhs, rhs, modulus, label;
  };
  std::vector<Entry> entries_;
  std::vector<std::pair<std::string, std::string>> details_;
};

enum class SubjectKind { Prime, Integer };

/// A registered congruence check. `anchor` names where the statement comes
/// from; `statement` gives it as a formula.
struct Claim {
  std::string id;
  std::string description;
  std::string anchor;
  std::string statement;
  /// Power of p in the modulus, or 0 when it is not a single power of p.
  unsigned modulus_power = 0;
  SubjectKind subject = SubjectKind::Prime;
  std::uint64_t min_subject = 2;
  std::uint64_t max_subject = UINT64_MAX;
  std::string precondition;
  /// Findings are reported but never count as failures.
  bool report_only = false;
  std::string lhs_route;
  std::string rhs_route;
  /// Extra admissibility test beyond range and primality.
  std::function<bool(std::uint64_t)> admits_extra;
  std::function<void(std::uint64_t, const Limits&, ReportBuilder&)> evaluate;

  bool admits(std::uint64_t subject) const;
};

const std::vector<Claim>& claim_registry();
/// Throws UnknownClaim.
const Claim& find_claim(std::string_view id);

struct RunOptions {
  Limits limits = kDefaultLimits;
  /// When false, `ns` is 0 so that output is byte-for-byte reproducible.
  bool timing = true;
};

/// Throws UnknownClaim, or PreconditionViolated naming the constraint.
CongruenceReport run_claim(std::string_view id, std::uint64_t subject, const RunOptions& options = {});

/// Reports for every admissible subject in [lo, hi], in subject order. A
/// subject that throws yields a failed report. parallelism 0 means one worker
/// per hardware thread.
std::vector<CongruenceReport> sweep(std::string_view id, std::uint64_t lo, std::uint64_t hi,
                                    unsigned parallelism = 1, const RunOptions& options = {});

}  // namespace congruence
