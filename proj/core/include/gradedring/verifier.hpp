#pragma once

// Executable replays of the structure theorems for graded strongly
// 1-absorbing primary ideals. Each statement is instantiated exhaustively
// over a finite ring (or ring pair, or integer range) and produces a
// VerificationReport with per-quantifier counters, per-branch instance
// counts, and witnesses for any counterexample.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gradedring/classify.hpp"
#include "gradedring/grading.hpp"
#include "gradedring/ideals.hpp"

namespace gradedring {

enum class Outcome { Pass, Fail, Vacuous };

std::string_view to_string(Outcome outcome);

struct Branch {
  std::string name;
  std::uint64_t instances = 0;
  /// False for branches that no finite ring can exercise (they need a
  /// graded prime that is not graded maximal).
  bool finitely_realizable = true;

  bool vacuous() const { return instances == 0; }
};

struct Witness {
  std::shared_ptr<const GradedRing> ring;
  std::vector<IdealSet> ideals;
  std::vector<Elem> elements;
  std::string note;
};

struct VerificationReport {
  std::string statement_id;
  std::string target;
  Outcome outcome = Outcome::Vacuous;
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  std::vector<Branch> branches;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  std::uint64_t counter(std::string_view name) const;
  const Branch* branch(std::string_view name) const;
};

struct RingPair {
  GradedRing first;
  GradedRing second;
};

struct IntRange {
  std::int64_t first = 2;
  std::int64_t last = 64;
};

using Target = std::variant<GradedRing, RingPair, IntRange>;

enum class Shape { Ring, Pair, Range };

struct StatementInfo {
  std::string_view id;
  Shape shape;
  std::string_view claim;
};

/// Every statement the verifier knows, in report order.
const std::vector<StatementInfo>& statements();
const StatementInfo* find_statement(std::string_view id);

struct VerifyOptions {
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Largest homogeneous multiplicative set tried for localizations.
  std::size_t multiplicative_set_max = 8;
};

/// Throws UnknownStatement, ShapeMismatch or BudgetExceeded.
VerificationReport verify(std::string_view statement_id, const Target& target, const VerifyOptions& options = {});

/// Grad({0}) primality and Grad(P) = Grad({0}) on R, with the polynomial-ring
/// conclusions recorded as asserted rather than verified (R[X] is infinite).
VerificationReport prop_3_4_reduction(const GradedRing& gr);

struct CorpusEntry {
  std::string name;
  GradedRing ring;
  /// Set when the ring was built as a product of two graded rings.
  std::optional<RingPair> factors;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

/// Runs one statement (or "all") over a corpus. Ring statements run on every
/// entry, COR_2_8 on product entries, COR_2_7 on `range`.
std::vector<VerificationReport> run_corpus(std::string_view statement_id, const Corpus& corpus,
                                           const IntRange& range = {}, const VerifyOptions& options = {});

/// Sums counters and branch instances of same-statement reports; the outcome
/// is FAIL if any input failed, otherwise PASS if any input passed.
VerificationReport aggregate(std::string_view statement_id, const std::vector<VerificationReport>& reports);

struct SearchHit {
  std::string entry;
  std::shared_ptr<const GradedRing> ring;
  IdealSet ideal;
  /// The conclusion predicate's witness.
  std::vector<Elem> witness;
};

/// Every (ring, proper graded ideal) in the corpus where `hypothesis` holds
/// and `conclusion` fails, in corpus then lattice order.
std::vector<SearchHit> search_counterexample(const Corpus& corpus, Flag hypothesis, Flag conclusion,
                                             std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace gradedring
