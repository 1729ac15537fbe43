#pragma once

// Ideal- and ring-level predicates for graded rings.
//
// Element-level scans walk homogeneous elements in index order and report
// the lexicographically first violating pair or triple, so witnesses are
// deterministic. The 1-absorbing and strongly 1-absorbing scans range over
// nonunit homogeneous elements only; the 2-absorbing scan ranges over all
// homogeneous triples.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedring/grading.hpp"
#include "gradedring/ideals.hpp"

namespace gradedring {

struct PredicateResult {
  bool holds = false;
  /// Violating pair or triple (a single element for graded maximality); empty when holds.
  std::vector<Elem> witness;

  explicit operator bool() const { return holds; }
};

PredicateResult is_graded_prime(const GradedRing& gr, const IdealSet& p);
PredicateResult is_graded_primary(const GradedRing& gr, const IdealSet& q);
PredicateResult is_graded_1abs_primary(const GradedRing& gr, const IdealSet& p);
PredicateResult is_graded_2abs_primary(const GradedRing& gr, const IdealSet& i);
PredicateResult is_graded_strongly_1abs_primary(const GradedRing& gr, const IdealSet& p);
/// Witness is a homogeneous a outside M with M + Ra != R.
PredicateResult is_graded_maximal(const GradedRing& gr, const IdealSet& m);

struct IdealFormResult {
  bool holds = false;
  /// (I, J, K) with IJK in P, IJ not in P and K not in Grad({0}).
  std::vector<IdealSet> witness;

  explicit operator bool() const { return holds; }
};

/// The ideal-theoretic characterization: for all proper graded I, J, K,
/// IJK in P implies IJ in P or K in Grad({0}).
IdealFormResult strongly_1abs_ideal_form(const GradedRing& gr, const IdealSet& p,
                                         std::size_t lattice_cap = kDefaultLatticeCap);

struct LocalStructure {
  std::vector<IdealSet> graded_maximal_ideals;
  bool is_graded_local = false;
  std::optional<IdealSet> the_maximal;
};

LocalStructure local_structure(const GradedRing& gr, std::size_t lattice_cap = kDefaultLatticeCap);
/// Same, reusing an already enumerated lattice.
LocalStructure local_structure(const GradedRing& gr, const std::vector<IdealSet>& lattice);

struct RingPredicates {
  bool graded_field = false;
  bool graded_domain = false;
  bool every_homogeneous_nilpotent_or_unit = false;
};

RingPredicates ring_predicates(const GradedRing& gr);

enum class Flag {
  GradedPrime,
  GradedPrimary,
  Graded1AbsPrimary,
  Graded2AbsPrimary,
  GradedStrongly1AbsPrimary,
  GradedMaximal,
};

inline constexpr Flag kAllFlags[] = {Flag::GradedPrime,       Flag::GradedPrimary,
                                     Flag::Graded1AbsPrimary, Flag::Graded2AbsPrimary,
                                     Flag::GradedStrongly1AbsPrimary, Flag::GradedMaximal};

std::string_view to_string(Flag flag);
/// Accepts the snake-case names ("graded_prime", ...) and short aliases
/// ("prime", "primary", "1abs", "2abs", "strongly", "maximal").
std::optional<Flag> parse_flag(std::string_view text);

PredicateResult evaluate(Flag flag, const GradedRing& gr, const IdealSet& p);

struct ClassificationReport {
  std::map<Flag, bool> flags;
  std::map<Flag, std::vector<Elem>> witnesses;
  IdealSet ideal;
  IdealSet radical;

  bool operator()(Flag f) const { return flags.at(f); }
};

/// Throws NotGraded / NotProper.
ClassificationReport classify_ideal(const GradedRing& gr, const IdealSet& p);

/// Grad({0}) of the graded ring.
IdealSet graded_nilradical(const GradedRing& gr);

}  // namespace gradedring
