#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradedring/finring.hpp"
#include "gradedring/grading.hpp"

namespace gradedring {

/// An ideal stored as its full, sorted element set.
class IdealSet {
 public:
  /// Validates closure under addition and under multiplication by R; throws NotAnIdeal.
  static IdealSet from_elements(const FinRing& ring, std::vector<Elem> elements);
  static IdealSet zero(const FinRing& ring);
  static IdealSet whole(const FinRing& ring);

  const FinRing& ring() const { return ring_; }
  std::span<const Elem> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem x) const { return member_[x] != 0; }
  bool is_proper() const { return elements_.size() < ring_.size(); }
  bool is_zero() const { return elements_.size() == 1; }
  bool subset_of(const IdealSet& other) const;

  /// Generators recorded at construction, when known.
  const std::vector<Elem>& generators() const { return generators_; }
  IdealSet& with_generators(std::vector<Elem> gens) {
    generators_ = std::move(gens);
    return *this;
  }

  /// "{0,3,6}" in the ring's element syntax.
  std::string format() const;

  bool operator==(const IdealSet& other) const { return elements_ == other.elements_; }

 private:
  friend IdealSet make_ideal_unchecked(const FinRing&, std::vector<Elem>);

  IdealSet(FinRing ring, std::vector<Elem> sorted_elements);

  FinRing ring_;
  std::vector<Elem> elements_;
  std::vector<char> member_;
  std::vector<Elem> generators_;
};

/// For sets already known to be ideals; sorts and deduplicates.
IdealSet make_ideal_unchecked(const FinRing& ring, std::vector<Elem> elements);

/// True iff the set contains 0, and is closed under + and under R-multiples.
bool is_ideal(const FinRing& ring, std::span<const Elem> elements);

IdealSet principal_ideal(const FinRing& ring, Elem a);
/// Least ideal containing the generators.
IdealSet ideal_generated(const FinRing& ring, std::span<const Elem> gens);

struct GradedCheck {
  bool graded = false;
  /// A member with a homogeneous part outside the ideal.
  std::optional<Elem> violating;

  explicit operator bool() const { return graded; }
};

GradedCheck is_graded_ideal(const GradedRing& gr, const IdealSet& ideal);

/// Grad(I): x whose every homogeneous part has a power (exponent <= |R|) in I.
/// Grad(R) = R. Throws NotGraded.
IdealSet graded_radical(const GradedRing& gr, const IdealSet& ideal);

/// (P : K) = {r : rK in P}.
IdealSet colon(const FinRing& ring, const IdealSet& p, const IdealSet& k);

enum class IdealOp { Sum, Product, Intersection };

/// Throws RingMismatch when the ideals live in different rings.
IdealSet combine(const IdealSet& i, const IdealSet& j, IdealOp op);

inline constexpr std::size_t kDefaultLatticeCap = 4096;

/// All graded ideals, ordered by size then by element list.
/// Throws BudgetExceeded past `cap` ideals.
std::vector<IdealSet> enumerate_graded_ideals(const GradedRing& gr, std::size_t cap = kDefaultLatticeCap);

}  // namespace gradedring
