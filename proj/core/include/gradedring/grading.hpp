#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gradedring/finring.hpp"

namespace gradedring {

/// A grading-group element: one coordinate per cyclic factor of the group.
struct Degree {
  std::vector<std::int64_t> coords;

  auto operator<=>(const Degree&) const = default;
};

/// Abelian grading groups: a product of cyclic factors, where a factor of 0
/// stands for Z. The trivial group has no factors.
class GradingGroup {
 public:
  enum class Kind { FiniteAbelian, Integers };

  static GradingGroup trivial() { return GradingGroup{Kind::FiniteAbelian, {}}; }
  /// Invariant factors, each >= 2. An empty list is the trivial group.
  static GradingGroup finite_abelian(std::vector<std::int64_t> invariant_factors);
  /// Z, used for finitely supported gradings of truncated polynomial rings.
  static GradingGroup integers() { return GradingGroup{Kind::Integers, {0}}; }

  Kind kind() const { return kind_; }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }

  Degree identity() const { return Degree{std::vector<std::int64_t>(factors_.size(), 0)}; }
  Degree combine(const Degree& a, const Degree& b) const;
  Degree inverse(const Degree& a) const;
  /// True when the coordinates are normalized for this group.
  bool contains(const Degree& d) const;

  std::string format(const Degree& d) const;
  /// Accepts "e", a single integer, or a parenthesized tuple such as "(1,0)".
  Degree parse(std::string_view text) const;
  std::string describe() const;

  bool operator==(const GradingGroup&) const = default;

 private:
  GradingGroup(Kind kind, std::vector<std::int64_t> factors) : kind_(kind), factors_(std::move(factors)) {}

  Kind kind_;
  std::vector<std::int64_t> factors_;
};

class GradedRing;

/// Validates components and builds the homogeneous decomposition table.
/// Throws NotSubgroup, NotDirectSum, NotMultiplicative or IdentityNotInRe.
GradedRing attach_grading(const FinRing& ring, const GradingGroup& group,
                          const std::map<Degree, std::vector<Elem>>& components);

/// Everything in degree e of the trivial group.
GradedRing trivially_graded(const FinRing& ring);

class GradedRing {
 public:
  const FinRing& ring() const { return ring_; }
  const GradingGroup& group() const { return group_; }
  std::size_t size() const { return ring_.size(); }
  const std::string& provenance() const { return ring_.provenance(); }

  /// Degrees with a nonzero component, sorted.
  const std::vector<Degree>& support() const { return support_; }
  /// R_g as a sorted element list; {0} for degrees outside the support.
  std::span<const Elem> component(const Degree& g) const;
  /// Homogeneous parts of x, aligned with support().
  std::span<const Elem> parts(Elem x) const {
    return {parts_.data() + static_cast<std::size_t>(x) * support_.size(), support_.size()};
  }
  std::map<Degree, Elem> decompose(Elem x) const;

  /// h(R), sorted.
  const std::vector<Elem>& homogeneous() const { return homogeneous_; }
  bool is_homogeneous(Elem x) const { return homogeneous_flag_[x] != 0; }
  /// Degree of a nonzero homogeneous element; nullopt for 0 and for
  /// inhomogeneous elements.
  std::optional<Degree> degree_of(Elem x) const;

  bool is_trivially_graded() const { return support_.size() == 1 && support_[0] == group_.identity(); }

 private:
  friend GradedRing attach_grading(const FinRing&, const GradingGroup&, const std::map<Degree, std::vector<Elem>>&);

  GradedRing(FinRing ring, GradingGroup group) : ring_(std::move(ring)), group_(std::move(group)) {}

  FinRing ring_;
  GradingGroup group_;
  std::vector<Degree> support_;
  std::vector<std::vector<Elem>> components_;
  std::vector<Elem> zero_component_;
  std::vector<Elem> parts_;
  std::vector<Elem> homogeneous_;
  std::vector<char> homogeneous_flag_;
  std::vector<int> degree_index_;
};

}  // namespace gradedring
