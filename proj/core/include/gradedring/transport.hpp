#pragma once

// Constructions that carry a grading along: quotients, products,
// localizations at homogeneous multiplicative sets, the degree-e subring,
// and validated graded homomorphisms between them.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "gradedring/grading.hpp"
#include "gradedring/ideals.hpp"

namespace gradedring {

class GradedHom {
 public:
  const GradedRing& source() const { return source_; }
  const GradedRing& target() const { return target_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& table() const { return map_; }
  const IdealSet& kernel() const { return kernel_; }
  /// Sorted image in the target.
  const std::vector<Elem>& image() const { return image_; }

  bool is_injective() const { return kernel_.is_zero(); }
  bool is_surjective() const { return image_.size() == target_.size(); }

 private:
  friend GradedHom hom_build(const GradedRing&, const GradedRing&, std::vector<Elem>);

  GradedHom(GradedRing source, GradedRing target, std::vector<Elem> map, IdealSet kernel, std::vector<Elem> image)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)),
        kernel_(std::move(kernel)),
        image_(std::move(image)) {}

  GradedRing source_;
  GradedRing target_;
  std::vector<Elem> map_;
  IdealSet kernel_;
  std::vector<Elem> image_;
};

/// Validates additivity, multiplicativity, f(1) = 1 and f(R_g) in S_g.
/// Throws GroupMismatch, NotAdditive, NotMultiplicativeHom, UnitNotPreserved,
/// NotDegreePreserving; MalformedSpec when the table is the wrong size.
GradedHom hom_build(const GradedRing& source, const GradedRing& target, std::vector<Elem> map);

enum class Direction { Image, Preimage };

/// Image: ideal of the target, requires Ker(f) in I and f surjective.
/// Preimage: ideal of the source. The result is graded-checked.
IdealSet hom_transport(const GradedHom& f, const IdealSet& ideal, Direction direction);

struct Quotient {
  GradedRing ring;
  GradedHom projection;
};

/// R/K graded by (R_g + K)/K. Cosets are numbered by smallest representative.
Quotient quotient(const GradedRing& gr, const IdealSet& k);

/// R x S graded by R_g x S_g; the pair (a, b) has index a * |S| + b.
GradedRing product(const GradedRing& r, const GradedRing& s);

class MultiplicativeSet {
 public:
  /// Throws InvalidSet unless 1 is in S, 0 is not, S is in h(R), and S is closed.
  static MultiplicativeSet from_elements(const GradedRing& gr, std::vector<Elem> elements);
  /// Multiplicative closure of {1} and the generators.
  static MultiplicativeSet generated_by(const GradedRing& gr, std::span<const Elem> gens);

  const std::vector<Elem>& elements() const { return elements_; }
  bool contains(Elem x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }
  std::size_t size() const { return elements_.size(); }

 private:
  explicit MultiplicativeSet(std::vector<Elem> sorted) : elements_(std::move(sorted)) {}

  std::vector<Elem> elements_;
};

/// All multiplicatively closed subsets of h(R) with 1, without 0, and with at
/// most `max_size` elements, in a deterministic order.
std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const GradedRing& gr, std::size_t max_size,
                                                             std::size_t cap = 4096);

class Localization {
 public:
  const GradedRing& ring() const { return ring_; }
  /// r -> r/1.
  const GradedHom& canonical() const { return canonical_; }
  const MultiplicativeSet& set() const { return set_; }
  /// Class of the fraction a/s.
  Elem fraction(Elem a, Elem s) const;
  /// S^{-1}I = {a/s : a in I, s in S}.
  IdealSet extend(const IdealSet& ideal) const;

 private:
  friend Localization localize(const GradedRing&, const MultiplicativeSet&);

  Localization(GradedRing ring, GradedHom canonical, MultiplicativeSet set, std::vector<Elem> class_of,
               std::size_t source_size)
      : ring_(std::move(ring)),
        canonical_(std::move(canonical)),
        set_(std::move(set)),
        class_of_(std::move(class_of)),
        source_size_(source_size) {}

  GradedRing ring_;
  GradedHom canonical_;
  MultiplicativeSet set_;
  // class_of_[position of s in S * |R| + a]
  std::vector<Elem> class_of_;
  std::size_t source_size_;
};

/// S^{-1}R from explicit equivalence classes of pairs (a, s), with
/// (a, s) ~ (b, t) iff u(at - bs) = 0 for some u in S. The grading places
/// a/s in degree deg(a) - deg(s).
Localization localize(const GradedRing& gr, const MultiplicativeSet& s);

struct Subring {
  GradedRing ring;
  GradedHom inclusion;
};

/// R_e as a graded subring of R: same group, everything in degree e.
/// The inclusion is a graded monomorphism.
Subring identity_subring(const GradedRing& gr);

}  // namespace gradedring
