#pragma once

// Finite commutative rings with identity, stored as dense element indices.
//
// Every ring built here has at most kMaxCarrier elements. Arithmetic is
// exact: structured constructors compute it functionally, and rings with at
// most kTableLimit elements memoize full addition and multiplication tables.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gradedring {

using Elem = std::uint32_t;

inline constexpr std::size_t kMaxCarrier = 4096;
inline constexpr std::size_t kTableLimit = 256;
// Rings up to this size get an exhaustive axiom scan at construction.
inline constexpr std::size_t kAxiomScanLimit = 128;

struct Cyclic {
  std::int64_t n = 0;
};

/// Z/n with an adjoined square root of -1; element a + b*i has index a + n*b.
struct GaussMod {
  std::int64_t n = 0;
};

/// F_p[u] / (modulus), modulus given low-degree-first and monic.
struct PolyQuotient {
  std::int64_t p = 0;
  std::vector<std::int64_t> modulus;
};

using RingSpec = std::variant<Cyclic, GaussMod, PolyQuotient>;

std::string to_string(const RingSpec& spec);

class FinRing {
 public:
  struct Ops {
    std::function<Elem(Elem, Elem)> add;
    std::function<Elem(Elem, Elem)> mul;
    std::function<Elem(Elem)> neg;
    std::function<std::string(Elem)> format;
    std::function<std::optional<Elem>(std::string_view)> parse;
  };

  /// Wraps arbitrary arithmetic. Rejects empty or oversized carriers,
  /// zero == one, and (for small carriers) any failed axiom scan.
  static FinRing from_ops(std::size_t size, Elem zero, Elem one, Ops ops, std::string provenance);

  std::size_t size() const { return impl_->size; }
  Elem zero() const { return impl_->zero; }
  Elem one() const { return impl_->one; }

  Elem add(Elem a, Elem b) const {
    return impl_->add_table.empty() ? impl_->ops.add(a, b) : impl_->add_table[a * impl_->size + b];
  }
  Elem mul(Elem a, Elem b) const {
    return impl_->mul_table.empty() ? impl_->ops.mul(a, b) : impl_->mul_table[a * impl_->size + b];
  }
  Elem neg(Elem a) const { return impl_->neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  bool is_unit(Elem a) const { return impl_->inverse[a] != kNone; }
  std::optional<Elem> inverse(Elem a) const;
  bool is_nilpotent(Elem a) const { return impl_->nilpotent[a] != 0; }

  std::string format(Elem a) const { return impl_->ops.format(a); }
  /// Parses an element in the ring's own syntax; throws ParseError.
  Elem parse(std::string_view text) const;

  const std::string& provenance() const { return impl_->provenance; }
  bool same_as(const FinRing& other) const { return impl_ == other.impl_; }

 private:
  static constexpr Elem kNone = static_cast<Elem>(-1);

  struct Impl {
    std::size_t size = 0;
    Elem zero = 0;
    Elem one = 0;
    Ops ops;
    std::string provenance;
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;
    std::vector<Elem> inverse;
    std::vector<char> nilpotent;
  };

  explicit FinRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Throws MalformedSpec for n < 2, non-monic moduli, composite PolyQuotient
/// bases, or carriers above kMaxCarrier.
FinRing build_ring(const RingSpec& spec);

/// A ring given by explicit Cayley tables over named elements. Limited to
/// kAxiomScanLimit elements so the axiom scan always runs; the identities are
/// read off the tables. Throws MalformedSpec.
FinRing table_ring(std::string name, std::vector<std::string> elements, const std::vector<std::vector<Elem>>& add,
                   const std::vector<std::vector<Elem>>& mul);

std::vector<Elem> unit_set(const FinRing& ring);
/// Elements with x^k = 0 for some 1 <= k <= |R|.
std::vector<Elem> nilradical(const FinRing& ring);
bool is_zero_divisor(const FinRing& ring, Elem a);

/// Exhaustive scan of the commutative-ring-with-identity axioms.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_ring_axioms(const FinRing& ring);

bool is_prime_number(std::int64_t n);

/// Parses a univariate polynomial such as "2+3*u^2-u" into low-first
/// integer coefficients. An empty variable name accepts only constants.
std::vector<std::int64_t> parse_univariate(std::string_view text, std::string_view var);

}  // namespace gradedring
