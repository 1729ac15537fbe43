#include "gradedring/ideals.hpp"

#include <algorithm>
#include <map>

#include "gradedring/error.hpp"

namespace gradedring {

namespace {

// Smallest additive subgroup containing `seeds`, grown one cyclic subgroup at a time.
std::vector<Elem> additive_span(const FinRing& ring, std::span<const Elem> seeds) {
  std::vector<char> member(ring.size(), 0);
  std::vector<Elem> span{ring.zero()};
  member[ring.zero()] = 1;
  for (auto t : seeds) {
    if (member[t]) continue;
    const auto base = span;
    Elem shift = t;
    while (!member[shift]) {
      for (auto s : base) {
        const auto x = ring.add(s, shift);
        if (!member[x]) {
          member[x] = 1;
          span.push_back(x);
        }
      }
      shift = ring.add(shift, t);
    }
  }
  return span;
}

std::vector<Elem> sum_sets(const FinRing& ring, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<char> member(ring.size(), 0);
  std::vector<Elem> out;
  for (auto x : a)
    for (auto y : b) {
      const auto s = ring.add(x, y);
      if (!member[s]) {
        member[s] = 1;
        out.push_back(s);
      }
    }
  return out;
}

void require_same_ring(const IdealSet& i, const IdealSet& j) {
  if (!i.ring().same_as(j.ring()))
    throw Error(ErrorKind::RingMismatch, "ideals belong to " + i.ring().provenance() + " and " + j.ring().provenance());
}

}  // namespace

IdealSet::IdealSet(FinRing ring, std::vector<Elem> sorted_elements)
    : ring_(std::move(ring)), elements_(std::move(sorted_elements)), member_(ring_.size(), 0) {
  for (auto x : elements_) member_[x] = 1;
}

IdealSet make_ideal_unchecked(const FinRing& ring, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return IdealSet(ring, std::move(elements));
}

bool is_ideal(const FinRing& ring, std::span<const Elem> elements) {
  std::vector<char> member(ring.size(), 0);
  for (auto x : elements) {
    if (x >= ring.size()) return false;
    member[x] = 1;
  }
  if (!member[ring.zero()]) return false;
  for (auto x : elements) {
    for (auto y : elements)
      if (!member[ring.add(x, y)]) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!member[ring.mul(r, x)]) return false;
  }
  return true;
}

IdealSet IdealSet::from_elements(const FinRing& ring, std::vector<Elem> elements) {
  if (!is_ideal(ring, elements)) throw Error(ErrorKind::NotAnIdeal, "element set is not an ideal of " + ring.provenance());
  return make_ideal_unchecked(ring, std::move(elements));
}

IdealSet IdealSet::zero(const FinRing& ring) { return IdealSet(ring, {ring.zero()}); }

IdealSet IdealSet::whole(const FinRing& ring) {
  std::vector<Elem> all(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) all[x] = x;
  return IdealSet(ring, std::move(all));
}

bool IdealSet::subset_of(const IdealSet& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem x) { return other.contains(x); });
}

std::string IdealSet::format() const {
  std::string out = "{";
  for (std::size_t k = 0; k < elements_.size(); ++k) out += (k ? "," : "") + ring_.format(elements_[k]);
  return out + "}";
}

IdealSet principal_ideal(const FinRing& ring, Elem a) {
  std::vector<Elem> multiples(ring.size());
  for (Elem r = 0; r < ring.size(); ++r) multiples[r] = ring.mul(r, a);
  auto ideal = make_ideal_unchecked(ring, std::move(multiples));
  ideal.with_generators({a});
  return ideal;
}

IdealSet ideal_generated(const FinRing& ring, std::span<const Elem> gens) {
  std::vector<Elem> acc{ring.zero()};
  for (auto g : gens) {
    if (g >= ring.size()) throw Error(ErrorKind::MalformedSpec, "generator index out of range");
    const auto p = principal_ideal(ring, g);
    acc = sum_sets(ring, acc, p.elements());
  }
  auto ideal = make_ideal_unchecked(ring, std::move(acc));
  ideal.with_generators({gens.begin(), gens.end()});
  return ideal;
}

GradedCheck is_graded_ideal(const GradedRing& gr, const IdealSet& ideal) {
  if (!ideal.ring().same_as(gr.ring())) throw Error(ErrorKind::RingMismatch, "ideal does not belong to " + gr.provenance());
  if (!is_ideal(gr.ring(), ideal.elements())) throw Error(ErrorKind::NotAnIdeal, "element set is not an ideal");
  for (auto x : ideal.elements())
    for (auto part : gr.parts(x))
      if (!ideal.contains(part)) return {false, x};
  return {true, std::nullopt};
}

IdealSet graded_radical(const GradedRing& gr, const IdealSet& ideal) {
  if (!is_graded_ideal(gr, ideal)) throw Error(ErrorKind::NotGraded, ideal.format() + " is not a graded ideal");
  const auto& ring = gr.ring();
  if (!ideal.is_proper()) return ideal;
  std::vector<char> has_power(ring.size(), 0);
  for (auto h : gr.homogeneous()) {
    Elem power = h;
    for (std::size_t k = 1; k <= ring.size(); ++k) {
      if (ideal.contains(power)) {
        has_power[h] = 1;
        break;
      }
      power = ring.mul(power, h);
    }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < ring.size(); ++x) {
    const auto p = gr.parts(x);
    if (std::all_of(p.begin(), p.end(), [&](Elem part) { return has_power[part] != 0; })) out.push_back(x);
  }
  return make_ideal_unchecked(ring, std::move(out));
}

IdealSet colon(const FinRing& ring, const IdealSet& p, const IdealSet& k) {
  require_same_ring(p, k);
  std::vector<Elem> out;
  for (Elem r = 0; r < ring.size(); ++r) {
    const auto ks = k.elements();
    if (std::all_of(ks.begin(), ks.end(), [&](Elem x) { return p.contains(ring.mul(r, x)); })) out.push_back(r);
  }
  return make_ideal_unchecked(ring, std::move(out));
}

IdealSet combine(const IdealSet& i, const IdealSet& j, IdealOp op) {
  require_same_ring(i, j);
  const auto& ring = i.ring();
  switch (op) {
    case IdealOp::Sum:
      return make_ideal_unchecked(ring, sum_sets(ring, i.elements(), j.elements()));
    case IdealOp::Product: {
      std::vector<char> seen(ring.size(), 0);
      std::vector<Elem> products;
      for (auto x : i.elements())
        for (auto y : j.elements()) {
          const auto xy = ring.mul(x, y);
          if (!seen[xy]) {
            seen[xy] = 1;
            products.push_back(xy);
          }
        }
      return make_ideal_unchecked(ring, additive_span(ring, products));
    }
    case IdealOp::Intersection: {
      std::vector<Elem> out;
      for (auto x : i.elements())
        if (j.contains(x)) out.push_back(x);
      return make_ideal_unchecked(ring, std::move(out));
    }
  }
  throw Error(ErrorKind::MalformedSpec, "unknown ideal operation");
}

std::vector<IdealSet> enumerate_graded_ideals(const GradedRing& gr, std::size_t cap) {
  const auto& ring = gr.ring();
  // Every graded ideal is a sum of principal ideals of homogeneous elements.
  std::vector<IdealSet> principals;
  {
    std::map<std::vector<Elem>, std::size_t> seen;
    for (auto a : gr.homogeneous()) {
      auto p = principal_ideal(ring, a);
      std::vector<Elem> key(p.elements().begin(), p.elements().end());
      if (seen.emplace(std::move(key), principals.size()).second) principals.push_back(std::move(p));
    }
  }

  std::map<std::vector<Elem>, std::size_t> index;
  std::vector<IdealSet> lattice;
  auto insert = [&](IdealSet ideal) {
    std::vector<Elem> key(ideal.elements().begin(), ideal.elements().end());
    if (!index.emplace(std::move(key), lattice.size()).second) return;
    if (lattice.size() >= cap)
      throw Error(ErrorKind::BudgetExceeded,
                  "graded-ideal lattice of " + gr.provenance() + " exceeds " + std::to_string(cap) + " ideals");
    lattice.push_back(std::move(ideal));
  };
  insert(IdealSet::zero(ring));
  for (std::size_t next = 0; next < lattice.size(); ++next) {
    for (const auto& p : principals) {
      if (p.generators().empty() || lattice[next].contains(p.generators().front())) continue;
      insert(combine(lattice[next], p, IdealOp::Sum));
    }
  }
  std::sort(lattice.begin(), lattice.end(), [](const IdealSet& a, const IdealSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                        b.elements().end());
  });
  return lattice;
}

}  // namespace gradedring
