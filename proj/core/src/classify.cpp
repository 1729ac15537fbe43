#include "gradedring/classify.hpp"

#include <map>

#include "gradedring/error.hpp"

namespace gradedring {

namespace {

void require_proper_graded(const GradedRing& gr, const IdealSet& p) {
  if (!is_graded_ideal(gr, p)) throw Error(ErrorKind::NotGraded, p.format() + " is not a graded ideal");
  if (!p.is_proper()) throw Error(ErrorKind::NotProper, "the whole ring is not a proper ideal");
}

std::vector<Elem> nonunit_homogeneous(const GradedRing& gr) {
  std::vector<Elem> out;
  for (auto h : gr.homogeneous())
    if (!gr.ring().is_unit(h)) out.push_back(h);
  return out;
}

// xyz in P implies xy in P or z in `absorb`, over `domain`^3.
PredicateResult one_absorbing_scan(const GradedRing& gr, const IdealSet& p, const std::vector<Elem>& domain,
                                   const IdealSet& absorb) {
  const auto& ring = gr.ring();
  for (auto x : domain)
    for (auto y : domain) {
      const auto xy = ring.mul(x, y);
      if (p.contains(xy)) continue;
      for (auto z : domain)
        if (p.contains(ring.mul(xy, z)) && !absorb.contains(z)) return {false, {x, y, z}};
    }
  return {true, {}};
}

}  // namespace

IdealSet graded_nilradical(const GradedRing& gr) { return graded_radical(gr, IdealSet::zero(gr.ring())); }

PredicateResult is_graded_prime(const GradedRing& gr, const IdealSet& p) {
  require_proper_graded(gr, p);
  const auto& ring = gr.ring();
  for (auto x : gr.homogeneous()) {
    if (p.contains(x)) continue;
    for (auto y : gr.homogeneous())
      if (p.contains(ring.mul(x, y)) && !p.contains(y)) return {false, {x, y}};
  }
  return {true, {}};
}

PredicateResult is_graded_primary(const GradedRing& gr, const IdealSet& q) {
  require_proper_graded(gr, q);
  const auto& ring = gr.ring();
  const auto rad = graded_radical(gr, q);
  for (auto x : gr.homogeneous()) {
    if (q.contains(x)) continue;
    for (auto y : gr.homogeneous())
      if (q.contains(ring.mul(x, y)) && !rad.contains(y)) return {false, {x, y}};
  }
  return {true, {}};
}

PredicateResult is_graded_1abs_primary(const GradedRing& gr, const IdealSet& p) {
  require_proper_graded(gr, p);
  return one_absorbing_scan(gr, p, nonunit_homogeneous(gr), graded_radical(gr, p));
}

PredicateResult is_graded_strongly_1abs_primary(const GradedRing& gr, const IdealSet& p) {
  require_proper_graded(gr, p);
  return one_absorbing_scan(gr, p, nonunit_homogeneous(gr), graded_nilradical(gr));
}

PredicateResult is_graded_2abs_primary(const GradedRing& gr, const IdealSet& i) {
  require_proper_graded(gr, i);
  const auto& ring = gr.ring();
  const auto rad = graded_radical(gr, i);
  const auto& h = gr.homogeneous();
  for (auto x : h)
    for (auto y : h) {
      const auto xy = ring.mul(x, y);
      if (i.contains(xy)) continue;
      for (auto z : h) {
        if (!i.contains(ring.mul(xy, z))) continue;
        if (rad.contains(ring.mul(x, z)) || rad.contains(ring.mul(y, z))) continue;
        return {false, {x, y, z}};
      }
    }
  return {true, {}};
}

PredicateResult is_graded_maximal(const GradedRing& gr, const IdealSet& m) {
  require_proper_graded(gr, m);
  const auto& ring = gr.ring();
  for (auto a : gr.homogeneous()) {
    if (m.contains(a)) continue;
    // M + Ra = R iff 1 - ra lies in M for some r.
    bool reaches_one = false;
    for (Elem r = 0; r < ring.size() && !reaches_one; ++r)
      reaches_one = m.contains(ring.sub(ring.one(), ring.mul(r, a)));
    if (!reaches_one) return {false, {a}};
  }
  return {true, {}};
}

IdealFormResult strongly_1abs_ideal_form(const GradedRing& gr, const IdealSet& p, std::size_t lattice_cap) {
  require_proper_graded(gr, p);
  const auto lattice = enumerate_graded_ideals(gr, lattice_cap);
  const auto nil = graded_nilradical(gr);
  std::vector<std::size_t> proper;
  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    index.emplace(std::vector<Elem>(lattice[k].elements().begin(), lattice[k].elements().end()), k);
    if (lattice[k].is_proper()) proper.push_back(k);
  }
  auto lookup = [&](const IdealSet& ideal) {
    const auto it = index.find(std::vector<Elem>(ideal.elements().begin(), ideal.elements().end()));
    if (it == index.end()) throw Error(ErrorKind::NotGraded, "product ideal " + ideal.format() + " is not graded");
    return it->second;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> products;
  auto product = [&](std::size_t a, std::size_t b) {
    const auto key = std::minmax(a, b);
    auto it = products.find(key);
    if (it == products.end()) it = products.emplace(key, lookup(combine(lattice[a], lattice[b], IdealOp::Product))).first;
    return it->second;
  };

  for (auto i : proper)
    for (auto j : proper) {
      const auto ij = product(i, j);
      if (lattice[ij].subset_of(p)) continue;
      for (auto k : proper) {
        if (lattice[k].subset_of(nil)) continue;
        if (lattice[product(ij, k)].subset_of(p)) return {false, {lattice[i], lattice[j], lattice[k]}};
      }
    }
  return {true, {}};
}

LocalStructure local_structure(const GradedRing& gr, const std::vector<IdealSet>& lattice) {
  LocalStructure out;
  for (const auto& ideal : lattice)
    if (ideal.is_proper() && is_graded_maximal(gr, ideal)) out.graded_maximal_ideals.push_back(ideal);
  out.is_graded_local = out.graded_maximal_ideals.size() == 1;
  if (out.is_graded_local) out.the_maximal = out.graded_maximal_ideals.front();
  return out;
}

LocalStructure local_structure(const GradedRing& gr, std::size_t lattice_cap) {
  return local_structure(gr, enumerate_graded_ideals(gr, lattice_cap));
}

RingPredicates ring_predicates(const GradedRing& gr) {
  const auto& ring = gr.ring();
  RingPredicates out{true, true, true};
  for (auto x : gr.homogeneous()) {
    if (!ring.is_unit(x) && !ring.is_nilpotent(x)) out.every_homogeneous_nilpotent_or_unit = false;
    if (x == ring.zero()) continue;
    if (!ring.is_unit(x)) out.graded_field = false;
    for (auto y : gr.homogeneous())
      if (y != ring.zero() && ring.mul(x, y) == ring.zero()) out.graded_domain = false;
  }
  return out;
}

std::string_view to_string(Flag flag) {
  switch (flag) {
    case Flag::GradedPrime: return "graded_prime";
    case Flag::GradedPrimary: return "graded_primary";
    case Flag::Graded1AbsPrimary: return "graded_1abs_primary";
    case Flag::Graded2AbsPrimary: return "graded_2abs_primary";
    case Flag::GradedStrongly1AbsPrimary: return "graded_strongly_1abs_primary";
    case Flag::GradedMaximal: return "graded_maximal";
  }
  return "unknown";
}

std::optional<Flag> parse_flag(std::string_view text) {
  static const std::map<std::string_view, Flag> aliases = {
      {"prime", Flag::GradedPrime},
      {"primary", Flag::GradedPrimary},
      {"1abs", Flag::Graded1AbsPrimary},
      {"2abs", Flag::Graded2AbsPrimary},
      {"strongly", Flag::GradedStrongly1AbsPrimary},
      {"maximal", Flag::GradedMaximal},
  };
  for (auto f : kAllFlags)
    if (to_string(f) == text) return f;
  if (const auto it = aliases.find(text); it != aliases.end()) return it->second;
  return std::nullopt;
}

PredicateResult evaluate(Flag flag, const GradedRing& gr, const IdealSet& p) {
  switch (flag) {
    case Flag::GradedPrime: return is_graded_prime(gr, p);
    case Flag::GradedPrimary: return is_graded_primary(gr, p);
    case Flag::Graded1AbsPrimary: return is_graded_1abs_primary(gr, p);
    case Flag::Graded2AbsPrimary: return is_graded_2abs_primary(gr, p);
    case Flag::GradedStrongly1AbsPrimary: return is_graded_strongly_1abs_primary(gr, p);
    case Flag::GradedMaximal: return is_graded_maximal(gr, p);
  }
  throw Error(ErrorKind::MalformedSpec, "unknown flag");
}

ClassificationReport classify_ideal(const GradedRing& gr, const IdealSet& p) {
  require_proper_graded(gr, p);
  ClassificationReport report{{}, {}, p, graded_radical(gr, p)};
  for (auto flag : kAllFlags) {
    auto result = evaluate(flag, gr, p);
    report.flags[flag] = result.holds;
    if (!result.holds) report.witnesses[flag] = std::move(result.witness);
  }
  return report;
}

}  // namespace gradedring
