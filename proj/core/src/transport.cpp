#include "gradedring/transport.hpp"

#include <map>
#include <set>

#include "gradedring/error.hpp"

namespace gradedring {

namespace {

std::string describe_ideal(const IdealSet& ideal) {
  if (ideal.generators().empty()) return ideal.format();
  std::string out = "<";
  for (std::size_t k = 0; k < ideal.generators().size(); ++k)
    out += (k ? "," : "") + ideal.ring().format(ideal.generators()[k]);
  return out + ">";
}

std::string describe_set(const FinRing& ring, const std::vector<Elem>& elems) {
  std::string out = "{";
  for (std::size_t k = 0; k < elems.size(); ++k) out += (k ? "," : "") + ring.format(elems[k]);
  return out + "}";
}

// Splits "(x,y)" at its top-level comma.
std::optional<std::pair<std::string, std::string>> split_pair(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(' || s[k] == '[') ++depth;
    if (s[k] == ')' || s[k] == ']') --depth;
    if (s[k] == ',' && depth == 0) return std::pair{s.substr(0, k), s.substr(k + 1)};
  }
  return std::nullopt;
}

std::vector<Elem> multiplicative_closure(const FinRing& ring, std::vector<Elem> seed, std::size_t limit) {
  std::vector<char> member(ring.size(), 0);
  std::vector<Elem> out;
  for (auto x : seed)
    if (!member[x]) {
      member[x] = 1;
      out.push_back(x);
    }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const auto xy = ring.mul(out[i], out[j]);
      if (!member[xy]) {
        member[xy] = 1;
        out.push_back(xy);
        if (out.size() > limit) return out;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GradedHom hom_build(const GradedRing& source, const GradedRing& target, std::vector<Elem> map) {
  if (!(source.group() == target.group()))
    throw Error(ErrorKind::GroupMismatch,
                "source graded by " + source.group().describe() + ", target by " + target.group().describe());
  const auto& r = source.ring();
  const auto& s = target.ring();
  if (map.size() != r.size()) throw Error(ErrorKind::MalformedSpec, "map is not total on the source carrier");
  for (auto y : map)
    if (y >= s.size()) throw Error(ErrorKind::MalformedSpec, "map value outside the target carrier");
  if (map[r.one()] != s.one())
    throw Error(ErrorKind::UnitNotPreserved, "f(1) = " + s.format(map[r.one()]) + " != 1");
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < r.size(); ++y) {
      if (map[r.add(x, y)] != s.add(map[x], map[y]))
        throw Error(ErrorKind::NotAdditive, "f(x + y) != f(x) + f(y) at (" + r.format(x) + ", " + r.format(y) + ")");
      if (map[r.mul(x, y)] != s.mul(map[x], map[y]))
        throw Error(ErrorKind::NotMultiplicativeHom,
                    "f(xy) != f(x)f(y) at (" + r.format(x) + ", " + r.format(y) + ")");
    }
  for (const auto& g : source.support()) {
    const auto target_component = target.component(g);
    for (auto x : source.component(g))
      if (!std::binary_search(target_component.begin(), target_component.end(), map[x]))
        throw Error(ErrorKind::NotDegreePreserving,
                    "f(" + r.format(x) + ") = " + s.format(map[x]) + " is not in S_" + source.group().format(g));
  }

  std::vector<Elem> kernel;
  for (Elem x = 0; x < r.size(); ++x)
    if (map[x] == s.zero()) kernel.push_back(x);
  std::vector<Elem> image = map;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return GradedHom(source, target, std::move(map), make_ideal_unchecked(r, std::move(kernel)), std::move(image));
}

IdealSet hom_transport(const GradedHom& f, const IdealSet& ideal, Direction direction) {
  const auto& r = f.source().ring();
  const auto& s = f.target().ring();
  if (direction == Direction::Preimage) {
    if (!ideal.ring().same_as(s)) throw Error(ErrorKind::RingMismatch, "ideal does not belong to the target");
    std::vector<Elem> out;
    for (Elem x = 0; x < r.size(); ++x)
      if (ideal.contains(f(x))) out.push_back(x);
    return make_ideal_unchecked(r, std::move(out));
  }
  if (!ideal.ring().same_as(r)) throw Error(ErrorKind::RingMismatch, "ideal does not belong to the source");
  if (!f.kernel().subset_of(ideal))
    throw Error(ErrorKind::KernelNotContained, "Ker(f) = " + f.kernel().format() + " is not inside " + ideal.format());
  if (!f.is_surjective()) throw Error(ErrorKind::NotSurjective, "f is not onto " + f.target().provenance());
  std::vector<Elem> out;
  for (auto x : ideal.elements()) out.push_back(f(x));
  return make_ideal_unchecked(s, std::move(out));
}

Quotient quotient(const GradedRing& gr, const IdealSet& k) {
  if (!is_graded_ideal(gr, k)) throw Error(ErrorKind::NotGraded, k.format() + " is not a graded ideal");
  if (!k.is_proper()) throw Error(ErrorKind::NotProper, "cannot quotient by the whole ring");
  const auto& ring = gr.ring();
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> cls(ring.size(), kUnset);
  std::vector<Elem> rep;
  for (Elem x = 0; x < ring.size(); ++x) {
    if (cls[x] != kUnset) continue;
    const auto id = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (auto y : k.elements()) cls[ring.add(x, y)] = id;
  }

  FinRing::Ops ops;
  ops.add = [ring, cls, rep](Elem a, Elem b) { return cls[ring.add(rep[a], rep[b])]; };
  ops.mul = [ring, cls, rep](Elem a, Elem b) { return cls[ring.mul(rep[a], rep[b])]; };
  ops.neg = [ring, cls, rep](Elem a) { return cls[ring.neg(rep[a])]; };
  ops.format = [ring, rep](Elem a) { return "[" + ring.format(rep[a]) + "]"; };
  ops.parse = [ring, cls](std::string_view text) -> std::optional<Elem> {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    return cls[ring.parse(text)];
  };
  auto q = FinRing::from_ops(rep.size(), cls[ring.zero()], cls[ring.one()], std::move(ops),
                             "Quotient(" + gr.provenance() + ", " + describe_ideal(k) + ")");

  std::map<Degree, std::vector<Elem>> components;
  for (const auto& g : gr.support()) {
    auto& comp = components[g];
    for (auto x : gr.component(g)) comp.push_back(cls[x]);
  }
  components[gr.group().identity()].push_back(cls[ring.zero()]);
  auto graded = attach_grading(q, gr.group(), components);
  auto projection = hom_build(gr, graded, cls);
  return Quotient{std::move(graded), std::move(projection)};
}

GradedRing product(const GradedRing& r, const GradedRing& s) {
  if (!(r.group() == s.group()))
    throw Error(ErrorKind::GroupMismatch, "factors graded by " + r.group().describe() + " and " + s.group().describe());
  const auto& a = r.ring();
  const auto& b = s.ring();
  const auto m = static_cast<Elem>(b.size());
  if (a.size() * b.size() > kMaxCarrier)
    throw Error(ErrorKind::MalformedSpec, "product carrier exceeds 4096 elements");

  FinRing::Ops ops;
  ops.add = [a, b, m](Elem x, Elem y) { return a.add(x / m, y / m) * m + b.add(x % m, y % m); };
  ops.mul = [a, b, m](Elem x, Elem y) { return a.mul(x / m, y / m) * m + b.mul(x % m, y % m); };
  ops.neg = [a, b, m](Elem x) { return a.neg(x / m) * m + b.neg(x % m); };
  ops.format = [a, b, m](Elem x) { return "(" + a.format(x / m) + "," + b.format(x % m) + ")"; };
  ops.parse = [a, b, m](std::string_view text) -> std::optional<Elem> {
    const auto parts = split_pair(text);
    if (!parts) return std::nullopt;
    return a.parse(parts->first) * m + b.parse(parts->second);
  };
  auto ring = FinRing::from_ops(a.size() * b.size(), a.zero() * m + b.zero(), a.one() * m + b.one(), std::move(ops),
                                "Product(" + r.provenance() + ", " + s.provenance() + ")");

  std::set<Degree> degrees(r.support().begin(), r.support().end());
  degrees.insert(s.support().begin(), s.support().end());
  std::map<Degree, std::vector<Elem>> components;
  for (const auto& g : degrees) {
    auto& comp = components[g];
    for (auto x : r.component(g))
      for (auto y : s.component(g)) comp.push_back(x * m + y);
  }
  return attach_grading(ring, r.group(), components);
}

MultiplicativeSet MultiplicativeSet::from_elements(const GradedRing& gr, std::vector<Elem> elements) {
  const auto& ring = gr.ring();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto x : elements) {
    if (x >= ring.size()) throw Error(ErrorKind::InvalidSet, "element index out of range");
    if (!gr.is_homogeneous(x)) throw Error(ErrorKind::InvalidSet, ring.format(x) + " is not homogeneous");
  }
  auto has = [&](Elem x) { return std::binary_search(elements.begin(), elements.end(), x); };
  if (!has(ring.one())) throw Error(ErrorKind::InvalidSet, "1 is not in S");
  if (has(ring.zero())) throw Error(ErrorKind::InvalidSet, "0 is in S");
  for (auto x : elements)
    for (auto y : elements)
      if (!has(ring.mul(x, y)))
        throw Error(ErrorKind::InvalidSet,
                    "S is not multiplicatively closed: " + ring.format(x) + " * " + ring.format(y));
  return MultiplicativeSet(std::move(elements));
}

MultiplicativeSet MultiplicativeSet::generated_by(const GradedRing& gr, std::span<const Elem> gens) {
  std::vector<Elem> seed{gr.ring().one()};
  for (auto g : gens) {
    if (g >= gr.size()) throw Error(ErrorKind::InvalidSet, "element index out of range");
    seed.push_back(g);
  }
  return from_elements(gr, multiplicative_closure(gr.ring(), std::move(seed), gr.size()));
}

std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const GradedRing& gr, std::size_t max_size,
                                                             std::size_t cap) {
  const auto& ring = gr.ring();
  std::vector<Elem> candidates;
  for (auto h : gr.homogeneous())
    if (!ring.is_nilpotent(h)) candidates.push_back(h);

  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue{multiplicative_closure(ring, {ring.one()}, max_size)};
  seen.insert(queue.front());
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (auto c : candidates) {
      if (std::binary_search(queue[next].begin(), queue[next].end(), c)) continue;
      auto seed = queue[next];
      seed.push_back(c);
      auto closed = multiplicative_closure(ring, std::move(seed), max_size);
      if (closed.size() > max_size) continue;
      if (std::binary_search(closed.begin(), closed.end(), ring.zero())) continue;
      if (seen.insert(closed).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(cap) + " multiplicative sets");
        queue.push_back(std::move(closed));
      }
    }
  }
  std::sort(queue.begin(), queue.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<MultiplicativeSet> out;
  for (auto& elems : queue) out.push_back(MultiplicativeSet::from_elements(gr, std::move(elems)));
  return out;
}

Localization localize(const GradedRing& gr, const MultiplicativeSet& set) {
  const auto& ring = gr.ring();
  const auto n = ring.size();
  const auto& s = set.elements();
  // Validate again: S may come from a different ring of the same size.
  const auto validated = MultiplicativeSet::from_elements(gr, s);
  auto pos = [&](Elem t) { return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), t) - s.begin()); };

  // killed[x]: ux = 0 for some u in S.
  std::vector<char> killed(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (auto u : s)
      if (ring.mul(u, x) == ring.zero()) {
        killed[x] = 1;
        break;
      }

  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> class_of(s.size() * n, kUnset);
  std::vector<std::pair<Elem, Elem>> reps;
  // Denominator 1 first so that every class prefers a representative a/1.
  std::vector<Elem> order{ring.one()};
  for (auto t : s)
    if (t != ring.one()) order.push_back(t);
  for (auto t : order)
    for (Elem a = 0; a < n; ++a) {
      auto& slot = class_of[pos(t) * n + a];
      if (slot != kUnset) continue;
      const auto id = static_cast<Elem>(reps.size());
      reps.emplace_back(a, t);
      for (auto u : s)
        for (Elem b = 0; b < n; ++b) {
          auto& other = class_of[pos(u) * n + b];
          if (other == kUnset && killed[ring.sub(ring.mul(a, u), ring.mul(b, t))]) other = id;
        }
    }

  std::size_t killed_count = 0;
  for (auto k : killed) killed_count += k;
  if (reps.size() * killed_count != n)
    throw Error(ErrorKind::InvalidSet, "localization class count " + std::to_string(reps.size()) +
                                           " disagrees with |R| / |{a : ua = 0, u in S}|");

  auto cls = [class_of, n, s](Elem a, Elem t) {
    const auto p = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), t) - s.begin());
    return class_of[p * n + a];
  };
  FinRing::Ops ops;
  ops.add = [ring, reps, cls](Elem x, Elem y) {
    const auto [a, t] = reps[x];
    const auto [b, u] = reps[y];
    return cls(ring.add(ring.mul(a, u), ring.mul(b, t)), ring.mul(t, u));
  };
  ops.mul = [ring, reps, cls](Elem x, Elem y) {
    const auto [a, t] = reps[x];
    const auto [b, u] = reps[y];
    return cls(ring.mul(a, b), ring.mul(t, u));
  };
  ops.neg = [ring, reps, cls](Elem x) {
    const auto [a, t] = reps[x];
    return cls(ring.neg(a), t);
  };
  ops.format = [ring, reps](Elem x) { return ring.format(reps[x].first) + "/" + ring.format(reps[x].second); };
  ops.parse = [ring, cls, s](std::string_view text) -> std::optional<Elem> {
    const auto slash = text.rfind('/');
    const auto a = ring.parse(text.substr(0, slash));
    const auto t = slash == std::string_view::npos ? ring.one() : ring.parse(text.substr(slash + 1));
    if (!std::binary_search(s.begin(), s.end(), t)) return std::nullopt;
    return cls(a, t);
  };
  auto loc = FinRing::from_ops(reps.size(), cls(ring.zero(), ring.one()), cls(ring.one(), ring.one()),
                               std::move(ops), "Localize(" + gr.provenance() + ", " + describe_set(ring, s) + ")");

  const auto& group = gr.group();
  std::map<Degree, std::vector<Elem>> components;
  components[group.identity()].push_back(loc.zero());
  for (auto a : gr.homogeneous()) {
    const auto h = gr.degree_of(a);
    if (!h) continue;
    for (auto t : s) {
      const auto g = group.combine(*h, group.inverse(*gr.degree_of(t)));
      components[g].push_back(cls(a, t));
    }
  }
  for (auto& [g, comp] : components) comp.push_back(loc.zero());
  auto graded = attach_grading(loc, group, components);

  std::vector<Elem> canonical(n);
  for (Elem r = 0; r < n; ++r) canonical[r] = cls(r, ring.one());
  auto hom = hom_build(gr, graded, std::move(canonical));
  return Localization(std::move(graded), std::move(hom), validated, std::move(class_of), n);
}

Elem Localization::fraction(Elem a, Elem s) const {
  const auto& elems = set_.elements();
  const auto it = std::lower_bound(elems.begin(), elems.end(), s);
  if (it == elems.end() || *it != s) throw Error(ErrorKind::InvalidSet, "denominator is not in S");
  return class_of_[static_cast<std::size_t>(it - elems.begin()) * source_size_ + a];
}

IdealSet Localization::extend(const IdealSet& ideal) const {
  std::vector<Elem> out;
  for (auto a : ideal.elements())
    for (auto t : set_.elements()) out.push_back(fraction(a, t));
  return make_ideal_unchecked(ring_.ring(), std::move(out));
}

Subring identity_subring(const GradedRing& gr) {
  const auto& ring = gr.ring();
  const auto re = gr.component(gr.group().identity());
  std::vector<Elem> elems(re.begin(), re.end());
  constexpr Elem kAbsent = static_cast<Elem>(-1);
  std::vector<Elem> index(ring.size(), kAbsent);
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = static_cast<Elem>(k);

  FinRing::Ops ops;
  ops.add = [ring, elems, index](Elem a, Elem b) { return index[ring.add(elems[a], elems[b])]; };
  ops.mul = [ring, elems, index](Elem a, Elem b) { return index[ring.mul(elems[a], elems[b])]; };
  ops.neg = [ring, elems, index](Elem a) { return index[ring.neg(elems[a])]; };
  ops.format = [ring, elems](Elem a) { return ring.format(elems[a]); };
  ops.parse = [ring, index](std::string_view text) -> std::optional<Elem> {
    const auto x = index[ring.parse(text)];
    if (x == static_cast<Elem>(-1)) return std::nullopt;
    return x;
  };
  auto sub = FinRing::from_ops(elems.size(), index[ring.zero()], index[ring.one()], std::move(ops),
                               "IdentitySubring(" + gr.provenance() + ")");
  std::vector<Elem> all(sub.size());
  for (Elem x = 0; x < sub.size(); ++x) all[x] = x;
  auto graded = attach_grading(sub, gr.group(), {{gr.group().identity(), std::move(all)}});
  auto inclusion = hom_build(graded, gr, elems);
  return Subring{std::move(graded), std::move(inclusion)};
}

}  // namespace gradedring
