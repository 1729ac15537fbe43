#pragma once

// Brute-force reference implementations used only by the tests. They work
// from raw ring arithmetic and the component sets, never from the library's
// ideal, radical or classification code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "gradedring/grading.hpp"

namespace oracle {

using gradedring::Elem;
using gradedring::FinRing;
using gradedring::GradedRing;
using ElemSet = std::vector<Elem>;

inline ElemSet all_elements(const FinRing& r) {
  ElemSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) out[x] = x;
  return out;
}

inline ElemSet units(const FinRing& r) {
  ElemSet out;
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < r.size(); ++y)
      if (r.mul(x, y) == r.one()) {
        out.push_back(x);
        break;
      }
  return out;
}

inline bool is_nilpotent(const FinRing& r, Elem x) {
  Elem p = x;
  for (std::size_t k = 0; k <= r.size(); ++k) {
    if (p == r.zero()) return true;
    p = r.mul(p, x);
  }
  return false;
}

inline ElemSet nilpotents(const FinRing& r) {
  ElemSet out;
  for (Elem x = 0; x < r.size(); ++x)
    if (is_nilpotent(r, x)) out.push_back(x);
  return out;
}

/// h(R) as the union of the component sets.
inline ElemSet homogeneous(const GradedRing& gr) {
  std::set<Elem> h;
  for (const auto& d : gr.support())
    for (auto x : gr.component(d)) h.insert(x);
  return {h.begin(), h.end()};
}

inline bool member(const ElemSet& s, Elem x) {
  for (auto y : s)
    if (y == x) return true;
  return false;
}

inline bool is_ideal(const FinRing& r, const ElemSet& s) {
  if (!member(s, r.zero())) return false;
  for (auto a : s)
    for (auto b : s)
      if (!member(s, r.sub(a, b))) return false;
  for (auto a : s)
    for (Elem x = 0; x < r.size(); ++x)
      if (!member(s, r.mul(a, x))) return false;
  return true;
}

/// Homogeneous parts of x, found by searching the product of the component
/// sets for a tuple summing to x.
inline ElemSet decompose_by_search(const GradedRing& gr, Elem x) {
  const auto& r = gr.ring();
  const auto& support = gr.support();
  ElemSet parts(support.size(), r.zero());
  std::function<bool(std::size_t, Elem)> search = [&](std::size_t k, Elem acc) {
    if (k == support.size()) return acc == x;
    for (auto c : gr.component(support[k])) {
      parts[k] = c;
      if (search(k + 1, r.add(acc, c))) return true;
    }
    return false;
  };
  search(0, r.zero());
  return parts;
}

/// Graded: every homogeneous part of every member is a member.
inline bool is_graded(const GradedRing& gr, const ElemSet& s) {
  for (auto x : s)
    for (auto p : decompose_by_search(gr, x))
      if (!member(s, p)) return false;
  return true;
}

/// Every graded ideal, found by filtering all 2^|R| subsets. Only for
/// carriers of at most 16 elements. Sorted by (size, elements).
inline std::vector<ElemSet> graded_ideals_by_subsets(const GradedRing& gr) {
  const auto& r = gr.ring();
  const auto n = r.size();
  std::vector<ElemSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << r.zero()))) continue;
    ElemSet s;
    for (Elem x = 0; x < n; ++x)
      if (mask & (1u << x)) s.push_back(x);
    if (is_ideal(r, s) && is_graded(gr, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Grad(I) straight from the definition: every homogeneous part of x has a
/// power in I.
inline ElemSet graded_radical(const GradedRing& gr, const ElemSet& ideal) {
  const auto& r = gr.ring();
  auto power_in = [&](Elem h) {
    Elem p = h;
    for (std::size_t k = 0; k <= r.size(); ++k) {
      if (member(ideal, p)) return true;
      p = r.mul(p, h);
    }
    return false;
  };
  ElemSet out;
  for (Elem x = 0; x < r.size(); ++x) {
    bool ok = true;
    for (auto p : decompose_by_search(gr, x)) ok = ok && power_in(p);
    if (ok) out.push_back(x);
  }
  return out;
}

inline ElemSet nonunit_homogeneous(const GradedRing& gr) {
  const auto u = units(gr.ring());
  ElemSet out;
  for (auto h : homogeneous(gr))
    if (!member(u, h)) out.push_back(h);
  return out;
}

/// xyz in P implies xy in P or z in Grad({0}), over nonunit homogeneous triples.
inline bool strongly(const GradedRing& gr, const ElemSet& p) {
  const auto& r = gr.ring();
  const auto nil = graded_radical(gr, {r.zero()});
  const auto dom = nonunit_homogeneous(gr);
  for (auto x : dom)
    for (auto y : dom)
      for (auto z : dom)
        if (member(p, r.mul(r.mul(x, y), z)) && !member(p, r.mul(x, y)) && !member(nil, z)) return false;
  return true;
}

inline bool one_absorbing(const GradedRing& gr, const ElemSet& p) {
  const auto& r = gr.ring();
  const auto rad = graded_radical(gr, p);
  const auto dom = nonunit_homogeneous(gr);
  for (auto x : dom)
    for (auto y : dom)
      for (auto z : dom)
        if (member(p, r.mul(r.mul(x, y), z)) && !member(p, r.mul(x, y)) && !member(rad, z)) return false;
  return true;
}

inline bool prime(const GradedRing& gr, const ElemSet& p) {
  const auto& r = gr.ring();
  const auto h = homogeneous(gr);
  for (auto x : h)
    for (auto y : h)
      if (member(p, r.mul(x, y)) && !member(p, x) && !member(p, y)) return false;
  return true;
}

inline bool primary(const GradedRing& gr, const ElemSet& q) {
  const auto& r = gr.ring();
  const auto rad = graded_radical(gr, q);
  const auto h = homogeneous(gr);
  for (auto x : h)
    for (auto y : h)
      if (member(q, r.mul(x, y)) && !member(q, x) && !member(rad, y)) return false;
  return true;
}

inline bool two_absorbing(const GradedRing& gr, const ElemSet& p) {
  const auto& r = gr.ring();
  const auto rad = graded_radical(gr, p);
  const auto h = homogeneous(gr);
  for (auto x : h)
    for (auto y : h)
      for (auto z : h)
        if (member(p, r.mul(r.mul(x, y), z)) && !member(p, r.mul(x, y)) && !member(rad, r.mul(x, z)) &&
            !member(rad, r.mul(y, z)))
          return false;
  return true;
}

/// Number of classes of S x R under (a,s) ~ (b,t) iff u(at - bs) = 0 for
/// some u in S, counted with a union-find over all pairs.
inline std::size_t localization_classes(const FinRing& r, const ElemSet& s) {
  const auto n = r.size();
  const auto m = s.size();
  std::vector<std::size_t> parent(n * m);
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (Elem a = 0; a < n; ++a)
      for (std::size_t j = 0; j < m; ++j)
        for (Elem b = 0; b < n; ++b) {
          const auto diff = r.sub(r.mul(a, s[j]), r.mul(b, s[i]));
          for (auto u : s)
            if (r.mul(u, diff) == r.zero()) {
              parent[find(i * n + a)] = find(j * n + b);
              break;
            }
        }
  std::set<std::size_t> roots;
  for (std::size_t k = 0; k < parent.size(); ++k) roots.insert(find(k));
  return roots.size();
}

/// |R| / |{a : ua = 0 for some u in S}|: the size predicted by the kernel of
/// the (surjective) canonical map of a finite ring.
inline std::size_t localization_size_by_kernel(const FinRing& r, const ElemSet& s) {
  std::size_t killed = 0;
  for (Elem a = 0; a < r.size(); ++a)
    for (auto u : s)
      if (r.mul(u, a) == r.zero()) {
        ++killed;
        break;
      }
  return r.size() / killed;
}

inline bool is_prime_power(std::int64_t n) {
  for (std::int64_t p = 2; p <= n; ++p) {
    bool p_prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) p_prime = false;
    if (!p_prime) continue;
    std::int64_t q = p;
    while (q < n) q *= p;
    if (q == n) return true;
  }
  return false;
}

}  // namespace oracle
