#include "gradedring/grading.hpp"

#include <algorithm>
#include <cctype>

#include "gradedring/error.hpp"

namespace gradedring {

namespace {

std::int64_t normalize(std::int64_t v, std::int64_t factor) {
  if (factor == 0) return v;
  v %= factor;
  return v < 0 ? v + factor : v;
}

}  // namespace

GradingGroup GradingGroup::finite_abelian(std::vector<std::int64_t> invariant_factors) {
  for (auto f : invariant_factors)
    if (f < 2) throw Error(ErrorKind::MalformedSpec, "invariant factors must be >= 2, got " + std::to_string(f));
  return GradingGroup{Kind::FiniteAbelian, std::move(invariant_factors)};
}

Degree GradingGroup::combine(const Degree& a, const Degree& b) const {
  Degree out{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t k = 0; k < factors_.size(); ++k) out.coords[k] = normalize(a.coords[k] + b.coords[k], factors_[k]);
  return out;
}

Degree GradingGroup::inverse(const Degree& a) const {
  Degree out{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t k = 0; k < factors_.size(); ++k) out.coords[k] = normalize(-a.coords[k], factors_[k]);
  return out;
}

bool GradingGroup::contains(const Degree& d) const {
  if (d.coords.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (factors_[k] != 0 && (d.coords[k] < 0 || d.coords[k] >= factors_[k])) return false;
  return true;
}

std::string GradingGroup::format(const Degree& d) const {
  if (d.coords.empty()) return "e";
  if (d.coords.size() == 1) return std::to_string(d.coords[0]);
  std::string out = "(";
  for (std::size_t k = 0; k < d.coords.size(); ++k) out += (k ? "," : "") + std::to_string(d.coords[k]);
  return out + ")";
}

Degree GradingGroup::parse(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "e") return identity();
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Degree d;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    const auto comma = s.find(',', pos);
    const auto token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      d.coords.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "invalid degree '" + std::string(text) + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (d.coords.size() != factors_.size())
    throw Error(ErrorKind::ParseError, "degree '" + std::string(text) + "' does not match group " + describe());
  for (std::size_t k = 0; k < factors_.size(); ++k) d.coords[k] = normalize(d.coords[k], factors_[k]);
  return d;
}

std::string GradingGroup::describe() const {
  if (factors_.empty()) return "trivial";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += "x";
    out += factors_[k] == 0 ? std::string("Z") : "Z" + std::to_string(factors_[k]);
  }
  return out;
}

GradedRing attach_grading(const FinRing& ring, const GradingGroup& group,
                          const std::map<Degree, std::vector<Elem>>& components) {
  const auto n = ring.size();
  const auto zero = ring.zero();
  GradedRing gr(ring, group);

  std::vector<Degree> degrees;
  std::vector<std::vector<Elem>> comps;
  for (const auto& [g, elems] : components) {
    if (!group.contains(g))
      throw Error(ErrorKind::MalformedSpec, "degree " + group.format(g) + " is not an element of " + group.describe());
    std::vector<Elem> sorted = elems;
    for (auto x : sorted)
      if (x >= n) throw Error(ErrorKind::MalformedSpec, "component element index out of range");
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<char> member(n, 0);
    for (auto x : sorted) member[x] = 1;
    const auto where = "R_" + group.format(g);
    if (!member[zero]) throw Error(ErrorKind::NotSubgroup, where + " does not contain 0");
    for (auto x : sorted) {
      if (!member[ring.neg(x)]) throw Error(ErrorKind::NotSubgroup, where + " not closed under negation at " + ring.format(x));
      for (auto y : sorted)
        if (!member[ring.add(x, y)])
          throw Error(ErrorKind::NotSubgroup,
                      where + " not closed under addition at (" + ring.format(x) + ", " + ring.format(y) + ")");
    }
    if (sorted.size() > 1) {
      degrees.push_back(g);
      comps.push_back(std::move(sorted));
    }
  }

  const auto e = group.identity();
  const auto e_it = std::find(degrees.begin(), degrees.end(), e);
  if (e_it == degrees.end() ||
      !std::binary_search(comps[e_it - degrees.begin()].begin(), comps[e_it - degrees.begin()].end(), ring.one()))
    throw Error(ErrorKind::IdentityNotInRe, "1 is not in R_e");

  // Direct sum: enumerate the Cartesian product of components, every sum must be hit exactly once.
  const auto k = degrees.size();
  gr.parts_.assign(n * k, zero);
  std::vector<char> hit(n, 0);
  std::vector<std::size_t> digit(k, 0);
  std::size_t visited = 0;
  while (true) {
    Elem sum = zero;
    for (std::size_t j = 0; j < k; ++j) sum = ring.add(sum, comps[j][digit[j]]);
    if (hit[sum]) throw Error(ErrorKind::NotDirectSum, ring.format(sum) + " has more than one decomposition");
    hit[sum] = 1;
    ++visited;
    for (std::size_t j = 0; j < k; ++j) gr.parts_[static_cast<std::size_t>(sum) * k + j] = comps[j][digit[j]];
    std::size_t j = 0;
    while (j < k && ++digit[j] == comps[j].size()) digit[j++] = 0;
    if (j == k) break;
  }
  if (visited != n) {
    for (Elem x = 0; x < n; ++x)
      if (!hit[x]) throw Error(ErrorKind::NotDirectSum, ring.format(x) + " is not a sum of homogeneous components");
  }

  std::vector<std::vector<char>> member(k, std::vector<char>(n, 0));
  for (std::size_t j = 0; j < k; ++j)
    for (auto x : comps[j]) member[j][x] = 1;
  auto index_of = [&](const Degree& g) -> int {
    const auto it = std::find(degrees.begin(), degrees.end(), g);
    return it == degrees.end() ? -1 : static_cast<int>(it - degrees.begin());
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      const auto target = index_of(group.combine(degrees[a], degrees[b]));
      for (auto x : comps[a])
        for (auto y : comps[b]) {
          const auto xy = ring.mul(x, y);
          const bool ok = target < 0 ? xy == zero : member[target][xy] != 0;
          if (!ok)
            throw Error(ErrorKind::NotMultiplicative, "R_" + group.format(degrees[a]) + " * R_" +
                                                          group.format(degrees[b]) + " not in R_" +
                                                          group.format(group.combine(degrees[a], degrees[b])) +
                                                          ": " + ring.format(x) + " * " + ring.format(y));
        }
    }

  gr.homogeneous_flag_.assign(n, 0);
  gr.degree_index_.assign(n, -1);
  gr.homogeneous_flag_[zero] = 1;
  for (std::size_t j = 0; j < k; ++j)
    for (auto x : comps[j]) {
      gr.homogeneous_flag_[x] = 1;
      if (x != zero) gr.degree_index_[x] = static_cast<int>(j);
    }
  for (Elem x = 0; x < n; ++x)
    if (gr.homogeneous_flag_[x]) gr.homogeneous_.push_back(x);
  gr.support_ = std::move(degrees);
  gr.components_ = std::move(comps);
  gr.zero_component_ = {zero};
  return gr;
}

GradedRing trivially_graded(const FinRing& ring) {
  std::vector<Elem> all(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) all[x] = x;
  const auto group = GradingGroup::trivial();
  return attach_grading(ring, group, {{group.identity(), std::move(all)}});
}

std::span<const Elem> GradedRing::component(const Degree& g) const {
  const auto it = std::find(support_.begin(), support_.end(), g);
  if (it == support_.end()) return zero_component_;
  return components_[it - support_.begin()];
}

std::map<Degree, Elem> GradedRing::decompose(Elem x) const {
  std::map<Degree, Elem> out;
  const auto p = parts(x);
  for (std::size_t j = 0; j < support_.size(); ++j) out.emplace(support_[j], p[j]);
  return out;
}

std::optional<Degree> GradedRing::degree_of(Elem x) const {
  if (degree_index_[x] < 0) return std::nullopt;
  return support_[degree_index_[x]];
}

}  // namespace gradedring
