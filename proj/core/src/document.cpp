#include "gradedring/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gradedring/error.hpp"
#include "gradedring/transport.hpp"

namespace gradedring {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, ErrorKind kind, const std::string& what) {
  throw Error(kind, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

// Library errors raised while building a node get the node's path attached;
// errors already positioned by a deeper node pass through unchanged.
template <typename F>
auto at(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.detail().rfind("at /", 0) == 0) throw;
    fail(path, e.kind(), e.detail());
  }
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

std::int64_t need_int(const Json& node, const std::string& path) {
  if (!node.is_number_integer()) fail(path, ErrorKind::MalformedSpec, "expected an integer");
  return node.get<std::int64_t>();
}

const Json& need_key(const Json& node, std::string_view key, const std::string& path) {
  if (!node.is_object()) fail(path, ErrorKind::MalformedSpec, "expected an object");
  const auto it = node.find(std::string(key));
  if (it == node.end()) fail(path, ErrorKind::MalformedSpec, "missing key '" + std::string(key) + "'");
  return *it;
}

Elem parse_element(const FinRing& ring, const Json& node, const std::string& path) {
  std::string text;
  if (node.is_string())
    text = node.get<std::string>();
  else if (node.is_number_integer())
    text = std::to_string(node.get<std::int64_t>());
  else
    fail(path, ErrorKind::MalformedSpec, "expected an element expression");
  return at(path, [&] { return ring.parse(text); });
}

std::vector<Elem> parse_elements(const FinRing& ring, const Json& node, const std::string& path) {
  if (!node.is_array()) return {parse_element(ring, node, path)};
  std::vector<Elem> out;
  for (std::size_t k = 0; k < node.size(); ++k) out.push_back(parse_element(ring, node[k], child(path, k)));
  return out;
}

std::vector<Elem> additive_span(const FinRing& ring, const std::vector<Elem>& gens) {
  std::set<Elem> span{ring.zero()};
  std::vector<Elem> frontier{ring.zero()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (auto x : frontier)
      for (auto g : gens)
        if (span.insert(ring.add(x, g)).second) next.push_back(ring.add(x, g));
    frontier = std::move(next);
  }
  return {span.begin(), span.end()};
}

GradingGroup parse_group(const Json& node, const std::string& path) {
  const auto& kind_node = need_key(node, "kind", path);
  if (!kind_node.is_string()) fail(child(path, "kind"), ErrorKind::MalformedSpec, "expected a string");
  const auto kind = kind_node.get<std::string>();
  if (kind == "trivial") return GradingGroup::trivial();
  if (kind == "integers") return GradingGroup::integers();
  if (kind == "finite_abelian") {
    const auto fpath = child(path, "factors");
    const auto& factors = need_key(node, "factors", path);
    if (!factors.is_array()) fail(fpath, ErrorKind::MalformedSpec, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < factors.size(); ++k) out.push_back(need_int(factors[k], child(fpath, k)));
    return at(fpath, [&] { return GradingGroup::finite_abelian(out); });
  }
  fail(child(path, "kind"), ErrorKind::MalformedSpec,
       "unknown group kind '" + kind + "' (expected trivial, finite_abelian or integers)");
}

// Degree of the k-th power of the grading generator under "standard".
Degree monomial_degree(const GradingGroup& group, std::int64_t k) {
  if (group.is_trivial()) return group.identity();
  const auto f = group.factors().front();
  return Degree{{f == 0 ? k : k % f}};
}

std::map<Degree, std::vector<Elem>> standard_components(const FinRing& ring, const RingSpec& spec,
                                                        const GradingGroup& group, const std::string& path) {
  if (group.factors().size() > 1)
    fail(path, ErrorKind::MalformedSpec, "\"standard\" components need a cyclic grading group");
  std::vector<std::pair<std::int64_t, Elem>> monomials;
  if (const auto* g = std::get_if<GaussMod>(&spec)) {
    monomials = {{0, ring.one()}, {1, static_cast<Elem>(g->n)}};
  } else if (const auto* q = std::get_if<PolyQuotient>(&spec)) {
    Elem power = 1;
    for (std::size_t k = 0; k + 1 < q->modulus.size(); ++k) {
      monomials.emplace_back(static_cast<std::int64_t>(k), power);
      power *= static_cast<Elem>(q->p);
    }
  } else {
    monomials = {{0, ring.one()}};
  }
  std::map<Degree, std::vector<Elem>> gens;
  for (const auto& [k, m] : monomials) gens[monomial_degree(group, k)].push_back(m);
  std::map<Degree, std::vector<Elem>> out;
  for (const auto& [d, g] : gens) out[d] = additive_span(ring, g);
  return out;
}

GradedRing grade_base(const FinRing& ring, const RingSpec& spec, const Json& node, const std::string& path) {
  auto group = GradingGroup::trivial();
  if (const auto it = node.find("group"); it != node.end()) group = parse_group(*it, child(path, "group"));

  const auto cpath = child(path, "components");
  const auto it = node.find("components");
  std::map<Degree, std::vector<Elem>> components;
  if (it == node.end() || (it->is_string() && it->get<std::string>() == "trivial")) {
    std::vector<Elem> all(ring.size());
    for (Elem x = 0; x < ring.size(); ++x) all[x] = x;
    components[group.identity()] = std::move(all);
  } else if (it->is_string() && it->get<std::string>() == "standard") {
    components = standard_components(ring, spec, group, cpath);
  } else if (it->is_object()) {
    for (const auto& [key, value] : it->items()) {
      const auto dpath = child(cpath, key);
      const auto degree = at(dpath, [&] { return group.parse(key); });
      components[degree] = additive_span(ring, parse_elements(ring, value, dpath));
    }
  } else {
    fail(cpath, ErrorKind::MalformedSpec, "expected \"trivial\", \"standard\" or a map from degree to elements");
  }
  return at(cpath, [&] { return attach_grading(ring, group, components); });
}

std::vector<std::vector<Elem>> parse_table(const Json& node, std::size_t n, const std::string& path) {
  if (!node.is_array() || node.size() != n) fail(path, ErrorKind::MalformedSpec, "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Elem>> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto rpath = child(path, r);
    if (!node[r].is_array() || node[r].size() != n)
      fail(rpath, ErrorKind::MalformedSpec, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = need_int(node[r][c], child(rpath, c));
      if (v < 0 || static_cast<std::size_t>(v) >= n) fail(child(rpath, c), ErrorKind::MalformedSpec, "index out of range");
      out[r].push_back(static_cast<Elem>(v));
    }
  }
  return out;
}

// {"name": ..., "elements": [names], "add": [[...]], "mul": [[...]]}, entries
// being indices into "elements".
FinRing build_table(const Json& body, const std::string& path) {
  const auto& names_node = need_key(body, "elements", path);
  if (!names_node.is_array()) fail(child(path, "elements"), ErrorKind::MalformedSpec, "expected element names");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < names_node.size(); ++k) {
    if (!names_node[k].is_string()) fail(child(child(path, "elements"), k), ErrorKind::MalformedSpec, "expected a string");
    names.push_back(names_node[k].get<std::string>());
  }
  std::string name = "unnamed";
  if (const auto it = body.find("name"); it != body.end() && it->is_string()) name = it->get<std::string>();
  const auto add = parse_table(need_key(body, "add", path), names.size(), child(path, "add"));
  const auto mul = parse_table(need_key(body, "mul", path), names.size(), child(path, "mul"));
  return at(path, [&] { return table_ring(name, names, add, mul); });
}

struct Built {
  GradedRing ring;
  std::optional<RingPair> factors;
};

Built build_graded(const Json& node, const std::string& path);

Built build_constructed(const std::string& kind, const Json& body, const Json& node, const std::string& path,
                        const std::string& rpath) {
  if (node.contains("group") || node.contains("components"))
    fail(path, ErrorKind::MalformedSpec, "a " + kind + " inherits its grading; drop \"group\" and \"components\"");
  const auto bpath = child(rpath, kind);
  if (kind == "product") {
    if (!body.is_array() || body.size() != 2) fail(bpath, ErrorKind::MalformedSpec, "expected two ring documents");
    auto left = build_graded(body[0], child(bpath, 0));
    auto right = build_graded(body[1], child(bpath, 1));
    auto ring = at(bpath, [&] { return product(left.ring, right.ring); });
    return Built{std::move(ring), RingPair{std::move(left.ring), std::move(right.ring)}};
  }
  const auto base = build_graded(need_key(body, "of", bpath), child(bpath, "of"));
  const auto& base_ring = base.ring.ring();
  if (kind == "quotient") {
    const auto gens = parse_elements(base_ring, need_key(body, "by", bpath), child(bpath, "by"));
    const auto k = ideal_generated(base_ring, gens);
    return Built{at(bpath, [&] { return quotient(base.ring, k).ring; }), std::nullopt};
  }
  // localize
  const bool explicit_set = body.contains("set");
  const auto key = explicit_set ? "set" : "generators";
  const auto elems = parse_elements(base_ring, need_key(body, key, bpath), child(bpath, key));
  const auto set = at(child(bpath, key), [&] {
    return explicit_set ? MultiplicativeSet::from_elements(base.ring, elems)
                        : MultiplicativeSet::generated_by(base.ring, elems);
  });
  return Built{at(bpath, [&] { return localize(base.ring, set).ring(); }), std::nullopt};
}

Built build_graded(const Json& node, const std::string& path) {
  const auto rpath = child(path, "ring");
  const auto& ring_node = need_key(node, "ring", path);
  if (!ring_node.is_object() || ring_node.size() != 1)
    fail(rpath, ErrorKind::MalformedSpec, "expected an object with exactly one constructor key");
  const auto& [kind, body] = *ring_node.items().begin();
  const auto bpath = child(rpath, kind);

  if (kind == "product" || kind == "quotient" || kind == "localize")
    return build_constructed(kind, body, node, path, rpath);

  if (kind == "table") {
    const auto ring = build_table(body, bpath);
    return Built{grade_base(ring, RingSpec{}, node, path), std::nullopt};
  }

  RingSpec spec;
  if (kind == "cyclic") {
    spec = Cyclic{need_int(body, bpath)};
  } else if (kind == "gauss_mod") {
    spec = GaussMod{need_int(body, bpath)};
  } else if (kind == "poly_quotient") {
    PolyQuotient pq{need_int(need_key(body, "p", bpath), child(bpath, "p")), {}};
    const auto mpath = child(bpath, "modulus");
    const auto& modulus = need_key(body, "modulus", bpath);
    if (modulus.is_string()) {
      pq.modulus = at(mpath, [&] { return parse_univariate(modulus.get<std::string>(), "u"); });
    } else if (modulus.is_array()) {
      for (std::size_t k = 0; k < modulus.size(); ++k) pq.modulus.push_back(need_int(modulus[k], child(mpath, k)));
    } else {
      fail(mpath, ErrorKind::MalformedSpec, "expected a polynomial in u or a low-degree-first coefficient list");
    }
    spec = std::move(pq);
  } else {
    fail(bpath, ErrorKind::MalformedSpec,
         "unknown constructor '" + kind + "' (expected cyclic, gauss_mod, poly_quotient, table, product, quotient, localize)");
  }
  const auto ring = at(bpath, [&] { return build_ring(spec); });
  return Built{grade_base(ring, spec, node, path), std::nullopt};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RingDocument document_from_json(const Json& root, const std::string& path) {
  auto built = build_graded(root, path);
  RingDocument doc{std::move(built.ring), std::move(built.factors), {}};
  if (const auto it = root.find("ideals"); it != root.end()) {
    const auto ipath = child(path, "ideals");
    if (!it->is_object()) fail(ipath, ErrorKind::MalformedSpec, "expected a map from name to generators");
    for (const auto& [name, gens] : it->items()) {
      const auto npath = child(ipath, name);
      const auto elems = parse_elements(doc.ring.ring(), gens, npath);
      doc.ideals.push_back(NamedIdeal{name, ideal_generated(doc.ring.ring(), elems)});
    }
  }
  return doc;
}

constexpr std::string_view kDefaultCorpus = R"json({
  "corpus": [
    {"name": "cyclic-4", "ring": {"cyclic": 4}},
    {"name": "cyclic-6", "ring": {"cyclic": 6}},
    {"name": "cyclic-8", "ring": {"cyclic": 8}},
    {"name": "cyclic-9", "ring": {"cyclic": 9}},
    {"name": "cyclic-12", "ring": {"cyclic": 12}},
    {"name": "cyclic-16", "ring": {"cyclic": 16}},
    {"name": "cyclic-25", "ring": {"cyclic": 25}},
    {"name": "cyclic-27", "ring": {"cyclic": 27}},
    {"name": "cyclic-36", "ring": {"cyclic": 36}},
    {"name": "gauss-2-z2", "ring": {"gauss_mod": 2},
     "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
    {"name": "gauss-3-z2", "ring": {"gauss_mod": 3},
     "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
    {"name": "gauss-4-z2", "ring": {"gauss_mod": 4},
     "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
    {"name": "gauss-9-z2", "ring": {"gauss_mod": 9},
     "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
    {"name": "f3-u2-minus-1-z2", "ring": {"poly_quotient": {"p": 3, "modulus": "u^2-1"}},
     "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
    {"name": "f2-u2-plus-1-z2", "ring": {"poly_quotient": {"p": 2, "modulus": "u^2+1"}},
     "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
    {"name": "f3-u3-z", "ring": {"poly_quotient": {"p": 3, "modulus": "u^3"}},
     "group": {"kind": "integers"}, "components": "standard"},
    {"name": "f2-xy-square-zero-z", "ring": {"table": {
      "name": "F2[x,y]/(x,y)^2",
      "elements": ["0", "1", "x", "1+x", "y", "1+y", "x+y", "1+x+y"],
      "add": [[0,1,2,3,4,5,6,7],[1,0,3,2,5,4,7,6],[2,3,0,1,6,7,4,5],[3,2,1,0,7,6,5,4],
              [4,5,6,7,0,1,2,3],[5,4,7,6,1,0,3,2],[6,7,4,5,2,3,0,1],[7,6,5,4,3,2,1,0]],
      "mul": [[0,0,0,0,0,0,0,0],[0,1,2,3,4,5,6,7],[0,2,0,2,0,2,0,2],[0,3,2,1,4,7,6,5],
              [0,4,0,4,0,4,0,4],[0,5,2,7,4,1,6,3],[0,6,0,6,0,6,0,6],[0,7,2,5,4,3,6,1]]}},
     "group": {"kind": "integers"}, "components": {"0": ["1"], "1": ["x", "y"]}},
    {"name": "cyclic-4-x-cyclic-9", "ring": {"product": [
      {"ring": {"cyclic": 4}},
      {"ring": {"cyclic": 9}}]}},
    {"name": "gauss-2-x-gauss-2-z2", "ring": {"product": [
      {"ring": {"gauss_mod": 2}, "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
      {"ring": {"gauss_mod": 2}, "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"}]}},
    {"name": "gauss-4-z2-mod-2", "ring": {"quotient": {
      "of": {"ring": {"gauss_mod": 4}, "group": {"kind": "finite_abelian", "factors": [2]}, "components": "standard"},
      "by": ["2"]}}},
    {"name": "cyclic-12-at-3", "ring": {"localize": {"of": {"ring": {"cyclic": 12}}, "set": [1, 3, 9]}}},
    {"name": "cyclic-4-x-cyclic-9-at-e1", "ring": {"localize": {
      "of": {"ring": {"product": [{"ring": {"cyclic": 4}}, {"ring": {"cyclic": 9}}]}},
      "set": ["(1,1)", "(1,0)"]}}}
  ]
}
)json";

}  // namespace

const IdealSet* RingDocument::find_ideal(std::string_view name) const {
  for (const auto& ideal : ideals)
    if (ideal.name == name) return &ideal.ideal;
  return nullptr;
}

RingDocument parse_ring_document(std::string_view text) { return document_from_json(parse_json(text), ""); }

RingDocument read_ring_document(const std::filesystem::path& path) { return parse_ring_document(slurp(path)); }

Corpus parse_corpus(std::string_view text) {
  const auto root = parse_json(text);
  const auto& list = need_key(root, "corpus", "");
  if (!list.is_array()) fail("/corpus", ErrorKind::MalformedSpec, "expected an array of ring documents");
  Corpus corpus;
  std::set<std::string> names;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto path = child("/corpus", k);
    const auto& name = need_key(list[k], "name", path);
    if (!name.is_string()) fail(child(path, "name"), ErrorKind::MalformedSpec, "expected a string");
    if (!names.insert(name.get<std::string>()).second)
      fail(child(path, "name"), ErrorKind::MalformedSpec, "duplicate name '" + name.get<std::string>() + "'");
    auto doc = document_from_json(list[k], path);
    corpus.entries.push_back(CorpusEntry{name.get<std::string>(), std::move(doc.ring), std::move(doc.factors)});
  }
  return corpus;
}

Corpus read_corpus(const std::filesystem::path& path) { return parse_corpus(slurp(path)); }

std::string_view default_corpus_json() { return kDefaultCorpus; }

const Corpus& default_corpus() {
  static const Corpus corpus = parse_corpus(kDefaultCorpus);
  return corpus;
}

std::vector<Elem> parse_element_list(const FinRing& ring, std::string_view text) {
  std::vector<Elem> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    const char c = k < text.size() ? text[k] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      auto piece = text.substr(start, k - start);
      while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
      while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
      if (piece.empty()) throw Error(ErrorKind::ParseError, "empty element in list '" + std::string(text) + "'");
      out.push_back(ring.parse(piece));
      start = k + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
  return out;
}

}  // namespace gradedring
