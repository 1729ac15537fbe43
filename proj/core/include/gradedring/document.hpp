#pragma once

// JSON ring specifications. A document names a constructor tree, a grading
// group, the homogeneous components and optional named ideals:
//
//   {
//     "ring": {"gauss_mod": 4},
//     "group": {"kind": "finite_abelian", "factors": [2]},
//     "components": {"0": ["1"], "1": ["i"]},
//     "ideals": {"two": ["2"]}
//   }
//
// Components list additive generators of each R_g. "trivial" puts the whole
// ring in degree e; "standard" makes i (GaussMod) or u (PolyQuotient) degree 1.
// Products, quotients and localizations inherit their grading from the nested
// documents. Errors carry the JSON pointer of the offending node, or the byte
// offset for syntax errors.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedring/grading.hpp"
#include "gradedring/ideals.hpp"
#include "gradedring/verifier.hpp"

namespace gradedring {

struct NamedIdeal {
  std::string name;
  IdealSet ideal;
};

struct RingDocument {
  GradedRing ring;
  /// Present when the top-level constructor is a product.
  std::optional<RingPair> factors;
  std::vector<NamedIdeal> ideals;

  const IdealSet* find_ideal(std::string_view name) const;
};

RingDocument parse_ring_document(std::string_view text);
RingDocument read_ring_document(const std::filesystem::path& path);

/// `{"corpus": [{"name": ..., "ring": ...}, ...]}`.
Corpus parse_corpus(std::string_view text);
Corpus read_corpus(const std::filesystem::path& path);

/// The built-in corpus, in its fixed order.
const Corpus& default_corpus();
std::string_view default_corpus_json();

/// Comma-separated generators such as "2,3" or "(1,0),(0,3)"; commas inside
/// parentheses do not split.
std::vector<Elem> parse_element_list(const FinRing& ring, std::string_view text);

}  // namespace gradedring
