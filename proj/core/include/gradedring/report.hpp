#pragma once

// Text and JSON renderings of ring summaries, classification reports,
// verification reports and search hits. Output is deterministic: no timings,
// and every collection is emitted in a fixed order.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gradedring/classify.hpp"
#include "gradedring/verifier.hpp"

namespace gradedring {

using ReportJson = nlohmann::ordered_json;

std::string format_elements(const FinRing& ring, const std::vector<Elem>& elements);
/// "(2,2,3)" style tuple.
std::string format_tuple(const FinRing& ring, const std::vector<Elem>& elements);

/// Carrier size, units, nilradical, Grad({0}), components, graded-ideal
/// lattice and local structure.
std::string ring_summary_text(const GradedRing& gr);
ReportJson ring_summary_json(const GradedRing& gr);

std::string classification_text(const GradedRing& gr, const ClassificationReport& report);
ReportJson classification_json(const GradedRing& gr, const ClassificationReport& report);

std::string verification_text(const VerificationReport& report);
ReportJson verification_json(const VerificationReport& report);

std::string search_text(const std::vector<SearchHit>& hits, Flag hypothesis, Flag conclusion);
ReportJson search_json(const std::vector<SearchHit>& hits, Flag hypothesis, Flag conclusion);

}  // namespace gradedring
