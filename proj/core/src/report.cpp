#include "gradedring/report.hpp"

#include <sstream>

namespace gradedring {

namespace {

std::vector<Elem> to_vector(std::span<const Elem> s) { return {s.begin(), s.end()}; }

std::vector<std::string> element_strings(const FinRing& ring, const std::vector<Elem>& elements) {
  std::vector<std::string> out;
  for (auto x : elements) out.push_back(ring.format(x));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_elements(const FinRing& ring, const std::vector<Elem>& elements) {
  std::string out = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) out += (k ? "," : "") + ring.format(elements[k]);
  return out + "}";
}

std::string format_tuple(const FinRing& ring, const std::vector<Elem>& elements) {
  std::string out = "(";
  for (std::size_t k = 0; k < elements.size(); ++k) out += (k ? "," : "") + ring.format(elements[k]);
  return out + ")";
}

std::string ring_summary_text(const GradedRing& gr) {
  const auto& ring = gr.ring();
  std::ostringstream out;
  out << "ring: " << gr.provenance() << "\n";
  out << "grading group: " << gr.group().describe() << "\n";
  out << "carrier size: " << ring.size() << "\n";
  out << "units: " << format_elements(ring, unit_set(ring)) << "\n";
  out << "nilradical: " << format_elements(ring, nilradical(ring)) << "\n";
  out << "Grad({0}): " << graded_nilradical(gr).format() << "\n";
  out << "components:\n";
  for (const auto& d : gr.support())
    out << "  R_" << gr.group().format(d) << " = " << format_elements(ring, to_vector(gr.component(d))) << "\n";
  out << "homogeneous: " << format_elements(ring, gr.homogeneous()) << "\n";
  const auto lattice = enumerate_graded_ideals(gr);
  out << "graded ideals (" << lattice.size() << "):\n";
  for (const auto& ideal : lattice) out << "  " << ideal.format() << "\n";
  const auto local = local_structure(gr, lattice);
  out << "graded maximal ideals:";
  for (const auto& m : local.graded_maximal_ideals) out << " " << m.format();
  out << "\n";
  out << "graded local: " << yes_no(local.is_graded_local) << "\n";
  const auto preds = ring_predicates(gr);
  out << "graded field: " << yes_no(preds.graded_field) << "\n";
  out << "graded domain: " << yes_no(preds.graded_domain) << "\n";
  out << "every homogeneous element nilpotent or unit: " << yes_no(preds.every_homogeneous_nilpotent_or_unit)
      << "\n";
  return out.str();
}

ReportJson ring_summary_json(const GradedRing& gr) {
  const auto& ring = gr.ring();
  ReportJson j;
  j["ring"] = gr.provenance();
  j["group"] = gr.group().describe();
  j["carrier_size"] = ring.size();
  j["units"] = element_strings(ring, unit_set(ring));
  j["nilradical"] = element_strings(ring, nilradical(ring));
  j["graded_nilradical"] = element_strings(ring, to_vector(graded_nilradical(gr).elements()));
  ReportJson components = ReportJson::object();
  for (const auto& d : gr.support())
    components[gr.group().format(d)] = element_strings(ring, to_vector(gr.component(d)));
  j["components"] = components;
  j["homogeneous"] = element_strings(ring, gr.homogeneous());
  const auto lattice = enumerate_graded_ideals(gr);
  auto ideals = ReportJson::array();
  for (const auto& ideal : lattice) ideals.push_back(element_strings(ring, to_vector(ideal.elements())));
  j["graded_ideals"] = ideals;
  const auto local = local_structure(gr, lattice);
  auto maximal = ReportJson::array();
  for (const auto& m : local.graded_maximal_ideals) maximal.push_back(element_strings(ring, to_vector(m.elements())));
  j["graded_maximal_ideals"] = maximal;
  j["graded_local"] = local.is_graded_local;
  const auto preds = ring_predicates(gr);
  j["graded_field"] = preds.graded_field;
  j["graded_domain"] = preds.graded_domain;
  j["every_homogeneous_nilpotent_or_unit"] = preds.every_homogeneous_nilpotent_or_unit;
  return j;
}

std::string classification_text(const GradedRing& gr, const ClassificationReport& report) {
  const auto& ring = gr.ring();
  std::ostringstream out;
  out << "ring: " << gr.provenance() << "\n";
  out << "ideal: " << report.ideal.format();
  if (!report.ideal.generators().empty())
    out << " generated by " << format_elements(ring, report.ideal.generators());
  out << "\n";
  out << "Grad(I): " << report.radical.format() << "\n";
  for (auto flag : kAllFlags) {
    out << to_string(flag) << ": " << yes_no(report(flag));
    if (const auto it = report.witnesses.find(flag); it != report.witnesses.end())
      out << "  witness " << format_tuple(ring, it->second);
    out << "\n";
  }
  return out.str();
}

ReportJson classification_json(const GradedRing& gr, const ClassificationReport& report) {
  const auto& ring = gr.ring();
  ReportJson j;
  j["ring"] = gr.provenance();
  j["ideal"] = element_strings(ring, to_vector(report.ideal.elements()));
  j["generators"] = element_strings(ring, report.ideal.generators());
  j["radical"] = element_strings(ring, to_vector(report.radical.elements()));
  ReportJson flags = ReportJson::object();
  ReportJson witnesses = ReportJson::object();
  for (auto flag : kAllFlags) {
    flags[std::string(to_string(flag))] = report(flag);
    if (const auto it = report.witnesses.find(flag); it != report.witnesses.end())
      witnesses[std::string(to_string(flag))] = element_strings(ring, it->second);
  }
  j["flags"] = flags;
  j["witnesses"] = witnesses;
  return j;
}

std::string verification_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.statement_id << " on " << report.target << ": " << to_string(report.outcome) << "\n";
  for (const auto& [name, value] : report.counters) out << "  scanned " << name << ": " << value << "\n";
  for (const auto& b : report.branches) {
    out << "  branch " << b.name << ": ";
    if (b.vacuous())
      out << "VACUOUS" << (b.finitely_realizable ? "" : " (not finitely realizable)");
    else
      out << b.instances;
    out << "\n";
  }
  for (const auto& w : report.witnesses) {
    out << "  witness in " << w.ring->provenance() << ": " << w.note;
    for (const auto& ideal : w.ideals) out << " " << ideal.format();
    if (!w.elements.empty()) out << " " << format_tuple(w.ring->ring(), w.elements);
    out << "\n";
  }
  for (const auto& note : report.notes) out << "  note: " << note << "\n";
  return out.str();
}

ReportJson verification_json(const VerificationReport& report) {
  ReportJson j;
  j["statement_id"] = report.statement_id;
  j["target"] = report.target;
  j["outcome"] = std::string(to_string(report.outcome));
  ReportJson counters = ReportJson::object();
  for (const auto& [name, value] : report.counters) counters[name] = value;
  j["counters"] = counters;
  auto branches = ReportJson::array();
  for (const auto& b : report.branches)
    branches.push_back({{"name", b.name},
                        {"instances", b.instances},
                        {"vacuous", b.vacuous()},
                        {"finitely_realizable", b.finitely_realizable}});
  j["branches"] = branches;
  auto witnesses = ReportJson::array();
  for (const auto& w : report.witnesses) {
    auto ideals = ReportJson::array();
    for (const auto& ideal : w.ideals) ideals.push_back(element_strings(ideal.ring(), to_vector(ideal.elements())));
    witnesses.push_back({{"ring", w.ring->provenance()},
                         {"ideals", ideals},
                         {"elements", element_strings(w.ring->ring(), w.elements)},
                         {"note", w.note}});
  }
  j["witnesses"] = witnesses;
  j["notes"] = report.notes;
  return j;
}

std::string search_text(const std::vector<SearchHit>& hits, Flag hypothesis, Flag conclusion) {
  std::ostringstream out;
  out << "claim: " << to_string(hypothesis) << " => " << to_string(conclusion) << "\n";
  out << "counterexamples: " << hits.size() << "\n";
  for (const auto& hit : hits) {
    out << "  " << hit.entry << " (" << hit.ring->provenance() << ") ideal " << hit.ideal.format();
    if (!hit.witness.empty()) out << " witness " << format_tuple(hit.ring->ring(), hit.witness);
    out << "\n";
  }
  return out.str();
}

ReportJson search_json(const std::vector<SearchHit>& hits, Flag hypothesis, Flag conclusion) {
  ReportJson j;
  j["hypothesis"] = std::string(to_string(hypothesis));
  j["conclusion"] = std::string(to_string(conclusion));
  auto list = ReportJson::array();
  for (const auto& hit : hits)
    list.push_back({{"entry", hit.entry},
                    {"ring", hit.ring->provenance()},
                    {"ideal", element_strings(hit.ring->ring(), to_vector(hit.ideal.elements()))},
                    {"witness", element_strings(hit.ring->ring(), hit.witness)}});
  j["counterexamples"] = list;
  return j;
}

}  // namespace gradedring
