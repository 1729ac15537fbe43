#include "cli.hpp"

#include <charconv>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "gradedring/document.hpp"
#include "gradedring/error.hpp"
#include "gradedring/report.hpp"
#include "gradedring/verifier.hpp"

namespace gradedring::cli {

namespace {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  std::string spec;
  std::string ideal;
  std::string statement;
  std::string corpus;
  std::string range;
  std::string hypothesis;
  std::string conclusion;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t set_max = 8;
  bool dump = false;
};

void print_json(std::ostream& out, const ReportJson& j) { out << j.dump(2) << "\n"; }

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorKind::ParseError, "range must look like a..b, got '" + text + "'");
    return v;
  };
  if (dots == std::string::npos) throw Error(ErrorKind::ParseError, "range must look like a..b, got '" + text + "'");
  const std::string_view view(text);
  return IntRange{number(view.substr(0, dots)), number(view.substr(dots + 2))};
}

Corpus load_corpus(const Options& o) {
  if (!o.spec.empty()) {
    auto doc = read_ring_document(o.spec);
    Corpus corpus;
    corpus.entries.push_back(CorpusEntry{o.spec, std::move(doc.ring), std::move(doc.factors)});
    return corpus;
  }
  return o.corpus.empty() ? default_corpus() : read_corpus(o.corpus);
}

int ring_describe(const Options& o, std::ostream& out) {
  const auto doc = read_ring_document(o.spec);
  if (o.format == Format::Json) {
    auto j = ring_summary_json(doc.ring);
    auto named = ReportJson::object();
    for (const auto& [name, ideal] : doc.ideals) named[name] = ideal.format();
    j["named_ideals"] = named;
    print_json(out, j);
  } else {
    out << ring_summary_text(doc.ring);
    for (const auto& [name, ideal] : doc.ideals) out << "ideal " << name << ": " << ideal.format() << "\n";
  }
  return kExitOk;
}

int ideal_classify(const Options& o, std::ostream& out) {
  const auto doc = read_ring_document(o.spec);
  const auto& ring = doc.ring.ring();
  IdealSet ideal = IdealSet::zero(ring);
  if (const auto* named = doc.find_ideal(o.ideal))
    ideal = *named;
  else
    ideal = ideal_generated(ring, parse_element_list(ring, o.ideal));
  const auto report = classify_ideal(doc.ring, ideal);
  if (o.format == Format::Json)
    print_json(out, classification_json(doc.ring, report));
  else
    out << classification_text(doc.ring, report);
  return kExitOk;
}

int verify_command(const Options& o, std::ostream& out) {
  const auto corpus = load_corpus(o);
  IntRange range;
  if (!o.range.empty()) range = parse_range(o.range);
  const VerifyOptions options{o.lattice_cap, o.set_max};
  const auto reports = run_corpus(o.statement, corpus, range, options);

  // Reports of one statement are contiguous; keep their first-seen order.
  std::vector<std::string> ids;
  for (const auto& r : reports)
    if (ids.empty() || ids.back() != r.statement_id) ids.push_back(r.statement_id);

  bool failed = false;
  for (const auto& r : reports) failed |= r.outcome == Outcome::Fail;

  if (o.format == Format::Json) {
    ReportJson j;
    auto summary = ReportJson::array();
    for (const auto& id : ids) summary.push_back(verification_json(aggregate(id, reports)));
    auto all = ReportJson::array();
    for (const auto& r : reports) all.push_back(verification_json(r));
    j["summary"] = summary;
    j["reports"] = all;
    j["outcome"] = failed ? "FAIL" : "PASS";
    print_json(out, j);
    return failed ? kExitFail : kExitOk;
  }

  for (const auto& id : ids) {
    std::vector<const VerificationReport*> mine;
    for (const auto& r : reports)
      if (r.statement_id == id) mine.push_back(&r);
    if (mine.size() == 1) {
      out << verification_text(*mine.front());
    } else {
      out << verification_text(aggregate(id, reports));
      for (const auto* r : mine) {
        out << "    " << r->target << ": " << to_string(r->outcome) << "\n";
        for (const auto& w : r->witnesses) out << "      " << w.note << "\n";
      }
    }
    out << "\n";
  }
  out << (failed ? "FAIL" : "OK") << ": " << reports.size() << " reports\n";
  return failed ? kExitFail : kExitOk;
}

Flag need_flag(const std::string& text) {
  if (const auto f = parse_flag(text)) return *f;
  throw Error(ErrorKind::ParseError, "unknown flag '" + text + "'");
}

int search_command(const Options& o, std::ostream& out) {
  const auto hypothesis = need_flag(o.hypothesis);
  const auto conclusion = need_flag(o.conclusion);
  const auto corpus = load_corpus(o);
  const auto hits = search_counterexample(corpus, hypothesis, conclusion, o.lattice_cap);
  if (o.format == Format::Json)
    print_json(out, search_json(hits, hypothesis, conclusion));
  else
    out << search_text(hits, hypothesis, conclusion);
  // Finding separating witnesses is the point of a search, not a failure.
  return kExitOk;
}

int corpus_command(const Options& o, std::ostream& out) {
  if (o.dump) {
    out << default_corpus_json();
    return kExitOk;
  }
  const auto corpus = o.corpus.empty() ? default_corpus() : read_corpus(o.corpus);
  if (o.format == Format::Json) {
    auto list = ReportJson::array();
    for (const auto& e : corpus.entries)
      list.push_back({{"name", e.name},
                      {"ring", e.ring.provenance()},
                      {"group", e.ring.group().describe()},
                      {"carrier_size", e.ring.size()}});
    print_json(out, list);
  } else {
    for (const auto& e : corpus.entries)
      out << e.name << ": " << e.ring.provenance() << " over " << e.ring.group().describe() << ", "
          << e.ring.size() << " elements\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite graded commutative rings: ideal classification and statement verification", "gradedring"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(formats).description(""))
        ->option_text("FORMAT");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--lattice-cap", o.lattice_cap, "Largest graded-ideal lattice to enumerate");
  };

  auto* ring = app.add_subcommand("ring", "Ring inspection");
  ring->require_subcommand(1);
  auto* describe = ring->add_subcommand("describe", "Summarize a graded ring spec");
  describe->add_option("spec", o.spec, "Ring spec file")->required();
  add_format(describe);

  auto* ideal = app.add_subcommand("ideal", "Ideal inspection");
  ideal->require_subcommand(1);
  auto* classify = ideal->add_subcommand("classify", "Classify a graded ideal");
  classify->add_option("spec", o.spec, "Ring spec file")->required();
  classify->add_option("--ideal", o.ideal, "Named ideal from the spec, or comma-separated generators")->required();
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "Verify a statement over a corpus");
  verify->add_option("statement", o.statement, "Statement id, or 'all'")->required();
  verify->add_option("--corpus", o.corpus, "Corpus file (default: built-in corpus)");
  verify->add_option("--spec", o.spec, "Verify on a single ring spec instead of a corpus");
  verify->add_option("--range", o.range, "Integer range a..b for COR_2_7");
  verify->add_option("--max-set", o.set_max, "Largest multiplicative set tried for localizations");
  add_budget(verify);
  add_format(verify);

  auto* search = app.add_subcommand("search", "Find ideals where one flag holds and another fails");
  search->add_option("--hypothesis", o.hypothesis, "Flag assumed to hold")->required();
  search->add_option("--conclusion", o.conclusion, "Flag expected to follow")->required();
  search->add_option("--corpus", o.corpus, "Corpus file (default: built-in corpus)");
  search->add_option("--spec", o.spec, "Search a single ring spec instead of a corpus");
  add_budget(search);
  add_format(search);

  auto* corpus = app.add_subcommand("corpus", "List the corpus");
  corpus->add_option("--corpus", o.corpus, "Corpus file (default: built-in corpus)");
  corpus->add_flag("--dump", o.dump, "Print the built-in corpus as JSON");
  add_format(corpus);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (describe->parsed()) return ring_describe(o, out);
    if (classify->parsed()) return ideal_classify(o, out);
    if (verify->parsed()) return verify_command(o, out);
    if (search->parsed()) return search_command(o, out);
    if (corpus->parsed()) return corpus_command(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gradedring::cli
