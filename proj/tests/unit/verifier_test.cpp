#include <gtest/gtest.h>

#include "gradedring/document.hpp"
#include "gradedring/error.hpp"
#include "gradedring/report.hpp"
#include "gradedring/transport.hpp"
#include "gradedring/verifier.hpp"
#include "oracles.hpp"

using namespace gradedring;

namespace {

GradedRing cyclic(std::int64_t n) { return trivially_graded(build_ring(Cyclic{n})); }

const GradedRing& corpus_ring(std::string_view name) {
  for (const auto& e : default_corpus().entries)
    if (e.name == name) return e.ring;
  throw std::runtime_error("no corpus entry " + std::string(name));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::MalformedSpec;
}

bool has_note(const VerificationReport& r, std::string_view needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Verifier, StatementTable) {
  EXPECT_GE(statements().size(), 20u);
  ASSERT_NE(find_statement("THM_2_2"), nullptr);
  EXPECT_EQ(find_statement("COR_2_7")->shape, Shape::Range);
  EXPECT_EQ(find_statement("COR_2_8")->shape, Shape::Pair);
  EXPECT_EQ(find_statement("THM_9_9"), nullptr);
}

TEST(Verifier, Errors) {
  EXPECT_EQ(kind_of([] { verify("THM_9_9", cyclic(4)); }), ErrorKind::UnknownStatement);
  EXPECT_EQ(kind_of([] { verify("THM_2_2", IntRange{2, 10}); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { verify("COR_2_7", cyclic(4)); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(kind_of([] { verify("COR_2_7", IntRange{1, 10}); }), ErrorKind::ShapeMismatch);
}

TEST(Verifier, TheoremOnCyclicNine) {
  const auto r = verify("THM_2_2", cyclic(9));
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(r.counter("proper_graded_ideals"), 2u);
  EXPECT_EQ(r.target, "Cyclic(9)");
}

TEST(Verifier, ExistenceNoteOnCyclicSix) {
  const auto r = verify("THM_2_6", cyclic(6));
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_TRUE(has_note(r, "no strongly ideal exists"));
  EXPECT_TRUE(has_note(r, "not graded local"));
}

TEST(Verifier, CyclicRange) {
  const auto r = verify("COR_2_7", IntRange{2, 64});
  EXPECT_EQ(r.outcome, Outcome::Pass);
  std::uint64_t powers = 0;
  for (std::int64_t n = 2; n <= 64; ++n) powers += oracle::is_prime_power(n) ? 1 : 0;
  ASSERT_NE(r.branch("n = p^m and a strongly ideal exists"), nullptr);
  EXPECT_EQ(r.branch("n = p^m and a strongly ideal exists")->instances, powers);
  EXPECT_EQ(r.branch("n not a prime power and none exists")->instances, 63 - powers);
  EXPECT_TRUE(has_note(r, "n=12 strongly_exists=no prime_power=no"));
  EXPECT_TRUE(has_note(r, "n=27 strongly_exists=yes prime_power=yes"));
}

TEST(Verifier, ProductPair) {
  const auto r = verify("COR_2_8", RingPair{cyclic(4), cyclic(9)});
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(r.branch("no strongly ideal in the product")->instances, 1u);
}

TEST(Verifier, PolynomialReductionIsVacuous) {
  const auto r = verify("PROP_3_4", cyclic(9));
  EXPECT_EQ(r.outcome, Outcome::Vacuous);
  EXPECT_TRUE(has_note(r, "asserted, not verified"));
  EXPECT_TRUE(has_note(r, "Grad({0}) = {0,3,6} is a graded prime"));
}

TEST(Verifier, ColonStatementHasNoInstances) {
  const auto r = verify("PROP_2_19", cyclic(9));
  EXPECT_EQ(r.outcome, Outcome::Vacuous);
  EXPECT_TRUE(r.witnesses.empty());
  for (const auto& b : r.branches) EXPECT_FALSE(b.finitely_realizable);
}

TEST(Verifier, IncomparableIntersectionsNeedTheTableRing) {
  const auto r = verify("PROP_2_10", corpus_ring("f2-xy-square-zero-z"));
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_GT(r.branch("P and K incomparable")->instances, 0u);
}

TEST(Verifier, CorpusRunHasNoFailures) {
  const auto reports = run_corpus("all", default_corpus());
  std::set<std::string> ids;
  for (const auto& r : reports) {
    EXPECT_NE(r.outcome, Outcome::Fail) << r.statement_id << " on " << r.target;
    ids.insert(r.statement_id);
  }
  EXPECT_EQ(ids.size(), statements().size());
  std::vector<VerificationReport> thm;
  for (const auto& r : reports)
    if (r.statement_id == "THM_2_2") thm.push_back(r);
  EXPECT_EQ(thm.size(), default_corpus().entries.size());
  const auto total = aggregate("THM_2_2", thm);
  EXPECT_EQ(total.outcome, Outcome::Pass);
  for (const auto& b : total.branches)
    if (b.finitely_realizable) EXPECT_GT(b.instances, 0u) << b.name;
}

TEST(Verifier, Deterministic) {
  const auto a = run_corpus("PROP_3_3", default_corpus());
  const auto b = run_corpus("PROP_3_3", default_corpus());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(verification_json(a[k]), verification_json(b[k]));
}

TEST(Verifier, AggregateRules) {
  VerificationReport pass{"X", "a", Outcome::Pass, {{"n", 2}}, {{"b", 1, true}}, {}, {}};
  VerificationReport vac{"X", "b", Outcome::Vacuous, {{"n", 3}}, {{"b", 0, true}}, {}, {}};
  auto total = aggregate("X", {pass, vac});
  EXPECT_EQ(total.outcome, Outcome::Pass);
  EXPECT_EQ(total.counter("n"), 5u);
  EXPECT_EQ(total.branch("b")->instances, 1u);
  EXPECT_EQ(aggregate("X", {vac}).outcome, Outcome::Vacuous);
  VerificationReport fail = pass;
  fail.outcome = Outcome::Fail;
  EXPECT_EQ(aggregate("X", {pass, fail}).outcome, Outcome::Fail);
}

TEST(Verifier, SearchFindsKnownSeparations) {
  const auto hits = search_counterexample(default_corpus(), Flag::GradedPrime, Flag::GradedStrongly1AbsPrimary);
  bool found = false;
  for (const auto& h : hits) {
    // Every hit re-checks under the predicates.
    EXPECT_TRUE(is_graded_prime(*h.ring, h.ideal));
    EXPECT_FALSE(is_graded_strongly_1abs_primary(*h.ring, h.ideal));
    if (h.entry == "cyclic-6" && h.ideal.format() == "{0,3}") {
      found = true;
      EXPECT_EQ(h.witness, (std::vector<Elem>{2, 2, 3}));
    }
  }
  EXPECT_TRUE(found);

  const auto none = search_counterexample(default_corpus(), Flag::GradedStrongly1AbsPrimary, Flag::Graded1AbsPrimary);
  EXPECT_TRUE(none.empty());
}
