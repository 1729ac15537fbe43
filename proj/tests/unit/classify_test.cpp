#include <gtest/gtest.h>

#include "gradedring/classify.hpp"
#include "gradedring/document.hpp"
#include "gradedring/error.hpp"
#include "oracles.hpp"

using namespace gradedring;

namespace {

std::vector<Elem> elems(const IdealSet& i) { return {i.elements().begin(), i.elements().end()}; }

GradedRing cyclic(std::int64_t n) { return trivially_graded(build_ring(Cyclic{n})); }

IdealSet multiples(const GradedRing& gr, Elem a) { return principal_ideal(gr.ring(), a); }

const GradedRing& corpus_ring(std::string_view name) {
  for (const auto& e : default_corpus().entries)
    if (e.name == name) return e.ring;
  throw std::runtime_error("no corpus entry " + std::string(name));
}

}  // namespace

TEST(Classify, PrimeWitnesses) {
  const auto c6 = cyclic(6);
  EXPECT_TRUE(is_graded_prime(c6, multiples(c6, 3)));
  const auto c12 = cyclic(12);
  const auto r = is_graded_prime(c12, multiples(c12, 4));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::vector<Elem>{2, 2}));
  try {
    is_graded_prime(c12, IdealSet::whole(c12.ring()));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotProper);
  }
}

TEST(Classify, PrimaryWitnesses) {
  const auto c12 = cyclic(12);
  EXPECT_TRUE(is_graded_primary(c12, multiples(c12, 4)));
  const auto r = is_graded_primary(c12, multiples(c12, 6));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, (std::vector<Elem>{2, 3}));
}

TEST(Classify, OneAndTwoAbsorbingSeparate) {
  const auto c36 = cyclic(36);
  const auto p = multiples(c36, 12);
  const auto one = is_graded_1abs_primary(c36, p);
  EXPECT_FALSE(one.holds);
  EXPECT_EQ(one.witness, (std::vector<Elem>{2, 2, 3}));
  EXPECT_TRUE(is_graded_2abs_primary(c36, p));
  const auto report = classify_ideal(c36, p);
  EXPECT_TRUE(report(Flag::Graded2AbsPrimary));
  EXPECT_FALSE(report(Flag::Graded1AbsPrimary));
}

TEST(Classify, StronglyWitnesses) {
  const auto c9 = cyclic(9);
  EXPECT_TRUE(is_graded_strongly_1abs_primary(c9, multiples(c9, 3)));
  EXPECT_TRUE(strongly_1abs_ideal_form(c9, multiples(c9, 3)));

  const auto c6 = cyclic(6);
  const auto p = multiples(c6, 3);
  const auto s = is_graded_strongly_1abs_primary(c6, p);
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(s.witness, (std::vector<Elem>{2, 2, 3}));

  const auto form = strongly_1abs_ideal_form(c6, p);
  EXPECT_FALSE(form.holds);
  ASSERT_EQ(form.witness.size(), 3u);
  EXPECT_EQ(form.witness[0], multiples(c6, 2));
  EXPECT_EQ(form.witness[1], multiples(c6, 2));
  EXPECT_EQ(form.witness[2], multiples(c6, 3));

  const auto report = classify_ideal(c6, p);
  EXPECT_TRUE(report(Flag::GradedPrime));
  EXPECT_TRUE(report(Flag::GradedPrimary));
  EXPECT_TRUE(report(Flag::Graded1AbsPrimary));
  EXPECT_FALSE(report(Flag::GradedStrongly1AbsPrimary));
  EXPECT_EQ(report.witnesses.at(Flag::GradedStrongly1AbsPrimary), (std::vector<Elem>{2, 2, 3}));
}

TEST(Classify, Maximality) {
  const auto c9 = cyclic(9);
  EXPECT_TRUE(is_graded_maximal(c9, multiples(c9, 3)));
  const auto c12 = cyclic(12);
  EXPECT_FALSE(is_graded_maximal(c12, multiples(c12, 4)));
  const auto& field = corpus_ring("f3-u2-minus-1-z2");
  EXPECT_TRUE(is_graded_maximal(field, IdealSet::zero(field.ring())));
}

TEST(Classify, EveryFlagOfCyclicNineHolds) {
  const auto c9 = cyclic(9);
  const auto report = classify_ideal(c9, multiples(c9, 3));
  for (auto f : {Flag::GradedPrime, Flag::GradedPrimary, Flag::Graded1AbsPrimary, Flag::Graded2AbsPrimary,
                 Flag::GradedStrongly1AbsPrimary})
    EXPECT_TRUE(report(f)) << to_string(f);
  EXPECT_TRUE(report.witnesses.empty());
}

TEST(Classify, NotGradedIsRejected) {
  const auto& g4 = corpus_ring("gauss-4-z2");
  try {
    classify_ideal(g4, principal_ideal(g4.ring(), g4.ring().parse("1+i")));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotGraded);
  }
}

TEST(Classify, LocalStructure) {
  const auto c9 = local_structure(cyclic(9));
  EXPECT_TRUE(c9.is_graded_local);
  ASSERT_TRUE(c9.the_maximal.has_value());
  EXPECT_EQ(elems(*c9.the_maximal), (std::vector<Elem>{0, 3, 6}));

  const auto c6 = local_structure(cyclic(6));
  EXPECT_FALSE(c6.is_graded_local);
  EXPECT_EQ(c6.graded_maximal_ideals.size(), 2u);

  const auto& g4 = corpus_ring("gauss-4-z2");
  const auto g4s = local_structure(g4);
  ASSERT_TRUE(g4s.is_graded_local);
  EXPECT_EQ(*g4s.the_maximal, principal_ideal(g4.ring(), g4.ring().parse("2")));
}

TEST(Classify, RingPredicates) {
  const auto& field = corpus_ring("f3-u2-minus-1-z2");
  EXPECT_TRUE(ring_predicates(field).graded_field);
  // 1+u is a nonzero nonunit, so the ring itself is not a field.
  EXPECT_FALSE(field.ring().is_unit(field.ring().parse("1+u")));

  EXPECT_TRUE(ring_predicates(cyclic(9)).every_homogeneous_nilpotent_or_unit);
  const auto c6 = ring_predicates(cyclic(6));
  EXPECT_FALSE(c6.graded_field);
  EXPECT_FALSE(c6.graded_domain);
  EXPECT_FALSE(c6.every_homogeneous_nilpotent_or_unit);
}

TEST(Classify, FlagNames) {
  for (auto f : kAllFlags) EXPECT_EQ(parse_flag(to_string(f)), f);
  EXPECT_EQ(parse_flag("strongly"), Flag::GradedStrongly1AbsPrimary);
  EXPECT_EQ(parse_flag("1abs"), Flag::Graded1AbsPrimary);
  EXPECT_FALSE(parse_flag("semiprime").has_value());
}

TEST(ClassifyProperty, PredicatesMatchOraclesOnCorpus) {
  for (const auto& entry : default_corpus().entries) {
    const auto& gr = entry.ring;
    SCOPED_TRACE(entry.name);
    const auto lattice = enumerate_graded_ideals(gr);
    for (const auto& p : lattice) {
      if (!p.is_proper()) continue;
      SCOPED_TRACE(p.format());
      const auto e = elems(p);
      const auto report = classify_ideal(gr, p);
      EXPECT_EQ(report(Flag::GradedPrime), oracle::prime(gr, e));
      EXPECT_EQ(report(Flag::GradedPrimary), oracle::primary(gr, e));
      EXPECT_EQ(report(Flag::Graded1AbsPrimary), oracle::one_absorbing(gr, e));
      EXPECT_EQ(report(Flag::Graded2AbsPrimary), oracle::two_absorbing(gr, e));
      EXPECT_EQ(report(Flag::GradedStrongly1AbsPrimary), oracle::strongly(gr, e));

      bool maximal = true;
      for (const auto& q : lattice)
        if (q.is_proper() && p.subset_of(q) && !(p == q)) maximal = false;
      EXPECT_EQ(report(Flag::GradedMaximal), maximal);

      // Implication chain.
      if (report(Flag::GradedStrongly1AbsPrimary)) EXPECT_TRUE(report(Flag::Graded1AbsPrimary));
      if (report(Flag::Graded1AbsPrimary)) EXPECT_TRUE(report(Flag::Graded2AbsPrimary));
      if (report(Flag::GradedPrimary)) EXPECT_TRUE(report(Flag::Graded1AbsPrimary));
      if (report(Flag::GradedPrime)) EXPECT_TRUE(report(Flag::GradedPrimary));
      if (report(Flag::GradedMaximal)) EXPECT_TRUE(report(Flag::GradedPrime));
      // Element and ideal forms agree.
      EXPECT_EQ(strongly_1abs_ideal_form(gr, p).holds, report(Flag::GradedStrongly1AbsPrimary));
    }
  }
}

TEST(ClassifyProperty, WitnessesActuallyViolate) {
  for (const auto& entry : default_corpus().entries) {
    const auto& gr = entry.ring;
    const auto& r = gr.ring();
    SCOPED_TRACE(entry.name);
    const auto nil = graded_nilradical(gr);
    for (const auto& p : enumerate_graded_ideals(gr)) {
      if (!p.is_proper()) continue;
      const auto report = classify_ideal(gr, p);
      for (const auto& [flag, w] : report.witnesses) {
        SCOPED_TRACE(std::string(to_string(flag)) + " " + p.format());
        for (auto x : w) EXPECT_TRUE(gr.is_homogeneous(x));
        switch (flag) {
          case Flag::GradedPrime:
            ASSERT_EQ(w.size(), 2u);
            EXPECT_TRUE(p.contains(r.mul(w[0], w[1])) && !p.contains(w[0]) && !p.contains(w[1]));
            break;
          case Flag::GradedPrimary:
            ASSERT_EQ(w.size(), 2u);
            EXPECT_TRUE(p.contains(r.mul(w[0], w[1])) && !p.contains(w[0]) && !report.radical.contains(w[1]));
            break;
          case Flag::Graded1AbsPrimary:
          case Flag::GradedStrongly1AbsPrimary: {
            ASSERT_EQ(w.size(), 3u);
            const auto xy = r.mul(w[0], w[1]);
            const auto& rad = flag == Flag::Graded1AbsPrimary ? report.radical : nil;
            for (auto x : w) EXPECT_FALSE(r.is_unit(x));
            EXPECT_TRUE(p.contains(r.mul(xy, w[2])) && !p.contains(xy) && !rad.contains(w[2]));
            break;
          }
          case Flag::Graded2AbsPrimary:
            ASSERT_EQ(w.size(), 3u);
            EXPECT_TRUE(p.contains(r.mul(r.mul(w[0], w[1]), w[2])));
            EXPECT_FALSE(p.contains(r.mul(w[0], w[1])));
            EXPECT_FALSE(report.radical.contains(r.mul(w[0], w[2])));
            EXPECT_FALSE(report.radical.contains(r.mul(w[1], w[2])));
            break;
          case Flag::GradedMaximal:
            ASSERT_EQ(w.size(), 1u);
            EXPECT_FALSE(p.contains(w[0]));
            break;
        }
      }
    }
  }
}
