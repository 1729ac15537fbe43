#include "gradedring/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gradedring/error.hpp"
#include "gradedring/transport.hpp"

namespace gradedring {

namespace {

constexpr std::string_view kInstances = "instances";

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Per-ring data shared by every statement: the graded-ideal lattice and a
// full classification of each proper graded ideal.
struct RingFacts {
  RingFacts(std::shared_ptr<const GradedRing> ring, const VerifyOptions& options)
      : gr(std::move(ring)),
        lattice(enumerate_graded_ideals(*gr, options.lattice_cap)),
        nil(graded_nilradical(*gr)),
        local(local_structure(*gr, lattice)),
        preds(ring_predicates(*gr)) {
    for (std::size_t k = 0; k < lattice.size(); ++k)
      if (lattice[k].is_proper()) {
        proper.push_back(k);
        reports.push_back(classify_ideal(*gr, lattice[k]));
      }
  }

  std::size_t count() const { return proper.size(); }
  const IdealSet& ideal(std::size_t i) const { return lattice[proper[i]]; }
  const IdealSet& radical(std::size_t i) const { return reports[i].radical; }
  bool flag(std::size_t i, Flag f) const { return reports[i].flags.at(f); }
  bool strongly(std::size_t i) const { return flag(i, Flag::GradedStrongly1AbsPrimary); }

  /// Position in `proper` of an ideal equal to `ideal`, if any.
  std::optional<std::size_t> find(const IdealSet& ideal) const {
    for (std::size_t i = 0; i < proper.size(); ++i)
      if (lattice[proper[i]] == ideal) return i;
    return std::nullopt;
  }

  std::shared_ptr<const GradedRing> gr;
  std::vector<IdealSet> lattice;
  std::vector<std::size_t> proper;
  IdealSet nil;
  LocalStructure local;
  RingPredicates preds;
  std::vector<ClassificationReport> reports;
};

class Run {
 public:
  Run(std::string_view id, std::string target) {
    report_.statement_id = std::string(id);
    report_.target = std::move(target);
  }

  void scanned(std::string_view counter, std::uint64_t n = 1) {
    for (auto& [name, value] : report_.counters)
      if (name == counter) {
        value += n;
        return;
      }
    report_.counters.emplace_back(std::string(counter), n);
  }
  void instance() { scanned(kInstances); }

  /// `why` explains an unrealizable branch in the report notes.
  void declare(std::string_view name, bool realizable = true,
               std::string why = "every graded prime of a finite ring is graded maximal") {
    branch(name, realizable);
    if (!realizable) why_[std::string(name)] = std::move(why);
  }
  void hit(std::string_view name) { ++branch(name, true).instances; }

  void fail(std::shared_ptr<const GradedRing> ring, std::vector<IdealSet> ideals, std::vector<Elem> elements,
            std::string note) {
    report_.witnesses.push_back(Witness{std::move(ring), std::move(ideals), std::move(elements), std::move(note)});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  VerificationReport finish() {
    if (report_.counters.empty() || report_.counters.front().first != kInstances) {
      const auto it = std::find_if(report_.counters.begin(), report_.counters.end(),
                                   [](const auto& c) { return c.first == kInstances; });
      if (it == report_.counters.end()) report_.counters.emplace(report_.counters.begin(), std::string(kInstances), 0);
    }
    if (!report_.witnesses.empty())
      report_.outcome = Outcome::Fail;
    else
      report_.outcome = report_.counter(kInstances) > 0 ? Outcome::Pass : Outcome::Vacuous;
    for (const auto& b : report_.branches)
      if (!b.finitely_realizable && b.vacuous())
        note("branch '" + b.name + "' is VACUOUS: no finite ring can exercise it, since " + why_[b.name]);
    return std::move(report_);
  }

 private:
  Branch& branch(std::string_view name, bool realizable) {
    for (auto& b : report_.branches)
      if (b.name == name) return b;
    report_.branches.push_back(Branch{std::string(name), 0, realizable});
    return report_.branches.back();
  }

  VerificationReport report_;
  std::map<std::string, std::string> why_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Ideal algebra

void check_prop_1(Run& run, const RingFacts& f) {
  const auto& gr = *f.gr;
  run.declare("sum, product and intersection of graded ideals");
  run.declare("principal ideal of a homogeneous element");
  for (std::size_t a = 0; a < f.lattice.size(); ++a)
    for (std::size_t b = a; b < f.lattice.size(); ++b) {
      run.scanned("ideal_pairs");
      run.instance();
      run.hit("sum, product and intersection of graded ideals");
      for (auto op : {IdealOp::Sum, IdealOp::Product, IdealOp::Intersection}) {
        const auto c = combine(f.lattice[a], f.lattice[b], op);
        const auto check = is_graded_ideal(gr, c);
        if (!check)
          run.fail(f.gr, {f.lattice[a], f.lattice[b], c}, {*check.violating}, "combined ideal is not graded");
      }
    }
  for (auto h : gr.homogeneous()) {
    run.scanned("homogeneous_elements");
    run.instance();
    run.hit("principal ideal of a homogeneous element");
    const auto p = principal_ideal(gr.ring(), h);
    const auto check = is_graded_ideal(gr, p);
    if (!check) run.fail(f.gr, {p}, {h, *check.violating}, "Ra is not graded for homogeneous a");
  }
}

void check_grad_graded(Run& run, const RingFacts& f) {
  run.declare("Grad(I) is a graded ideal");
  for (std::size_t i = 0; i < f.count(); ++i) {
    run.scanned("proper_graded_ideals");
    run.instance();
    run.hit("Grad(I) is a graded ideal");
    const auto& rad = f.radical(i);
    if (!is_ideal(f.gr->ring(), rad.elements()) || !is_graded_ideal(*f.gr, rad))
      run.fail(f.gr, {f.ideal(i), rad}, {}, "Grad(I) is not a graded ideal");
  }
}

void check_lemma_2(Run& run, const RingFacts& f) {
  run.declare("(P:K) is graded");
  for (const auto& p : f.lattice)
    for (const auto& k : f.lattice) {
      run.scanned("ideal_pairs");
      run.instance();
      run.hit("(P:K) is graded");
      const auto q = colon(f.gr->ring(), p, k);
      const auto check = is_graded_ideal(*f.gr, q);
      if (!check) run.fail(f.gr, {p, k, q}, {*check.violating}, "(P:K) is not graded");
    }
}

// ---------------------------------------------------------------------------
// Characterizations

void check_thm_2_2(Run& run, const RingFacts& f) {
  const auto* b_forward = "(=>) P strongly 1-absorbing primary";
  const auto* b_one = "(<=) via (1): P 1-absorbing primary and Grad(P) = Grad({0})";
  const auto* b_two = "(<=) via (2): graded local, X = Grad(P), X^2 in P";
  const auto* b_only_one = "only (1) holds";
  const auto* b_only_two = "only (2) holds";
  const auto* b_neither = "neither (1) nor (2): P not strongly";
  run.declare(b_forward);
  run.declare(b_one);
  run.declare(b_two);
  run.declare(b_only_one);
  run.declare(b_only_two, false);
  run.declare(b_neither);
  std::optional<IdealSet> x_squared;
  if (f.local.the_maximal) x_squared = combine(*f.local.the_maximal, *f.local.the_maximal, IdealOp::Product);
  for (std::size_t i = 0; i < f.count(); ++i) {
    run.scanned("proper_graded_ideals");
    run.instance();
    const auto& p = f.ideal(i);
    const bool lhs = f.strongly(i);
    const bool c1 = f.flag(i, Flag::Graded1AbsPrimary) && f.radical(i) == f.nil;
    const bool c2 = f.local.is_graded_local && *f.local.the_maximal == f.radical(i) && x_squared->subset_of(p);
    if (lhs) run.hit(b_forward);
    if (c1) run.hit(b_one);
    if (c2) run.hit(b_two);
    if (c1 && !c2) run.hit(b_only_one);
    if (c2 && !c1) run.hit(b_only_two);
    if (!c1 && !c2) run.hit(b_neither);
    if (lhs != (c1 || c2)) {
      std::vector<Elem> w;
      if (auto it = f.reports[i].witnesses.find(Flag::GradedStrongly1AbsPrimary); it != f.reports[i].witnesses.end())
        w = it->second;
      run.fail(f.gr, {p}, w,
               "strongly=" + yes_no(lhs) + " but (1)=" + yes_no(c1) + ", (2)=" + yes_no(c2));
    }
  }
}

void check_cor_2_4(Run& run, const RingFacts& f) {
  const auto* b_forward = "(=>) graded prime P strongly 1-absorbing primary";
  const auto* b_one = "(<=) via (1): P = Grad({0})";
  const auto* b_two = "(<=) via (2): graded local with graded maximal ideal P";
  const auto* b_neither = "neither (1) nor (2): P not strongly";
  run.declare(b_forward);
  run.declare(b_one);
  run.declare(b_two);
  run.declare("only (1) holds", false);
  run.declare("only (2) holds", false);
  run.declare(b_neither);
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.flag(i, Flag::GradedPrime)) continue;
    run.scanned("graded_primes");
    run.instance();
    const auto& p = f.ideal(i);
    const bool lhs = f.strongly(i);
    const bool c1 = p == f.nil;
    const bool c2 = f.local.is_graded_local && *f.local.the_maximal == p;
    if (lhs) run.hit(b_forward);
    if (c1) run.hit(b_one);
    if (c2) run.hit(b_two);
    if (c1 && !c2) run.hit("only (1) holds");
    if (c2 && !c1) run.hit("only (2) holds");
    if (!c1 && !c2) run.hit(b_neither);
    if (lhs != (c1 || c2))
      run.fail(f.gr, {p}, {}, "strongly=" + yes_no(lhs) + " but (1)=" + yes_no(c1) + ", (2)=" + yes_no(c2));
  }
}

void check_lemma_grad_prime(Run& run, const RingFacts& f) {
  run.declare("Grad(P) = P");
  run.declare("Grad(P) strictly contains P");
  for (std::size_t i = 0; i < f.count(); ++i) {
    run.scanned("proper_graded_ideals");
    if (!f.flag(i, Flag::Graded1AbsPrimary)) continue;
    run.instance();
    const auto& rad = f.radical(i);
    run.hit(rad == f.ideal(i) ? "Grad(P) = P" : "Grad(P) strictly contains P");
    const auto prime = is_graded_prime(*f.gr, rad);
    if (!prime) run.fail(f.gr, {f.ideal(i), rad}, prime.witness, "P is 1-absorbing primary but Grad(P) is not prime");
  }
}

void check_thm_2_6(Run& run, const RingFacts& f) {
  const auto* b_forward = "(=>) a strongly 1-absorbing primary ideal exists";
  const auto* b_one = "(<=) via (1): Grad({0}) graded prime";
  const auto* b_two = "(<=) via (2): graded local";
  const auto* b_neither = "neither (1) nor (2): none exists";
  run.declare(b_forward);
  run.declare(b_one);
  run.declare(b_two);
  run.declare("only (1) holds", false);
  run.declare("only (2) holds", false);
  run.declare(b_neither);
  run.instance();
  run.scanned("proper_graded_ideals", f.count());
  std::optional<std::size_t> example;
  for (std::size_t i = 0; i < f.count() && !example; ++i)
    if (f.strongly(i)) example = i;
  const auto nil_prime = is_graded_prime(*f.gr, f.nil);
  const bool lhs = example.has_value();
  const bool c1 = nil_prime.holds;
  const bool c2 = f.local.is_graded_local;
  if (lhs) run.hit(b_forward);
  if (c1) run.hit(b_one);
  if (c2) run.hit(b_two);
  if (c1 && !c2) run.hit("only (1) holds");
  if (c2 && !c1) run.hit("only (2) holds");
  if (!c1 && !c2) run.hit(b_neither);
  if (!lhs) {
    std::string why = "no strongly ideal exists; Grad({0}) = " + f.nil.format() + " ";
    if (c1) {
      why += "is graded prime";
    } else {
      why += "not prime";
      if (nil_prime.witness.size() == 2)
        why += " (" + f.gr->ring().format(nil_prime.witness[0]) + "*" + f.gr->ring().format(nil_prime.witness[1]) +
               " in Grad({0}))";
    }
    why += c2 ? "; graded local" : "; not graded local";
    run.note(why);
  }
  if (lhs != (c1 || c2)) {
    std::vector<IdealSet> ideals{f.nil};
    if (example) ideals.push_back(f.ideal(*example));
    run.fail(f.gr, std::move(ideals), nil_prime.witness,
             "exists=" + yes_no(lhs) + " but (1)=" + yes_no(c1) + ", (2)=" + yes_no(c2));
  }
}

void check_prop_2_9(Run& run, const RingFacts& f, const VerifyOptions& options) {
  run.declare("both forms hold");
  run.declare("both forms fail");
  for (std::size_t i = 0; i < f.count(); ++i) {
    run.scanned("proper_graded_ideals");
    run.instance();
    const bool element_form = f.strongly(i);
    const auto ideal_form = strongly_1abs_ideal_form(*f.gr, f.ideal(i), options.lattice_cap);
    if (element_form == ideal_form.holds) {
      run.hit(element_form ? "both forms hold" : "both forms fail");
      continue;
    }
    auto ideals = ideal_form.witness;
    ideals.insert(ideals.begin(), f.ideal(i));
    run.fail(f.gr, std::move(ideals), {},
             "element form=" + yes_no(element_form) + ", ideal form=" + yes_no(ideal_form.holds));
  }
}

void check_prop_2_10(Run& run, const RingFacts& f) {
  run.declare("P and K incomparable");
  run.declare("one contains the other");
  for (std::size_t i = 0; i < f.count(); ++i)
    for (std::size_t j = i; j < f.count(); ++j) {
      run.scanned("ideal_pairs");
      if (!f.strongly(i) || !f.strongly(j)) continue;
      run.instance();
      const auto& p = f.ideal(i);
      const auto& k = f.ideal(j);
      run.hit(p.subset_of(k) || k.subset_of(p) ? "one contains the other" : "P and K incomparable");
      const auto meet = combine(p, k, IdealOp::Intersection);
      const auto pos = f.find(meet);
      const auto result = pos ? PredicateResult{f.strongly(*pos), {}} : is_graded_strongly_1abs_primary(*f.gr, meet);
      if (!result.holds) run.fail(f.gr, {p, k, meet}, result.witness, "P and K strongly but their intersection is not");
    }
}

void check_prop_2_11(Run& run, const RingFacts& f) {
  const auto* b_principal = "(1) Ra for nonunit homogeneous a";
  const auto* b_all = "(2) every proper graded ideal";
  run.declare(b_principal);
  run.declare(b_all);
  if (!f.preds.every_homogeneous_nilpotent_or_unit) {
    run.note("hypothesis fails: some homogeneous element is neither nilpotent nor a unit");
    return;
  }
  const auto& ring = f.gr->ring();
  for (auto a : f.gr->homogeneous()) {
    if (ring.is_unit(a)) continue;
    run.scanned("nonunit_homogeneous");
    run.instance();
    run.hit(b_principal);
    const auto ra = principal_ideal(ring, a);
    const auto result = is_graded_strongly_1abs_primary(*f.gr, ra);
    if (!result) run.fail(f.gr, {ra}, result.witness, "Ra is not strongly 1-absorbing primary");
  }
  for (std::size_t i = 0; i < f.count(); ++i) {
    run.scanned("proper_graded_ideals");
    run.instance();
    run.hit(b_all);
    if (!f.strongly(i))
      run.fail(f.gr, {f.ideal(i)}, f.reports[i].witnesses.at(Flag::GradedStrongly1AbsPrimary),
               "proper graded ideal is not strongly 1-absorbing primary");
  }
}

struct PrimeCensus {
  std::vector<std::size_t> primes;
  std::vector<std::size_t> non_maximal;
};

PrimeCensus census(const RingFacts& f) {
  PrimeCensus out;
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.flag(i, Flag::GradedPrime)) continue;
    out.primes.push_back(i);
    if (!f.flag(i, Flag::GradedMaximal)) out.non_maximal.push_back(i);
  }
  return out;
}

void check_prop_2_12(Run& run, const RingFacts& f) {
  const auto* b_forward = "(=>) every graded prime is strongly";
  const auto* b_backward = "(<=) graded local with at most one non-maximal graded prime";
  const auto* b_nonmax = "a non-maximal graded prime exists";
  const auto* b_neither = "neither side holds";
  run.declare(b_forward);
  run.declare(b_backward);
  run.declare(b_nonmax, false);
  run.declare(b_neither);
  run.instance();
  const auto primes = census(f);
  run.scanned("graded_primes", primes.primes.size());
  const bool lhs = std::all_of(primes.primes.begin(), primes.primes.end(), [&](auto i) { return f.strongly(i); });
  const bool rhs = f.local.is_graded_local && primes.non_maximal.size() <= 1;
  if (lhs) run.hit(b_forward);
  if (rhs) run.hit(b_backward);
  if (!primes.non_maximal.empty()) run.hit(b_nonmax);
  if (!lhs && !rhs) run.hit(b_neither);
  if (lhs != rhs) {
    std::vector<IdealSet> ideals;
    for (auto i : primes.primes)
      if (!f.strongly(i)) ideals.push_back(f.ideal(i));
    run.fail(f.gr, std::move(ideals), {}, "every prime strongly=" + yes_no(lhs) + ", right side=" + yes_no(rhs));
  }
}

void check_prop_2_14(Run& run, const RingFacts& f) {
  const auto* b_forward = "(=>) every graded primary is strongly";
  const auto* b_one = "(<=) via (1): every homogeneous element nilpotent or unit";
  const auto* b_two = "(<=) via (2): graded local, one non-maximal prime Grad({0}), X-primaries contain X^2";
  const auto* b_neither = "neither side holds";
  run.declare(b_forward);
  run.declare(b_one);
  run.declare(b_two, false);
  run.declare(b_neither);
  run.instance();
  bool lhs = true;
  std::vector<IdealSet> offenders;
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.flag(i, Flag::GradedPrimary)) continue;
    run.scanned("graded_primaries");
    if (!f.strongly(i)) {
      lhs = false;
      offenders.push_back(f.ideal(i));
    }
  }
  const bool c1 = f.preds.every_homogeneous_nilpotent_or_unit;
  bool c2 = false;
  if (f.local.is_graded_local) {
    const auto& x = *f.local.the_maximal;
    const auto primes = census(f);
    const bool one_nonmax = primes.non_maximal.size() == 1 && f.ideal(primes.non_maximal.front()) == f.nil;
    const auto x2 = combine(x, x, IdealOp::Product);
    bool contain = true;
    for (std::size_t i = 0; i < f.count(); ++i)
      if (f.flag(i, Flag::GradedPrimary) && f.radical(i) == x && !x2.subset_of(f.ideal(i))) contain = false;
    c2 = one_nonmax && contain;
  }
  if (lhs) run.hit(b_forward);
  if (c1) run.hit(b_one);
  if (c2) run.hit(b_two);
  if (!lhs && !c1 && !c2) run.hit(b_neither);
  if (lhs != (c1 || c2))
    run.fail(f.gr, std::move(offenders), {},
             "every primary strongly=" + yes_no(lhs) + " but (1)=" + yes_no(c1) + ", (2)=" + yes_no(c2));
}

void check_prop_2_17(Run& run, const RingFacts& f) {
  const auto* b_forward = "(=>) {0} is the only strongly ideal";
  const auto* b_one = "(<=) via (1): graded field";
  const auto* b_two = "(<=) via (2): graded domain, not graded local";
  const auto* b_neither = "neither side holds";
  run.declare(b_forward);
  run.declare(b_one);
  run.declare(b_two, false);
  run.declare(b_neither);
  run.instance();
  std::vector<IdealSet> strongly;
  for (std::size_t i = 0; i < f.count(); ++i) {
    run.scanned("proper_graded_ideals");
    if (f.strongly(i)) strongly.push_back(f.ideal(i));
  }
  const bool lhs = strongly.size() == 1 && strongly.front().is_zero();
  const bool c1 = f.preds.graded_field;
  const bool c2 = f.preds.graded_domain && !f.local.is_graded_local;
  if (lhs) run.hit(b_forward);
  if (c1) run.hit(b_one);
  if (c2) run.hit(b_two);
  if (!lhs && !c1 && !c2) run.hit(b_neither);
  if (lhs != (c1 || c2))
    run.fail(f.gr, std::move(strongly), {},
             "only {0} strongly=" + yes_no(lhs) + " but (1)=" + yes_no(c1) + ", (2)=" + yes_no(c2));
}

void check_lemma_2_18(Run& run, const RingFacts& f) {
  run.declare("(P:K) = P");
  run.declare("(P:K) strictly contains P");
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.flag(i, Flag::Graded1AbsPrimary)) continue;
    for (std::size_t j = 0; j < f.count(); ++j) {
      run.scanned("ideal_pairs");
      const auto& p = f.ideal(i);
      const auto& k = f.ideal(j);
      if (k.subset_of(p)) continue;
      run.instance();
      const auto q = colon(f.gr->ring(), p, k);
      run.hit(q == p ? "(P:K) = P" : "(P:K) strictly contains P");
      if (!q.is_proper() || !is_graded_ideal(*f.gr, q)) {
        run.fail(f.gr, {p, k, q}, {}, "(P:K) is not a proper graded ideal");
        continue;
      }
      const auto primary = is_graded_primary(*f.gr, q);
      if (!primary) run.fail(f.gr, {p, k, q}, primary.witness, "(P:K) is not graded primary");
    }
  }
}

void check_prop_2_19(Run& run, const RingFacts& f) {
  // A strongly P forces R graded local with Grad(P) = X, and every proper K
  // lies in X, so K not in Grad(P) never happens in a finite ring.
  const std::string why = "a strongly P makes Grad(P) the unique graded maximal ideal, which contains every proper K";
  run.declare("(P:K) = P", false, why);
  run.declare("(P:K) strictly contains P", false, why);
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.strongly(i)) continue;
    for (std::size_t j = 0; j < f.count(); ++j) {
      run.scanned("ideal_pairs");
      const auto& p = f.ideal(i);
      const auto& k = f.ideal(j);
      if (k.subset_of(f.radical(i))) continue;
      run.instance();
      const auto q = colon(f.gr->ring(), p, k);
      run.hit(q == p ? "(P:K) = P" : "(P:K) strictly contains P");
      if (!q.is_proper() || !is_graded_ideal(*f.gr, q)) {
        run.fail(f.gr, {p, k, q}, {}, "(P:K) is not a proper graded ideal");
        continue;
      }
      const auto result = is_graded_strongly_1abs_primary(*f.gr, q);
      if (!result) run.fail(f.gr, {p, k, q}, result.witness, "(P:K) is not strongly 1-absorbing primary");
    }
  }
}

// ---------------------------------------------------------------------------
// Transport

// Strongly 1-absorbing primary check on a transported ideal, which must also
// be a proper graded ideal of its ring.
PredicateResult transported_strongly(const GradedRing& gr, const IdealSet& ideal) {
  if (!ideal.is_proper() || !is_graded_ideal(gr, ideal)) return {false, {}};
  return is_graded_strongly_1abs_primary(gr, ideal);
}

void check_prop_3_1(Run& run, const RingFacts& f) {
  const auto* b_epi = "(1) image under a graded epimorphism";
  const auto* b_mono = "(2) preimage under a graded monomorphism";
  run.declare(b_epi);
  run.declare(b_mono);
  for (std::size_t k = 0; k < f.count(); ++k) {
    const auto q = quotient(*f.gr, f.ideal(k));
    run.scanned("epimorphisms");
    for (std::size_t i = 0; i < f.count(); ++i) {
      if (!f.strongly(i) || !f.ideal(k).subset_of(f.ideal(i))) continue;
      run.instance();
      run.hit(b_epi);
      const auto image = hom_transport(q.projection, f.ideal(i), Direction::Image);
      const auto result = transported_strongly(q.ring, image);
      if (!result)
        run.fail(f.gr, {f.ideal(i), f.ideal(k)}, result.witness, "f(P) is not strongly in " + q.ring.provenance());
    }
  }
  const auto sub = identity_subring(*f.gr);
  run.scanned("monomorphisms");
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.strongly(i)) continue;
    run.instance();
    run.hit(b_mono);
    const auto pre = hom_transport(sub.inclusion, f.ideal(i), Direction::Preimage);
    const auto result = transported_strongly(sub.ring, pre);
    if (!result) run.fail(f.gr, {f.ideal(i)}, result.witness, "f^-1(K) is not strongly in R_e");
  }
}

void check_cor_3_2(Run& run, const RingFacts& f) {
  const auto* b_quot = "(1) P/K in R/K";
  const auto* b_sub = "(2) P meet R_e in the graded subring R_e";
  run.declare(b_quot);
  run.declare(b_sub);
  for (std::size_t k = 0; k < f.count(); ++k) {
    std::optional<Quotient> q;
    for (std::size_t i = 0; i < f.count(); ++i) {
      if (!f.strongly(i) || !f.ideal(k).subset_of(f.ideal(i))) continue;
      if (!q) q = quotient(*f.gr, f.ideal(k));
      run.scanned("ideal_pairs");
      run.instance();
      run.hit(b_quot);
      std::vector<Elem> cosets;
      for (auto x : f.ideal(i).elements()) cosets.push_back(q->projection(x));
      const auto pk = make_ideal_unchecked(q->ring.ring(), std::move(cosets));
      const auto result = transported_strongly(q->ring, pk);
      if (!result) run.fail(f.gr, {f.ideal(i), f.ideal(k)}, result.witness, "P/K is not strongly in R/K");
    }
  }
  const auto sub = identity_subring(*f.gr);
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.strongly(i)) continue;
    run.scanned("strongly_ideals");
    run.instance();
    run.hit(b_sub);
    std::vector<Elem> meet;
    for (Elem x = 0; x < sub.ring.size(); ++x)
      if (f.ideal(i).contains(sub.inclusion(x))) meet.push_back(x);
    const auto pe = make_ideal_unchecked(sub.ring.ring(), std::move(meet));
    const auto result = transported_strongly(sub.ring, pe);
    if (!result) run.fail(f.gr, {f.ideal(i)}, result.witness, "P meet R_e is not strongly in R_e");
  }
}

void check_cor_re(Run& run, const RingFacts& f) {
  run.declare("P_e strongly 1-absorbing primary in R_e");
  const auto sub = identity_subring(*f.gr);
  const auto re = trivially_graded(sub.ring.ring());
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!f.strongly(i)) continue;
    run.scanned("strongly_ideals");
    run.instance();
    run.hit("P_e strongly 1-absorbing primary in R_e");
    std::vector<Elem> meet;
    for (Elem x = 0; x < re.size(); ++x)
      if (f.ideal(i).contains(sub.inclusion(x))) meet.push_back(x);
    const auto pe = make_ideal_unchecked(re.ring(), std::move(meet));
    const auto result = transported_strongly(re, pe);
    if (!result) run.fail(f.gr, {f.ideal(i)}, result.witness, "P_e is not strongly 1-absorbing primary in R_e");
  }
}

void check_prop_3_3(Run& run, const RingFacts& f, const VerifyOptions& options) {
  const auto* b_ext = "S^{-1}P strongly in S^{-1}R";
  const auto* b_nil = "S^{-1}Grad({0}) = Grad({0}) of S^{-1}R";
  const auto* b_units = "S maps to units";
  run.declare(b_ext);
  run.declare(b_nil);
  run.declare(b_units);
  const auto& ring = f.gr->ring();
  for (const auto& s : enumerate_multiplicative_sets(*f.gr, options.multiplicative_set_max)) {
    run.scanned("multiplicative_sets");
    const auto loc = localize(*f.gr, s);
    const auto& target = loc.ring();
    bool units = true;
    for (auto t : s.elements())
      if (!target.ring().is_unit(loc.canonical()(t))) units = false;
    if (units)
      run.hit(b_units);
    else
      run.fail(f.gr, {}, s.elements(), "some element of S does not become a unit in " + target.provenance());
    const auto ext_nil = loc.extend(f.nil);
    if (ext_nil == graded_nilradical(target))
      run.hit(b_nil);
    else
      run.fail(f.gr, {f.nil}, s.elements(), "S^{-1}Grad({0}) differs from Grad({0}) in " + target.provenance());
    for (std::size_t i = 0; i < f.count(); ++i) {
      if (!f.strongly(i)) continue;
      const auto& p = f.ideal(i);
      const auto meets = std::any_of(s.elements().begin(), s.elements().end(), [&](Elem t) { return p.contains(t); });
      if (meets) continue;
      run.instance();
      run.hit(b_ext);
      const auto ext = loc.extend(p);
      const auto result = transported_strongly(target, ext);
      if (!result) run.fail(f.gr, {p}, s.elements(), "S^{-1}P is not strongly in " + target.provenance());
    }
  }
  (void)ring;
}

// ---------------------------------------------------------------------------

using RingCheck = std::function<void(Run&, const RingFacts&, const VerifyOptions&)>;

template <typename F>
RingCheck plain(F fn) {
  return [fn](Run& run, const RingFacts& facts, const VerifyOptions&) { fn(run, facts); };
}

const std::map<std::string_view, RingCheck>& ring_checks() {
  static const std::map<std::string_view, RingCheck> checks = {
      {"PROP_1", plain(check_prop_1)},
      {"GRAD_GRADED", plain(check_grad_graded)},
      {"THM_2_2", plain(check_thm_2_2)},
      {"COR_2_4", plain(check_cor_2_4)},
      {"LEMMA_GRAD_PRIME", plain(check_lemma_grad_prime)},
      {"THM_2_6", plain(check_thm_2_6)},
      {"PROP_2_9", check_prop_2_9},
      {"PROP_2_10", plain(check_prop_2_10)},
      {"PROP_2_11", plain(check_prop_2_11)},
      {"PROP_2_12", plain(check_prop_2_12)},
      {"PROP_2_14", plain(check_prop_2_14)},
      {"PROP_2_17", plain(check_prop_2_17)},
      {"LEMMA_2", plain(check_lemma_2)},
      {"LEMMA_2_18", plain(check_lemma_2_18)},
      {"PROP_2_19", plain(check_prop_2_19)},
      {"PROP_3_1", plain(check_prop_3_1)},
      {"COR_3_2", plain(check_cor_3_2)},
      {"COR_RE", plain(check_cor_re)},
      {"PROP_3_3", check_prop_3_3},
  };
  return checks;
}

VerificationReport verify_cor_2_7(const IntRange& range) {
  if (range.first < 2 || range.last < range.first)
    throw Error(ErrorKind::ShapeMismatch, "COR_2_7 needs a range a..b with 2 <= a <= b");
  Run run("COR_2_7", "Cyclic(n), n = " + std::to_string(range.first) + ".." + std::to_string(range.last));
  run.declare("n = p^m and a strongly ideal exists");
  run.declare("n not a prime power and none exists");
  for (auto n = range.first; n <= range.last; ++n) {
    run.instance();
    auto gr = std::make_shared<const GradedRing>(trivially_graded(build_ring(Cyclic{n})));
    bool exists = false;
    std::optional<IdealSet> example;
    for (const auto& ideal : enumerate_graded_ideals(*gr)) {
      if (!ideal.is_proper()) continue;
      run.scanned("proper_graded_ideals");
      if (is_graded_strongly_1abs_primary(*gr, ideal)) {
        exists = true;
        example = ideal;
        break;
      }
    }
    const bool prime_power = is_prime_power(n);
    run.note("n=" + std::to_string(n) + " strongly_exists=" + yes_no(exists) + " prime_power=" + yes_no(prime_power));
    if (exists && prime_power) run.hit("n = p^m and a strongly ideal exists");
    if (!exists && !prime_power) run.hit("n not a prime power and none exists");
    if (exists != prime_power) {
      std::vector<IdealSet> ideals;
      if (example) ideals.push_back(*example);
      run.fail(gr, std::move(ideals), {}, "n=" + std::to_string(n) + ": exists=" + yes_no(exists));
    }
  }
  return run.finish();
}

VerificationReport verify_cor_2_8(const RingPair& pair, const VerifyOptions& options) {
  auto gr = std::make_shared<const GradedRing>(product(pair.first, pair.second));
  Run run("COR_2_8", gr->provenance());
  run.declare("no strongly ideal in the product");
  run.declare("Grad({0}) of the product is the product of the radicals");
  run.instance();
  const auto lattice = enumerate_graded_ideals(*gr, options.lattice_cap);
  bool none = true;
  for (const auto& ideal : lattice) {
    run.scanned("graded_ideals");
    if (!ideal.is_proper()) continue;
    const auto result = is_graded_strongly_1abs_primary(*gr, ideal);
    if (result) {
      none = false;
      run.fail(gr, {ideal}, {}, "product ring has a strongly 1-absorbing primary ideal");
    }
  }
  if (none) run.hit("no strongly ideal in the product");

  const auto nil_r = graded_nilradical(pair.first);
  const auto nil_s = graded_nilradical(pair.second);
  const auto m = static_cast<Elem>(pair.second.size());
  std::vector<Elem> expected;
  for (auto a : nil_r.elements())
    for (auto b : nil_s.elements()) expected.push_back(a * m + b);
  const auto nil = graded_nilradical(*gr);
  if (make_ideal_unchecked(gr->ring(), expected) == nil)
    run.hit("Grad({0}) of the product is the product of the radicals");
  else
    run.fail(gr, {nil}, {}, "Grad({0}) of the product differs from Grad({0_R}) x Grad({0_S})");
  const auto local = local_structure(*gr, lattice);
  run.note(std::string("graded local: ") + yes_no(local.is_graded_local) +
           "; Grad({0}) graded prime: " + yes_no(is_graded_prime(*gr, nil).holds));
  return run.finish();
}

std::string target_name(const Target& target) {
  if (const auto* gr = std::get_if<GradedRing>(&target)) return gr->provenance();
  if (const auto* pair = std::get_if<RingPair>(&target))
    return "(" + pair->first.provenance() + ", " + pair->second.provenance() + ")";
  const auto& range = std::get<IntRange>(target);
  return std::to_string(range.first) + ".." + std::to_string(range.last);
}

VerificationReport verify_on_facts(std::string_view id, const RingFacts& facts, const VerifyOptions& options) {
  const auto it = ring_checks().find(id);
  if (it == ring_checks().end()) throw Error(ErrorKind::UnknownStatement, std::string(id));
  Run run(id, facts.gr->provenance());
  it->second(run, facts, options);
  return run.finish();
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Vacuous: return "VACUOUS";
  }
  return "UNKNOWN";
}

std::uint64_t VerificationReport::counter(std::string_view name) const {
  for (const auto& [key, value] : counters)
    if (key == name) return value;
  return 0;
}

const Branch* VerificationReport::branch(std::string_view name) const {
  for (const auto& b : branches)
    if (b.name == name) return &b;
  return nullptr;
}

const std::vector<StatementInfo>& statements() {
  static const std::vector<StatementInfo> all = {
      {"PROP_1", Shape::Ring, "I+J, IJ and I meet J are graded for graded I, J; Ra is graded for homogeneous a"},
      {"GRAD_GRADED", Shape::Ring, "Grad(I) is a graded ideal for every proper graded I"},
      {"THM_2_2", Shape::Ring,
       "P strongly iff (1) P 1-absorbing primary and Grad(P) = Grad({0}), or (2) graded local with X = Grad(P), "
       "X^2 in P"},
      {"COR_2_4", Shape::Ring, "graded prime P strongly iff P = Grad({0}) or graded local with maximal P"},
      {"LEMMA_GRAD_PRIME", Shape::Ring, "P 1-absorbing primary implies Grad(P) graded prime"},
      {"THM_2_6", Shape::Ring, "a strongly ideal exists iff Grad({0}) graded prime or R graded local"},
      {"COR_2_7", Shape::Range, "Z/nZ has a strongly ideal iff n = p^m"},
      {"COR_2_8", Shape::Pair, "R x S has no strongly ideal"},
      {"PROP_2_9", Shape::Ring, "P strongly iff IJK in P implies IJ in P or K in Grad({0}) for proper graded I, J, K"},
      {"PROP_2_10", Shape::Ring, "P, K strongly implies P meet K strongly"},
      {"PROP_2_11", Shape::Ring,
       "if every homogeneous element is nilpotent or unit, Ra and every proper graded ideal are strongly"},
      {"PROP_2_12", Shape::Ring,
       "every graded prime strongly iff graded local with at most one non-maximal graded prime"},
      {"PROP_2_14", Shape::Ring,
       "every graded primary strongly iff (1) homogeneous elements nilpotent or unit, or (2) graded local with one "
       "non-maximal prime Grad({0}) and X-primaries containing X^2"},
      {"PROP_2_17", Shape::Ring, "{0} is the only strongly ideal iff graded field or graded domain not graded local"},
      {"LEMMA_2", Shape::Ring, "(P:K) is graded for graded P, K"},
      {"LEMMA_2_18", Shape::Ring, "P 1-absorbing primary, K proper graded not in P: (P:K) graded primary"},
      {"PROP_2_19", Shape::Ring, "P strongly, K proper graded not in Grad(P): (P:K) strongly"},
      {"PROP_3_1", Shape::Ring,
       "images under graded epimorphisms (kernel in P) and preimages under graded monomorphisms stay strongly"},
      {"COR_3_2", Shape::Ring, "P/K strongly in R/K for K in P; P meet S strongly in a graded subring S"},
      {"COR_RE", Shape::Ring, "P_e is strongly 1-absorbing primary in R_e"},
      {"PROP_3_3", Shape::Ring, "S^{-1}P strongly in S^{-1}R when P meets no element of S"},
      {"PROP_3_4", Shape::Ring, "R[X] reduction: Grad({0_R}) graded prime; Grad(P) = Grad({0}) (asserted for R[X])"},
  };
  return all;
}

const StatementInfo* find_statement(std::string_view id) {
  for (const auto& s : statements())
    if (s.id == id) return &s;
  return nullptr;
}

VerificationReport verify(std::string_view statement_id, const Target& target, const VerifyOptions& options) {
  const auto* info = find_statement(statement_id);
  if (!info) throw Error(ErrorKind::UnknownStatement, "unknown statement id '" + std::string(statement_id) + "'");
  auto mismatch = [&](std::string_view wanted) {
    return Error(ErrorKind::ShapeMismatch,
                 std::string(statement_id) + " needs " + std::string(wanted) + ", got " + target_name(target));
  };
  switch (info->shape) {
    case Shape::Range: {
      const auto* range = std::get_if<IntRange>(&target);
      if (!range) throw mismatch("an integer range");
      return verify_cor_2_7(*range);
    }
    case Shape::Pair: {
      const auto* pair = std::get_if<RingPair>(&target);
      if (!pair) throw mismatch("a pair of graded rings");
      return verify_cor_2_8(*pair, options);
    }
    case Shape::Ring: {
      const auto* gr = std::get_if<GradedRing>(&target);
      if (!gr) throw mismatch("a graded ring");
      if (statement_id == "PROP_3_4") return prop_3_4_reduction(*gr);
      const RingFacts facts(std::make_shared<const GradedRing>(*gr), options);
      return verify_on_facts(statement_id, facts, options);
    }
  }
  throw mismatch("a known shape");
}

VerificationReport prop_3_4_reduction(const GradedRing& gr) {
  Run run("PROP_3_4", gr.provenance());
  const auto nil = graded_nilradical(gr);
  const auto nil_prime = is_graded_prime(gr, nil);
  run.note("Grad({0}) = " + nil.format() + (nil_prime ? " is" : " is not") + " a graded prime of R");
  run.note(std::string("asserted, not verified (R[X] is infinite): R[X] has ") + (nil_prime ? "a" : "no") +
           " graded strongly 1-absorbing primary ideal");
  for (const auto& ideal : enumerate_graded_ideals(gr)) {
    if (!ideal.is_proper()) continue;
    run.scanned("proper_graded_ideals");
    const bool same = graded_radical(gr, ideal) == nil;
    if (same) run.scanned("grad_equals_grad_zero");
    run.note("P = " + ideal.format() + ": Grad(P) = Grad({0}) " + yes_no(same) + ", graded primary in R " +
             yes_no(is_graded_primary(gr, ideal).holds) +
             (same ? "; P[X] strongly iff P[X] graded primary (asserted)" : "; P[X] not strongly (asserted)"));
  }
  // Nothing on the polynomial side is instantiated, so the report stays VACUOUS.
  auto report = run.finish();
  report.outcome = Outcome::Vacuous;
  return report;
}

std::vector<VerificationReport> run_corpus(std::string_view statement_id, const Corpus& corpus,
                                           const IntRange& range, const VerifyOptions& options) {
  std::vector<const StatementInfo*> selected;
  if (statement_id == "all") {
    for (const auto& s : statements()) selected.push_back(&s);
  } else {
    const auto* info = find_statement(statement_id);
    if (!info) throw Error(ErrorKind::UnknownStatement, "unknown statement id '" + std::string(statement_id) + "'");
    selected.push_back(info);
  }

  std::vector<std::unique_ptr<RingFacts>> facts(corpus.entries.size());
  auto facts_for = [&](std::size_t k) -> const RingFacts& {
    if (!facts[k]) facts[k] = std::make_unique<RingFacts>(std::make_shared<const GradedRing>(corpus.entries[k].ring), options);
    return *facts[k];
  };

  std::vector<VerificationReport> out;
  for (const auto* info : selected) {
    switch (info->shape) {
      case Shape::Range:
        out.push_back(verify_cor_2_7(range));
        break;
      case Shape::Pair:
        for (const auto& entry : corpus.entries)
          if (entry.factors) out.push_back(verify_cor_2_8(*entry.factors, options));
        break;
      case Shape::Ring:
        for (std::size_t k = 0; k < corpus.entries.size(); ++k) {
          if (info->id == "PROP_3_4")
            out.push_back(prop_3_4_reduction(corpus.entries[k].ring));
          else
            out.push_back(verify_on_facts(info->id, facts_for(k), options));
        }
        break;
    }
  }
  return out;
}

VerificationReport aggregate(std::string_view statement_id, const std::vector<VerificationReport>& reports) {
  VerificationReport out;
  out.statement_id = std::string(statement_id);
  std::size_t targets = 0;
  bool any_pass = false;
  bool any_fail = false;
  for (const auto& r : reports) {
    if (r.statement_id != statement_id) continue;
    ++targets;
    any_pass |= r.outcome == Outcome::Pass;
    any_fail |= r.outcome == Outcome::Fail;
    for (const auto& [name, value] : r.counters) {
      auto it = std::find_if(out.counters.begin(), out.counters.end(), [&](const auto& c) { return c.first == name; });
      if (it == out.counters.end())
        out.counters.emplace_back(name, value);
      else
        it->second += value;
    }
    for (const auto& b : r.branches) {
      auto it = std::find_if(out.branches.begin(), out.branches.end(), [&](const auto& x) { return x.name == b.name; });
      if (it == out.branches.end())
        out.branches.push_back(b);
      else
        it->instances += b.instances;
    }
    out.witnesses.insert(out.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
  }
  out.target = "corpus (" + std::to_string(targets) + " targets)";
  out.outcome = any_fail ? Outcome::Fail : (any_pass ? Outcome::Pass : Outcome::Vacuous);
  for (const auto& b : out.branches)
    if (b.vacuous())
      out.notes.push_back("branch '" + b.name + "' is VACUOUS across the corpus" +
                          (b.finitely_realizable ? "" : " (no finite ring can exercise it)"));
  return out;
}

std::vector<SearchHit> search_counterexample(const Corpus& corpus, Flag hypothesis, Flag conclusion,
                                             std::size_t lattice_cap) {
  std::vector<SearchHit> hits;
  for (const auto& entry : corpus.entries) {
    auto gr = std::make_shared<const GradedRing>(entry.ring);
    for (const auto& ideal : enumerate_graded_ideals(*gr, lattice_cap)) {
      if (!ideal.is_proper()) continue;
      if (!evaluate(hypothesis, *gr, ideal)) continue;
      auto result = evaluate(conclusion, *gr, ideal);
      if (result) continue;
      hits.push_back(SearchHit{entry.name, gr, ideal, std::move(result.witness)});
    }
  }
  return hits;
}

}  // namespace gradedring
