#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "latticealg/gibbs.hpp"
#include "latticealg/quasilocal.hpp"
#include "support.hpp"

using namespace latticealg;
using testing::fixture_a;
using testing::family_a;

namespace {

MorphismFamily uniform_family() {
  const Universe u = fixture_a();
  return MorphismFamily(u, family_a(), ReferenceMeasure::uniform(u));
}

MorphismFamily gibbs_family(const Rational& beta) {
  const Universe u = fixture_a();
  const Hamiltonian h = Hamiltonian::lattice_gas(u, Rational(1));
  return MorphismFamily(u, family_a(), gibbs_reference(u, h, beta));
}

LocalObservable site1_indicator(const Universe& u) {
  return LocalObservable::indicator(u, Region({0}),
                                    make_configuration(u, Region({1}), {1}));
}

/// A random element with summands on random family regions.
QuasilocalElement random_element(const Universe& u, const RegionFamily& family,
                                 testing::Rng& rng, int summands) {
  std::vector<Summand> parts;
  for (int k = 0; k < summands; ++k) {
    const Region& tag =
        family.regions()[rng.integer(0, static_cast<int>(family.regions().size()) - 1)];
    parts.push_back(Summand{
        tag, LocalObservable(u, tag,
                             rng.signed_vector(configuration_count(u, u.outside(tag)), 3))});
  }
  return QuasilocalElement(std::move(parts));
}

/// Rewrites one summand (s, f) to (t, lift(f, t)) for a random t >= s;
/// an identity move on the quotient.
QuasilocalElement random_rewrite(const QuasilocalElement& element, const MorphismFamily& fam,
                                 testing::Rng& rng) {
  if (element.summands().empty()) return element;
  std::vector<Summand> parts = element.summands();
  const int which = rng.integer(0, static_cast<int>(parts.size()) - 1);
  std::vector<Region> superiors;
  for (const Region& candidate : fam.family().regions()) {
    if (parts[which].tag.subset_of(candidate)) superiors.push_back(candidate);
  }
  const Region target = superiors[rng.integer(0, static_cast<int>(superiors.size()) - 1)];
  parts[which] = Summand{target, lift(parts[which].observable, target, fam)};
  return QuasilocalElement(std::move(parts));
}

}  // namespace

TEST_CASE("normal forms") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();
  const Region top = fam.family().top();

  // A single summand at the top is its own normal form.
  const LocalObservable f(u, top, {Scalar(Rational(2, 3)), Scalar(-1)});
  CHECK(normal_form(QuasilocalElement::single(top, f), fam) == f);

  // The annulus average of the site-1 indicator is the constant 1/2.
  const QuasilocalElement lifted =
      QuasilocalElement::single(Region({0}), site1_indicator(u));
  const LocalObservable nf = normal_form(lifted, fam);
  for (const Scalar& v : nf.table()) CHECK(v == Scalar(Rational(1, 2)));

  // A defining pair (s, f) - (t, lift f) collapses to zero.
  const QuasilocalElement pair_zero =
      lifted + (-QuasilocalElement::single(
                   Region({0, 1}), lift(site1_indicator(u), Region({0, 1}), fam)));
  CHECK(normal_form(pair_zero, fam) == LocalObservable::zero(u, top));

  // The empty sum is the zero element.
  CHECK(normal_form(QuasilocalElement(), fam) == LocalObservable::zero(u, top));

  // Tags outside the family are rejected.
  CHECK_THROWS_AS(
      normal_form(QuasilocalElement::single(Region({1}),
                                            LocalObservable::unit(u, Region({1}))),
                  fam),
      std::invalid_argument);
}

TEST_CASE("the order unit is tag independent") {
  for (const MorphismFamily& fam : {uniform_family(), gibbs_family(Rational(1))}) {
    const Universe& u = fam.universe();
    const LocalObservable e = order_unit(fam);
    for (const Scalar& v : e.table()) CHECK(v == Scalar(1));
    for (const Region& tag : fam.family().regions()) {
      CHECK(normal_form(QuasilocalElement::single(tag, LocalObservable::unit(u, tag)),
                        fam) == e);
    }
  }
}

TEST_CASE("order unit norm") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();
  const Region top = fam.family().top();

  CHECK(order_unit_norm(QuasilocalElement::single(top, order_unit(fam)), fam) == Scalar(1));

  // Cancellation: (empty, f) + (empty, -f) has norm zero.
  const Region empty({});
  const LocalObservable f(u, empty, testing::Rng(79).signed_vector(16, 2));
  const QuasilocalElement cancel =
      QuasilocalElement::single(empty, f) + (-QuasilocalElement::single(empty, f));
  CHECK(order_unit_norm(cancel, fam) == Scalar(0));

  // The lifted indicator has norm 1/2, below the representative's sup norm 1.
  const QuasilocalElement lifted =
      QuasilocalElement::single(Region({0}), site1_indicator(u));
  CHECK(order_unit_norm(lifted, fam) == Scalar(Rational(1, 2)));
  CHECK(order_unit_norm(lifted, fam) <= sup_norm(site1_indicator(u)));
}

TEST_CASE("norm bounds and the order-unit inequality") {
  testing::Rng rng(83);
  const MorphismFamily fam = gibbs_family(Rational(1));
  const Universe& u = fam.universe();
  for (int trial = 0; trial < 25; ++trial) {
    const QuasilocalElement q = random_element(u, fam.family(), rng, rng.integer(1, 3));

    // p_E is bounded by the l1 norm of any representative.
    Scalar l1(0);
    for (const Summand& summand : q.summands()) l1 += sup_norm(summand.observable);
    const Scalar p = order_unit_norm(q, fam);
    CHECK(p <= l1);

    // -p e <= [q] <= p e pointwise on the normal form.
    const LocalObservable nf = normal_form(q, fam);
    for (const Scalar& v : nf.table()) {
      CHECK(v <= p);
      CHECK(-p <= v);
    }

    // p_E vanishes only on the zero class.
    CHECK((p == Scalar(0)) == (nf == LocalObservable::zero(u, fam.family().top())));
  }
}

TEST_CASE("pairing against threads") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();
  testing::Rng rng(89);

  // Pairing with the unit is 1 for any thread and any tag.
  const LocalState top_state(u, u.interior(), rng.probability_vector(2));
  const Thread thread = thread_from_top(top_state, fam);
  for (const Region& tag : fam.family().regions()) {
    CHECK(pair(thread, QuasilocalElement::single(
                           tag, LocalObservable::unit(u, tag))) == Scalar(1));
  }

  // The uniform thread values the lifted indicator at 1/2.
  const Thread uniform_thread = thread_from_top(LocalState::uniform(u, u.interior()), fam);
  CHECK(pair(uniform_thread,
             QuasilocalElement::single(Region({0}), site1_indicator(u))) ==
        Scalar(Rational(1, 2)));

  // Local expectations factor through the quotient: pair(th, (t, f)) equals
  // the component expectation, for 100 random pairs.
  for (int trial = 0; trial < 100; ++trial) {
    const LocalState mu(u, u.interior(), rng.probability_vector(2));
    const Thread th = thread_from_top(mu, fam);
    const Region& tag =
        fam.family().regions()[rng.integer(0, static_cast<int>(fam.family().regions().size()) - 1)];
    const LocalObservable f(u, tag,
                            rng.signed_vector(configuration_count(u, u.outside(tag)), 3));
    CHECK(pair(th, QuasilocalElement::single(tag, f)) == th.component(tag).pair(f));
    CHECK(pair(th, QuasilocalElement::single(tag, f)) ==
          th.component(fam.family().top()).pair(normal_form(QuasilocalElement::single(tag, f), fam)));
  }
}

TEST_CASE("representation independence under rewrites") {
  testing::Rng rng(97);
  for (const MorphismFamily& fam : {uniform_family(), gibbs_family(Rational(1, 2))}) {
    const Universe& u = fam.universe();
    const LocalState top_state(u, u.interior(), rng.probability_vector(2));
    const Thread thread = thread_from_top(top_state, fam);
    for (int trial = 0; trial < 10; ++trial) {
      const QuasilocalElement q = random_element(u, fam.family(), rng, 2);
      const Scalar paired = pair(thread, q);
      const Scalar norm = order_unit_norm(q, fam);
      QuasilocalElement rewritten = q;
      for (int step = 0; step < 10; ++step) {
        rewritten = random_rewrite(rewritten, fam, rng);
        CHECK(equivalent(rewritten, q, fam));
        CHECK(pair(thread, rewritten) == paired);
        CHECK(order_unit_norm(rewritten, fam) == norm);
      }
    }
  }
}

TEST_CASE("equivalence") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();

  const LocalObservable f = site1_indicator(u);
  const QuasilocalElement small = QuasilocalElement::single(Region({0}), f);
  const QuasilocalElement lifted =
      QuasilocalElement::single(Region({0, 1}), lift(f, Region({0, 1}), fam));
  CHECK(equivalent(small, lifted, fam));

  const Region empty({});
  const QuasilocalElement a = QuasilocalElement::single(
      empty, LocalObservable::indicator(u, empty, make_configuration(u, Region({1}), {1})));
  const QuasilocalElement b = QuasilocalElement::single(
      empty, LocalObservable::indicator(u, empty, make_configuration(u, Region({2}), {1})));
  CHECK(!equivalent(a, b, fam));

  // Summand order is irrelevant.
  const QuasilocalElement ab = a + b;
  const QuasilocalElement ba = b + a;
  CHECK(equivalent(ab, ba, fam));
}

TEST_CASE("the defining subspace collapses to zero and meets the cone only at zero") {
  testing::Rng rng(101);
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();
  const Region top = fam.family().top();

  for (int trial = 0; trial < 100; ++trial) {
    // A random combination of defining pairs c * ((s, f) - (t, lift f)).
    QuasilocalElement element;
    const int pairs = rng.integer(1, 3);
    std::vector<Summand> parts;
    for (int k = 0; k < pairs; ++k) {
      const auto comparable = fam.family().comparable_pairs();
      const auto& [s, t] = comparable[rng.integer(0, static_cast<int>(comparable.size()) - 1)];
      const Scalar c(rng.rational(3));
      std::vector<Scalar> table = rng.signed_vector(configuration_count(u, u.outside(s)), 2);
      for (Scalar& v : table) v *= c;
      const LocalObservable f(u, s, std::move(table));
      parts.push_back(Summand{s, f});
      std::vector<Scalar> negated;
      for (const Scalar& v : lift(f, t, fam).table()) negated.push_back(-v);
      parts.push_back(Summand{t, lift(f, t, fam).with_table(negated)});
    }
    element = QuasilocalElement(parts);

    // Every generated element normal-forms to zero...
    CHECK(normal_form(element, fam) == LocalObservable::zero(u, top));

    // ...and if its grouped summands are pointwise nonnegative, they vanish.
    std::map<Region, std::vector<Scalar>> grouped;
    for (const Summand& summand : element.summands()) {
      auto [it, inserted] = grouped.emplace(summand.tag, summand.observable.table());
      if (!inserted) {
        for (std::size_t i = 0; i < it->second.size(); ++i) {
          it->second[i] += summand.observable.table()[i];
        }
      }
    }
    bool nonnegative = true;
    bool all_zero = true;
    for (const auto& [tag, table] : grouped) {
      for (const Scalar& v : table) {
        if (v.sign() < 0) nonnegative = false;
        if (!v.is_zero()) all_zero = false;
      }
    }
    if (nonnegative) CHECK(all_zero);
  }
}

TEST_CASE("weight functionals with unit norm and unit value are states") {
  // The finite dual characterization: total variation 1 plus unit pairing 1
  // forces nonnegative weights summing to 1.
  testing::Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Scalar> c = rng.integer(0, 1) ? rng.probability_vector(3)
                                              : rng.signed_vector(3, 2);
    Scalar tv(0);
    Scalar sum(0);
    bool nonneg = true;
    for (const Scalar& v : c) {
      tv += v.abs();
      sum += v;
      if (v.sign() < 0) nonneg = false;
    }
    CHECK(((tv == Scalar(1)) && (sum == Scalar(1))) == (nonneg && sum == Scalar(1)));
  }
}
