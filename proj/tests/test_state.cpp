#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "latticealg/gibbs.hpp"
#include "latticealg/state.hpp"
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

}  // namespace

TEST_CASE("the two state characterizations coincide on random functionals") {
  const Universe u = fixture_a();
  testing::Rng rng(47);
  const Region system({0, 1});
  int states_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Scalar> weights = rng.integer(0, 1)
                                      ? rng.probability_vector(4)
                                      : rng.signed_vector(4, 2);
    const LocalFunctional phi(u, system, weights);
    // is_state throws std::logic_error if positivity/normalization and the
    // norm/unit characterization ever disagree.
    if (is_state(phi)) ++states_seen;
  }
  CHECK(states_seen > 20);

  // <phi, unit> = 1 but total variation 2: a normalized non-state.
  const LocalFunctional skew(u, u.interior(),
                             {Scalar(Rational(3, 2)), Scalar(Rational(-1, 2))});
  CHECK(skew.unit_pairing() == Scalar(1));
  CHECK(skew.norm() == Scalar(2));
  CHECK(!is_state(skew));
}

TEST_CASE("dirac point functionals") {
  const Universe u = fixture_a();
  const Region system({0});
  const Region outside = u.outside(system);
  const Configuration point = make_configuration(u, outside, {1, 1, 0});
  const LocalState delta = LocalState::dirac(u, system, point);

  CHECK(delta.pair(LocalObservable::unit(u, system)) == Scalar(1));
  const LocalObservable f = LocalObservable::indicator(
      u, system, make_configuration(u, Region({1}), {1}));
  CHECK(delta.pair(f) == Scalar(1));
  const LocalObservable g = LocalObservable::indicator(
      u, system, make_configuration(u, Region({1}), {0}));
  CHECK(delta.pair(g) == Scalar(0));

  CHECK_THROWS_AS(LocalState::dirac(u, system, make_configuration(u, Region({1}), {1})),
                  std::invalid_argument);
}

TEST_CASE("dual against spec examples and the oracle") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();

  // Dirac at (x2=1, x3=0) on Outside({0,1}) extends uniformly over x1.
  const LocalState mu = LocalState::dirac(
      u, Region({0, 1}), make_configuration(u, Region({2, 3}), {1, 0}));
  const LocalState nu = dual(mu, Region({0}), fam);
  for (std::uint64_t z = 0; z < 8; ++z) {
    // Outside({0}) = {1,2,3}: weight 1/2 exactly at (x1, 1, 0).
    const bool hit = (z == 2 || z == 3);
    CHECK(nu.weight(z) == (hit ? Scalar(Rational(1, 2)) : Scalar(0)));
  }

  // s = t is the identity.
  CHECK(dual(mu, Region({0, 1}), fam).weights() == mu.weights());

  // Signed functionals stay signed.
  const LocalFunctional skew(u, u.interior(),
                             {Scalar(Rational(3, 2)), Scalar(Rational(-1, 2))});
  const LocalFunctional image = dual_functional(skew, Region({0}), fam);
  bool has_negative = false;
  for (const Scalar& w : image.weights()) {
    if (w.sign() < 0) has_negative = true;
  }
  CHECK(has_negative);

  // Against the brute-force conditional-extension oracle, under Gibbs too.
  testing::Rng rng(53);
  for (const MorphismFamily& family : {uniform_family(), gibbs_family(Rational(2))}) {
    const LocalState top(u, u.interior(), rng.probability_vector(2));
    for (const Region& s : family.family().regions()) {
      const LocalState extended = dual(top, s, family);
      for (std::uint64_t z = 0; z < extended.weights().size(); ++z) {
        CHECK(extended.weight(z) ==
              testing::brute_dual_weight(u, family.reference(), top, s, z));
      }
    }
  }
}

TEST_CASE("duality pairing identity") {
  testing::Rng rng(59);
  for (const MorphismFamily& fam : {uniform_family(), gibbs_family(Rational(1))}) {
    const Universe& u = fam.universe();
    for (const auto& [s, t] : fam.family().comparable_pairs()) {
      const LocalState mu(u, t,
                          rng.probability_vector(configuration_count(u, u.outside(t))));
      const LocalObservable f(
          u, s, rng.signed_vector(configuration_count(u, u.outside(s))));
      CHECK(dual(mu, s, fam).pair(f) == mu.pair(lift(f, t, fam)));
    }
  }
}

TEST_CASE("threads from the top") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();

  // The uniform state is kernel invariant.
  const Thread uniform_thread = thread_from_top(LocalState::uniform(u, u.interior()), fam);
  for (const Region& region : fam.family().regions()) {
    CHECK(uniform_thread.component(region).weights() ==
          LocalState::uniform(u, region).weights());
  }
  CHECK(verify_thread(uniform_thread, fam).ok);

  // Dirac at x3=1: the component at {0,1} is uniform over x2 times the point.
  const Thread point_thread = thread_from_top(
      LocalState::dirac(u, u.interior(), make_configuration(u, Region({3}), {1})), fam);
  const LocalState& mid = point_thread.component(Region({0, 1}));
  CHECK(mid.weight(0) == Scalar(0));
  CHECK(mid.weight(1) == Scalar(0));
  CHECK(mid.weight(2) == Scalar(Rational(1, 2)));
  CHECK(mid.weight(3) == Scalar(Rational(1, 2)));

  // Gibbs top marginal extends to the Gibbs marginals.
  const MorphismFamily gibbs = gibbs_family(Rational(1));
  const LocalState gibbs_top(
      u, u.interior(),
      marginal_weights(u, gibbs.reference().weights(), u.boundary_core()));
  const Thread gibbs_thread = thread_from_top(gibbs_top, gibbs);
  for (const Region& region : gibbs.family().regions()) {
    CHECK(gibbs_thread.component(region).weights() ==
          marginal_weights(u, gibbs.reference().weights(), u.outside(region)));
  }
}

TEST_CASE("thread verdicts and fault injection") {
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();
  testing::Rng rng(61);

  const LocalState top(u, u.interior(), rng.probability_vector(2));
  const Thread good = thread_from_top(top, fam);
  CHECK(verify_thread(good, fam).ok);

  // Replacing any single component must be rejected.
  for (const Region& region : fam.family().regions()) {
    if (region == fam.family().top()) continue;
    auto components = good.components();
    const std::uint64_t size = configuration_count(u, u.outside(region));
    components.erase(region);
    components.emplace(region, LocalState::dirac(u, region,
                                                 Configuration{u.outside(region), 0}));
    const Thread broken(fam.family(), std::move(components));
    const ThreadVerdict verdict = verify_thread(broken, fam);
    CHECK(!verdict.ok);
    CHECK(!verdict.witness.empty());
    (void)size;
  }

  // Gibbs marginals are not a thread under the uniform kernels.
  const MorphismFamily gibbs = gibbs_family(Rational(1));
  const TlIdentification wrong = tl_identify(gibbs.reference().weights(), fam);
  CHECK(!wrong.verdict.ok);
}

TEST_CASE("restriction undoes extension") {
  testing::Rng rng(67);
  for (const MorphismFamily& fam : {uniform_family(), gibbs_family(Rational(1, 2))}) {
    const Universe& u = fam.universe();
    for (const auto& [s, t] : fam.family().comparable_pairs()) {
      for (int trial = 0; trial < 10; ++trial) {
        const LocalState mu(u, t,
                            rng.probability_vector(configuration_count(u, u.outside(t))));
        CHECK(restrict_state(u, dual(mu, s, fam), t).weights() == mu.weights());
      }
    }
    const Region system({0});
    const LocalState mu = LocalState::uniform(fam.universe(), system);
    CHECK(restrict_state(fam.universe(), mu, system).weights() == mu.weights());
    CHECK(restrict_state(fam.universe(), mu, Region({0, 1})).weights() ==
          LocalState::uniform(fam.universe(), Region({0, 1})).weights());
  }
}

TEST_CASE("mutual inverse on thread components") {
  testing::Rng rng(71);
  const MorphismFamily fam = gibbs_family(Rational(2));
  const Universe& u = fam.universe();
  const LocalState top(u, u.interior(), rng.probability_vector(2));
  const Thread thread = thread_from_top(top, fam);
  for (const auto& [s, t] : fam.family().comparable_pairs()) {
    // r o eta = id on E_t, eta o r = id on the thread image in E_s.
    CHECK(restrict_state(u, thread.component(s), t).weights() ==
          thread.component(t).weights());
    CHECK(dual(restrict_state(u, thread.component(s), t), s, fam).weights() ==
          thread.component(s).weights());
  }
}

TEST_CASE("tl identification") {
  const MorphismFamily uniform = uniform_family();
  const Universe& u = uniform.universe();

  // The family's own reference always identifies to a thread.
  CHECK(tl_identify(uniform.reference().weights(), uniform).verdict.ok);
  const MorphismFamily gibbs = gibbs_family(Rational(1));
  CHECK(tl_identify(gibbs.reference().weights(), gibbs).verdict.ok);

  // A non-probability vector is rejected.
  std::vector<Scalar> bad(16, Scalar(Rational(1, 8)));
  CHECK_THROWS_AS(tl_identify(bad, uniform), std::invalid_argument);
  (void)u;
}

TEST_CASE("threads never mix") {
  testing::Rng rng(73);
  const MorphismFamily fam = uniform_family();
  const Universe& u = fam.universe();
  for (int trial = 0; trial < 20; ++trial) {
    const LocalState top(u, u.interior(), rng.probability_vector(2));
    const Thread first = thread_from_top(top, fam);
    const Thread second = thread_from_top(top, fam);
    for (const Region& region : fam.family().regions()) {
      CHECK(first.component(region).weights() == second.component(region).weights());
    }
  }
}
