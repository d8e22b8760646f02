#include "latticealg/state.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace latticealg {

LocalFunctional::LocalFunctional(const Universe& universe, Region system,
                                 std::vector<Scalar> weights)
    : system_(std::move(system)), weights_(std::move(weights)) {
  if (!system_.subset_of(universe.all_sites())) {
    throw std::invalid_argument("LocalFunctional: system " + system_.to_string() +
                                " leaves the window");
  }
  outside_ = universe.outside(system_);
  const std::uint64_t expected = configuration_count(universe, outside_);
  if (weights_.size() != expected) {
    throw std::invalid_argument("LocalFunctional: weight vector has " +
                                std::to_string(weights_.size()) + " entries, expected " +
                                std::to_string(expected));
  }
}

Scalar LocalFunctional::pair(const LocalObservable& observable) const {
  if (observable.system() != system_) {
    throw std::invalid_argument("pair: functional lives on " + system_.to_string() +
                                ", observable on " + observable.system().to_string());
  }
  Scalar total(0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    total += weights_[i] * observable.table()[i];
  }
  return total;
}

Scalar LocalFunctional::norm() const {
  Scalar total(0);
  for (const Scalar& w : weights_) total += w.abs();
  return total;
}

Scalar LocalFunctional::unit_pairing() const {
  Scalar total(0);
  for (const Scalar& w : weights_) total += w;
  return total;
}

bool is_state(const LocalFunctional& functional) {
  bool positive = true;
  for (const Scalar& w : functional.weights()) {
    if (w.sign() < 0) {
      positive = false;
      break;
    }
  }
  const bool direct = positive && functional.unit_pairing() == Scalar(1);
  const bool by_norms =
      functional.norm() == Scalar(1) && functional.unit_pairing() == Scalar(1);
  if (direct != by_norms) {
    throw std::logic_error("is_state: the two state characterizations disagree");
  }
  return direct;
}

LocalState::LocalState(const Universe& universe, Region system, std::vector<Scalar> weights)
    : LocalFunctional(universe, std::move(system), std::move(weights)) {
  if (!is_state(*this)) {
    throw std::invalid_argument("LocalState: weights are not a probability vector");
  }
}

LocalState LocalState::dirac(const Universe& universe, const Region& system,
                             const Configuration& at) {
  const Region outside = universe.outside(system);
  if (at.region != outside) {
    throw std::invalid_argument("dirac: point lives on " + at.region.to_string() +
                                ", expected the outside " + outside.to_string());
  }
  std::vector<Scalar> weights(configuration_count(universe, outside), Scalar(0));
  weights.at(at.code) = Scalar(1);
  return LocalState(universe, system, std::move(weights));
}

LocalState LocalState::uniform(const Universe& universe, const Region& system) {
  const Region outside = universe.outside(system);
  const std::uint64_t count = configuration_count(universe, outside);
  return LocalState(universe, system,
                    std::vector<Scalar>(count, Scalar(1) / Scalar(Rational(BigInt(count)))));
}

namespace {

std::vector<Scalar> dual_weights(const std::vector<Scalar>& weights, const Region& system,
                                 const Region& s, const MorphismFamily& fam) {
  const Universe& universe = fam.universe();
  if (!fam.family().contains(s) || !fam.family().contains(system)) {
    throw std::invalid_argument("dual: systems must belong to the region family");
  }
  if (!s.subset_of(system)) {
    throw std::invalid_argument("dual: " + s.to_string() + " is not below " +
                                system.to_string());
  }
  if (s == system) return weights;

  const Region annulus = system.difference(s);
  const Region outer = universe.outside(system);
  const std::vector<Scalar> small_marginal = fam.marginal_on(universe.outside(s));
  const std::vector<Scalar> outer_marginal = fam.marginal_on(outer);

  const std::uint64_t outer_count = configuration_count(universe, outer);
  const std::uint64_t annulus_count = configuration_count(universe, annulus);
  std::vector<Scalar> result(configuration_count(universe, universe.outside(s)));
  for (std::uint64_t y = 0; y < outer_count; ++y) {
    for (std::uint64_t a = 0; a < annulus_count; ++a) {
      const std::uint64_t z = merge_code(universe, annulus, a, outer, y);
      result[z] =
          fam.kernel_scale(s, system, a) * small_marginal[z] / outer_marginal[y] * weights[y];
    }
  }
  return result;
}

}  // namespace

LocalState dual(const LocalState& mu, const Region& s, const MorphismFamily& fam) {
  return LocalState(fam.universe(), s, dual_weights(mu.weights(), mu.system(), s, fam));
}

LocalFunctional dual_functional(const LocalFunctional& phi, const Region& s,
                                const MorphismFamily& fam) {
  return LocalFunctional(fam.universe(), s, dual_weights(phi.weights(), phi.system(), s, fam));
}

LocalState restrict_state(const Universe& universe, const LocalState& mu, const Region& t) {
  if (!mu.system().subset_of(t)) {
    throw std::invalid_argument("restrict_state: " + mu.system().to_string() +
                                " is not below " + t.to_string());
  }
  const Region small_outside = universe.outside(t);
  std::vector<Scalar> weights(configuration_count(universe, small_outside), Scalar(0));
  for (std::uint64_t z = 0; z < mu.weights().size(); ++z) {
    weights[restrict_code(universe, mu.outside(), z, small_outside)] += mu.weight(z);
  }
  return LocalState(universe, t, std::move(weights));
}

Thread::Thread(RegionFamily family, std::map<Region, LocalState> components)
    : family_(std::move(family)), components_(std::move(components)) {
  for (const Region& region : family_.regions()) {
    auto it = components_.find(region);
    if (it == components_.end()) {
      throw std::invalid_argument("Thread: missing component for " + region.to_string());
    }
    if (it->second.system() != region) {
      throw std::invalid_argument("Thread: component keyed by " + region.to_string() +
                                  " lives on " + it->second.system().to_string());
    }
  }
  if (components_.size() != family_.regions().size()) {
    throw std::invalid_argument("Thread: components for regions outside the family");
  }
}

const LocalState& Thread::component(const Region& system) const {
  auto it = components_.find(system);
  if (it == components_.end()) {
    throw std::invalid_argument("Thread: no component at " + system.to_string());
  }
  return it->second;
}

Thread thread_from_top(const LocalState& top_state, const MorphismFamily& fam) {
  if (top_state.system() != fam.family().top()) {
    throw std::invalid_argument("thread_from_top: state lives on " +
                                top_state.system().to_string() + ", top is " +
                                fam.family().top().to_string());
  }
  std::map<Region, LocalState> components;
  for (const Region& region : fam.family().regions()) {
    components.emplace(region, dual(top_state, region, fam));
  }
  return Thread(fam.family(), std::move(components));
}

ThreadVerdict verify_thread(const Thread& thread, const MorphismFamily& fam) {
  ThreadVerdict verdict;
  for (const auto& [s, t] : thread.family().comparable_pairs()) {
    const LocalState expected = dual(thread.component(t), s, fam);
    const LocalState& actual = thread.component(s);
    for (std::uint64_t code = 0; code < actual.weights().size(); ++code) {
      if (actual.weight(code) != expected.weight(code)) {
        verdict.ok = false;
        std::ostringstream out;
        out << "consistency fails between " << s.to_string() << " and " << t.to_string()
            << " at outside code " << code;
        verdict.witness = out.str();
        return verdict;
      }
    }
  }
  return verdict;
}

TlIdentification tl_identify(const std::vector<Scalar>& full_weights,
                             const MorphismFamily& fam) {
  const Universe& universe = fam.universe();
  Scalar total(0);
  for (const Scalar& w : full_weights) {
    if (w.sign() < 0) {
      throw std::invalid_argument("tl_identify: weights must be nonnegative");
    }
    total += w;
  }
  if (total != Scalar(1)) {
    throw std::invalid_argument("tl_identify: weights must sum to 1");
  }

  std::map<Region, LocalState> components;
  for (const Region& region : fam.family().regions()) {
    components.emplace(region,
                       LocalState(universe, region,
                                  marginal_weights(universe, full_weights,
                                                   universe.outside(region))));
  }
  Thread thread(fam.family(), std::move(components));
  ThreadVerdict verdict = verify_thread(thread, fam);
  return TlIdentification{std::move(thread), std::move(verdict)};
}

}  // namespace latticealg
