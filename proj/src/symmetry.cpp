#include "latticealg/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace latticealg {

namespace {

bool is_permutation(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int value : perm) {
    if (value < 0 || static_cast<std::size_t>(value) >= perm.size() || seen[value]) {
      return false;
    }
    seen[value] = 1;
  }
  return true;
}

}  // namespace

LatticeSymmetry::LatticeSymmetry(const Universe& universe, std::vector<int> site_permutation,
                                 std::vector<int> state_permutation)
    : site_permutation_(std::move(site_permutation)),
      state_permutation_(std::move(state_permutation)) {
  if (site_permutation_.size() != static_cast<std::size_t>(universe.site_count()) ||
      !is_permutation(site_permutation_)) {
    throw std::invalid_argument("LatticeSymmetry: invalid site permutation");
  }
  if (state_permutation_.size() != static_cast<std::size_t>(universe.state_count()) ||
      !is_permutation(state_permutation_)) {
    throw std::invalid_argument("LatticeSymmetry: invalid state permutation");
  }
  for (int site : universe.boundary_core().sites()) {
    if (!universe.boundary_core().contains(site_permutation_[site])) {
      throw std::invalid_argument(
          "LatticeSymmetry: site permutation must map the boundary core onto itself");
    }
  }
}

LatticeSymmetry LatticeSymmetry::identity(const Universe& universe) {
  std::vector<int> sites(universe.site_count());
  for (int i = 0; i < universe.site_count(); ++i) sites[i] = i;
  std::vector<int> states(universe.state_count());
  for (int v = 0; v < universe.state_count(); ++v) states[v] = v;
  LatticeSymmetry result;
  result.site_permutation_ = std::move(sites);
  result.state_permutation_ = std::move(states);
  return result;
}

bool LatticeSymmetry::is_identity() const {
  for (std::size_t i = 0; i < site_permutation_.size(); ++i) {
    if (site_permutation_[i] != static_cast<int>(i)) return false;
  }
  for (std::size_t v = 0; v < state_permutation_.size(); ++v) {
    if (state_permutation_[v] != static_cast<int>(v)) return false;
  }
  return true;
}

LatticeSymmetry LatticeSymmetry::compose(const LatticeSymmetry& other) const {
  LatticeSymmetry result;
  result.site_permutation_.resize(site_permutation_.size());
  result.state_permutation_.resize(state_permutation_.size());
  for (std::size_t i = 0; i < site_permutation_.size(); ++i) {
    result.site_permutation_[i] = site_permutation_[other.site_permutation_[i]];
  }
  for (std::size_t v = 0; v < state_permutation_.size(); ++v) {
    result.state_permutation_[v] = state_permutation_[other.state_permutation_[v]];
  }
  return result;
}

LatticeSymmetry LatticeSymmetry::inverse() const {
  LatticeSymmetry result;
  result.site_permutation_.resize(site_permutation_.size());
  result.state_permutation_.resize(state_permutation_.size());
  for (std::size_t i = 0; i < site_permutation_.size(); ++i) {
    result.site_permutation_[site_permutation_[i]] = static_cast<int>(i);
  }
  for (std::size_t v = 0; v < state_permutation_.size(); ++v) {
    result.state_permutation_[state_permutation_[v]] = static_cast<int>(v);
  }
  return result;
}

Region LatticeSymmetry::map_region(const Region& region) const {
  std::vector<int> sites;
  sites.reserve(region.size());
  for (int site : region.sites()) sites.push_back(site_permutation_.at(site));
  return Region(std::move(sites));
}

Configuration LatticeSymmetry::map_configuration(const Universe& universe,
                                                 const Configuration& config) const {
  const Region image = map_region(config.region);
  std::vector<int> values(image.size());
  const LatticeSymmetry inv = inverse();
  for (std::size_t rank = 0; rank < image.size(); ++rank) {
    const int source = inv.site_permutation_.at(image.sites()[rank]);
    values[rank] = state_permutation_.at(site_value(universe, config, source));
  }
  return make_configuration(universe, image, values);
}

SymmetryGroup::SymmetryGroup(const Universe& universe, std::vector<LatticeSymmetry> generators,
                             std::size_t max_elements) {
  elements_.push_back(LatticeSymmetry::identity(universe));
  std::vector<LatticeSymmetry> frontier = elements_;
  auto known = [this](const LatticeSymmetry& candidate) {
    return std::find(elements_.begin(), elements_.end(), candidate) != elements_.end();
  };
  for (const LatticeSymmetry& g : generators) {
    if (!known(g)) {
      elements_.push_back(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<LatticeSymmetry> next;
    for (const LatticeSymmetry& a : frontier) {
      for (const LatticeSymmetry& g : generators) {
        for (const LatticeSymmetry& product : {a.compose(g), a.inverse()}) {
          if (!known(product)) {
            elements_.push_back(product);
            next.push_back(product);
            if (elements_.size() > max_elements) {
              throw std::invalid_argument("SymmetryGroup: closure exceeds the element cap");
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
}

LocalObservable act_observable(const Universe& universe, const LatticeSymmetry& symmetry,
                               const LocalObservable& observable) {
  const Region image_system = symmetry.map_region(observable.system());
  const Region image_outside = universe.outside(image_system);
  const LatticeSymmetry inv = symmetry.inverse();
  const std::uint64_t count = configuration_count(universe, image_outside);
  std::vector<Scalar> table(count);
  for (std::uint64_t y = 0; y < count; ++y) {
    const Configuration pre =
        inv.map_configuration(universe, Configuration{image_outside, y});
    table[y] = observable.value_at(pre.code);
  }
  return LocalObservable(universe, image_system, std::move(table));
}

LocalState act_state(const Universe& universe, const LatticeSymmetry& symmetry,
                     const LocalState& state) {
  const LatticeSymmetry inv = symmetry.inverse();
  const Region image_system = inv.map_region(state.system());
  const Region image_outside = universe.outside(image_system);
  const std::uint64_t count = configuration_count(universe, image_outside);
  std::vector<Scalar> weights(count);
  for (std::uint64_t y = 0; y < count; ++y) {
    const Configuration post =
        symmetry.map_configuration(universe, Configuration{image_outside, y});
    weights[y] = state.weight(post.code);
  }
  return LocalState(universe, image_system, std::move(weights));
}

std::vector<std::uint64_t> boundary_permutation(const Universe& universe,
                                                const LatticeSymmetry& symmetry) {
  const Region& core = universe.boundary_core();
  const std::uint64_t count = configuration_count(universe, core);
  std::vector<std::uint64_t> permutation(count);
  for (std::uint64_t y = 0; y < count; ++y) {
    permutation[y] = symmetry.map_configuration(universe, Configuration{core, y}).code;
  }
  return permutation;
}

bool preserves_reference(const LatticeSymmetry& symmetry, const MorphismFamily& fam) {
  const Universe& universe = fam.universe();
  const Region& window = universe.all_sites();
  const std::uint64_t count = configuration_count(universe, window);
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::uint64_t image =
        symmetry.map_configuration(universe, Configuration{window, x}).code;
    if (fam.reference().weight(image) != fam.reference().weight(x)) return false;
  }
  return true;
}

StatePolytope invariant_states(const SymmetryGroup& group, const StatePolytope& polytope,
                               const MorphismFamily& fam) {
  const Universe& universe = fam.universe();
  std::vector<std::vector<std::uint64_t>> permutations;
  for (const LatticeSymmetry& g : group.elements()) {
    if (!preserves_reference(g, fam)) {
      throw std::invalid_argument(
          "invariant_states: the reference measure is not invariant under the group, so the "
          "action does not descend to the quotient algebra");
    }
    permutations.push_back(boundary_permutation(universe, g));
  }

  // Contravariant vector action: (g.v)[y] = v[perm_g(y)].
  auto permuted = [](const StateVector& v, const std::vector<std::uint64_t>& perm) {
    StateVector result(v.size());
    for (std::size_t y = 0; y < v.size(); ++y) result[y] = v[perm[y]];
    return result;
  };

  for (const StateVector& vertex : polytope.vertices()) {
    for (const auto& perm : permutations) {
      if (!membership(permuted(vertex, perm), polytope)) {
        throw std::invalid_argument(
            "invariant_states: the polytope is not setwise invariant under the group");
      }
    }
  }

  const Scalar inverse_order = Scalar(1) / Scalar(Rational(BigInt(permutations.size())));
  std::vector<StateVector> averaged;
  for (const StateVector& vertex : polytope.vertices()) {
    StateVector mean(vertex.size(), Scalar(0));
    for (const auto& perm : permutations) {
      const StateVector moved = permuted(vertex, perm);
      for (std::size_t y = 0; y < mean.size(); ++y) mean[y] += moved[y];
    }
    for (Scalar& value : mean) value *= inverse_order;
    averaged.push_back(std::move(mean));
  }
  return StatePolytope(std::move(averaged));
}

bool BreakdownReport::any_breaks() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const BreakdownEntry& e) { return !e.persists; });
}

BreakdownReport breakdown_report(const StatePolytope& inner, const StatePolytope& outer) {
  for (const StateVector& vertex : inner.vertices()) {
    if (!membership(vertex, outer)) {
      throw std::invalid_argument("breakdown_report: inner set is not contained in outer");
    }
  }
  BreakdownReport report;
  for (const StateVector& vertex : inner.vertices()) {
    BreakdownEntry entry;
    entry.vertex = vertex;
    entry.persists = std::find(outer.vertices().begin(), outer.vertices().end(), vertex) !=
                     outer.vertices().end();
    if (!entry.persists) {
      entry.weights = choquet_decompose(vertex, outer).weights;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace latticealg
