#ifndef LATTICEALG_SYMMETRY_HPP
#define LATTICEALG_SYMMETRY_HPP

#include <vector>

#include "latticealg/geometry.hpp"
#include "latticealg/morphism.hpp"
#include "latticealg/state.hpp"

namespace latticealg {

/**
 * A lattice automorphism: a permutation of the sites composed with one
 * permutation of the single-site states applied everywhere. The site
 * permutation must map the boundary core onto itself (and hence the interior
 * onto itself) so the action descends to boundary-core coordinates.
 *
 * Observables transform covariantly, states contravariantly:
 *   act_observable(a, f)(y) = f(a^{-1} y)       on the system a(s)
 *   act_state(a, mu)(y)     = mu-weights(a y)   on the system a^{-1}(t)
 */
class LatticeSymmetry {
 public:
  LatticeSymmetry(const Universe& universe, std::vector<int> site_permutation,
                  std::vector<int> state_permutation);

  static LatticeSymmetry identity(const Universe& universe);

  const std::vector<int>& site_permutation() const { return site_permutation_; }
  const std::vector<int>& state_permutation() const { return state_permutation_; }

  int map_site(int site) const { return site_permutation_.at(site); }
  int map_state(int value) const { return state_permutation_.at(value); }
  bool is_identity() const;

  /// Function composition: (this o other) applies `other` first.
  LatticeSymmetry compose(const LatticeSymmetry& other) const;
  LatticeSymmetry inverse() const;

  Region map_region(const Region& region) const;
  Configuration map_configuration(const Universe& universe, const Configuration& config) const;

  bool operator==(const LatticeSymmetry& other) const {
    return site_permutation_ == other.site_permutation_ &&
           state_permutation_ == other.state_permutation_;
  }

 private:
  LatticeSymmetry() = default;
  std::vector<int> site_permutation_;
  std::vector<int> state_permutation_;
};

/// The finite group generated by closure under composition; always contains
/// the identity. Throws when the closure exceeds `max_elements`.
class SymmetryGroup {
 public:
  SymmetryGroup(const Universe& universe, std::vector<LatticeSymmetry> generators,
                std::size_t max_elements = 4096);

  const std::vector<LatticeSymmetry>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<LatticeSymmetry> elements_;
};

LocalObservable act_observable(const Universe& universe, const LatticeSymmetry& symmetry,
                               const LocalObservable& observable);

LocalState act_state(const Universe& universe, const LatticeSymmetry& symmetry,
                     const LocalState& state);

/// The permutation the symmetry induces on boundary-core configuration codes.
std::vector<std::uint64_t> boundary_permutation(const Universe& universe,
                                                const LatticeSymmetry& symmetry);

/// weights(a x) == weights(x) for every full configuration.
bool preserves_reference(const LatticeSymmetry& symmetry, const MorphismFamily& fam);

/**
 * The sub-polytope of K fixed by every induced boundary permutation of the
 * group, computed by group-averaging the vertices and re-extracting extreme
 * points. Preconditions (both checked, std::invalid_argument): the reference
 * measure is invariant under the group, so the action descends to the
 * quotient algebra; and K itself is setwise invariant, so averaging lands
 * exactly on the fixed sub-polytope.
 */
StatePolytope invariant_states(const SymmetryGroup& group, const StatePolytope& polytope,
                               const MorphismFamily& fam);

struct BreakdownEntry {
  StateVector vertex;
  bool persists = false;
  /// Resolution of the vertex into vertices of the larger set when it breaks.
  std::vector<Scalar> weights;
};

struct BreakdownReport {
  std::vector<BreakdownEntry> entries;
  bool any_breaks() const;
};

/// For each extreme point of `inner`: either it stays extreme in `outer`, or
/// it decomposes there. Throws unless inner is contained in outer.
BreakdownReport breakdown_report(const StatePolytope& inner, const StatePolytope& outer);

}  // namespace latticealg

#endif  // LATTICEALG_SYMMETRY_HPP
