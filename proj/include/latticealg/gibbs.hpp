#ifndef LATTICEALG_GIBBS_HPP
#define LATTICEALG_GIBBS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latticealg/geometry.hpp"
#include "latticealg/morphism.hpp"
#include "latticealg/state.hpp"

namespace latticealg {

/**
 * H(x) = sum_i h_i(x_i) + sum_{(i,j) in edges} J_ij(x_i, x_j), with rational
 * per-site fields and per-edge coupling matrices. Coupled edges must belong
 * to the universe adjacency. Hard constraints are approximated by large
 * finite energies, never by zero weights.
 */
class Hamiltonian {
 public:
  using CouplingMatrix = std::vector<std::vector<Rational>>;

  Hamiltonian(const Universe& universe, std::vector<std::vector<Rational>> site_fields,
              std::map<std::pair<int, int>, CouplingMatrix> couplings);

  static Hamiltonian zero(const Universe& universe);
  /// -J n_i n_j attraction on every adjacency edge (the lattice-gas default).
  static Hamiltonian lattice_gas(const Universe& universe, const Rational& coupling);

  const std::vector<std::vector<Rational>>& site_fields() const { return site_fields_; }
  const std::map<std::pair<int, int>, CouplingMatrix>& couplings() const { return couplings_; }

  Rational energy(const Universe& universe, const Configuration& full) const;
  /// Contribution of the sites and internal edges of `region` only.
  Rational energy_within(const Universe& universe, const Region& region,
                         const Configuration& config) const;

 private:
  std::vector<std::vector<Rational>> site_fields_;
  std::map<std::pair<int, int>, CouplingMatrix> couplings_;
};

/// Boltzmann weights exp(-beta H)/Z, exact: weights live in the symbolic
/// scalar field, so thread and kernel identities hold with equality.
ReferenceMeasure gibbs_reference(const Universe& universe, const Hamiltonian& hamiltonian,
                                 const Rational& beta, Backend backend = Backend::Serial);

struct DlrReport {
  MorphismAxiomReport axioms;
  ThreadVerdict thread;
  bool ok() const { return axioms.ok() && thread.ok; }
};

/// Builds the Gibbs morphism family and checks both halves of the DLR
/// picture: the kernel laws, and that the Gibbs marginals form a thread
/// under their own family.
DlrReport dlr_verify(const Universe& universe, const RegionFamily& family,
                     const Hamiltonian& hamiltonian, const Rational& beta,
                     Backend backend = Backend::Serial);

/// The energy-per-site and particles-per-site observables at the top region,
/// both read off the boundary core.
struct DensityPair {
  LocalObservable energy_density;
  LocalObservable particle_density;
};

DensityPair density_observables(const Universe& universe, const Hamiltonian& hamiltonian);

/// One level set of the density map: all boundary configurations sharing an
/// exact (energy, particle) value, with its uniform microcanonical state.
struct MicrocanonicalLevel {
  Scalar energy;
  Scalar particles;
  std::vector<std::uint64_t> members;
};

struct MicrocanonicalEnsemble {
  std::vector<MicrocanonicalLevel> levels;
  /// One uniform state per level, supported exactly on it; same order.
  std::vector<LocalState> states;
};

MicrocanonicalEnsemble microcanonical_states(const Universe& universe, const DensityPair& d);

struct StationaryReport {
  MicrocanonicalEnsemble ensemble;
  std::size_t spectrum_size = 0;      // |X_K|
  bool simplex = false;               // hull of MC states is a simplex
  bool vertices_match = false;        // extreme points == MC states
  bool indicators_match = false;      // every subset indicator maps to chi_F
  bool idempotent_lattice = false;    // chi_F family closed under meet/join/complement
  std::string witness;
  bool ok() const {
    return simplex && vertices_match && indicators_match && idempotent_lattice;
  }
};

/// The finite Stonean-spectrum verification: hull the MC states, check the
/// simplex structure, and reproduce every subset indicator of the spectrum
/// as the image of a genuine local observable.
StationaryReport stationary_analysis(const MorphismFamily& fam, const DensityPair& d);

/// Marginal of the family's reference on the boundary core: the state-vector
/// coordinates of the reference's own thread.
StateVector boundary_state(const MorphismFamily& fam);

}  // namespace latticealg

#endif  // LATTICEALG_GIBBS_HPP
