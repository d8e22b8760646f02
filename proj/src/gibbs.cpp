#include "latticealg/gibbs.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace latticealg {

Hamiltonian::Hamiltonian(const Universe& universe, std::vector<std::vector<Rational>> site_fields,
                         std::map<std::pair<int, int>, CouplingMatrix> couplings)
    : site_fields_(std::move(site_fields)), couplings_(std::move(couplings)) {
  const std::size_t q = static_cast<std::size_t>(universe.state_count());
  if (site_fields_.size() != static_cast<std::size_t>(universe.site_count())) {
    throw std::invalid_argument("Hamiltonian: need one field row per site");
  }
  for (const auto& row : site_fields_) {
    if (row.size() != q) throw std::invalid_argument("Hamiltonian: field row size must be q");
  }
  for (const auto& [edge, matrix] : couplings_) {
    if (!universe.has_edge(edge.first, edge.second) || edge.first > edge.second) {
      throw std::invalid_argument("Hamiltonian: coupling on a non-adjacency edge (" +
                                  std::to_string(edge.first) + "," +
                                  std::to_string(edge.second) + ")");
    }
    if (matrix.size() != q) throw std::invalid_argument("Hamiltonian: coupling matrix must be q x q");
    for (const auto& row : matrix) {
      if (row.size() != q) {
        throw std::invalid_argument("Hamiltonian: coupling matrix must be q x q");
      }
    }
  }
}

Hamiltonian Hamiltonian::zero(const Universe& universe) {
  return Hamiltonian(
      universe,
      std::vector<std::vector<Rational>>(universe.site_count(),
                                         std::vector<Rational>(universe.state_count(), 0)),
      {});
}

Hamiltonian Hamiltonian::lattice_gas(const Universe& universe, const Rational& coupling) {
  std::map<std::pair<int, int>, CouplingMatrix> couplings;
  CouplingMatrix matrix(universe.state_count(),
                        std::vector<Rational>(universe.state_count(), 0));
  for (int v = 1; v < universe.state_count(); ++v) {
    for (int w = 1; w < universe.state_count(); ++w) {
      matrix[v][w] = -coupling;
    }
  }
  for (const auto& edge : universe.edges()) couplings[edge] = matrix;
  return Hamiltonian(
      universe,
      std::vector<std::vector<Rational>>(universe.site_count(),
                                         std::vector<Rational>(universe.state_count(), 0)),
      std::move(couplings));
}

Rational Hamiltonian::energy(const Universe& universe, const Configuration& full) const {
  if (full.region != universe.all_sites()) {
    throw std::invalid_argument("Hamiltonian::energy: configuration must cover the window");
  }
  return energy_within(universe, universe.all_sites(), full);
}

Rational Hamiltonian::energy_within(const Universe& universe, const Region& region,
                                    const Configuration& config) const {
  if (!region.subset_of(config.region)) {
    throw std::invalid_argument("Hamiltonian::energy_within: region exceeds the configuration");
  }
  Rational total(0);
  for (int site : region.sites()) {
    total += site_fields_[site][site_value(universe, config, site)];
  }
  for (const auto& [edge, matrix] : couplings_) {
    if (region.contains(edge.first) && region.contains(edge.second)) {
      total += matrix[site_value(universe, config, edge.first)]
                     [site_value(universe, config, edge.second)];
    }
  }
  return total;
}

ReferenceMeasure gibbs_reference(const Universe& universe, const Hamiltonian& hamiltonian,
                                 const Rational& beta, Backend backend) {
  const Region& window = universe.all_sites();
  const std::uint64_t count = configuration_count(universe, window);

  std::vector<Rational> energies(count);
  parallel_for(count, backend, [&](std::size_t x) {
    energies[x] = hamiltonian.energy(universe, Configuration{window, static_cast<std::uint64_t>(x)});
  });

  ExpSum partition;
  for (std::uint64_t x = 0; x < count; ++x) {
    partition = partition + ExpSum(Rational(1), -beta * energies[x]);
  }

  std::vector<Scalar> weights(count);
  parallel_for(count, backend, [&](std::size_t x) {
    weights[x] = Scalar::ratio(ExpSum(Rational(1), -beta * energies[x]), partition);
  });
  return ReferenceMeasure::from_weights(universe, std::move(weights));
}

DlrReport dlr_verify(const Universe& universe, const RegionFamily& family,
                     const Hamiltonian& hamiltonian, const Rational& beta, Backend backend) {
  const ReferenceMeasure reference = gibbs_reference(universe, hamiltonian, beta, backend);
  const MorphismFamily fam(universe, family, reference, backend);
  DlrReport report;
  report.axioms = verify_morphism_axioms(fam);
  report.thread = tl_identify(reference.weights(), fam).verdict;
  return report;
}

DensityPair density_observables(const Universe& universe, const Hamiltonian& hamiltonian) {
  const Region& core = universe.boundary_core();
  const Region& top = universe.interior();
  const std::uint64_t count = configuration_count(universe, core);
  const Scalar size(Rational(BigInt(core.size())));

  std::vector<Scalar> energy_table(count);
  std::vector<Scalar> particle_table(count);
  for (std::uint64_t y = 0; y < count; ++y) {
    const Configuration config{core, y};
    energy_table[y] =
        Scalar(hamiltonian.energy_within(universe, core, config)) / size;
    int particles = 0;
    for (int site : core.sites()) {
      if (site_value(universe, config, site) != 0) ++particles;
    }
    particle_table[y] = Scalar(Rational(particles)) / size;
  }
  return DensityPair{LocalObservable(universe, top, std::move(energy_table)),
                     LocalObservable(universe, top, std::move(particle_table))};
}

MicrocanonicalEnsemble microcanonical_states(const Universe& universe, const DensityPair& d) {
  const Region& core = universe.boundary_core();
  const std::uint64_t count = configuration_count(universe, core);

  MicrocanonicalEnsemble ensemble;
  for (std::uint64_t y = 0; y < count; ++y) {
    const Scalar& g = d.energy_density.value_at(y);
    const Scalar& n = d.particle_density.value_at(y);
    bool placed = false;
    for (MicrocanonicalLevel& level : ensemble.levels) {
      if (level.energy == g && level.particles == n) {
        level.members.push_back(y);
        placed = true;
        break;
      }
    }
    if (!placed) ensemble.levels.push_back(MicrocanonicalLevel{g, n, {y}});
  }

  const Region& top = universe.interior();
  for (const MicrocanonicalLevel& level : ensemble.levels) {
    std::vector<Scalar> weights(count, Scalar(0));
    const Scalar share = Scalar(1) / Scalar(Rational(BigInt(level.members.size())));
    for (std::uint64_t member : level.members) weights[member] = share;
    ensemble.states.emplace_back(universe, top, std::move(weights));
  }
  return ensemble;
}

namespace {

// Index of the polytope vertex equal to the given microcanonical state.
std::size_t vertex_index_of(const StatePolytope& hull, const LocalState& state) {
  for (std::size_t i = 0; i < hull.vertices().size(); ++i) {
    if (hull.vertices()[i] == state.weights()) return i;
  }
  throw std::logic_error("stationary_analysis: microcanonical state missing from the hull");
}

}  // namespace

StationaryReport stationary_analysis(const MorphismFamily& fam, const DensityPair& d) {
  const Universe& universe = fam.universe();
  StationaryReport report;
  report.ensemble = microcanonical_states(universe, d);
  const std::size_t level_count = report.ensemble.levels.size();
  if (level_count > 20) {
    throw std::invalid_argument("stationary_analysis: too many level sets to sweep subsets");
  }

  std::vector<StateVector> generators;
  for (const LocalState& state : report.ensemble.states) generators.push_back(state.weights());
  const StatePolytope hull(generators);

  report.spectrum_size = hull.vertices().size();
  report.simplex = is_simplex(hull);
  report.vertices_match = hull.vertices().size() == level_count;

  // Map each level to its position in the canonical vertex order.
  std::vector<std::size_t> vertex_of_level(level_count);
  for (std::size_t i = 0; i < level_count; ++i) {
    vertex_of_level[i] = vertex_index_of(hull, report.ensemble.states[i]);
  }

  const Region& core = universe.boundary_core();
  const std::uint64_t core_count = configuration_count(universe, core);
  const Region& top = fam.family().top();

  // Every subset F of the spectrum: the indicator of the union of F's level
  // sets is a genuine local observable whose image must be exactly chi_F.
  report.indicators_match = true;
  std::vector<CxFunction> idempotents;
  for (std::uint64_t mask = 0; mask < (UINT64_C(1) << level_count); ++mask) {
    std::vector<Scalar> table(core_count, Scalar(0));
    std::vector<std::size_t> support;
    for (std::size_t level = 0; level < level_count; ++level) {
      if (!(mask & (UINT64_C(1) << level))) continue;
      support.push_back(vertex_of_level[level]);
      for (std::uint64_t member : report.ensemble.levels[level].members) {
        table[member] = Scalar(1);
      }
    }
    const QuasilocalElement element =
        QuasilocalElement::single(top, LocalObservable(universe, top, std::move(table)));
    const CxFunction image = kadison(element, hull, fam);
    const CxFunction expected = CxFunction::indicator(hull.vertices().size(), support);
    if (!(image == expected)) {
      report.indicators_match = false;
      std::ostringstream out;
      out << "subset mask " << mask << " does not map to its indicator";
      report.witness = out.str();
    }
    idempotents.push_back(expected);
  }

  // The indicator family must be closed under meet, join, and complement.
  report.idempotent_lattice = true;
  auto contains = [&](const CxFunction& f) {
    for (const CxFunction& p : idempotents) {
      if (p == f) return true;
    }
    return false;
  };
  auto complement = [](const CxFunction& f) {
    std::vector<Scalar> values(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) values[i] = Scalar(1) - f.value(i);
    return CxFunction(std::move(values));
  };
  for (const CxFunction& p : idempotents) {
    if (!p.is_idempotent() || !contains(complement(p))) {
      report.idempotent_lattice = false;
      break;
    }
    for (const CxFunction& r : idempotents) {
      if (!contains(cx_join(p, r)) || !contains(cx_meet(p, r))) {
        report.idempotent_lattice = false;
        break;
      }
    }
    if (!report.idempotent_lattice) break;
  }

  return report;
}

StateVector boundary_state(const MorphismFamily& fam) {
  return fam.marginal_on(fam.universe().boundary_core());
}

}  // namespace latticealg
