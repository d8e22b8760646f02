#include "latticealg/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace latticealg {

namespace {

const Json& require_field(const Json& value, const char* key) {
  auto it = value.find(key);
  if (it == value.end()) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw std::invalid_argument("expected rational as integer or \"p/q\" string, got " +
                              value.dump());
}

Json rational_to_json(const Rational& value) { return format_rational(value); }

Scalar scalar_from_json(const Json& value) { return Scalar(rational_from_json(value)); }

Json scalar_to_json(const Scalar& value) { return value.to_string(); }

Region region_from_json(const Json& value) {
  if (!value.is_array()) {
    throw std::invalid_argument("expected a region as an array of sites, got " + value.dump());
  }
  std::vector<int> sites;
  for (const Json& site : value) sites.push_back(site.get<int>());
  return Region(std::move(sites));
}

Json region_to_json(const Region& region) {
  Json result = Json::array();
  for (int site : region.sites()) result.push_back(site);
  return result;
}

Universe universe_from_json(const Json& value) {
  const int sites = require_field(value, "sites").get<int>();
  const int q = require_field(value, "q").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const Json& edge : require_field(value, "edges")) {
    if (!edge.is_array() || edge.size() != 2) {
      throw std::invalid_argument("expected edge as [a,b], got " + edge.dump());
    }
    edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
  }
  return Universe(sites, q, std::move(edges),
                  region_from_json(require_field(value, "boundary_core")));
}

RegionFamily family_from_json(const Universe& universe, const Json& value) {
  std::vector<Region> regions;
  for (const Json& region : require_field(value, "regions")) {
    regions.push_back(region_from_json(region));
  }
  RegionFamily family(std::move(regions), universe.interior());
  validate_family(universe, family);
  return family;
}

Json universe_to_json(const Universe& universe, const RegionFamily& family) {
  Json result;
  result["q"] = universe.state_count();
  result["sites"] = universe.site_count();
  Json edges = Json::array();
  for (const auto& [a, b] : universe.edges()) edges.push_back(Json::array({a, b}));
  result["edges"] = std::move(edges);
  result["boundary_core"] = region_to_json(universe.boundary_core());
  Json regions = Json::array();
  for (const Region& region : family.regions()) regions.push_back(region_to_json(region));
  result["regions"] = std::move(regions);
  return result;
}

Hamiltonian hamiltonian_from_json(const Universe& universe, const Json& value) {
  std::vector<std::vector<Rational>> fields;
  for (const Json& row : require_field(value, "field")) {
    std::vector<Rational> entries;
    for (const Json& entry : row) entries.push_back(rational_from_json(entry));
    fields.push_back(std::move(entries));
  }
  std::map<std::pair<int, int>, Hamiltonian::CouplingMatrix> couplings;
  if (value.contains("couplings")) {
    for (const Json& coupling : value["couplings"]) {
      const Json& edge = require_field(coupling, "edge");
      Hamiltonian::CouplingMatrix matrix;
      for (const Json& row : require_field(coupling, "matrix")) {
        std::vector<Rational> entries;
        for (const Json& entry : row) entries.push_back(rational_from_json(entry));
        matrix.push_back(std::move(entries));
      }
      couplings[{edge[0].get<int>(), edge[1].get<int>()}] = std::move(matrix);
    }
  }
  return Hamiltonian(universe, std::move(fields), std::move(couplings));
}

Json hamiltonian_to_json(const Universe&, const Hamiltonian& hamiltonian) {
  Json result;
  Json field = Json::array();
  for (const auto& row : hamiltonian.site_fields()) {
    Json entries = Json::array();
    for (const Rational& entry : row) entries.push_back(rational_to_json(entry));
    field.push_back(std::move(entries));
  }
  result["field"] = std::move(field);
  Json couplings = Json::array();
  for (const auto& [edge, matrix] : hamiltonian.couplings()) {
    Json item;
    item["edge"] = Json::array({edge.first, edge.second});
    Json rows = Json::array();
    for (const auto& row : matrix) {
      Json entries = Json::array();
      for (const Rational& entry : row) entries.push_back(rational_to_json(entry));
      rows.push_back(std::move(entries));
    }
    item["matrix"] = std::move(rows);
    couplings.push_back(std::move(item));
  }
  result["couplings"] = std::move(couplings);
  return result;
}

ReferenceMeasure reference_from_json(const Universe& universe, const Json& value,
                                     Backend backend) {
  const std::string kind = require_field(value, "kind").get<std::string>();
  if (kind == "uniform") return ReferenceMeasure::uniform(universe);
  if (kind == "gibbs") {
    const Hamiltonian hamiltonian =
        hamiltonian_from_json(universe, require_field(value, "hamiltonian"));
    return gibbs_reference(universe, hamiltonian,
                           rational_from_json(require_field(value, "beta")), backend);
  }
  if (kind == "explicit") {
    std::vector<Scalar> weights;
    for (const Json& weight : require_field(value, "weights")) {
      weights.push_back(scalar_from_json(weight));
    }
    return ReferenceMeasure::from_weights(universe, std::move(weights));
  }
  throw std::invalid_argument("unknown reference kind \"" + kind + "\"");
}

LocalObservable observable_from_json(const Universe& universe, const Json& value) {
  std::vector<Scalar> table;
  for (const Json& entry : require_field(value, "table")) {
    table.push_back(scalar_from_json(entry));
  }
  return LocalObservable(universe, region_from_json(require_field(value, "system")),
                         std::move(table));
}

Json observable_to_json(const LocalObservable& observable) {
  Json result;
  result["system"] = region_to_json(observable.system());
  Json table = Json::array();
  for (const Scalar& entry : observable.table()) table.push_back(scalar_to_json(entry));
  result["table"] = std::move(table);
  return result;
}

LocalState state_from_json(const Universe& universe, const Json& value) {
  std::vector<Scalar> weights;
  for (const Json& weight : require_field(value, "weights")) {
    weights.push_back(scalar_from_json(weight));
  }
  return LocalState(universe, region_from_json(require_field(value, "system")),
                    std::move(weights));
}

Json state_to_json(const LocalState& state) {
  Json result;
  result["system"] = region_to_json(state.system());
  Json weights = Json::array();
  for (const Scalar& weight : state.weights()) weights.push_back(scalar_to_json(weight));
  result["weights"] = std::move(weights);
  return result;
}

Thread thread_from_json(const Universe& universe, const RegionFamily& family,
                        const Json& value) {
  std::map<Region, LocalState> components;
  for (const Json& component : require_field(value, "components")) {
    LocalState state = state_from_json(universe, component);
    const Region system = state.system();
    components.emplace(system, std::move(state));
  }
  return Thread(family, std::move(components));
}

Json thread_to_json(const Thread& thread) {
  Json components = Json::array();
  for (const Region& region : thread.family().regions()) {
    components.push_back(state_to_json(thread.component(region)));
  }
  Json result;
  result["components"] = std::move(components);
  return result;
}

QuasilocalElement quasilocal_from_json(const Universe& universe, const Json& value) {
  std::vector<Summand> summands;
  for (const Json& summand : require_field(value, "summands")) {
    LocalObservable observable = observable_from_json(universe, summand);
    const Region tag = observable.system();
    summands.push_back(Summand{tag, std::move(observable)});
  }
  return QuasilocalElement(std::move(summands));
}

Json quasilocal_to_json(const QuasilocalElement& element) {
  Json summands = Json::array();
  for (const Summand& summand : element.summands()) {
    summands.push_back(observable_to_json(summand.observable));
  }
  Json result;
  result["summands"] = std::move(summands);
  return result;
}

std::vector<StateVector> generators_from_json(const Json& value) {
  std::vector<StateVector> generators;
  for (const Json& generator : require_field(value, "generators")) {
    StateVector vector;
    for (const Json& weight : generator) vector.push_back(scalar_from_json(weight));
    validate_state_vector(vector);
    generators.push_back(std::move(vector));
  }
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  return generators;
}

Json state_vector_to_json(const StateVector& vector) {
  Json result = Json::array();
  for (const Scalar& weight : vector) result.push_back(scalar_to_json(weight));
  return result;
}

LatticeSymmetry symmetry_from_json(const Universe& universe, const Json& value) {
  std::vector<int> site_perm;
  for (const Json& site : require_field(value, "site_perm")) site_perm.push_back(site.get<int>());
  std::vector<int> state_perm;
  for (const Json& state : require_field(value, "state_perm")) {
    state_perm.push_back(state.get<int>());
  }
  return LatticeSymmetry(universe, std::move(site_perm), std::move(state_perm));
}

Json symmetry_to_json(const LatticeSymmetry& symmetry) {
  Json result;
  Json site_perm = Json::array();
  for (int site : symmetry.site_permutation()) site_perm.push_back(site);
  result["site_perm"] = std::move(site_perm);
  Json state_perm = Json::array();
  for (int state : symmetry.state_permutation()) state_perm.push_back(state);
  result["state_perm"] = std::move(state_perm);
  return result;
}

}  // namespace latticealg
