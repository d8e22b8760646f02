#ifndef LATTICEALG_JSON_IO_HPP
#define LATTICEALG_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "latticealg/gibbs.hpp"
#include "latticealg/geometry.hpp"
#include "latticealg/morphism.hpp"
#include "latticealg/quasilocal.hpp"
#include "latticealg/state.hpp"
#include "latticealg/symmetry.hpp"

namespace latticealg {

/// Insertion-ordered JSON keeps report output byte-stable.
using Json = nlohmann::ordered_json;

/// Rationals travel as "p"/"p/q" strings; plain JSON integers are accepted.
Rational rational_from_json(const Json& value);
Json rational_to_json(const Rational& value);

/// Scalars serialize to their canonical text; only rational text parses back.
Scalar scalar_from_json(const Json& value);
Json scalar_to_json(const Scalar& value);

Region region_from_json(const Json& value);
Json region_to_json(const Region& region);

Universe universe_from_json(const Json& value);
RegionFamily family_from_json(const Universe& universe, const Json& value);
Json universe_to_json(const Universe& universe, const RegionFamily& family);

Hamiltonian hamiltonian_from_json(const Universe& universe, const Json& value);
Json hamiltonian_to_json(const Universe& universe, const Hamiltonian& hamiltonian);

/// {"kind":"uniform"} | {"kind":"gibbs","beta":...,"hamiltonian":...} |
/// {"kind":"explicit","weights":[...]}
ReferenceMeasure reference_from_json(const Universe& universe, const Json& value,
                                     Backend backend = Backend::Serial);

LocalObservable observable_from_json(const Universe& universe, const Json& value);
Json observable_to_json(const LocalObservable& observable);

LocalState state_from_json(const Universe& universe, const Json& value);
Json state_to_json(const LocalState& state);

Thread thread_from_json(const Universe& universe, const RegionFamily& family,
                        const Json& value);
Json thread_to_json(const Thread& thread);

QuasilocalElement quasilocal_from_json(const Universe& universe, const Json& value);
Json quasilocal_to_json(const QuasilocalElement& element);

std::vector<StateVector> generators_from_json(const Json& value);
Json state_vector_to_json(const StateVector& vector);

LatticeSymmetry symmetry_from_json(const Universe& universe, const Json& value);
Json symmetry_to_json(const LatticeSymmetry& symmetry);

}  // namespace latticealg

#endif  // LATTICEALG_JSON_IO_HPP
