#ifndef LATTICEALG_GEOMETRY_HPP
#define LATTICEALG_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "latticealg/morphism.hpp"
#include "latticealg/parallel.hpp"
#include "latticealg/quasilocal.hpp"
#include "latticealg/scalar.hpp"

namespace latticealg {

/// Coordinates of an algebraic state: probability weights over the boundary
/// core configurations.
using StateVector = std::vector<Scalar>;

/// Throws std::invalid_argument unless the vector is nonnegative and sums to 1.
void validate_state_vector(const StateVector& vector);

/**
 * Exact simplex method for  min c.x  s.t.  A x = b, x >= 0,  with Bland's
 * rule, over the library's exact scalars. Two-phase; returns infeasible
 * instead of throwing. The feasible sets used here are bounded, so an
 * unbounded phase-2 ray raises std::logic_error.
 */
struct LpResult {
  bool feasible = false;
  std::vector<Scalar> point;
  Scalar objective;
};

LpResult solve_lp(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                  const std::vector<Scalar>& c);

/// Minimal sub-list of generators with the same convex hull, decided per
/// candidate by exact LP; returned in lexicographic order.
std::vector<StateVector> extreme_points(const std::vector<StateVector>& generators,
                                        Backend backend = Backend::Serial);

/// A compact convex set of states in V-representation, with its irredundant
/// vertex list precomputed in canonical (lexicographic) order.
class StatePolytope {
 public:
  explicit StatePolytope(std::vector<StateVector> generators,
                         Backend backend = Backend::Serial);

  const std::vector<StateVector>& generators() const { return generators_; }
  const std::vector<StateVector>& vertices() const { return vertices_; }
  std::size_t ambient_dimension() const { return dimension_; }

 private:
  std::vector<StateVector> generators_;
  std::vector<StateVector> vertices_;
  std::size_t dimension_;
};

/// Exact membership of a point in the hull.
bool membership(const StateVector& point, const StatePolytope& polytope);

struct ChoquetDecomposition {
  /// Weights over polytope.vertices() resolving the point as their mixture.
  std::vector<Scalar> weights;
  /// True exactly when the polytope is a simplex (then the weights are the
  /// barycentric coordinates and no other resolution exists).
  bool unique = false;
};

/// Throws std::invalid_argument when the point lies outside the polytope.
ChoquetDecomposition choquet_decompose(const StateVector& point, const StatePolytope& polytope);

/// One decomposition minimizing objective.weights; used to exhibit distinct
/// resolutions on non-simplex polytopes.
std::vector<Scalar> decompose_with_objective(const StateVector& point,
                                             const StatePolytope& polytope,
                                             const std::vector<Scalar>& objective);

/// Affine independence of the vertex list, by exact rank.
bool is_simplex(const StatePolytope& polytope);

/// Empirical uniqueness: minimize and maximize every vertex weight over the
/// decomposition polytope of `point`; unique iff all extremes coincide.
bool probe_unique_decomposition(const StateVector& point, const StatePolytope& polytope);

/// Element of the function algebra over the vertex set: one value per vertex
/// of the chosen polytope, in the polytope's canonical vertex order.
class CxFunction {
 public:
  explicit CxFunction(std::vector<Scalar> values);

  static CxFunction constant(std::size_t size, const Scalar& value);
  static CxFunction indicator(std::size_t size, const std::vector<std::size_t>& support);

  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Scalar& value(std::size_t index) const { return values_.at(index); }

  bool is_idempotent() const;

  bool operator==(const CxFunction& other) const = default;

 private:
  std::vector<Scalar> values_;
};

/// Pointwise product; the vector multiplication of the function algebra.
CxFunction multiply(const CxFunction& f, const CxFunction& g);
CxFunction cx_join(const CxFunction& f, const CxFunction& g);
CxFunction cx_meet(const CxFunction& f, const CxFunction& g);

/// Probability weights over the vertex set (a state on the function algebra).
class CxState {
 public:
  explicit CxState(std::vector<Scalar> weights);

  static CxState point_mass(std::size_t size, std::size_t at);

  const std::vector<Scalar>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<Scalar> weights_;
};

/// True iff the state is multiplicative on the indicator basis (equivalently
/// a point mass, equivalently extremal).
bool is_multiplicative(const CxState& state);

Scalar cx_expectation(const CxState& state, const CxFunction& function);

/// The composite representation map: evaluate the normal form of an element
/// against every vertex of the polytope.
CxFunction kadison(const QuasilocalElement& element, const StatePolytope& polytope,
                   const MorphismFamily& fam);

}  // namespace latticealg

#endif  // LATTICEALG_GEOMETRY_HPP
