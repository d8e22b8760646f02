#include "latticealg/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace latticealg {

void validate_state_vector(const StateVector& vector) {
  Scalar total(0);
  for (const Scalar& w : vector) {
    if (w.sign() < 0) {
      throw std::invalid_argument("state vector has a negative weight " + w.to_string());
    }
    total += w;
  }
  if (total != Scalar(1)) {
    throw std::invalid_argument("state vector sums to " + total.to_string() + ", expected 1");
  }
}

// ---------------------------------------------------------------------------
// Exact two-phase simplex with Bland's rule
// ---------------------------------------------------------------------------

namespace {

class SimplexTableau {
 public:
  SimplexTableau(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b)
      : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()) {
    table_.assign(rows_, std::vector<Scalar>(cols_ + rows_ + 1, Scalar(0)));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i].sign() < 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        table_[i][j] = flip ? -a[i][j] : a[i][j];
      }
      table_[i][cols_ + i] = Scalar(1);
      table_[i].back() = flip ? -b[i] : b[i];
      basis_[i] = cols_ + i;
    }
  }

  // Minimizes sum of artificials; true when a basic feasible solution of the
  // original system exists.
  bool run_phase_one() {
    std::vector<Scalar> cost(cols_ + rows_, Scalar(0));
    for (std::size_t j = cols_; j < cols_ + rows_; ++j) cost[j] = Scalar(1);
    const Scalar optimum = optimize(cost, /*allow_artificial=*/true);
    if (optimum.sign() != 0) return false;
    evict_artificials();
    return true;
  }

  Scalar run_phase_two(const std::vector<Scalar>& objective) {
    std::vector<Scalar> cost(cols_ + rows_, Scalar(0));
    for (std::size_t j = 0; j < cols_; ++j) cost[j] = objective[j];
    return optimize(cost, /*allow_artificial=*/false);
  }

  std::vector<Scalar> solution() const {
    std::vector<Scalar> point(cols_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_ && !dropped(i)) point[basis_[i]] = table_[i].back();
    }
    return point;
  }

 private:
  bool dropped(std::size_t row) const { return basis_[row] == kDroppedRow; }

  static constexpr std::size_t kDroppedRow = static_cast<std::size_t>(-1);

  void pivot(std::size_t row, std::size_t col) {
    const Scalar factor = table_[row][col];
    for (Scalar& value : table_[row]) value /= factor;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || table_[i][col].is_zero()) continue;
      const Scalar multiple = table_[i][col];
      for (std::size_t j = 0; j < table_[i].size(); ++j) {
        table_[i][j] -= multiple * table_[row][j];
      }
    }
    basis_[row] = col;
  }

  // Bland's anticycling rule: entering = lowest-index improving column,
  // leaving = ratio-test tie broken by the lowest basis index.
  Scalar optimize(const std::vector<Scalar>& cost, bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ + rows_ : cols_;
    while (true) {
      std::vector<Scalar> reduced = reduced_costs(cost);
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) break;

      std::size_t leaving = rows_;
      Scalar best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (dropped(i) || table_[i][entering].sign() <= 0) continue;
        const Scalar ratio = table_[i].back() / table_[i][entering];
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) {
        throw std::logic_error("simplex: objective unbounded on a bounded feasible set");
      }
      pivot(leaving, entering);
    }

    Scalar value(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!dropped(i)) value += cost[basis_[i]] * table_[i].back();
    }
    return value;
  }

  std::vector<Scalar> reduced_costs(const std::vector<Scalar>& cost) const {
    std::vector<Scalar> reduced = cost;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (dropped(i)) continue;
      const Scalar basis_cost = cost[basis_[i]];
      if (basis_cost.is_zero()) continue;
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        if (!table_[i][j].is_zero()) reduced[j] -= basis_cost * table_[i][j];
      }
    }
    return reduced;
  }

  // After phase one, pivot artificial variables out of the basis; a row with
  // no original-column support is redundant and gets dropped.
  void evict_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (dropped(i) || basis_[i] < cols_) continue;
      std::size_t col = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!table_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == cols_) {
        basis_[i] = kDroppedRow;
      } else {
        pivot(i, col);
      }
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> table_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                  const std::vector<Scalar>& c) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_lp: row count mismatch");
  for (const auto& row : a) {
    if (row.size() != c.size()) throw std::invalid_argument("solve_lp: column count mismatch");
  }
  SimplexTableau tableau(a, b);
  LpResult result;
  if (!tableau.run_phase_one()) return result;
  result.feasible = true;
  result.objective = tableau.run_phase_two(c);
  result.point = tableau.solution();
  return result;
}

// ---------------------------------------------------------------------------
// Polytopes
// ---------------------------------------------------------------------------

namespace {

// Feasibility of  sum w_i candidates[i] = point, sum w_i = 1, w >= 0.
LpResult mixture_lp(const std::vector<const StateVector*>& candidates, const StateVector& point,
                    const std::vector<Scalar>* objective) {
  const std::size_t dim = point.size();
  const std::size_t count = candidates.size();
  std::vector<std::vector<Scalar>> a(dim + 1, std::vector<Scalar>(count, Scalar(0)));
  std::vector<Scalar> b(dim + 1, Scalar(0));
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t j = 0; j < count; ++j) a[d][j] = (*candidates[j])[d];
    b[d] = point[d];
  }
  for (std::size_t j = 0; j < count; ++j) a[dim][j] = Scalar(1);
  b[dim] = Scalar(1);
  std::vector<Scalar> c =
      objective ? *objective : std::vector<Scalar>(count, Scalar(0));
  return solve_lp(a, b, c);
}

bool lexicographic_less(const StateVector& a, const StateVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int cmp = (a[i] - b[i]).sign();
    if (cmp != 0) return cmp < 0;
  }
  return a.size() < b.size();
}

}  // namespace

std::vector<StateVector> extreme_points(const std::vector<StateVector>& generators,
                                        Backend backend) {
  if (generators.empty()) {
    throw std::invalid_argument("extreme_points: need at least one generator");
  }
  const std::size_t dim = generators[0].size();
  for (const StateVector& g : generators) {
    if (g.size() != dim) {
      throw std::invalid_argument("extreme_points: generators of mixed dimension");
    }
  }

  // Deduplicate first so twins cannot eliminate each other.
  std::vector<StateVector> unique_gens;
  for (const StateVector& g : generators) {
    bool seen = false;
    for (const StateVector& u : unique_gens) {
      if (u == g) {
        seen = true;
        break;
      }
    }
    if (!seen) unique_gens.push_back(g);
  }

  std::vector<char> keep(unique_gens.size(), 0);
  parallel_for(unique_gens.size(), backend, [&](std::size_t i) {
    std::vector<const StateVector*> others;
    others.reserve(unique_gens.size() - 1);
    for (std::size_t j = 0; j < unique_gens.size(); ++j) {
      if (j != i) others.push_back(&unique_gens[j]);
    }
    keep[i] = others.empty() || !mixture_lp(others, unique_gens[i], nullptr).feasible;
  });

  std::vector<StateVector> vertices;
  for (std::size_t i = 0; i < unique_gens.size(); ++i) {
    if (keep[i]) vertices.push_back(unique_gens[i]);
  }
  std::sort(vertices.begin(), vertices.end(), lexicographic_less);
  return vertices;
}

StatePolytope::StatePolytope(std::vector<StateVector> generators, Backend backend)
    : generators_(std::move(generators)) {
  vertices_ = extreme_points(generators_, backend);
  dimension_ = vertices_.empty() ? 0 : vertices_[0].size();
}

bool membership(const StateVector& point, const StatePolytope& polytope) {
  if (point.size() != polytope.ambient_dimension()) {
    throw std::invalid_argument("membership: dimension mismatch");
  }
  std::vector<const StateVector*> candidates;
  for (const StateVector& v : polytope.vertices()) candidates.push_back(&v);
  return mixture_lp(candidates, point, nullptr).feasible;
}

namespace {

// Unique barycentric coordinates on a simplex, by exact elimination of the
// (dim+1) x m system [vertices; 1] w = [point; 1].
std::vector<Scalar> barycentric_coordinates(const StateVector& point,
                                            const std::vector<StateVector>& vertices) {
  const std::size_t dim = point.size();
  const std::size_t count = vertices.size();
  std::vector<std::vector<Scalar>> m(dim + 1, std::vector<Scalar>(count + 1, Scalar(0)));
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t j = 0; j < count; ++j) m[d][j] = vertices[j][d];
    m[d][count] = point[d];
  }
  for (std::size_t j = 0; j < count; ++j) m[dim][j] = Scalar(1);
  m[dim][count] = Scalar(1);

  std::size_t row = 0;
  for (std::size_t col = 0; col < count && row <= dim; ++col) {
    std::size_t pivot = row;
    while (pivot <= dim && m[pivot][col].is_zero()) ++pivot;
    if (pivot > dim) {
      throw std::logic_error("barycentric_coordinates: vertices not affinely independent");
    }
    std::swap(m[row], m[pivot]);
    const Scalar factor = m[row][col];
    for (Scalar& value : m[row]) value /= factor;
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Scalar multiple = m[i][col];
      for (std::size_t j = col; j <= count; ++j) m[i][j] -= multiple * m[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i <= dim; ++i) {
    if (!m[i][count].is_zero()) {
      throw std::invalid_argument("barycentric_coordinates: point outside the affine hull");
    }
  }
  std::vector<Scalar> weights(count, Scalar(0));
  for (std::size_t col = 0; col < count; ++col) {
    weights[col] = m[col][count];
  }
  return weights;
}

}  // namespace

ChoquetDecomposition choquet_decompose(const StateVector& point,
                                       const StatePolytope& polytope) {
  if (!membership(point, polytope)) {
    throw std::invalid_argument("choquet_decompose: point lies outside the polytope");
  }
  ChoquetDecomposition result;
  result.unique = is_simplex(polytope);
  if (result.unique) {
    result.weights = barycentric_coordinates(point, polytope.vertices());
  } else {
    std::vector<const StateVector*> candidates;
    for (const StateVector& v : polytope.vertices()) candidates.push_back(&v);
    result.weights = mixture_lp(candidates, point, nullptr).point;
  }
  return result;
}

std::vector<Scalar> decompose_with_objective(const StateVector& point,
                                             const StatePolytope& polytope,
                                             const std::vector<Scalar>& objective) {
  if (objective.size() != polytope.vertices().size()) {
    throw std::invalid_argument("decompose_with_objective: objective size mismatch");
  }
  std::vector<const StateVector*> candidates;
  for (const StateVector& v : polytope.vertices()) candidates.push_back(&v);
  const LpResult lp = mixture_lp(candidates, point, &objective);
  if (!lp.feasible) {
    throw std::invalid_argument("decompose_with_objective: point lies outside the polytope");
  }
  return lp.point;
}

bool is_simplex(const StatePolytope& polytope) {
  const auto& vertices = polytope.vertices();
  const std::size_t count = vertices.size();
  const std::size_t dim = polytope.ambient_dimension();
  if (count > dim + 1) return false;

  // Rank of the (dim+1) x count matrix [vertices; 1] must be full column rank.
  std::vector<std::vector<Scalar>> m(dim + 1, std::vector<Scalar>(count, Scalar(0)));
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t j = 0; j < count; ++j) m[d][j] = vertices[j][d];
  }
  for (std::size_t j = 0; j < count; ++j) m[dim][j] = Scalar(1);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < count; ++col) {
    std::size_t pivot = rank;
    while (pivot <= dim && m[pivot][col].is_zero()) ++pivot;
    if (pivot > dim) return false;  // dependent column
    std::swap(m[rank], m[pivot]);
    const Scalar factor = m[rank][col];
    for (std::size_t j = col; j < count; ++j) m[rank][j] /= factor;
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const Scalar multiple = m[i][col];
      for (std::size_t j = col; j < count; ++j) m[i][j] -= multiple * m[rank][j];
    }
    ++rank;
  }
  return rank == count;
}

bool probe_unique_decomposition(const StateVector& point, const StatePolytope& polytope) {
  const std::size_t count = polytope.vertices().size();
  std::vector<Scalar> reference;
  for (std::size_t i = 0; i < count; ++i) {
    for (const int direction : {+1, -1}) {
      std::vector<Scalar> objective(count, Scalar(0));
      objective[i] = Scalar(direction);
      const std::vector<Scalar> w = decompose_with_objective(point, polytope, objective);
      if (reference.empty()) {
        reference = w;
      } else if (w != reference) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// The function algebra over the vertex set
// ---------------------------------------------------------------------------

CxFunction::CxFunction(std::vector<Scalar> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("CxFunction: empty vertex set");
}

CxFunction CxFunction::constant(std::size_t size, const Scalar& value) {
  return CxFunction(std::vector<Scalar>(size, value));
}

CxFunction CxFunction::indicator(std::size_t size, const std::vector<std::size_t>& support) {
  std::vector<Scalar> values(size, Scalar(0));
  for (std::size_t index : support) values.at(index) = Scalar(1);
  return CxFunction(std::move(values));
}

bool CxFunction::is_idempotent() const {
  for (const Scalar& v : values_) {
    if (!v.is_zero() && v != Scalar(1)) return false;
  }
  return true;
}

namespace {

void require_same_vertex_set(const CxFunction& f, const CxFunction& g, const char* what) {
  if (f.size() != g.size()) {
    throw std::invalid_argument(std::string(what) + ": mismatched vertex sets");
  }
}

}  // namespace

CxFunction multiply(const CxFunction& f, const CxFunction& g) {
  require_same_vertex_set(f, g, "multiply");
  std::vector<Scalar> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = f.value(i) * g.value(i);
  return CxFunction(std::move(values));
}

CxFunction cx_join(const CxFunction& f, const CxFunction& g) {
  require_same_vertex_set(f, g, "cx_join");
  std::vector<Scalar> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = max(f.value(i), g.value(i));
  return CxFunction(std::move(values));
}

CxFunction cx_meet(const CxFunction& f, const CxFunction& g) {
  require_same_vertex_set(f, g, "cx_meet");
  std::vector<Scalar> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = min(f.value(i), g.value(i));
  return CxFunction(std::move(values));
}

CxState::CxState(std::vector<Scalar> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("CxState: empty vertex set");
  validate_state_vector(weights_);
}

CxState CxState::point_mass(std::size_t size, std::size_t at) {
  std::vector<Scalar> weights(size, Scalar(0));
  weights.at(at) = Scalar(1);
  return CxState(std::move(weights));
}

bool is_multiplicative(const CxState& state) {
  // Check the product law on the indicator basis: zeta(chi_x * chi_y) must
  // equal zeta(chi_x) zeta(chi_y). Diagonal: w_x = w_x^2; off-diagonal:
  // w_x w_y = 0.
  const auto& w = state.weights();
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (w[x] * w[x] != w[x]) return false;
    for (std::size_t y = x + 1; y < w.size(); ++y) {
      if (!(w[x] * w[y]).is_zero()) return false;
    }
  }
  return true;
}

Scalar cx_expectation(const CxState& state, const CxFunction& function) {
  if (state.size() != function.size()) {
    throw std::invalid_argument("cx_expectation: mismatched vertex sets");
  }
  Scalar total(0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    total += state.weights()[i] * function.value(i);
  }
  return total;
}

CxFunction kadison(const QuasilocalElement& element, const StatePolytope& polytope,
                   const MorphismFamily& fam) {
  const LocalObservable nf = normal_form(element, fam);
  if (polytope.ambient_dimension() != nf.table().size()) {
    throw std::invalid_argument(
        "kadison: polytope coordinates do not match the boundary configuration count");
  }
  std::vector<Scalar> values;
  values.reserve(polytope.vertices().size());
  for (const StateVector& vertex : polytope.vertices()) {
    Scalar total(0);
    for (std::size_t y = 0; y < vertex.size(); ++y) {
      total += vertex[y] * nf.table()[y];
    }
    values.push_back(std::move(total));
  }
  return CxFunction(std::move(values));
}

}  // namespace latticealg
