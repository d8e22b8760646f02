#ifndef LATTICEALG_TESTS_SUPPORT_HPP
#define LATTICEALG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "latticealg/gibbs.hpp"
#include "latticealg/morphism.hpp"
#include "latticealg/observable.hpp"
#include "latticealg/state.hpp"

namespace latticealg::testing {

// Fixture A: path 0-1-2-3, q = 2, boundary core {3},
// family {{}, {0}, {0,1}, {0,1,2}} with top {0,1,2}.
inline Universe fixture_a() {
  return Universe(4, 2, {{0, 1}, {1, 2}, {2, 3}}, Region({3}));
}

inline RegionFamily family_a() {
  return RegionFamily({Region({}), Region({0}), Region({0, 1}), Region({0, 1, 2})},
                      Region({0, 1, 2}));
}

// Fixture B: path 0-1-2-3-4, q = 2, boundary core {3,4}, same family shape.
inline Universe fixture_b() {
  return Universe(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, Region({3, 4}));
}

inline RegionFamily family_b() {
  return RegionFamily({Region({}), Region({0}), Region({0, 1}), Region({0, 1, 2})},
                      Region({0, 1, 2}));
}

/// Deterministic generator for random rational data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  Rational rational(int magnitude = 6, int max_denominator = 5) {
    const int num = integer(-magnitude, magnitude);
    const int den = integer(1, max_denominator);
    return Rational(num, den);
  }

  Rational positive_rational(int magnitude = 6, int max_denominator = 5) {
    const int num = integer(1, magnitude);
    const int den = integer(1, max_denominator);
    return Rational(num, den);
  }

  /// Strictly positive rationals, exactly normalized.
  std::vector<Scalar> probability_vector(std::size_t size) {
    std::vector<Rational> raw(size);
    Rational total(0);
    for (Rational& value : raw) {
      value = positive_rational();
      total += value;
    }
    std::vector<Scalar> result(size);
    for (std::size_t i = 0; i < size; ++i) result[i] = Scalar(raw[i] / total);
    return result;
  }

  std::vector<Scalar> signed_vector(std::size_t size, int magnitude = 6) {
    std::vector<Scalar> result(size);
    for (Scalar& value : result) value = Scalar(rational(magnitude));
    return result;
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent oracle for the lift: conditional expectation by full-window
/// enumeration, never touching marginal tables or kernels.
///
///   E[f | Outside(t) = y] = sum_{x ~ y} w(x) f(x|Out(s)) / sum_{x ~ y} w(x)
inline Scalar brute_lift_value(const Universe& universe, const ReferenceMeasure& reference,
                               const LocalObservable& f, const Region& t, std::uint64_t y) {
  const Region& window = universe.all_sites();
  const Region outer = universe.outside(t);
  Scalar numerator(0);
  Scalar denominator(0);
  for (std::uint64_t x = 0; x < configuration_count(universe, window); ++x) {
    if (restrict_code(universe, window, x, outer) != y) continue;
    const Scalar& w = reference.weight(x);
    numerator += w * f.value_at(restrict_code(universe, window, x, f.outside()));
    denominator += w;
  }
  return numerator / denominator;
}

/// Independent oracle for thread components: the conditional extension of a
/// top state computed by brute-force conditioning of the reference.
inline Scalar brute_dual_weight(const Universe& universe, const ReferenceMeasure& reference,
                                const LocalState& top_state, const Region& s,
                                std::uint64_t z) {
  const Region& window = universe.all_sites();
  const Region small_outside = universe.outside(s);
  const Region core_outside = top_state.outside();
  const std::uint64_t y = restrict_code(universe, small_outside, z, core_outside);
  Scalar conditional_numerator(0);
  Scalar conditional_denominator(0);
  for (std::uint64_t x = 0; x < configuration_count(universe, window); ++x) {
    if (restrict_code(universe, window, x, core_outside) != y) continue;
    const Scalar& w = reference.weight(x);
    conditional_denominator += w;
    if (restrict_code(universe, window, x, small_outside) == z) {
      conditional_numerator += w;
    }
  }
  return conditional_numerator / conditional_denominator * top_state.weight(y);
}

}  // namespace latticealg::testing

#endif  // LATTICEALG_TESTS_SUPPORT_HPP
