#ifndef LATTICEALG_MORPHISM_HPP
#define LATTICEALG_MORPHISM_HPP

#include <map>
#include <string>
#include <vector>

#include "latticealg/observable.hpp"
#include "latticealg/parallel.hpp"
#include "latticealg/scalar.hpp"

namespace latticealg {

/**
 * Strictly positive probability weights over the full-window configurations.
 * Conditional kernels of such a measure generate the whole morphism family:
 * with uniform weights they reduce to plain annulus averaging, with Boltzmann
 * weights they realize Gibbs specifications.
 */
class ReferenceMeasure {
 public:
  static ReferenceMeasure uniform(const Universe& universe);
  /// Validates strict positivity and exact normalization.
  static ReferenceMeasure from_weights(const Universe& universe, std::vector<Scalar> weights);

  const std::vector<Scalar>& weights() const { return weights_; }
  const Scalar& weight(std::uint64_t full_code) const { return weights_.at(full_code); }

 private:
  explicit ReferenceMeasure(std::vector<Scalar> weights) : weights_(std::move(weights)) {}
  std::vector<Scalar> weights_;
};

/// Bucket sums of full-window weights onto the configurations of `region`.
std::vector<Scalar> marginal_weights(const Universe& universe,
                                     const std::vector<Scalar>& full_weights,
                                     const Region& region, Backend backend = Backend::Serial);

/**
 * The family of maps carrying a measurement on a small system to the
 * equivalent measurement on a larger one, generated by the conditional
 * kernels of a reference measure:
 *
 *   pi(annulus | outer) = marginal_{Out(s)}(annulus, outer) / marginal_{Out(t)}(outer)
 *
 * These satisfy the identity, fixed-point, and composition laws exactly by
 * the chain rule. Marginals over the outsides of the family's regions are
 * cached eagerly; the object is immutable afterwards.
 */
class MorphismFamily {
 public:
  MorphismFamily(Universe universe, RegionFamily family, ReferenceMeasure reference,
                 Backend backend = Backend::Serial);

  const Universe& universe() const { return universe_; }
  const RegionFamily& family() const { return family_; }
  const ReferenceMeasure& reference() const { return reference_; }

  /// Cached marginal over Outside(system) for a family region; computed on
  /// the spot (without mutating the cache) for other regions.
  std::vector<Scalar> marginal_on(const Region& region) const;

  /// Fault-injection seam: a copy whose kernel row weight pi(annulus | outer)
  /// for the (s, t) pair is rescaled at one annulus configuration, so that
  /// row no longer sums to one. Exercises the verdict paths; marginal-ratio
  /// kernels themselves can never violate the laws.
  MorphismFamily with_tampered_kernel(const Region& s, const Region& t,
                                      std::uint64_t annulus_code, Scalar factor) const;

  /// 1 except on a tampered row.
  Scalar kernel_scale(const Region& s, const Region& t, std::uint64_t annulus_code) const;

 private:
  struct KernelTamper {
    Region s;
    Region t;
    std::uint64_t annulus_code = 0;
    Scalar factor;
  };

  Universe universe_;
  RegionFamily family_;
  ReferenceMeasure reference_;
  std::map<Region, std::vector<Scalar>> marginals_;
  std::vector<KernelTamper> tampers_;
};

/// eta-hat: carries `f` on system s up to system t >= s in the family.
LocalObservable lift(const LocalObservable& f, const Region& t, const MorphismFamily& fam);

/// Forward declaration lives in state.hpp; the dual map on states is declared
/// there to keep the dependency one-way.

struct MorphismAxiomReport {
  std::vector<std::string> fixed_point_violations;  // (i) measurable observables move
  std::vector<std::string> identity_violations;     // (ii) s = t is not the identity
  std::vector<std::string> composition_violations;  // (iii) chain rule fails

  bool ok() const {
    return fixed_point_violations.empty() && identity_violations.empty() &&
           composition_violations.empty();
  }
};

/// Exhaustive exact check of the three morphism laws over the whole family,
/// on a spanning set of cylinder indicators.
MorphismAxiomReport verify_morphism_axioms(const MorphismFamily& fam);

}  // namespace latticealg

#endif  // LATTICEALG_MORPHISM_HPP
