#include "latticealg/morphism.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace latticealg {

ReferenceMeasure ReferenceMeasure::uniform(const Universe& universe) {
  const std::uint64_t count = configuration_count(universe, universe.all_sites());
  const Scalar weight = Scalar(1) / Scalar(Rational(BigInt(count)));
  return ReferenceMeasure(std::vector<Scalar>(count, weight));
}

ReferenceMeasure ReferenceMeasure::from_weights(const Universe& universe,
                                                std::vector<Scalar> weights) {
  const std::uint64_t count = configuration_count(universe, universe.all_sites());
  if (weights.size() != count) {
    throw std::invalid_argument("ReferenceMeasure: expected " + std::to_string(count) +
                                " weights, got " + std::to_string(weights.size()));
  }
  Scalar total(0);
  for (const Scalar& w : weights) {
    if (w.sign() <= 0) {
      throw std::invalid_argument("ReferenceMeasure: weights must be strictly positive");
    }
    total += w;
  }
  if (total != Scalar(1)) {
    throw std::invalid_argument("ReferenceMeasure: weights must sum to 1, got " +
                                total.to_string());
  }
  return ReferenceMeasure(std::move(weights));
}

std::vector<Scalar> marginal_weights(const Universe& universe,
                                     const std::vector<Scalar>& full_weights,
                                     const Region& region, Backend backend) {
  const Region& window = universe.all_sites();
  const std::uint64_t full_count = configuration_count(universe, window);
  if (full_weights.size() != full_count) {
    throw std::invalid_argument("marginal_weights: weight vector does not cover the window");
  }
  const std::uint64_t bucket_count = configuration_count(universe, region);
  return bucket_reduce<Scalar>(
      full_count, bucket_count, backend,
      [&](std::size_t index, std::vector<Scalar>& buckets) {
        buckets[restrict_code(universe, window, index, region)] += full_weights[index];
      },
      [](Scalar& into, const Scalar& from) { into += from; });
}

MorphismFamily::MorphismFamily(Universe universe, RegionFamily family, ReferenceMeasure reference,
                               Backend backend)
    : universe_(std::move(universe)),
      family_(std::move(family)),
      reference_(std::move(reference)) {
  validate_family(universe_, family_);
  const std::uint64_t count = configuration_count(universe_, universe_.all_sites());
  if (reference_.weights().size() != count) {
    throw std::invalid_argument("MorphismFamily: reference does not cover the window");
  }
  for (const Region& system : family_.regions()) {
    const Region outside = universe_.outside(system);
    if (!marginals_.count(outside)) {
      marginals_.emplace(outside,
                         marginal_weights(universe_, reference_.weights(), outside, backend));
    }
  }
}

std::vector<Scalar> MorphismFamily::marginal_on(const Region& region) const {
  auto it = marginals_.find(region);
  if (it != marginals_.end()) return it->second;
  return marginal_weights(universe_, reference_.weights(), region);
}

MorphismFamily MorphismFamily::with_tampered_kernel(const Region& s, const Region& t,
                                                    std::uint64_t annulus_code,
                                                    Scalar factor) const {
  MorphismFamily copy = *this;
  copy.tampers_.push_back(KernelTamper{s, t, annulus_code, std::move(factor)});
  return copy;
}

Scalar MorphismFamily::kernel_scale(const Region& s, const Region& t,
                                    std::uint64_t annulus_code) const {
  Scalar scale(1);
  for (const KernelTamper& tamper : tampers_) {
    if (tamper.s == s && tamper.t == t && tamper.annulus_code == annulus_code) {
      scale *= tamper.factor;
    }
  }
  return scale;
}

LocalObservable lift(const LocalObservable& f, const Region& t, const MorphismFamily& fam) {
  const Universe& universe = fam.universe();
  const Region& s = f.system();
  if (!fam.family().contains(s) || !fam.family().contains(t)) {
    throw std::invalid_argument("lift: systems must belong to the region family");
  }
  if (!s.subset_of(t)) {
    throw std::invalid_argument("lift: " + s.to_string() + " is not below " + t.to_string());
  }
  if (s == t) return f;

  const Region annulus = t.difference(s);
  const Region outer = universe.outside(t);
  const std::vector<Scalar> small_marginal = fam.marginal_on(f.outside());
  const std::vector<Scalar> outer_marginal = fam.marginal_on(outer);

  const std::uint64_t outer_count = configuration_count(universe, outer);
  const std::uint64_t annulus_count = configuration_count(universe, annulus);
  std::vector<Scalar> table(outer_count);
  for (std::uint64_t y = 0; y < outer_count; ++y) {
    Scalar acc(0);
    for (std::uint64_t a = 0; a < annulus_count; ++a) {
      const std::uint64_t z = merge_code(universe, annulus, a, outer, y);
      acc += fam.kernel_scale(s, t, a) * small_marginal[z] * f.table()[z];
    }
    table[y] = acc / outer_marginal[y];
  }
  return LocalObservable(universe, t, std::move(table));
}

namespace {

std::string describe_violation(const char* law, const Region& r, const Region& s,
                               const Region& t, const Configuration& event) {
  std::ostringstream out;
  out << law << " violated for " << r.to_string() << " <= " << s.to_string()
      << " <= " << t.to_string() << " at event code " << event.code;
  return out.str();
}

}  // namespace

MorphismAxiomReport verify_morphism_axioms(const MorphismFamily& fam) {
  MorphismAxiomReport report;
  const Universe& universe = fam.universe();
  const auto& regions = fam.family().regions();

  // (ii) s = t must act as the identity on a spanning set of indicators.
  for (const Region& t : regions) {
    for (const Configuration& event : enumerate_configurations(universe, universe.outside(t))) {
      const LocalObservable f = LocalObservable::indicator(universe, t, event);
      if (!(lift(f, t, fam) == f)) {
        report.identity_violations.push_back(
            describe_violation("identity", t, t, t, event));
      }
    }
  }

  // (i) observables measurable in the bigger system are fixed points.
  for (const Region& s : regions) {
    for (const Region& t : regions) {
      if (s == t || !s.subset_of(t)) continue;
      for (const Configuration& event :
           enumerate_configurations(universe, universe.outside(t))) {
        const LocalObservable small = LocalObservable::indicator(universe, s, event);
        const LocalObservable large = LocalObservable::indicator(universe, t, event);
        if (!(lift(small, t, fam) == large)) {
          report.fixed_point_violations.push_back(
              describe_violation("fixed point", s, s, t, event));
        }
      }
    }
  }

  // (iii) composition along every chain, on point indicators of the lowest
  // outside (these span the whole local algebra).
  for (const Region& r : regions) {
    for (const Region& s : regions) {
      if (!r.subset_of(s)) continue;
      for (const Region& t : regions) {
        if (!s.subset_of(t)) continue;
        for (const Configuration& event :
             enumerate_configurations(universe, universe.outside(r))) {
          const LocalObservable f = LocalObservable::indicator(universe, r, event);
          if (!(lift(lift(f, s, fam), t, fam) == lift(f, t, fam))) {
            report.composition_violations.push_back(
                describe_violation("composition", r, s, t, event));
          }
        }
      }
    }
  }

  return report;
}

}  // namespace latticealg
