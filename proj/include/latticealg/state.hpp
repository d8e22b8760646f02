#ifndef LATTICEALG_STATE_HPP
#define LATTICEALG_STATE_HPP

#include <map>
#include <string>
#include <vector>

#include "latticealg/morphism.hpp"
#include "latticealg/observable.hpp"

namespace latticealg {

/**
 * A linear functional on the local algebra of a system, represented by
 * signed weights over the outside configurations. At this finite scale the
 * dual of the sup-norm table space is exactly the total-variation weight
 * space, so norm identities hold with exact equality.
 */
class LocalFunctional {
 public:
  LocalFunctional(const Universe& universe, Region system, std::vector<Scalar> weights);

  const Region& system() const { return system_; }
  const Region& outside() const { return outside_; }
  const std::vector<Scalar>& weights() const { return weights_; }
  const Scalar& weight(std::uint64_t outside_code) const { return weights_.at(outside_code); }

  /// <mu, f> = sum_y w(y) f(y); throws on a system mismatch.
  Scalar pair(const LocalObservable& observable) const;

  /// Total-variation norm: sum of |w(y)|.
  Scalar norm() const;
  /// Pairing with the order unit: sum of w(y).
  Scalar unit_pairing() const;

  bool operator==(const LocalFunctional& other) const {
    return system_ == other.system_ && weights_ == other.weights_;
  }

 private:
  Region system_;
  Region outside_;
  std::vector<Scalar> weights_;
};

/// Positivity plus exact normalization. Also cross-checks the equivalent
/// norm characterization (norm = unit pairing = 1) and throws
/// std::logic_error if the two ever disagree.
bool is_state(const LocalFunctional& functional);

/// A local functional that is a state; validated at construction.
class LocalState : public LocalFunctional {
 public:
  LocalState(const Universe& universe, Region system, std::vector<Scalar> weights);

  /// Point functional at an outside configuration.
  static LocalState dirac(const Universe& universe, const Region& system,
                          const Configuration& at);
  static LocalState uniform(const Universe& universe, const Region& system);
};

/// eta: the dual morphism on states, carrying a state on t down to s <= t by
/// extending over the annulus with the family's conditional kernels.
LocalState dual(const LocalState& mu, const Region& s, const MorphismFamily& fam);

/// Signed version used for the non-state-preservation checks.
LocalFunctional dual_functional(const LocalFunctional& phi, const Region& s,
                                const MorphismFamily& fam);

/// r: restriction of a state on s to the subalgebra of t >= s (marginal of
/// the weights onto the smaller outside).
LocalState restrict_state(const Universe& universe, const LocalState& mu, const Region& t);

/**
 * A consistent family of local states, one per region of the family. The
 * consistency law mu_s = dual(mu_t, s) is NOT enforced at construction (the
 * verdict op exists to check it), only shape is.
 */
class Thread {
 public:
  Thread(RegionFamily family, std::map<Region, LocalState> components);

  const RegionFamily& family() const { return family_; }
  const LocalState& component(const Region& system) const;
  const std::map<Region, LocalState>& components() const { return components_; }

 private:
  RegionFamily family_;
  std::map<Region, LocalState> components_;
};

/// The unique thread through a state on the top region.
Thread thread_from_top(const LocalState& top_state, const MorphismFamily& fam);

struct ThreadVerdict {
  bool ok = true;
  std::string witness;  // first violated (s, t, event) when !ok
};

/// Exact weight-vector equality mu_s == dual(mu_t, s) over all comparable pairs.
ThreadVerdict verify_thread(const Thread& thread, const MorphismFamily& fam);

struct TlIdentification {
  Thread thread;
  ThreadVerdict verdict;
};

/// Builds the family of marginals of a full-window distribution and reports
/// whether it is a thread under the given morphism family.
TlIdentification tl_identify(const std::vector<Scalar>& full_weights, const MorphismFamily& fam);

}  // namespace latticealg

#endif  // LATTICEALG_STATE_HPP
