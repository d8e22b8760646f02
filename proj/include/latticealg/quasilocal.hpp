#ifndef LATTICEALG_QUASILOCAL_HPP
#define LATTICEALG_QUASILOCAL_HPP

#include <vector>

#include "latticealg/morphism.hpp"
#include "latticealg/observable.hpp"
#include "latticealg/state.hpp"

namespace latticealg {

/// One tagged summand of a quasilocal element.
struct Summand {
  Region tag;
  LocalObservable observable;
};

/**
 * A finite tagged sum of local observables, i.e. a representative of a class
 * in the inductive-limit algebra. The empty sum represents zero. Two
 * representatives denote the same element exactly when their normal forms at
 * the top region agree.
 */
class QuasilocalElement {
 public:
  QuasilocalElement() = default;
  explicit QuasilocalElement(std::vector<Summand> summands);

  static QuasilocalElement single(const Region& tag, LocalObservable observable);

  const std::vector<Summand>& summands() const { return summands_; }
  bool is_empty_sum() const { return summands_.empty(); }

  QuasilocalElement operator+(const QuasilocalElement& other) const;
  QuasilocalElement operator-() const;

 private:
  std::vector<Summand> summands_;
};

/// Canonical representative: every summand lifted to the top region and
/// summed there. Tags must belong to the family.
LocalObservable normal_form(const QuasilocalElement& element, const MorphismFamily& fam);

/// The order unit e: normal form of the unit observable tagged anywhere;
/// always the all-ones table on the top outside.
LocalObservable order_unit(const MorphismFamily& fam);

/// p_E: the order-unit norm, the sup norm of the normal form.
Scalar order_unit_norm(const QuasilocalElement& element, const MorphismFamily& fam);

/// phi_mu: sum of the thread components paired against the summands. Equals
/// the pairing of the top component with the normal form for consistent
/// threads.
Scalar pair(const Thread& thread, const QuasilocalElement& element);

/// Same class test: identical normal forms.
bool equivalent(const QuasilocalElement& a, const QuasilocalElement& b,
                const MorphismFamily& fam);

}  // namespace latticealg

#endif  // LATTICEALG_QUASILOCAL_HPP
