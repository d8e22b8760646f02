#include "latticealg/quasilocal.hpp"

#include <stdexcept>
#include <utility>

namespace latticealg {

QuasilocalElement::QuasilocalElement(std::vector<Summand> summands)
    : summands_(std::move(summands)) {
  for (const Summand& summand : summands_) {
    if (summand.observable.system() != summand.tag) {
      throw std::invalid_argument("QuasilocalElement: summand tagged " +
                                  summand.tag.to_string() + " carries an observable on " +
                                  summand.observable.system().to_string());
    }
  }
}

QuasilocalElement QuasilocalElement::single(const Region& tag, LocalObservable observable) {
  std::vector<Summand> summands;
  summands.push_back(Summand{tag, std::move(observable)});
  return QuasilocalElement(std::move(summands));
}

QuasilocalElement QuasilocalElement::operator+(const QuasilocalElement& other) const {
  std::vector<Summand> merged = summands_;
  merged.insert(merged.end(), other.summands_.begin(), other.summands_.end());
  QuasilocalElement result;
  result.summands_ = std::move(merged);
  return result;
}

QuasilocalElement QuasilocalElement::operator-() const {
  QuasilocalElement result = *this;
  for (Summand& summand : result.summands_) {
    std::vector<Scalar> table = summand.observable.table();
    for (Scalar& value : table) value = -value;
    summand.observable = summand.observable.with_table(std::move(table));
  }
  return result;
}

LocalObservable normal_form(const QuasilocalElement& element, const MorphismFamily& fam) {
  const Region& top = fam.family().top();
  LocalObservable total = LocalObservable::zero(fam.universe(), top);
  for (const Summand& summand : element.summands()) {
    if (!fam.family().contains(summand.tag)) {
      throw std::invalid_argument("normal_form: tag " + summand.tag.to_string() +
                                  " is outside the region family");
    }
    total = affine(Scalar(1), total, Scalar(1), lift(summand.observable, top, fam));
  }
  return total;
}

LocalObservable order_unit(const MorphismFamily& fam) {
  return LocalObservable::unit(fam.universe(), fam.family().top());
}

Scalar order_unit_norm(const QuasilocalElement& element, const MorphismFamily& fam) {
  return sup_norm(normal_form(element, fam));
}

Scalar pair(const Thread& thread, const QuasilocalElement& element) {
  Scalar total(0);
  for (const Summand& summand : element.summands()) {
    total += thread.component(summand.tag).pair(summand.observable);
  }
  return total;
}

bool equivalent(const QuasilocalElement& a, const QuasilocalElement& b,
                const MorphismFamily& fam) {
  return normal_form(a, fam) == normal_form(b, fam);
}

}  // namespace latticealg
