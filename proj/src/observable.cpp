#include "latticealg/observable.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace latticealg {

LocalObservable::LocalObservable(const Universe& universe, Region system,
                                 std::vector<Scalar> table)
    : system_(std::move(system)), table_(std::move(table)) {
  if (!system_.subset_of(universe.all_sites())) {
    throw std::invalid_argument("LocalObservable: system " + system_.to_string() +
                                " leaves the window");
  }
  outside_ = universe.outside(system_);
  const std::uint64_t expected = configuration_count(universe, outside_);
  if (table_.size() != expected) {
    throw std::invalid_argument("LocalObservable: table has " + std::to_string(table_.size()) +
                                " entries, expected " + std::to_string(expected));
  }
}

LocalObservable LocalObservable::constant(const Universe& universe, const Region& system,
                                          const Scalar& value) {
  const Region outside = universe.outside(system);
  return LocalObservable(universe, system,
                         std::vector<Scalar>(configuration_count(universe, outside), value));
}

LocalObservable LocalObservable::unit(const Universe& universe, const Region& system) {
  return constant(universe, system, Scalar(1));
}

LocalObservable LocalObservable::zero(const Universe& universe, const Region& system) {
  return constant(universe, system, Scalar(0));
}

LocalObservable LocalObservable::indicator(const Universe& universe, const Region& system,
                                           const Configuration& event) {
  if (event.region.intersects(system)) {
    throw std::invalid_argument("indicator: event region " + event.region.to_string() +
                                " intersects the system " + system.to_string());
  }
  const Region outside = universe.outside(system);
  if (!event.region.subset_of(outside)) {
    throw std::invalid_argument("indicator: event region " + event.region.to_string() +
                                " leaves the window");
  }
  const std::uint64_t count = configuration_count(universe, outside);
  std::vector<Scalar> table(count, Scalar(0));
  for (std::uint64_t code = 0; code < count; ++code) {
    if (restrict_code(universe, outside, code, event.region) == event.code) {
      table[code] = Scalar(1);
    }
  }
  return LocalObservable(universe, system, std::move(table));
}

LocalObservable LocalObservable::with_table(std::vector<Scalar> table) const {
  if (table.size() != table_.size()) {
    throw std::invalid_argument("with_table: replacement table has the wrong length");
  }
  LocalObservable result = *this;
  result.table_ = std::move(table);
  return result;
}

Scalar evaluate(const Universe& universe, const LocalObservable& observable,
                const Configuration& full) {
  if (full.region != universe.all_sites()) {
    throw std::invalid_argument("evaluate: configuration must cover the whole window, got " +
                                full.region.to_string());
  }
  return observable.value_at(
      restrict_code(universe, full.region, full.code, observable.outside()));
}

namespace {

void require_same_system(const LocalObservable& f, const LocalObservable& g, const char* what) {
  if (f.system() != g.system()) {
    throw std::invalid_argument(std::string(what) + ": mismatched systems " +
                                f.system().to_string() + " and " + g.system().to_string());
  }
}

}  // namespace

LocalObservable affine(const Scalar& a, const LocalObservable& f, const Scalar& b,
                       const LocalObservable& g) {
  require_same_system(f, g, "affine");
  std::vector<Scalar> table(f.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = a * f.table()[i] + b * g.table()[i];
  }
  return f.with_table(std::move(table));
}

LocalObservable join(const LocalObservable& f, const LocalObservable& g) {
  require_same_system(f, g, "join");
  std::vector<Scalar> table(f.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = max(f.table()[i], g.table()[i]);
  }
  return f.with_table(std::move(table));
}

LocalObservable meet(const LocalObservable& f, const LocalObservable& g) {
  require_same_system(f, g, "meet");
  std::vector<Scalar> table(f.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = min(f.table()[i], g.table()[i]);
  }
  return f.with_table(std::move(table));
}

Scalar sup_norm(const LocalObservable& observable) {
  Scalar best(0);
  for (const Scalar& value : observable.table()) {
    best = max(best, value.abs());
  }
  return best;
}

bool measurable_in(const Universe& universe, const LocalObservable& observable,
                   const Region& t) {
  if (!observable.system().subset_of(t)) {
    throw std::invalid_argument("measurable_in: region " + t.to_string() +
                                " does not contain the system " +
                                observable.system().to_string());
  }
  const Region annulus = t.difference(observable.system());
  const Region outer = universe.outside(t);
  const std::uint64_t outer_count = configuration_count(universe, outer);
  const std::uint64_t annulus_count = configuration_count(universe, annulus);
  for (std::uint64_t y = 0; y < outer_count; ++y) {
    const Scalar& reference =
        observable.value_at(merge_code(universe, annulus, 0, outer, y));
    for (std::uint64_t a = 1; a < annulus_count; ++a) {
      if (observable.value_at(merge_code(universe, annulus, a, outer, y)) != reference) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace latticealg
