#ifndef LATTICEALG_OBSERVABLE_HPP
#define LATTICEALG_OBSERVABLE_HPP

#include <vector>

#include "latticealg/lattice.hpp"
#include "latticealg/scalar.hpp"

namespace latticealg {

/**
 * A function from the outside: a measurement on the system whose value
 * depends only on the configuration of the rest of the window. The table is
 * dense over the outside-configuration codes in canonical order.
 */
class LocalObservable {
 public:
  LocalObservable(const Universe& universe, Region system, std::vector<Scalar> table);

  static LocalObservable constant(const Universe& universe, const Region& system,
                                  const Scalar& value);
  /// The order unit: the constant-1 table.
  static LocalObservable unit(const Universe& universe, const Region& system);
  static LocalObservable zero(const Universe& universe, const Region& system);
  /// Cylinder indicator of `event`, which must live outside the system.
  static LocalObservable indicator(const Universe& universe, const Region& system,
                                   const Configuration& event);

  const Region& system() const { return system_; }
  const Region& outside() const { return outside_; }
  const std::vector<Scalar>& table() const { return table_; }
  const Scalar& value_at(std::uint64_t outside_code) const { return table_.at(outside_code); }

  /// Copy with the same system and a replacement table of equal length.
  LocalObservable with_table(std::vector<Scalar> table) const;

  bool operator==(const LocalObservable& other) const {
    return system_ == other.system_ && table_ == other.table_;
  }

 private:
  Region system_;
  Region outside_;
  std::vector<Scalar> table_;
};

/// Value at a full-window configuration; independent of the sites inside the
/// system by construction. Throws when `full` does not cover the window.
Scalar evaluate(const Universe& universe, const LocalObservable& observable,
                const Configuration& full);

/// Pointwise a*f + b*g on a shared system.
LocalObservable affine(const Scalar& a, const LocalObservable& f, const Scalar& b,
                       const LocalObservable& g);
/// Pointwise max / min on a shared system.
LocalObservable join(const LocalObservable& f, const LocalObservable& g);
LocalObservable meet(const LocalObservable& f, const LocalObservable& g);

Scalar sup_norm(const LocalObservable& observable);

/// True when the table is constant across the coordinates of t minus the
/// system, i.e. the observable already lies in the smaller algebra of t.
bool measurable_in(const Universe& universe, const LocalObservable& observable,
                   const Region& t);

}  // namespace latticealg

#endif  // LATTICEALG_OBSERVABLE_HPP
