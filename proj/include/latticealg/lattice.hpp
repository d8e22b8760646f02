#ifndef LATTICEALG_LATTICE_HPP
#define LATTICEALG_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latticealg {

/// A subset of lattice sites, kept sorted and duplicate-free.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<int> sites);
  Region(std::initializer_list<int> sites) : Region(std::vector<int>(sites)) {}

  const std::vector<int>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool is_empty() const { return sites_.empty(); }

  bool contains(int site) const;
  bool subset_of(const Region& other) const;
  bool intersects(const Region& other) const;
  Region union_with(const Region& other) const;
  Region difference(const Region& other) const;

  /// Position of `site` in the sorted site list, -1 when absent.
  int rank_of(int site) const;

  bool operator==(const Region& other) const = default;
  auto operator<=>(const Region& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> sites_;
};

/**
 * Finite lattice window: sites 0..n-1 with q states per site, a symmetric
 * adjacency relation for Hamiltonians, and a nonempty boundary core B that
 * stands in for the infinite surround. The top system is the interior
 * (everything outside B), so its outside is B and states on it never
 * trivialize.
 */
class Universe {
 public:
  Universe(int site_count, int state_count, std::vector<std::pair<int, int>> edges,
           Region boundary_core);

  int site_count() const { return site_count_; }
  int state_count() const { return state_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const Region& boundary_core() const { return boundary_core_; }
  const Region& all_sites() const { return all_sites_; }
  const Region& interior() const { return interior_; }

  Region outside(const Region& system) const { return all_sites_.difference(system); }
  bool has_edge(int a, int b) const;

 private:
  int site_count_;
  int state_count_;
  std::vector<std::pair<int, int>> edges_;
  Region boundary_core_;
  Region all_sites_;
  Region interior_;
};

/**
 * Site values on a region, packed as a mixed-radix code: ascending site
 * order, least-significant digit at the lowest site index. This single
 * encoding indexes every table in the library.
 */
struct Configuration {
  Region region;
  std::uint64_t code = 0;

  bool operator==(const Configuration& other) const = default;
};

/// q^|region|; throws std::overflow_error past 2^62.
std::uint64_t configuration_count(const Universe& universe, const Region& region);

int site_value(const Universe& universe, const Configuration& config, int site);

Configuration make_configuration(const Universe& universe, const Region& region,
                                 const std::vector<int>& values_by_rank);

std::vector<Configuration> enumerate_configurations(const Universe& universe,
                                                    const Region& region);

/// Throws std::invalid_argument when the regions overlap.
Configuration merge_configurations(const Universe& universe, const Configuration& a,
                                   const Configuration& b);

/// Throws std::invalid_argument unless sub is contained in config.region.
Configuration restrict_configuration(const Universe& universe, const Configuration& config,
                                     const Region& sub);

/// Code-level restriction from a region to a subset, avoiding Configuration
/// traffic in enumeration kernels.
std::uint64_t restrict_code(const Universe& universe, const Region& from, std::uint64_t code,
                            const Region& sub);

/// Code-level merge of configurations on two disjoint regions onto their
/// union. Throws std::invalid_argument when the regions overlap.
std::uint64_t merge_code(const Universe& universe, const Region& first, std::uint64_t first_code,
                         const Region& second, std::uint64_t second_code);

/// A family of systems intended to be upward directed: subsets of the
/// interior with the full interior as top. Directedness and top membership
/// are verdicts of verify_directed_family, not construction-time demands, so
/// defective families can be built and diagnosed.
class RegionFamily {
 public:
  RegionFamily(std::vector<Region> regions, Region top);

  const std::vector<Region>& regions() const { return regions_; }
  const Region& top() const { return top_; }
  bool contains(const Region& region) const;

  /// All ordered pairs (s, t) with s a proper subset of t.
  std::vector<std::pair<Region, Region>> comparable_pairs() const;

 private:
  std::vector<Region> regions_;
  Region top_;
};

struct DirectedFamilyReport {
  bool ok = true;
  std::string witness;  // first missing union, or the absent top
};

/// Checks membership of the top region and closure under pairwise union.
DirectedFamilyReport verify_directed_family(const RegionFamily& family);

/// Everything the morphism machinery needs from a family: directedness, top
/// membership, top equal to the interior, regions inside the interior.
/// Throws std::invalid_argument.
void validate_family(const Universe& universe, const RegionFamily& family);

}  // namespace latticealg

#endif  // LATTICEALG_LATTICE_HPP
