#include "latticealg/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latticealg {

// ---------------------------------------------------------------------------
// Region
// ---------------------------------------------------------------------------

Region::Region(std::vector<int> sites) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

bool Region::contains(int site) const {
  return std::binary_search(sites_.begin(), sites_.end(), site);
}

bool Region::subset_of(const Region& other) const {
  return std::includes(other.sites_.begin(), other.sites_.end(), sites_.begin(), sites_.end());
}

bool Region::intersects(const Region& other) const {
  auto a = sites_.begin();
  auto b = other.sites_.begin();
  while (a != sites_.end() && b != other.sites_.end()) {
    if (*a == *b) return true;
    (*a < *b) ? ++a : ++b;
  }
  return false;
}

Region Region::union_with(const Region& other) const {
  std::vector<int> merged;
  merged.reserve(sites_.size() + other.sites_.size());
  std::set_union(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(),
                 std::back_inserter(merged));
  Region result;
  result.sites_ = std::move(merged);
  return result;
}

Region Region::difference(const Region& other) const {
  std::vector<int> remaining;
  std::set_difference(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(),
                      std::back_inserter(remaining));
  Region result;
  result.sites_ = std::move(remaining);
  return result;
}

int Region::rank_of(int site) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), site);
  if (it == sites_.end() || *it != site) return -1;
  return static_cast<int>(it - sites_.begin());
}

std::string Region::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (i > 0) out << ',';
    out << sites_[i];
  }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

Universe::Universe(int site_count, int state_count, std::vector<std::pair<int, int>> edges,
                   Region boundary_core)
    : site_count_(site_count),
      state_count_(state_count),
      edges_(std::move(edges)),
      boundary_core_(std::move(boundary_core)) {
  if (site_count_ < 1) throw std::invalid_argument("Universe: need at least one site");
  if (state_count_ < 2) throw std::invalid_argument("Universe: need q >= 2 site states");

  std::vector<int> everything(site_count_);
  for (int i = 0; i < site_count_; ++i) everything[i] = i;
  all_sites_ = Region(std::move(everything));

  if (boundary_core_.is_empty()) {
    throw std::invalid_argument("Universe: boundary core must be nonempty");
  }
  if (!boundary_core_.subset_of(all_sites_) || boundary_core_ == all_sites_) {
    throw std::invalid_argument("Universe: boundary core must be a proper subset of the sites");
  }
  interior_ = all_sites_.difference(boundary_core_);

  for (auto& [a, b] : edges_) {
    if (a == b || a < 0 || b < 0 || a >= site_count_ || b >= site_count_) {
      throw std::invalid_argument("Universe: edge references invalid sites");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Universe::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

std::uint64_t configuration_count(const Universe& universe, const Region& region) {
  std::uint64_t count = 1;
  const std::uint64_t q = static_cast<std::uint64_t>(universe.state_count());
  for (std::size_t i = 0; i < region.size(); ++i) {
    if (count > (UINT64_C(1) << 62) / q) {
      throw std::overflow_error("configuration_count: region too large for 64-bit codes");
    }
    count *= q;
  }
  return count;
}

int site_value(const Universe& universe, const Configuration& config, int site) {
  const int rank = config.region.rank_of(site);
  if (rank < 0) {
    throw std::invalid_argument("site_value: site " + std::to_string(site) +
                                " not in region " + config.region.to_string());
  }
  std::uint64_t code = config.code;
  const std::uint64_t q = static_cast<std::uint64_t>(universe.state_count());
  for (int i = 0; i < rank; ++i) code /= q;
  return static_cast<int>(code % q);
}

Configuration make_configuration(const Universe& universe, const Region& region,
                                 const std::vector<int>& values_by_rank) {
  if (values_by_rank.size() != region.size()) {
    throw std::invalid_argument("make_configuration: value count does not match region size");
  }
  const std::uint64_t q = static_cast<std::uint64_t>(universe.state_count());
  std::uint64_t code = 0;
  for (std::size_t i = values_by_rank.size(); i-- > 0;) {
    const int value = values_by_rank[i];
    if (value < 0 || value >= universe.state_count()) {
      throw std::invalid_argument("make_configuration: site value out of range");
    }
    code = code * q + static_cast<std::uint64_t>(value);
  }
  return Configuration{region, code};
}

std::vector<Configuration> enumerate_configurations(const Universe& universe,
                                                    const Region& region) {
  const std::uint64_t count = configuration_count(universe, region);
  std::vector<Configuration> configs;
  configs.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    configs.push_back(Configuration{region, code});
  }
  return configs;
}

Configuration merge_configurations(const Universe& universe, const Configuration& a,
                                   const Configuration& b) {
  if (a.region.intersects(b.region)) {
    throw std::invalid_argument("merge_configurations: regions overlap: " +
                                a.region.to_string() + " and " + b.region.to_string());
  }
  const Region merged = a.region.union_with(b.region);
  std::vector<int> values(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const int site = merged.sites()[i];
    values[i] = a.region.contains(site) ? site_value(universe, a, site)
                                        : site_value(universe, b, site);
  }
  return make_configuration(universe, merged, values);
}

Configuration restrict_configuration(const Universe& universe, const Configuration& config,
                                     const Region& sub) {
  if (!sub.subset_of(config.region)) {
    throw std::invalid_argument("restrict_configuration: " + sub.to_string() +
                                " is not contained in " + config.region.to_string());
  }
  return Configuration{sub, restrict_code(universe, config.region, config.code, sub)};
}

std::uint64_t restrict_code(const Universe& universe, const Region& from, std::uint64_t code,
                            const Region& sub) {
  const std::uint64_t q = static_cast<std::uint64_t>(universe.state_count());
  std::uint64_t result = 0;
  std::uint64_t weight = 1;
  std::size_t from_rank = 0;
  std::uint64_t remaining = code;
  for (int site : sub.sites()) {
    while (from_rank < from.size() && from.sites()[from_rank] != site) {
      remaining /= q;
      ++from_rank;
    }
    if (from_rank >= from.size()) {
      throw std::invalid_argument("restrict_code: sub region is not contained in source");
    }
    result += (remaining % q) * weight;
    weight *= q;
  }
  return result;
}

std::uint64_t merge_code(const Universe& universe, const Region& first, std::uint64_t first_code,
                         const Region& second, std::uint64_t second_code) {
  if (first.intersects(second)) {
    throw std::invalid_argument("merge_code: regions overlap: " + first.to_string() + " and " +
                                second.to_string());
  }
  const std::uint64_t q = static_cast<std::uint64_t>(universe.state_count());
  std::uint64_t result = 0;
  std::uint64_t weight = 1;
  std::size_t ia = 0;
  std::size_t ib = 0;
  std::uint64_t ra = first_code;
  std::uint64_t rb = second_code;
  while (ia < first.size() || ib < second.size()) {
    const bool take_first =
        ib >= second.size() || (ia < first.size() && first.sites()[ia] < second.sites()[ib]);
    if (take_first) {
      result += (ra % q) * weight;
      ra /= q;
      ++ia;
    } else {
      result += (rb % q) * weight;
      rb /= q;
      ++ib;
    }
    weight *= q;
  }
  return result;
}

// ---------------------------------------------------------------------------
// RegionFamily
// ---------------------------------------------------------------------------

RegionFamily::RegionFamily(std::vector<Region> regions, Region top)
    : regions_(std::move(regions)), top_(std::move(top)) {
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    for (std::size_t j = i + 1; j < regions_.size(); ++j) {
      if (regions_[i] == regions_[j]) {
        throw std::invalid_argument("RegionFamily: duplicate region " + regions_[i].to_string());
      }
    }
    if (!regions_[i].subset_of(top_)) {
      throw std::invalid_argument("RegionFamily: region " + regions_[i].to_string() +
                                  " is not contained in the top region");
    }
  }
}

bool RegionFamily::contains(const Region& region) const {
  return std::find(regions_.begin(), regions_.end(), region) != regions_.end();
}

std::vector<std::pair<Region, Region>> RegionFamily::comparable_pairs() const {
  std::vector<std::pair<Region, Region>> pairs;
  for (const Region& s : regions_) {
    for (const Region& t : regions_) {
      if (s != t && s.subset_of(t)) pairs.emplace_back(s, t);
    }
  }
  return pairs;
}

DirectedFamilyReport verify_directed_family(const RegionFamily& family) {
  DirectedFamilyReport report;
  if (!family.contains(family.top())) {
    report.ok = false;
    report.witness = "top region " + family.top().to_string() + " is not a member";
    return report;
  }
  const auto& regions = family.regions();
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (std::size_t j = i; j < regions.size(); ++j) {
      const Region merged = regions[i].union_with(regions[j]);
      if (!family.contains(merged)) {
        report.ok = false;
        report.witness = regions[i].to_string() + " union " + regions[j].to_string() + " = " +
                         merged.to_string() + " is missing";
        return report;
      }
    }
  }
  return report;
}

void validate_family(const Universe& universe, const RegionFamily& family) {
  if (family.top() != universe.interior()) {
    throw std::invalid_argument("family top " + family.top().to_string() +
                                " must equal the interior " + universe.interior().to_string());
  }
  for (const Region& region : family.regions()) {
    if (!region.subset_of(universe.interior())) {
      throw std::invalid_argument("family region " + region.to_string() +
                                  " leaves the interior");
    }
  }
  const DirectedFamilyReport report = verify_directed_family(family);
  if (!report.ok) {
    throw std::invalid_argument("family is not upward directed: " + report.witness);
  }
}

}  // namespace latticealg
