#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nanotop/finite_map.hpp"
#include "nanotop/space.hpp"

namespace nanotop {

// Which space constructions an enumeration or sweep draws from.
enum class SpaceMode {
    nano,       // rough-derived spaces: every (partition, subset) pair
    explicit_,  // every topology on the point set
    both,       // nano-derived first, then explicit
};

std::string_view space_mode_name(SpaceMode m);

// All partitions of {0..n-1} in restricted-growth-string lexicographic
// order; each partition's blocks are ordered by their smallest element.
// Counts for n = 1.. are the Bell numbers 1, 2, 5, 15, 52, 203, ...
std::vector<std::vector<Mask>> partitions_of(int n);

// Every rough-derived space on canonical_universe(n): partitions in RGS
// order crossed with subset masks in counter order (2^n per partition).
// Instances are (partition, subset) pairs; coinciding topologies are not
// deduplicated, keeping the order trivially documentable.
std::vector<NanoSpace> enumerate_nano_spaces(int n);

// Every topology on canonical_universe(n), by filtering all families of
// proper nonempty subsets (counter order) through the topology axioms.
// Counts for n = 1..4: 1, 4, 29, 355. Supported for n <= 4.
std::vector<NanoSpace> enumerate_explicit_spaces(int n);

// Concatenation per mode: nano, explicit, or nano followed by explicit.
std::vector<NanoSpace> enumerate_spaces(int n, SpaceMode mode);

// Number of maps the map enumeration yields: |V|^|U|.
std::uint64_t map_count(int domain_size, int codomain_size);

// Decode the k-th map in counter order: domain point 0 is the least
// significant base-|V| digit.
std::vector<Point> map_assignment_from_counter(std::uint64_t k, int domain_size,
                                               int codomain_size);

// All maps (or all bijections when flagged; requires equal sizes) between
// the universes, in counter order.
std::vector<FiniteMap> enumerate_maps(const UniversePtr& domain,
                                      const UniversePtr& codomain,
                                      bool bijective_only);

}  // namespace nanotop
