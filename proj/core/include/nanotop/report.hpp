#pragma once

#include <string>

#include "nanotop/continuity.hpp"
#include "nanotop/space.hpp"
#include "nanotop/verify.hpp"

namespace nanotop {

// Rendering of results as human-readable text and as JSON documents.
//
// JSON conventions (stable; documented in the repository README):
//   * objects have alphabetically sorted keys, arrays have documented order;
//   * point sets are arrays of labels sorted lexicographically;
//   * families keep canonical order (cardinality, then characteristic value);
//   * continuity classes use their ASCII tokens (N, Na, ..., NSa**);
//   * reports carry no timestamps or timings, so equal runs byte-match.

// `space families <file>`.
std::string space_families_text(const NanoSpace& s);
std::string space_families_json(const NanoSpace& s);

// `map classify <file>`.
std::string map_classify_text(const NanoSpace& domain_space,
                              const NanoSpace& codomain_space,
                              const FiniteMap& map,
                              const ContinuityProfile& profile);
std::string map_classify_json(const NanoSpace& domain_space,
                              const NanoSpace& codomain_space,
                              const FiniteMap& map,
                              const ContinuityProfile& profile);

// `verify ...`.
std::string report_text(const ImplicationsReport& r);
std::string report_json(const ImplicationsReport& r);
std::string report_text(const EquivalencesReport& r);
std::string report_json(const EquivalencesReport& r);
std::string report_text(const TheoremsReport& r);
std::string report_json(const TheoremsReport& r);
std::string report_text(const CompositionsReport& r);
std::string report_json(const CompositionsReport& r);

// `repro paper`.
std::string report_text(const ReproReport& r);
std::string report_json(const ReproReport& r);

// `search`.
std::string report_text(const SearchReport& r);
std::string report_json(const SearchReport& r);

}  // namespace nanotop
