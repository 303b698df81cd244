#pragma once

#include "nanotop/family.hpp"
#include "nanotop/space.hpp"

namespace nanotop {

// Membership tests for the three open-set notions. Mask overloads skip the
// universe check and exist for enumeration-heavy callers.

bool is_n_open_mask(const NanoSpace& s, Mask a);
bool is_n_open(const NanoSpace& s, const PointSet& a);

// a is alpha-open iff a is contained in Nint(Ncl(Nint(a))).
bool is_nalpha_open_mask(const NanoSpace& s, Mask a);
bool is_nalpha_open(const NanoSpace& s, const PointSet& a);

// Semi-alpha-openness has two equivalent characterizations; both are
// computed so the verifier can confirm they never part ways.
struct NsalphaOpenCheck {
    bool closure_formula;  // a `subset of` Ncl(Nint(Ncl(Nint(a))))
    bool existential;      // some alpha-open p with p `subset of` a `subset of` Ncl(p)
    bool agree() const noexcept { return closure_formula == existential; }
};

NsalphaOpenCheck nsalpha_open_check(const NanoSpace& s, Mask a);

// Primary answer is the closure formula.
bool is_nsalpha_open_mask(const NanoSpace& s, Mask a);
bool is_nsalpha_open(const NanoSpace& s, const PointSet& a);

// Kind-dispatching membership test (closed kinds test the complement).
bool satisfies_kind(const NanoSpace& s, FamilyKind k, Mask a);

// All subsets of the given kind, canonical order; scans all 2^n subsets.
SetFamily enumerate_family(const NanoSpace& s, FamilyKind k);

}  // namespace nanotop
