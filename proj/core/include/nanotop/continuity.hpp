#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nanotop/family.hpp"
#include "nanotop/finite_map.hpp"
#include "nanotop/open_sets.hpp"
#include "nanotop/space.hpp"

namespace nanotop {

// The seven weak-continuity classes. Each is a rule "preimages of every
// codomain set of one kind must land in a domain kind" — see class_rule().
enum class ContinuityClass : int {
    n = 0,            // N
    nalpha = 1,       // Na
    nalpha_star = 2,  // Na*
    nalpha_2star = 3, // Na**
    nsalpha = 4,      // NSa
    nsalpha_star = 5, // NSa*
    nsalpha_2star = 6 // NSa**
};

inline constexpr int continuity_class_count = 7;
inline constexpr std::array<ContinuityClass, 7> all_continuity_classes = {
    ContinuityClass::n,            ContinuityClass::nalpha,
    ContinuityClass::nalpha_star,  ContinuityClass::nalpha_2star,
    ContinuityClass::nsalpha,      ContinuityClass::nsalpha_star,
    ContinuityClass::nsalpha_2star};

// ASCII tokens: N, Na, Na*, Na**, NSa, NSa*, NSa**.
std::string_view class_token(ContinuityClass c);
std::optional<ContinuityClass> parse_class_token(std::string_view token);

struct ClassRule {
    FamilyKind codomain_kind;  // which codomain sets are quantified over
    FamilyKind domain_kind;    // what their preimages must satisfy
};
ClassRule class_rule(ContinuityClass c);

// Truth value per class, plus whether the map sends opens to opens.
struct ContinuityProfile {
    std::array<bool, continuity_class_count> holds{};
    bool n_open_map = false;

    bool operator[](ContinuityClass c) const {
        return holds[static_cast<int>(c)];
    }
    // Packed class bits (bit i = class i holds); handy for sweep loops.
    std::uint8_t class_bits() const noexcept;

    friend bool operator==(const ContinuityProfile&,
                           const ContinuityProfile&) = default;
};

// True iff the preimage of every member of codomain_family satisfies
// domain_kind in domain_space.
bool is_family_continuous(const FiniteMap& h, const SetFamily& codomain_family,
                          FamilyKind domain_kind, const NanoSpace& domain_space);

ContinuityProfile classify(const FiniteMap& h, const NanoSpace& domain_space,
                           const NanoSpace& codomain_space);

bool is_n_open_map(const FiniteMap& h, const NanoSpace& domain_space,
                   const NanoSpace& codomain_space);

// Four independently evaluated characterizations of semi-alpha continuity:
//   [0] preimage of every open is semi-alpha-open;
//   [1] preimage of every closed is semi-alpha-closed;
//   [2] h(Nint(Ncl(Nint(Ncl(c))))) inside Ncl(h(c)) for every domain subset c;
//   [3] Nint(Ncl(Nint(Ncl(h^-1(d))))) inside h^-1(Ncl(d)) for every codomain
//       subset d.
// Their equivalence is asserted by the verifier, never assumed here.
std::array<bool, 4> nsalpha_characterizations(const FiniteMap& h,
                                              const NanoSpace& domain_space,
                                              const NanoSpace& codomain_space);

// Interior-inclusion characterization of plain continuity:
// h^-1(Nint(d)) inside Nint(h^-1(d)) for every codomain subset d.
bool n_characterization_interior(const FiniteMap& h,
                                 const NanoSpace& domain_space,
                                 const NanoSpace& codomain_space);

// ---------------------------------------------------------------------------
// Precomputed per-space tables for enumeration-heavy callers: full interior
// and closure tables plus membership bitsets and member lists for the three
// open kinds. Classification through tables matches the direct predicates
// (property-tested), it is just much faster inside sweeps.
class SpaceTables {
public:
    explicit SpaceTables(const NanoSpace& s);

    int point_count() const noexcept { return n_; }
    Mask full_mask() const noexcept { return full_; }

    Mask interior(Mask a) const { return interior_[a]; }
    Mask closure(Mask a) const { return closure_[a]; }

    // kind index: 0 = plain open, 1 = alpha-open, 2 = semi-alpha-open.
    bool in_family(int kind, Mask a) const {
        return (bits_[kind][a >> 6] >> (a & 63)) & 1u;
    }
    const std::vector<Mask>& members(int kind) const { return members_[kind]; }

private:
    int n_;
    Mask full_;
    std::vector<Mask> interior_;
    std::vector<Mask> closure_;
    std::array<std::vector<std::uint64_t>, 3> bits_;
    std::array<std::vector<Mask>, 3> members_;
};

inline constexpr int kind_n_open = 0;
inline constexpr int kind_nalpha_open = 1;
inline constexpr int kind_nsalpha_open = 2;

// Table-based counterparts over a raw assignment (one codomain point index
// per domain point).
ContinuityProfile classify(const SpaceTables& domain, const SpaceTables& codomain,
                           std::span<const Point> assignment);
bool is_n_open_map(const SpaceTables& domain, const SpaceTables& codomain,
                   std::span<const Point> assignment);
std::array<bool, 4> nsalpha_characterizations(const SpaceTables& domain,
                                              const SpaceTables& codomain,
                                              std::span<const Point> assignment);
bool n_characterization_interior(const SpaceTables& domain,
                                 const SpaceTables& codomain,
                                 std::span<const Point> assignment);

// Preimage of the codomain subset under a raw assignment.
Mask preimage_mask(std::span<const Point> assignment, Mask codomain_set);

}  // namespace nanotop
