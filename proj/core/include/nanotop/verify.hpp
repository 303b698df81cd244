#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nanotop/continuity.hpp"
#include "nanotop/enumerate.hpp"
#include "nanotop/finite_map.hpp"
#include "nanotop/space.hpp"

namespace nanotop {

// Bounds for instance sweeps. Scans are exhaustive for sizes up to
// min(max_size, exhaustive caps); larger sizes are covered by seeded
// sampling. A fixed seed makes every run byte-for-byte deterministic.
struct InstanceBounds {
    int max_size = 3;                  // per-side universe size, <= 16
    SpaceMode mode = SpaceMode::nano;  // which spaces to draw
    std::uint64_t seed = 1;            // drives sampling only
    int pair_samples_per_combo = 15000;   // per sampled (|U|,|V|) combo
    int triple_samples_per_combo = 3000;  // per sampled (|U|,|V|,|W|) combo
};

// Exhaustive reach: pairs/triples of spaces with every side at most 3 are
// fully enumerated; the implication matrix and witness searches extend
// exhaustively to 4 (still cheap and, unlike sampling, deterministic
// independent of the seed); sizes past the caps are sampled.
inline constexpr int exhaustive_pair_cap = 3;
inline constexpr int exhaustive_matrix_cap = 4;
inline constexpr int exhaustive_triple_cap = 3;
inline constexpr int exhaustive_bijective_cap = 4;
inline constexpr int exhaustive_setlevel_cap = 6;

// A map instance separating two continuity classes: `holds` is true of the
// map, `fails` is false.
struct PairWitness {
    NanoSpace domain_space;
    NanoSpace codomain_space;
    FiniteMap map;
    ContinuityClass holds;
    ContinuityClass fails;
};

// Two composable maps, both in class `premise`, whose composition falls out
// of class `conclusion` (for the composition-failure searches premise ==
// conclusion: the class is not closed under composition).
struct CompositionWitness {
    NanoSpace u_space;
    NanoSpace v_space;
    NanoSpace w_space;
    FiniteMap h1;  // U -> V
    FiniteMap h2;  // V -> W
    ContinuityClass premise;
    ContinuityClass conclusion;
};

// Re-runs classification on a witness and confirms it shows what it claims.
bool revalidate(const PairWitness& w);
bool revalidate(const CompositionWitness& w);

// One structured defect record: a sweep found an instance where a verified
// claim does not hold, or an internal characterization disagreed.
struct Discrepancy {
    std::string check;   // e.g. "hierarchy:Na=>NSa", "nsalpha-characterizations"
    std::string detail;  // human-readable specifics
    std::optional<PairWitness> instance;
};

enum class CellState { proved_empirically, refuted };
// Whether a proved implication arrow is claimed by the verified statements,
// only derivable from them, or trivial (the diagonal).
enum class CellClaim { stated, derived, trivial };

struct MatrixCell {
    CellState state = CellState::proved_empirically;
    CellClaim claim = CellClaim::derived;
    std::optional<PairWitness> witness;  // set iff refuted
};

// Empirical 7x7 implication grid among the continuity classes: cell (a, b)
// is refuted by the first scanned map that is a-continuous but not
// b-continuous, and proved-empirically when no such map exists in bounds.
struct ImplicationMatrix {
    std::array<std::array<MatrixCell, continuity_class_count>,
               continuity_class_count>
        cells;
    int scanned_max_size = 0;
    SpaceMode mode = SpaceMode::nano;

    const MatrixCell& cell(ContinuityClass a, ContinuityClass b) const {
        return cells[static_cast<int>(a)][static_cast<int>(b)];
    }
    int refuted_count() const;
};

// The nine stated one-way implications among the classes (the hierarchy the
// sweeps verify): {from, to} index pairs.
const std::vector<std::pair<ContinuityClass, ContinuityClass>>&
stated_implications();

// Transitive closure of the stated implications (plus the diagonal) — the
// cells expected to stay unrefuted.
bool implied_by_stated(ContinuityClass from, ContinuityClass to);

// Stored defect records are capped (the counters keep the true totals), so
// a systematic failure cannot balloon a report.
inline constexpr std::size_t max_stored_records = 20;

struct ImplicationsReport {
    InstanceBounds bounds;
    std::uint64_t exhaustive_instances = 0;  // pair sweep, sizes <= 3
    std::uint64_t matrix_instances = 0;      // matrix scan, sizes <= 4
    std::uint64_t sampled_instances = 0;
    std::uint64_t violation_count = 0;
    std::vector<Discrepancy> violations;  // first few, capped
    ImplicationMatrix matrix;

    bool ok() const { return violation_count == 0; }
};

struct EquivalencesReport {
    InstanceBounds bounds;
    // Map-level sweep (same engine and bounds as the implications sweep).
    std::uint64_t exhaustive_instances = 0;
    std::uint64_t sampled_instances = 0;
    // Set-level scan.
    std::uint64_t spaces_scanned = 0;
    std::uint64_t subsets_checked = 0;
    // Informational observations (not claims): how often the alpha-open /
    // semi-alpha-open families failed the topology axioms.
    std::uint64_t alpha_family_topology_failures = 0;
    std::uint64_t nsalpha_family_topology_failures = 0;
    std::uint64_t discrepancy_count = 0;
    std::vector<Discrepancy> discrepancies;  // first few, capped

    bool ok() const { return discrepancy_count == 0; }
};

struct TheoremsReport {
    InstanceBounds bounds;
    std::uint64_t bijective_instances = 0;
    std::uint64_t n_open_bijective_instances = 0;
    // Premise hits for the two conditional statements:
    //   A: bijective + open map + N-continuous        => Na*-continuous
    //   B: bijective + open map + Na*-continuous      => NSa*-continuous
    std::uint64_t premise_hits_a = 0;
    std::uint64_t premise_hits_b = 0;
    std::uint64_t violation_count = 0;
    std::vector<Discrepancy> violations;  // first few, capped
    std::vector<std::string> notes;

    bool ok() const { return violation_count == 0; }
};

struct ClauseStats {
    std::string name;  // e.g. "Na o N -> Na" (h1 class, h2 class, conclusion)
    std::uint64_t premise_hits = 0;
    std::uint64_t violations = 0;
};

struct CompositionsReport {
    InstanceBounds bounds;
    std::uint64_t exhaustive_triples = 0;
    std::uint64_t sampled_triples = 0;
    std::array<ClauseStats, 10> clauses;
    // First found pairs showing Na- (resp. NSa-) continuity is not closed
    // under composition.
    std::optional<CompositionWitness> nalpha_witness;
    std::optional<CompositionWitness> nsalpha_witness;
    std::uint64_t violation_count = 0;
    std::vector<Discrepancy> violations;  // first few, capped

    bool ok() const {
        return violation_count == 0 && nalpha_witness.has_value() &&
               nsalpha_witness.has_value();
    }
};

// One assertion replayed from the bundled worked-example corpus.
struct ExampleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// A documented mismatch between a published family and the one derivable
// from its stated rough data. Expected, reported, and not a failure.
struct KnownDiscrepancy {
    std::string example;          // corpus id, e.g. "ex3_22"
    std::string space_name;       // which side, e.g. "V"
    std::string what;
    UniversePtr universe;
    std::vector<Mask> printed_opens;
    std::vector<Mask> derived_opens;
};

struct ExampleResult {
    std::string id;
    std::vector<ExampleCheck> checks;
    bool all_passed() const;
};

struct ReproReport {
    std::vector<ExampleResult> examples;
    std::vector<KnownDiscrepancy> known_discrepancies;

    std::uint64_t check_count() const;
    std::uint64_t failure_count() const;
    bool ok() const { return failure_count() == 0; }
};

struct SearchReport {
    ContinuityClass holds;
    ContinuityClass fails;
    InstanceBounds bounds;
    bool vacuous = false;  // holds == fails: no witness can exist
    std::optional<PairWitness> witness;

    bool ok() const { return witness.has_value(); }
};

// --- verification entry points -------------------------------------------

// Nine stated implications over the pair sweep, plus the implication matrix.
ImplicationsReport check_implications(const InstanceBounds& b);

// Four-way semi-alpha characterization agreement and the interior-inclusion
// characterization of continuity over the pair sweep; the two semi-alpha
// openness characterizations over every subset of every enumerated space.
EquivalencesReport check_equivalences(const InstanceBounds& b);

// The two bijective/open-map conditional statements over all bijections.
TheoremsReport check_conditional_theorems(const InstanceBounds& b);

// The ten composition clauses over exhaustive space triples, plus the
// composition-failure witness searches.
CompositionsReport check_compositions(const InstanceBounds& b);

// Replays every bundled worked example and checks each stated family and
// classification; derivation mismatches surface as known discrepancies.
ReproReport repro_worked_examples();

// First witness (documented scan order) with `holds` true and `fails`
// false, exhaustively up to min(max_size, 4). Requires holds != fails.
std::optional<PairWitness> find_witness(ContinuityClass holds,
                                        ContinuityClass fails,
                                        const InstanceBounds& b);

SearchReport run_search(ContinuityClass holds, ContinuityClass fails,
                        const InstanceBounds& b);

// The matrix alone (also embedded in ImplicationsReport).
ImplicationMatrix implication_matrix(const InstanceBounds& b);

}  // namespace nanotop
