#include "nanotop/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nanotop/open_sets.hpp"
#include "nanotop/worked_examples.hpp"

namespace nanotop {

namespace {

void validate_bounds(const InstanceBounds& b) {
    if (b.max_size < 1 || b.max_size > Universe::max_points) {
        throw std::invalid_argument("max size out of range");
    }
    if (b.pair_samples_per_combo < 0 || b.triple_samples_per_combo < 0) {
        throw std::invalid_argument("sample counts must be nonnegative");
    }
}

std::string family_to_string(const UniversePtr& u,
                             const std::vector<Mask>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ", ";
        out += set_to_string(u, members[i]);
    }
    out += "}";
    return out;
}

std::string instance_detail(const NanoSpace& su, const NanoSpace& sv,
                            const FiniteMap& map) {
    return "domain opens " +
           family_to_string(su.universe(), su.opens().members) +
           "; codomain opens " +
           family_to_string(sv.universe(), sv.opens().members) + "; map " +
           map.arrows_string();
}

// Capped defect recorder: full count, first max_stored_records records.
struct Recorder {
    std::uint64_t count = 0;
    std::vector<Discrepancy> records;

    void add(std::string check, std::string detail,
             std::optional<PairWitness> instance = std::nullopt) {
        ++count;
        if (records.size() < max_stored_records) {
            records.push_back(
                {std::move(check), std::move(detail), std::move(instance)});
        }
    }
};

FiniteMap materialize_map(const NanoSpace& su, const NanoSpace& sv,
                          std::span<const Point> assign) {
    return make_map_by_index(su.universe(), sv.universe(),
                             std::vector<Point>(assign.begin(), assign.end()));
}

PairWitness materialize_witness(const NanoSpace& su, const NanoSpace& sv,
                                std::span<const Point> assign,
                                ContinuityClass holds, ContinuityClass fails) {
    return PairWitness{su, sv, materialize_map(su, sv, assign), holds, fails};
}

// Spaces and their tables for one universe size.
struct SizePool {
    std::vector<NanoSpace> spaces;
    std::vector<SpaceTables> tables;
};

// pools[n] for n = 1..max_n (index 0 unused).
std::vector<SizePool> build_pools(int max_n, SpaceMode mode) {
    std::vector<SizePool> pools(max_n + 1);
    for (int n = 1; n <= max_n; ++n) {
        pools[n].spaces = enumerate_spaces(n, mode);
        pools[n].tables.reserve(pools[n].spaces.size());
        for (const auto& s : pools[n].spaces) pools[n].tables.emplace_back(s);
    }
    return pools;
}

// Canonical pair scan: size combos ordered by (|U|+|V|, |U|), spaces in
// enumeration order, maps in counter order. visit returns false to stop.
// Returns false iff the visit stopped the scan.
template <class Visit>
bool scan_pairs(const std::vector<SizePool>& pools, int cap, Visit&& visit) {
    std::array<Point, Universe::max_points> assign{};
    for (int total = 2; total <= 2 * cap; ++total) {
        for (int nu = std::max(1, total - cap);
             nu <= std::min(cap, total - 1); ++nu) {
            const int nv = total - nu;
            const SizePool& pu = pools[nu];
            const SizePool& pv = pools[nv];
            const std::uint64_t nmaps = map_count(nu, nv);
            for (std::size_t iu = 0; iu < pu.spaces.size(); ++iu) {
                for (std::size_t iv = 0; iv < pv.spaces.size(); ++iv) {
                    for (std::uint64_t k = 0; k < nmaps; ++k) {
                        std::uint64_t rem = k;
                        for (int i = 0; i < nu; ++i) {
                            assign[i] = static_cast<Point>(rem % nv);
                            rem /= nv;
                        }
                        if (!visit(pu.spaces[iu], pv.spaces[iv], pu.tables[iu],
                                   pv.tables[iv],
                                   std::span<const Point>(assign.data(),
                                                          static_cast<std::size_t>(nu)))) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// --- seeded sampling --------------------------------------------------------
// All draws use `rng() % n`; the draw sequence per sample is documented in
// the README so runs are reproducible across platforms.

std::vector<Mask> random_partition_blocks(std::mt19937_64& rng, int n) {
    std::vector<int> rgs(n, 0);
    int mx = 0;
    for (int i = 1; i < n; ++i) {
        rgs[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(mx + 2));
        mx = std::max(mx, rgs[i]);
    }
    std::vector<Mask> blocks(mx + 1, 0);
    for (int i = 0; i < n; ++i) blocks[rgs[i]] |= Mask{1} << i;
    return blocks;
}

NanoSpace random_nano_space(std::mt19937_64& rng, int n) {
    const UniversePtr u = canonical_universe(n);
    const Partition p = make_partition(u, random_partition_blocks(rng, n));
    const Mask m =
        static_cast<Mask>(rng() % (std::uint64_t{1} << n));
    return build_nano_topology(p, PointSet{u, m});
}

std::vector<Point> random_assignment(std::mt19937_64& rng, int nu, int nv) {
    std::vector<Point> assign(nu);
    for (int i = 0; i < nu; ++i) {
        assign[i] = static_cast<Point>(rng() % static_cast<std::uint64_t>(nv));
    }
    return assign;
}

// Sampled pair instances for size combos whose larger side exceeds the
// exhaustive cap. Sampling always draws rough-derived spaces, so pure
// explicit mode has no sampled phase.
template <class Visit>
std::uint64_t sample_pairs(const InstanceBounds& b, int lo_excluded, Visit&& visit) {
    if (b.mode == SpaceMode::explicit_ || b.pair_samples_per_combo == 0) {
        return 0;
    }
    std::mt19937_64 rng(b.seed);
    std::uint64_t sampled = 0;
    for (int total = 2; total <= 2 * b.max_size; ++total) {
        for (int nu = std::max(1, total - b.max_size);
             nu <= std::min(b.max_size, total - 1); ++nu) {
            const int nv = total - nu;
            if (std::max(nu, nv) <= lo_excluded) continue;
            for (int s = 0; s < b.pair_samples_per_combo; ++s) {
                const NanoSpace su = random_nano_space(rng, nu);
                const NanoSpace sv = random_nano_space(rng, nv);
                const std::vector<Point> assign = random_assignment(rng, nu, nv);
                const SpaceTables tu(su);
                const SpaceTables tv(sv);
                ++sampled;
                visit(su, sv, tu, tv,
                      std::span<const Point>(assign.data(), assign.size()));
            }
        }
    }
    return sampled;
}

}  // namespace

const std::vector<std::pair<ContinuityClass, ContinuityClass>>&
stated_implications() {
    using C = ContinuityClass;
    static const std::vector<std::pair<C, C>> v = {
        {C::n, C::nalpha},
        {C::nalpha, C::nsalpha},
        {C::nalpha_star, C::nalpha},
        {C::nalpha_star, C::nsalpha},
        {C::nalpha_2star, C::n},
        {C::nalpha_2star, C::nalpha_star},
        {C::nsalpha_2star, C::nalpha_2star},
        {C::nsalpha_2star, C::nsalpha_star},
        {C::nsalpha_star, C::nsalpha},
    };
    return v;
}

bool implied_by_stated(ContinuityClass from, ContinuityClass to) {
    static const auto closure = [] {
        std::array<std::array<bool, 7>, 7> c{};
        for (int i = 0; i < 7; ++i) c[i][i] = true;
        for (const auto& [a, b] : stated_implications()) {
            c[static_cast<int>(a)][static_cast<int>(b)] = true;
        }
        for (int k = 0; k < 7; ++k) {
            for (int i = 0; i < 7; ++i) {
                for (int j = 0; j < 7; ++j) {
                    if (c[i][k] && c[k][j]) c[i][j] = true;
                }
            }
        }
        return c;
    }();
    return closure[static_cast<int>(from)][static_cast<int>(to)];
}

int ImplicationMatrix::refuted_count() const {
    int n = 0;
    for (const auto& row : cells) {
        for (const auto& cell : row) {
            if (cell.state == CellState::refuted) ++n;
        }
    }
    return n;
}

bool revalidate(const PairWitness& w) {
    // Deliberately uses the direct (table-free) classification so witness
    // soundness does not depend on the fast path being right.
    const ContinuityProfile p = classify(w.map, w.domain_space, w.codomain_space);
    return p[w.holds] && !p[w.fails];
}

bool revalidate(const CompositionWitness& w) {
    const ContinuityProfile p1 = classify(w.h1, w.u_space, w.v_space);
    const ContinuityProfile p2 = classify(w.h2, w.v_space, w.w_space);
    const ContinuityProfile pc =
        classify(compose(w.h2, w.h1), w.u_space, w.w_space);
    return p1[w.premise] && p2[w.premise] && !pc[w.conclusion];
}

ImplicationsReport check_implications(const InstanceBounds& b) {
    validate_bounds(b);
    ImplicationsReport rep;
    rep.bounds = b;

    const int small_cap = std::min(b.max_size, exhaustive_pair_cap);
    const int matrix_cap = std::min(b.max_size, exhaustive_matrix_cap);
    rep.matrix.scanned_max_size = matrix_cap;
    rep.matrix.mode = b.mode;

    const std::vector<SizePool> pools = build_pools(matrix_cap, b.mode);

    Recorder violations;
    const auto& stated = stated_implications();

    // Matrix refutation state: witnesses for the already-refuted cells.
    std::array<std::array<std::optional<PairWitness>, 7>, 7> refuted;
    int unresolved = 7 * 7 - 7;

    auto check_instance = [&](const NanoSpace& su, const NanoSpace& sv,
                              const SpaceTables& tu, const SpaceTables& tv,
                              std::span<const Point> assign, bool feed_matrix) {
        const ContinuityProfile profile = classify(tu, tv, assign);
        const std::uint8_t bits = profile.class_bits();
        for (const auto& [from, to] : stated) {
            const int fi = static_cast<int>(from);
            const int ti = static_cast<int>(to);
            if (((bits >> fi) & 1u) && !((bits >> ti) & 1u)) {
                violations.add(
                    "hierarchy:" + std::string(class_token(from)) + "=>" +
                        std::string(class_token(to)),
                    instance_detail(su, sv, materialize_map(su, sv, assign)),
                    materialize_witness(su, sv, assign, from, to));
            }
        }
        if (feed_matrix && unresolved > 0) {
            for (int a = 0; a < 7; ++a) {
                if (!((bits >> a) & 1u)) continue;
                for (int bb = 0; bb < 7; ++bb) {
                    if (a == bb || refuted[a][bb] || ((bits >> bb) & 1u)) {
                        continue;
                    }
                    refuted[a][bb] = materialize_witness(
                        su, sv, assign, static_cast<ContinuityClass>(a),
                        static_cast<ContinuityClass>(bb));
                    --unresolved;
                }
            }
        }
        return true;
    };

    // One canonical exhaustive scan up to the matrix cap; combos whose sides
    // all fit the pair cap count toward the exhaustive sweep.
    scan_pairs(pools, matrix_cap,
               [&](const NanoSpace& su, const NanoSpace& sv,
                   const SpaceTables& tu, const SpaceTables& tv,
                   std::span<const Point> assign) {
                   ++rep.matrix_instances;
                   if (std::max(su.point_count(), sv.point_count()) <=
                       small_cap) {
                       ++rep.exhaustive_instances;
                   }
                   return check_instance(su, sv, tu, tv, assign, true);
               });

    // Seeded sampling above the exhaustive pair cap (hierarchy checks only;
    // the matrix stays a function of the bounds alone).
    rep.sampled_instances = sample_pairs(
        b, exhaustive_pair_cap,
        [&](const NanoSpace& su, const NanoSpace& sv, const SpaceTables& tu,
            const SpaceTables& tv, std::span<const Point> assign) {
            check_instance(su, sv, tu, tv, assign, false);
        });

    rep.violation_count = violations.count;
    rep.violations = std::move(violations.records);

    for (int a = 0; a < 7; ++a) {
        for (int bb = 0; bb < 7; ++bb) {
            MatrixCell& cell = rep.matrix.cells[a][bb];
            if (refuted[a][bb]) {
                cell.state = CellState::refuted;
                cell.claim = CellClaim::derived;
                cell.witness = std::move(refuted[a][bb]);
                continue;
            }
            cell.state = CellState::proved_empirically;
            if (a == bb) {
                cell.claim = CellClaim::trivial;
            } else {
                cell.claim = CellClaim::derived;
                for (const auto& [from, to] : stated) {
                    if (static_cast<int>(from) == a &&
                        static_cast<int>(to) == bb) {
                        cell.claim = CellClaim::stated;
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

ImplicationMatrix implication_matrix(const InstanceBounds& b) {
    return check_implications(b).matrix;
}

EquivalencesReport check_equivalences(const InstanceBounds& b) {
    validate_bounds(b);
    EquivalencesReport rep;
    rep.bounds = b;
    Recorder discrepancies;

    // --- set level: the two semi-alpha-openness characterizations must
    // agree on every subset of every enumerated space; the alpha/semi-alpha
    // families' topology-axiom status is tallied as an observation.
    const int nano_cap = std::min(b.max_size, exhaustive_setlevel_cap);
    const int explicit_cap = std::min(b.max_size, 4);
    auto scan_space_setlevel = [&](const NanoSpace& s) {
        ++rep.spaces_scanned;
        const SpaceTables t(s);
        const Mask full = s.full_mask();
        const auto& alpha = t.members(kind_nalpha_open);
        for (Mask a = 0;; ++a) {
            ++rep.subsets_checked;
            const bool formula = t.in_family(kind_nsalpha_open, a);
            bool existential = false;
            for (Mask p : alpha) {
                if ((p & a) == p && (a & t.closure(p)) == a) {
                    existential = true;
                    break;
                }
            }
            if (formula != existential) {
                discrepancies.add(
                    "nsalpha-open-two-characterizations",
                    "set " + set_to_string(s.universe(), a) +
                        " in space with opens " +
                        family_to_string(s.universe(), s.opens().members) +
                        ": closure formula " + (formula ? "true" : "false") +
                        ", existential " + (existential ? "true" : "false"));
            }
            if (a == full) break;
        }
        auto family_is_topology = [&](const std::vector<Mask>& fam) {
            SetFamily f = make_family(s.universe(),
                                      std::vector<Mask>(fam.begin(), fam.end()));
            if (!f.contains(0) || !f.contains(full)) return false;
            for (std::size_t i = 0; i < f.members.size(); ++i) {
                for (std::size_t j = i + 1; j < f.members.size(); ++j) {
                    if (!f.contains(f.members[i] | f.members[j]) ||
                        !f.contains(f.members[i] & f.members[j])) {
                        return false;
                    }
                }
            }
            return true;
        };
        if (!family_is_topology(t.members(kind_nalpha_open))) {
            ++rep.alpha_family_topology_failures;
        }
        if (!family_is_topology(t.members(kind_nsalpha_open))) {
            ++rep.nsalpha_family_topology_failures;
        }
    };
    for (int n = 1; n <= nano_cap; ++n) {
        if (b.mode != SpaceMode::explicit_) {
            for (const NanoSpace& s : enumerate_nano_spaces(n)) {
                scan_space_setlevel(s);
            }
        }
        if (b.mode != SpaceMode::nano && n <= explicit_cap) {
            for (const NanoSpace& s : enumerate_explicit_spaces(n)) {
                scan_space_setlevel(s);
            }
        }
    }

    // --- map level: the four semi-alpha continuity characterizations agree
    // (and match the profile), and the interior-inclusion characterization
    // matches plain continuity, over the pair sweep.
    auto check_instance = [&](const NanoSpace& su, const NanoSpace& sv,
                              const SpaceTables& tu, const SpaceTables& tv,
                              std::span<const Point> assign) {
        const ContinuityProfile profile = classify(tu, tv, assign);
        const std::array<bool, 4> four = nsalpha_characterizations(tu, tv, assign);
        const bool all_equal = four[0] == four[1] && four[1] == four[2] &&
                               four[2] == four[3];
        if (!all_equal || four[0] != profile[ContinuityClass::nsalpha]) {
            discrepancies.add(
                "nsalpha-characterizations-agree",
                "values (" + std::to_string(four[0]) + "," +
                    std::to_string(four[1]) + "," + std::to_string(four[2]) +
                    "," + std::to_string(four[3]) + ") with profile NSa=" +
                    std::to_string(profile[ContinuityClass::nsalpha]) + "; " +
                    instance_detail(su, sv, materialize_map(su, sv, assign)));
        }
        const bool thm = n_characterization_interior(tu, tv, assign);
        if (thm != profile[ContinuityClass::n]) {
            discrepancies.add(
                "interior-characterization-matches-continuity",
                "characterization " + std::to_string(thm) + " vs N=" +
                    std::to_string(profile[ContinuityClass::n]) + "; " +
                    instance_detail(su, sv, materialize_map(su, sv, assign)));
        }
        return true;
    };

    const int small_cap = std::min(b.max_size, exhaustive_pair_cap);
    const std::vector<SizePool> pools = build_pools(small_cap, b.mode);
    scan_pairs(pools, small_cap,
               [&](const NanoSpace& su, const NanoSpace& sv,
                   const SpaceTables& tu, const SpaceTables& tv,
                   std::span<const Point> assign) {
                   ++rep.exhaustive_instances;
                   return check_instance(su, sv, tu, tv, assign);
               });
    rep.sampled_instances = sample_pairs(
        b, exhaustive_pair_cap,
        [&](const NanoSpace& su, const NanoSpace& sv, const SpaceTables& tu,
            const SpaceTables& tv, std::span<const Point> assign) {
            check_instance(su, sv, tu, tv, assign);
        });

    rep.discrepancy_count = discrepancies.count;
    rep.discrepancies = std::move(discrepancies.records);
    return rep;
}

TheoremsReport check_conditional_theorems(const InstanceBounds& b) {
    validate_bounds(b);
    TheoremsReport rep;
    rep.bounds = b;
    Recorder violations;

    const int cap = std::min(b.max_size, exhaustive_bijective_cap);
    const std::vector<SizePool> pools = build_pools(cap, b.mode);

    for (int n = 1; n <= cap; ++n) {
        const SizePool& pool = pools[n];
        // Permutations in lexicographic order.
        std::vector<Point> first(n);
        for (int i = 0; i < n; ++i) first[i] = static_cast<Point>(i);
        std::vector<std::vector<Point>> perms;
        std::vector<Point> perm = first;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        for (std::size_t iu = 0; iu < pool.spaces.size(); ++iu) {
            for (std::size_t iv = 0; iv < pool.spaces.size(); ++iv) {
                for (const auto& assign : perms) {
                    ++rep.bijective_instances;
                    const std::span<const Point> sp(assign.data(),
                                                    assign.size());
                    const ContinuityProfile profile =
                        classify(pool.tables[iu], pool.tables[iv], sp);
                    if (!profile.n_open_map) continue;
                    ++rep.n_open_bijective_instances;
                    const NanoSpace& su = pool.spaces[iu];
                    const NanoSpace& sv = pool.spaces[iv];
                    if (profile[ContinuityClass::n]) {
                        ++rep.premise_hits_a;
                        if (!profile[ContinuityClass::nalpha_star]) {
                            violations.add(
                                "bijective-open-continuous-implies-alpha-star",
                                instance_detail(
                                    su, sv, materialize_map(su, sv, sp)),
                                materialize_witness(
                                    su, sv, sp, ContinuityClass::n,
                                    ContinuityClass::nalpha_star));
                        }
                    }
                    if (profile[ContinuityClass::nalpha_star]) {
                        ++rep.premise_hits_b;
                        if (!profile[ContinuityClass::nsalpha_star]) {
                            violations.add(
                                "bijective-open-alpha-star-implies-semi-alpha-star",
                                instance_detail(
                                    su, sv, materialize_map(su, sv, sp)),
                                materialize_witness(
                                    su, sv, sp, ContinuityClass::nalpha_star,
                                    ContinuityClass::nsalpha_star));
                        }
                    }
                }
            }
        }
    }
    rep.notes.push_back(
        "restating the starred classes as family-membership continuity is "
        "true by construction (the classifier already tests family "
        "membership), so it is not an independent check");
    if (b.max_size > cap) {
        rep.notes.push_back(
            "bijective sweep is exhaustive up to size " + std::to_string(cap) +
            "; larger sizes are not scanned");
    }
    rep.violation_count = violations.count;
    rep.violations = std::move(violations.records);
    return rep;
}

CompositionsReport check_compositions(const InstanceBounds& b) {
    validate_bounds(b);
    CompositionsReport rep;
    rep.bounds = b;
    Recorder violations;

    struct Clause {
        ContinuityClass h1;
        ContinuityClass h2;
        ContinuityClass composition;
    };
    using C = ContinuityClass;
    static constexpr std::array<Clause, 10> clause_table = {{
        {C::nalpha, C::n, C::nalpha},
        {C::nalpha_star, C::nalpha, C::nalpha},
        {C::nalpha_star, C::nalpha_star, C::nalpha_star},
        {C::nsalpha_star, C::nsalpha_star, C::nsalpha_star},
        {C::nalpha_2star, C::nalpha_2star, C::nalpha_2star},
        {C::nsalpha_2star, C::nsalpha_2star, C::nsalpha_2star},
        {C::nalpha_2star, C::nalpha_star, C::nalpha_2star},
        {C::nalpha_2star, C::nalpha, C::n},
        {C::nalpha, C::nalpha_2star, C::nalpha_star},
        {C::n, C::nalpha_2star, C::nalpha_2star},
    }};
    for (std::size_t i = 0; i < clause_table.size(); ++i) {
        rep.clauses[i].name =
            "h1=" + std::string(class_token(clause_table[i].h1)) +
            ", h2=" + std::string(class_token(clause_table[i].h2)) +
            " => " + std::string(class_token(clause_table[i].composition));
    }

    const int cap = std::min(b.max_size, exhaustive_triple_cap);
    const std::vector<SizePool> pools = build_pools(cap, b.mode);

    // Classification profiles for every (space, space, map) at sizes <= cap,
    // plus per-class map-index lists for premise iteration.
    struct PairProfiles {
        std::uint32_t nmaps = 0;
        std::vector<std::uint8_t> bits;  // [pair_index * nmaps + map_index]
        // [class][pair_index] -> map indices whose profile has the class.
        std::array<std::vector<std::vector<std::uint16_t>>, 7> by_class;
    };
    std::vector<std::vector<PairProfiles>> prof(
        cap + 1, std::vector<PairProfiles>(cap + 1));
    std::array<Point, Universe::max_points> assign{};
    for (int a = 1; a <= cap; ++a) {
        for (int bb = 1; bb <= cap; ++bb) {
            PairProfiles& pp = prof[a][bb];
            const std::size_t na = pools[a].spaces.size();
            const std::size_t nb = pools[bb].spaces.size();
            pp.nmaps = static_cast<std::uint32_t>(map_count(a, bb));
            pp.bits.assign(na * nb * pp.nmaps, 0);
            for (auto& lists : pp.by_class) lists.resize(na * nb);
            for (std::size_t ia = 0; ia < na; ++ia) {
                for (std::size_t ib = 0; ib < nb; ++ib) {
                    const std::size_t pair_index = ia * nb + ib;
                    for (std::uint32_t k = 0; k < pp.nmaps; ++k) {
                        std::uint32_t rem = k;
                        for (int i = 0; i < a; ++i) {
                            assign[i] = static_cast<Point>(rem % bb);
                            rem /= static_cast<std::uint32_t>(bb);
                        }
                        const std::uint8_t bits =
                            classify(pools[a].tables[ia], pools[bb].tables[ib],
                                     std::span<const Point>(assign.data(),
                                                            static_cast<std::size_t>(a)))
                                .class_bits();
                        pp.bits[pair_index * pp.nmaps + k] = bits;
                        for (int c = 0; c < 7; ++c) {
                            if ((bits >> c) & 1u) {
                                pp.by_class[c][pair_index].push_back(
                                    static_cast<std::uint16_t>(k));
                            }
                        }
                    }
                }
            }
        }
    }

    auto materialize_composition = [&](int nu, int nv, int nw, std::size_t iu,
                                       std::size_t iv, std::size_t iw,
                                       std::uint32_t k1, std::uint32_t k2,
                                       ContinuityClass premise,
                                       ContinuityClass conclusion) {
        const NanoSpace& su = pools[nu].spaces[iu];
        const NanoSpace& sv = pools[nv].spaces[iv];
        const NanoSpace& sw = pools[nw].spaces[iw];
        FiniteMap h1 =
            make_map_by_index(su.universe(), sv.universe(),
                              map_assignment_from_counter(k1, nu, nv));
        FiniteMap h2 =
            make_map_by_index(sv.universe(), sw.universe(),
                              map_assignment_from_counter(k2, nv, nw));
        return CompositionWitness{su,       sv, sw, std::move(h1),
                                  std::move(h2), premise, conclusion};
    };

    // Canonical triple order: totals ascending, then (|U|,|V|,|W|) lex.
    for (int total = 3; total <= 3 * cap; ++total) {
        for (int nu = 1; nu <= cap; ++nu) {
            for (int nv = 1; nv <= cap; ++nv) {
                const int nw = total - nu - nv;
                if (nw < 1 || nw > cap) continue;
                const PairProfiles& uv = prof[nu][nv];
                const PairProfiles& vw = prof[nv][nw];
                const PairProfiles& uw = prof[nu][nw];
                const std::size_t nspaces_v = pools[nv].spaces.size();
                const std::size_t nspaces_w = pools[nw].spaces.size();

                // Composition index table: (k1, k2) -> counter index of
                // h2 after h1 among maps U -> W.
                std::vector<std::uint32_t> comp_index(
                    static_cast<std::size_t>(uv.nmaps) * vw.nmaps);
                {
                    std::vector<std::array<Point, Universe::max_points>> d2(
                        vw.nmaps);
                    for (std::uint32_t k2 = 0; k2 < vw.nmaps; ++k2) {
                        std::uint32_t rem = k2;
                        for (int i = 0; i < nv; ++i) {
                            d2[k2][i] = static_cast<Point>(rem % nw);
                            rem /= static_cast<std::uint32_t>(nw);
                        }
                    }
                    std::array<std::uint32_t, Universe::max_points> pow_w{};
                    std::uint32_t p = 1;
                    for (int i = 0; i < nu; ++i) {
                        pow_w[i] = p;
                        p *= static_cast<std::uint32_t>(nw);
                    }
                    for (std::uint32_t k1 = 0; k1 < uv.nmaps; ++k1) {
                        std::uint32_t rem = k1;
                        std::array<Point, Universe::max_points> d1{};
                        for (int i = 0; i < nu; ++i) {
                            d1[i] = static_cast<Point>(rem % nv);
                            rem /= static_cast<std::uint32_t>(nv);
                        }
                        for (std::uint32_t k2 = 0; k2 < vw.nmaps; ++k2) {
                            std::uint32_t idx = 0;
                            for (int i = 0; i < nu; ++i) {
                                idx += static_cast<std::uint32_t>(d2[k2][d1[i]]) *
                                       pow_w[i];
                            }
                            comp_index[static_cast<std::size_t>(k1) * vw.nmaps +
                                       k2] = idx;
                        }
                    }
                }

                for (std::size_t iu = 0; iu < pools[nu].spaces.size(); ++iu) {
                    for (std::size_t iv = 0; iv < nspaces_v; ++iv) {
                        const std::size_t pair_uv = iu * nspaces_v + iv;
                        for (std::size_t iw = 0; iw < nspaces_w; ++iw) {
                            const std::size_t pair_vw = iv * nspaces_w + iw;
                            const std::size_t pair_uw = iu * nspaces_w + iw;
                            const std::uint8_t* uw_bits =
                                uw.bits.data() + pair_uw * uw.nmaps;
                            rep.exhaustive_triples +=
                                static_cast<std::uint64_t>(uv.nmaps) * vw.nmaps;

                            for (std::size_t ci = 0; ci < clause_table.size();
                                 ++ci) {
                                const Clause& cl = clause_table[ci];
                                const auto& l1 =
                                    uv.by_class[static_cast<int>(cl.h1)][pair_uv];
                                const auto& l2 =
                                    vw.by_class[static_cast<int>(cl.h2)][pair_vw];
                                if (l1.empty() || l2.empty()) continue;
                                rep.clauses[ci].premise_hits +=
                                    static_cast<std::uint64_t>(l1.size()) *
                                    l2.size();
                                const int cc = static_cast<int>(cl.composition);
                                for (std::uint16_t k1 : l1) {
                                    const std::size_t row =
                                        static_cast<std::size_t>(k1) * vw.nmaps;
                                    for (std::uint16_t k2 : l2) {
                                        const std::uint8_t bits =
                                            uw_bits[comp_index[row + k2]];
                                        if (!((bits >> cc) & 1u)) {
                                            ++rep.clauses[ci].violations;
                                            violations.add(
                                                "composition:" +
                                                    rep.clauses[ci].name,
                                                "triple sizes (" +
                                                    std::to_string(nu) + "," +
                                                    std::to_string(nv) + "," +
                                                    std::to_string(nw) + ")");
                                        }
                                    }
                                }
                            }

                            // Composition-failure witnesses: the alpha and
                            // semi-alpha classes are not closed under
                            // composition; keep the first instance of each.
                            auto scan_failure =
                                [&](ContinuityClass cls,
                                    std::optional<CompositionWitness>& slot) {
                                    if (slot) return;
                                    const int c = static_cast<int>(cls);
                                    const auto& l1 = uv.by_class[c][pair_uv];
                                    const auto& l2 = vw.by_class[c][pair_vw];
                                    for (std::uint16_t k1 : l1) {
                                        const std::size_t row =
                                            static_cast<std::size_t>(k1) *
                                            vw.nmaps;
                                        for (std::uint16_t k2 : l2) {
                                            const std::uint8_t bits =
                                                uw_bits[comp_index[row + k2]];
                                            if (!((bits >> c) & 1u)) {
                                                slot = materialize_composition(
                                                    nu, nv, nw, iu, iv, iw, k1,
                                                    k2, cls, cls);
                                                return;
                                            }
                                        }
                                    }
                                };
                            scan_failure(ContinuityClass::nalpha,
                                         rep.nalpha_witness);
                            scan_failure(ContinuityClass::nsalpha,
                                         rep.nsalpha_witness);
                        }
                    }
                }
            }
        }
    }

    // Seeded sampling for size combos beyond the exhaustive cap.
    if (b.max_size > cap && b.mode != SpaceMode::explicit_ &&
        b.triple_samples_per_combo > 0) {
        std::mt19937_64 rng(b.seed);
        for (int total = 3; total <= 3 * b.max_size; ++total) {
            for (int nu = 1; nu <= b.max_size; ++nu) {
                for (int nv = 1; nv <= b.max_size; ++nv) {
                    const int nw = total - nu - nv;
                    if (nw < 1 || nw > b.max_size) continue;
                    if (std::max(nu, std::max(nv, nw)) <= cap) continue;
                    for (int s = 0; s < b.triple_samples_per_combo; ++s) {
                        const NanoSpace su = random_nano_space(rng, nu);
                        const NanoSpace sv = random_nano_space(rng, nv);
                        const NanoSpace sw = random_nano_space(rng, nw);
                        const std::vector<Point> a1 =
                            random_assignment(rng, nu, nv);
                        const std::vector<Point> a2 =
                            random_assignment(rng, nv, nw);
                        const SpaceTables tu(su);
                        const SpaceTables tv(sv);
                        const SpaceTables tw(sw);
                        ++rep.sampled_triples;
                        const std::uint8_t b1 =
                            classify(tu, tv,
                                     std::span<const Point>(a1.data(),
                                                            a1.size()))
                                .class_bits();
                        const std::uint8_t b2 =
                            classify(tv, tw,
                                     std::span<const Point>(a2.data(),
                                                            a2.size()))
                                .class_bits();
                        bool need = false;
                        for (const Clause& cl : clause_table) {
                            if (((b1 >> static_cast<int>(cl.h1)) & 1u) &&
                                ((b2 >> static_cast<int>(cl.h2)) & 1u)) {
                                need = true;
                                break;
                            }
                        }
                        if (!need) continue;
                        std::vector<Point> comp(nu);
                        for (int i = 0; i < nu; ++i) comp[i] = a2[a1[i]];
                        const std::uint8_t bc =
                            classify(tu, tw,
                                     std::span<const Point>(comp.data(),
                                                            comp.size()))
                                .class_bits();
                        for (std::size_t ci = 0; ci < clause_table.size();
                             ++ci) {
                            const Clause& cl = clause_table[ci];
                            if (((b1 >> static_cast<int>(cl.h1)) & 1u) &&
                                ((b2 >> static_cast<int>(cl.h2)) & 1u)) {
                                ++rep.clauses[ci].premise_hits;
                                if (!((bc >>
                                       static_cast<int>(cl.composition)) &
                                      1u)) {
                                    ++rep.clauses[ci].violations;
                                    violations.add(
                                        "composition:" + rep.clauses[ci].name,
                                        "sampled triple sizes (" +
                                            std::to_string(nu) + "," +
                                            std::to_string(nv) + "," +
                                            std::to_string(nw) + ")");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    rep.violation_count = violations.count;
    rep.violations = std::move(violations.records);
    return rep;
}

std::optional<PairWitness> find_witness(ContinuityClass holds,
                                        ContinuityClass fails,
                                        const InstanceBounds& b) {
    validate_bounds(b);
    if (holds == fails) {
        throw std::invalid_argument("witness search needs distinct classes");
    }
    const int cap = std::min(b.max_size, exhaustive_matrix_cap);
    const std::vector<SizePool> pools = build_pools(cap, b.mode);
    std::optional<PairWitness> found;
    scan_pairs(pools, cap,
               [&](const NanoSpace& su, const NanoSpace& sv,
                   const SpaceTables& tu, const SpaceTables& tv,
                   std::span<const Point> assign) {
                   const ContinuityProfile p = classify(tu, tv, assign);
                   if (p[holds] && !p[fails]) {
                       found = materialize_witness(su, sv, assign, holds, fails);
                       return false;
                   }
                   return true;
               });
    return found;
}

SearchReport run_search(ContinuityClass holds, ContinuityClass fails,
                        const InstanceBounds& b) {
    SearchReport rep;
    rep.holds = holds;
    rep.fails = fails;
    rep.bounds = b;
    if (holds == fails) {
        rep.vacuous = true;
        return rep;
    }
    rep.witness = find_witness(holds, fails, b);
    return rep;
}

// --- worked-example replay ---------------------------------------------------

namespace {

bool families_equal(const SetFamily& a, const SetFamily& b) {
    return a.members == b.members;
}

}  // namespace

std::uint64_t ReproReport::check_count() const {
    std::uint64_t n = 0;
    for (const auto& ex : examples) n += ex.checks.size();
    return n;
}

std::uint64_t ReproReport::failure_count() const {
    std::uint64_t n = 0;
    for (const auto& ex : examples) {
        for (const auto& c : ex.checks) {
            if (!c.pass) ++n;
        }
    }
    return n;
}

bool ExampleResult::all_passed() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

ReproReport repro_worked_examples() {
    ReproReport rep;
    for (const WorkedExample& ex : worked_examples()) {
        ExampleResult result;
        result.id = ex.id;
        auto check = [&](const std::string& name, bool pass,
                         std::string detail = "") {
            result.checks.push_back({name, pass, std::move(detail)});
        };

        std::vector<NanoSpace> built;
        std::vector<UniversePtr> universes;
        for (const WorkedSpace& ws : ex.spaces) {
            const UniversePtr u = make_universe(ws.points);
            universes.push_back(u);
            const SetFamily printed = family_from_labels(u, ws.printed_opens);
            if (ws.has_rough_data) {
                const Partition p = partition_from_labels(u, ws.classes);
                const PointSet m = set_from_labels(u, ws.subset);
                const NanoSpace derived = build_nano_topology(p, m);
                const bool matches = families_equal(derived.opens(), printed);
                if (ws.derivation_matches_printed) {
                    check(ex.id + ":" + ws.name +
                              " topology derived from classes/subset matches "
                              "the printed family",
                          matches,
                          matches ? ""
                                  : "derived " +
                                        family_to_string(
                                            u, derived.opens().members));
                    built.push_back(derived);
                } else {
                    // The bundled data says this derivation must NOT match;
                    // reproduce that fact and carry on with the printed
                    // topology.
                    check(ex.id + ":" + ws.name +
                              " derivation mismatch reproduced (printed "
                              "family used instead)",
                          !matches);
                    rep.known_discrepancies.push_back(KnownDiscrepancy{
                        ex.id, ws.name,
                        "topology derived from the stated classes/subset "
                        "differs from the printed topology",
                        u, printed.members, derived.opens().members});
                    built.push_back(make_explicit_space(u, printed));
                }
            } else {
                built.push_back(make_explicit_space(u, printed));
            }
            const NanoSpace& space = built.back();
            if (ws.has_printed_alpha) {
                const SetFamily alpha =
                    enumerate_family(space, FamilyKind::nalpha_open);
                check(ex.id + ":" + ws.name + " alpha-open family matches",
                      families_equal(alpha,
                                     family_from_labels(u, ws.printed_alpha)),
                      family_to_string(u, alpha.members));
            }
            if (ws.has_printed_salpha) {
                const SetFamily salpha =
                    enumerate_family(space, FamilyKind::nsalpha_open);
                check(ex.id + ":" + ws.name +
                          " semi-alpha-open family matches",
                      families_equal(salpha,
                                     family_from_labels(u, ws.printed_salpha)),
                      family_to_string(u, salpha.members));
            }
        }

        std::vector<FiniteMap> maps;
        for (const WorkedMap& wm : ex.maps) {
            const NanoSpace& dom = built[wm.domain_index];
            const NanoSpace& cod = built[wm.codomain_index];
            FiniteMap h = make_map(dom.universe(), cod.universe(), wm.arrows);
            const ContinuityProfile profile = classify(h, dom, cod);
            for (const ExpectedClassification& e : wm.expected) {
                check(e.source + ": " + wm.name + " " +
                          std::string(class_token(e.cls)) + "=" +
                          (e.value ? "true" : "false"),
                      profile[e.cls] == e.value);
            }
            maps.push_back(std::move(h));
        }

        if (ex.check_composition_failure && maps.size() == 2) {
            const FiniteMap comp = compose(maps[1], maps[0]);
            const NanoSpace& dom = built[ex.maps[0].domain_index];
            const NanoSpace& cod = built[ex.maps[1].codomain_index];
            const ContinuityProfile pc = classify(comp, dom, cod);
            check(ex.id + ": composition drops alpha continuity",
                  !pc[ContinuityClass::nalpha]);
            check(ex.id + ": composition drops semi-alpha continuity",
                  !pc[ContinuityClass::nsalpha]);
            const std::array<bool, 4> four =
                nsalpha_characterizations(comp, dom, cod);
            check(ex.id +
                      ": all four semi-alpha characterizations reject the "
                      "composition",
                  !four[0] && !four[1] && !four[2] && !four[3]);
        }
        rep.examples.push_back(std::move(result));
    }
    return rep;
}

}  // namespace nanotop
