#include "nervekit/search.hpp"

#include "nervekit/batch.hpp"
#include "nervekit/constructive.hpp"
#include "nervekit/generators.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerve_checks.hpp"
#include "nervekit/sperner_checks.hpp"
#include "nervekit/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace nervekit {

std::string render_outcome(const PropertyOutcome& outcome) {
    std::ostringstream out;
    out << outcome.name << ": instances " << outcome.instances << ", checks " << outcome.evaluations
        << ", hypothesis passes " << outcome.hypothesis_passes << " (" << outcome.non_vacuous_passes
        << " non-vacuous), violations " << outcome.violations << "\n";
    for (const auto& [key, value] : outcome.counters) out << "  " << key << " = " << value << "\n";
    for (const auto& note : outcome.notes) out << "  note: " << note << "\n";
    return out.str();
}

namespace {

// per-trial tallies, merged in trial order so runs are reproducible under
// any scheduling
struct TrialLog {
    long evaluations = 0;
    long passes = 0;
    long non_vacuous = 0;
    long violations = 0;
    std::map<std::string, long> counters;
    std::vector<std::string> notes;
};

void merge(PropertyOutcome& outcome, const std::vector<TrialLog>& logs) {
    for (const TrialLog& log : logs) {
        outcome.evaluations += log.evaluations;
        outcome.hypothesis_passes += log.passes;
        outcome.non_vacuous_passes += log.non_vacuous;
        outcome.violations += log.violations;
        for (const auto& [key, value] : log.counters) outcome.counters[key] += value;
        outcome.notes.insert(outcome.notes.end(), log.notes.begin(), log.notes.end());
    }
}

long pick(std::mt19937_64& rng, long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double pick_real(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

const std::vector<FieldSpec>& two_fields() {
    static const std::vector<FieldSpec> fields{FieldSpec::f2(), FieldSpec::rationals()};
    return fields;
}

const std::vector<FieldSpec>& three_fields() {
    static const std::vector<FieldSpec> fields{FieldSpec::f2(), FieldSpec::fp(3), FieldSpec::rationals()};
    return fields;
}

// ---------------------------------------------------------------------------
// cover profiles: per-mask intersection/union homology, computed once and
// reused across every (k, l) evaluation of the same cover

struct CoverProfile {
    int n = 0;
    std::vector<char> nonempty_inter;  // by mask
    std::vector<BettiVector> inter;    // by mask (nonempty masks)
    std::vector<BettiVector> uni;
    BettiVector nerve_betti;
    BettiVector host_betti;
};

CoverProfile profile_cover(const Cover& cover, const FieldSpec& field) {
    CoverProfile profile;
    profile.n = static_cast<int>(cover.size());
    std::size_t masks = std::size_t{1} << profile.n;
    std::vector<SimplicialComplex> inters(masks), unis(masks);
    profile.nonempty_inter.assign(masks, 0);
    profile.inter.resize(masks);
    profile.uni.resize(masks);

    for (MemberMask mask = 1; mask < masks; ++mask) {
        MemberMask low = mask & (~mask + 1);
        MemberMask rest = mask ^ low;
        std::size_t low_index = static_cast<std::size_t>(std::countr_zero(low));
        if (rest == 0) {
            inters[mask] = cover.members[low_index];
            unis[mask] = cover.members[low_index];
        } else {
            inters[mask] = complex_intersection(inters[rest], cover.members[low_index]);
            unis[mask] = complex_union(unis[rest], cover.members[low_index]);
        }
        profile.nonempty_inter[mask] = inters[mask].empty() ? 0 : 1;
        profile.inter[mask] = reduced_betti(inters[mask], field);
        profile.uni[mask] = reduced_betti(unis[mask], field);
    }

    std::set<Simplex> nerve_simplices;
    for (MemberMask mask = 1; mask < masks; ++mask)
        if (profile.nonempty_inter[mask]) {
            std::vector<VertexId> ids;
            for (int i : mask_to_indices(mask)) ids.push_back(i);
            nerve_simplices.insert(Simplex(std::move(ids)));
        }
    profile.nerve_betti = reduced_betti(SimplicialComplex::from_closed(std::move(nerve_simplices)), field);
    profile.host_betti = reduced_betti(cover.host, field);
    return profile;
}

struct MixedEvaluation {
    bool pass = true;
    bool non_vacuous = false;
    bool conclusion = false;
};

MixedEvaluation evaluate_mixed(const CoverProfile& profile, int k, int l) {
    MixedEvaluation ev;
    for (MemberMask mask = 1; mask < (MemberMask{1} << profile.n); ++mask) {
        if (!profile.nonempty_inter[mask]) continue;  // the theorem quantifies over nerve simplices
        int size = mask_size(mask);
        int dim = size - 1;
        if (dim <= k) {
            if (profile.inter[mask].betti(k - size) != 0) ev.pass = false;
            if (k - size >= 0) ev.non_vacuous = true;
        } else if (dim <= l) {
            if (profile.uni[mask].betti(size - 2) != 0) ev.pass = false;
            if (size - 2 >= 0) ev.non_vacuous = true;
        }
    }
    ev.non_vacuous = ev.non_vacuous && ev.pass;
    ev.conclusion = profile.nerve_betti.betti(l) <= profile.host_betti.betti(l);
    return ev;
}

struct HellyEvaluation {
    bool pass = true;
    bool non_vacuous = false;
    bool conclusion = false;
};

HellyEvaluation evaluate_helly(const CoverProfile& profile, int k) {
    HellyEvaluation ev;
    MemberMask full = (MemberMask{1} << profile.n) - 1;
    for (MemberMask mask = 1; mask <= full; ++mask) {
        int size = mask_size(mask);
        if (size <= k + 1) {
            if (profile.inter[mask].betti(k - size) != 0) ev.pass = false;
            if (k - size >= 0) ev.non_vacuous = true;
        } else {
            if (profile.uni[mask].betti(size - 2) != 0) ev.pass = false;
            if (size - 2 >= 0) ev.non_vacuous = true;
        }
    }
    ev.non_vacuous = ev.non_vacuous && ev.pass;
    ev.conclusion = profile.nonempty_inter[full] != 0;
    return ev;
}

Cover random_cover_instance(std::uint64_t trial_seed, int max_vertices, int max_parts) {
    std::mt19937_64 rng(trial_seed);
    int n = static_cast<int>(pick(rng, 4, max_vertices));
    int d = pick(rng, 0, 9) < 7 ? 2 : 1;
    if (d > n - 1) d = 1;
    double p = pick_real(rng, 0.15, 0.95);
    int parts = static_cast<int>(pick(rng, 2, max_parts));
    SimplicialComplex host = random_complex(n, d, p, derive_seed(trial_seed, 11));
    return random_cover(host, parts, derive_seed(trial_seed, 13));
}

// ---------------------------------------------------------------------------
// colour profiles for the rainbow checkers

struct ColourProfile {
    int m = 0;
    std::vector<BettiVector> induced_betti;    // by colour mask
    std::vector<BettiVector> not_spanning;     // by colour mask
    std::vector<Simplex> rainbows;
    std::vector<VertexId> isolated_vertices;   // isolated on their colour
    bool all_classes_discrete = false;
    bool every_simplex_extends = false;
};

ColourProfile profile_coloured(const ColouredComplex& K, const FieldSpec& field) {
    ColourProfile profile;
    profile.m = K.max_colour();
    ColourMask full = (ColourMask{1} << (profile.m + 1)) - 1;
    profile.induced_betti.resize(full + 1);
    profile.not_spanning.resize(full + 1);
    for (ColourMask mask = 1; mask <= full; ++mask) {
        profile.induced_betti[mask] = reduced_betti(sub_by_colours(K, mask), field);
        profile.not_spanning[mask] = reduced_betti(not_spanning_colours(K, mask), field);
    }
    profile.rainbows = rainbow_simplices(K);

    std::set<VertexId> with_same_colour_edge;
    for (const Simplex& e : K.complex().simplices_of_dim(1)) {
        VertexId a = e.vertices()[0], b = e.vertices()[1];
        if (K.colour_of(a) == K.colour_of(b)) {
            with_same_colour_edge.insert(a);
            with_same_colour_edge.insert(b);
        }
    }
    for (VertexId v : K.complex().vertices())
        if (!with_same_colour_edge.count(v)) profile.isolated_vertices.push_back(v);
    profile.all_classes_discrete = with_same_colour_edge.empty();

    profile.every_simplex_extends = true;
    for (int d = 0; d <= K.complex().dim() && profile.every_simplex_extends; ++d)
        for (const Simplex& s : K.complex().simplices_of_dim(d)) {
            bool extends = false;
            for (const Simplex& r : profile.rainbows)
                if (s.is_face_of(r)) { extends = true; break; }
            if (!extends) { profile.every_simplex_extends = false; break; }
        }
    return profile;
}

bool meshulam_pass(const ColourProfile& profile) {
    ColourMask full = (ColourMask{1} << (profile.m + 1)) - 1;
    for (ColourMask mask = 1; mask <= full; ++mask)
        if (profile.induced_betti[mask].betti(mask_size(mask) - 2) != 0) return false;
    return true;
}

bool remixed_pass(const ColourProfile& profile, int k) {
    ColourMask full = (ColourMask{1} << (profile.m + 1)) - 1;
    if (profile.induced_betti[full].betti(profile.m - 1) != 0) return false;
    for (ColourMask mask = 1; mask < full; ++mask) {
        int size = mask_size(mask);
        if (1 <= size && size <= k + 1) {
            if (profile.induced_betti[full & ~mask].betti(k - size) != 0) return false;
        } else if (k + 2 <= size && size <= profile.m) {
            if (profile.not_spanning[mask].betti(size - 2) != 0) return false;
        }
    }
    return true;
}

ColouredComplex random_coloured_instance(std::uint64_t trial_seed, int max_vertices) {
    std::mt19937_64 rng(trial_seed);
    long flavour = pick(rng, 0, 9);
    int m = static_cast<int>(pick(rng, 1, 3));
    if (flavour < 2) {
        // complete multipartite: colour classes independent, all joins acyclic
        // in the tested degrees, rainbow simplices guaranteed
        std::vector<int> sizes(static_cast<std::size_t>(m) + 1, 1);
        int budget = max_vertices - (m + 1);
        for (int extra = 0; extra < budget; ++extra) {
            if (pick(rng, 0, 1) == 0) break;
            ++sizes[static_cast<std::size_t>(pick(rng, 0, m))];
        }
        std::vector<std::vector<VertexId>> classes(static_cast<std::size_t>(m) + 1);
        int next = 0;
        for (int c = 0; c <= m; ++c)
            for (int i = 0; i < sizes[static_cast<std::size_t>(c)]; ++i)
                classes[static_cast<std::size_t>(c)].push_back(next++);
        std::set<std::pair<int, int>> edges;
        for (int a = 0; a < next; ++a)
            for (int b = a + 1; b < next; ++b) {
                int ca = -1, cb = -1;
                for (int c = 0; c <= m; ++c) {
                    for (VertexId v : classes[static_cast<std::size_t>(c)]) {
                        if (v == a) ca = c;
                        if (v == b) cb = c;
                    }
                }
                if (ca != cb) edges.insert({a, b});
            }
        SimplicialComplex X = clique_complex(Graph::make(next, std::move(edges)));
        return ColouredComplex::make(std::move(X), std::move(classes));
    }
    if (flavour < 3) {
        int n = static_cast<int>(pick(rng, m + 1, std::min(max_vertices, 6)));
        return random_colouring(full_simplex(n - 1), m, derive_seed(trial_seed, 3));
    }
    int n = static_cast<int>(pick(rng, std::max(m + 1, 4), max_vertices));
    int d = pick(rng, 0, 9) < 7 ? 2 : 1;
    if (d > n - 1) d = 1;
    double p = pick_real(rng, 0.3, 1.0);
    SimplicialComplex X = random_complex(n, d, p, derive_seed(trial_seed, 5));
    return random_colouring(X, m, derive_seed(trial_seed, 7));
}

SimplicialComplex relabel(const SimplicialComplex& X, std::mt19937_64& rng, int id_space) {
    std::vector<VertexId> pool(static_cast<std::size_t>(id_space));
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[static_cast<std::size_t>(rng() % i)]);
    std::map<VertexId, VertexId> to_new;
    std::size_t next = 0;
    for (VertexId v : X.vertices()) to_new[v] = pool[next++];
    std::vector<Simplex> facets;
    for (const Simplex& f : X.facets()) {
        std::vector<VertexId> vs;
        for (VertexId v : f.vertices()) vs.push_back(to_new.at(v));
        facets.emplace_back(std::move(vs));
    }
    return SimplicialComplex::close(facets);
}

}  // namespace

// ---------------------------------------------------------------------------

PropertyOutcome mixed_nerve_property(std::uint64_t seed, long covers, long min_stratum) {
    PropertyOutcome outcome;
    outcome.name = "mixed-nerve";

    long union_stratum = 0;  // covers with a non-vacuous k = -1 pass
    long prior_stratum = 0;  // covers with a non-vacuous k = l pass
    long trial_base = 0;
    const long hard_cap = covers * 50 + 1000;

    while (true) {
        long chunk = outcome.instances == 0 ? covers : std::max<long>(covers / 4, 50);
        if (trial_base + chunk > hard_cap) chunk = hard_cap - trial_base;
        if (chunk <= 0) break;
        std::vector<TrialLog> logs(static_cast<std::size_t>(chunk));

#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < chunk; ++t) {
            TrialLog& log = logs[static_cast<std::size_t>(t)];
            std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(trial_base + t));
            Cover cover = random_cover_instance(trial_seed, 9, 5);
            int parts = static_cast<int>(cover.size());
            bool union_hit = false, prior_hit = false;

            for (const FieldSpec& field : two_fields()) {
                CoverProfile profile = profile_cover(cover, field);
                for (int k = -1; k < parts; ++k)
                    for (int l = std::max(k, 0); l < parts; ++l) {
                        if (k > l) continue;
                        MixedEvaluation ev = evaluate_mixed(profile, k, l);
                        ++log.evaluations;
                        if (!ev.pass) continue;
                        ++log.passes;
                        if (ev.non_vacuous) ++log.non_vacuous;
                        if (!ev.conclusion) {
                            ++log.violations;
                            log.notes.push_back("mixed-nerve violation: trial " +
                                                std::to_string(trial_base + t) + ", field " + field.name() +
                                                ", k = " + std::to_string(k) + ", l = " + std::to_string(l));
                        }
                        if (ev.non_vacuous && k == -1) union_hit = true;
                        if (ev.non_vacuous && k == l) prior_hit = true;
                    }
                // also k = -1 with l = -1 (trivial conclusion degree)
                MixedEvaluation ev = evaluate_mixed(profile, -1, -1);
                ++log.evaluations;
                if (ev.pass) {
                    ++log.passes;
                    if (!ev.conclusion) ++log.violations;
                }
            }

            // cross-check the table-driven evaluation against the public
            // checkers on a sample of trials
            if ((trial_base + t) % 101 == 0) {
                const FieldSpec& field = two_fields()[0];
                CoverProfile profile = profile_cover(cover, field);
                for (int k = -1; k < parts; ++k)
                    for (int l = std::max(k, 0); l < parts; ++l) {
                        MixedHypotheses hyp = check_mixed_hypotheses(cover, k, l, field, ExecMode::Serial);
                        MixedConclusion conclusion = verify_mixed_conclusion(cover, l, field);
                        MixedEvaluation ev = evaluate_mixed(profile, k, l);
                        if (hyp.all_pass() != ev.pass || conclusion.holds != ev.conclusion) {
                            ++log.violations;
                            log.notes.push_back("mixed-nerve cross-check mismatch at trial " +
                                                std::to_string(trial_base + t));
                        }
                    }
            }

            if (union_hit) log.counters["stratum_union_covers"] = 1;
            if (prior_hit) log.counters["stratum_prior_covers"] = 1;
        }

        merge(outcome, logs);
        outcome.instances += chunk;
        trial_base += chunk;
        union_stratum = outcome.counters["stratum_union_covers"];
        prior_stratum = outcome.counters["stratum_prior_covers"];
        if (outcome.instances >= covers &&
            (min_stratum <= 0 || (union_stratum >= min_stratum && prior_stratum >= min_stratum)))
            break;
        if (trial_base >= hard_cap) {
            outcome.notes.push_back("stratum quota not reached before the trial cap");
            break;
        }
    }
    return outcome;
}

PropertyOutcome killing_property(std::uint64_t seed, long complexes) {
    PropertyOutcome outcome;
    outcome.name = "homology-killing";
    outcome.instances = complexes;
    std::vector<TrialLog> logs(static_cast<std::size_t>(complexes));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < complexes; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 rng(trial_seed);
        int n = static_cast<int>(pick(rng, 3, 8));
        int gen_d = n >= 3 ? (pick(rng, 0, 1) ? 2 : 1) : 1;
        if (gen_d > n - 1) gen_d = n - 1;
        double p = pick_real(rng, 0.0, 0.9);
        SimplicialComplex K = random_complex(n, gen_d, p, derive_seed(trial_seed, 1));

        for (int d : {1, 2}) {
            for (const FieldSpec& field : three_fields()) {
                ++log.evaluations;
                try {
                    SimplicialComplex killed = kill_homology(K, d, field);
                    // external re-verification of both postconditions
                    BettiVector before = reduced_betti(K, field);
                    BettiVector after = reduced_betti(killed, field);
                    bool ok = true;
                    for (int i = -1; i <= d - 1; ++i)
                        if (after.betti(i) != 0) ok = false;
                    for (int i = d; i <= std::max(before.max_degree(), after.max_degree()); ++i)
                        if (after.betti(i) != before.betti(i)) ok = false;
                    SimplicialComplex twice = kill_homology(killed, d, field);
                    if (!(twice == killed)) ok = false;
                    if (ok) {
                        ++log.passes;
                        ++log.non_vacuous;
                    } else {
                        ++log.violations;
                        log.notes.push_back("killing postconditions failed externally at trial " +
                                            std::to_string(t) + ", d = " + std::to_string(d) + ", field " +
                                            field.name());
                    }
                } catch (const std::logic_error& e) {
                    ++log.violations;
                    log.notes.push_back("killing internal verification failed at trial " +
                                        std::to_string(t) + ": " + e.what());
                }
            }
        }
    }
    merge(outcome, logs);
    return outcome;
}

PropertyOutcome union_acyclicity_property(std::uint64_t seed, long instances) {
    PropertyOutcome outcome;
    outcome.name = "union-acyclicity";
    outcome.instances = instances;
    std::vector<TrialLog> logs(static_cast<std::size_t>(instances));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < instances; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 rng(trial_seed);
        int n = static_cast<int>(pick(rng, 4, 8));
        int d = pick(rng, 0, 9) < 7 ? 2 : 1;
        if (d > n - 1) d = 1;
        double p = pick_real(rng, 0.2, 1.0);
        SimplicialComplex host = random_complex(n, d, p, derive_seed(trial_seed, 1));
        const auto& facets = host.facets();

        int count = static_cast<int>(pick(rng, 2, 4));
        // members share a seeded common facet half of the time, which biases
        // the sample toward instances whose hypotheses actually hold
        bool common = pick(rng, 0, 1) == 1;
        std::size_t common_facet = static_cast<std::size_t>(rng() % facets.size());
        std::vector<SimplicialComplex> members;
        for (int i = 0; i < count; ++i) {
            if (i >= 1 && pick(rng, 0, 9) == 0) {
                members.push_back(members.back());  // collections allow repetition
                continue;
            }
            std::vector<Simplex> chosen;
            if (common) chosen.push_back(facets[common_facet]);
            for (const Simplex& f : facets)
                if (pick(rng, 0, 9) < 4) chosen.push_back(f);
            if (chosen.empty()) chosen.push_back(facets[static_cast<std::size_t>(rng() % facets.size())]);
            members.push_back(SimplicialComplex::close(chosen));
        }

        int s = static_cast<int>(members.size());
        for (const FieldSpec& field : two_fields()) {
            ++log.evaluations;
            // hypothesis: every nonempty subcollection has vanishing reduced
            // homology of the intersection in degree |sigma| - |tau| - 1
            bool hypothesis = true;
            for (MemberMask mask = 1; mask < (MemberMask{1} << s); ++mask) {
                SimplicialComplex inter = members[static_cast<std::size_t>(mask_to_indices(mask)[0])];
                for (int idx : mask_to_indices(mask))
                    inter = complex_intersection(inter, members[static_cast<std::size_t>(idx)]);
                int degree = s - mask_size(mask) - 1;
                if (reduced_betti(inter, field).betti(degree) != 0) { hypothesis = false; break; }
            }
            if (!hypothesis) continue;
            ++log.passes;
            ++log.non_vacuous;
            SimplicialComplex all;
            for (const SimplicialComplex& member : members) all = complex_union(all, member);
            if (reduced_betti(all, field).betti(s - 2) != 0) {
                ++log.violations;
                log.notes.push_back("union-acyclicity violation at trial " + std::to_string(t) +
                                    ", field " + field.name());
            }
        }
    }
    merge(outcome, logs);
    return outcome;
}

PropertyOutcome colour_union_property(std::uint64_t seed, long instances) {
    PropertyOutcome outcome;
    outcome.name = "colour-support-homology";
    outcome.instances = instances;
    std::vector<TrialLog> logs(static_cast<std::size_t>(instances));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < instances; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 rng(trial_seed);
        int n = static_cast<int>(pick(rng, 3, 7));
        int m = static_cast<int>(pick(rng, 1, std::min(2, n - 1)));
        int d = n >= 4 && pick(rng, 0, 9) < 6 ? 2 : 1;
        if (d > n - 1) d = 1;
        double p = pick_real(rng, 0.2, 1.0);
        SimplicialComplex X = random_complex(n, d, p, derive_seed(trial_seed, 1));
        ColouredComplex K = random_colouring(X, m, derive_seed(trial_seed, 2));
        Subdivision sd = barycentric_subdivision(X);

        std::vector<SimplicialComplex> supports;
        for (int c = 0; c <= m; ++c) supports.push_back(sd_colour_support(K, c, sd));

        for (const FieldSpec& field : two_fields()) {
            for (ColourMask mask = 1; mask < (ColourMask{1} << (m + 1)); ++mask) {
                ++log.evaluations;
                ++log.passes;
                ++log.non_vacuous;
                SimplicialComplex join;
                for (int c : colours_of_mask(mask))
                    join = complex_union(join, supports[static_cast<std::size_t>(c)]);
                BettiVector lhs = reduced_betti(join, field);
                BettiVector rhs = reduced_betti(sub_by_colours(K, mask), field);
                if (!(lhs == rhs)) {
                    ++log.violations;
                    log.notes.push_back("colour-support homology mismatch at trial " + std::to_string(t) +
                                        ", colours " + std::to_string(mask) + ", field " + field.name());
                }
            }
        }
    }
    merge(outcome, logs);
    return outcome;
}

PropertyOutcome helly_property(std::uint64_t seed, long covers) {
    PropertyOutcome outcome;
    outcome.name = "helly";
    outcome.instances = covers;
    std::vector<TrialLog> logs(static_cast<std::size_t>(covers));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < covers; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        Cover cover = random_cover_instance(trial_seed, 9, 5);
        int parts = static_cast<int>(cover.size());

        for (const FieldSpec& field : two_fields()) {
            CoverProfile profile = profile_cover(cover, field);
            for (int k = -1; k <= parts - 2; ++k) {
                HellyEvaluation ev = evaluate_helly(profile, k);
                ++log.evaluations;
                if (!ev.pass) continue;
                ++log.passes;
                if (ev.non_vacuous) ++log.non_vacuous;
                if (!ev.conclusion) {
                    ++log.violations;
                    log.notes.push_back("helly violation: trial " + std::to_string(t) + ", field " +
                                        field.name() + ", k = " + std::to_string(k));
                }
            }
        }

        if (t % 101 == 0) {
            const FieldSpec& field = two_fields()[1];
            CoverProfile profile = profile_cover(cover, field);
            for (int k = -1; k <= parts - 2; ++k) {
                HellyReport report = helly_check(cover, k, field, HellyOptions{-1, ExecMode::Serial});
                HellyEvaluation ev = evaluate_helly(profile, k);
                if (report.hypotheses_pass != ev.pass ||
                    report.intersection_nonempty != ev.conclusion) {
                    ++log.violations;
                    log.notes.push_back("helly cross-check mismatch at trial " + std::to_string(t));
                }
            }
        }
    }
    merge(outcome, logs);
    return outcome;
}

PropertyOutcome meshulam_family_property(std::uint64_t seed, long instances) {
    PropertyOutcome outcome;
    outcome.name = "rainbow-family";
    outcome.instances = instances;
    std::vector<TrialLog> logs(static_cast<std::size_t>(instances));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < instances; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        ColouredComplex K = random_coloured_instance(trial_seed, 8);
        int m = K.max_colour();

        for (const FieldSpec& field : two_fields()) {
            ColourProfile profile = profile_coloured(K, field);
            bool plain = meshulam_pass(profile);

            ++log.evaluations;
            if (plain) {
                ++log.passes;
                if (m >= 1) { ++log.non_vacuous; ++log.counters["meshulam_nonvacuous"]; }
                if (profile.rainbows.empty()) {
                    ++log.violations;
                    log.notes.push_back("rainbow violation (plain) at trial " + std::to_string(t) +
                                        ", field " + field.name());
                }
            }

            for (int k = -1; k <= m - 1; ++k) {
                ++log.evaluations;
                if (!remixed_pass(profile, k)) continue;
                ++log.passes;
                if (m >= 1) { ++log.non_vacuous; ++log.counters["remixed_nonvacuous"]; }
                if (profile.rainbows.empty()) {
                    ++log.violations;
                    log.notes.push_back("rainbow violation (k = " + std::to_string(k) + ") at trial " +
                                        std::to_string(t) + ", field " + field.name());
                }
            }

            for (VertexId v : profile.isolated_vertices) {
                ++log.evaluations;
                if (!plain) continue;
                ++log.passes;
                bool contains = false;
                for (const Simplex& r : profile.rainbows)
                    if (r.contains(v)) { contains = true; break; }
                if (m >= 1) { ++log.non_vacuous; ++log.counters["isolated_nonvacuous"]; }
                if (!contains) {
                    ++log.violations;
                    log.notes.push_back("rainbow violation (isolated vertex " + std::to_string(v) +
                                        ") at trial " + std::to_string(t) + ", field " + field.name());
                }
            }

            if (profile.all_classes_discrete) {
                ++log.evaluations;
                if (plain) {
                    ++log.passes;
                    if (m >= 1) { ++log.non_vacuous; ++log.counters["discrete_nonvacuous"]; }
                    if (!profile.every_simplex_extends) {
                        ++log.violations;
                        log.notes.push_back("rainbow violation (discrete) at trial " + std::to_string(t) +
                                            ", field " + field.name());
                    }
                }
            }
        }

        // cross-check the profile evaluation against the public checkers
        if (t % 101 == 0) {
            const FieldSpec& field = two_fields()[0];
            ColourProfile profile = profile_coloured(K, field);
            MeshulamReport plain = check_meshulam(K, field, ExecMode::Serial);
            if (plain.hypotheses.all_pass != meshulam_pass(profile) || plain.theorem_violation) {
                ++log.violations;
                log.notes.push_back("rainbow cross-check mismatch (plain) at trial " + std::to_string(t));
            }
            for (int k = -1; k <= m - 1; ++k) {
                RemixedReport rep = check_remixed(K, k, field, ExecMode::Serial);
                if (rep.hypotheses_pass != remixed_pass(profile, k) || rep.theorem_violation) {
                    ++log.violations;
                    log.notes.push_back("rainbow cross-check mismatch (k) at trial " + std::to_string(t));
                }
            }
        }
    }
    merge(outcome, logs);
    return outcome;
}

PropertyOutcome polytopal_property(std::uint64_t seed, long instances) {
    PropertyOutcome outcome;
    outcome.name = "polytopal-rainbow";
    outcome.instances = instances;
    std::vector<TrialLog> logs(static_cast<std::size_t>(instances));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < instances; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        ColouredComplex K = random_coloured_instance(trial_seed, 8);
        int m = K.max_colour();

        std::vector<SimplicialComplex> patterns;
        patterns.push_back(simplex_boundary(m));
        if (m == 3) {
            // a 4-cycle pattern: a 1-dimensional pseudomanifold on the colours
            patterns.push_back(SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
        }

        for (const FieldSpec& field : two_fields()) {
            for (const SimplicialComplex& M : patterns) {
                ++log.evaluations;
                PolytopalReport report = polytopal_meshulam(K, M, field, ExecMode::Serial);
                if (!report.preconditions_pass) continue;
                ++log.passes;
                ++log.non_vacuous;
                if (report.theorem_violation || !report.identity_verified) {
                    ++log.violations;
                    log.notes.push_back("polytopal violation at trial " + std::to_string(t) + ", field " +
                                        field.name());
                }
                // simplex-boundary patterns must agree with the plain checker
                if (M.dim() == m - 1 && static_cast<int>(M.simplices_of_dim(0).size()) == m + 1 &&
                    M == simplex_boundary(m)) {
                    MeshulamReport plain = check_meshulam(K, field, ExecMode::Serial);
                    bool rainbow_count_matches =
                        static_cast<long>(plain.rainbows.size()) == report.colourful_count;
                    if (!plain.hypotheses.all_pass || !rainbow_count_matches) {
                        ++log.violations;
                        log.notes.push_back("polytopal/plain reduction mismatch at trial " +
                                            std::to_string(t));
                    }
                }
            }
        }
    }
    merge(outcome, logs);
    return outcome;
}

PropertyOutcome count_lemma_property(std::uint64_t seed, long chains) {
    PropertyOutcome outcome;
    outcome.name = "support-count";
    outcome.instances = chains;
    std::vector<TrialLog> logs(static_cast<std::size_t>(chains));

#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < chains; ++t) {
        TrialLog& log = logs[static_cast<std::size_t>(t)];
        std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 rng(trial_seed);

        // an orientable pseudomanifold, relabeled into a scattered id space
        SimplicialComplex M;
        long family = pick(rng, 0, 9);
        if (family < 5) {
            int len = static_cast<int>(pick(rng, 3, 9));
            std::vector<std::vector<VertexId>> edges;
            for (int i = 0; i < len; ++i) edges.push_back({i, (i + 1) % len});
            M = SimplicialComplex::from_facets(edges);
        } else if (family < 8) {
            M = simplex_boundary(static_cast<int>(pick(rng, 1, 3)));
        } else {
            // the octahedron
            M = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5},
                                                {1, 2, 3}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
        }
        M = relabel(M, rng, 12);
        const FieldSpec& field = three_fields()[static_cast<std::size_t>(pick(rng, 0, 2))];

        ++log.evaluations;
        auto z = fundamental_class(M, field);
        if (!z) {
            ++log.violations;
            log.notes.push_back("support-count: missing fundamental class at trial " + std::to_string(t));
            continue;
        }
        VertexId apex = M.vertices().back() + 1;
        Chain cone(z->dim() + 1);
        for (const auto& [s, coeff] : z->terms()) cone.add_term(s.with_vertex(apex), coeff, field);

        CountLemmaReport report = count_lemma_check(cone, field);
        ++log.passes;
        ++log.non_vacuous;
        bool ok = report.bound_holds && report.unique_boundary_component &&
                  report.n == static_cast<int>(M.vertex_count()) && report.s == cone.dim();
        if (!ok) {
            ++log.violations;
            log.notes.push_back("support-count violation at trial " + std::to_string(t) + ", field " +
                                field.name());
        }
    }
    merge(outcome, logs);
    return outcome;
}

std::vector<PropertyOutcome> sharpness_witnesses() {
    std::vector<PropertyOutcome> out;

    {
        PropertyOutcome witness;
        witness.name = "sharpness-banded-torus";
        witness.instances = 1;
        witness.evaluations = 1;
        ColouredComplex K = banded_torus(3, 3, {1, 1, 1});
        RemixedReport report = check_remixed(K, -1, FieldSpec::f2(), ExecMode::Serial);
        bool shape = !report.top.pass && report.inter.entries.empty() && report.uni.all_pass &&
                     report.rainbows.empty() && !report.hypotheses_pass && !report.theorem_violation;
        witness.counters["expected_shape"] = shape ? 1 : 0;
        witness.counters["top_betti_observed"] = report.top.observed;
        witness.counters["rainbow_count"] = static_cast<long>(report.rainbows.size());
        if (shape)
            witness.notes.push_back(
                "banded torus: every not-spanning hypothesis passes, the top homology does not vanish, "
                "and no rainbow simplex exists; the top condition cannot be dropped");
        else
            witness.violations = 1;
        out.push_back(std::move(witness));
    }

    {
        PropertyOutcome witness;
        witness.name = "sharpness-circle-cover";
        witness.instances = 1;
        witness.evaluations = 1;
        SimplicialComplex circle = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
        std::vector<SimplicialComplex> arcs;
        arcs.push_back(SimplicialComplex::from_facets({{0, 1}}));
        arcs.push_back(SimplicialComplex::from_facets({{1, 2}}));
        arcs.push_back(SimplicialComplex::from_facets({{0, 2}}));
        Cover cover = Cover::make(circle, std::move(arcs));
        HellyReport report = helly_check(cover, -1, FieldSpec::rationals(), HellyOptions{-1, ExecMode::Serial});
        // exactly one failing hypothesis: the full-collection union
        int failing = 0;
        bool full_fails = false;
        for (const auto& e : report.uni.entries)
            if (!e.pass) {
                ++failing;
                if (e.subset == std::vector<int>{0, 1, 2} && e.degree == 1 && e.observed == 1)
                    full_fails = true;
            }
        for (const auto& e : report.inter.entries)
            if (!e.pass) ++failing;
        bool shape = failing == 1 && full_fails && !report.intersection_nonempty &&
                     !report.hypotheses_pass && !report.theorem_violation;
        witness.counters["expected_shape"] = shape ? 1 : 0;
        witness.counters["failing_hypotheses"] = failing;
        if (shape)
            witness.notes.push_back(
                "three-arc circle cover: every hypothesis passes except the full-collection union "
                "(degree 1), and the intersection is empty; that union condition cannot be dropped");
        else
            witness.violations = 1;
        out.push_back(std::move(witness));
    }

    return out;
}

}  // namespace nervekit
