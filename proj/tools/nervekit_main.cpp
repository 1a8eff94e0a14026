#include "nervekit/batch.hpp"
#include "nervekit/constructive.hpp"
#include "nervekit/document.hpp"
#include "nervekit/generators.hpp"
#include "nervekit/homology.hpp"
#include "nervekit/nerve_checks.hpp"
#include "nervekit/render.hpp"
#include "nervekit/search.hpp"
#include "nervekit/sperner_checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace nervekit;

constexpr int kExitPass = 0;
constexpr int kExitHypothesesFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTheoremViolation = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw document_error(DocError::BadDocument, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ComplexDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

std::string doc_name(const ComplexDocument& doc, const std::string& path) {
    return doc.name.empty() ? path : doc.name;
}

struct CommonOptions {
    std::string field_name = "q";
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--field", opts.field_name, "coefficient field: f2, f3, f5, q (or f<p>)")
        ->default_val("q");
    cmd->add_flag("--json", opts.as_json, "machine-readable output");
}

int cmd_homology(const std::string& file, const CommonOptions& opts) {
    ComplexDocument doc = load_document(file);
    SimplicialComplex X = to_complex(doc);
    FieldSpec field = FieldSpec::parse(opts.field_name);
    std::cout << render_betti_table(doc_name(doc, file), reduced_betti(X, field), field, opts.as_json);
    return kExitPass;
}

int cmd_nerve(const std::string& file, const std::string& coverspec, int k, int l,
              std::size_t member_cap, const CommonOptions& opts) {
    ComplexDocument doc = load_document(file);
    SimplicialComplex host = to_complex(doc);
    Cover cover = to_cover(parse_cover_document(read_file(coverspec)), host);
    FieldSpec field = FieldSpec::parse(opts.field_name);
    MixedHypotheses hyp = check_mixed_hypotheses(cover, k, l, field, default_exec_mode(), member_cap);
    MixedConclusion conclusion = verify_mixed_conclusion(cover, l, field, member_cap);
    std::cout << render_mixed(doc_name(doc, file), k, l, field, hyp, conclusion, opts.as_json);
    if (!hyp.all_pass()) return kExitHypothesesFail;
    return conclusion.holds ? kExitPass : kExitTheoremViolation;
}

int cmd_helly(const std::string& file, const std::string& coverspec, int k, int embedded_dim,
              bool embedded_union, bool embedded_inter, std::size_t member_cap,
              const CommonOptions& opts) {
    ComplexDocument doc = load_document(file);
    SimplicialComplex host = to_complex(doc);
    Cover cover = to_cover(parse_cover_document(read_file(coverspec)), host);
    FieldSpec field = FieldSpec::parse(opts.field_name);
    HellyOptions options;
    options.member_cap = member_cap;
    if (embedded_union || embedded_inter) {
        // embedded presets: conditions only up to subcollections of size d+1
        options.max_subset_size = embedded_dim + 1;
        k = embedded_union ? -1 : embedded_dim;
    }
    HellyReport report = helly_check(cover, k, field, options);
    std::cout << render_helly(doc_name(doc, file), k, field, report, opts.as_json);
    if (report.theorem_violation) return kExitTheoremViolation;
    if (!report.hypotheses_pass) return kExitHypothesesFail;
    return kExitPass;
}

int cmd_meshulam(const std::string& file, std::optional<int> k, std::optional<int> isolated,
                 bool discrete, const CommonOptions& opts) {
    ComplexDocument doc = load_document(file);
    ColouredComplex K = to_coloured(doc);
    FieldSpec field = FieldSpec::parse(opts.field_name);
    std::string name = doc_name(doc, file);

    if (k) {
        RemixedReport report = check_remixed(K, *k, field);
        std::cout << render_remixed(name, *k, field, report, opts.as_json);
        if (report.theorem_violation) return kExitTheoremViolation;
        return report.hypotheses_pass ? kExitPass : kExitHypothesesFail;
    }
    if (isolated) {
        IsolatedReport report = check_isolated(K, *isolated, field);
        std::cout << render_isolated(name, field, report, opts.as_json);
        if (report.theorem_violation) return kExitTheoremViolation;
        return report.hypotheses.all_pass ? kExitPass : kExitHypothesesFail;
    }
    if (discrete) {
        DiscreteReport report = check_discrete(K, field);
        std::cout << render_discrete(name, field, report, opts.as_json);
        if (report.theorem_violation) return kExitTheoremViolation;
        return report.hypotheses.all_pass ? kExitPass : kExitHypothesesFail;
    }
    MeshulamReport report = check_meshulam(K, field);
    std::cout << render_meshulam(name, field, report, opts.as_json);
    if (report.theorem_violation) return kExitTheoremViolation;
    return report.hypotheses.all_pass ? kExitPass : kExitHypothesesFail;
}

int cmd_polytopal(const std::string& file, const std::string& mfile, const CommonOptions& opts) {
    ComplexDocument doc = load_document(file);
    ColouredComplex K = to_coloured(doc);
    SimplicialComplex M = to_complex(load_document(mfile));
    FieldSpec field = FieldSpec::parse(opts.field_name);
    PolytopalReport report = polytopal_meshulam(K, M, field);
    std::cout << render_polytopal(doc_name(doc, file), field, report, opts.as_json);
    if (report.theorem_violation) return kExitTheoremViolation;
    return report.preconditions_pass ? kExitPass : kExitHypothesesFail;
}

int cmd_kill(const std::string& file, int d, const CommonOptions& opts) {
    ComplexDocument doc = load_document(file);
    SimplicialComplex K = to_complex(doc);
    FieldSpec field = FieldSpec::parse(opts.field_name);
    BettiVector before = reduced_betti(K, field);
    SimplicialComplex killed = kill_homology(K, d, field);
    BettiVector after = reduced_betti(killed, field);
    std::string name = doc_name(doc, file);
    std::cout << render_kill(name, d, field, before, after, opts.as_json);
    std::cout << emit_document(document_of(killed, name + "-killed-" + std::to_string(d)));
    return kExitPass;
}

int cmd_search(long trials, std::uint64_t seed, const std::string& theorem) {
    std::vector<PropertyOutcome> outcomes;
    auto want = [&](const char* name) { return theorem == "all" || theorem == name; };

    if (want("mixed")) outcomes.push_back(mixed_nerve_property(seed, trials));
    if (want("killing")) outcomes.push_back(killing_property(seed, std::max<long>(trials / 5, 5)));
    if (want("aux")) outcomes.push_back(union_acyclicity_property(seed, trials));
    if (want("colour-union")) outcomes.push_back(colour_union_property(seed, std::max<long>(trials / 5, 5)));
    if (want("helly")) outcomes.push_back(helly_property(seed, trials));
    if (want("meshulam")) outcomes.push_back(meshulam_family_property(seed, trials));
    if (want("polytopal")) outcomes.push_back(polytopal_property(seed, std::max<long>(trials / 5, 5)));
    if (want("count")) outcomes.push_back(count_lemma_property(seed, trials));
    if (want("sharpness"))
        for (PropertyOutcome& w : sharpness_witnesses()) outcomes.push_back(std::move(w));

    long violations = 0;
    for (const PropertyOutcome& outcome : outcomes) {
        std::cout << render_outcome(outcome);
        violations += outcome.violations;
    }
    std::cout << "total violations: " << violations << "\n";
    if (violations > 0) {
        std::cerr << "THEOREM VIOLATION detected\n";
        return kExitTheoremViolation;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact simplicial homology with nerve, Helly and rainbow-simplex theorem checks"};
    app.require_subcommand(1);

    // homology
    CommonOptions homology_opts;
    std::string homology_file;
    auto* homology = app.add_subcommand("homology", "reduced Betti numbers of a complex");
    homology->add_option("file", homology_file, "complex document")->required();
    add_common(homology, homology_opts);

    // nerve
    CommonOptions nerve_opts;
    std::string nerve_file, nerve_cover;
    int nerve_k = -1, nerve_l = 0;
    std::size_t nerve_cap = kDefaultMemberCap;
    auto* nerve_cmd = app.add_subcommand("nerve", "mixed nerve hypothesis check and conclusion");
    nerve_cmd->add_option("file", nerve_file, "host complex document")->required();
    nerve_cmd->add_option("coverspec", nerve_cover, "cover document")->required();
    nerve_cmd->add_option("--k", nerve_k, "intersection-side bound (-1 tests unions only)")
        ->default_val(-1);
    nerve_cmd->add_option("--l", nerve_l, "degree of the conclusion inequality")->required();
    nerve_cmd->add_option("--max-members", nerve_cap, "override the cover size cap")
        ->default_val(kDefaultMemberCap);
    add_common(nerve_cmd, nerve_opts);

    // helly
    CommonOptions helly_opts;
    std::string helly_file, helly_cover;
    int helly_k = -1, helly_d = 1;
    bool helly_embedded_union = false, helly_embedded_inter = false;
    std::size_t helly_cap = kDefaultMemberCap;
    auto* helly_cmd = app.add_subcommand("helly", "Helly-type nonempty-intersection check");
    helly_cmd->add_option("file", helly_file, "host complex document")->required();
    helly_cmd->add_option("coverspec", helly_cover, "cover document")->required();
    helly_cmd->add_option("--k", helly_k, "intersection/union split parameter")->default_val(-1);
    helly_cmd->add_flag("--embedded-union", helly_embedded_union,
                        "preset for complexes embedded in R^d: union conditions up to size d+1");
    helly_cmd->add_flag("--embedded-inter", helly_embedded_inter,
                        "preset for complexes embedded in R^d: intersection conditions up to size d+1");
    helly_cmd->add_option("-d", helly_d, "embedding dimension for the presets")->default_val(1);
    helly_cmd->add_option("--max-members", helly_cap, "override the cover size cap")
        ->default_val(kDefaultMemberCap);
    add_common(helly_cmd, helly_opts);

    // meshulam
    CommonOptions meshulam_opts;
    std::string meshulam_file;
    int meshulam_k = 0, meshulam_isolated = 0;
    bool meshulam_discrete = false;
    auto* meshulam_cmd = app.add_subcommand("meshulam", "rainbow-simplex checks on a coloured complex");
    meshulam_cmd->add_option("file", meshulam_file, "coloured complex document")->required();
    auto* opt_k = meshulam_cmd->add_option("--k", meshulam_k, "interpolated variant with this k");
    auto* opt_isolated =
        meshulam_cmd->add_option("--isolated", meshulam_isolated, "vertex that is isolated on its colour");
    auto* opt_discrete =
        meshulam_cmd->add_flag("--discrete", meshulam_discrete, "all colour classes 0-dimensional");
    opt_k->excludes(opt_isolated)->excludes(opt_discrete);
    opt_isolated->excludes(opt_discrete);
    add_common(meshulam_cmd, meshulam_opts);

    // polytopal
    CommonOptions polytopal_opts;
    std::string polytopal_file, polytopal_mfile;
    auto* polytopal_cmd =
        app.add_subcommand("polytopal", "pseudomanifold-pattern colourful-simplex count check");
    polytopal_cmd->add_option("file", polytopal_file, "coloured complex document")->required();
    polytopal_cmd->add_option("mfile", polytopal_mfile, "pattern pseudomanifold document")->required();
    add_common(polytopal_cmd, polytopal_opts);

    // kill
    CommonOptions kill_opts;
    std::string kill_file;
    int kill_d = 1;
    auto* kill_cmd = app.add_subcommand("kill", "attach simplices to kill homology below a dimension");
    kill_cmd->add_option("file", kill_file, "complex document")->required();
    kill_cmd->add_option("-d", kill_d, "dimension bound")->required();
    add_common(kill_cmd, kill_opts);

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "emit fixture and random complex documents");
    generate_cmd->require_subcommand(1);
    std::uint64_t gen_seed = 0;
    int gen_m = 2, gen_n = 5, gen_d = 2, gen_rows = 3, gen_cols = 3, gen_parts = 2;
    double gen_p = 0.5;
    std::vector<int> gen_bands{1, 1, 1};
    std::string gen_host;

    auto* g_simplex_boundary = generate_cmd->add_subcommand("simplex-boundary", "boundary of a simplex");
    g_simplex_boundary->add_option("--m", gen_m, "dimension")->required();
    auto* g_full_simplex = generate_cmd->add_subcommand("full-simplex", "a full simplex");
    g_full_simplex->add_option("--m", gen_m, "dimension")->required();
    generate_cmd->add_subcommand("torus7", "the 7-vertex torus");
    generate_cmd->add_subcommand("rp2-6", "the 6-vertex projective plane");
    auto* g_banded = generate_cmd->add_subcommand("banded-torus", "grid torus with three row bands");
    g_banded->add_option("--rows", gen_rows)->default_val(3);
    g_banded->add_option("--cols", gen_cols)->default_val(3);
    g_banded->add_option("--bands", gen_bands, "three band sizes summing to rows")->expected(3);
    auto* g_random = generate_cmd->add_subcommand("random-complex", "skeleton plus random top simplices");
    g_random->add_option("--n", gen_n)->required();
    g_random->add_option("--d", gen_d)->required();
    g_random->add_option("--p", gen_p)->required();
    g_random->add_option("--seed", gen_seed)->default_val(0);
    auto* g_colouring = generate_cmd->add_subcommand("random-colouring", "random complex with colours");
    g_colouring->add_option("--n", gen_n)->required();
    g_colouring->add_option("--d", gen_d)->required();
    g_colouring->add_option("--p", gen_p)->required();
    g_colouring->add_option("--m", gen_m)->required();
    g_colouring->add_option("--seed", gen_seed)->default_val(0);
    auto* g_cover = generate_cmd->add_subcommand("random-cover", "cover of a host by facet unions");
    g_cover->add_option("--host", gen_host, "host complex document")->required();
    g_cover->add_option("--parts", gen_parts)->required();
    g_cover->add_option("--seed", gen_seed)->default_val(0);

    // search
    long search_trials = 200;
    std::uint64_t search_seed = kDefaultSearchSeed;
    bool search_seed_given = false;
    std::string search_theorem = "all";
    auto* search_cmd = app.add_subcommand("search", "randomized theorem verification and witness catalog");
    search_cmd->add_option("--trials", search_trials, "instances per property")->default_val(200);
    search_cmd
        ->add_option("--seed", search_seed, "base seed (NERVEKIT_SEED overrides the default)")
        ->each([&](const std::string&) { search_seed_given = true; });
    search_cmd
        ->add_option("--theorem", search_theorem,
                     "all, mixed, killing, aux, colour-union, helly, meshulam, polytopal, count, sharpness")
        ->default_val("all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (homology->parsed()) return cmd_homology(homology_file, homology_opts);
        if (nerve_cmd->parsed())
            return cmd_nerve(nerve_file, nerve_cover, nerve_k, nerve_l, nerve_cap, nerve_opts);
        if (helly_cmd->parsed())
            return cmd_helly(helly_file, helly_cover, helly_k, helly_d, helly_embedded_union,
                             helly_embedded_inter, helly_cap, helly_opts);
        if (meshulam_cmd->parsed()) {
            std::optional<int> k_opt, isolated_opt;
            if (opt_k->count()) k_opt = meshulam_k;
            if (opt_isolated->count()) isolated_opt = meshulam_isolated;
            return cmd_meshulam(meshulam_file, k_opt, isolated_opt, meshulam_discrete, meshulam_opts);
        }
        if (polytopal_cmd->parsed()) return cmd_polytopal(polytopal_file, polytopal_mfile, polytopal_opts);
        if (kill_cmd->parsed()) return cmd_kill(kill_file, kill_d, kill_opts);
        if (generate_cmd->parsed()) {
            if (g_simplex_boundary->parsed())
                std::cout << emit_document(document_of(simplex_boundary(gen_m),
                                                       "simplex-boundary-" + std::to_string(gen_m)));
            else if (g_full_simplex->parsed())
                std::cout << emit_document(
                    document_of(full_simplex(gen_m), "full-simplex-" + std::to_string(gen_m)));
            else if (generate_cmd->get_subcommand("torus7")->parsed())
                std::cout << emit_document(document_of(torus7(), "torus7"));
            else if (generate_cmd->get_subcommand("rp2-6")->parsed())
                std::cout << emit_document(document_of(rp2_6(), "rp2-6"));
            else if (g_banded->parsed())
                std::cout << emit_document(document_of(
                    banded_torus(gen_rows, gen_cols, {gen_bands[0], gen_bands[1], gen_bands[2]}),
                    "banded-torus"));
            else if (g_random->parsed())
                std::cout << emit_document(
                    document_of(random_complex(gen_n, gen_d, gen_p, gen_seed), "random-complex"));
            else if (g_colouring->parsed())
                std::cout << emit_document(document_of(
                    random_colouring(random_complex(gen_n, gen_d, gen_p, gen_seed), gen_m,
                                     derive_seed(gen_seed, 1)),
                    "random-colouring"));
            else if (g_cover->parsed()) {
                SimplicialComplex host = to_complex(load_document(gen_host));
                Cover cover = random_cover(host, gen_parts, gen_seed);
                std::cout << emit_cover_document(cover_document_of(cover, "random-cover"));
            }
            return kExitPass;
        }
        if (search_cmd->parsed()) {
            if (!search_seed_given)
                if (const char* env = std::getenv("NERVEKIT_SEED")) search_seed = std::strtoull(env, nullptr, 10);
            return cmd_search(search_trials, search_seed, search_theorem);
        }
    } catch (const nervekit::document_error& e) {
        std::cerr << "input error [" << doc_error_name(e.code()) << "]: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return kExitTheoremViolation;
    }
    return kExitInputError;
}
