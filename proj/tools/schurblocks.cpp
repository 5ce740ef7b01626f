// Command-line front end for the block decomposition engine.
//
// Exit codes: 0 success (and theorem agreement for `verify`), 1 verification
// disagreement, 2 usage or input errors, 3 internal invariant violations.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schur/abacus.hpp"
#include "schur/blocks.hpp"
#include "schur/checks.hpp"
#include "schur/io.hpp"
#include "schur/jantzen.hpp"

namespace {

using namespace schur;

struct RunConfig {
    std::string command;
    int e = 0;
    int p = 0;
    int r = 0;
    std::string partition_text;
    std::string poset_text;
    std::string filter_text;
    std::string format = "text";
    int threads = 1;
    int beads = 0;
    int max_r = 8;
    std::uint64_t seed = 12345;
    bool uppers = false;
    bool signs = false;
    bool chi_both = false;
};

WeightPoset build_poset(const RunConfig& cfg) {
    const PosetSpec spec = parse_poset_spec(cfg.poset_text, cfg.filter_text, cfg.r, cfg.e);
    WeightPoset poset(spec, ArithmeticParams(cfg.e, cfg.p));
    if (cfg.e > poset.r())
        throw InputError("e exceeds r: the algebra is semisimple and has only singleton blocks");
    return poset;
}

int run_core(const RunConfig& cfg) {
    std::cout << e_core(Partition::parse(cfg.partition_text), cfg.e).str() << "\n";
    return 0;
}

int run_weight(const RunConfig& cfg) {
    std::cout << e_weight(Partition::parse(cfg.partition_text), cfg.e) << "\n";
    return 0;
}

int run_abacus(const RunConfig& cfg) {
    const Partition mu = Partition::parse(cfg.partition_text);
    const int beads = cfg.beads > 0 ? cfg.beads : std::max(mu.length(), 1);
    std::cout << render_abacus(mu, cfg.e, beads);
    return 0;
}

int run_hooks(const RunConfig& cfg) {
    const Partition mu = Partition::parse(cfg.partition_text);
    const Partition kappa = e_core(mu, cfg.e);
    std::cout << "partition " << mu.str() << "  e=" << cfg.e << "\n"
              << "core " << kappa.str() << "  weight " << e_weight(mu, cfg.e) << "\n";
    int width = 1;
    for (int b = 1; b <= mu.part(1); ++b)
        width = std::max(width, static_cast<int>(std::to_string(hook_length(mu, {1, b})).size()));
    for (int a = 1; a <= mu.length(); ++a) {
        for (int b = 1; b <= mu.part(a); ++b) {
            const std::string cell = std::to_string(hook_length(mu, {a, b}));
            std::cout << std::string(width - cell.size(), ' ') << cell
                      << (b == mu.part(a) ? "" : " ");
        }
        std::cout << "\n";
    }
    std::cout << "column-divisibility (a): "
              << (horizontal_condition_a(mu, cfg.e) ? "true" : "false") << "\n"
              << "only-horizontal-hooks (b): "
              << (only_horizontal_hooks(mu, cfg.e) ? "true" : "false") << "\n"
              << "difference-criterion (c): "
              << (horizontal_condition_c(mu, cfg.e) ? "true" : "false") << "\n";
    return 0;
}

int run_jantzen(const RunConfig& cfg) {
    const Partition mu = Partition::parse(cfg.partition_text);
    const ArithmeticParams params(cfg.e, cfg.p);
    const std::vector<JantzenEdge> edges =
        cfg.uppers ? jantzen_partners_by_columns(mu, params) : jantzen_partners(mu, params);
    if (cfg.format == "json")
        std::cout << edges_json(edges, cfg.signs).dump(2) << "\n";
    else if (cfg.format == "tsv")
        std::cout << edges_tsv(edges, cfg.signs);
    else
        std::cout << edges_text(edges, cfg.signs);
    return 0;
}

int run_blocks(const RunConfig& cfg) {
    const WeightPoset poset = build_poset(cfg);
    const VerifyReport report = verify_main_theorem(poset, cfg.threads);
    if (!report.equal)
        std::cerr << "warning: decompositions disagree: " << report.certificate << "\n";
    if (cfg.format == "json")
        std::cout << block_report_json(poset, report.by_invariants, report.equal).dump(2)
                  << "\n";
    else if (cfg.format == "tsv")
        std::cout << blocks_tsv(poset, report.by_invariants);
    else
        std::cout << blocks_text(poset, report.by_invariants, report.equal, cfg.chi_both);
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const WeightPoset poset = build_poset(cfg);
    const VerifyReport report = verify_main_theorem(poset, cfg.threads);
    if (!report.equal) {
        std::cout << "disagreement: " << report.certificate << "\n";
        return 1;
    }
    std::cout << report.by_invariants.classes.size() << " blocks, agreement\n";
    return 0;
}

int run_invariants(const RunConfig& cfg) {
    const std::vector<ArithmeticParams> grid{{2, 0}, {3, 0}, {4, 0}, {2, 3},
                                             {3, 2}, {4, 3}, {5, 2}};
    const std::vector<ArithmeticParams> quad{{2, 0}, {3, 0}, {2, 3}, {3, 2}};
    const int small = std::min(cfg.max_r, 10);

    auto suite = [](const std::string& name, long long count) {
        std::cout << "ok " << name << " (" << count << " checks)\n";
    };
    suite("conjugate/dominance", checks::conjugate_dominance_suite(cfg.max_r));
    suite("abacus", checks::abacus_suite(cfg.max_r, 5));
    suite("wrap/remove", checks::wrap_remove_suite(std::min(cfg.max_r, 10), 6));
    suite("horizontal criteria", checks::horizontal_equivalence_suite(cfg.max_r, 5));
    suite("jantzen row/column/conjugate", checks::jantzen_agreement_suite(small, quad));
    suite("projectivity criterion", checks::projectivity_suite(small, quad));

    long long verified = 0, structural = 0;
    for (const ArithmeticParams& params : grid) {
        for (const PosetSpec& spec :
             checks::standard_poset_specs(cfg.max_r, params, 10, cfg.seed)) {
            const WeightPoset poset(spec, params);
            verified += checks::verify_poset(poset, cfg.threads);
            structural += checks::structural_lemma_suite(poset, cfg.threads);
        }
    }
    suite("main theorem campaign", verified);
    suite("structural lemmas", structural);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact block decompositions of truncated q-Schur algebras"};
    app.require_subcommand(1);

    auto add_e = [&](CLI::App* cmd) {
        cmd->add_option("--e", cfg.e, "quantum characteristic (>= 2)")
            ->required()
            ->check(CLI::Range(2, 1000000));
    };
    auto add_p = [&](CLI::App* cmd) {
        cmd->add_option("--p", cfg.p, "field characteristic (0 or a prime)");
    };
    auto add_partition = [&](CLI::App* cmd) {
        cmd->add_option("partition", cfg.partition_text, "partition, e.g. \"29,6,4\"")
            ->required();
    };
    auto add_poset = [&](CLI::App* cmd) {
        cmd->add_option("--r", cfg.r, "partition size");
        cmd->add_option("--poset", cfg.poset_text,
                        "all | maxlen:<n> | dominating:<parts> | explicit:@<file>")
            ->required();
        cmd->add_option("--filter", cfg.filter_text, "nonempty-core | core:<parts>");
        cmd->add_option("--threads", cfg.threads, "worker threads")
            ->check(CLI::PositiveNumber);
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "text | json | tsv")
            ->check(CLI::IsMember({"text", "json", "tsv"}));
    };

    CLI::App* core = app.add_subcommand("core", "print the e-core of a partition");
    add_e(core);
    add_partition(core);

    CLI::App* weight = app.add_subcommand("weight", "print the e-weight of a partition");
    add_e(weight);
    add_partition(weight);

    CLI::App* abacus = app.add_subcommand("abacus", "draw the abacus configuration");
    add_e(abacus);
    add_partition(abacus);
    abacus->add_option("--beads", cfg.beads, "bead count (default: number of parts)");

    CLI::App* hooks = app.add_subcommand("hooks", "hook lengths and horizontal-hook criteria");
    add_e(hooks);
    add_partition(hooks);

    CLI::App* jantzen = app.add_subcommand("jantzen", "non-zero Jantzen coefficients with witnesses");
    add_e(jantzen);
    add_p(jantzen);
    add_partition(jantzen);
    add_format(jantzen);
    jantzen->add_flag("--uppers", cfg.uppers, "enumerate upper partners (column criterion)");
    jantzen->add_flag("--signs", cfg.signs, "include the leg-parity sign convention");

    CLI::App* blocks = app.add_subcommand("blocks", "block decomposition of a weight poset");
    add_e(blocks);
    add_p(blocks);
    add_poset(blocks);
    add_format(blocks);
    blocks->add_flag("--chi-both", cfg.chi_both,
                     "also print the quotient against the e-core (diagnostics)");

    CLI::App* verify = app.add_subcommand(
        "verify", "check that invariant labels and Jantzen linkage give the same blocks");
    add_e(verify);
    add_p(verify);
    add_poset(verify);

    CLI::App* invariants =
        app.add_subcommand("invariants", "run the property suites over a size grid");
    invariants->add_option("--max-r", cfg.max_r, "largest partition size");
    invariants->add_option("--seed", cfg.seed, "seed for randomized posets");
    invariants->add_option("--threads", cfg.threads, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (core->parsed()) return run_core(cfg);
        if (weight->parsed()) return run_weight(cfg);
        if (abacus->parsed()) return run_abacus(cfg);
        if (hooks->parsed()) return run_hooks(cfg);
        if (jantzen->parsed()) return run_jantzen(cfg);
        if (blocks->parsed()) return run_blocks(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (invariants->parsed()) return run_invariants(cfg);
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
