// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schur/abacus.hpp"
#include "schur/blocks.hpp"
#include "schur/checks.hpp"
#include "schur/io.hpp"
#include "schur/jantzen.hpp"

using namespace schur;
using Clock = std::chrono::steady_clock;

namespace {

struct Acceptance {
    int passed = 0;
    int failed = 0;

    void run(int number, const std::string& name, double budget_seconds,
             const std::function<void()>& body) {
        const auto start = Clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (error.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
            std::ostringstream msg;
            msg << "exceeded time budget: " << elapsed << " s > " << budget_seconds << " s";
            error = msg.str();
        }
        if (error.empty()) {
            ++passed;
            std::printf("PASS criterion %2d: %s [%.3f s]\n", number, name.c_str(), elapsed);
        } else {
            ++failed;
            std::printf("FAIL criterion %2d: %s [%.3f s] -- %s\n", number, name.c_str(),
                        elapsed, error.c_str());
        }
        std::fflush(stdout);
    }
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

const std::vector<ArithmeticParams> kCampaignParams{{2, 0}, {3, 0}, {4, 0}, {2, 3},
                                                    {3, 2}, {4, 3}, {5, 2}};
constexpr std::uint64_t kCampaignSeed = 20260811;

WeightPoset running_example(int p) {
    return WeightPoset(PosetSpec::dominating(Partition{29, 6, 4}).with_nonempty_core(3),
                       ArithmeticParams(3, p));
}

const std::vector<Partition> kRunningMembers{
    {35, 3, 1}, {32, 6, 1}, {29, 9, 1}, {29, 6, 4}, {33, 4, 2},
    {30, 7, 2}, {37, 2},    {31, 8},    {31, 5, 3}, {34, 5}};

std::set<std::set<Partition>> as_sets(const BlockDecomposition& dec) {
    std::set<std::set<Partition>> out;
    for (const BlockClass& cls : dec.classes)
        out.insert(std::set<Partition>(cls.members.begin(), cls.members.end()));
    return out;
}

}  // namespace

int main() {
    Acceptance suite;

    suite.run(1, "abacus beta-number fixtures (< 1 ms)", 0, [] {
        beta_numbers(Partition{4, 4, 3, 1}, 6);  // warm up
        const auto start = Clock::now();
        const BetaSet lambda = beta_numbers(Partition{4, 4, 3, 1}, 6);
        const BetaSet kappa = beta_numbers(Partition{4, 2}, 6);
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        require(lambda.beads == std::vector<int>({9, 8, 6, 3, 1, 0}),
                "beta numbers of (4,4,3,1) are wrong");
        require(kappa.beads == std::vector<int>({9, 6, 3, 2, 1, 0}),
                "beta numbers of (4,2) are wrong");
        require(elapsed < 0.001, "beta numbers took longer than 1 ms");
    });

    suite.run(2, "core and weight fixture", 0, [] {
        require(e_core(Partition{4, 4, 3, 1}, 3) == Partition{4, 2},
                "3-core of (4,4,3,1) is wrong");
        require(e_weight(Partition{4, 4, 3, 1}, 3) == 2, "3-weight of (4,4,3,1) is wrong");
    });

    suite.run(3, "horizontal-hook fixtures", 0, [] {
        require(!only_horizontal_hooks(Partition{7, 4}, 3),
                "(7,4) should not contain only horizontal 3-hooks");
        for (const Partition& mu : kRunningMembers)
            require(only_horizontal_hooks(mu, 3),
                    mu.str() + " should contain only horizontal 3-hooks");
    });

    suite.run(4, "running-example table reproduction (< 5 s)", 5.0, [] {
        struct Row {
            Partition mu, core;
            int ell, s;
            Partition chi, chi_pcore;
        };
        const std::vector<Row> table{
            {{35, 3, 1}, {5, 3, 1}, 3, 3, {10}, {}},
            {{32, 6, 1}, {5, 3, 1}, 3, 3, {9, 1}, {}},
            {{29, 9, 1}, {5, 3, 1}, 3, 3, {8, 2}, {}},
            {{29, 6, 4}, {5, 3, 1}, 3, 3, {8, 1, 1}, {}},
            {{33, 4, 2}, {6, 4, 2}, 2, 6, {4}, {}},
            {{30, 7, 2}, {6, 4, 2}, 2, 24, {}, {}},
            {{37, 2}, {4, 2}, 3, 3, {11}, {1}},
            {{31, 8}, {4, 2}, 3, 3, {9, 2}, {1}},
            {{31, 5, 3}, {4, 2}, 3, 3, {9, 1, 1}, {1}},
            {{34, 5}, {4, 2}, 3, 6, {4}, {}},
        };
        const WeightPoset poset = running_example(2);
        require(poset.members().size() == 10, "the running-example poset must have 10 members");
        for (const Row& row : table) {
            const BlockInvariants inv = block_label(poset, row.mu);
            require(inv.core == row.core, row.mu.str() + ": wrong 3-core");
            require(inv.ell == row.ell, row.mu.str() + ": wrong class length");
            require(inv.s == row.s, row.mu.str() + ": wrong s");
            require(inv.chi == row.chi, row.mu.str() + ": wrong chi");
            require(inv.chi_pcore == row.chi_pcore, row.mu.str() + ": wrong 2-core of chi");
        }
    });

    suite.run(5, "block decomposition at (e,p) = (3,2): 5 blocks, both methods", 0, [] {
        const std::set<std::set<Partition>> expected{
            {{35, 3, 1}, {32, 6, 1}, {29, 9, 1}, {29, 6, 4}},
            {{33, 4, 2}},
            {{30, 7, 2}},
            {{37, 2}, {31, 8}, {31, 5, 3}},
            {{34, 5}},
        };
        const WeightPoset poset = running_example(2);
        require(as_sets(sim_lambda_classes(poset)) == expected,
                "invariant classification differs from the reference blocks");
        require(as_sets(jantzen_blocks(poset)) == expected,
                "Jantzen linkage differs from the reference blocks");
    });

    suite.run(6, "block decomposition at (e,p) = (3,0): 10 singletons, both methods", 0, [] {
        const WeightPoset poset = running_example(0);
        for (const BlockDecomposition& dec :
             {sim_lambda_classes(poset), jantzen_blocks(poset)}) {
            require(dec.classes.size() == 10, "expected 10 blocks");
            for (const BlockClass& cls : dec.classes)
                require(cls.members.size() == 1, "expected singleton blocks");
        }
        require(as_sets(sim_lambda_classes(poset)) == as_sets(jantzen_blocks(poset)),
                "methods disagree");
    });

    suite.run(7, "main theorem campaign: r <= 12, 7 parameter pairs (< 5 min)", 300.0, [] {
        for (const ArithmeticParams& params : kCampaignParams)
            for (const PosetSpec& spec :
                 checks::standard_poset_specs(12, params, 50, kCampaignSeed))
                checks::verify_poset(WeightPoset(spec, params));
    });

    suite.run(8, "blocks of the full poset are the e-core classes, r <= 10", 0, [] {
        for (const ArithmeticParams& params : kCampaignParams)
            for (int r = 1; r <= 10; ++r) {
                const WeightPoset poset(PosetSpec::all(r), params);
                checks::core_classes_match_blocks(poset);
                checks::verify_poset(poset);
            }
    });

    suite.run(9, "criterion equivalences and symmetries", 0, [] {
        checks::horizontal_equivalence_suite(12, 5);
        const std::vector<ArithmeticParams> quad{{2, 0}, {3, 0}, {2, 3}, {3, 2}};
        checks::jantzen_agreement_suite(10, quad);
        checks::projectivity_suite(10, quad);
    });

    suite.run(10, "structural lemma suite on every tested poset", 0, [] {
        checks::structural_lemma_suite(running_example(2));
        checks::structural_lemma_suite(running_example(0));
        for (const ArithmeticParams& params : kCampaignParams)
            for (const PosetSpec& spec :
                 checks::standard_poset_specs(10, params, 10, kCampaignSeed))
                checks::structural_lemma_suite(WeightPoset(spec, params));
    });

    std::printf("acceptance: %d/%d criteria passed\n", suite.passed,
                suite.passed + suite.failed);
    return suite.failed == 0 ? 0 : 1;
}
