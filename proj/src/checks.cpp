#include "schur/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "schur/abacus.hpp"
#include "schur/jantzen.hpp"

namespace schur::checks {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw InvariantError(what);
}

void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
}

}  // namespace

long long conjugate_dominance_suite(int max_r) {
    long long checks = 0;
    for (int r = 0; r <= std::min(max_r, 14); ++r) {
        for (const Partition& mu : all_partitions(r)) {
            expect(conjugate(conjugate(mu)) == mu, "conjugate is not an involution at " + mu.str());
            ++checks;
        }
    }
    for (int r = 0; r <= std::min(max_r, 12); ++r) {
        const auto parts = all_partitions(r);
        std::vector<Partition> conjs;
        conjs.reserve(parts.size());
        for (const Partition& mu : parts) conjs.push_back(conjugate(mu));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            expect(dominates(parts[i], parts[i]), "dominance is not reflexive");
            for (std::size_t j = 0; j < parts.size(); ++j) {
                const bool fwd = dominates(parts[i], parts[j]);
                if (i != j && fwd)
                    expect(!dominates(parts[j], parts[i]), "dominance is not antisymmetric");
                expect(fwd == dominates(conjs[j], conjs[i]),
                       "conjugation does not reverse dominance at " + parts[i].str() + " vs " +
                           parts[j].str());
                ++checks;
            }
        }
    }
    return checks;
}

long long abacus_suite(int max_r, int max_e) {
    long long checks = 0;
    for (int r = 0; r <= max_r; ++r) {
        for (const Partition& mu : all_partitions(r)) {
            for (int l = mu.length(); l <= mu.length() + 2; ++l) {
                expect(partition_from_betas(beta_numbers(mu, l)) == mu,
                       "beta numbers do not round-trip at " + mu.str());
                ++checks;
            }
            for (int e = 2; e <= max_e; ++e) {
                const Partition core = e_core(mu, e);
                // Push-up computed again with e extra beads must agree.
                const BetaSet padded = beta_numbers(mu, mu.length() + e);
                std::vector<int> per_runner(e, 0);
                for (int beta : padded.beads) ++per_runner[beta % e];
                std::vector<int> pushed;
                for (int runner = 0; runner < e; ++runner)
                    for (int row = 0; row < per_runner[runner]; ++row)
                        pushed.push_back(runner + row * e);
                std::sort(pushed.begin(), pushed.end(), std::greater<int>());
                expect(partition_from_betas(BetaSet(pushed)) == core,
                       "e-core depends on the bead count at " + mu.str());

                bool divisible_hook = false;
                for (int a = 1; a <= mu.length() && !divisible_hook; ++a)
                    for (int b = 1; b <= mu.part(a); ++b)
                        if (hook_length(mu, {a, b}) % e == 0) {
                            divisible_hook = true;
                            break;
                        }
                const bool core_now = core == mu;
                expect(core_now == !divisible_hook,
                       "core status disagrees with hook divisibility at " + mu.str());
                expect(core_now == (e_weight(mu, e) == 0),
                       "core status disagrees with weight at " + mu.str());
                checks += 3;
            }
        }
    }
    return checks;
}

long long wrap_remove_suite(int max_r, int max_h) {
    long long checks = 0;
    for (int r = 1; r <= max_r; ++r) {
        for (const Partition& mu : all_partitions(r)) {
            for (int a = 1; a <= mu.length(); ++a) {
                for (int b = 1; b <= mu.part(a); ++b) {
                    const int h = hook_length(mu, {a, b});
                    const RimHookInfo info = rim_hook(mu, {a, b}, 2);
                    const Partition down = remove_rim_hook(mu, {a, b});
                    expect(down.size() + h == mu.size(), "hook removal lost cells at " + mu.str());
                    bool restored = false;
                    for (const WrapCandidate& cand : wrap_hook_candidates(down, h)) {
                        if (cand.result != mu) continue;
                        restored = true;
                        expect(cand.hook.hand == info.hand && cand.hook.foot == info.foot &&
                                   cand.hook.leg == info.leg,
                               "re-wrapped hook data differs at " + mu.str());
                    }
                    expect(restored, "removal is not undone by any wrap at " + mu.str());
                    checks += 2;
                }
            }
        }
    }
    for (int r = 0; r + 1 <= max_r; ++r) {
        for (const Partition& nu : all_partitions(r)) {
            for (int h = 1; h <= max_h; ++h) {
                const int beads = nu.length() + h;
                const BetaSet betas = beta_numbers(nu, beads);
                const std::set<int> occupied(betas.beads.begin(), betas.beads.end());
                for (const WrapCandidate& cand : wrap_hook_candidates(nu, h)) {
                    expect(remove_rim_hook(cand.result, cand.hook.corner) == nu,
                           "wrap is not undone by removal at " + nu.str());
                    // The wrap is a single bead moved h to the right. The wrapped
                    // hook's foot residue is the source runner, read in an abacus
                    // normalised to one bead (position shifts by 1 - bead count).
                    int source = -1;
                    for (int beta : betas.beads)
                        if (!occupied.count(beta + h)) {
                            std::vector<int> moved = betas.beads;
                            *std::find(moved.begin(), moved.end(), beta) = beta + h;
                            std::sort(moved.begin(), moved.end(), std::greater<int>());
                            if (partition_from_betas(BetaSet(moved)) == cand.result) {
                                source = beta;
                                break;
                            }
                        }
                    expect(source >= 0, "wrap candidate is not a bead move at " + nu.str());
                    for (int e = 2; e <= 4; ++e) {
                        const int runner = ((source - beads + 1) % e + e) % e;
                        expect(residue(cand.hook.foot, e) == runner,
                               "foot residue differs from the source runner at " + nu.str());
                    }
                    checks += 2;
                }
            }
        }
    }
    return checks;
}

long long horizontal_equivalence_suite(int max_r, int max_e) {
    long long checks = 0;
    for (int r = 0; r <= max_r; ++r) {
        for (const Partition& mu : all_partitions(r)) {
            for (int e = 2; e <= max_e; ++e) {
                const bool a = horizontal_condition_a(mu, e);
                const bool b = only_horizontal_hooks(mu, e);
                const bool c = horizontal_condition_c(mu, e);
                if (a != b || b != c) {
                    std::ostringstream msg;
                    msg << "horizontal criteria disagree at " << mu << " e=" << e << ": a=" << a
                        << " b=" << b << " c=" << c;
                    fail(msg.str());
                }
                ++checks;
            }
        }
    }
    return checks;
}

long long jantzen_agreement_suite(int max_r, const std::vector<ArithmeticParams>& params) {
    long long checks = 0;
    for (const ArithmeticParams& pr : params) {
        for (int r = 1; r <= max_r; ++r) {
            const auto parts = all_partitions(r);
            std::map<Partition, std::set<Partition>> lowers, uppers;
            for (const Partition& mu : parts) {
                for (const JantzenEdge& edge : jantzen_partners(mu, pr)) {
                    expect(same_e_core(edge.upper, edge.lower, pr.e),
                           "edge endpoints have different e-cores at " + mu.str());
                    lowers[mu].insert(edge.lower);
                }
                for (const JantzenEdge& edge : jantzen_partners_by_columns(mu, pr))
                    uppers[mu].insert(edge.upper);
            }
            for (const Partition& lambda : parts) {
                const Partition lambda_c = conjugate(lambda);
                for (const Partition& mu : parts) {
                    const bool row_route = lowers[lambda].count(mu) != 0;
                    expect(row_route == (uppers[mu].count(lambda) != 0),
                           "row and column enumerations disagree at " + lambda.str() + " -> " +
                               mu.str());
                    expect(row_route == (lowers[conjugate(mu)].count(lambda_c) != 0),
                           "conjugate symmetry fails at " + lambda.str() + " -> " + mu.str());
                    checks += 2;
                }
            }
        }
    }
    return checks;
}

long long projectivity_suite(int max_r, const std::vector<ArithmeticParams>& params) {
    long long checks = 0;
    for (const ArithmeticParams& pr : params) {
        for (int r = 1; r <= max_r; ++r) {
            for (const Partition& mu : all_partitions(r)) {
                const Partition conj = conjugate(mu);
                bool constant_columns = true;
                for (int z = 1; z <= mu.part(1) && constant_columns; ++z) {
                    const int height = conj.part(z);
                    const int first = nu_ep(hook_length(mu, {1, z}), pr);
                    for (int x = 2; x <= height; ++x)
                        if (nu_ep(hook_length(mu, {x, z}), pr) != first) {
                            constant_columns = false;
                            break;
                        }
                }
                expect(constant_columns == jantzen_partners_by_columns(mu, pr).empty(),
                       "column-constant valuation disagrees with upper partners at " + mu.str());
                ++checks;
            }
        }
    }
    return checks;
}

std::vector<PosetSpec> standard_poset_specs(int max_r, const ArithmeticParams& params,
                                            int random_count, std::uint64_t seed) {
    std::vector<PosetSpec> specs;
    for (int r = 1; r <= max_r; ++r) {
        specs.push_back(PosetSpec::all(r));
        for (int n : {2, 3, r})
            if (n >= 1) specs.push_back(PosetSpec::max_length(n, r));
    }
    std::mt19937_64 rng(seed);
    int produced = 0, attempts = 0;
    while (produced < random_count && max_r >= 2) {
        if (++attempts > 1000 * std::max(random_count, 1))
            fail("random poset generation stalled");
        const int r = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_r - 1));
        const auto parts = all_partitions(r);
        const Partition base = parts[rng() % parts.size()];
        PosetSpec spec = PosetSpec::dominating(base);
        if (rng() % 2 == 0) {
            spec.with_nonempty_core(params.e);
        } else {
            std::vector<Partition> dominators;
            for (const Partition& mu : parts)
                if (dominates(mu, base)) dominators.push_back(mu);
            const Partition& pick = dominators[rng() % dominators.size()];
            spec.with_core(params.e, e_core(pick, params.e));
        }
        if (generate_poset_members(spec).empty()) continue;
        specs.push_back(std::move(spec));
        ++produced;
    }
    return specs;
}

long long verify_poset(const WeightPoset& poset, int threads) {
    const VerifyReport report = verify_main_theorem(poset, threads);
    if (!report.equal)
        fail("block decompositions disagree on " + poset.spec().str() + " r=" +
             std::to_string(poset.r()) + ": " + report.certificate);
    return static_cast<long long>(poset.members().size());
}

long long core_classes_match_blocks(const WeightPoset& poset, int threads) {
    std::map<Partition, std::set<Partition>> by_core;
    for (const Partition& mu : poset.members()) by_core[poset.core_of(mu)].insert(mu);
    std::set<std::set<Partition>> expected;
    for (auto& [core, members] : by_core) expected.insert(members);

    std::set<std::set<Partition>> actual;
    for (const BlockClass& cls : jantzen_blocks(poset, threads).classes)
        actual.insert(std::set<Partition>(cls.members.begin(), cls.members.end()));
    expect(actual == expected,
           "linkage classes are not the e-core classes on " + poset.spec().str() + " r=" +
               std::to_string(poset.r()));
    return static_cast<long long>(poset.members().size());
}

namespace {

// Columns of mu whose hook lengths are all divisible by s, left to right.
// Divisibility must be constant down each column for s = s_lambda(mu).
std::vector<int> divisible_columns(const Partition& mu, const Partition& conj, int s) {
    std::vector<int> cols;
    for (int z = 1; z <= mu.part(1); ++z) {
        const int height = conj.part(z);
        const bool first = hook_length(mu, {1, z}) % s == 0;
        for (int x = 2; x <= height; ++x)
            expect((hook_length(mu, {x, z}) % s == 0) == first,
                   "column divisibility by s is not constant at " + mu.str());
        if (first) cols.push_back(z);
    }
    return cols;
}

}  // namespace

long long structural_lemma_suite(const WeightPoset& poset, int threads) {
    long long checks = 0;
    const ArithmeticParams& params = poset.params();
    const JantzenGraph graph = build_jantzen_graph(poset, threads);

    std::map<Partition, BlockInvariants> labels;
    for (const Partition& mu : poset.members()) labels.emplace(mu, block_label(poset, mu));

    std::set<std::pair<Partition, Partition>> edge_set;
    for (const JantzenEdge& edge : graph.edges) {
        expect(strictly_dominates(edge.upper, edge.lower),
               "edge does not respect strict dominance");
        expect(labels.at(edge.upper).core == labels.at(edge.lower).core,
               "edge joins different e-cores");
        expect(labels.at(edge.upper).s == labels.at(edge.lower).s,
               "edge joins different values of s at " + edge.upper.str() + " -> " +
                   edge.lower.str());
        edge_set.emplace(edge.upper, edge.lower);
        checks += 3;
    }

    std::map<Partition, std::vector<Partition>> core_classes;
    for (const Partition& mu : poset.members()) core_classes[labels.at(mu).core].push_back(mu);

    const auto linkage = linkage_classes(graph);
    std::map<Partition, int> linkage_index;
    for (int i = 0; i < static_cast<int>(linkage.size()); ++i)
        for (const Partition& mu : linkage[i]) linkage_index.emplace(mu, i);

    for (const auto& [core, members] : core_classes) {
        const bool any_s1 =
            std::any_of(members.begin(), members.end(),
                        [&](const Partition& mu) { return labels.at(mu).s == 1; });
        if (any_s1) {
            for (const Partition& mu : members)
                expect(labels.at(mu).s == 1, "s is not constant on an s=1 core class");
            const int cls = linkage_index.at(members.front());
            for (const Partition& mu : members)
                expect(linkage_index.at(mu) == cls, "s=1 core class is not one linkage class");
            expect(static_cast<int>(linkage[cls].size()) == static_cast<int>(members.size()),
                   "s=1 linkage class leaks outside the core class");
            checks += static_cast<long long>(members.size());
        }
    }

    const auto moduli = admissible_moduli(params, poset.r() + 1);
    for (const Partition& mu : poset.members()) {
        const BlockInvariants& inv = labels.at(mu);
        const Partition conj = conjugate(mu);

        expect((inv.ell == 0) == (mu == inv.core),
               "class length 0 must mean the member is its own core at " + mu.str());
        if (inv.ell <= 1)
            expect(inv.s == 1, "s must be 1 when the class length is at most 1");
        checks += 2;

        if (inv.ell >= 2) {
            const BetaSet betas = beta_numbers(mu, std::max(mu.length(), inv.ell));
            for (int s : moduli) {
                if (s == 1) continue;
                bool one_runner = true;
                for (int i = 1; i < inv.ell; ++i)
                    if ((betas.beads[i - 1] - betas.beads[i]) % s != 0) {
                        one_runner = false;
                        break;
                    }
                expect(one_runner == (inv.s >= s),
                       "s-runner abacus characterisation fails at " + mu.str() + " s=" +
                           std::to_string(s));
                ++checks;
            }
        }

        const auto cols = divisible_columns(mu, conj, inv.s);
        expect(static_cast<int>(cols.size()) == inv.chi.part(1),
               "divisible column count differs from the width of chi at " + mu.str());
        ++checks;
        for (int a = 1; a <= inv.chi.length(); ++a) {
            for (int b = 1; b <= inv.chi.part(a); ++b) {
                expect(inv.s * hook_length(inv.chi, {a, b}) ==
                           hook_length(mu, {a, cols[b - 1]}),
                       "hook lengths of chi do not scale at " + mu.str());
                ++checks;
            }
        }
    }

    std::map<std::pair<Partition, int>, std::vector<Partition>> s_groups;
    for (const Partition& mu : poset.members())
        s_groups[{labels.at(mu).core, labels.at(mu).s}].push_back(mu);

    for (const auto& [key, members] : s_groups) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j) continue;
                const bool dom = dominates(members[i], members[j]);
                expect(dom == dominates(labels.at(members[i]).chi, labels.at(members[j]).chi),
                       "chi does not transport dominance at " + members[i].str() + " vs " +
                           members[j].str());
                ++checks;
            }
        }

        if (key.second > 1) {
            frobenius_reduction(poset, key.first, key.second);  // validates Gamma
            ++checks;
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = 0; j < members.size(); ++j) {
                    if (i == j) continue;
                    const bool linked = edge_set.count({members[i], members[j]}) != 0;
                    if (params.p == 0) {
                        expect(!linked, "p=0 class with s>1 carries an edge at " +
                                            members[i].str());
                    } else {
                        const bool reduced_linked =
                            jantzen_nonzero(labels.at(members[i]).chi,
                                            labels.at(members[j]).chi,
                                            ArithmeticParams(params.p, params.p));
                        expect(linked == reduced_linked,
                               "Frobenius correspondence fails at " + members[i].str() +
                                   " vs " + members[j].str());
                    }
                    ++checks;
                }
            }
        }
    }
    return checks;
}

}  // namespace schur::checks
