#pragma once

#include <cstdint>
#include <vector>

#include "schur/blocks.hpp"
#include "schur/poset.hpp"

namespace schur::checks {

// Property suites over exhaustive small-size grids. Each suite returns the
// number of elementary checks performed and throws InvariantError with a
// description of the first violation found. These compare independent
// production routes against each other (rows vs columns, classification vs
// linkage); diagram-walk oracles live in the test suite.

long long conjugate_dominance_suite(int max_r);
long long abacus_suite(int max_r, int max_e);
long long wrap_remove_suite(int max_r, int max_h);
long long horizontal_equivalence_suite(int max_r, int max_e);
long long jantzen_agreement_suite(int max_r, const std::vector<ArithmeticParams>& params);
long long projectivity_suite(int max_r, const std::vector<ArithmeticParams>& params);

/// AllPartitions(r) and MaxLength(n, r) for n in {2, 3, r} over r <= max_r,
/// plus `random_count` seeded dominating posets with a core filter.
std::vector<PosetSpec> standard_poset_specs(int max_r, const ArithmeticParams& params,
                                            int random_count, std::uint64_t seed);

/// Checks that invariant classification and Jantzen linkage agree on the poset.
long long verify_poset(const WeightPoset& poset, int threads = 1);

/// Checks that the linkage classes are exactly the e-core classes.
long long core_classes_match_blocks(const WeightPoset& poset, int threads = 1);

/// The structural lemma battery on one poset: edges preserve core, dominance
/// and s; s = 1 classes collapse to whole core classes; the s-runner abacus
/// characterisation; hook-length scaling and dominance transport under chi;
/// and the Frobenius edge correspondence with its p = 0 vanishing clause.
long long structural_lemma_suite(const WeightPoset& poset, int threads = 1);

}  // namespace schur::checks
