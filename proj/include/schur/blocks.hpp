#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schur/jantzen.hpp"
#include "schur/partition.hpp"
#include "schur/poset.hpp"

namespace schur {

/// The admissible moduli {1, e, ep, ep^2, ...} up to `bound`; {1, e} when p = 0.
std::vector<int> admissible_moduli(const ArithmeticParams& params, int bound);

/// Per-member block invariants relative to a weight poset.
struct BlockInvariants {
    Partition core;      // e-core
    int ell = 0;         // class length
    int s = 1;           // largest admissible modulus matching the top differences
    Partition chi;       // horizontal s-hook counts per row
    Partition chi_pcore; // p-core of chi; equals chi when p = 0
};

/// Class-level label; chi_pcore participates in equality only when s > 1.
struct BlockLabel {
    Partition core;
    int ell = 0;
    int s = 1;
    Partition chi_pcore;
};

struct BlockClass {
    BlockLabel label;
    std::vector<Partition> members;  // decreasing
};

struct BlockDecomposition {
    enum class Method { InvariantClassification, JantzenLinkage };
    Method method = Method::InvariantClassification;
    std::vector<BlockClass> classes;  // decreasing by maximal member
    std::optional<JantzenGraph> edge_certificate;
};

/// Members of the poset whose e-core is kappa; kappa must itself be an e-core.
std::vector<Partition> members_with_core(const WeightPoset& poset, const Partition& kappa);

/// The length function: least i such that every member of mu's core class
/// agrees with the core strictly below row i.
int length_function(const WeightPoset& poset, const Partition& mu);

/// 1 when the class length is at most 1; otherwise the largest admissible
/// modulus s with mu_i - mu_{i+1} = -1 (mod s) for all i below the class length.
int s_lambda(const WeightPoset& poset, const Partition& mu);

/// chi_i = (mu_i - core_s(mu)_i) / s with s = s_lambda(mu); counts the
/// horizontal s-hooks in row i.
Partition chi_lambda(const WeightPoset& poset, const Partition& mu);

BlockInvariants block_label(const WeightPoset& poset, const Partition& mu);

/// Blocks by invariant classification: members grouped by (core, s, and, when
/// s > 1, the p-core of chi). Requires an e-cosaturated poset.
BlockDecomposition sim_lambda_classes(const WeightPoset& poset);

/// Blocks as linkage classes of the non-vanishing Jantzen relation, with the
/// edge list attached as a certificate. Requires an e-cosaturated poset.
BlockDecomposition jantzen_blocks(const WeightPoset& poset, int threads = 1);

struct VerifyReport {
    bool equal = false;
    BlockDecomposition by_invariants;
    BlockDecomposition by_linkage;
    std::string certificate;  // set when the decompositions differ
};

/// Computes both decompositions and compares them as set partitions.
VerifyReport verify_main_theorem(const WeightPoset& poset, int threads = 1);

/**
 * The scaled poset Gamma = { chi(nu) : nu in the kappa class, s_lambda(nu) = s }
 * together with the nu -> chi(nu) correspondence. For p > 0 the reduced poset
 * carries parameters (p, p); for p = 0 there is no reduced algebra to build
 * and the result is marked edge-free instead.
 */
struct FrobeniusReduction {
    std::vector<Partition> gamma;
    std::vector<std::pair<Partition, Partition>> correspondence;
    std::optional<WeightPoset> reduced;
    bool edge_free = false;
};

FrobeniusReduction frobenius_reduction(const WeightPoset& poset, const Partition& kappa,
                                       int s);

}  // namespace schur
