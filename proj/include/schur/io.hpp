#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "schur/blocks.hpp"
#include "schur/jantzen.hpp"
#include "schur/poset.hpp"

namespace schur {

nlohmann::ordered_json partition_json(const Partition& mu);

/// The block report, schema:
/// { r, e, p, poset, cosaturated, e_cosaturated,
///   blocks: [ { core, s, chi_pcore, members } ], verified_against_jantzen }.
/// Partitions serialise as arrays of parts, largest first, no trailing zeros.
/// chi_pcore is [] for s = 1 classes, where it does not enter the label.
nlohmann::ordered_json block_report_json(const WeightPoset& poset,
                                         const BlockDecomposition& dec, bool verified);

/// One record per member: mu, core, ell, s, chi, chi_pcore, block index.
std::string blocks_tsv(const WeightPoset& poset, const BlockDecomposition& dec);

/// Human-readable table of per-member invariants and block assignments.
/// chi_both additionally shows the introduction-style quotient against the
/// e-core, which can fail to be a partition when s > e ("-" in that case).
std::string blocks_text(const WeightPoset& poset, const BlockDecomposition& dec,
                        bool verified, bool chi_both);

nlohmann::ordered_json edges_json(const std::vector<JantzenEdge>& edges, bool include_signs);

/// One record per edge: upper, lower, witness rows/cols, moved_size, magnitude[, sign].
std::string edges_tsv(const std::vector<JantzenEdge>& edges, bool include_signs);

std::string edges_text(const std::vector<JantzenEdge>& edges, bool include_signs);

/// Poset grammar: "all" | "maxlen:<n>" | "dominating:<parts>" | "explicit:@<file>",
/// filters "" | "nonempty-core" | "core:<parts>". r is required for all/maxlen
/// and cross-checked elsewhere.
PosetSpec parse_poset_spec(const std::string& poset_text, const std::string& filter_text,
                           int r, int e);

}  // namespace schur
