#pragma once

#include <vector>

#include "schur/partition.hpp"
#include "schur/poset.hpp"

namespace schur {

/**
 * The valuation governing non-vanishing: nu_ep(h) = 0 when e does not divide
 * h, and nu_p(h/e) + 1 otherwise, with nu_p identically 0 when p = 0.
 */
int nu_ep(int h, const ArithmeticParams& params);

/**
 * A certified non-zero Jantzen coefficient J[upper, lower]. The witness pair
 * is a row pair ((a,b),(a,c)) with b < c, or a column pair ((x,z),(y,z)) with
 * x < y when column_witness is set. moved_size is the length of the hook that
 * was unwrapped and re-wrapped; magnitude is |nu_ep(h_first) - nu_ep(h_second)|.
 * sign follows the parity-of-leg-lengths convention and is advisory only;
 * serialisers hide it unless explicitly requested.
 */
struct JantzenEdge {
    Partition upper;
    Partition lower;
    Node witness_first;
    Node witness_second;
    bool column_witness = false;
    int moved_size = 0;
    int magnitude = 0;
    int sign = 0;
};

/// All mu with J[lambda, mu] != 0, by row-pair enumeration over Diag(lambda).
std::vector<JantzenEdge> jantzen_partners(const Partition& lambda,
                                          const ArithmeticParams& params);

/// All lambda with J[lambda, mu] != 0, by column-pair enumeration over
/// Diag(mu). Independent of jantzen_partners; the two are cross-checked in tests.
std::vector<JantzenEdge> jantzen_partners_by_columns(const Partition& mu,
                                                     const ArithmeticParams& params);

/// Whether J[lambda, mu] != 0; requires |lambda| = |mu|.
bool jantzen_nonzero(const Partition& lambda, const Partition& mu,
                     const ArithmeticParams& params);

struct JantzenGraph {
    std::vector<Partition> vertices;
    std::vector<JantzenEdge> edges;
};

/// Edges with both endpoints in the poset. Partner enumeration runs in
/// parallel when threads > 1; the result is independent of scheduling.
JantzenGraph build_jantzen_graph(const WeightPoset& poset, int threads = 1);

/// Connected components of the undirected non-vanishing relation, by union-find.
std::vector<std::vector<Partition>> linkage_classes(const JantzenGraph& graph);

}  // namespace schur
