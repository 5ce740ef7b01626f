#pragma once

#include <string>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// Beta numbers beta_i = mu_i - i + l, stored strictly decreasing.
/// On an e-runner abacus, position beta sits on runner beta mod e, row beta / e.
struct BetaSet {
    std::vector<int> beads;

    BetaSet() = default;
    explicit BetaSet(std::vector<int> beads);
    int count() const { return static_cast<int>(beads.size()); }

    friend auto operator<=>(const BetaSet&, const BetaSet&) = default;
};

/// The l-beta numbers of mu; requires l >= length(mu).
BetaSet beta_numbers(const Partition& mu, int bead_count);

Partition partition_from_betas(const BetaSet& betas);

/// The e-core, by pushing all beads as high as possible on their runner.
/// Independent of the bead count used; e = 1 yields the empty partition.
Partition e_core(const Partition& mu, int e);

/// (|mu| - |core_e(mu)|) / e.
int e_weight(const Partition& mu, int e);

bool same_e_core(const Partition& lhs, const Partition& rhs, int e);

bool is_e_core(const Partition& mu, int e);

/// Fixed-width abacus picture: bead '●', empty '·', rows top to bottom,
/// runners left to right, position i*e+j at row i, runner j. Output is stable.
std::string render_abacus(const Partition& mu, int e, int bead_count);

}  // namespace schur
