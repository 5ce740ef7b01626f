#include "schur/abacus.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace schur {

BetaSet::BetaSet(std::vector<int> beads_in) : beads(std::move(beads_in)) {
    for (std::size_t i = 0; i < beads.size(); ++i) {
        if (beads[i] < 0) throw InputError("beta numbers must be non-negative");
        if (i + 1 < beads.size() && beads[i] <= beads[i + 1])
            throw InputError("beta numbers must be strictly decreasing");
    }
}

BetaSet beta_numbers(const Partition& mu, int bead_count) {
    if (bead_count < mu.length())
        throw InputError("bead count must be at least the number of parts");
    std::vector<int> beads(bead_count);
    for (int i = 1; i <= bead_count; ++i) beads[i - 1] = mu.part(i) - i + bead_count;
    return BetaSet(std::move(beads));
}

Partition partition_from_betas(const BetaSet& betas) {
    const int l = betas.count();
    std::vector<int> parts(l);
    for (int i = 1; i <= l; ++i) parts[i - 1] = betas.beads[i - 1] - l + i;
    return Partition(std::move(parts));
}

Partition e_core(const Partition& mu, int e) {
    if (e < 1) throw InputError("e must be positive");
    const int l = std::max(mu.length(), 1);
    const BetaSet betas = beta_numbers(mu, l);
    std::vector<int> per_runner(e, 0);
    for (int beta : betas.beads) ++per_runner[beta % e];
    std::vector<int> pushed;
    pushed.reserve(l);
    for (int runner = 0; runner < e; ++runner)
        for (int row = 0; row < per_runner[runner]; ++row)
            pushed.push_back(runner + row * e);
    std::sort(pushed.begin(), pushed.end(), std::greater<int>());
    return partition_from_betas(BetaSet(std::move(pushed)));
}

int e_weight(const Partition& mu, int e) {
    const int diff = mu.size() - e_core(mu, e).size();
    if (diff < 0 || diff % e != 0)
        throw InvariantError("e-core size defect is not a multiple of e");
    return diff / e;
}

bool same_e_core(const Partition& lhs, const Partition& rhs, int e) {
    return e_core(lhs, e) == e_core(rhs, e);
}

bool is_e_core(const Partition& mu, int e) {
    return e_core(mu, e) == mu;
}

std::string render_abacus(const Partition& mu, int e, int bead_count) {
    if (e < 2) throw InputError("an abacus needs at least two runners");
    const BetaSet betas = beta_numbers(mu, bead_count);
    const std::set<int> occupied(betas.beads.begin(), betas.beads.end());
    const int rows = occupied.empty() ? 1 : *occupied.rbegin() / e + 1;
    std::string out;
    for (int row = 0; row < rows; ++row) {
        for (int runner = 0; runner < e; ++runner)
            out += occupied.count(row * e + runner) ? "●" : "·";
        out += '\n';
    }
    return out;
}

}  // namespace schur
