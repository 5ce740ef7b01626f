#include "schur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <utility>

#include "schur/abacus.hpp"

namespace schur {

namespace {

constexpr int kMaxPart = 1'000'000;
constexpr int kMaxParts = 100'000;
constexpr long long kMaxSize = 10'000'000;

bool prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (static_cast<int>(parts_.size()) > kMaxParts)
        throw InputError("partition has too many parts");
    long long total = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InputError("partition parts must be positive");
        if (parts_[i] > kMaxPart) throw InputError("partition part too large");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw InputError("partition parts must be non-increasing");
        total += parts_[i];
    }
    if (total > kMaxSize) throw InputError("partition too large");
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::size_t stop = end;
        while (stop > pos && text[stop - 1] == ' ') --stop;
        if (stop == pos) throw InputError("empty entry in partition text");
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + stop, value);
        if (ec != std::errc() || ptr != text.data() + stop)
            throw InputError("invalid partition text: '" + std::string(text) + "'");
        if (value < 0) throw InputError("partition parts must be non-negative");
        parts.push_back(value);
        pos = end + 1;
        if (end == text.size()) break;
    }
    if (parts.size() == 1 && parts[0] == 0) parts.clear();
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw InvariantError("partition rows are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& mu) {
    return os << '(' << mu.str() << ')';
}

std::ostream& operator<<(std::ostream& os, Node node) {
    return os << '(' << node.row << ',' << node.col << ')';
}

ArithmeticParams::ArithmeticParams(int e_in, int p_in) : e(e_in), p(p_in) {
    if (e < 2) throw InputError("quantum characteristic e must be at least 2");
    if (p != 0 && !prime(p)) throw InputError("p must be 0 or a prime");
}

Partition conjugate(const Partition& mu) {
    if (mu.empty()) return {};
    std::vector<int> cols(mu.part(1));
    int rows = mu.length();
    for (int j = 1; j <= mu.part(1); ++j) {
        while (rows > 0 && mu.part(rows) < j) --rows;
        cols[j - 1] = rows;
    }
    return Partition(std::move(cols));
}

bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.size() != rhs.size())
        throw SizeMismatchError("dominance compares partitions of equal size");
    long long left = 0, right = 0;
    int rows = std::max(lhs.length(), rhs.length());
    for (int i = 1; i <= rows; ++i) {
        left += lhs.part(i);
        right += rhs.part(i);
        if (left < right) return false;
    }
    return true;
}

bool strictly_dominates(const Partition& lhs, const Partition& rhs) {
    return lhs != rhs && dominates(lhs, rhs);
}

bool contains_node(const Partition& mu, Node node) {
    return node.row >= 1 && node.col >= 1 && node.row <= mu.length() &&
           node.col <= mu.part(node.row);
}

namespace {

int column_height(const Partition& mu, int col) {
    int rows = mu.length();
    while (rows > 0 && mu.part(rows) < col) --rows;
    return rows;
}

}  // namespace

int hook_length(const Partition& mu, Node node) {
    if (!contains_node(mu, node)) throw InputError("node outside the diagram");
    return mu.part(node.row) - node.row + column_height(mu, node.col) - node.col + 1;
}

int residue(Node node, int e) {
    if (e < 1) throw InputError("residue modulus must be positive");
    int r = (node.col - node.row) % e;
    return r < 0 ? r + e : r;
}

RimHookInfo rim_hook(const Partition& mu, Node corner, int e) {
    if (!contains_node(mu, corner)) throw InputError("node outside the diagram");
    RimHookInfo info;
    info.corner = corner;
    const int foot_row = column_height(mu, corner.col);
    info.size = mu.part(corner.row) - corner.row + foot_row - corner.col + 1;
    info.leg = foot_row - corner.row;
    info.hand = {corner.row, mu.part(corner.row)};
    info.foot = {foot_row, corner.col};
    info.foot_residue = residue(info.foot, e);
    return info;
}

Partition remove_rim_hook(const Partition& mu, Node corner) {
    const int h = hook_length(mu, corner);
    BetaSet betas = beta_numbers(mu, mu.length());
    int& moved = betas.beads[corner.row - 1];
    moved -= h;
    if (moved < 0) throw InvariantError("rim hook removal moved a bead below zero");
    std::sort(betas.beads.begin(), betas.beads.end(), std::greater<int>());
    for (std::size_t i = 0; i + 1 < betas.beads.size(); ++i)
        if (betas.beads[i] == betas.beads[i + 1])
            throw InvariantError("rim hook removal collided two beads");
    return partition_from_betas(betas);
}

std::vector<WrapCandidate> wrap_hook_candidates(const Partition& nu, int h) {
    if (h < 1) throw InputError("hook size must be positive");
    const int l = nu.length() + h;
    const BetaSet betas = beta_numbers(nu, l);
    std::set<int> occupied(betas.beads.begin(), betas.beads.end());

    std::vector<WrapCandidate> out;
    for (int j = 0; j < l; ++j) {
        const int source = betas.beads[j];
        const int target = source + h;
        if (occupied.count(target)) continue;

        std::vector<int> moved = betas.beads;
        moved[j] = target;
        std::sort(moved.begin(), moved.end(), std::greater<int>());
        WrapCandidate cand;
        cand.result = partition_from_betas(BetaSet(moved));

        // Hook data straight from the bead move: the new bead's index is the
        // hand row, and the beads strictly between source and target count the leg.
        const int hand_row =
            1 + static_cast<int>(std::find(moved.begin(), moved.end(), target) - moved.begin());
        int leg = 0;
        for (int beta : betas.beads)
            if (beta > source && beta < target) ++leg;
        const int hand_col = cand.result.part(hand_row);
        RimHookInfo& hook = cand.hook;
        hook.size = h;
        hook.leg = leg;
        hook.hand = {hand_row, hand_col};
        hook.foot = {hand_row + leg, hand_col + leg - h + 1};
        hook.corner = {hand_row, hook.foot.col};
        if (hook_length(cand.result, hook.corner) != h)
            throw InvariantError("wrapped hook does not have the requested size");
        out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(), [](const WrapCandidate& a, const WrapCandidate& b) {
        return a.result > b.result;
    });
    return out;
}

namespace {

// Removable e-hooks of mu as bead moves: (bead index, leg length).
std::vector<std::pair<int, int>> removable_hook_moves(const BetaSet& betas, int e) {
    std::vector<std::pair<int, int>> moves;
    std::set<int> occupied(betas.beads.begin(), betas.beads.end());
    for (int i = 0; i < betas.count(); ++i) {
        const int target = betas.beads[i] - e;
        if (target < 0 || occupied.count(target)) continue;
        int leg = 0;
        for (int beta : betas.beads)
            if (beta > target && beta < betas.beads[i]) ++leg;
        moves.emplace_back(i, leg);
    }
    return moves;
}

bool only_horizontal_impl(const Partition& mu, int e,
                          std::map<std::pair<std::vector<int>, int>, bool>& memo) {
    const auto key = std::make_pair(mu.parts(), e);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const BetaSet betas = beta_numbers(mu, std::max(mu.length(), 1));
    const auto moves = removable_hook_moves(betas, e);
    bool ok = true;
    for (const auto& [index, leg] : moves) {
        if (leg != 0) {
            ok = false;
            break;
        }
    }
    if (ok) {
        for (const auto& [index, leg] : moves) {
            std::vector<int> child = betas.beads;
            child[index] -= e;
            std::sort(child.begin(), child.end(), std::greater<int>());
            if (!only_horizontal_impl(partition_from_betas(BetaSet(child)), e, memo)) {
                ok = false;
                break;
            }
        }
    }
    memo.emplace(key, ok);
    return ok;
}

}  // namespace

bool only_horizontal_hooks(const Partition& mu, int e) {
    if (e < 2) throw InputError("e must be at least 2");
    thread_local std::map<std::pair<std::vector<int>, int>, bool> memo;
    return only_horizontal_impl(mu, e, memo);
}

bool horizontal_condition_a(const Partition& mu, int e) {
    if (e < 2) throw InputError("e must be at least 2");
    const Partition conj = conjugate(mu);
    for (int b = 1; b <= mu.part(1); ++b) {
        const int height = conj.part(b);
        bool first = (mu.part(1) - 1 + height - b + 1) % e == 0;
        for (int a = 2; a <= height; ++a) {
            bool divisible = (mu.part(a) - a + height - b + 1) % e == 0;
            if (divisible != first) return false;
        }
    }
    return true;
}

bool horizontal_condition_c(const Partition& mu, int e) {
    if (e < 2) throw InputError("e must be at least 2");
    const Partition kappa = e_core(mu, e);
    for (int i = 1; i < mu.length(); ++i) {
        if (mu.part(i + 1) > kappa.part(i + 1)) {
            if ((mu.part(i) - mu.part(i + 1)) % e != e - 1) return false;
        }
    }
    return true;
}

}  // namespace schur
