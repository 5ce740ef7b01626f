#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

/// Bad arguments or malformed user input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two partitions of different sizes were compared where equal sizes are required.
struct SizeMismatchError : InputError {
    using InputError::InputError;
};

/// Internal contract violation; indicates a bug, never valid-input behaviour.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * An integer partition: a non-increasing sequence of positive parts.
 * Trailing zeros are never stored, so two values are equal iff their stored
 * parts are equal. part(i) is 1-based and returns 0 past the last row,
 * which lets formulas treat partitions as infinite sequences.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses "29,6,4"; "" and "0" denote the empty partition.
    static Partition parse(std::string_view text);

    int part(int i) const;
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// Inverse of parse: "29,6,4"; the empty partition renders as "0".
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& mu);

/// A cell (i, j) of a Young diagram, 1-based; (i, j) lies in Diag(mu) iff j <= mu_i.
struct Node {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Node&, const Node&) = default;
};

std::ostream& operator<<(std::ostream& os, Node node);

/// The arithmetic environment: quantum characteristic e >= 2 and field characteristic p.
struct ArithmeticParams {
    int e;
    int p;
    ArithmeticParams(int e, int p);
};

/**
 * A rim hook R_{ab}: the border strip of `size` cells joining the hand node
 * (a, mu_a) to the foot node (mu'_b, b). `leg` is mu'_b - a. foot_residue is
 * filled only when the hook was built with a modulus (rim_hook with e);
 * otherwise it is -1 and residue(foot, e) recovers it for any e.
 */
struct RimHookInfo {
    Node corner;
    int size = 0;
    int leg = 0;
    Node hand;
    Node foot;
    int foot_residue = -1;
};

Partition conjugate(const Partition& mu);

/// Dominance order on partitions of equal size; throws SizeMismatchError otherwise.
bool dominates(const Partition& lhs, const Partition& rhs);
bool strictly_dominates(const Partition& lhs, const Partition& rhs);

bool contains_node(const Partition& mu, Node node);

/// Hook length h_{ab} = mu_a - a + mu'_b - b + 1; node must lie in the diagram.
int hook_length(const Partition& mu, Node node);

/// res_e(i, j) = j - i (mod e), normalised to [0, e).
int residue(Node node, int e);

RimHookInfo rim_hook(const Partition& mu, Node corner, int e);

/// Unwraps the rim hook at `corner`; always yields a valid partition.
Partition remove_rim_hook(const Partition& mu, Node corner);

struct WrapCandidate {
    Partition result;
    RimHookInfo hook;
};

/// Every partition obtained by wrapping an h-rim-hook onto nu, with the wrapped hook's data.
std::vector<WrapCandidate> wrap_hook_candidates(const Partition& nu, int h);

/**
 * True iff mu is an e-core, or every removable e-hook of mu is horizontal
 * (contained in one row) and the same holds recursively after each single
 * removal. Memoised; the cache is thread-local.
 */
bool only_horizontal_hooks(const Partition& mu, int e);

/// Column criterion: within each column, either all hook lengths or none are divisible by e.
bool horizontal_condition_a(const Partition& mu, int e);

/// Difference criterion: mu_i - mu_{i+1} = -1 (mod e) whenever mu_{i+1} exceeds the e-core.
bool horizontal_condition_c(const Partition& mu, int e);

}  // namespace schur
