#pragma once

#include <map>
#include <string>
#include <vector>

#include "schur/partition.hpp"

namespace schur {

/// Recipe for a finite set of same-size partitions, optionally filtered by e-core.
struct PosetSpec {
    enum class Kind { All, MaxLength, Dominating, Explicit };
    enum class Filter { None, NonemptyECore, ECoreEquals };

    Kind kind = Kind::All;
    int r = 0;                               // All, MaxLength
    int length_bound = 0;                    // MaxLength
    Partition base;                          // Dominating
    std::vector<Partition> explicit_members; // Explicit
    Filter filter = Filter::None;
    int filter_e = 0;
    Partition filter_core;                   // ECoreEquals

    static PosetSpec all(int r);
    static PosetSpec max_length(int n, int r);
    static PosetSpec dominating(Partition mu);
    static PosetSpec explicit_list(std::vector<Partition> members);

    PosetSpec& with_nonempty_core(int e);
    PosetSpec& with_core(int e, Partition kappa);

    std::string str() const;
};

/// All partitions of r, in decreasing lexicographic order. r <= 64.
std::vector<Partition> all_partitions(int r);

/// Partitions of r with at most n parts, in decreasing lexicographic order.
std::vector<Partition> partitions_max_length(int n, int r);

/// The exact member set of the spec, sorted decreasing. Explicit lists of
/// mixed sizes are rejected.
std::vector<Partition> generate_poset_members(const PosetSpec& spec);

/**
 * A weight poset: a finite set of partitions of a common size r together with
 * the arithmetic parameters (e, p). Cosaturation status is computed at
 * construction, not assumed: cosaturated means upward closed under dominance
 * within all partitions of r, e-cosaturated means upward closed within fixed
 * e-core classes. Immutable after construction.
 */
class WeightPoset {
public:
    WeightPoset(PosetSpec spec, ArithmeticParams params);

    const std::vector<Partition>& members() const { return members_; }
    const ArithmeticParams& params() const { return params_; }
    const PosetSpec& spec() const { return spec_; }
    int r() const { return r_; }
    bool cosaturated() const { return cosaturated_; }
    bool e_cosaturated() const { return e_cosaturated_; }

    bool contains(const Partition& mu) const;

    /// The e-core of a member (cached); throws InputError for non-members.
    const Partition& core_of(const Partition& mu) const;

    /// Largest row index at which any member of the core class differs from
    /// the core; 0 when the class is the core alone.
    int class_length(const Partition& core) const;

private:
    PosetSpec spec_;
    ArithmeticParams params_;
    std::vector<Partition> members_;
    std::vector<Partition> cores_;
    std::map<Partition, int> index_;
    std::map<Partition, int> class_length_;
    int r_ = 0;
    bool cosaturated_ = false;
    bool e_cosaturated_ = false;
};

}  // namespace schur
