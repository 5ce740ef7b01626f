#include "schur/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "schur/abacus.hpp"

namespace schur {

namespace {

constexpr int kMaxEnumerationSize = 64;

void generate_rec(int remaining, int max_part, int slots, std::vector<int>& acc,
                  std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (slots == 0) return;
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        acc.push_back(next);
        generate_rec(remaining - next, next, slots - 1, acc, out);
        acc.pop_back();
    }
}

void check_enumeration_size(int r) {
    if (r < 0) throw InputError("partition size must be non-negative");
    if (r > kMaxEnumerationSize)
        throw InputError("exhaustive enumeration is limited to r <= 64");
}

}  // namespace

PosetSpec PosetSpec::all(int r) {
    PosetSpec spec;
    spec.kind = Kind::All;
    spec.r = r;
    return spec;
}

PosetSpec PosetSpec::max_length(int n, int r) {
    PosetSpec spec;
    spec.kind = Kind::MaxLength;
    spec.length_bound = n;
    spec.r = r;
    return spec;
}

PosetSpec PosetSpec::dominating(Partition mu) {
    PosetSpec spec;
    spec.kind = Kind::Dominating;
    spec.r = mu.size();
    spec.base = std::move(mu);
    return spec;
}

PosetSpec PosetSpec::explicit_list(std::vector<Partition> members) {
    PosetSpec spec;
    spec.kind = Kind::Explicit;
    spec.explicit_members = std::move(members);
    if (!spec.explicit_members.empty()) spec.r = spec.explicit_members.front().size();
    return spec;
}

PosetSpec& PosetSpec::with_nonempty_core(int e) {
    filter = Filter::NonemptyECore;
    filter_e = e;
    return *this;
}

PosetSpec& PosetSpec::with_core(int e, Partition kappa) {
    filter = Filter::ECoreEquals;
    filter_e = e;
    filter_core = std::move(kappa);
    return *this;
}

std::string PosetSpec::str() const {
    std::string out;
    switch (kind) {
        case Kind::All: out = "all"; break;
        case Kind::MaxLength: out = "maxlen:" + std::to_string(length_bound); break;
        case Kind::Dominating: out = "dominating:" + base.str(); break;
        case Kind::Explicit: out = "explicit"; break;
    }
    switch (filter) {
        case Filter::None: break;
        case Filter::NonemptyECore: out += " & nonempty-core"; break;
        case Filter::ECoreEquals: out += " & core:" + filter_core.str(); break;
    }
    return out;
}

std::vector<Partition> all_partitions(int r) {
    check_enumeration_size(r);
    std::vector<Partition> out;
    std::vector<int> acc;
    generate_rec(r, r, r, acc, out);
    if (r == 0) out.assign(1, Partition{});
    return out;
}

std::vector<Partition> partitions_max_length(int n, int r) {
    check_enumeration_size(r);
    if (n < 0) throw InputError("length bound must be non-negative");
    std::vector<Partition> out;
    std::vector<int> acc;
    generate_rec(r, r, n, acc, out);
    if (r == 0) out.assign(1, Partition{});
    return out;
}

std::vector<Partition> generate_poset_members(const PosetSpec& spec) {
    std::vector<Partition> members;
    switch (spec.kind) {
        case PosetSpec::Kind::All:
            members = all_partitions(spec.r);
            break;
        case PosetSpec::Kind::MaxLength:
            members = partitions_max_length(spec.length_bound, spec.r);
            break;
        case PosetSpec::Kind::Dominating: {
            for (Partition& mu : all_partitions(spec.base.size()))
                if (dominates(mu, spec.base)) members.push_back(std::move(mu));
            break;
        }
        case PosetSpec::Kind::Explicit: {
            members = spec.explicit_members;
            for (const Partition& mu : members)
                if (mu.size() != spec.r)
                    throw InputError("explicit poset members must all have the same size");
            std::sort(members.begin(), members.end(), std::greater<Partition>());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            break;
        }
    }

    switch (spec.filter) {
        case PosetSpec::Filter::None:
            break;
        case PosetSpec::Filter::NonemptyECore: {
            std::erase_if(members, [&](const Partition& mu) {
                return e_core(mu, spec.filter_e).empty();
            });
            break;
        }
        case PosetSpec::Filter::ECoreEquals: {
            if (!is_e_core(spec.filter_core, spec.filter_e))
                throw InputError("core filter value is not an e-core");
            std::erase_if(members, [&](const Partition& mu) {
                return e_core(mu, spec.filter_e) != spec.filter_core;
            });
            break;
        }
    }
    std::sort(members.begin(), members.end(), std::greater<Partition>());
    return members;
}

WeightPoset::WeightPoset(PosetSpec spec, ArithmeticParams params)
    : spec_(std::move(spec)), params_(params) {
    members_ = generate_poset_members(spec_);
    if (members_.empty()) throw InputError("weight poset has no members");
    r_ = members_.front().size();
    check_enumeration_size(r_);

    cores_.reserve(members_.size());
    for (int i = 0; i < static_cast<int>(members_.size()); ++i) {
        const Partition& mu = members_[i];
        index_.emplace(mu, i);
        cores_.push_back(e_core(mu, params_.e));
        const Partition& core = cores_.back();
        int last = 0;
        for (int j = std::max(mu.length(), core.length()); j >= 1; --j) {
            if (mu.part(j) != core.part(j)) {
                last = j;
                break;
            }
        }
        auto [it, fresh] = class_length_.emplace(core, last);
        if (!fresh) it->second = std::max(it->second, last);
    }

    cosaturated_ = true;
    e_cosaturated_ = true;
    for (const Partition& candidate : all_partitions(r_)) {
        if (index_.count(candidate)) continue;
        for (int i = 0; i < static_cast<int>(members_.size()); ++i) {
            if (!dominates(candidate, members_[i])) continue;
            cosaturated_ = false;
            if (e_core(candidate, params_.e) == cores_[i]) {
                e_cosaturated_ = false;
                break;
            }
        }
        if (!cosaturated_ && !e_cosaturated_) break;
    }
}

bool WeightPoset::contains(const Partition& mu) const {
    return index_.count(mu) != 0;
}

const Partition& WeightPoset::core_of(const Partition& mu) const {
    auto it = index_.find(mu);
    if (it == index_.end())
        throw InputError("partition " + mu.str() + " is not a member of the poset");
    return cores_[it->second];
}

int WeightPoset::class_length(const Partition& core) const {
    auto it = class_length_.find(core);
    if (it == class_length_.end())
        throw InputError("no member of the poset has e-core " + core.str());
    return it->second;
}

}  // namespace schur
