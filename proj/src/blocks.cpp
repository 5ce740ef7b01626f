#include "schur/blocks.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "schur/abacus.hpp"

namespace schur {

std::vector<int> admissible_moduli(const ArithmeticParams& params, int bound) {
    std::vector<int> out{1};
    long long s = params.e;
    while (s <= bound) {
        out.push_back(static_cast<int>(s));
        if (params.p == 0) break;
        s *= params.p;
    }
    return out;
}

std::vector<Partition> members_with_core(const WeightPoset& poset, const Partition& kappa) {
    if (!is_e_core(kappa, poset.params().e))
        throw InputError(kappa.str() + " is not an e-core");
    std::vector<Partition> out;
    for (const Partition& mu : poset.members())
        if (poset.core_of(mu) == kappa) out.push_back(mu);
    return out;
}

int length_function(const WeightPoset& poset, const Partition& mu) {
    return poset.class_length(poset.core_of(mu));
}

int s_lambda(const WeightPoset& poset, const Partition& mu) {
    const int ell = length_function(poset, mu);
    if (ell <= 1) return 1;
    int g = 0;
    for (int i = 1; i < ell; ++i) g = std::gcd(g, mu.part(i) - mu.part(i + 1) + 1);
    int best = 1;
    for (int s : admissible_moduli(poset.params(), g))
        if (g % s == 0) best = std::max(best, s);
    return best;
}

Partition chi_lambda(const WeightPoset& poset, const Partition& mu) {
    const int s = s_lambda(poset, mu);
    const int ell = length_function(poset, mu);
    const Partition s_core = e_core(mu, s);
    std::vector<int> counts(mu.length());
    for (int i = 1; i <= mu.length(); ++i) {
        const int diff = mu.part(i) - s_core.part(i);
        if (diff < 0 || diff % s != 0)
            throw InvariantError("row defect against the s-core is not a multiple of s");
        counts[i - 1] = diff / s;
    }
    Partition chi;
    try {
        chi = Partition(std::move(counts));
    } catch (const InputError&) {
        throw InvariantError("hook counts do not form a partition");
    }
    if (s > 1 && chi.length() > ell)
        throw InvariantError("chi has non-zero rows below the class length");
    return chi;
}

BlockInvariants block_label(const WeightPoset& poset, const Partition& mu) {
    BlockInvariants inv;
    inv.core = poset.core_of(mu);
    inv.ell = length_function(poset, mu);
    inv.s = s_lambda(poset, mu);
    inv.chi = chi_lambda(poset, mu);
    inv.chi_pcore = poset.params().p == 0 ? inv.chi : e_core(inv.chi, poset.params().p);
    return inv;
}

namespace {

void require_e_cosaturated(const WeightPoset& poset) {
    if (!poset.e_cosaturated())
        throw InputError("weight poset is not e-cosaturated; block theory does not apply");
}

void sort_classes(std::vector<BlockClass>& classes) {
    std::sort(classes.begin(), classes.end(), [](const BlockClass& a, const BlockClass& b) {
        return a.members.front() > b.members.front();
    });
}

std::string label_str(const BlockLabel& label) {
    std::string out = "core=" + label.core.str() + " s=" + std::to_string(label.s);
    if (label.s > 1) out += " chi-p-core=" + label.chi_pcore.str();
    return out;
}

}  // namespace

BlockDecomposition sim_lambda_classes(const WeightPoset& poset) {
    require_e_cosaturated(poset);
    using Key = std::tuple<Partition, int, Partition>;  // core, s, chi p-core when s > 1
    std::map<Key, BlockClass> buckets;
    for (const Partition& mu : poset.members()) {
        const BlockInvariants inv = block_label(poset, mu);
        Key key{inv.core, inv.s, inv.s > 1 ? inv.chi_pcore : Partition{}};
        BlockClass& cls = buckets[key];
        if (cls.members.empty())
            cls.label = BlockLabel{std::get<0>(key), inv.ell, std::get<1>(key), std::get<2>(key)};
        cls.members.push_back(mu);
    }
    BlockDecomposition dec;
    dec.method = BlockDecomposition::Method::InvariantClassification;
    for (auto& [key, cls] : buckets) dec.classes.push_back(std::move(cls));
    sort_classes(dec.classes);
    return dec;
}

BlockDecomposition jantzen_blocks(const WeightPoset& poset, int threads) {
    require_e_cosaturated(poset);
    BlockDecomposition dec;
    dec.method = BlockDecomposition::Method::JantzenLinkage;
    dec.edge_certificate = build_jantzen_graph(poset, threads);
    for (std::vector<Partition>& members : linkage_classes(*dec.edge_certificate)) {
        BlockClass cls;
        const BlockInvariants inv = block_label(poset, members.front());
        cls.label = BlockLabel{inv.core, inv.ell, inv.s, inv.s > 1 ? inv.chi_pcore : Partition{}};
        cls.members = std::move(members);
        dec.classes.push_back(std::move(cls));
    }
    sort_classes(dec.classes);
    return dec;
}

namespace {

std::map<Partition, int> class_index(const BlockDecomposition& dec) {
    std::map<Partition, int> out;
    for (int i = 0; i < static_cast<int>(dec.classes.size()); ++i)
        for (const Partition& mu : dec.classes[i].members) out.emplace(mu, i);
    return out;
}

std::string linkage_path(const JantzenGraph& graph, const Partition& from, const Partition& to) {
    std::map<Partition, std::vector<const Partition*>> adj;
    for (const JantzenEdge& edge : graph.edges) {
        adj[edge.upper].push_back(&edge.lower);
        adj[edge.lower].push_back(&edge.upper);
    }
    std::map<Partition, Partition> parent;
    std::deque<Partition> queue{from};
    parent.emplace(from, from);
    while (!queue.empty()) {
        Partition cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (const Partition* next : adj[cur])
            if (parent.emplace(*next, cur).second) queue.push_back(*next);
    }
    if (!parent.count(to)) return "";
    std::vector<Partition> path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::string out;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (!out.empty()) out += " ~ ";
        out += it->str();
    }
    return out;
}

}  // namespace

VerifyReport verify_main_theorem(const WeightPoset& poset, int threads) {
    VerifyReport report;
    report.by_invariants = sim_lambda_classes(poset);
    report.by_linkage = jantzen_blocks(poset, threads);

    const auto inv_index = class_index(report.by_invariants);
    const auto link_index = class_index(report.by_linkage);
    report.equal = true;
    const auto& members = poset.members();
    for (std::size_t i = 0; i < members.size() && report.equal; ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Partition& lambda = members[i];
            const Partition& mu = members[j];
            const bool inv_same = inv_index.at(lambda) == inv_index.at(mu);
            const bool link_same = link_index.at(lambda) == link_index.at(mu);
            if (inv_same == link_same) continue;
            report.equal = false;
            std::ostringstream cert;
            cert << lambda << " and " << mu;
            if (inv_same) {
                cert << " share the label ("
                     << label_str(report.by_invariants.classes[inv_index.at(lambda)].label)
                     << ") but are not Jantzen linked";
            } else {
                cert << " are Jantzen linked ["
                     << linkage_path(*report.by_linkage.edge_certificate, lambda, mu)
                     << "] but carry different labels ("
                     << label_str(report.by_invariants.classes[inv_index.at(lambda)].label)
                     << ") vs ("
                     << label_str(report.by_invariants.classes[inv_index.at(mu)].label) << ")";
            }
            report.certificate = cert.str();
            break;
        }
    }
    return report;
}

FrobeniusReduction frobenius_reduction(const WeightPoset& poset, const Partition& kappa,
                                       int s) {
    const ArithmeticParams& params = poset.params();
    if (s <= 1) throw InputError("the reduction requires s > 1");
    const auto moduli = admissible_moduli(params, s);
    if (std::find(moduli.begin(), moduli.end(), s) == moduli.end())
        throw InputError(std::to_string(s) + " is not an admissible modulus for (e, p)");

    FrobeniusReduction red;
    for (const Partition& nu : members_with_core(poset, kappa)) {
        if (s_lambda(poset, nu) != s) continue;
        Partition image = chi_lambda(poset, nu);
        red.gamma.push_back(image);
        red.correspondence.emplace_back(nu, std::move(image));
    }
    if (red.gamma.empty())
        throw InputError("no member of the poset has the given core and modulus");
    std::sort(red.gamma.begin(), red.gamma.end(), std::greater<Partition>());
    if (std::adjacent_find(red.gamma.begin(), red.gamma.end()) != red.gamma.end())
        throw InvariantError("chi is not injective on the reduction class");

    red.edge_free = params.p == 0;
    if (params.p > 0)
        red.reduced.emplace(PosetSpec::explicit_list(red.gamma),
                            ArithmeticParams(params.p, params.p));
    return red;
}

}  // namespace schur
