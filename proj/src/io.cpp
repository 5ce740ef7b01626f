#include "schur/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "schur/abacus.hpp"

namespace schur {

namespace {

using nlohmann::ordered_json;

std::string node_str(Node node) {
    return "(" + std::to_string(node.row) + "," + std::to_string(node.col) + ")";
}

std::string sign_str(const JantzenEdge& edge, bool include_signs) {
    if (!include_signs) return "unknown";
    return edge.sign > 0 ? "+1" : "-1";
}

}  // namespace

ordered_json partition_json(const Partition& mu) {
    return ordered_json(mu.parts());
}

ordered_json block_report_json(const WeightPoset& poset, const BlockDecomposition& dec,
                               bool verified) {
    ordered_json out;
    out["r"] = poset.r();
    out["e"] = poset.params().e;
    out["p"] = poset.params().p;
    out["poset"] = poset.spec().str();
    out["cosaturated"] = poset.cosaturated();
    out["e_cosaturated"] = poset.e_cosaturated();
    out["blocks"] = ordered_json::array();
    for (const BlockClass& cls : dec.classes) {
        ordered_json block;
        block["core"] = partition_json(cls.label.core);
        block["s"] = cls.label.s;
        block["chi_pcore"] =
            cls.label.s > 1 ? partition_json(cls.label.chi_pcore) : ordered_json::array();
        block["members"] = ordered_json::array();
        for (const Partition& mu : cls.members)
            block["members"].push_back(partition_json(mu));
        out["blocks"].push_back(std::move(block));
    }
    out["verified_against_jantzen"] = verified;
    return out;
}

std::string blocks_tsv(const WeightPoset& poset, const BlockDecomposition& dec) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dec.classes.size(); ++i) {
        for (const Partition& mu : dec.classes[i].members) {
            const BlockInvariants inv = block_label(poset, mu);
            out << mu.str() << '\t' << inv.core.str() << '\t' << inv.ell << '\t' << inv.s
                << '\t' << inv.chi.str() << '\t' << inv.chi_pcore.str() << '\t' << i + 1
                << '\n';
        }
    }
    return out.str();
}

namespace {

// Quotient of (mu - e-core) by s, "-" when it is not a partition of multiples.
std::string intro_chi_str(const WeightPoset& poset, const Partition& mu) {
    const int s = s_lambda(poset, mu);
    const Partition& kappa = poset.core_of(mu);
    std::vector<int> counts(mu.length());
    for (int i = 1; i <= mu.length(); ++i) {
        const int diff = mu.part(i) - kappa.part(i);
        if (diff < 0 || diff % s != 0) return "-";
        counts[i - 1] = diff / s;
    }
    try {
        return Partition(std::move(counts)).str();
    } catch (const InputError&) {
        return "-";
    }
}

}  // namespace

std::string blocks_text(const WeightPoset& poset, const BlockDecomposition& dec,
                        bool verified, bool chi_both) {
    std::ostringstream out;
    out << "r=" << poset.r() << " e=" << poset.params().e << " p=" << poset.params().p
        << " poset=\"" << poset.spec().str() << "\""
        << " cosaturated=" << (poset.cosaturated() ? "yes" : "no")
        << " e-cosaturated=" << (poset.e_cosaturated() ? "yes" : "no") << "\n";

    struct Row {
        std::string mu, core, ell, s, chi, chi_pcore, chi_intro, block;
    };
    std::vector<Row> rows;
    rows.push_back({"mu", "core", "ell", "s", "chi", "chi-p-core", "chi-vs-core", "block"});
    for (std::size_t i = 0; i < dec.classes.size(); ++i) {
        for (const Partition& mu : dec.classes[i].members) {
            const BlockInvariants inv = block_label(poset, mu);
            rows.push_back({mu.str(), inv.core.str(), std::to_string(inv.ell),
                            std::to_string(inv.s), inv.chi.str(), inv.chi_pcore.str(),
                            chi_both ? intro_chi_str(poset, mu) : "",
                            std::to_string(i + 1)});
        }
    }

    auto width = [&](auto field) {
        std::size_t w = 0;
        for (const Row& row : rows) w = std::max(w, (row.*field).size());
        return w;
    };
    const std::size_t w_mu = width(&Row::mu), w_core = width(&Row::core),
                      w_ell = width(&Row::ell), w_s = width(&Row::s),
                      w_chi = width(&Row::chi), w_pc = width(&Row::chi_pcore),
                      w_in = width(&Row::chi_intro);
    for (const Row& row : rows) {
        out << std::left << std::setw(static_cast<int>(w_mu) + 2) << row.mu
            << std::setw(static_cast<int>(w_core) + 2) << row.core
            << std::setw(static_cast<int>(w_ell) + 2) << row.ell
            << std::setw(static_cast<int>(w_s) + 2) << row.s
            << std::setw(static_cast<int>(w_chi) + 2) << row.chi
            << std::setw(static_cast<int>(w_pc) + 2) << row.chi_pcore;
        if (chi_both) out << std::setw(static_cast<int>(w_in) + 2) << row.chi_intro;
        out << row.block << "\n";
    }
    out << dec.classes.size() << " blocks";
    if (verified) out << " (invariant labels and Jantzen linkage agree)";
    out << "\n";
    return out.str();
}

ordered_json edges_json(const std::vector<JantzenEdge>& edges, bool include_signs) {
    ordered_json out = ordered_json::array();
    for (const JantzenEdge& edge : edges) {
        ordered_json item;
        item["upper"] = partition_json(edge.upper);
        item["lower"] = partition_json(edge.lower);
        item["witness"] = {{edge.witness_first.row, edge.witness_first.col},
                           {edge.witness_second.row, edge.witness_second.col}};
        item["witness_shape"] = edge.column_witness ? "column" : "row";
        item["moved_size"] = edge.moved_size;
        item["magnitude"] = edge.magnitude;
        if (include_signs)
            item["sign"] = edge.sign;
        else
            item["sign"] = "unknown";
        out.push_back(std::move(item));
    }
    return out;
}

std::string edges_tsv(const std::vector<JantzenEdge>& edges, bool include_signs) {
    std::ostringstream out;
    for (const JantzenEdge& edge : edges) {
        out << edge.upper.str() << '\t' << edge.lower.str() << '\t' << edge.witness_first.row
            << '\t' << edge.witness_first.col << '\t' << edge.witness_second.row << '\t'
            << edge.witness_second.col << '\t' << edge.moved_size << '\t' << edge.magnitude
            << '\t' << sign_str(edge, include_signs) << '\n';
    }
    return out.str();
}

std::string edges_text(const std::vector<JantzenEdge>& edges, bool include_signs) {
    std::ostringstream out;
    for (const JantzenEdge& edge : edges) {
        out << edge.upper.str() << " -> " << edge.lower.str() << "  witness "
            << node_str(edge.witness_first) << "," << node_str(edge.witness_second)
            << (edge.column_witness ? " (columns)" : " (rows)")
            << "  moved=" << edge.moved_size << " magnitude=" << edge.magnitude
            << " sign=" << sign_str(edge, include_signs) << '\n';
    }
    return out.str();
}

PosetSpec parse_poset_spec(const std::string& poset_text, const std::string& filter_text,
                           int r, int e) {
    PosetSpec spec;
    if (poset_text == "all") {
        if (r < 1) throw InputError("poset 'all' needs --r");
        spec = PosetSpec::all(r);
    } else if (poset_text.rfind("maxlen:", 0) == 0) {
        if (r < 1) throw InputError("poset 'maxlen' needs --r");
        int n = 0;
        try {
            n = std::stoi(poset_text.substr(7));
        } catch (const std::exception&) {
            throw InputError("invalid maxlen bound in '" + poset_text + "'");
        }
        if (n < 1) throw InputError("maxlen bound must be positive");
        spec = PosetSpec::max_length(n, r);
    } else if (poset_text.rfind("dominating:", 0) == 0) {
        spec = PosetSpec::dominating(Partition::parse(poset_text.substr(11)));
        if (r > 0 && r != spec.r)
            throw InputError("--r does not match the size of the dominating base");
    } else if (poset_text.rfind("explicit:@", 0) == 0) {
        const std::string path = poset_text.substr(10);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open poset file '" + path + "'");
        std::vector<Partition> members;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty()) continue;
            members.push_back(Partition::parse(line));
        }
        spec = PosetSpec::explicit_list(std::move(members));
        if (r > 0 && !spec.explicit_members.empty() && r != spec.r)
            throw InputError("--r does not match the size of the explicit members");
    } else {
        throw InputError("unknown poset spec '" + poset_text +
                         "' (expected all | maxlen:<n> | dominating:<parts> | explicit:@<file>)");
    }

    if (filter_text == "nonempty-core") {
        spec.with_nonempty_core(e);
    } else if (filter_text.rfind("core:", 0) == 0) {
        spec.with_core(e, Partition::parse(filter_text.substr(5)));
    } else if (!filter_text.empty()) {
        throw InputError("unknown filter '" + filter_text +
                         "' (expected nonempty-core | core:<parts>)");
    }
    return spec;
}

}  // namespace schur
