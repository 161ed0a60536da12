#include "clut/io.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "clut/errors.hpp"

namespace clut {
namespace {

// Numeric tokens of one line, with '#' comments stripped.  Returns false on a
// non-numeric token.
bool line_tokens(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::string body = line;
    if (const auto pos = body.find('#'); pos != std::string::npos) body.erase(pos);
    std::istringstream ss(body);
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            const long long value = std::stoll(tok, &used);
            if (used != tok.size()) return false;
            out.push_back(value);
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

std::string scalar_text(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void flatten_tsv(const Json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_tsv(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array()) {
        size_t i = 0;
        for (const Json& value : j) {
            const std::string idx = std::to_string(i++);
            flatten_tsv(value, path.empty() ? idx : path + "." + idx, out);
        }
    } else {
        out += path;
        out += '\t';
        out += scalar_text(j);
        out += '\n';
    }
}

bool all_scalars(const Json& j) {
    for (const Json& value : j)
        if (value.is_structured()) return false;
    return true;
}

void human_walk(const Json& j, const std::string& label, int depth, std::string& out) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        if (!label.empty()) {
            out += pad;
            out += label;
            out += ":\n";
        }
        const int child = label.empty() ? depth : depth + 1;
        for (const auto& [key, value] : j.items()) human_walk(value, key, child, out);
    } else if (j.is_array()) {
        if (all_scalars(j)) {
            out += pad;
            if (!label.empty()) {
                out += label;
                out += ": ";
            }
            out += '[';
            bool first = true;
            for (const Json& value : j) {
                if (!first) out += ", ";
                first = false;
                out += scalar_text(value);
            }
            out += "]\n";
            return;
        }
        if (!label.empty()) {
            out += pad;
            out += label;
            out += ":\n";
        }
        const int child = label.empty() ? depth : depth + 1;
        size_t i = 0;
        for (const Json& value : j) human_walk(value, "[" + std::to_string(i++) + "]", child, out);
    } else {
        out += pad;
        if (!label.empty()) {
            out += label;
            out += ": ";
        }
        out += scalar_text(j);
        out += '\n';
    }
}

Json optional_int(const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json label_set(const std::vector<char>& flags) {
    Json a = Json::array();
    for (size_t v = 0; v < flags.size(); ++v)
        if (flags[v]) a.push_back(static_cast<int>(v));
    return a;
}

} // namespace

OutputFormat output_format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "tsv") return OutputFormat::tsv;
    if (name == "human") return OutputFormat::human;
    throw InputError("unknown output format '" + name + "' (expected json, tsv, or human)");
}

Clutter read_clutter_text(std::istream& in) {
    std::string line;
    std::vector<long long> tok;
    bool have_ground = false;
    int ground = 0;
    std::vector<Bitset> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line_tokens(line, tok))
            throw InputError("line " + std::to_string(lineno) + ": expected integers");
        if (tok.empty()) continue;
        if (!have_ground) {
            if (tok.size() != 1 || tok[0] < 1)
                throw InputError("line " + std::to_string(lineno) +
                                 ": first data line must be the ground-set size");
            if (tok[0] > (1 << 20))
                throw InputError("ground-set size " + std::to_string(tok[0]) + " is too large");
            ground = static_cast<int>(tok[0]);
            have_ground = true;
            continue;
        }
        Bitset e(ground);
        for (const long long v : tok) {
            if (v < 0 || v >= ground)
                throw InputError("line " + std::to_string(lineno) + ": vertex " +
                                 std::to_string(v) + " outside 0.." + std::to_string(ground - 1));
            e.set(static_cast<int>(v));
        }
        edges.push_back(std::move(e));
    }
    if (!have_ground) throw InputError("empty clutter input");
    return make_clutter(ground, edges);
}

SetCoverInstance read_setcover_text(std::istream& in) {
    std::string line;
    std::vector<long long> tok;
    int lineno = 0;
    // Header: universe size and set count.
    int universe = -1;
    int nsets = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line_tokens(line, tok))
            throw InputError("line " + std::to_string(lineno) + ": expected integers");
        if (tok.empty()) continue;
        if (tok.size() != 2 || tok[0] < 1 || tok[1] < 1)
            throw InputError("line " + std::to_string(lineno) +
                             ": header must be 'universe-size set-count' (both positive)");
        universe = static_cast<int>(tok[0]);
        nsets = static_cast<int>(tok[1]);
        break;
    }
    if (universe < 0) throw InputError("empty set-cover input");
    if (universe > (1 << 20) || nsets > (1 << 20))
        throw InputError("set-cover instance is too large");
    SetCoverInstance inst;
    inst.universe = universe;
    // Exactly nsets lines follow; after the header an empty line is an empty set.
    for (int j = 0; j < nsets; ++j) {
        if (!std::getline(in, line))
            throw InputError("expected " + std::to_string(nsets) + " set lines, got " +
                             std::to_string(j));
        ++lineno;
        if (!line_tokens(line, tok))
            throw InputError("line " + std::to_string(lineno) + ": expected integers");
        Bitset s(universe);
        for (const long long v : tok) {
            if (v < 0 || v >= universe)
                throw InputError("line " + std::to_string(lineno) + ": element " +
                                 std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
            s.set(static_cast<int>(v));
        }
        inst.sets.push_back(std::move(s));
    }
    return inst;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

Json to_json(const Rational& r) {
    Json j;
    j["num"] = r.p;
    j["den"] = r.q;
    j["text"] = r.str();
    return j;
}

Json to_json(const GraphStats& st) {
    Json j;
    j["n"] = st.n;
    j["m"] = st.m;
    j["max_degree"] = st.max_degree;
    j["min_degree"] = st.min_degree;
    j["connected"] = st.connected;
    j["bipartite"] = st.bipartite;
    j["regular"] = st.regular;
    j["regular_degree"] = optional_int(st.regular_degree);
    j["tree"] = st.tree;
    j["complete"] = st.complete;
    j["balanced_complete_bipartite"] = st.balanced_complete_bipartite;
    j["bipartite_side"] = optional_int(st.bipartite_side);
    j["cycle"] = st.cycle;
    j["diameter"] = optional_int(st.diameter);
    return j;
}

Json to_json(const ComplexityReport& rep) {
    Json j;
    j["ground"] = rep.ground;
    j["edge_count"] = rep.per_edge.size();
    j["complexity"] = to_json(rep.c);
    j["argmax_edge"] = rep.argmax_edge;
    j["exact"] = rep.exact;
    Json edges = Json::array();
    for (const EdgeComplexity& pe : rep.per_edge) {
        Json e;
        e["edge"] = pe.edge_index;
        e["min_recognizing"] = pe.min_set.to_vector();
        e["complexity"] = to_json(pe.c);
        edges.push_back(std::move(e));
    }
    j["per_edge"] = std::move(edges);
    return j;
}

Json to_json(const MatchingReport& rep) {
    Json j;
    j["matchings"] = rep.report.per_edge.size();
    j["complexity"] = to_json(rep.report.c);
    j["argmax_matching"] = rep.report.argmax_edge;
    j["exact"] = rep.report.exact;
    Json list = Json::array();
    for (const EdgeComplexity& pe : rep.report.per_edge) {
        Json e;
        e["matching"] = pe.edge_index;
        Json picked = Json::array();
        for (const int k : pe.min_set.to_vector()) {
            const auto& [u, v] = rep.edge_map[static_cast<size_t>(k)];
            picked.push_back(Json::array({u, v}));
        }
        e["min_recognizing_edges"] = std::move(picked);
        e["complexity"] = to_json(pe.c);
        list.push_back(std::move(e));
    }
    j["per_matching"] = std::move(list);
    return j;
}

Json to_json(const BoundReport& rep) {
    Json j;
    j["bound"] = bound_kind_name(rep.kind);
    j["applicable"] = rep.applicable;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    j["computed"] = rep.computed;
    if (rep.computed) {
        Json lhs;
        lhs["text"] = rep.lhs_text;
        lhs["value"] = to_json(rep.lhs);
        j["lhs"] = std::move(lhs);
        j["relation"] = rep.relation;
        Json rhs;
        rhs["text"] = rep.rhs_text;
        if (rep.rhs_is_surd) {
            rhs["surd_t"] = rep.surd_t;
            rhs["surd_s"] = rep.surd_s;
        } else {
            rhs["value"] = to_json(rep.rhs);
        }
        j["rhs"] = std::move(rhs);
        j["holds"] = rep.holds;
        j["tight"] = rep.tight;
    }
    return j;
}

Json to_json(const LemmaReport& rep) {
    Json j;
    j["lemma"] = lemma_kind_name(rep.kind);
    j["premise_holds"] = rep.premise_holds;
    if (!rep.premise_note.empty()) j["premise_note"] = rep.premise_note;
    j["holds"] = rep.holds();
    Json list = Json::array();
    for (const LemmaConclusion& c : rep.conclusions) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        list.push_back(std::move(e));
    }
    j["conclusions"] = std::move(list);
    if (rep.kind == LemmaKind::all_singletons && rep.premise_holds) {
        j["unique_membership"] = rep.unique_membership;
        j["max_clique_size"] = rep.max_clique_size;
    }
    return j;
}

Json to_json(const ReductionReport& rep) {
    Json j;
    j["kind"] = rep.kind == ReductionKind::problem1 ? "problem1" : "problem2";
    j["universe"] = rep.universe;
    j["sets"] = rep.nsets;
    j["multiplicity"] = rep.multiplicity;
    j["l_min"] = rep.l_min;
    j["distinguished_min_recognizing"] = rep.distinguished_min_recognizing;
    Json covers = Json::array();
    for (const char b : rep.cover_exists) covers.push_back(static_cast<bool>(b));
    j["cover_exists"] = std::move(covers);
    Json recog = Json::array();
    for (const char b : rep.recognizing_exists) recog.push_back(static_cast<bool>(b));
    j["recognizing_exists"] = std::move(recog);
    j["distinguished_complexity"] = to_json(rep.distinguished_complexity);
    j["expected"] = to_json(rep.expected);
    j["whole_complexity"] = to_json(rep.whole_complexity);
    if (rep.has_other) j["worst_other"] = to_json(rep.worst_other);
    j["ok"] = rep.ok;
    if (!rep.failures.empty()) j["failures"] = rep.failures;
    return j;
}

Json to_json(const ScanReport& rep) {
    Json j;
    j["total"] = rep.total;
    j["scanned"] = rep.scanned;
    j["skipped_not_connected"] = rep.skipped_not_connected;
    j["skipped_not_regular"] = rep.skipped_not_regular;
    j["skipped_no_edges"] = rep.skipped_no_edges;
    j["complexity_one"] = rep.complexity_one;
    j["consistent"] = rep.consistent();
    const auto entry_json = [](const ScanEntry& e, bool with_shape) {
        Json x;
        x["graph6"] = e.g6;
        x["n"] = e.n;
        x["degree"] = e.r;
        x["complexity"] = to_json(e.c);
        if (with_shape) x["shape"] = e.shape;
        return x;
    };
    Json exceptions = Json::array();
    for (const ScanEntry& e : rep.exceptions) exceptions.push_back(entry_json(e, true));
    j["exceptions"] = std::move(exceptions);
    Json counter = Json::array();
    for (const ScanEntry& e : rep.counterexamples) counter.push_back(entry_json(e, false));
    j["counterexamples"] = std::move(counter);
    if (!rep.parse_errors.empty()) j["parse_errors"] = rep.parse_errors;
    return j;
}

Json to_json(const TreeLabeling& lab) {
    Json j;
    j["rounds"] = lab.rounds;
    j["alpha"] = label_set(lab.alpha);
    j["beta"] = label_set(lab.beta);
    j["gamma"] = label_set(lab.gamma);
    j["delta"] = label_set(lab.delta);
    Json pure = Json::array();
    for (size_t v = 0; v < lab.delta.size(); ++v)
        if (lab.pure_delta(static_cast<int>(v))) pure.push_back(static_cast<int>(v));
    j["pure_delta"] = std::move(pure);
    Json beta_steps = Json::array();
    for (size_t v = 0; v < lab.beta.size(); ++v)
        if (lab.beta[v]) beta_steps.push_back(lab.beta_step[v]);
    j["beta_steps"] = std::move(beta_steps);
    Json gamma_steps = Json::array();
    for (size_t v = 0; v < lab.gamma.size(); ++v)
        if (lab.gamma[v]) gamma_steps.push_back(lab.gamma_step[v]);
    j["gamma_steps"] = std::move(gamma_steps);
    j["has_beta"] = lab.has_beta();
    j["has_pure_delta"] = lab.has_pure_delta();
    return j;
}

Json to_json(const FullReport& rep) {
    Json j;
    j["stats"] = to_json(rep.stats);
    j["independent"] = to_json(rep.independent);
    if (rep.has_matching) j["matching"] = to_json(rep.matching);
    Json bounds = Json::array();
    for (const BoundReport& b : rep.bounds) bounds.push_back(to_json(b));
    j["bounds"] = std::move(bounds);
    Json lemmas = Json::array();
    for (const LemmaReport& l : rep.lemmas) lemmas.push_back(to_json(l));
    j["lemmas"] = std::move(lemmas);
    return j;
}

std::string render(const Json& doc, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json:
        return doc.dump(2) + "\n";
    case OutputFormat::tsv: {
        std::string out;
        flatten_tsv(doc, "", out);
        return out;
    }
    case OutputFormat::human: {
        std::string out;
        human_walk(doc, "", 0, out);
        return out;
    }
    }
    throw Error("unreachable output format");
}

} // namespace clut
