#include "clut/scan.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <istream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "clut/clutter.hpp"
#include "clut/errors.hpp"

namespace clut {

namespace {

struct Candidate {
    std::string g6;
    Graph g;
};

std::string conjectured_shape(const Graph& g, const GraphStats& st) {
    if (st.cycle && g.n() == 7) return "C_7";
    if (st.complete && g.n() % 2 == 0) return "K_{2n}";
    if (st.balanced_complete_bipartite) return "K_{n,n}";
    return "";
}

// Decides connected / regular / edged in one pass and either tallies the skip
// or appends the candidate.
void admit(ScanReport& rep, std::vector<Candidate>& cands, std::string g6, Graph g) {
    if (!is_connected(g)) {
        ++rep.skipped_not_connected;
        return;
    }
    const int d0 = g.n() > 0 ? g.degree(0) : 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d0) {
            ++rep.skipped_not_regular;
            return;
        }
    if (g.m() == 0) {
        ++rep.skipped_no_edges;
        return;
    }
    ++rep.scanned;
    cands.push_back({std::move(g6), std::move(g)});
}

ScanReport run_scan(std::vector<Candidate> cands, ScanReport rep, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    const size_t cnt = cands.size();
    std::vector<Rational> cs(cnt);

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cnt)));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](int t) {
        const size_t lo = cnt * t / workers, hi = cnt * (t + 1) / workers;
        try {
            for (size_t i = lo; i < hi; ++i)
                cs[i] = matching_complexity(cands[i].g).report.c;
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
        for (std::thread& th : pool) th.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    const Rational one(1, 1);
    for (size_t i = 0; i < cnt; ++i) {
        if (cs[i] == one) {
            ++rep.complexity_one;
            continue;
        }
        const GraphStats st = graph_stats(cands[i].g);
        ScanEntry entry{cands[i].g6, cands[i].g.n(), st.regular_degree.value_or(0), cs[i],
                        conjectured_shape(cands[i].g, st)};
        (entry.shape.empty() ? rep.counterexamples : rep.exceptions).push_back(std::move(entry));
    }
    rep.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace

ScanReport conjecture_scan(std::istream& in, int jobs) {
    ScanReport rep;
    std::vector<Candidate> cands;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        ++rep.total;
        try {
            Graph g = from_graph6(line);
            admit(rep, cands, line, std::move(g));
        } catch (const InputError& e) {
            rep.parse_errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return run_scan(std::move(cands), std::move(rep), jobs);
}

ScanReport conjecture_scan_builtin(int max_n, int jobs) {
    if (max_n < 1 || max_n > 7)
        throw InputError("builtin enumeration supports 1 <= max_n <= 7");
    ScanReport rep;
    std::vector<Candidate> cands;
    for (int n = 1; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            ++rep.total;
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1u << bit)) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, std::move(edges));
            std::string g6 = to_graph6(g);
            admit(rep, cands, std::move(g6), std::move(g));
        }
    }
    return run_scan(std::move(cands), std::move(rep), jobs);
}

} // namespace clut
