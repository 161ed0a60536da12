#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clut/graph.hpp"
#include "clut/rational.hpp"

namespace clut {

struct ScanEntry {
    std::string g6;
    int n = 0;
    int r = 0;         // regular degree
    Rational c;        // exact matching complexity
    std::string shape; // "C_7" / "K_{2n}" / "K_{n,n}"; empty for counterexamples
};

// Outcome of a conjecture scan.  Every connected regular graph with at least
// one edge gets an exact matching-complexity verdict: complexity one is
// consistent, complexity below one must be one of the three conjectured
// shapes, and anything else lands in counterexamples.
struct ScanReport {
    long long total = 0;   // inputs seen (stream lines or generated graphs)
    long long scanned = 0; // connected regular graphs checked exactly
    long long skipped_not_connected = 0;
    long long skipped_not_regular = 0;
    long long skipped_no_edges = 0;
    long long complexity_one = 0;
    std::vector<ScanEntry> exceptions;      // c < 1, conjectured shape
    std::vector<ScanEntry> counterexamples; // c < 1, shape unexplained
    std::vector<std::string> parse_errors;  // "line N: message"
    double elapsed_sec = 0;                 // in-memory only; never serialized

    bool consistent() const { return counterexamples.empty(); }
};

// Scans a graph6 stream, one graph per line.  Blank lines and a leading
// ">>graph6<<" marker are ignored; parse failures are recorded per line and
// the scan continues.  jobs > 1 splits the complexity work over threads with
// a deterministic merge, so the report is identical for any job count.
ScanReport conjecture_scan(std::istream& in, int jobs = 1);

// Same scan over every labeled graph on 1..max_n vertices (max_n <= 7).
// No isomorphism reduction: property checks are isomorphism-invariant, so
// duplicates only cost time.
ScanReport conjecture_scan_builtin(int max_n, int jobs = 1);

} // namespace clut
