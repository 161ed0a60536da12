#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "clut/bounds.hpp"
#include "clut/clutter.hpp"
#include "clut/graph.hpp"
#include "clut/reductions.hpp"
#include "clut/scan.hpp"
#include "clut/setcover.hpp"
#include "clut/trees.hpp"

namespace clut {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, tsv, human };

// Accepts "json", "tsv", "human"; InputError otherwise.
OutputFormat output_format_from_name(const std::string& name);

// Text clutter format: a line with the ground-set size, then one edge per
// line as whitespace-separated vertex indices.  '#' starts a comment, blank
// lines are skipped.
Clutter read_clutter_text(std::istream& in);

// Text set-cover format: a line "n m", then exactly m lines each listing one
// set's elements (an empty line is an empty set).  '#' starts a comment
// before the header; after it, every line counts.
SetCoverInstance read_setcover_text(std::istream& in);

// One graph6 graph per line; blank lines and a leading ">>graph6<<" marker
// are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

Json to_json(const Rational& r);
Json to_json(const GraphStats& st);
Json to_json(const ComplexityReport& rep);
Json to_json(const MatchingReport& rep);
Json to_json(const BoundReport& rep);
Json to_json(const LemmaReport& rep);
Json to_json(const ReductionReport& rep);
Json to_json(const ScanReport& rep);
Json to_json(const TreeLabeling& lab);
Json to_json(const FullReport& rep);

// json: pretty-printed document.  tsv: one "path<TAB>value" line per scalar
// leaf, arrays indexed numerically.  human: indented key/value walk.  Every
// format ends with a newline.
std::string render(const Json& doc, OutputFormat fmt);

} // namespace clut
