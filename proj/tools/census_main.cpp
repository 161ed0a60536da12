#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clut/census.hpp"
#include "clut/errors.hpp"
#include "clut/graph.hpp"

using namespace clut;

int main(int argc, char** argv) {
    CLI::App app{"Isomorphism-free graph and tree censuses, one graph6 line per class"};

    int graphs_n = 0;
    int trees_n = 0;
    bool connected = false;
    bool regular = false;
    bool count_only = false;
    CLI::Option* graphs_opt =
        app.add_option("--graphs", graphs_n, "all graphs on N vertices (N <= 9; regular: N <= 10)");
    CLI::Option* trees_opt = app.add_option("--trees", trees_n, "all trees on N vertices (N <= 16)");
    graphs_opt->excludes(trees_opt);
    app.add_flag("--connected", connected, "connected graphs only");
    app.add_flag("--regular", regular, "regular graphs only (implies --connected)");
    app.add_flag("--count-only", count_only, "print the class count instead of the graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if ((graphs_n > 0) == (trees_n > 0))
            throw InputError("pass exactly one of --graphs N or --trees N");
        if (trees_n > 0) {
            const auto trees = all_trees(trees_n);
            if (count_only) {
                std::cout << trees.size() << "\n";
                return 0;
            }
            for (const Graph& t : trees) std::cout << to_graph6(t) << "\n";
            return 0;
        }
        std::vector<SmallGraph> out;
        if (regular) {
            out = connected_regular_graphs(graphs_n);
        } else if (connected) {
            out = connected_graphs(graphs_n);
        } else {
            out = all_graphs(graphs_n);
        }
        if (count_only) {
            std::cout << out.size() << "\n";
            return 0;
        }
        for (const SmallGraph& sg : out) std::cout << to_graph6(small_to_graph(sg)) << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
