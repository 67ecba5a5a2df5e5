#pragma once

#include <string>
#include <vector>

namespace mirror {

// Connected stable graph with ordered ordinary leaves and unordered dilaton leaves.
// Bare graphs carry no markings, heights or dilaton leaves.
struct StableGraph {
    struct Edge {
        int a = 0, b = 0;
        // Heights of the half-edges at a and at b.
        int ka = 0, kb = 0;
    };
    std::vector<int> genus;
    std::vector<int> sigma;
    std::vector<Edge> edges;
    std::vector<int> leg_vertex;
    std::vector<int> leg_height;
    std::vector<std::vector<int>> dilatons;
    long automorphisms = 1;

    int vertex_count() const { return static_cast<int>(genus.size()); }
    int total_genus() const;
    // Number of half-edges at v: edge ends, ordinary leaves and dilaton leaves.
    int valence(int v) const;
    std::string to_string() const;
};

// Lexicographically smallest encoding over vertex relabelings.
std::vector<int> canonical_form(const StableGraph& g);
// |Aut| with ordinary leaves fixed: vertex relabelings, parallel edges, loop flips, dilaton leaves.
long count_automorphisms(const StableGraph& g);

// Bare stable graphs of genus g with n leaves, up to isomorphism.
std::vector<StableGraph> enumerate_bare_graphs(int g, int n);

// Decorated graphs: marking in {0..markings-1} per vertex, dilaton leaves of height >= 2 and
// heights with sum 3 g(v) - 3 + val(v) at every vertex, up to isomorphism.
std::vector<StableGraph> enumerate_stable_graphs(int g, int n, int markings);

}  // namespace mirror
