#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degenlab/canonical.hpp"
#include "degenlab/invariants.hpp"
#include "degenlab/type_symbol.hpp"

namespace degenlab {

inline constexpr Int kMaxExhaustivePlanes = 6;
inline constexpr int kMaxCatalogEdges = 8;
// Largest d̄ for which the tree generator of exists_pair_of_type runs.
inline constexpr Int kMaxConstructiveDegree = 64;

struct CatalogEntry {
    CanonicalForm form;
    ArrangementGraph graph;
    bool irreducible = false;
};

// One entry per isomorphism class of edge subsets of K_m, ∅ included,
// sorted by certificate. The representative is the class member whose
// edge bitmask is smallest. Throws TooLarge for m > 6.
std::vector<CatalogEntry> enumerate_arrangements(PlaneCount m, unsigned threads = 0);

// An abstract graph without isolated vertices. Its pair type at degree m is
// (m, edge_count, k, tau2, tau3).
struct GraphClass {
    CanonicalForm form;
    TypeSymbol symbol;
    Int edge_count = 0;
    Int k = 0;
    Int tau2 = 0;
    Int tau3 = 0;

    int vertex_count() const { return form.vertex_count; }
    PairType pair_type_at(Int m) const { return PairType{m, edge_count, k, tau2, tau3}; }
    // The graph placed on planes 1..vertex_count of an arrangement of m planes.
    ArrangementGraph embed(PlaneCount m) const;
};

// All nonempty classes with at most max_edges edges, sorted by
// (edge count, certificate). Throws TooLarge past kMaxCatalogEdges.
std::vector<GraphClass> enumerate_graphs_up_to(int max_edges);

// An irreducible pair of the given type, or nothing when exhaustive search
// shows there is none. Exhaustive for d̄ <= 8: a graph with d̄ edges and no
// isolated vertex has at most 2 d̄ vertices, so the catalog covers every
// graph that fits on min(2 d̄, m) planes. For larger d̄ with τ3 = 0 and
// k = 1 a tree with the right valences is built. Anything else throws
// SearchSpaceTooLarge.
std::optional<ArrangementGraph> exists_pair_of_type(const PairType& target);

// Two hubs of valence 12 joined by a path of length five whose first three
// inner vertices carry one pendant leaf each; every hub has 11 leaves.
ArrangementGraph build_fig4_graph();

// Every class (up to isomorphism) whose type symbol is the given one. Each
// component must have at most kMaxCatalogEdges edges (TooLarge otherwise).
std::vector<CanonicalForm> graphs_with_symbol(const TypeSymbol& symbol);

// The unique graph with this symbol placed on planes 1..n of m planes.
// Throws NoMatchingGraph, or AmbiguousSymbol listing the certificates.
ArrangementGraph graph_from_symbol(const TypeSymbol& symbol, PlaneCount m);

struct TypeCollision {
    PairType type;
    std::vector<std::string> certificates;
};

// Pair types at degree m shared by several classes with <= max_edges edges
// that fit on m planes. Sorted by type.
std::vector<TypeCollision> find_type_collisions(int max_edges, PlaneCount m);

}  // namespace degenlab
