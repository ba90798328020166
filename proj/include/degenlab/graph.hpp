#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degenlab/checked.hpp"

namespace degenlab {

// Number of planes of a general-position arrangement.
class PlaneCount {
public:
    static constexpr Int kMin = 3;
    static constexpr Int kMax = 1'000'000;

    explicit PlaneCount(Int m);

    Int value() const noexcept { return m_; }
    // Number of lines L_{i,j} of the full double curve, C(m,2).
    Int line_count() const { return checked::choose2(m_); }
    Int triple_point_count() const { return checked::choose3(m_); }

    friend bool operator==(PlaneCount, PlaneCount) = default;

private:
    Int m_;
};

// The double line L_{i,j} = P_i ∩ P_j, stored with i < j.
struct Edge {
    int i = 0;
    int j = 0;

    Edge() = default;
    Edge(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Triangle = std::array<int, 3>;

// Γ(D): the subgraph of K_m formed by the lines of D. Vertices are the
// plane indices that carry at least one line of D.
class ArrangementGraph {
public:
    // Validating constructor; see validate_graph for the error contract.
    ArrangementGraph(PlaneCount m, std::span<const std::pair<int, int>> edge_list);

    PlaneCount m() const noexcept { return m_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    Int edge_count() const noexcept { return static_cast<Int>(edges_.size()); }
    bool empty() const noexcept { return edges_.empty(); }

    const std::vector<int>& vertices() const noexcept { return vertices_; }
    Int vertex_count() const noexcept { return static_cast<Int>(vertices_.size()); }

    bool has_edge(int a, int b) const;
    int valence(int v) const;
    // Neighbours of v in increasing order; empty when v is not a vertex.
    std::vector<int> neighbours(int v) const;

    friend bool operator==(const ArrangementGraph&, const ArrangementGraph&) = default;

private:
    struct Unchecked {};
    ArrangementGraph(PlaneCount m, std::vector<Edge> sorted_edges, Unchecked);

    friend ArrangementGraph complement(const ArrangementGraph&);
    friend ArrangementGraph make_graph_unchecked(PlaneCount, std::vector<Edge>);

    PlaneCount m_;
    std::vector<Edge> edges_;
    std::vector<int> vertices_;
};

// Builds a graph from sorted, distinct, in-range edges without re-validating.
ArrangementGraph make_graph_unchecked(PlaneCount m, std::vector<Edge> sorted_edges);

ArrangementGraph validate_graph(std::span<const std::pair<int, int>> edge_list, PlaneCount m);

// Γ(R): lines of K_m not in D. Throws TooLarge past kMaxMaterializedPlanes.
ArrangementGraph complement(const ArrangementGraph& g);

inline constexpr Int kMaxMaterializedPlanes = 2000;

// Γ̄(R): every plane index 1..m is a vertex, isolated ones included.
struct AugmentedGraph {
    PlaneCount m;
    std::vector<Edge> edges;

    Int component_count() const;
    bool connected() const { return component_count() == 1; }
};

AugmentedGraph augmented_complement(const ArrangementGraph& g);

// Connectivity of Γ̄(R), computed without materializing the complement.
bool is_irreducible_pair(const ArrangementGraph& g);

std::vector<Triangle> triangles(const ArrangementGraph& g);

// Connected components as edge lists, ordered by smallest edge.
std::vector<std::vector<Edge>> split_components(std::span<const Edge> edges);
std::vector<std::vector<Edge>> connected_components(const ArrangementGraph& g);

// "i-j" text, comma- or newline-separated, '#' comments, optional "m=<int>".
struct EdgeListText {
    std::optional<Int> m;
    std::vector<std::pair<int, int>> edges;
};

EdgeListText parse_edge_list(std::string_view text);
std::string format_edge_list(const ArrangementGraph& g);

}  // namespace degenlab
