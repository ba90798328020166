#include "degenlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace degenlab {

PlaneCount::PlaneCount(Int m) : m_(m) {
    if (m < kMin || m > kMax) {
        throw Error(ErrorKind::InvalidPlaneCount,
                    "plane count must lie in [" + std::to_string(kMin) + ", " +
                        std::to_string(kMax) + "], got " + std::to_string(m));
    }
}

namespace {

std::vector<int> endpoints(const std::vector<Edge>& edges) {
    std::vector<int> out;
    out.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        out.push_back(e.i);
        out.push_back(e.j);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> checked_edges(PlaneCount m, std::span<const std::pair<int, int>> edge_list) {
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a < 1 || b < 1 || a > m.value() || b > m.value()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "edge " + std::to_string(a) + "-" + std::to_string(b) +
                            " has an index outside 1.." + std::to_string(m.value()));
        }
        if (a == b) {
            throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(a) + "-" +
                                                 std::to_string(b) + " is a loop");
        }
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(dup->i) + "-" +
                                                  std::to_string(dup->j) + " is repeated");
    }
    // Endpoints never exceed m once indices are in range; the check stays to
    // keep the vertex bound explicit.
    if (static_cast<Int>(endpoints(edges).size()) > m.value()) {
        throw Error(ErrorKind::TooManyVertices, "graph has more vertices than planes");
    }
    return edges;
}

}  // namespace

ArrangementGraph::ArrangementGraph(PlaneCount m, std::span<const std::pair<int, int>> edge_list)
    : ArrangementGraph(m, checked_edges(m, edge_list), Unchecked{}) {}

ArrangementGraph::ArrangementGraph(PlaneCount m, std::vector<Edge> sorted_edges, Unchecked)
    : m_(m), edges_(std::move(sorted_edges)), vertices_(endpoints(edges_)) {}

ArrangementGraph make_graph_unchecked(PlaneCount m, std::vector<Edge> sorted_edges) {
    return ArrangementGraph(m, std::move(sorted_edges), ArrangementGraph::Unchecked{});
}

bool ArrangementGraph::has_edge(int a, int b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

int ArrangementGraph::valence(int v) const {
    int n = 0;
    for (const auto& e : edges_) {
        if (e.i == v || e.j == v) ++n;
    }
    return n;
}

std::vector<int> ArrangementGraph::neighbours(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        if (e.i == v) out.push_back(e.j);
        else if (e.j == v) out.push_back(e.i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArrangementGraph validate_graph(std::span<const std::pair<int, int>> edge_list, PlaneCount m) {
    return ArrangementGraph(m, edge_list);
}

ArrangementGraph complement(const ArrangementGraph& g) {
    const Int m = g.m().value();
    if (m > kMaxMaterializedPlanes) {
        throw Error(ErrorKind::TooLarge, "complement of K_" + std::to_string(m) +
                                             " is too large to materialize");
    }
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(g.m().line_count() - g.edge_count()));
    auto it = g.edges().begin();
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            Edge e(i, j);
            if (it != g.edges().end() && *it == e) {
                ++it;
                continue;
            }
            out.push_back(e);
        }
    }
    return ArrangementGraph(g.m(), std::move(out), ArrangementGraph::Unchecked{});
}

Int AugmentedGraph::component_count() const {
    const auto n = static_cast<std::size_t>(m.value());
    std::vector<std::size_t> parent(n + 1);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    Int components = m.value();
    for (const auto& e : edges) {
        auto a = find(static_cast<std::size_t>(e.i));
        auto b = find(static_cast<std::size_t>(e.j));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

AugmentedGraph augmented_complement(const ArrangementGraph& g) {
    return AugmentedGraph{g.m(), complement(g).edges()};
}

bool is_irreducible_pair(const ArrangementGraph& g) {
    // Breadth-first search in the complement of Γ(D) inside K_m. Every test
    // of a still-unvisited vertex either visits it or is charged to an edge
    // of D, so the cost is O(m + d̄).
    const Int m = g.m().value();
    std::vector<std::vector<int>> blocked(static_cast<std::size_t>(m) + 1);
    for (const auto& e : g.edges()) {
        blocked[static_cast<std::size_t>(e.i)].push_back(e.j);
        blocked[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    for (auto& row : blocked) std::sort(row.begin(), row.end());

    std::vector<int> unvisited;
    unvisited.reserve(static_cast<std::size_t>(m));
    for (int v = 2; v <= m; ++v) unvisited.push_back(v);
    std::vector<int> queue{1};
    std::vector<int> keep;
    for (std::size_t head = 0; head < queue.size() && !unvisited.empty(); ++head) {
        const auto& row = blocked[static_cast<std::size_t>(queue[head])];
        keep.clear();
        for (int w : unvisited) {
            if (std::binary_search(row.begin(), row.end(), w)) {
                keep.push_back(w);
            } else {
                queue.push_back(w);
            }
        }
        unvisited.swap(keep);
    }
    return unvisited.empty();
}

std::vector<Triangle> triangles(const ArrangementGraph& g) {
    std::vector<Triangle> out;
    for (const auto& e : g.edges()) {
        // Each triangle {a<b<c} is found once, from its edge (a,b).
        for (int c : g.neighbours(e.j)) {
            if (c > e.j && g.has_edge(e.i, c)) {
                out.push_back({e.i, e.j, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Edge>> split_components(std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    std::map<int, int> parent;
    for (const auto& e : sorted) {
        parent.emplace(e.i, e.i);
        parent.emplace(e.j, e.j);
    }
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : sorted) parent[find(e.i)] = find(e.j);
    std::vector<std::vector<Edge>> groups;
    std::map<int, std::size_t> slot;
    for (const auto& e : sorted) {
        auto [it, fresh] = slot.emplace(find(e.i), groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(e);
    }
    return groups;
}

std::vector<std::vector<Edge>> connected_components(const ArrangementGraph& g) {
    return split_components(g.edges());
}

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
    throw Error(ErrorKind::ParseError, what, pos);
}

Int parse_int(std::string_view text, std::size_t offset) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        parse_fail(offset, "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

bool is_separator(char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';';
}

}  // namespace

EdgeListText parse_edge_list(std::string_view text) {
    EdgeListText out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (is_separator(c)) {
            ++pos;
            continue;
        }
        if (c == '#') {
            while (pos < text.size() && text[pos] != '\n') ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_separator(text[end]) && text[end] != '#') ++end;
        std::string_view token = text.substr(pos, end - pos);
        if (token.starts_with("m=")) {
            if (out.m) parse_fail(pos, "duplicate m= header");
            out.m = parse_int(token.substr(2), pos + 2);
        } else {
            auto dash = token.find('-', 1);
            if (dash == std::string_view::npos) {
                parse_fail(pos, "expected an edge 'i-j', got '" + std::string(token) + "'");
            }
            Int a = parse_int(token.substr(0, dash), pos);
            Int b = parse_int(token.substr(dash + 1), pos + dash + 1);
            if (a > PlaneCount::kMax || b > PlaneCount::kMax || a < -PlaneCount::kMax ||
                b < -PlaneCount::kMax) {
                parse_fail(pos, "plane index out of range");
            }
            out.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
        pos = end;
    }
    return out;
}

std::string format_edge_list(const ArrangementGraph& g) {
    std::string out = "m=" + std::to_string(g.m().value()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.i) + "-" + std::to_string(e.j) + "\n";
    }
    return out;
}

}  // namespace degenlab
