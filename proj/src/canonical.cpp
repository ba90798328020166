#include "degenlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <tuple>

namespace degenlab {
namespace {

using EdgeCode = std::vector<std::pair<int, int>>;

// A connected graph on vertices 0..n-1 with bitmask adjacency.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    bool linked(int a, int b) const { return (adj[a] >> b) & 1U; }
};

// Replaces each colour by the rank of (colour, sorted neighbour colours)
// until the number of cells stops growing. Ranks keep the cell order of the
// input partition, so cells only ever split in place.
std::vector<int> refine(const SmallGraph& g, std::vector<int> colors) {
    int cells = *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            sig[v].first = colors[v];
            for (int w = 0; w < g.n; ++w) {
                if (g.linked(v, w)) sig[v].second.push_back(colors[w]);
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < g.n; ++v) {
            colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                         sorted.begin());
        }
        int now = static_cast<int>(sorted.size());
        if (now == cells) return colors;
        cells = now;
    }
}

std::vector<int> individualize(std::vector<int> colors, int v) {
    const int c = colors[v];
    for (int u = 0; u < static_cast<int>(colors.size()); ++u) {
        const bool rest_of_cell = colors[u] == c && u != v;
        colors[u] = 2 * colors[u] + (rest_of_cell ? 1 : 0);
    }
    // Re-rank to 0..k-1.
    auto ranks = colors;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (auto& x : colors) {
        x = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), x) - ranks.begin());
    }
    return colors;
}

bool twins(const SmallGraph& g, int a, int b) {
    const std::uint32_t mask = ~((1U << a) | (1U << b));
    return (g.adj[a] & mask) == (g.adj[b] & mask);
}

struct Search {
    const SmallGraph& g;
    EdgeCode best;
    bool have_best = false;
    Int automorphisms = 0;

    void leaf(const std::vector<int>& colors, Int weight) {
        EdgeCode code;
        for (int a = 0; a < g.n; ++a) {
            for (int b = a + 1; b < g.n; ++b) {
                if (g.linked(a, b)) {
                    code.emplace_back(std::min(colors[a], colors[b]), std::max(colors[a], colors[b]));
                }
            }
        }
        std::sort(code.begin(), code.end());
        if (!have_best || code < best) {
            best = std::move(code);
            have_best = true;
            automorphisms = weight;
        } else if (code == best) {
            automorphisms = checked::add(automorphisms, weight);
        }
    }

    void run(std::vector<int> colors, Int weight) {
        colors = refine(g, std::move(colors));
        std::vector<int> cell_size(static_cast<std::size_t>(g.n), 0);
        for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
        int target = -1;
        for (int c = 0; c < g.n; ++c) {
            if (cell_size[static_cast<std::size_t>(c)] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            leaf(colors, weight);
            return;
        }
        // Interchangeable twins lead to isomorphic subtrees: branch on one
        // representative per twin class and weight it by the class size.
        std::vector<int> cell;
        for (int v = 0; v < g.n; ++v) {
            if (colors[v] == target) cell.push_back(v);
        }
        std::vector<bool> done(cell.size(), false);
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (done[i]) continue;
            Int size = 0;
            for (std::size_t j = i; j < cell.size(); ++j) {
                if (!done[j] && (j == i || twins(g, cell[i], cell[j]))) {
                    done[j] = true;
                    ++size;
                }
            }
            run(individualize(colors, cell[i]), checked::mul(weight, size));
        }
    }
};

struct ComponentForm {
    int n = 0;
    EdgeCode code;
    Int automorphisms = 1;

    auto key() const { return std::tie(n, code); }
};

ComponentForm canonical_component(const std::vector<Edge>& edges) {
    std::vector<int> vs;
    for (const auto& e : edges) {
        vs.push_back(e.i);
        vs.push_back(e.j);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (static_cast<int>(vs.size()) > kExactCanonicalBound) {
        throw Error(ErrorKind::TooLarge, "component with " + std::to_string(vs.size()) +
                                             " vertices exceeds the exact canonical labeling bound of " +
                                             std::to_string(kExactCanonicalBound));
    }
    SmallGraph g;
    g.n = static_cast<int>(vs.size());
    g.adj.assign(vs.size(), 0);
    auto idx = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const auto& e : edges) {
        int a = idx(e.i), b = idx(e.j);
        g.adj[a] |= 1U << b;
        g.adj[b] |= 1U << a;
    }

    // Initial cells: (valence, number of triangles through the vertex).
    std::vector<std::pair<int, int>> invariant(vs.size());
    for (int v = 0; v < g.n; ++v) {
        int tri = 0;
        for (int a = 0; a < g.n; ++a) {
            for (int b = a + 1; b < g.n; ++b) {
                if (g.linked(v, a) && g.linked(v, b) && g.linked(a, b)) ++tri;
            }
        }
        invariant[v] = {std::popcount(g.adj[v]), tri};
    }
    auto ranks = invariant;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    std::vector<int> colors(vs.size());
    for (int v = 0; v < g.n; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), invariant[v]) -
                                     ranks.begin());
    }

    Search search{g, {}, false, 0};
    search.run(std::move(colors), 1);
    return ComponentForm{g.n, std::move(search.best), search.automorphisms};
}

std::string render(int n, const std::vector<Edge>& edges) {
    std::string out = "v" + std::to_string(n) + ":";
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(edges[k].i) + "-" + std::to_string(edges[k].j);
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(std::span<const Edge> edges) {
    std::vector<ComponentForm> parts;
    for (const auto& group : split_components(edges)) parts.push_back(canonical_component(group));
    std::sort(parts.begin(), parts.end(),
              [](const ComponentForm& a, const ComponentForm& b) { return a.key() < b.key(); });

    CanonicalForm out;
    Int run = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = parts[k];
        for (const auto& [a, b] : p.code) {
            out.edges.emplace_back(out.vertex_count + a + 1, out.vertex_count + b + 1);
        }
        out.vertex_count += p.n;
        out.automorphism_count = checked::mul(out.automorphism_count, p.automorphisms);
        // Identical components may be permuted among themselves.
        run = (k > 0 && parts[k - 1].key() == p.key()) ? run + 1 : 1;
        out.automorphism_count = checked::mul(out.automorphism_count, run);
    }
    out.certificate = render(out.vertex_count, out.edges);
    return out;
}

CanonicalForm canonical_form(const ArrangementGraph& g) {
    return canonical_form(std::span<const Edge>(g.edges()));
}

std::vector<Edge> decode_certificate(std::string_view text) {
    auto fail = [](std::size_t pos, const std::string& what) -> Error {
        return Error(ErrorKind::ParseError, "certificate: " + what, pos);
    };
    auto read_int = [&](std::size_t& pos) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos) throw fail(pos, "expected an integer");
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    std::size_t pos = 0;
    if (text.empty() || text[0] != 'v') throw fail(0, "expected 'v'");
    ++pos;
    const int n = read_int(pos);
    if (pos >= text.size() || text[pos] != ':') throw fail(pos, "expected ':'");
    ++pos;
    std::vector<Edge> edges;
    while (pos < text.size()) {
        if (!edges.empty()) {
            if (text[pos] != ',') throw fail(pos, "expected ','");
            ++pos;
        }
        const std::size_t at = pos;
        int a = read_int(pos);
        if (pos >= text.size() || text[pos] != '-') throw fail(pos, "expected '-'");
        ++pos;
        int b = read_int(pos);
        if (a < 1 || b < 1 || a > n || b > n || a == b) throw fail(at, "edge label out of range");
        edges.emplace_back(a, b);
    }
    return edges;
}

}  // namespace degenlab
