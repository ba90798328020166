#include "degenlab/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>

namespace degenlab {
namespace {

std::vector<Edge> all_lines(Int m) {
    std::vector<Edge> out;
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
    }
    return out;
}

std::vector<Edge> edges_of_mask(const std::vector<Edge>& lines, std::uint32_t mask) {
    std::vector<Edge> out;
    for (std::size_t b = 0; b < lines.size(); ++b) {
        if ((mask >> b) & 1U) out.push_back(lines[b]);
    }
    return out;
}

using ClassMap = std::map<std::string, std::uint32_t>;

// Keeps the smaller mask per certificate, so merging is order independent.
void merge_into(ClassMap& into, const ClassMap& from) {
    for (const auto& [cert, mask] : from) {
        auto [it, fresh] = into.emplace(cert, mask);
        if (!fresh && mask < it->second) it->second = mask;
    }
}

GraphClass make_class(CanonicalForm form) {
    GraphClass out;
    const Int m = std::max<Int>(PlaneCount::kMin, form.vertex_count);
    const ArrangementGraph g = make_graph_unchecked(PlaneCount(m), form.edges);
    const PairType pt = pair_type(g);
    out.symbol = type_symbol(g);
    out.edge_count = pt.dbar;
    out.k = pt.k;
    out.tau2 = pt.tau2;
    out.tau3 = pt.tau3;
    out.form = std::move(form);
    return out;
}

// Parts p_1 >= p_2 >= ... >= 1 with Σ p = total and Σ C(p+1, 2) = pairs,
// i.e. the non-leaf valences minus one of a tree.
std::optional<std::vector<Int>> tree_parts(Int total, Int pairs) {
    if (total < 0 || pairs < 0) return std::nullopt;
    if (total == 0) {
        if (pairs != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    // last[s][q] != 0 iff some multiset of parts sums to s with
    // Σ C(p+1,2) = q; it holds one part that gets there.
    const Int max_pairs = checked::choose2(total + 1);
    if (pairs > max_pairs) return std::nullopt;
    const auto S = static_cast<std::size_t>(total) + 1;
    const auto Q = static_cast<std::size_t>(pairs) + 1;
    std::vector<std::vector<std::int16_t>> last(S, std::vector<std::int16_t>(Q, 0));
    last[0][0] = -1;
    for (Int p = 1; p <= total; ++p) {
        const Int cost = checked::choose2(p + 1);
        for (Int s = p; s <= total; ++s) {
            for (Int q = cost; q <= pairs; ++q) {
                auto& cell = last[static_cast<std::size_t>(s)][static_cast<std::size_t>(q)];
                if (cell == 0 &&
                    last[static_cast<std::size_t>(s - p)][static_cast<std::size_t>(q - cost)] != 0) {
                    cell = static_cast<std::int16_t>(p);
                }
            }
        }
    }
    if (last[S - 1][Q - 1] == 0) return std::nullopt;
    std::vector<Int> parts;
    Int s = total, q = pairs;
    while (s > 0) {
        const Int p = last[static_cast<std::size_t>(s)][static_cast<std::size_t>(q)];
        parts.push_back(p);
        s -= p;
        q -= checked::choose2(p + 1);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

// Caterpillar: inner vertices with the given valences on a spine, leaves
// hung wherever valence is missing.
std::vector<Edge> caterpillar(const std::vector<Int>& inner_valences) {
    std::vector<Edge> out;
    const int spine = static_cast<int>(inner_valences.size());
    int next = spine + 1;
    for (int v = 1; v <= spine; ++v) {
        Int used = 0;
        if (v > 1) ++used;
        if (v < spine) {
            out.emplace_back(v, v + 1);
            ++used;
        }
        for (; used < inner_valences[static_cast<std::size_t>(v - 1)]; ++used) {
            out.emplace_back(v, next++);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ArrangementGraph> exhaustive_search(const PairType& target) {
    const PlaneCount m(target.m);
    if (target.dbar == 0) {
        ArrangementGraph empty = make_graph_unchecked(m, {});
        if (pair_type(empty) == target && is_irreducible_pair(empty)) return empty;
        return std::nullopt;
    }
    for (const auto& c : enumerate_graphs_up_to(static_cast<int>(target.dbar))) {
        if (c.edge_count != target.dbar || c.vertex_count() > target.m) continue;
        if (c.pair_type_at(target.m) != target) continue;
        ArrangementGraph g = c.embed(m);
        if (is_irreducible_pair(g)) return g;
    }
    return std::nullopt;
}

std::optional<ArrangementGraph> constructive_search(const PairType& target) {
    const PlaneCount m(target.m);
    if (target.dbar > kMaxConstructiveDegree) {
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "d̄ = " + std::to_string(target.dbar) + " exceeds the tree generator bound " +
                        std::to_string(kMaxConstructiveDegree));
    }
    if (target.dbar + 1 > target.m) {
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "a tree with " + std::to_string(target.dbar) + " edges does not fit on " +
                        std::to_string(target.m) + " planes and no other search applies");
    }
    // A tree has valence sum 2 d̄ over d̄ + 1 vertices, so Σ (v - 1) = d̄ - 1.
    const auto parts = tree_parts(target.dbar - 1, target.tau2);
    if (parts) {
        std::vector<Int> valences;
        for (Int p : *parts) valences.push_back(p + 1);
        ArrangementGraph g = make_graph_unchecked(m, caterpillar(valences));
        if (pair_type(g) != target) {
            throw Error(ErrorKind::InternalInconsistency, "tree generator built the wrong type");
        }
        if (is_irreducible_pair(g)) return g;
    }
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "no tree realizes this type and graphs with cycles are not searched for d̄ > " +
                    std::to_string(kMaxCatalogEdges));
}

}  // namespace

std::vector<CatalogEntry> enumerate_arrangements(PlaneCount m, unsigned threads) {
    if (m.value() > kMaxExhaustivePlanes) {
        throw Error(ErrorKind::TooLarge, "exhaustive enumeration is limited to m <= " +
                                             std::to_string(kMaxExhaustivePlanes));
    }
    const auto lines = all_lines(m.value());
    const std::uint32_t total = std::uint32_t{1} << lines.size();
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, total);

    std::vector<ClassMap> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{total} * t / threads);
            const std::uint32_t hi =
                static_cast<std::uint32_t>(std::uint64_t{total} * (t + 1) / threads);
            for (std::uint32_t mask = lo; mask < hi; ++mask) {
                auto cert = canonical_form(edges_of_mask(lines, mask)).certificate;
                partial[t].emplace(std::move(cert), mask);
            }
        });
    }
    for (auto& th : pool) th.join();
    ClassMap merged;
    for (const auto& p : partial) merge_into(merged, p);

    std::vector<CatalogEntry> out;
    out.reserve(merged.size());
    for (const auto& [cert, mask] : merged) {
        ArrangementGraph g = make_graph_unchecked(m, edges_of_mask(lines, mask));
        const bool irreducible = is_irreducible_pair(g);
        out.push_back(CatalogEntry{canonical_form(g), std::move(g), irreducible});
    }
    return out;
}

ArrangementGraph GraphClass::embed(PlaneCount m) const {
    if (form.vertex_count > m.value()) {
        throw Error(ErrorKind::TooManyVertices, "graph has " + std::to_string(form.vertex_count) +
                                                    " vertices but m = " +
                                                    std::to_string(m.value()));
    }
    return make_graph_unchecked(m, form.edges);
}

std::vector<GraphClass> enumerate_graphs_up_to(int max_edges) {
    if (max_edges > kMaxCatalogEdges) {
        throw Error(ErrorKind::TooLarge, "graph catalog is limited to " +
                                             std::to_string(kMaxCatalogEdges) + " edges");
    }
    std::vector<GraphClass> out;
    if (max_edges < 1) return out;

    // Every graph with e + 1 edges arises from one with e edges by adding an
    // edge between old vertices, from an old vertex to a new one, or between
    // two new ones.
    std::map<std::string, CanonicalForm> level;
    {
        const Edge single(1, 2);
        auto f = canonical_form(std::span<const Edge>(&single, 1));
        level.emplace(f.certificate, f);
    }
    for (int e = 1;; ++e) {
        for (const auto& [cert, form] : level) out.push_back(make_class(form));
        if (e == max_edges) break;
        std::map<std::string, CanonicalForm> next;
        for (const auto& [cert, form] : level) {
            const int n = form.vertex_count;
            for (int a = 1; a <= n + 1; ++a) {
                for (int b = a + 1; b <= n + 2; ++b) {
                    if (a > n && b != n + 2) continue;
                    if (b == n + 2 && a <= n) continue;
                    const Edge add(a, b);
                    if (std::binary_search(form.edges.begin(), form.edges.end(), add)) continue;
                    std::vector<Edge> grown = form.edges;
                    grown.insert(std::upper_bound(grown.begin(), grown.end(), add), add);
                    auto f = canonical_form(grown);
                    next.try_emplace(f.certificate, std::move(f));
                }
            }
        }
        level.swap(next);
    }
    return out;
}

std::optional<ArrangementGraph> exists_pair_of_type(const PairType& target) {
    validate(target);
    if (target.dbar <= kMaxCatalogEdges) return exhaustive_search(target);
    if (target.tau3 == 0 && target.k == 1) return constructive_search(target);
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "d̄ = " + std::to_string(target.dbar) +
                    " is past the exhaustive bound and the type is not a tree type");
}

ArrangementGraph build_fig4_graph() {
    // Planes 1..11: leaves of hub 12. 13..16: path to hub 17.
    // 18..28: leaves of hub 17. 29, 30, 31: pendants on 13, 14, 15.
    std::vector<Edge> edges;
    for (int leaf = 1; leaf <= 11; ++leaf) edges.emplace_back(leaf, 12);
    for (int v = 12; v < 17; ++v) edges.emplace_back(v, v + 1);
    for (int leaf = 18; leaf <= 28; ++leaf) edges.emplace_back(17, leaf);
    edges.emplace_back(13, 29);
    edges.emplace_back(14, 30);
    edges.emplace_back(15, 31);
    std::sort(edges.begin(), edges.end());
    return make_graph_unchecked(PlaneCount(31), std::move(edges));
}

std::vector<CanonicalForm> graphs_with_symbol(const TypeSymbol& symbol) {
    // Group equal components: a component of multiplicity r contributes a
    // multiset of r connected classes.
    std::vector<std::pair<ComponentSymbol, std::size_t>> runs;
    for (const auto& c : symbol.components) {
        if (c.edge_count > kMaxCatalogEdges) {
            throw Error(ErrorKind::TooLarge, "symbol components are limited to " +
                                                 std::to_string(kMaxCatalogEdges) + " edges");
        }
        if (!runs.empty() && runs.back().first == c) {
            ++runs.back().second;
        } else {
            runs.emplace_back(c, 1);
        }
    }
    Int largest = 0;
    for (const auto& [c, r] : runs) largest = std::max(largest, c.edge_count);
    const auto catalog = enumerate_graphs_up_to(static_cast<int>(largest));

    std::vector<std::vector<const GraphClass*>> choices;
    for (const auto& [c, r] : runs) {
        auto& list = choices.emplace_back();
        for (const auto& g : catalog) {
            if (g.symbol.components.size() == 1 && g.symbol.components.front() == c) {
                list.push_back(&g);
            }
        }
        if (list.empty()) return {};
    }

    std::map<std::string, CanonicalForm> found;
    std::vector<Edge> edges;
    // Depth-first over runs; within a run, choices are non-decreasing.
    auto place = [&](auto&& self, std::size_t run, std::size_t copies, std::size_t from,
                     int offset) -> void {
        if (run == runs.size()) {
            auto f = canonical_form(edges);
            found.try_emplace(f.certificate, std::move(f));
            return;
        }
        if (copies == runs[run].second) {
            self(self, run + 1, 0, 0, offset);
            return;
        }
        for (std::size_t pick = from; pick < choices[run].size(); ++pick) {
            const auto& form = choices[run][pick]->form;
            const auto mark = edges.size();
            for (const auto& e : form.edges) edges.emplace_back(e.i + offset, e.j + offset);
            self(self, run, copies + 1, pick, offset + form.vertex_count);
            edges.resize(mark);
        }
    };
    place(place, 0, 0, 0, 0);

    std::vector<CanonicalForm> out;
    for (auto& [cert, form] : found) out.push_back(std::move(form));
    return out;
}

ArrangementGraph graph_from_symbol(const TypeSymbol& symbol, PlaneCount m) {
    const auto matches = graphs_with_symbol(symbol);
    if (matches.empty()) {
        throw Error(ErrorKind::NoMatchingGraph, "no graph has type symbol " + symbol.to_string());
    }
    if (matches.size() > 1) {
        std::string list;
        for (const auto& f : matches) list += "\n  " + f.certificate;
        throw Error(ErrorKind::AmbiguousSymbol,
                    std::to_string(matches.size()) + " graphs have type symbol " +
                        symbol.to_string() + "; give edges instead:" + list);
    }
    if (matches.front().vertex_count > m.value()) {
        throw Error(ErrorKind::TooManyVertices,
                    "graph has " + std::to_string(matches.front().vertex_count) +
                        " vertices but m = " + std::to_string(m.value()));
    }
    auto edges = matches.front().edges;
    std::sort(edges.begin(), edges.end());
    return make_graph_unchecked(m, std::move(edges));
}

std::vector<TypeCollision> find_type_collisions(int max_edges, PlaneCount m) {
    std::map<PairType, std::vector<std::string>> groups;
    for (const auto& c : enumerate_graphs_up_to(max_edges)) {
        if (c.vertex_count() > m.value()) continue;
        groups[c.pair_type_at(m.value())].push_back(c.form.certificate);
    }
    std::vector<TypeCollision> out;
    for (auto& [type, certs] : groups) {
        if (certs.size() < 2) continue;
        std::sort(certs.begin(), certs.end());
        out.push_back({type, std::move(certs)});
    }
    return out;
}

}  // namespace degenlab
