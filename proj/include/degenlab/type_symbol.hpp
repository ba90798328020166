#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

// Data of one connected component of Γ(D).
struct ComponentSymbol {
    // valences[k] = number of vertices of valence k+1; no trailing zeros.
    std::vector<Int> valences;
    Int edge_count = 0;
    Int triangle_count = 0;

    friend auto operator<=>(const ComponentSymbol&, const ComponentSymbol&) = default;
};

/**
 * Γ_{v1,v2,...}^{d̄,τ3} with one record per connected component.
 *
 * Components are kept sorted by (edge_count, triangle_count, valences), so
 * equality is multiset equality. Text form:
 *
 *   symbol    = component { component } | "()"
 *   component = "(" valences "|" edges "," triangles ")" [ "^" multiplicity ]
 *   valences  = int { "," int }
 *
 * "()" denotes the empty arrangement.
 */
struct TypeSymbol {
    std::vector<ComponentSymbol> components;

    bool empty() const noexcept { return components.empty(); }
    std::string to_string() const;

    friend bool operator==(const TypeSymbol&, const TypeSymbol&) = default;
};

TypeSymbol type_symbol(const ArrangementGraph& g);
TypeSymbol type_symbol(std::span<const Edge> edges);
ComponentSymbol component_symbol(std::span<const Edge> connected_edges);

// Throws ParseError carrying the byte offset of the first bad character.
TypeSymbol parse_type_symbol(std::string_view text);

}  // namespace degenlab
