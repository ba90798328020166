#pragma once

// Graphs that recur across the tests, on planes 1..5 unless noted.

#include <utility>
#include <vector>

namespace fixtures {

using EdgeList = std::vector<std::pair<int, int>>;

// The seven graphs that are not 5-limit.
inline const EdgeList k4 = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
// Two triangles sharing edge 1-3, plus a pendant 2-5: Γ_{1,1,3}^{6,2}.
inline const EdgeList g113 = {{1, 3}, {1, 2}, {2, 3}, {1, 4}, {3, 4}, {2, 5}};
// Triangle 1-2-3 with a tail 3-4-5: Γ_{1,3,1}^{5,1}.
inline const EdgeList g131 = {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {1, 2}};
// Fork: leaves 1, 2 on 3, then 3-4-5: Γ_{3,1,1}^{4,0}.
inline const EdgeList g311 = {{1, 3}, {2, 3}, {3, 4}, {4, 5}};
// Triangle with a pendant: Γ_{1,2,1}^{4,1}.
inline const EdgeList g121 = {{1, 2}, {1, 3}, {2, 3}, {3, 4}};
// Star K_{1,3}: Γ_{3,0,1}^{3,0}.
inline const EdgeList g301 = {{1, 2}, {1, 3}, {1, 4}};
// 2-chain plus a disjoint edge: Γ_{(2)(2,1)}^{(1,0)(2,0)}.
inline const EdgeList g2_21 = {{1, 2}, {2, 3}, {4, 5}};

inline const std::vector<EdgeList> not_5_limit = {k4, g113, g131, g311, g121, g301, g2_21};

inline const EdgeList c4 = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
inline const EdgeList chain3 = {{1, 2}, {2, 3}, {3, 4}};
inline const EdgeList two_chains = {{1, 2}, {2, 3}, {4, 5}, {5, 6}};
inline const EdgeList chain3_plus_edge = {{1, 2}, {2, 3}, {3, 4}, {5, 6}};

}  // namespace fixtures
