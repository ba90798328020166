#include "degenlab/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace degenlab {

using checked::add;
using checked::choose2;
using checked::mul;
using checked::sub;

namespace {

void require_nonnegative(Int value, const char* name) {
    if (value < 0) {
        throw Error(ErrorKind::NegativeCount,
                    std::string(name) + " = " + std::to_string(value) + " is negative");
    }
}

void require_equal(Int a, Int b, const std::string& what) {
    if (a != b) {
        throw Error(ErrorKind::InternalInconsistency,
                    what + ": " + std::to_string(a) + " != " + std::to_string(b));
    }
}

Int valence_pairs(const ArrangementGraph& g) {
    std::map<int, Int> valence;
    for (const auto& e : g.edges()) {
        ++valence[e.i];
        ++valence[e.j];
    }
    Int sum = 0;
    for (const auto& [v, n] : valence) sum = add(sum, choose2(n));
    return sum;
}

// τ2 by the valence formula: every pair of edges at a vertex is a τ2 point
// unless it is one of the three corners of a triangle.
Int tau2_of(const ArrangementGraph& g, Int tau3) { return sub(valence_pairs(g), mul(3, tau3)); }

}  // namespace

Int ComponentData::total_genus() const {
    Int sum = 0;
    for (const auto& c : classes) sum = add(sum, c.genus);
    return sum;
}

Int remainder_degree(Int m, Int dbar) { return sub(choose2(m), dbar); }

void validate(const PairType& pt) {
    PlaneCount m(pt.m);
    if (pt.dbar < 0 || pt.k < 0 || pt.tau2 < 0 || pt.tau3 < 0) {
        throw Error(ErrorKind::InvalidType, "pair type fields must be nonnegative");
    }
    if (pt.dbar > m.line_count()) {
        throw Error(ErrorKind::InvalidType, "d̄ = " + std::to_string(pt.dbar) + " exceeds C(m,2) = " +
                                                std::to_string(m.line_count()));
    }
}

TauProfile tau_profile_of(const PairType& pt) {
    validate(pt);
    const Int m = pt.m;
    TauProfile t;
    t.tau3 = pt.tau3;
    t.tau2 = pt.tau2;
    t.tau1 = sub(sub(mul(m - 2, pt.dbar), mul(2, pt.tau2)), mul(3, pt.tau3));
    t.tau0 = sub(checked::choose3(m), add(add(t.tau1, t.tau2), t.tau3));
    require_nonnegative(t.tau1, "tau1");
    require_nonnegative(t.tau0, "tau0");

    const Int d = remainder_degree(m, pt.dbar);
    require_equal(add(add(t.tau2, mul(2, t.tau1)), mul(3, t.tau0)), mul(m - 2, d),
                  "tau2 + 2 tau1 + 3 tau0 vs (m-2) d");
    return t;
}

NuProfile nu_profile_of(const PairType& pt) {
    const TauProfile t = tau_profile_of(pt);
    const Int m = pt.m;
    const Int d = remainder_degree(m, pt.dbar);
    // ν = C(m,2) C(m-2,2) / 2: unordered pairs of skew lines.
    const Int nu = mul(choose2(m), choose2(m - 2)) / 2;
    NuProfile out;
    out.nu2 = sub(sub(choose2(pt.dbar), t.tau2), mul(3, t.tau3));
    out.nu0 = sub(sub(choose2(d), t.tau1), mul(3, t.tau0));
    out.nu1 = sub(sub(nu, out.nu0), out.nu2);
    require_nonnegative(out.nu0, "nu0");
    require_nonnegative(out.nu1, "nu1");
    require_nonnegative(out.nu2, "nu2");
    return out;
}

SurfaceType surface_type_of(const PairType& pt) {
    validate(pt);
    SurfaceType st{pt.m, pt.dbar, pt.k, add(sub(pt.tau2, pt.dbar), pt.k), pt.tau3};
    if (st.gbar < 0) {
        throw Error(ErrorKind::NegativeGenus,
                    "ḡ = τ2 - d̄ + k = " + std::to_string(st.gbar) + " is negative");
    }
    return st;
}

PairType pair_type_of(const SurfaceType& st) {
    PairType pt{st.m, st.dbar, st.k, sub(add(st.dbar, st.gbar), st.k), st.t};
    validate(pt);
    return pt;
}

SurfaceInvariants surface_invariants_of(const PairType& pt) {
    const TauProfile t = tau_profile_of(pt);
    const Int m = pt.m;
    const Int dbar = pt.dbar;
    const Int m4 = m - 4;

    const Int k2_direct = add(add(sub(mul(m, mul(m4, m4)), mul(5 * m - 20, dbar)), mul(4, t.tau2)),
                              mul(9, t.tau3));
    const Int k2_tau = sub(sub(sub(add(mul(m, mul(m4, m4)), mul(10, dbar)), mul(5, t.tau1)),
                               mul(6, t.tau2)),
                           mul(6, t.tau3));
    require_equal(k2_direct, k2_tau, "K^2 by d̄,τ2,τ3 vs by τ1,τ2,τ3");

    const Int e_base = add(mul(mul(m, m), m4), mul(6, m));
    const Int e_direct =
        add(add(sub(e_base, mul(7 * m - 16, dbar)), mul(8, t.tau2)), mul(15, t.tau3));
    const Int e_tau =
        sub(sub(sub(add(e_base, mul(2, dbar)), mul(7, t.tau1)), mul(6, t.tau2)), mul(6, t.tau3));
    require_equal(e_direct, e_tau, "e by d̄,τ2,τ3 vs by τ1,τ2,τ3");

    SurfaceInvariants out;
    out.K2 = k2_direct;
    out.euler = e_direct;
    out.chi = sub(add(dbar, t.tau0), mul(m, m - 3) / 2);
    out.omega = mul(2, t.tau1);

    // χ again from the surface-type formula with ḡ - k = τ2 - d̄, t = τ3.
    const Int chi_eul =
        add(add(sub(mul(m, m * m - 6 * m + 11) / 6, mul(m4, dbar)), sub(t.tau2, dbar)),
            mul(2, t.tau3));
    require_equal(out.chi, chi_eul, "χ by τ0 vs by ḡ, t");
    require_equal(add(out.K2, out.euler), mul(12, out.chi), "Noether K^2 + e = 12 χ");
    const Int omega_w = sub(sub(mul(mul(2, dbar), m4), mul(6, t.tau3)), mul(4, sub(t.tau2, dbar)));
    require_equal(out.omega, omega_w, "ω = 2 τ1 vs ω from d̄, ḡ, t");
    return out;
}

SurfaceInvariants surface_invariants_of(const SurfaceType& st) {
    const Int m = st.m;
    const Int m4 = m - 4;
    const Int gk = sub(st.gbar, st.k);
    SurfaceInvariants out;
    out.K2 = add(add(sub(mul(m, mul(m4, m4)), mul(5 * m - 24, st.dbar)), mul(4, gk)), mul(9, st.t));
    out.euler = add(add(sub(add(mul(mul(m, m), m4), mul(6, m)), mul(7 * m - 24, st.dbar)), mul(8, gk)),
                    mul(15, st.t));
    out.chi = add(add(sub(mul(m, m * m - 6 * m + 11) / 6, mul(m4, st.dbar)), gk), mul(2, st.t));
    out.omega = sub(sub(mul(mul(2, st.dbar), m4), mul(6, st.t)), mul(4, gk));
    return out;
}

ProjectionData projection_data_of(const PairType& pt, bool irreducible) {
    const TauProfile t = tau_profile_of(pt);
    const NuProfile nu = nu_profile_of(pt);
    const Int d = remainder_degree(pt.m, pt.dbar);
    ProjectionData out;
    out.degB = mul(2, d);
    out.g = add(sub(add(mul(6, t.tau0), t.tau1), d), 1);
    out.c = add(mul(6, t.tau0), mul(3, t.tau1));
    out.n = mul(4, nu.nu0);
    require_equal(mul(out.degB, out.degB - 3) / 2, add(add(out.g - 1, out.c), out.n),
                  "branch curve genus formula");
    if (irreducible && out.g < 0) {
        throw Error(ErrorKind::NegativeGenus, "branch curve genus g = " + std::to_string(out.g) +
                                                  " is negative for an irreducible pair");
    }
    return out;
}

DualData dual_plucker(const ProjectionData& pd) {
    DualData out;
    out.deg_dual = sub(sub(mul(pd.degB, pd.degB - 1), mul(2, pd.n)), mul(3, pd.c));
    out.c_dual = add(sub(mul(3, out.deg_dual), mul(3, pd.degB)), pd.c);
    out.n_dual = sub(sub(mul(out.deg_dual - 1, out.deg_dual - 2) / 2, pd.g), out.c_dual);
    require_equal(sub(mul(3, pd.degB), pd.c), sub(mul(3, out.deg_dual), out.c_dual),
                  "Plücker reciprocity");
    return out;
}

ComponentData double_curve_classes(const ArrangementGraph& g) {
    const auto& edges = g.edges();
    const std::size_t n = edges.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](int a, int b) {
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge(a, b)) -
                                        edges.begin());
    };

    // Incident edges per vertex.
    std::map<int, std::vector<int>> adj;
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    struct Corner {
        std::size_t a, b;
    };
    std::vector<Corner> open_corners;
    for (auto& [v, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        for (std::size_t x = 0; x < nbrs.size(); ++x) {
            for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
                if (g.has_edge(nbrs[x], nbrs[y])) continue;
                const auto a = index_of(v, nbrs[x]);
                const auto b = index_of(v, nbrs[y]);
                open_corners.push_back({a, b});
                parent[find(a)] = find(b);
            }
        }
    }

    ComponentData out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t e = 0; e < n; ++e) {
        const auto root = find(e);
        if (slot[root] == n) {
            slot[root] = out.classes.size();
            out.classes.emplace_back();
        }
        auto& c = out.classes[slot[root]];
        c.edges.push_back(edges[e]);
        ++c.degree;
    }
    for (const auto& corner : open_corners) {
        ++out.classes[slot[find(corner.a)]].double_points;
    }
    for (const auto& tri : triangles(g)) {
        std::map<std::size_t, Int> per_class;
        ++per_class[slot[find(index_of(tri[0], tri[1]))]];
        ++per_class[slot[find(index_of(tri[0], tri[2]))]];
        ++per_class[slot[find(index_of(tri[1], tri[2]))]];
        for (const auto& [cls, count] : per_class) {
            out.classes[cls].self_nodes += choose2(count);
        }
    }
    for (auto& c : out.classes) c.genus = c.double_points - c.degree + 1;
    return out;
}

PairType pair_type(const ArrangementGraph& g) {
    const Int tau3 = static_cast<Int>(triangles(g).size());
    return PairType{g.m().value(), g.edge_count(), double_curve_classes(g).k(), tau2_of(g, tau3),
                    tau3};
}

TauProfile tau_profile(const ArrangementGraph& g) { return tau_profile_of(pair_type(g)); }

NuProfile nu_profile(const ArrangementGraph& g) { return nu_profile_of(pair_type(g)); }

SurfaceInvariants surface_invariants(const ArrangementGraph& g) {
    return surface_invariants_of(pair_type(g));
}

Int arithmetic_genus_D(const ArrangementGraph& g) {
    if (g.empty()) throw Error(ErrorKind::EmptyCurve, "p_a(D) is undefined for D = ∅");
    const Int tau3 = static_cast<Int>(triangles(g).size());
    return add(sub(add(tau2_of(g, tau3), mul(3, tau3)), g.edge_count()), 1);
}

ProjectionData projection_data(const ArrangementGraph& g) {
    return projection_data_of(pair_type(g), is_irreducible_pair(g));
}

}  // namespace degenlab
