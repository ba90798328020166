#pragma once

#include <vector>

#include "degenlab/graph.hpp"

namespace degenlab {

// Triple points of L split by how many of their three lines lie in D.
struct TauProfile {
    Int tau0 = 0;
    Int tau1 = 0;
    Int tau2 = 0;
    Int tau3 = 0;

    Int total() const { return tau0 + tau1 + tau2 + tau3; }
    friend bool operator==(const TauProfile&, const TauProfile&) = default;
};

// Apparent double points of the projected arrangement (crossings of skew
// lines), split by how many of the two lines lie in D.
struct NuProfile {
    Int nu0 = 0;
    Int nu1 = 0;
    Int nu2 = 0;

    Int total() const { return nu0 + nu1 + nu2; }
    friend bool operator==(const NuProfile&, const NuProfile&) = default;
};

// (m, d̄, k, τ2, τ3)
struct PairType {
    Int m = 0;
    Int dbar = 0;
    Int k = 0;
    Int tau2 = 0;
    Int tau3 = 0;

    friend auto operator<=>(const PairType&, const PairType&) = default;
};

// (m, d̄, k, ḡ, t)
struct SurfaceType {
    Int m = 0;
    Int dbar = 0;
    Int k = 0;
    Int gbar = 0;
    Int t = 0;

    friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

struct SurfaceInvariants {
    Int K2 = 0;
    Int euler = 0;
    Int chi = 0;
    Int omega = 0;

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Branch curve of a generic projection: degree, geometric genus, cusps, nodes.
struct ProjectionData {
    Int degB = 0;
    Int g = 0;
    Int c = 0;
    Int n = 0;

    friend bool operator==(const ProjectionData&, const ProjectionData&) = default;
};

// Plücker data of the dual of the branch curve.
struct DualData {
    Int deg_dual = 0;
    Int c_dual = 0;
    Int n_dual = 0;

    friend bool operator==(const DualData&, const DualData&) = default;
};

// One irreducible component of the smoothed double curve, seen as a class
// of edges of Γ(D).
struct ComponentClass {
    std::vector<Edge> edges;
    Int degree = 0;
    // Adjacent edge pairs inside the class that span no triangle of Γ(D).
    Int double_points = 0;
    Int genus = 0;
    // Σ over triangles of C(edges of the triangle in this class, 2).
    Int self_nodes = 0;
};

struct ComponentData {
    std::vector<ComponentClass> classes;

    Int k() const { return static_cast<Int>(classes.size()); }
    Int total_genus() const;
};

// d = C(m,2) - d̄, the number of lines smoothed away.
Int remainder_degree(Int m, Int dbar);

TauProfile tau_profile(const ArrangementGraph& g);
NuProfile nu_profile(const ArrangementGraph& g);
ComponentData double_curve_classes(const ArrangementGraph& g);
PairType pair_type(const ArrangementGraph& g);
SurfaceInvariants surface_invariants(const ArrangementGraph& g);
Int arithmetic_genus_D(const ArrangementGraph& g);
ProjectionData projection_data(const ArrangementGraph& g);

// Type-level counterparts. They only need the pair type, so they also apply
// to pairs that are not known to come from a degeneration.
void validate(const PairType& pt);
TauProfile tau_profile_of(const PairType& pt);
NuProfile nu_profile_of(const PairType& pt);
SurfaceType surface_type_of(const PairType& pt);
PairType pair_type_of(const SurfaceType& st);
SurfaceInvariants surface_invariants_of(const PairType& pt);
// Route through the surface type: K² and e from m, d̄, ḡ - k, t directly.
SurfaceInvariants surface_invariants_of(const SurfaceType& st);
ProjectionData projection_data_of(const PairType& pt, bool irreducible);

DualData dual_plucker(const ProjectionData& pd);

}  // namespace degenlab
