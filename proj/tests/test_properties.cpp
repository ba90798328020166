#include <doctest.h>

#include <chrono>

#include "degenlab/invariants.hpp"
#include "degenlab/type_symbol.hpp"
#include "oracles.hpp"

using namespace degenlab;

// 1000 random pairs on 4..8 planes. Counts come from the brute-force
// oracles; every identity is evaluated on those counts and compared with
// what the library reports.

namespace {

constexpr int kTrials = 1000;
constexpr std::uint64_t kSeed = 20240611;

Int c2(Int n) { return n * (n - 1) / 2; }
Int c3(Int n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

TEST_CASE("identities on random pairs") {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto g = oracle::random_graph(rng, 4, 8);
        const Int m = g.m().value();
        const Int dbar = g.edge_count();
        const Int d = c2(m) - dbar;
        const auto [t0, t1, t2, t3] = oracle::tau(g);
        const auto [n0, n1, n2] = oracle::nu(g);
        const auto classes = oracle::edge_classes(g);
        const Int k = static_cast<Int>(classes.size());
        CAPTURE(trial);
        CAPTURE(m);
        CAPTURE(format_edge_list(g));

        // Triple points.
        CHECK(t0 + t1 + t2 + t3 == c3(m));
        CHECK(t1 + 2 * t2 + 3 * t3 == (m - 2) * dbar);
        CHECK(t2 + 2 * t1 + 3 * t0 == (m - 2) * d);
        CHECK(tau_profile(g) == TauProfile{t0, t1, t2, t3});

        // Skew pairs.
        CHECK(n0 + n1 + n2 == c2(m) * c2(m - 2) / 2);
        CHECK(n2 == c2(dbar) - t2 - 3 * t3);
        CHECK(n0 == c2(d) - t1 - 3 * t0);
        CHECK(nu_profile(g) == NuProfile{n0, n1, n2});

        // Surface invariants, each two ways.
        const Int K2_a = m * (m - 4) * (m - 4) - (5 * m - 20) * dbar + 4 * t2 + 9 * t3;
        const Int K2_b = m * (m - 4) * (m - 4) + 10 * dbar - 5 * t1 - 6 * t2 - 6 * t3;
        const Int e_a = m * m * (m - 4) + 6 * m - (7 * m - 16) * dbar + 8 * t2 + 15 * t3;
        const Int e_b = m * m * (m - 4) + 6 * m + 2 * dbar - 7 * t1 - 6 * t2 - 6 * t3;
        const Int chi = dbar + t0 - m * (m - 3) / 2;
        CHECK(K2_a == K2_b);
        CHECK(e_a == e_b);
        CHECK(K2_a + e_a == 12 * chi);
        const auto si = surface_invariants(g);
        CHECK(si == SurfaceInvariants{K2_a, e_a, chi, 2 * t1});

        // The same numbers through the surface type.
        const Int gbar = t2 - dbar + k;
        CHECK(K2_a == m * (m - 4) * (m - 4) - (5 * m - 24) * dbar + 4 * (gbar - k) + 9 * t3);
        CHECK(e_a == m * m * (m - 4) + 6 * m - (7 * m - 24) * dbar + 8 * (gbar - k) + 15 * t3);
        CHECK(6 * chi == m * (m * m - 6 * m + 11) - 6 * (m - 4) * dbar + 6 * (gbar - k) + 12 * t3);
        CHECK(2 * t1 == 2 * dbar * (m - 4) - 6 * t3 - 4 * (gbar - k));

        // Double curve classes.
        const auto comps = double_curve_classes(g);
        std::set<std::vector<Edge>> mine;
        Int genus_sum = 0;
        for (const auto& c : comps.classes) {
            mine.insert(c.edges);
            genus_sum += c.genus;
        }
        CHECK(mine == classes);
        CHECK(genus_sum == t2 - dbar + k);
        CHECK(pair_type(g) == PairType{m, dbar, k, t2, t3});

        // Branch curve: degree 2d, cusps and nodes from the triple points
        // and skew pairs, and the genus formula of a nodal cuspidal curve.
        const auto pd = projection_data_of(pair_type(g), false);
        CHECK(pd.degB == 2 * d);
        CHECK(pd.c == 6 * t0 + 3 * t1);
        CHECK(pd.n == 4 * n0);
        CHECK(c2(pd.degB - 1) - pd.g == pd.n + pd.c);
        CHECK(e_a == 3 * m + 2 * (pd.g - 1) - pd.c);

        // Relabeling changes nothing.
        const auto perm = oracle::random_permutation(rng, static_cast<int>(m));
        const auto h = ArrangementGraph(g.m(), oracle::relabel(g.edges(), perm));
        CHECK(pair_type(h) == pair_type(g));
        CHECK(type_symbol(h) == type_symbol(g));

        // Swapping D and R reverses the profiles.
        const auto r = complement(g);
        CHECK(tau_profile(r) == TauProfile{t3, t2, t1, t0});
        CHECK(nu_profile(r) == NuProfile{n2, n1, n0});
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(elapsed < std::chrono::seconds(30));
}
