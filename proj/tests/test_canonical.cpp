#include <doctest.h>

#include "degenlab/canonical.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace degenlab;
using oracle::make;

TEST_CASE("certificate is invariant under relabeling") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = oracle::random_graph(rng, 3, 9);
        const auto base = canonical_form(g);
        for (int k = 0; k < 3; ++k) {
            const auto perm = oracle::random_permutation(rng, static_cast<int>(g.m().value()));
            const auto h = ArrangementGraph(g.m(), oracle::relabel(g.edges(), perm));
            CHECK(canonical_form(h).certificate == base.certificate);
        }
    }
}

TEST_CASE("equal certificates iff isomorphic") {
    // All pairs from a pool of random graphs on at most 6 planes.
    std::mt19937_64 rng(22);
    std::vector<ArrangementGraph> pool;
    for (int k = 0; k < 60; ++k) pool.push_back(oracle::random_graph(rng, 4, 6));
    // Add near-duplicates so that isomorphic pairs occur often.
    for (int k = 0; k < 30; ++k) {
        const auto& g = pool[static_cast<std::size_t>(k)];
        const auto perm = oracle::random_permutation(rng, static_cast<int>(g.m().value()));
        pool.emplace_back(g.m(), oracle::relabel(g.edges(), perm));
    }
    int isomorphic_pairs = 0;
    for (std::size_t a = 0; a < pool.size(); ++a) {
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            const bool same = canonical_form(pool[a]).certificate ==
                              canonical_form(pool[b]).certificate;
            const bool iso = oracle::isomorphic(pool[a].edges(), pool[b].edges());
            CHECK(same == iso);
            isomorphic_pairs += iso;
        }
    }
    CHECK(isomorphic_pairs >= 30);
}

TEST_CASE("automorphism count matches brute force") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = oracle::random_graph(rng, 3, 7);
        CHECK(canonical_form(g).automorphism_count ==
              oracle::count_isomorphisms(g.edges(), g.edges()));
    }
    CHECK(canonical_form(make(5, fixtures::k4)).automorphism_count == 24);
    CHECK(canonical_form(make(6, fixtures::two_chains)).automorphism_count == 8);
    CHECK(canonical_form(make(4, {})).automorphism_count == 1);
}

TEST_CASE("look-alike pairs get different certificates") {
    CHECK(canonical_form(make(6, fixtures::two_chains)).certificate !=
          canonical_form(make(6, fixtures::chain3_plus_edge)).certificate);
    CHECK(canonical_form(make(5, fixtures::c4)).certificate !=
          canonical_form(make(5, fixtures::g311)).certificate);
}

TEST_CASE("certificate shape") {
    const auto f = canonical_form(make(5, fixtures::g121));
    CHECK(f.vertex_count == 4);
    CHECK(f.edges.size() == 4);
    CHECK(f.certificate.starts_with("v4:"));
    CHECK(canonical_form(make(3, {})).certificate == "v0:");
    // Isolated planes do not matter.
    CHECK(canonical_form(make(3, {{1, 2}})).certificate ==
          canonical_form(make(9, {{7, 9}})).certificate);
}

TEST_CASE("decode_certificate inverts rendering") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_graph(rng, 3, 8);
        const auto f = canonical_form(g);
        const auto edges = decode_certificate(f.certificate);
        CHECK(edges == f.edges);
        CHECK(canonical_form(edges).certificate == f.certificate);
    }
    CHECK(decode_certificate("v0:").empty());
    for (const char* bad : {"", "x3:1-2", "v3", "v3:1-4", "v3:1-2,", "v3:1-1", "v3:1-2;2-3"}) {
        CHECK_THROWS_AS(decode_certificate(bad), Error);
    }
}

TEST_CASE("exact labeling is bounded per component") {
    std::vector<std::pair<int, int>> path12, path13, two_paths;
    for (int v = 1; v < 12; ++v) path12.emplace_back(v, v + 1);
    for (int v = 1; v < 13; ++v) path13.emplace_back(v, v + 1);
    two_paths = path12;
    for (int v = 13; v < 24; ++v) two_paths.emplace_back(v, v + 1);

    CHECK(canonical_form(make(12, path12)).vertex_count == 12);
    CHECK(canonical_form(make(24, two_paths)).vertex_count == 24);
    try {
        canonical_form(make(13, path13));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("highly symmetric graphs") {
    // Petersen graph: 10 vertices, 120 automorphisms.
    std::vector<std::pair<int, int>> petersen;
    for (int v = 0; v < 5; ++v) {
        petersen.emplace_back(v + 1, (v + 1) % 5 + 1);
        petersen.emplace_back(v + 1, v + 6);
        petersen.emplace_back(v + 6, (v + 2) % 5 + 6);
    }
    const auto f = canonical_form(make(10, petersen));
    CHECK(f.automorphism_count == 120);

    std::mt19937_64 rng(25);
    for (int k = 0; k < 5; ++k) {
        const auto perm = oracle::random_permutation(rng, 10);
        std::vector<Edge> es;
        for (const auto& [a, b] : petersen) es.emplace_back(a, b);
        CHECK(canonical_form(make(10, oracle::relabel(es, perm))).certificate == f.certificate);
    }

    // K_{3,3} versus the prism: both cubic on 6 vertices.
    std::vector<std::pair<int, int>> k33, prism = {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6},
                                                   {4, 6}, {1, 4}, {2, 5}, {3, 6}};
    for (int a = 1; a <= 3; ++a)
        for (int b = 4; b <= 6; ++b) k33.emplace_back(a, b);
    CHECK(canonical_form(make(6, k33)).certificate != canonical_form(make(6, prism)).certificate);
    CHECK(canonical_form(make(6, k33)).automorphism_count == 72);
    CHECK(canonical_form(make(6, prism)).automorphism_count == 12);
}
