#include <doctest.h>

#include "degenlab/canonical.hpp"
#include "degenlab/enumeration.hpp"
#include "degenlab/obstructions.hpp"
#include "degenlab/type_symbol.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace degenlab;
using oracle::make;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

std::vector<ObstructionKind> kinds(const ObstructionReport& r) {
    std::vector<ObstructionKind> out;
    for (const auto& o : r.fired) out.push_back(o.kind);
    return out;
}

Int witness(const Obstruction& o, std::string_view name) {
    for (const auto& [key, value] : o.witness)
        if (key == name) return value;
    FAIL("missing witness " << name);
    return 0;
}

const CuratedTable kEmpty;

}  // namespace

TEST_CASE("forced planarity") {
    CHECK(forced_planar(3, 1));
    CHECK_FALSE(forced_planar(3, 0));
    CHECK_FALSE(forced_planar(4, 1));
    CHECK(forced_planar(4, 2));
    CHECK_FALSE(forced_planar(5, 2));
    CHECK(forced_planar(5, 3));
    CHECK_FALSE(forced_planar(2, 5));
    CHECK_FALSE(forced_planar(1, 0));
}

TEST_CASE("Chern violation on the triangle with a tail") {
    const auto r = run_battery(make(5, fixtures::g131), kEmpty);
    REQUIRE(r.has(ObstructionKind::ChernViolation));
    const auto& o = r.fired.front();
    CHECK(o.kind == ObstructionKind::ChernViolation);
    CHECK(witness(o, "K2") == 1);
    CHECK(witness(o, "e") == -1);
    CHECK(r.verdict == Verdict::Obstructed);
}

TEST_CASE("dual degree too small for K_{m-1}") {
    for (int m = 5; m <= 10; ++m) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < m; ++i)
            for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
        const auto r = run_battery(make(m, edges), kEmpty);
        CHECK(r.has(ObstructionKind::DualDegreeTooSmall));
    }
}

TEST_CASE("planar traps") {
    SUBCASE("star: a smooth plane cubic needs more than five planes") {
        const auto r5 = run_battery(make(5, fixtures::g301), kEmpty);
        CHECK(kinds(r5) == std::vector{ObstructionKind::PlanarTrap});
        // 2 deg = 6 points of Y in the plane no longer exceed m.
        CHECK(run_battery(make(6, fixtures::g301), kEmpty).fired.empty());
        CHECK(run_battery(make(7, fixtures::g301), kEmpty).fired.empty());
    }
    SUBCASE("triangle with a pendant: a nodal plane cubic") {
        const auto r = run_battery(make(5, fixtures::g121), kEmpty);
        REQUIRE(r.has(ObstructionKind::PlanarTrap));
        CHECK(witness(r.fired.back(), "self_nodes") == 1);
    }
    SUBCASE("2-chain and a line: a conic and a line") {
        const auto r = run_battery(make(5, fixtures::g2_21), kEmpty);
        CHECK(kinds(r) == std::vector{ObstructionKind::PlanarTrapWithExtraComponent});
        CHECK(run_battery(make(6, fixtures::g2_21), kEmpty).fired.empty());
    }
    SUBCASE("the twisted cubic is never trapped") {
        for (int m = 4; m <= 9; ++m)
            CHECK(run_battery(make(m, fixtures::chain3), kEmpty).fired.empty());
    }
}

TEST_CASE("the fork and the double triangle pass the battery") {
    // Both are ruled out by geometry the battery does not see.
    CHECK(run_battery(make(5, fixtures::g311), kEmpty).fired.empty());
    CHECK(run_battery(make(5, fixtures::g113), kEmpty).fired.empty());
}

TEST_CASE("no firings at m = 4") {
    for (const auto& entry : enumerate_arrangements(PlaneCount(4))) {
        if (!entry.irreducible) continue;
        CHECK(run_battery(entry.graph).fired.empty());
    }
}

TEST_CASE("the seven graphs that are not 5-limit are all marked at m = 5") {
    int battery = 0;
    for (const auto& edges : fixtures::not_5_limit) {
        const auto r = run_battery(make(5, edges));
        battery += !r.fired.empty();
        const bool curated_no = r.curated && r.curated->status != KnownStatus::Limit &&
                                r.curated->status != KnownStatus::PotentiallyLimit;
        CHECK((!r.fired.empty() || curated_no));
        REQUIRE(r.curated);
        CHECK(r.curated->status == KnownStatus::NotLimitForThisM);
        CHECK(r.verdict != Verdict::PassesBattery);
    }
    CHECK(battery == 5);
}

TEST_CASE("curated Limit rows are never obstructed") {
    const auto& table = default_curated_table();
    int checked = 0;
    for (const auto& row : table.rows()) {
        if (row.status != KnownStatus::Limit) continue;
        const auto form = canonical_form(decode_certificate(row.certificate));
        for (int m = 3; m <= 8; ++m) {
            if (!row.applies.matches(m) || form.vertex_count > m) continue;
            const auto g = make_graph_unchecked(PlaneCount(m), form.edges);
            // A row whose m-predicate matches but is shadowed by an earlier
            // row still must not be obstructed.
            CHECK(run_battery(g).fired.empty());
            ++checked;
        }
    }
    CHECK(checked > 11);
}

TEST_CASE("curated table rows are consistent") {
    for (const auto& row : default_curated_table().rows()) {
        const auto edges = decode_certificate(row.certificate);
        const auto form = canonical_form(edges);
        CHECK(form.certificate == row.certificate);
        const Int m = std::max(3, form.vertex_count);
        CHECK(type_symbol(make_graph_unchecked(PlaneCount(m), edges)).to_string() == row.symbol);
        CHECK_FALSE(row.source.empty());
    }
}

TEST_CASE("curated table text round trip") {
    const auto text = embedded_curated_table_text();
    const auto table = CuratedTable::parse(text);
    CHECK(table.serialize() == text);
    CHECK(CuratedTable::parse(table.serialize()).rows() == table.rows());
    CHECK(table.rows().size() == 23);
}

TEST_CASE("curated lookups") {
    const auto& t = default_curated_table();
    const std::string k4 = canonical_form(make(5, fixtures::k4)).certificate;
    const std::string star = canonical_form(make(5, fixtures::g301)).certificate;
    const std::string fork = canonical_form(make(5, fixtures::g311)).certificate;

    CHECK(t.lookup(k4, 4)->status == KnownStatus::Limit);
    CHECK(t.lookup(k4, 5)->status == KnownStatus::NotLimitForThisM);
    CHECK_FALSE(t.lookup(k4, 6).has_value());

    CHECK(t.lookup(star, 4)->status == KnownStatus::Limit);
    CHECK(t.lookup(star, 5)->status == KnownStatus::NotLimitForThisM);
    CHECK(t.lookup(star, 6)->status == KnownStatus::PotentiallyLimit);
    CHECK(t.lookup(star, 7)->status == KnownStatus::Limit);
    CHECK(t.lookup(star, 7)->applicable_m == ">=7");

    CHECK(t.lookup(fork, 5)->status == KnownStatus::NotLimitForThisM);
    CHECK(t.lookup(fork, 9)->status == KnownStatus::AbsolutelyNotLimit);

    // Curated but unobstructed gives KnownResult; nothing at all gives PassesBattery.
    CHECK(run_battery(make(5, fixtures::c4)).verdict == Verdict::KnownResult);
    CHECK(run_battery(make(5, fixtures::c4), kEmpty).verdict == Verdict::PassesBattery);
    CHECK(run_battery(make(6, {{1, 2}})).verdict == Verdict::PassesBattery);
}

TEST_CASE("graphs past the canonical bound have no curated entry") {
    CHECK_FALSE(curated_verdict(build_fig4_graph()).has_value());
    CHECK(run_battery(build_fig4_graph()).verdict == Verdict::PassesBattery);
}

TEST_CASE("m-predicates") {
    CHECK(MPredicate::parse("=5").matches(5));
    CHECK_FALSE(MPredicate::parse("=5").matches(6));
    CHECK(MPredicate::parse(">=7").matches(9));
    CHECK_FALSE(MPredicate::parse(">=7").matches(6));
    CHECK(MPredicate::parse("*").matches(3));
    for (const char* text : {"=5", ">=7", "*"}) CHECK(MPredicate::parse(text).to_string() == text);
    for (const char* bad : {"", "5", "<=5", "=x", ">=", "**"}) {
        CHECK(kind_of([&] { MPredicate::parse(bad); }) == ErrorKind::ParseError);
    }
}

TEST_CASE("known status names") {
    for (auto s : {KnownStatus::Limit, KnownStatus::NotLimitForThisM,
                   KnownStatus::AbsolutelyNotLimit, KnownStatus::PotentiallyLimit,
                   KnownStatus::VirtuallyLimitOnly}) {
        CHECK(parse_known_status(to_string(s)) == s);
    }
    CHECK(kind_of([] { parse_known_status("limit"); }) == ErrorKind::ParseError);
}

TEST_CASE("malformed curated tables") {
    const std::string header(CuratedTable::kHeader);
    const std::string row = "(2|1,0)\tv2:1-2\t*\tLimit\tsome reason";
    CHECK(CuratedTable::parse(header + "\n" + row + "\n").rows().size() == 1);
    CHECK(kind_of([&] { CuratedTable::parse(header + "\n" + row); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { CuratedTable::parse(row + "\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { CuratedTable::parse(""); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] {
              CuratedTable::parse(header + "\n(2|1,0)\tv2:1-2\t*\tLimit\n");
          }) == ErrorKind::ParseError);
    CHECK(kind_of([&] {
              CuratedTable::parse(header + "\n(2|1,0)\tv2:1-2\t*\tMaybe\tx\n");
          }) == ErrorKind::ParseError);
    CHECK(kind_of([&] {
              CuratedTable::parse(header + "\n(2|1,0)\tv2:1-2\t<5\tLimit\tx\n");
          }) == ErrorKind::ParseError);
}

TEST_CASE("battery checks fire in order and respect their preconditions") {
    // Every class up to m = 6, plus random graphs on 7 and 8 planes.
    std::vector<ArrangementGraph> graphs;
    for (int m = 3; m <= 6; ++m)
        for (const auto& e : enumerate_arrangements(PlaneCount(m))) graphs.push_back(e.graph);
    std::mt19937_64 rng(51);
    for (int k = 0; k < 200; ++k) graphs.push_back(oracle::random_graph(rng, 7, 8));

    for (const auto& g : graphs) {
        const auto r = run_battery(g, kEmpty);
        const auto ks = kinds(r);
        CHECK(std::is_sorted(ks.begin(), ks.end()));
        CHECK(std::adjacent_find(ks.begin(), ks.end()) == ks.end());
        CHECK(r.surface_type.has_value() != r.has(ObstructionKind::NoCorrespondingSurfaceType));
        // Realized graphs always have nonnegative counts.
        CHECK_FALSE(r.has(ObstructionKind::NegativeCount));
        CHECK_FALSE((r.has(ObstructionKind::PlanarTrap) &&
                     r.has(ObstructionKind::PlanarTrapWithExtraComponent)));

        const bool irreducible = is_irreducible_pair(g);
        if (!irreducible) {
            CHECK_FALSE(r.has(ObstructionKind::NegativeBranchGenus));
            CHECK_FALSE(r.has(ObstructionKind::DualDegreeTooSmall));
            CHECK_FALSE(r.has(ObstructionKind::PlanarTrap));
            CHECK_FALSE(r.has(ObstructionKind::PlanarTrapWithExtraComponent));
            continue;
        }
        const auto pd = projection_data_of(r.pair_type, false);
        const auto dd = dual_plucker(pd);
        CHECK(r.has(ObstructionKind::NegativeBranchGenus) == (pd.g < 0));
        CHECK(r.has(ObstructionKind::DualDegreeTooSmall) == (pd.degB >= 4 && dd.deg_dual <= 2));
    }
}

TEST_CASE("obstruction kind names") {
    CHECK(to_string(ObstructionKind::ChernViolation) == "ChernViolation");
    CHECK(to_string(ObstructionKind::PlanarTrapWithExtraComponent) ==
          "PlanarTrapWithExtraComponent");
    CHECK(to_string(Verdict::KnownResult) == "KnownResult");
}
