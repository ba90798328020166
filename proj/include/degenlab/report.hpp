#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "degenlab/enumeration.hpp"
#include "degenlab/obstructions.hpp"

namespace degenlab {

struct ComponentSummary {
    Int degree = 0;
    Int genus = 0;
    Int self_nodes = 0;

    friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct FiredSummary {
    std::string kind;
    std::vector<std::pair<std::string, Int>> witness;

    friend bool operator==(const FiredSummary&, const FiredSummary&) = default;
};

struct CuratedSummary {
    std::string status;
    std::string source;
    std::string applicable_m;

    friend bool operator==(const CuratedSummary&, const CuratedSummary&) = default;
};

// Everything the analyze command reports about one pair, in plain values so
// that it survives a JSON round trip unchanged.
struct AnalysisSummary {
    Int m = 0;
    std::vector<Edge> edges;
    std::optional<std::string> certificate;
    std::string symbol;
    bool irreducible = true;
    PairType pair_type;
    std::optional<SurfaceType> surface_type;
    TauProfile tau;
    NuProfile nu;
    SurfaceInvariants surface;
    std::optional<Int> arithmetic_genus;
    ProjectionData branch;
    DualData dual;
    std::vector<ComponentSummary> components;
    std::vector<FiredSummary> fired;
    std::optional<CuratedSummary> curated;
    std::string verdict;

    friend bool operator==(const AnalysisSummary&, const AnalysisSummary&) = default;
};

AnalysisSummary analyze(const ArrangementGraph& g,
                        const CuratedTable& table = default_curated_table());

nlohmann::ordered_json graph_to_json(const ArrangementGraph& g);
ArrangementGraph graph_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const AnalysisSummary& s);
AnalysisSummary summary_from_json(const nlohmann::ordered_json& j);
std::string to_text(const AnalysisSummary& s);

// {"certificate","edges","pair_type","irreducible","verdict"}
nlohmann::ordered_json catalog_line(const CatalogEntry& entry, const ObstructionReport& report);

}  // namespace degenlab
