#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degenlab/invariants.hpp"

namespace degenlab {

enum class ObstructionKind {
    NegativeCount,
    NoCorrespondingSurfaceType,
    ChernViolation,
    NegativeBranchGenus,
    DualDegreeTooSmall,
    PlanarTrap,
    PlanarTrapWithExtraComponent,
};

std::string_view to_string(ObstructionKind kind);

struct Obstruction {
    ObstructionKind kind;
    // Named numbers that triggered the check, e.g. {"K2", 1}, {"e", -1}.
    std::vector<std::pair<std::string, Int>> witness;
};

enum class KnownStatus {
    Limit,
    NotLimitForThisM,
    AbsolutelyNotLimit,
    PotentiallyLimit,
    VirtuallyLimitOnly,
};

std::string_view to_string(KnownStatus status);
KnownStatus parse_known_status(std::string_view text);

// Which m a curated row applies to: "=N", ">=N" or "*".
struct MPredicate {
    enum class Op { Equal, AtLeast, Any };
    Op op = Op::Any;
    Int value = 0;

    bool matches(Int m) const;
    std::string to_string() const;
    static MPredicate parse(std::string_view text);

    friend bool operator==(const MPredicate&, const MPredicate&) = default;
};

struct KnownVerdict {
    KnownStatus status;
    std::string source;
    std::string applicable_m;
};

struct CuratedRow {
    std::string symbol;
    std::string certificate;
    MPredicate applies;
    KnownStatus status;
    std::string source;

    friend bool operator==(const CuratedRow&, const CuratedRow&) = default;
};

// Tab-separated table, one row per line after a fixed header line.
// parse(serialize()) and serialize(parse(text)) are both exact.
class CuratedTable {
public:
    static constexpr std::string_view kHeader = "# symbol\tcertificate\tm\tstatus\tsource";

    CuratedTable() = default;
    explicit CuratedTable(std::vector<CuratedRow> rows) : rows_(std::move(rows)) {}

    static CuratedTable parse(std::string_view text);
    std::string serialize() const;

    const std::vector<CuratedRow>& rows() const noexcept { return rows_; }

    // First row whose certificate and m-predicate both match.
    std::optional<KnownVerdict> lookup(std::string_view certificate, Int m) const;

private:
    std::vector<CuratedRow> rows_;
};

// The table compiled into the library, or the file named by
// DEGENLAB_CURATED_TABLE when that variable is set. Loaded once.
const CuratedTable& default_curated_table();
std::string_view embedded_curated_table_text();

enum class Verdict { PassesBattery, Obstructed, KnownResult };

std::string_view to_string(Verdict verdict);

struct ObstructionReport {
    PairType pair_type;
    // Absent when ḡ < 0, i.e. no surface type corresponds.
    std::optional<SurfaceType> surface_type;
    std::vector<Obstruction> fired;
    std::optional<KnownVerdict> curated;
    Verdict verdict = Verdict::PassesBattery;

    bool has(ObstructionKind kind) const;
};

// Forced planarity of a component of degree d with arithmetic genus
// g + s: it exceeds the largest genus of a nondegenerate space curve of
// that degree.
bool forced_planar(Int degree, Int genus_plus_nodes);

std::optional<KnownVerdict> curated_verdict(const ArrangementGraph& g,
                                            const CuratedTable& table = default_curated_table());

ObstructionReport run_battery(const ArrangementGraph& g,
                              const CuratedTable& table = default_curated_table());

}  // namespace degenlab
