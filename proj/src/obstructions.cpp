#include "degenlab/obstructions.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "curated_table_data.hpp"
#include "degenlab/canonical.hpp"

namespace degenlab {

std::string_view to_string(ObstructionKind kind) {
    switch (kind) {
    case ObstructionKind::NegativeCount: return "NegativeCount";
    case ObstructionKind::NoCorrespondingSurfaceType: return "NoCorrespondingSurfaceType";
    case ObstructionKind::ChernViolation: return "ChernViolation";
    case ObstructionKind::NegativeBranchGenus: return "NegativeBranchGenus";
    case ObstructionKind::DualDegreeTooSmall: return "DualDegreeTooSmall";
    case ObstructionKind::PlanarTrap: return "PlanarTrap";
    case ObstructionKind::PlanarTrapWithExtraComponent: return "PlanarTrapWithExtraComponent";
    }
    return "Unknown";
}

std::string_view to_string(KnownStatus status) {
    switch (status) {
    case KnownStatus::Limit: return "Limit";
    case KnownStatus::NotLimitForThisM: return "NotLimitForThisM";
    case KnownStatus::AbsolutelyNotLimit: return "AbsolutelyNotLimit";
    case KnownStatus::PotentiallyLimit: return "PotentiallyLimit";
    case KnownStatus::VirtuallyLimitOnly: return "VirtuallyLimitOnly";
    }
    return "Unknown";
}

KnownStatus parse_known_status(std::string_view text) {
    for (auto s : {KnownStatus::Limit, KnownStatus::NotLimitForThisM, KnownStatus::AbsolutelyNotLimit,
                   KnownStatus::PotentiallyLimit, KnownStatus::VirtuallyLimitOnly}) {
        if (to_string(s) == text) return s;
    }
    throw Error(ErrorKind::ParseError, "unknown status '" + std::string(text) + "'");
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::PassesBattery: return "PassesBattery";
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::KnownResult: return "KnownResult";
    }
    return "Unknown";
}

bool MPredicate::matches(Int m) const {
    switch (op) {
    case Op::Equal: return m == value;
    case Op::AtLeast: return m >= value;
    case Op::Any: return true;
    }
    return false;
}

std::string MPredicate::to_string() const {
    switch (op) {
    case Op::Equal: return "=" + std::to_string(value);
    case Op::AtLeast: return ">=" + std::to_string(value);
    case Op::Any: return "*";
    }
    return "*";
}

MPredicate MPredicate::parse(std::string_view text) {
    MPredicate out;
    std::string_view digits;
    if (text == "*") return out;
    if (text.starts_with(">=")) {
        out.op = Op::AtLeast;
        digits = text.substr(2);
    } else if (text.starts_with("=")) {
        out.op = Op::Equal;
        digits = text.substr(1);
    } else {
        throw Error(ErrorKind::ParseError, "m-predicate must be =N, >=N or *, got '" +
                                               std::string(text) + "'");
    }
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out.value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() ||
        digits.front() == '+' || out.value < 0 || std::to_string(out.value) != digits) {
        throw Error(ErrorKind::ParseError, "bad number in m-predicate '" + std::string(text) + "'");
    }
    return out;
}

CuratedTable CuratedTable::parse(std::string_view text) {
    std::vector<CuratedRow> rows;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        const auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "curated table must end with a newline", pos);
        }
        const std::string_view line = text.substr(pos, end - pos);
        if (!header_seen) {
            if (line != kHeader) {
                throw Error(ErrorKind::ParseError, "curated table header line is missing", pos);
            }
            header_seen = true;
            pos = end + 1;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string_view::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 5) {
            throw Error(ErrorKind::ParseError,
                        "curated row needs 5 tab-separated fields, got " +
                            std::to_string(fields.size()),
                        pos);
        }
        try {
            CuratedRow row{std::string(fields[0]), std::string(fields[1]),
                           MPredicate::parse(fields[2]), parse_known_status(fields[3]),
                           std::string(fields[4])};
            rows.push_back(std::move(row));
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, e.what(), pos);
        }
        pos = end + 1;
    }
    if (!header_seen) throw Error(ErrorKind::ParseError, "curated table is empty", 0);
    return CuratedTable(std::move(rows));
}

std::string CuratedTable::serialize() const {
    std::string out(kHeader);
    out += '\n';
    for (const auto& r : rows_) {
        out += r.symbol + '\t' + r.certificate + '\t' + r.applies.to_string() + '\t' +
               std::string(to_string(r.status)) + '\t' + r.source + '\n';
    }
    return out;
}

std::optional<KnownVerdict> CuratedTable::lookup(std::string_view certificate, Int m) const {
    for (const auto& r : rows_) {
        if (r.certificate == certificate && r.applies.matches(m)) {
            return KnownVerdict{r.status, r.source, r.applies.to_string()};
        }
    }
    return std::nullopt;
}

std::string_view embedded_curated_table_text() { return kEmbeddedCuratedTable; }

const CuratedTable& default_curated_table() {
    static const CuratedTable table = [] {
        if (const char* path = std::getenv("DEGENLAB_CURATED_TABLE"); path && *path) {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                throw Error(ErrorKind::Io, std::string("cannot read curated table ") + path);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            return CuratedTable::parse(buf.str());
        }
        return CuratedTable::parse(kEmbeddedCuratedTable);
    }();
    return table;
}

bool ObstructionReport::has(ObstructionKind kind) const {
    for (const auto& o : fired) {
        if (o.kind == kind) return true;
    }
    return false;
}

bool forced_planar(Int degree, Int genus_plus_nodes) {
    if (degree < 3) return false;
    return genus_plus_nodes > (degree - 2) * (degree - 2) / 4;
}

std::optional<KnownVerdict> curated_verdict(const ArrangementGraph& g, const CuratedTable& table) {
    try {
        return table.lookup(canonical_form(g).certificate, g.m().value());
    } catch (const Error& e) {
        // Graphs past the canonical bound have no curated entries.
        if (e.kind() == ErrorKind::TooLarge) return std::nullopt;
        throw;
    }
}

ObstructionReport run_battery(const ArrangementGraph& g, const CuratedTable& table) {
    ObstructionReport report;
    report.pair_type = pair_type(g);
    const PairType& pt = report.pair_type;
    const bool irreducible = is_irreducible_pair(g);

    // (a) negative τ or ν counts
    try {
        tau_profile_of(pt);
        nu_profile_of(pt);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NegativeCount) throw;
        report.fired.push_back({ObstructionKind::NegativeCount, {}});
    }
    const bool counts_ok = report.fired.empty();

    // (b) ḡ < 0
    const Int gbar = pt.tau2 - pt.dbar + pt.k;
    if (gbar < 0) {
        report.fired.push_back({ObstructionKind::NoCorrespondingSurfaceType, {{"gbar", gbar}}});
    } else {
        report.surface_type = surface_type_of(pt);
    }

    if (counts_ok) {
        // (c) K² > 0 forces e > 0
        const SurfaceInvariants si = surface_invariants_of(pt);
        if (si.K2 > 0 && si.euler <= 0) {
            report.fired.push_back(
                {ObstructionKind::ChernViolation, {{"K2", si.K2}, {"e", si.euler}}});
        }

        if (irreducible) {
            const ProjectionData pd = projection_data_of(pt, false);
            // (d) the branch curve of an irreducible pair is irreducible
            if (pd.g < 0) {
                report.fired.push_back({ObstructionKind::NegativeBranchGenus, {{"g", pd.g}}});
            }
            // (e) class of the branch curve too small
            const DualData dd = dual_plucker(pd);
            if (pd.degB >= 4 && dd.deg_dual <= 2) {
                report.fired.push_back({ObstructionKind::DualDegreeTooSmall,
                                        {{"degB", pd.degB}, {"deg_dual", dd.deg_dual}}});
            }
        }
    }

    if (irreducible) {
        const Int m = pt.m;
        const ComponentData comps = double_curve_classes(g);
        // (f) a component forced into a plane meets Y in more than deg Y points
        bool trapped = false;
        for (const auto& c : comps.classes) {
            if (forced_planar(c.degree, c.genus + c.self_nodes) && 2 * c.degree > m) {
                report.fired.push_back({ObstructionKind::PlanarTrap,
                                        {{"degree", c.degree},
                                         {"genus", c.genus},
                                         {"self_nodes", c.self_nodes},
                                         {"m", m}}});
                trapped = true;
                break;
            }
        }
        // (g) the same plane also holds a point of another component
        if (!trapped && comps.k() >= 2) {
            for (const auto& c : comps.classes) {
                const bool planar = c.degree == 2 || forced_planar(c.degree, c.genus + c.self_nodes);
                if (planar && 2 * c.degree + 2 > m) {
                    report.fired.push_back({ObstructionKind::PlanarTrapWithExtraComponent,
                                            {{"degree", c.degree}, {"k", comps.k()}, {"m", m}}});
                    break;
                }
            }
        }
    }

    report.curated = curated_verdict(g, table);
    if (!report.fired.empty()) {
        report.verdict = Verdict::Obstructed;
    } else if (report.curated) {
        report.verdict = Verdict::KnownResult;
    } else {
        report.verdict = Verdict::PassesBattery;
    }
    return report;
}

}  // namespace degenlab
