#include "degenlab/report.hpp"

#include <sstream>

namespace degenlab {

using json = nlohmann::ordered_json;

namespace {

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& e : edges) out.push_back({e.i, e.j});
    return out;
}

std::vector<Edge> edges_from(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return out;
}

json pair_type_json(const PairType& p) { return {p.m, p.dbar, p.k, p.tau2, p.tau3}; }

std::string tuple_text(std::initializer_list<Int> xs) {
    std::string out = "(";
    bool first = true;
    for (Int x : xs) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    }
    return out + ')';
}

}  // namespace

AnalysisSummary analyze(const ArrangementGraph& g, const CuratedTable& table) {
    AnalysisSummary s;
    s.m = g.m().value();
    s.edges = g.edges();
    try {
        s.certificate = canonical_form(g).certificate;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooLarge) throw;
    }
    s.symbol = type_symbol(g).to_string();
    s.irreducible = is_irreducible_pair(g);

    const ObstructionReport report = run_battery(g, table);
    s.pair_type = report.pair_type;
    s.surface_type = report.surface_type;
    s.tau = tau_profile_of(s.pair_type);
    s.nu = nu_profile_of(s.pair_type);
    s.surface = surface_invariants_of(s.pair_type);
    if (!g.empty()) s.arithmetic_genus = arithmetic_genus_D(g);
    // A negative genus is shown as data here; the battery flags it.
    s.branch = projection_data_of(s.pair_type, false);
    s.dual = dual_plucker(s.branch);
    for (const auto& c : double_curve_classes(g).classes) {
        s.components.push_back({c.degree, c.genus, c.self_nodes});
    }
    for (const auto& o : report.fired) {
        s.fired.push_back({std::string(to_string(o.kind)), o.witness});
    }
    if (report.curated) {
        s.curated = CuratedSummary{std::string(to_string(report.curated->status)),
                                   report.curated->source, report.curated->applicable_m};
    }
    s.verdict = std::string(to_string(report.verdict));
    return s;
}

json graph_to_json(const ArrangementGraph& g) {
    return {{"m", g.m().value()}, {"edges", edges_json(g.edges())}};
}

ArrangementGraph graph_from_json(const json& j) {
    try {
        std::vector<std::pair<int, int>> list;
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw Error(ErrorKind::ParseError, "an edge needs two planes");
            list.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        return ArrangementGraph(PlaneCount(j.at("m").get<Int>()), list);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("graph JSON: ") + e.what());
    }
}

json to_json(const AnalysisSummary& s) {
    json out;
    out["graph"] = {{"m", s.m}, {"edges", edges_json(s.edges)}};
    out["certificate"] = s.certificate ? json(*s.certificate) : json(nullptr);
    out["symbol"] = s.symbol;
    out["irreducible"] = s.irreducible;
    out["pair_type"] = pair_type_json(s.pair_type);
    if (s.surface_type) {
        const auto& t = *s.surface_type;
        out["surface_type"] = {t.m, t.dbar, t.k, t.gbar, t.t};
    } else {
        out["surface_type"] = nullptr;
    }
    out["tau"] = {s.tau.tau0, s.tau.tau1, s.tau.tau2, s.tau.tau3};
    out["nu"] = {s.nu.nu0, s.nu.nu1, s.nu.nu2};
    out["K2"] = s.surface.K2;
    out["e"] = s.surface.euler;
    out["chi"] = s.surface.chi;
    out["omega"] = s.surface.omega;
    out["p_a_D"] = s.arithmetic_genus ? json(*s.arithmetic_genus) : json(nullptr);
    out["branch"] = {{"degB", s.branch.degB}, {"g", s.branch.g}, {"c", s.branch.c}, {"n", s.branch.n}};
    out["dual"] = {{"deg", s.dual.deg_dual}, {"c", s.dual.c_dual}, {"n", s.dual.n_dual}};
    json comps = json::array();
    for (const auto& c : s.components) {
        comps.push_back({{"degree", c.degree}, {"genus", c.genus}, {"self_nodes", c.self_nodes}});
    }
    out["components"] = comps;
    json fired = json::array();
    for (const auto& f : s.fired) {
        json witness = json::array();
        for (const auto& [name, value] : f.witness) witness.push_back({name, value});
        fired.push_back({{"kind", f.kind}, {"witness", witness}});
    }
    out["battery"] = {{"fired", fired}, {"verdict", s.verdict}};
    if (s.curated) {
        out["curated"] = {{"status", s.curated->status},
                          {"source", s.curated->source},
                          {"m", s.curated->applicable_m}};
    } else {
        out["curated"] = nullptr;
    }
    return out;
}

namespace {

AnalysisSummary read_summary(const json& j) {
    AnalysisSummary s;
    s.m = j.at("graph").at("m").get<Int>();
    s.edges = edges_from(j.at("graph").at("edges"));
    if (!j.at("certificate").is_null()) s.certificate = j.at("certificate").get<std::string>();
    s.symbol = j.at("symbol").get<std::string>();
    s.irreducible = j.at("irreducible").get<bool>();
    const auto& p = j.at("pair_type");
    s.pair_type = {p.at(0).get<Int>(), p.at(1).get<Int>(), p.at(2).get<Int>(), p.at(3).get<Int>(),
                   p.at(4).get<Int>()};
    if (const auto& t = j.at("surface_type"); !t.is_null()) {
        s.surface_type = SurfaceType{t.at(0).get<Int>(), t.at(1).get<Int>(), t.at(2).get<Int>(),
                                     t.at(3).get<Int>(), t.at(4).get<Int>()};
    }
    const auto& tau = j.at("tau");
    s.tau = {tau.at(0).get<Int>(), tau.at(1).get<Int>(), tau.at(2).get<Int>(), tau.at(3).get<Int>()};
    const auto& nu = j.at("nu");
    s.nu = {nu.at(0).get<Int>(), nu.at(1).get<Int>(), nu.at(2).get<Int>()};
    s.surface = {j.at("K2").get<Int>(), j.at("e").get<Int>(), j.at("chi").get<Int>(),
                 j.at("omega").get<Int>()};
    if (!j.at("p_a_D").is_null()) s.arithmetic_genus = j.at("p_a_D").get<Int>();
    const auto& b = j.at("branch");
    s.branch = {b.at("degB").get<Int>(), b.at("g").get<Int>(), b.at("c").get<Int>(),
                b.at("n").get<Int>()};
    const auto& d = j.at("dual");
    s.dual = {d.at("deg").get<Int>(), d.at("c").get<Int>(), d.at("n").get<Int>()};
    for (const auto& c : j.at("components")) {
        s.components.push_back({c.at("degree").get<Int>(), c.at("genus").get<Int>(),
                                c.at("self_nodes").get<Int>()});
    }
    for (const auto& f : j.at("battery").at("fired")) {
        FiredSummary fs{f.at("kind").get<std::string>(), {}};
        for (const auto& w : f.at("witness")) {
            fs.witness.emplace_back(w.at(0).get<std::string>(), w.at(1).get<Int>());
        }
        s.fired.push_back(std::move(fs));
    }
    s.verdict = j.at("battery").at("verdict").get<std::string>();
    if (const auto& c = j.at("curated"); !c.is_null()) {
        s.curated = CuratedSummary{c.at("status").get<std::string>(),
                                   c.at("source").get<std::string>(), c.at("m").get<std::string>()};
    }
    return s;
}

}  // namespace

AnalysisSummary summary_from_json(const json& j) {
    try {
        return read_summary(j);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
    }
}

std::string to_text(const AnalysisSummary& s) {
    std::ostringstream out;
    out << "m             " << s.m << '\n';
    out << "edges         ";
    if (s.edges.empty()) out << "(none)";
    for (std::size_t k = 0; k < s.edges.size(); ++k) {
        out << (k ? "," : "") << s.edges[k].i << '-' << s.edges[k].j;
    }
    out << '\n';
    out << "symbol        " << s.symbol << '\n';
    out << "certificate   " << s.certificate.value_or("(too large)") << '\n';
    out << "irreducible   " << (s.irreducible ? "yes" : "no") << '\n';
    const auto& p = s.pair_type;
    out << "pair type     " << tuple_text({p.m, p.dbar, p.k, p.tau2, p.tau3}) << '\n';
    out << "surface type  ";
    if (s.surface_type) {
        const auto& t = *s.surface_type;
        out << tuple_text({t.m, t.dbar, t.k, t.gbar, t.t});
    } else {
        out << "none (negative total genus)";
    }
    out << '\n';
    out << "tau           " << tuple_text({s.tau.tau0, s.tau.tau1, s.tau.tau2, s.tau.tau3}) << '\n';
    out << "nu            " << tuple_text({s.nu.nu0, s.nu.nu1, s.nu.nu2}) << '\n';
    out << "K2 e chi      " << s.surface.K2 << ' ' << s.surface.euler << ' ' << s.surface.chi << '\n';
    out << "pinches       " << s.surface.omega << '\n';
    out << "p_a(D)        ";
    if (s.arithmetic_genus) out << *s.arithmetic_genus;
    else out << "(empty curve)";
    out << '\n';
    out << "branch curve  degB=" << s.branch.degB << " g=" << s.branch.g << " c=" << s.branch.c
        << " n=" << s.branch.n << '\n';
    out << "dual curve    deg=" << s.dual.deg_dual << " c=" << s.dual.c_dual
        << " n=" << s.dual.n_dual << '\n';
    out << "components    " << s.components.size() << '\n';
    for (const auto& c : s.components) {
        out << "  degree=" << c.degree << " genus=" << c.genus << " self_nodes=" << c.self_nodes
            << '\n';
    }
    out << "battery       " << s.verdict << '\n';
    for (const auto& f : s.fired) {
        out << "  " << f.kind;
        for (const auto& [name, value] : f.witness) out << ' ' << name << '=' << value;
        out << '\n';
    }
    out << "curated       ";
    if (s.curated) {
        const auto& when = s.curated->applicable_m;
        out << s.curated->status << (when == "*" ? " (any m)" : " (m" + when + ")") << '\n'
            << "  source: " << s.curated->source;
    } else {
        out << "none";
    }
    out << '\n';
    return out.str();
}

json catalog_line(const CatalogEntry& entry, const ObstructionReport& report) {
    json out;
    out["certificate"] = entry.form.certificate;
    out["edges"] = edges_json(entry.graph.edges());
    out["pair_type"] = pair_type_json(report.pair_type);
    out["irreducible"] = entry.irreducible;
    out["verdict"] = std::string(to_string(report.verdict));
    return out;
}

}  // namespace degenlab
