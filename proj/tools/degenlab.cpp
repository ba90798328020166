// degenlab: invariants and obstructions for line arrangements inside the
// double curve of a plane arrangement.
//
// Exit codes: 0 success, 1 bad input, 2 capacity limit, 3 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "degenlab/report.hpp"

namespace {

using namespace degenlab;
using json = nlohmann::ordered_json;

struct InputOptions {
    Int m = 0;
    std::string edges;
    std::string symbol;
    std::string file;
    CLI::Option* m_opt = nullptr;
    CLI::Option* edges_opt = nullptr;
    CLI::Option* symbol_opt = nullptr;
    CLI::Option* file_opt = nullptr;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    in.m_opt = cmd->add_option("--m", in.m, "number of planes");
    in.edges_opt = cmd->add_option("--edges", in.edges, "edge list such as \"1-2,2-3\"");
    in.symbol_opt = cmd->add_option("--symbol", in.symbol, "type symbol such as \"(1,2,1|4,1)\"");
    in.file_opt = cmd->add_option("--file", in.file, "edge-list file, may carry an m=<int> line");
    in.edges_opt->excludes(in.symbol_opt)->excludes(in.file_opt);
    in.symbol_opt->excludes(in.file_opt);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

PlaneCount resolve_m(const InputOptions& in, std::optional<Int> from_text) {
    if (in.m_opt->count() && from_text && *from_text != in.m) {
        throw Error(ErrorKind::InvalidPlaneCount, "--m " + std::to_string(in.m) +
                                                      " disagrees with m=" +
                                                      std::to_string(*from_text) + " in the input");
    }
    if (in.m_opt->count()) return PlaneCount(in.m);
    if (from_text) return PlaneCount(*from_text);
    throw Error(ErrorKind::InvalidPlaneCount, "the number of planes is required (--m)");
}

ArrangementGraph load_graph(const InputOptions& in) {
    if (in.symbol_opt->count()) {
        return graph_from_symbol(parse_type_symbol(in.symbol), resolve_m(in, std::nullopt));
    }
    std::string text;
    if (in.file_opt->count()) {
        text = read_file(in.file);
    } else if (in.edges_opt->count()) {
        text = in.edges;
    } else {
        throw Error(ErrorKind::ParseError, "give the arrangement with --edges, --symbol or --file");
    }
    const EdgeListText parsed = parse_edge_list(text);
    return validate_graph(parsed.edges, resolve_m(in, parsed.m));
}

PairType parse_pair_type(const std::string& text) {
    std::vector<Int> xs;
    std::string cleaned;
    for (char c : text) cleaned += (c == '(' || c == ')') ? ' ' : c;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        while (pos < cleaned.size() && (cleaned[pos] == ' ' || cleaned[pos] == ',')) ++pos;
        if (pos == cleaned.size()) break;
        std::size_t used = 0;
        try {
            xs.push_back(std::stoll(cleaned.substr(pos), &used));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "expected an integer in pair type", pos);
        }
        pos += used;
    }
    if (xs.size() != 5) {
        throw Error(ErrorKind::ParseError, "a pair type has five entries m,dbar,k,tau2,tau3");
    }
    return PairType{xs[0], xs[1], xs[2], xs[3], xs[4]};
}

std::string pair_type_text(const PairType& p) {
    return "(" + std::to_string(p.m) + "," + std::to_string(p.dbar) + "," + std::to_string(p.k) +
           "," + std::to_string(p.tau2) + "," + std::to_string(p.tau3) + ")";
}

std::string edges_text(const std::vector<Edge>& edges) {
    std::string out;
    for (const auto& e : edges) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.i) + "-" + std::to_string(e.j);
    }
    return out;
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& e : edges) out.push_back({e.i, e.j});
    return out;
}

int exit_code(ErrorKind kind) {
    if (is_capacity_error(kind)) return 2;
    if (kind == ErrorKind::InternalInconsistency) return 3;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants and degeneration obstructions for line arrangements in plane "
                 "arrangements"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    InputOptions analyze_in;
    auto* analyze_cmd = app.add_subcommand("analyze", "all invariants and the battery for a pair");
    add_input_options(analyze_cmd, analyze_in);

    InputOptions battery_in;
    auto* battery_cmd = app.add_subcommand("battery", "obstruction battery and curated verdict");
    add_input_options(battery_cmd, battery_in);

    Int enum_m = 0;
    bool irreducible_only = false;
    bool obstructed_only = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "all classes of subsets of K_m (m <= 6)");
    enum_cmd->add_option("--m", enum_m, "number of planes")->required();
    enum_cmd->add_flag("--irreducible-only", irreducible_only, "keep irreducible pairs");
    enum_cmd->add_flag("--obstructed-only", obstructed_only, "keep battery-obstructed pairs");

    int catalog_edges = 4;
    Int catalog_m = 0;
    auto* catalog_cmd = app.add_subcommand("catalog", "abstract graphs with few edges");
    catalog_cmd->add_option("--max-edges", catalog_edges, "edge bound (<= 8)")->capture_default_str();
    auto* catalog_m_opt = catalog_cmd->add_option("--m", catalog_m, "evaluate pair types at this m");

    std::string search_text;
    auto* search_cmd = app.add_subcommand("search-type", "find an irreducible pair of a type");
    search_cmd->add_option("--type", search_text, "m,dbar,k,tau2,tau3")->required();

    int collision_edges = 4;
    Int collision_m = 0;
    auto* collision_cmd = app.add_subcommand("collisions", "pair types shared by several graphs");
    collision_cmd->add_option("--max-edges", collision_edges, "edge bound (<= 8)")
        ->capture_default_str();
    collision_cmd->add_option("--m", collision_m, "number of planes")->required();

    // Options given after a subcommand name belong to the subcommand, so
    // --format is accepted there as well.
    for (auto* cmd : {analyze_cmd, battery_cmd, enum_cmd, catalog_cmd, search_cmd, collision_cmd}) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    const bool as_json = format == "json";

    try {
        if (analyze_cmd->parsed()) {
            const auto summary = analyze(load_graph(analyze_in));
            if (as_json) std::cout << to_json(summary).dump() << '\n';
            else std::cout << to_text(summary);
        } else if (battery_cmd->parsed()) {
            const auto summary = analyze(load_graph(battery_in));
            const json j = to_json(summary);
            if (as_json) {
                json out = {{"pair_type", j["pair_type"]},
                            {"fired", j["battery"]["fired"]},
                            {"verdict", j["battery"]["verdict"]},
                            {"curated", j["curated"]}};
                std::cout << out.dump() << '\n';
            } else {
                std::cout << "pair type " << pair_type_text(summary.pair_type) << '\n';
                std::cout << "verdict   " << summary.verdict << '\n';
                for (const auto& f : summary.fired) {
                    std::cout << "  " << f.kind;
                    for (const auto& [name, value] : f.witness) std::cout << ' ' << name << '=' << value;
                    std::cout << '\n';
                }
                std::cout << "curated   "
                          << (summary.curated ? summary.curated->status + " (" +
                                                    summary.curated->source + ")"
                                              : std::string("none"))
                          << '\n';
            }
        } else if (enum_cmd->parsed()) {
            for (const auto& entry : enumerate_arrangements(PlaneCount(enum_m))) {
                if (irreducible_only && !entry.irreducible) continue;
                const auto report = run_battery(entry.graph);
                if (obstructed_only && report.verdict != Verdict::Obstructed) continue;
                if (as_json) {
                    std::cout << catalog_line(entry, report).dump() << '\n';
                } else {
                    std::cout << entry.form.certificate << '\t' << pair_type_text(report.pair_type)
                              << '\t' << (entry.irreducible ? "irreducible" : "reducible") << '\t'
                              << to_string(report.verdict) << '\n';
                }
            }
        } else if (catalog_cmd->parsed()) {
            std::optional<PlaneCount> m;
            if (catalog_m_opt->count()) m = PlaneCount(catalog_m);
            for (const auto& c : enumerate_graphs_up_to(catalog_edges)) {
                if (m && c.vertex_count() > m->value()) continue;
                if (as_json) {
                    json line = {{"certificate", c.form.certificate},
                                 {"edges", edges_json(c.form.edges)},
                                 {"symbol", c.symbol.to_string()}};
                    if (m) {
                        const auto g = c.embed(*m);
                        const auto report = run_battery(g);
                        line["pair_type"] = {m->value(), c.edge_count, c.k, c.tau2, c.tau3};
                        line["irreducible"] = is_irreducible_pair(g);
                        line["verdict"] = std::string(to_string(report.verdict));
                    } else {
                        line["pair_type"] = {"m", c.edge_count, c.k, c.tau2, c.tau3};
                    }
                    std::cout << line.dump() << '\n';
                } else {
                    const std::string mtext = m ? std::to_string(m->value()) : "m";
                    std::cout << c.symbol.to_string() << '\t' << c.form.certificate << "\t("
                              << mtext << ',' << c.edge_count << ',' << c.k << ',' << c.tau2
                              << ',' << c.tau3 << ")\n";
                }
            }
        } else if (search_cmd->parsed()) {
            const PairType target = parse_pair_type(search_text);
            const auto found = exists_pair_of_type(target);
            if (as_json) {
                json out = {{"type", {target.m, target.dbar, target.k, target.tau2, target.tau3}},
                            {"found", found.has_value()}};
                out["graph"] = found ? graph_to_json(*found) : json(nullptr);
                std::cout << out.dump() << '\n';
            } else if (found) {
                std::cout << "found " << edges_text(found->edges()) << '\n';
            } else {
                std::cout << "none\n";
            }
        } else if (collision_cmd->parsed()) {
            for (const auto& c : find_type_collisions(collision_edges, PlaneCount(collision_m))) {
                if (as_json) {
                    json out = {{"pair_type", {c.type.m, c.type.dbar, c.type.k, c.type.tau2,
                                               c.type.tau3}},
                                {"certificates", c.certificates}};
                    std::cout << out.dump() << '\n';
                } else {
                    std::cout << pair_type_text(c.type);
                    for (const auto& cert : c.certificates) std::cout << '\t' << cert;
                    std::cout << '\n';
                }
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const nlohmann::ordered_json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
