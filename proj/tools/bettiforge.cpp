#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bettiforge/analysis.hpp"
#include "bettiforge/betti.hpp"

namespace {

struct InputFlags {
    std::string family;
    std::string graph_path;
    std::string ideal_path;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void add_input_flags(CLI::App* cmd, InputFlags& in, bool allow_ideal) {
    auto* fam = cmd->add_option("--family", in.family,
                                "family spec, e.g. cycle:5 or fan:2,5");
    auto* gr = cmd->add_option("--graph", in.graph_path, "edge-list file");
    fam->excludes(gr);
    if (allow_ideal) {
        auto* id = cmd->add_option("--ideal", in.ideal_path, "ideal file");
        id->excludes(fam)->excludes(gr);
    }
}

bool has_input(const InputFlags& in) {
    return !in.family.empty() || !in.graph_path.empty() || !in.ideal_path.empty();
}

std::optional<bf::Graph> load_graph(const InputFlags& in) {
    if (!in.family.empty()) return bf::parse_family(in.family);
    if (!in.graph_path.empty()) return bf::parse_graph(slurp(in.graph_path));
    return std::nullopt;
}

bf::SquarefreeIdeal load_ideal(const InputFlags& in) {
    if (!in.ideal_path.empty()) return bf::parse_ideal(slurp(in.ideal_path));
    auto g = load_graph(in);
    if (!g) throw CLI::ValidationError("no input given");
    return bf::edge_ideal(*g);
}

void guard_size(int n, bool force) {
    if (n > 16 && !force)
        throw CLI::ValidationError(
            "ground set has " + std::to_string(n) +
            " > 16 variables; pass --force to run anyway");
}

nlohmann::ordered_json strands_json(const bf::StrandReport& rep) {
    nlohmann::ordered_json out;
    out["all_connected"] = rep.all_connected;
    out["strands"] = nlohmann::json::array();
    for (const auto& s : rep.strands)
        out["strands"].push_back({{"j", s.j},
                                  {"q", s.q},
                                  {"p", s.p},
                                  {"present", s.present},
                                  {"gaps", s.gaps},
                                  {"connected", s.connected}});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti tables, strands and subadditivity for squarefree "
                 "monomial ideals"};
    app.require_subcommand(1);

    int jobs = 0;
    if (const char* env = std::getenv("BETTIFORGE_JOBS")) jobs = std::atoi(env);
    app.add_option("--jobs", jobs, "worker threads for the parallel engine");

    unsigned field_char = 0;
    bool force = false;
    app.add_option("--char", field_char, "field characteristic (0 or prime)")
        ->capture_default_str();
    app.add_flag("--force", force, "override the 16-variable size guard");

    InputFlags in;
    std::string format = "diagram";
    bool multigraded = false;
    int n_max = 6;
    std::string theorem;

    auto* betti = app.add_subcommand("betti", "graded Betti numbers");
    add_input_flags(betti, in, true);
    betti->add_option("--format", format, "diagram|json|csv")
        ->check(CLI::IsMember({"diagram", "json", "csv"}))
        ->capture_default_str();
    betti->add_flag("--multigraded", multigraded,
                    "include multidegree entries in json/csv output");

    auto* strands = app.add_subcommand("strands", "strand connectivity report");
    add_input_flags(strands, in, true);

    auto* subadd = app.add_subcommand("subadd", "subadditivity of the t_i");
    add_input_flags(subadd, in, true);

    auto* nu = app.add_subcommand("nu", "induced matching number, minimum "
                                        "vertex cover and regularity");
    add_input_flags(nu, in, false);

    auto* classify = app.add_subcommand("classify", "graph class membership");
    add_input_flags(classify, in, false);

    auto* gen = app.add_subcommand("gen", "emit a family graph as an edge list");
    gen->add_option("spec", in.family, "family spec, e.g. jahangir:4")
        ->required();

    auto* verify = app.add_subcommand("verify", "exhaustively check a named "
                                                "statement up to --n-max");
    {
        std::string names;
        for (const auto& n : bf::known_theorems())
            names += (names.empty() ? "" : ", ") + n;
        verify->add_option("theorem", theorem, "one of: " + names)->required();
    }
    verify->add_option("--n-max", n_max, "vertex bound")->capture_default_str();

    auto* search = app.add_subcommand("search", "scan for counterexamples to "
                                                "the open questions");
    search->add_option("--n-max", n_max, "vertex bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
#ifdef _OPENMP
        if (jobs > 0) omp_set_num_threads(jobs);
#endif
        const bf::FieldSpec f{field_char};
        if (!f.is_valid())
            throw CLI::ValidationError("--char must be 0 or a prime < 2^31");

        if (gen->parsed()) {
            std::cout << bf::format_graph(bf::parse_family(in.family));
            return 0;
        }
        if (verify->parsed()) {
            const auto rep = bf::verify_theorem(theorem, n_max, f);
            std::cout << rep.to_json();
            return rep.ok() ? 0 : 1;
        }
        if (search->parsed()) {
            std::string rep = bf::search_open_questions(n_max, f);
            std::cout << rep;
            return rep.find("\"counterexample\": null") != std::string::npos &&
                           rep.find("counterexample found") == std::string::npos
                       ? 0
                       : 1;
        }
        if (nu->parsed() || classify->parsed()) {
            auto g = load_graph(in);
            if (!g) throw CLI::ValidationError("nu/classify need --graph or "
                                               "--family");
            guard_size(g->n, force);
            nlohmann::ordered_json out;
            if (nu->parsed()) {
                out["nu"] = bf::induced_matching_number(*g);
                out["min_vertex_cover"] = bf::min_vertex_cover_size(*g);
                out["reg"] = bf::hochster_betti(bf::edge_ideal(*g), f).reg();
            } else {
                out["in_G"] = bf::in_class_G(*g);
                out["in_Gprime"] = bf::in_class_Gprime(*g);
                out["chordal"] = g->is_chordal();
                out["unicyclic"] = g->is_unicyclic();
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (!has_input(in)) throw CLI::ValidationError("no input given");
        const bf::SquarefreeIdeal ideal = load_ideal(in);
        guard_size(ideal.ground_size, force);
        const bf::BettiTable table = bf::hochster_betti(ideal, f);

        if (betti->parsed()) {
            if (format == "json")
                std::cout << bf::betti_to_json(table, multigraded);
            else if (format == "csv")
                std::cout << bf::betti_to_csv(table, multigraded);
            else
                std::cout << bf::betti_diagram(table);
            return 0;
        }
        if (strands->parsed()) {
            const auto rep = bf::strand_report(table);
            std::cout << strands_json(rep).dump(2) << "\n";
            return rep.all_connected ? 0 : 1;
        }
        if (subadd->parsed()) {
            const auto rep = bf::check_subadditivity(table);
            nlohmann::ordered_json out;
            out["holds"] = rep.holds;
            out["violations"] = nlohmann::json::array();
            for (const auto& v : rep.violations)
                out["violations"].push_back({{"a", v.a},
                                             {"b", v.b},
                                             {"t_a", v.t_a},
                                             {"t_b", v.t_b},
                                             {"t_ab", v.t_ab}});
            std::cout << out.dump(2) << "\n";
            return rep.holds ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
