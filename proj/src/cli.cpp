#include "evenpair/cli.hpp"

#include "evenpair/coloring.hpp"
#include "evenpair/generators.hpp"
#include "evenpair/io.hpp"
#include "evenpair/oracles.hpp"
#include "evenpair/results.hpp"
#include "evenpair/special_pair.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

namespace evenpair {

namespace {

    using nlohmann::json;

    OracleLimits limits_from_env()
    {
        if (const char* raw = std::getenv("EVENPAIR_ORACLE_MAX_N")) {
            try {
                return OracleLimits::with_max_n(std::stoi(raw));
            } catch (const std::exception&) {
                throw GraphError("EVENPAIR_ORACLE_MAX_N must be an integer");
            }
        }
        return {};
    }

    struct Timer {
        std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

        double ms() const
        {
            return std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        }
    };

    Graph load_graph(const std::string& path, const std::string& format)
    {
        GraphFileFormat f
            = (format == "edgelist") ? GraphFileFormat::EdgeList : GraphFileFormat::DimacsCol;
        return parse_graph(read_file(path), f);
    }

    void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

    int cmd_classify(std::ostream& out, const std::string& path, const std::string& format,
        bool timings)
    {
        Timer timer;
        Graph g = load_graph(path, format);
        OracleLimits lim = limits_from_env();
        auto witness = class_a_witness(g, lim);
        json outcome;
        outcome["type"] = "classification";
        outcome["in_class"] = !witness.has_value();
        if (witness)
            outcome["witness"] = witness_to_json(*witness);
        emit(out,
            make_envelope("classify", graph_digest(g), outcome,
                timings ? std::optional<double>(timer.ms()) : std::nullopt));
        return witness ? 1 : 0;
    }

    int cmd_evenpair(std::ostream& out, std::ostream& err, const std::string& path,
        const std::string& format, bool audit, bool timings)
    {
        Timer timer;
        Graph g = load_graph(path, format);
        OracleLimits lim = limits_from_env();
        try {
            EvenPairResult r = find_special_even_pair(g);
            json outcome = pair_result_to_json(r);
            outcome["type"] = "pair";
            if (audit) {
                bool ok = is_special_even_pair(g, r.pair.first, r.pair.second, lim);
                outcome["audit"] = json{{"special_even_pair", ok}};
                if (!ok)
                    err << "audit failed: returned pair is not a special even pair\n";
            }
            emit(out,
                make_envelope("evenpair", graph_digest(g), outcome,
                    timings ? std::optional<double>(timer.ms()) : std::nullopt));
            return 0;
        } catch (const NotInClassAError& e) {
            json outcome;
            outcome["type"] = "diagnostic";
            outcome["reason"] = "not_in_class";
            outcome["detail"] = e.what();
            emit(out, make_envelope("evenpair", graph_digest(g), outcome));
            err << e.what() << '\n';
            return 1;
        }
    }

    int cmd_color(std::ostream& out, std::ostream& err, const std::string& path,
        const std::string& format, bool verify_trace, bool timings)
    {
        Timer timer;
        Graph g = load_graph(path, format);
        try {
            ColorOptions options;
            if (verify_trace)
                options.verify_trace = true;
            ColorResult r = color(g, options);
            json outcome;
            outcome["type"] = "coloring";
            outcome["coloring"] = coloring_to_json(r.coloring);
            outcome["trace"] = trace_to_json(r.trace);
            outcome["proper"] = true; // established by color()
            outcome["trace_verified"] = r.trace_verified;
            VertexSet clique = max_clique(g);
            outcome["omega"] = clique.size();
            outcome["omega_matches"] = static_cast<int>(clique.size()) == r.coloring.num_colors;
            emit(out,
                make_envelope("color", graph_digest(g), outcome,
                    timings ? std::optional<double>(timer.ms()) : std::nullopt));
            return 0;
        } catch (const NotInClassAError& e) {
            json outcome;
            outcome["type"] = "diagnostic";
            outcome["reason"] = "not_in_class";
            outcome["detail"] = e.what();
            emit(out, make_envelope("color", graph_digest(g), outcome));
            err << e.what() << '\n';
            return 1;
        }
    }

    int cmd_verify(std::ostream& out, std::ostream& err, const std::string& graph_path,
        const std::string& result_path, const std::string& format)
    {
        Graph g = load_graph(graph_path, format);
        json envelope = json::parse(read_file(result_path));
        std::string problem = verify_envelope(g, envelope, limits_from_env());
        json outcome;
        outcome["type"] = "verification";
        outcome["verified"] = problem.empty();
        if (!problem.empty()) {
            outcome["detail"] = problem;
            err << problem << '\n';
        }
        emit(out, make_envelope("verify", graph_digest(g), outcome));
        return problem.empty() ? 0 : 1;
    }

    int cmd_gen(std::ostream& out, std::ostream& err, const std::string& spec_path,
        const std::string& output_path, std::optional<std::uint64_t> seed_override)
    {
        GenSpec spec = genspec_from_json(json::parse(read_file(spec_path)));
        if (seed_override)
            spec.seed = *seed_override;
        auto g = generate(spec, limits_from_env());
        if (!g) {
            err << "generator produced no instance within " << spec.max_tries << " tries\n";
            return 1;
        }
        std::string text = write_dimacs(*g);
        if (output_path.empty())
            out << text;
        else
            write_file(output_path, text);
        return 0;
    }

    int cmd_oracle(std::ostream& out, std::ostream& err, const std::string& path,
        const std::string& format, const std::string& op, int u_ext, int v_ext,
        std::uint64_t cap)
    {
        Graph g = load_graph(path, format);
        OracleLimits lim = limits_from_env();
        VertexId u = u_ext - 1;
        VertexId v = v_ext - 1;
        auto need_pair = [&]() {
            if (u_ext < 1 || v_ext < 1)
                throw GraphError("--u and --v are required (1-based) for op " + op);
        };
        json result;
        if (op == "odd-hole") {
            auto w = find_odd_hole(g, lim);
            result["found"] = w.has_value();
            if (w)
                result["witness"] = witness_to_json(*w);
        } else if (op == "antihole") {
            auto w = find_long_antihole(g, lim);
            result["found"] = w.has_value();
            if (w)
                result["witness"] = witness_to_json(*w);
        } else if (op == "prism") {
            auto w = find_prism(g, lim);
            result["found"] = w.has_value();
            if (w)
                result["witness"] = witness_to_json(*w);
        } else if (op == "class-a") {
            auto w = class_a_witness(g, lim);
            result["in_class"] = !w.has_value();
            if (w)
                result["witness"] = witness_to_json(*w);
        } else if (op == "chordless-paths") {
            need_pair();
            json paths = json::array();
            for (const Path& p : enumerate_chordless_paths(g, u, v, cap, lim)) {
                json ids = json::array();
                for (VertexId w : p.verts)
                    ids.push_back(w + 1);
                paths.push_back(ids);
            }
            result["paths"] = paths;
        } else if (op == "even-pair") {
            need_pair();
            result["even_pair"] = is_even_pair(g, u, v, lim);
        } else if (op == "two-pair") {
            need_pair();
            result["two_pair"] = is_two_pair(g, u, v, lim);
        } else if (op == "special-even-pair") {
            need_pair();
            result["special_even_pair"] = is_special_even_pair(g, u, v, lim);
        } else if (op == "snake") {
            need_pair();
            auto s = find_proper_snake(g, u, v, lim);
            result["found"] = s.has_value();
            if (s)
                result["snake"] = snake_to_json(*s);
        } else if (op == "max-clique") {
            VertexSet clique = max_clique(g);
            json ids = json::array();
            for (VertexId w : clique)
                ids.push_back(w + 1);
            result["clique"] = ids;
            result["omega"] = clique.size();
        } else if (op == "chromatic-number") {
            result["chi"] = chromatic_number_exact(g, lim);
        } else if (op == "weakly-triangulated") {
            result["weakly_triangulated"] = is_weakly_triangulated(g, lim);
        } else {
            err << "unknown oracle op: " << op << '\n';
            return 2;
        }
        json outcome;
        outcome["type"] = "oracle";
        outcome["op"] = op;
        outcome["result"] = result;
        emit(out, make_envelope("oracle", graph_digest(g), outcome));
        return 0;
    }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"even-pair contraction toolkit for graphs with no odd hole, "
                 "no long antihole and no prism"};
    app.require_subcommand(1);

    std::string path, result_path, format = "dimacs", output_path, op;
    bool audit = false, verify_trace = false, timings = false;
    int u_ext = 0, v_ext = 0;
    std::uint64_t cap = 100000;
    std::optional<std::uint64_t> seed_override;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "input format: dimacs or edgelist")
            ->check(CLI::IsMember({"dimacs", "edgelist"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "report class membership with a witness");
    classify->add_option("file", path, "graph file")->required();
    add_format(classify);
    classify->add_flag("--timings", timings, "include timings in the envelope");

    CLI::App* pair_cmd = app.add_subcommand("evenpair", "find a special even pair");
    pair_cmd->add_option("file", path, "graph file")->required();
    add_format(pair_cmd);
    pair_cmd->add_flag("--audit", audit, "re-check the pair with the exhaustive oracle");
    pair_cmd->add_flag("--timings", timings, "include timings in the envelope");

    CLI::App* colorcmd = app.add_subcommand("color", "optimal coloring by even-pair contraction");
    colorcmd->add_option("file", path, "graph file")->required();
    add_format(colorcmd);
    colorcmd->add_flag("--verify-trace", verify_trace,
        "run the class witness oracle on every intermediate graph");
    colorcmd->add_flag("--timings", timings, "include timings in the envelope");

    CLI::App* verify = app.add_subcommand("verify", "re-check a result envelope");
    verify->add_option("file", path, "graph file")->required();
    verify->add_option("result", result_path, "result envelope JSON")->required();
    add_format(verify);

    CLI::App* gen = app.add_subcommand("gen", "generate an instance from a spec");
    gen->add_option("spec", path, "generator spec JSON")->required();
    gen->add_option("-o,--output", output_path, "write DIMACS here instead of stdout");
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt = gen->add_option("--seed", seed_value, "override the spec seed");

    CLI::App* oracle = app.add_subcommand("oracle", "run one exhaustive oracle");
    oracle->add_option("file", path, "graph file")->required();
    add_format(oracle);
    oracle->add_option("--op", op, "oracle name")->required();
    oracle->add_option("--u", u_ext, "first vertex (1-based)");
    oracle->add_option("--v", v_ext, "second vertex (1-based)");
    oracle->add_option("--cap", cap, "chordless path enumeration cap");

    std::vector<const char*> argv;
    argv.push_back("evenpair");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(classify))
            return cmd_classify(out, path, format, timings);
        if (app.got_subcommand(pair_cmd))
            return cmd_evenpair(out, err, path, format, audit, timings);
        if (app.got_subcommand(colorcmd))
            return cmd_color(out, err, path, format, verify_trace, timings);
        if (app.got_subcommand(verify))
            return cmd_verify(out, err, path, result_path, format);
        if (app.got_subcommand(gen)) {
            if (*seed_opt)
                seed_override = seed_value;
            return cmd_gen(out, err, path, output_path, seed_override);
        }
        if (app.got_subcommand(oracle))
            return cmd_oracle(out, err, path, format, op, u_ext, v_ext, cap);
    } catch (const OracleLimitError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "malformed JSON: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace evenpair
