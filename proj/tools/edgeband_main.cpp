#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgeband/io.hpp"
#include "edgeband/numeric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

edgeband::ProblemInstance load_or_exit(const std::string& path) {
    return edgeband::load_instance(path);  // throws; handled in main
}

std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stod(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

int run_validate(const std::string& path) {
    auto instance = load_or_exit(path);
    auto report = edgeband::validate_instance(instance);
    std::cout << report.to_string();
    return report.ok() ? kExitOk : kExitInvalid;
}

int run_solve(const std::string& path, const std::string& out_path) {
    auto instance = load_or_exit(path);
    auto result = edgeband::solve(instance);
    std::string text = edgeband::result_to_json(result);
    if (!out_path.empty()) edgeband::write_file(out_path, text);
    std::cout << text;
    return result.diagnostics.no_downlink ? kExitDegenerate : kExitOk;
}

int run_envelope(const std::string& path, int samples, const std::string& out_path) {
    auto instance = load_or_exit(path);
    edgeband::require_valid(instance);
    auto envelope = edgeband::build_envelope(instance);
    std::string csv = edgeband::envelope_to_csv(envelope, samples);
    if (!out_path.empty()) {
        edgeband::write_file(out_path, csv);
        std::cout << "envelope: " << envelope.segments().size() << " segments, "
                  << envelope.knots().size() << " knots -> " << out_path << "\n";
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

int run_oracle(const std::string& path, const std::string& grid_arg, const std::string& trace_path,
               const std::string& out_path) {
    auto instance = load_or_exit(path);
    auto parts = parse_value_list(grid_arg);
    if (parts.size() != 2) throw CLI::ValidationError("--grid expects nM,nRho");
    edgeband::GridSpec grid;
    grid.n_m = static_cast<int>(parts[0]);
    grid.n_rho = static_cast<int>(parts[1]);

    std::string trace;
    edgeband::TraceSink sink;
    if (!trace_path.empty()) {
        trace = "M,rho,q,T_u,T_d,mAP_star,mAP\n";
        sink = [&trace](const edgeband::OracleCandidate& c) {
            using edgeband::num::fmt;
            trace += fmt(c.m) + "," + fmt(c.rho) + "," + fmt(c.q) + "," + fmt(c.t_u) + "," +
                     fmt(c.t_d) + "," + fmt(c.map_star) + "," + fmt(c.map) + "\n";
        };
    }
    auto result = edgeband::brute_force(instance, grid, sink);
    if (!trace_path.empty()) edgeband::write_file(trace_path, trace);
    std::string text = edgeband::oracle_result_to_json(result);
    if (!out_path.empty()) edgeband::write_file(out_path, text);
    std::cout << text;
    return kExitOk;
}

struct SweepArgs {
    std::string param = "B";
    double from = 0.0, to = 0.0;
    int steps = 0;
    std::string values_csv;
    bool log_spacing = false;
    std::string baselines;
    double fixed_rho = 0.5;
    double fixed_q = 0.0;
    double fixed_m = -1.0;
    std::string out_path;
};

int run_sweep_cmd(const std::string& path, const SweepArgs& args) {
    auto instance = load_or_exit(path);
    edgeband::require_valid(instance);  // per-point issues stay in-row, the base file must parse
    edgeband::SweepSpec spec;
    auto param = edgeband::sweep_param_from_name(args.param);
    if (!param) throw CLI::ValidationError("--param must be one of B, N, T_total, M_max");
    spec.param = *param;

    if (!args.values_csv.empty()) {
        spec.values = parse_value_list(args.values_csv);
    } else {
        if (args.steps < 2 || !(args.from > 0.0) || !(args.to > args.from))
            throw CLI::ValidationError("need --values or --from/--to/--steps with to > from > 0");
        if (args.log_spacing) {
            double ratio = std::log(args.to / args.from);
            for (int i = 0; i < args.steps; ++i)
                spec.values.push_back(args.from * std::exp(ratio * i / (args.steps - 1)));
        } else {
            spec.values = edgeband::num::linspace(args.from, args.to, args.steps);
        }
    }

    for (const auto& token : [&] {
             std::vector<std::string> toks;
             std::string cur;
             for (char ch : args.baselines + ",") {
                 if (ch == ',') {
                     if (!cur.empty()) toks.push_back(cur);
                     cur.clear();
                 } else {
                     cur += ch;
                 }
             }
             return toks;
         }()) {
        if (token == "none-update") {
            spec.with_none_update = true;
        } else if (token == "fixed" || token == "fixed-strategy") {
            spec.with_fixed = true;
        } else if (token != "none") {
            throw CLI::ValidationError("unknown baseline \"" + token + "\"");
        }
    }
    if (spec.with_fixed) {
        spec.fixed.rho_fix = args.fixed_rho;
        spec.fixed.q_fix = args.fixed_q > 0.0 ? args.fixed_q : instance.levels.front().q;
        spec.fixed.m_fix = args.fixed_m >= 0.0 ? args.fixed_m : instance.params.model_params / 2.0;
    }

    auto table = edgeband::run_sweep(instance, spec);
    std::string csv = edgeband::sweep_to_csv(table);
    if (!args.out_path.empty()) {
        edgeband::write_file(args.out_path, csv);
        std::cout << "sweep: " << table.rows.size() << " points -> " << args.out_path << "\n";
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-division channel splitter for end-edge model collaboration:\n"
                 "maximizes end-device mAP by balancing sensory-data upload against\n"
                 "model-parameter download."};
    app.require_subcommand(1);

    std::string instance_path;

    auto* validate = app.add_subcommand("validate", "Check an instance file");
    validate->add_option("instance", instance_path, "instance JSON")->required();

    auto* solve = app.add_subcommand("solve", "Compute the optimal allocation");
    std::string solve_out;
    solve->add_option("instance", instance_path, "instance JSON")->required();
    solve->add_option("--out", solve_out, "write the result JSON here");

    auto* envelope = app.add_subcommand("envelope", "Dump the performance envelope as CSV");
    int env_samples = 256;
    std::string env_out;
    envelope->add_option("instance", instance_path, "instance JSON")->required();
    envelope->add_option("--samples", env_samples, "uniform sample count")->check(CLI::Range(2, 10000000));
    envelope->add_option("--out", env_out, "write the CSV here");

    auto* oracle = app.add_subcommand("oracle", "Brute-force grid search (reference)");
    std::string grid_arg = "101,101";
    std::string trace_out, oracle_out;
    oracle->add_option("instance", instance_path, "instance JSON")->required();
    oracle->add_option("--grid", grid_arg, "nM,nRho grid sizes");
    oracle->add_option("--trace", trace_out, "write every feasible candidate as CSV");
    oracle->add_option("--out", oracle_out, "write the result JSON here");

    auto* sweep = app.add_subcommand("sweep", "Re-solve across a parameter range");
    SweepArgs sweep_args;
    sweep->add_option("instance", instance_path, "instance JSON")->required();
    sweep->add_option("--param", sweep_args.param, "B | N | T_total | M_max");
    sweep->add_option("--from", sweep_args.from, "range start");
    sweep->add_option("--to", sweep_args.to, "range end");
    sweep->add_option("--steps", sweep_args.steps, "number of points");
    sweep->add_option("--values", sweep_args.values_csv, "explicit comma-separated values");
    sweep->add_flag("--log", sweep_args.log_spacing, "geometric spacing for --from/--to");
    sweep->add_option("--baselines", sweep_args.baselines,
                      "comma list: none-update, fixed (alias fixed-strategy)");
    sweep->add_option("--fixed-rho", sweep_args.fixed_rho, "fixed baseline upload proportion");
    sweep->add_option("--fixed-q", sweep_args.fixed_q, "fixed baseline quantization level");
    sweep->add_option("--fixed-m", sweep_args.fixed_m, "fixed baseline parameter count");
    sweep->add_option("--out", sweep_args.out_path, "write the CSV here");

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return run_validate(instance_path);
        if (solve->parsed()) return run_solve(instance_path, solve_out);
        if (envelope->parsed()) return run_envelope(instance_path, env_samples, env_out);
        if (oracle->parsed()) return run_oracle(instance_path, grid_arg, trace_out, oracle_out);
        if (sweep->parsed()) return run_sweep_cmd(instance_path, sweep_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const edgeband::SchemaError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const edgeband::InvalidInstance& e) {
        std::cerr << e.what();
        return kExitInvalid;
    } catch (const edgeband::DegenerateDomain& e) {
        std::cerr << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
