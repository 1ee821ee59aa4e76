#include "awrpsim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "awrpsim/report.hpp"
#include "awrpsim/sim.hpp"
#include "awrpsim/trace_io.hpp"

namespace awrpsim::cli {

namespace {

/// Bad flag values discovered after CLI11 parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

PolicyKind policy_arg(const std::string &name) {
    const auto kind = parse_policy_kind(name);
    if (!kind) throw UsageError("invalid policy '" + name + "'");
    return *kind;
}

std::vector<PolicyKind> policy_list_arg(const std::vector<std::string> &names) {
    std::vector<PolicyKind> kinds;
    for (const auto &n : names) kinds.push_back(policy_arg(n));
    return kinds;
}

TraceFormat trace_format_arg(const std::string &name) {
    const auto f = parse_trace_format(name);
    if (!f) throw UsageError("invalid trace format '" + name + "'");
    return *f;
}

ReportFormat emit_arg(const std::string &name, bool allow_plot) {
    const auto f = parse_report_format(name);
    if (!f || (!allow_plot && *f == ReportFormat::PlotData)) {
        throw UsageError("invalid output format '" + name + "'");
    }
    return *f;
}

void write_artifact(const std::string &artifact, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << artifact;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    file << artifact;
    if (!file) throw ParseError("failed writing output file '" + path + "'");
}

struct CommonOptions {
    std::string trace;
    std::string format = "plain";
    std::uint64_t sets = 1;
    unsigned block_bits = 0;
    std::string out;
    std::string emit = "text";
};

void add_trace_options(CLI::App &cmd, CommonOptions &o) {
    cmd.add_option("--trace", o.trace, "Trace file")->required();
    cmd.add_option("--format", o.format, "Trace format: plain or labeled");
    cmd.add_option("--sets", o.sets, "Number of cache sets (1 = fully associative)");
    cmd.add_option("--block-bits", o.block_bits, "Address-to-block right shift");
    cmd.add_option("--out", o.out, "Write the artifact to this file instead of stdout");
}

Trace load(const CommonOptions &o) {
    // The block shift is applied by the simulator through CacheConfig.
    return load_trace(o.trace, trace_format_arg(o.format), 0);
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Trace-driven cache replacement simulator (AWRP, LRU, FIFO, LFU, ARC, CAR, OPT)",
                 "awrpsim"};
    app.require_subcommand(1);

    // run
    CommonOptions run_opts;
    std::string run_policy;
    std::uint64_t run_capacity = 0;
    auto *run = app.add_subcommand("run", "Simulate one policy at one capacity");
    add_trace_options(*run, run_opts);
    run->add_option("--policy", run_policy, "Replacement policy")->required();
    run->add_option("--capacity", run_capacity, "Cache capacity in blocks")->required();
    run->add_option("--emit", run_opts.emit, "Output format: text, csv or json");

    // sweep
    CommonOptions sweep_opts;
    std::vector<std::string> sweep_policies;
    std::vector<std::uint64_t> sweep_capacities = kDefaultCapacities;
    std::string sweep_candidate;
    unsigned sweep_jobs = 1;
    for (const auto k : kDefaultPolicies) sweep_policies.emplace_back(policy_name(k));
    auto *sw = app.add_subcommand("sweep", "Compare policies across capacities");
    add_trace_options(*sw, sweep_opts);
    sw->add_option("--policies", sweep_policies, "Comma-separated policies")->delimiter(',');
    sw->add_option("--capacities", sweep_capacities, "Comma-separated capacities")->delimiter(',');
    sw->add_option("--candidate", sweep_candidate,
                   "Policy whose gains are reported (default AWRP, else the first policy)");
    sw->add_option("--jobs", sweep_jobs, "Worker threads")->check(CLI::PositiveNumber);
    sw->add_option("--emit", sweep_opts.emit, "Output format: text, csv, json or plotdata");

    // gen
    std::string gen_workload;
    std::uint64_t gen_n = 0, gen_universe = 1, gen_loop_len = 1, gen_seed = 0;
    double gen_s = 0.0;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen", "Generate a synthetic trace");
    gen->add_option("--workload", gen_workload, "scan, loop or zipf")->required();
    gen->add_option("--n", gen_n, "Number of accesses")->required();
    gen->add_option("--universe", gen_universe, "Distinct blocks (scan, zipf)");
    gen->add_option("--loop-len", gen_loop_len, "Cycle length (loop)");
    gen->add_option("--s", gen_s, "Zipf skew");
    gen->add_option("--seed", gen_seed, "Zipf seed");
    gen->add_option("--out", gen_out, "Output trace file")->required();

    // convert
    std::string conv_trace, conv_from = "labeled", conv_to = "plain", conv_out;
    unsigned conv_bits = 0;
    auto *conv = app.add_subcommand("convert", "Normalize a trace to plain block ids");
    conv->add_option("--trace", conv_trace, "Input trace file")->required();
    conv->add_option("--from", conv_from, "Input format: plain or labeled");
    conv->add_option("--to", conv_to, "Output format (plain)");
    conv->add_option("--block-bits", conv_bits, "Address-to-block right shift");
    conv->add_option("--out", conv_out, "Output trace file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "awrpsim: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (run->parsed()) {
            const auto kind = policy_arg(run_policy);
            const auto emit = emit_arg(run_opts.emit, false);
            CacheConfig cfg{run_capacity, run_opts.sets, run_opts.block_bits};
            cfg.validate();
            const auto trace = load(run_opts);
            const auto result = simulate(trace, kind, cfg);
            write_artifact(render(result, emit, trace.name()), run_opts.out, out);
        } else if (sw->parsed()) {
            const auto kinds = policy_list_arg(sweep_policies);
            if (kinds.empty()) throw UsageError("no policies given");
            const auto emit = emit_arg(sweep_opts.emit, true);
            PolicyKind candidate = kinds.front();
            if (!sweep_candidate.empty()) {
                candidate = policy_arg(sweep_candidate);
                if (std::find(kinds.begin(), kinds.end(), candidate) == kinds.end()) {
                    throw UsageError("candidate '" + sweep_candidate + "' is not among the swept policies");
                }
            } else if (std::find(kinds.begin(), kinds.end(), PolicyKind::AWRP) != kinds.end()) {
                candidate = PolicyKind::AWRP;
            }
            CacheConfig base{1, sweep_opts.sets, sweep_opts.block_bits};
            if (sweep_opts.sets == 0) throw ConfigError("number of sets must be at least 1");
            const auto trace = load(sweep_opts);
            const auto table = sweep(trace, kinds, sweep_capacities, base, sweep_jobs);
            const auto gains = gain_reports(table, candidate);
            write_artifact(render(table, emit, gains), sweep_opts.out, out);
        } else if (gen->parsed()) {
            WorkloadSpec spec;
            const auto w = CLI::detail::to_lower(gen_workload);
            if (w == "scan") {
                spec = ScanWorkload{gen_n, gen_universe};
            } else if (w == "loop") {
                spec = LoopWorkload{gen_n, gen_loop_len};
            } else if (w == "zipf") {
                spec = ZipfWorkload{gen_n, gen_universe, gen_s, gen_seed};
            } else {
                throw UsageError("invalid workload '" + gen_workload + "'");
            }
            const auto trace = generate(spec);
            std::ostringstream os;
            write_plain(os, trace, describe(spec));
            write_artifact(os.str(), gen_out, out);
        } else if (conv->parsed()) {
            const auto from = trace_format_arg(conv_from);
            if (trace_format_arg(conv_to) != TraceFormat::Plain) {
                throw UsageError("invalid output format '" + conv_to + "' (only plain is written)");
            }
            const auto trace = load_trace(conv_trace, from, conv_bits);
            std::ostringstream os;
            write_plain(os, trace,
                        "converted from " + conv_trace + " (" + std::string(format_name(from)) +
                            ", block_bits=" + std::to_string(conv_bits) + ")");
            write_artifact(os.str(), conv_out, out);
        }
    } catch (const UsageError &e) {
        err << "awrpsim: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConfigError &e) {
        err << "awrpsim: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError &e) {
        err << "awrpsim: " << e.what() << '\n';
        return kDataError;
    } catch (const ContractViolation &e) {
        err << "awrpsim: internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception &e) {
        err << "awrpsim: internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kOk;
}

} // namespace awrpsim::cli
