#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "statmc/arq.hpp"
#include "statmc/csv.hpp"
#include "statmc/errors.hpp"
#include "statmc/pendulum.hpp"
#include "statmc/percolation.hpp"
#include "statmc/process.hpp"
#include "statmc/random_walk.hpp"
#include "statmc/scattering.hpp"
#include "statmc/stats.hpp"
#include "statmc/symbol_channel.hpp"
#include "statmc/version.hpp"

namespace statmc::cli {

namespace {

using KeyValue = std::pair<std::string, std::string>;

// ---------------------------------------------------------------- formatting

// Shortest round-trip formatting so a replayed manifest parses back to
// the identical double.
std::string fmt_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt_u64(std::uint64_t v) { return std::to_string(v); }

// ------------------------------------------------------------------- parsing

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& part : split(text, ','))
        out.push_back(parse_real(part));
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& part : split(text, ',')) {
        std::uint64_t v = 0;
        const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (res.ec != std::errc{} || res.ptr != part.data() + part.size())
            throw std::invalid_argument("not a nonnegative integer: '" + part + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<ChargeCenter> parse_centers(const std::string& text) {
    std::vector<ChargeCenter> centers;
    for (const auto& triple : split(text, ';')) {
        const auto fields = parse_real_list(triple);
        if (fields.size() != 3)
            throw std::invalid_argument("center '" + triple + "' is not x,y,strength");
        centers.push_back({{fields[0], fields[1]}, fields[2]});
    }
    return centers;
}

ChannelMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<double>> rows;
    for (const auto& row_text : split(text, ';'))
        rows.push_back(parse_real_list(row_text));
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<double> entries;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("matrix rows have unequal lengths");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ChannelMatrix(rows.size(), cols, std::move(entries));
}

// --------------------------------------------------------------- CSV blocks

void write_histogram_block(std::ostream& out, const Histogram& h) {
    csv::write_histogram(out, h);
    out << "underflow,overflow\n";
    csv::Row(out).integer(h.underflow()).integer(h.overflow());
}

// ------------------------------------------------------------ command state

struct CommandContext {
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string out = "-";
};

struct CommandResult {
    std::string csv;
    std::vector<KeyValue> manifest;
};

void add_common(CLI::App* sub, CommandContext& ctx) {
    sub->add_option("--seed", ctx.seed, "root seed for all randomness")
        ->capture_default_str()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--threads", ctx.threads,
                    "worker threads for trial-parallel commands (output is "
                    "identical for every value)")
        ->capture_default_str()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--out", ctx.out,
                    "output CSV path ('-' for stdout); a <path>.manifest "
                    "key=value file is written next to it")
        ->capture_default_str()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

CLI::Option* take_last(CLI::Option* opt) {
    return opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void common_manifest(std::vector<KeyValue>& manifest, const CommandContext& ctx) {
    manifest.emplace_back("seed", fmt_u64(ctx.seed));
    manifest.emplace_back("threads", std::to_string(ctx.threads));
}

// -------------------------------------------------------------------- walk

struct WalkArgs {
    CommandContext ctx;
    std::uint64_t steps = 100;
    std::string curve;  // comma list of N values; empty = per-trial mode
    std::uint64_t trials = 10000;
};

CommandResult run_walk(const WalkArgs& args) {
    CommandResult result;
    std::ostringstream out;
    if (!args.curve.empty()) {
        const auto ns = parse_u64_list(args.curve);
        const auto curve = msd_curve(ns, args.trials, args.ctx.seed, args.ctx.threads);
        out << "N,msd,stderr\n";
        for (const auto& pt : curve)
            csv::Row(out).integer(pt.steps).real(pt.msd).real(pt.msd_stderr);
    } else {
        const auto res = ensemble(WalkConfig{args.steps, args.trials, args.ctx.seed},
                                  0, args.ctx.threads);
        out << "trial,z\n";
        for (std::size_t i = 0; i < res.final_positions.size(); ++i)
            csv::Row(out).integer(std::uint64_t(i)).signed_integer(res.final_positions[i]);
    }
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    if (!args.curve.empty())
        result.manifest.emplace_back("curve", args.curve);
    else
        result.manifest.emplace_back("steps", fmt_u64(args.steps));
    result.manifest.emplace_back("trials", fmt_u64(args.trials));
    return result;
}

// ---------------------------------------------------------------- pendulum

struct PendulumArgs {
    CommandContext ctx;
    PendulumParams params;
    std::size_t bins = 50;
    bool trajectory = false;
    double hist_lo = 0.0, hist_hi = 0.0;
    bool has_hist_lo = false, has_hist_hi = false;
};

CommandResult run_pendulum(const PendulumArgs& args) {
    PendulumParams params = args.params;
    params.seed = args.ctx.seed;
    const auto traj = simulate(params);

    std::ostringstream out;
    if (args.trajectory) {
        out << "t,phi,omega\n";
        for (const auto& s : traj) csv::Row(out).real(s.t).real(s.phi).real(s.omega);
    } else {
        if (args.has_hist_lo != args.has_hist_hi)
            throw std::invalid_argument("pendulum: give both --hist-lo and --hist-hi");
        std::optional<std::pair<double, double>> range;
        if (args.has_hist_lo) range = std::make_pair(args.hist_lo, args.hist_hi);
        const auto dist = angle_distribution(traj, params, args.bins, range);
        write_histogram_block(out, dist.histogram);
        out << '\n';
        csv::write_summary(out, dist.stats);
    }

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("gravity", fmt_real(params.gravity));
    m.emplace_back("length", fmt_real(params.length));
    m.emplace_back("mass", fmt_real(params.mass));
    m.emplace_back("damping", fmt_real(params.damping));
    m.emplace_back("drag-coeff", fmt_real(params.drag_coeff));
    m.emplace_back("wind-mean", fmt_real(params.wind_mean));
    m.emplace_back("wind-halfwidth", fmt_real(params.wind_halfwidth));
    m.emplace_back("wind-refresh", fmt_real(params.wind_refresh));
    m.emplace_back("dt", fmt_real(params.dt));
    m.emplace_back("t-total", fmt_real(params.t_total));
    m.emplace_back("burn-in", fmt_real(params.burn_in));
    m.emplace_back("bins", std::to_string(args.bins));
    m.emplace_back("trajectory", args.trajectory ? "true" : "false");
    if (args.has_hist_lo) {
        m.emplace_back("hist-lo", fmt_real(args.hist_lo));
        m.emplace_back("hist-hi", fmt_real(args.hist_hi));
    }
    return result;
}

// ----------------------------------------------------------------- scatter

struct ScatterArgs {
    CommandContext ctx;
    std::string centers = "0,1,1;0,-1,1";
    ScatteringConfig config;
    std::size_t bins = 50;
    bool with_histogram = false;
};

const char* status_name(TrajectoryStatus status) {
    switch (status) {
        case TrajectoryStatus::escaped: return "escaped";
        case TrajectoryStatus::max_steps_exceeded: return "max_steps";
        case TrajectoryStatus::singular: return "singular";
    }
    return "unknown";
}

CommandResult run_scatter(const ScatterArgs& args) {
    ScatteringConfig cfg = args.config;
    cfg.centers = parse_centers(args.centers);
    cfg.seed = args.ctx.seed;
    const auto res = sweep(cfg, args.bins, args.ctx.threads);

    std::ostringstream out;
    out << "b,alpha,energy_drift,status\n";
    for (const auto& o : res.outcomes)
        csv::Row(out).real(o.b).real(o.alpha).real(o.energy_drift).raw(
            status_name(o.status));
    if (args.with_histogram) {
        out << '\n';
        write_histogram_block(out, res.alpha_histogram);
    }

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("centers", args.centers);
    m.emplace_back("mass", fmt_real(cfg.mass));
    m.emplace_back("speed", fmt_real(cfg.speed));
    m.emplace_back("start-x", fmt_real(cfg.start_x));
    m.emplace_back("stop-x", fmt_real(cfg.stop_x));
    m.emplace_back("b-min", fmt_real(cfg.b_min));
    m.emplace_back("b-max", fmt_real(cfg.b_max));
    m.emplace_back("dt", fmt_real(cfg.dt));
    m.emplace_back("max-steps", fmt_u64(cfg.max_steps));
    m.emplace_back("particles", fmt_u64(cfg.particles));
    m.emplace_back("energy-tolerance", fmt_real(cfg.energy_tolerance));
    m.emplace_back("bins", std::to_string(args.bins));
    m.emplace_back("histogram", args.with_histogram ? "true" : "false");
    return result;
}

// ------------------------------------------------------------- percolation

struct PercolationArgs {
    CommandContext ctx;
    std::size_t side = 64;
    std::string p_list = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5,0.55,0.6,"
                         "0.65,0.7,0.75,0.8,0.85,0.9,0.95,1";
    std::uint64_t trials = 1000;
    bool dump_grid = false;
    bool dump_labels = false;
};

CommandResult run_percolation(const PercolationArgs& args) {
    const auto ps = parse_real_list(args.p_list);
    std::ostringstream out;
    if (args.dump_grid || args.dump_labels) {
        if (ps.empty()) throw std::invalid_argument("percolation: need a p value");
        Rng rng = Rng::from_stream(args.ctx.seed, 0);
        const Grid grid = generate_grid(args.side, ps.front(), rng);
        if (args.dump_grid) {
            for (std::size_t r = 0; r < grid.side; ++r) {
                for (std::size_t c = 0; c < grid.side; ++c)
                    out << (grid.at(r, c) ? '1' : '0');
                out << '\n';
            }
        } else {
            const auto labeling = label_clusters(grid);
            for (std::size_t r = 0; r < labeling.side; ++r) {
                for (std::size_t c = 0; c < labeling.side; ++c) {
                    if (c) out << ' ';
                    out << labeling.at(r, c);
                }
                out << '\n';
            }
        }
    } else {
        const auto curve = sweep_spanning_probability(args.side, ps, args.trials,
                                                      args.ctx.seed, args.ctx.threads);
        out << "p,P,stderr,trials\n";
        for (const auto& pt : curve)
            csv::Row(out)
                .real(pt.p)
                .real(pt.spanning_probability)
                .real(pt.std_err)
                .integer(pt.trials);
    }

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("side", std::to_string(args.side));
    m.emplace_back("p", args.p_list);
    m.emplace_back("trials", fmt_u64(args.trials));
    m.emplace_back("dump-grid", args.dump_grid ? "true" : "false");
    m.emplace_back("dump-labels", args.dump_labels ? "true" : "false");
    return result;
}

// ----------------------------------------------------------------- process

struct ProcessArgs {
    CommandContext ctx;
    std::string durations = "1.6,2.7,1.4,3.8,2.6";
    std::string success_probs = "0.6,0.7,0.4,0.8,0.6";
    std::uint64_t trials = 100000;
    bool per_trial = false;
};

CommandResult run_process(const ProcessArgs& args) {
    const ProcessSpec spec{parse_real_list(args.durations),
                           parse_real_list(args.success_probs)};
    const auto est = estimate(spec, args.trials, args.ctx.seed, args.ctx.threads);
    const auto moments = analytic_moments(spec);

    std::ostringstream out;
    if (args.per_trial) {
        out << "trial,total\n";
        for (std::size_t i = 0; i < est.totals.size(); ++i)
            csv::Row(out).integer(std::uint64_t(i)).real(est.totals[i]);
        out << '\n';
    }
    out << "mean,variance,std,stderr,analytic_mean,analytic_variance\n";
    csv::Row(out)
        .real(est.stats.mean)
        .real(est.stats.variance)
        .real(est.stats.std_dev)
        .real(est.stats.std_err)
        .real(moments.mean)
        .real(moments.variance);

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("durations", args.durations);
    m.emplace_back("success-probs", args.success_probs);
    m.emplace_back("trials", fmt_u64(args.trials));
    m.emplace_back("per-trial", args.per_trial ? "true" : "false");
    return result;
}

// --------------------------------------------------------------------- arq

struct ArqArgs {
    CommandContext ctx;
    arq::ArqConfig config;
    std::string model = "abstract";
};

arq::ErrorModel parse_model(const std::string& name) {
    if (name == "abstract") return arq::ErrorModel::abstract;
    if (name == "bit_exact") return arq::ErrorModel::bit_exact;
    throw std::invalid_argument("unknown error model '" + name +
                                "' (expected abstract or bit_exact)");
}

CommandResult run_arq(const ArqArgs& args) {
    arq::ArqConfig cfg = args.config;
    cfg.model = parse_model(args.model);
    cfg.seed = args.ctx.seed;
    const auto res = arq::simulate(cfg);

    std::ostringstream out;
    out << "p,D,N_K,t,retransmissions,v,undetected\n";
    csv::Row(out)
        .real(cfg.bit_error_p)
        .integer(std::uint64_t(cfg.frame_len))
        .integer(cfg.n_frames)
        .integer(res.total_tacts)
        .integer(res.retransmissions)
        .real(res.throughput)
        .integer(res.undetected_error_frames);

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("frame-len", std::to_string(cfg.frame_len));
    m.emplace_back("bit-error-p", fmt_real(cfg.bit_error_p));
    m.emplace_back("frames", fmt_u64(cfg.n_frames));
    m.emplace_back("model", args.model);
    m.emplace_back("quantize", std::to_string(cfg.quantize));
    m.emplace_back("max-attempts", fmt_u64(cfg.max_attempts_per_frame));
    return result;
}

// --------------------------------------------------------------- arq-sweep

struct ArqSweepArgs {
    CommandContext ctx;
    double bit_error_p = 0.05;
    unsigned d_min = 2;
    unsigned d_max = 16;
    std::uint64_t frames = 100000;
};

CommandResult run_arq_sweep(const ArqSweepArgs& args) {
    const auto res = arq::sweep_frame_length(args.bit_error_p, args.d_min, args.d_max,
                                             args.frames, args.ctx.seed,
                                             args.ctx.threads);
    if (!res.skipped.empty()) {
        std::cerr << "arq-sweep: skipping inadmissible frame lengths (p*D >= 1):";
        for (auto d : res.skipped) std::cerr << ' ' << d;
        std::cerr << '\n';
    }

    std::ostringstream out;
    out << "D,v_sim,v_analytic\n";
    for (const auto& pt : res.points)
        csv::Row(out)
            .integer(std::uint64_t(pt.frame_len))
            .real(pt.v_sim)
            .real(pt.v_analytic);

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("bit-error-p", fmt_real(args.bit_error_p));
    m.emplace_back("d-min", std::to_string(args.d_min));
    m.emplace_back("d-max", std::to_string(args.d_max));
    m.emplace_back("frames", fmt_u64(args.frames));
    return result;
}

// ---------------------------------------------------------------- capacity

struct CapacityArgs {
    CommandContext ctx;
    std::string p_list = "0.001,0.01,0.02,0.05";
    unsigned d_max = 64;
    std::uint64_t frames = 100000;
};

CommandResult run_capacity(const CapacityArgs& args) {
    const auto curve = arq::capacity_curve(parse_real_list(args.p_list), args.d_max,
                                           args.frames, args.ctx.seed,
                                           args.ctx.threads);
    std::ostringstream out;
    out << "p,C_emp,C_bsc,D_opt\n";
    for (const auto& pt : curve)
        csv::Row(out)
            .real(pt.p)
            .real(pt.c_empirical)
            .real(pt.c_bsc)
            .integer(std::uint64_t(pt.d_opt));

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("p-list", args.p_list);
    m.emplace_back("d-max", std::to_string(args.d_max));
    m.emplace_back("frames", fmt_u64(args.frames));
    return result;
}

// ---------------------------------------------------------- symbol-channel

struct SymbolChannelArgs {
    CommandContext ctx;
    std::string source = "0.3,0.25,0.45";
    std::string matrix = "0.7,0.1,0.1,0.1;0.1,0.8,0.1,0;0.2,0.2,0.5,0.1";
    std::uint64_t trials = 100000;
    std::size_t stability_window = 200;
    double stability_tolerance = 0.02;
    std::uint64_t stride = 100;
};

CommandResult run_symbol_channel(const SymbolChannelArgs& args) {
    const SourceDist source{parse_real_list(args.source)};
    const ChannelMatrix matrix = parse_matrix(args.matrix);
    const auto stats = estimate_error_rate(source, matrix, args.trials, args.ctx.seed,
                                           args.stability_window,
                                           args.stability_tolerance, args.stride);

    std::ostringstream out;
    out << "n,error_rate\n";
    for (const auto& [n, rate] : stats.running) csv::Row(out).integer(n).real(rate);
    out << '\n';
    out << "input,output,count\n";
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j)
            csv::Row(out)
                .integer(std::uint64_t(i))
                .integer(std::uint64_t(j))
                .integer(stats.confusion[i * matrix.cols() + j]);
    out << '\n';
    out << "trials,error_rate,erasure_rate,analytic_error_rate,"
           "analytic_erasure_rate,first_stable_n\n";
    csv::Row(out)
        .integer(stats.n_sent)
        .real(stats.error_rate)
        .real(double(stats.n_erasures) / double(stats.n_sent))
        .real(analytic_error_rate(source, matrix))
        .real(analytic_erasure_rate(source, matrix))
        .integer(stats.first_stable_n);

    CommandResult result;
    result.csv = out.str();
    common_manifest(result.manifest, args.ctx);
    auto& m = result.manifest;
    m.emplace_back("source", args.source);
    m.emplace_back("matrix", args.matrix);
    m.emplace_back("trials", fmt_u64(args.trials));
    m.emplace_back("stability-window", std::to_string(args.stability_window));
    m.emplace_back("stability-tolerance", fmt_real(args.stability_tolerance));
    m.emplace_back("stride", fmt_u64(args.stride));
    return result;
}

// ----------------------------------------------------------------- wiring

void emit(const CommandResult& result, const std::string& subcommand,
          const CommandContext& ctx) {
    if (ctx.out == "-") {
        std::cout << result.csv;
        return;
    }
    {
        std::ofstream file(ctx.out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file " + ctx.out);
        file << result.csv;
    }
    const std::string manifest_path = ctx.out + ".manifest";
    std::ofstream manifest(manifest_path, std::ios::binary);
    if (!manifest)
        throw std::invalid_argument("cannot open manifest file " + manifest_path);
    manifest << "# statmc " << kVersion << " manifest\n";
    manifest << "# subcommand=" << subcommand << '\n';
    manifest << "# out=" << ctx.out << '\n';
    for (const auto& [key, value] : result.manifest)
        manifest << key << '=' << value << '\n';
}

struct ConfigEntry {
    std::size_t line = 0;
    std::string key;
    std::string value;
};

std::vector<ConfigEntry> read_config_entries(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot read config file " + path);
    std::vector<ConfigEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        line_no += 1;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        // trim
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string body = line.substr(begin, end - begin + 1);
        const auto eq = body.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("config file " + path + " line " +
                                        std::to_string(line_no) +
                                        ": expected key=value");
        entries.push_back({line_no, body.substr(0, eq), body.substr(eq + 1)});
    }
    return entries;
}

int run_impl(int argc, const char* const* argv) {
    CLI::App app{"statmc: deterministic Monte Carlo experiments with CSV output"};
    app.set_version_flag("--version", std::string("statmc ") + kVersion);
    app.require_subcommand(1);
    app.footer("Every subcommand accepts --config <file> with key=value lines\n"
               "(keys are flag names without dashes, '#' starts a comment).\n"
               "Each file output gets a replayable <out>.manifest next to it.");

    WalkArgs walk_args;
    auto* walk_cmd = app.add_subcommand("walk", "1D symmetric random walk ensemble");
    add_common(walk_cmd, walk_args.ctx);
    take_last(walk_cmd->add_option("--steps", walk_args.steps,
                                   "steps N per walk (per-trial z output)")
                  ->capture_default_str());
    take_last(walk_cmd->add_option("--curve", walk_args.curve,
                                   "comma list of N values; emits the msd curve"));
    take_last(walk_cmd->add_option("--trials", walk_args.trials, "walks per N")
                  ->capture_default_str());

    PendulumArgs pendulum_args;
    auto* pendulum_cmd = app.add_subcommand(
        "pendulum", "pendulum in a randomly fluctuating air stream");
    add_common(pendulum_cmd, pendulum_args.ctx);
    {
        auto& p = pendulum_args.params;
        take_last(pendulum_cmd->add_option("--gravity", p.gravity, "m/s^2")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--length", p.length, "m")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--mass", p.mass, "kg")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--damping", p.damping, "1/s")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--drag-coeff", p.drag_coeff,
                                           "force = c u^2, N s^2/m^2")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--wind-mean", p.wind_mean, "u0, m/s")
                      ->capture_default_str());
        take_last(pendulum_cmd
                      ->add_option("--wind-halfwidth", p.wind_halfwidth,
                                   "du: u sampled from [u0-du, u0+du]")
                      ->capture_default_str());
        take_last(pendulum_cmd
                      ->add_option("--wind-refresh", p.wind_refresh,
                                   "wind resample interval, s")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--dt", p.dt, "integration step, s")
                      ->capture_default_str());
        take_last(pendulum_cmd->add_option("--t-total", p.t_total, "horizon, s")
                      ->capture_default_str());
        take_last(pendulum_cmd
                      ->add_option("--burn-in", p.burn_in,
                                   "discard before statistics, s")
                      ->capture_default_str());
    }
    take_last(pendulum_cmd->add_option("--bins", pendulum_args.bins, "histogram bins")
                  ->capture_default_str());
    take_last(pendulum_cmd->add_flag("--trajectory", pendulum_args.trajectory,
                                     "emit t,phi,omega instead of the distribution"));
    take_last(pendulum_cmd->add_option("--hist-lo", pendulum_args.hist_lo,
                                       "histogram range override (with --hist-hi)"));
    take_last(pendulum_cmd->add_option("--hist-hi", pendulum_args.hist_hi,
                                       "histogram range override (with --hist-lo)"));

    ScatterArgs scatter_args;
    auto* scatter_cmd = app.add_subcommand(
        "scatter", "charged-particle deflection in a repulsive field");
    add_common(scatter_cmd, scatter_args.ctx);
    take_last(scatter_cmd
                  ->add_option("--centers", scatter_args.centers,
                               "semicolon list of x,y,strength triples")
                  ->capture_default_str());
    {
        auto& c = scatter_args.config;
        take_last(scatter_cmd->add_option("--mass", c.mass, "projectile mass")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--speed", c.speed, "launch speed v0")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--start-x", c.start_x, "launch abscissa")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--stop-x", c.stop_x, "escape abscissa")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--b-min", c.b_min, "impact parameter low")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--b-max", c.b_max, "impact parameter high")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--dt", c.dt, "integration step")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--max-steps", c.max_steps,
                                          "step budget per trajectory")
                      ->capture_default_str());
        take_last(scatter_cmd->add_option("--particles", c.particles, "trajectories")
                      ->capture_default_str());
        take_last(scatter_cmd
                      ->add_option("--energy-tolerance", c.energy_tolerance,
                                   "relative drift that flags an outcome")
                      ->capture_default_str());
    }
    take_last(scatter_cmd->add_option("--bins", scatter_args.bins, "histogram bins")
                  ->capture_default_str());
    take_last(scatter_cmd->add_flag("--histogram", scatter_args.with_histogram,
                                    "append the deflection-angle histogram block"));

    PercolationArgs percolation_args;
    auto* percolation_cmd = app.add_subcommand(
        "percolation", "site percolation spanning probability on an MxM grid");
    add_common(percolation_cmd, percolation_args.ctx);
    take_last(percolation_cmd->add_option("--side", percolation_args.side, "grid side M")
                  ->capture_default_str());
    take_last(percolation_cmd
                  ->add_option("--p", percolation_args.p_list,
                               "comma list of occupation probabilities"));
    take_last(percolation_cmd->add_option("--trials", percolation_args.trials,
                                          "grids per p")
                  ->capture_default_str());
    take_last(percolation_cmd->add_flag("--dump-grid", percolation_args.dump_grid,
                                        "emit one sampled grid (first p) as 0/1 rows"));
    take_last(percolation_cmd->add_flag(
        "--dump-labels", percolation_args.dump_labels,
        "emit the cluster labeling of one sampled grid (first p)"));

    ProcessArgs process_args;
    auto* process_cmd = app.add_subcommand(
        "process", "total duration of retry-until-success operations");
    add_common(process_cmd, process_args.ctx);
    take_last(process_cmd->add_option("--durations", process_args.durations,
                                      "comma list of operation durations")
                  ->capture_default_str());
    take_last(process_cmd->add_option("--success-probs", process_args.success_probs,
                                      "comma list of success probabilities")
                  ->capture_default_str());
    take_last(process_cmd->add_option("--trials", process_args.trials, "runs")
                  ->capture_default_str());
    take_last(process_cmd->add_flag("--per-trial", process_args.per_trial,
                                    "also emit one trial,total row per run"));

    ArqArgs arq_args;
    auto* arq_cmd = app.add_subcommand(
        "arq", "stop-and-wait ARQ over a noisy binary channel");
    add_common(arq_cmd, arq_args.ctx);
    take_last(arq_cmd->add_option("--frame-len", arq_args.config.frame_len,
                                  "frame length D (D-1 payload + parity)")
                  ->capture_default_str());
    take_last(arq_cmd->add_option("--bit-error-p", arq_args.config.bit_error_p,
                                  "per-bit error probability")
                  ->capture_default_str());
    take_last(arq_cmd->add_option("--frames", arq_args.config.n_frames,
                                  "frames to deliver (N_K)")
                  ->capture_default_str());
    take_last(arq_cmd->add_option("--model", arq_args.model,
                                  "abstract (frame fails iff u < p*D) or bit_exact")
                  ->capture_default_str());
    take_last(arq_cmd->add_option("--quantize", arq_args.config.quantize,
                                  "draw uniforms on a k/q grid (0 = full precision)")
                  ->capture_default_str());
    take_last(arq_cmd->add_option("--max-attempts",
                                  arq_args.config.max_attempts_per_frame,
                                  "attempt cap per frame")
                  ->capture_default_str());

    ArqSweepArgs arq_sweep_args;
    auto* arq_sweep_cmd = app.add_subcommand(
        "arq-sweep", "ARQ throughput vs frame length at fixed p");
    add_common(arq_sweep_cmd, arq_sweep_args.ctx);
    take_last(arq_sweep_cmd->add_option("--bit-error-p", arq_sweep_args.bit_error_p,
                                        "per-bit error probability")
                  ->capture_default_str());
    take_last(arq_sweep_cmd->add_option("--d-min", arq_sweep_args.d_min, "first D")
                  ->capture_default_str());
    take_last(arq_sweep_cmd->add_option("--d-max", arq_sweep_args.d_max, "last D")
                  ->capture_default_str());
    take_last(arq_sweep_cmd->add_option("--frames", arq_sweep_args.frames,
                                        "frames per point")
                  ->capture_default_str());

    CapacityArgs capacity_args;
    auto* capacity_cmd = app.add_subcommand(
        "capacity", "empirical channel capacity vs the BSC formula");
    add_common(capacity_cmd, capacity_args.ctx);
    take_last(capacity_cmd->add_option("--p-list", capacity_args.p_list,
                                       "comma list of bit error probabilities")
                  ->capture_default_str());
    take_last(capacity_cmd->add_option("--d-max", capacity_args.d_max,
                                       "largest frame length tried")
                  ->capture_default_str());
    take_last(capacity_cmd->add_option("--frames", capacity_args.frames,
                                       "frames per simulated point")
                  ->capture_default_str());

    SymbolChannelArgs symbol_args;
    auto* symbol_cmd = app.add_subcommand(
        "symbol-channel", "discrete memoryless channel over a stochastic matrix");
    add_common(symbol_cmd, symbol_args.ctx);
    take_last(symbol_cmd->add_option("--source", symbol_args.source,
                                     "comma list of input symbol probabilities")
                  ->capture_default_str());
    take_last(symbol_cmd->add_option("--matrix", symbol_args.matrix,
                                     "semicolon-separated stochastic matrix rows")
                  ->capture_default_str());
    take_last(symbol_cmd->add_option("--trials", symbol_args.trials, "transmissions")
                  ->capture_default_str());
    take_last(symbol_cmd->add_option("--stability-window", symbol_args.stability_window,
                                     "running-estimate window")
                  ->capture_default_str());
    take_last(symbol_cmd->add_option("--stability-tolerance",
                                     symbol_args.stability_tolerance,
                                     "relative spread threshold")
                  ->capture_default_str());
    take_last(symbol_cmd->add_option("--stride", symbol_args.stride,
                                     "running-estimate output stride")
                  ->capture_default_str());

    // Splice --config key=value pairs in ahead of explicit flags so the
    // command line keeps precedence.
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    std::size_t sub_index = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (sub_index == args.size() && !args[i].empty() && args[i][0] != '-') {
            sub_index = i;
            continue;
        }
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw std::invalid_argument("--config requires a file path");
            config_path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            i -= 1;
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + i);
            i -= 1;
        }
    }
    if (!config_path.empty()) {
        if (sub_index == args.size())
            throw std::invalid_argument("--config requires a subcommand");
        CLI::App* sub = app.get_subcommand_no_throw(args[sub_index]);
        if (sub == nullptr)
            throw std::invalid_argument("unknown subcommand '" + args[sub_index] + "'");
        std::vector<std::string> synthesized;
        for (const auto& entry : read_config_entries(config_path)) {
            if (sub->get_option_no_throw("--" + entry.key) == nullptr)
                throw std::invalid_argument(
                    "config file " + config_path + " line " +
                    std::to_string(entry.line) + ": unknown key '" + entry.key + "'");
            synthesized.push_back("--" + entry.key + "=" + entry.value);
        }
        args.insert(args.begin() + sub_index + 1, synthesized.begin(),
                    synthesized.end());
    }

    std::vector<const char*> parse_argv;
    parse_argv.push_back(argv[0]);
    for (const auto& a : args) parse_argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(parse_argv.size()), parse_argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        std::cerr << "run 'statmc --help' or 'statmc <subcommand> --help' for usage\n";
        return 2;
    }

    if (walk_cmd->parsed()) {
        emit(run_walk(walk_args), "walk", walk_args.ctx);
    } else if (pendulum_cmd->parsed()) {
        pendulum_args.has_hist_lo = pendulum_cmd->count("--hist-lo") > 0;
        pendulum_args.has_hist_hi = pendulum_cmd->count("--hist-hi") > 0;
        emit(run_pendulum(pendulum_args), "pendulum", pendulum_args.ctx);
    } else if (scatter_cmd->parsed()) {
        emit(run_scatter(scatter_args), "scatter", scatter_args.ctx);
    } else if (percolation_cmd->parsed()) {
        emit(run_percolation(percolation_args), "percolation", percolation_args.ctx);
    } else if (process_cmd->parsed()) {
        emit(run_process(process_args), "process", process_args.ctx);
    } else if (arq_cmd->parsed()) {
        emit(run_arq(arq_args), "arq", arq_args.ctx);
    } else if (arq_sweep_cmd->parsed()) {
        emit(run_arq_sweep(arq_sweep_args), "arq-sweep", arq_sweep_args.ctx);
    } else if (capacity_cmd->parsed()) {
        emit(run_capacity(capacity_args), "capacity", capacity_args.ctx);
    } else if (symbol_cmd->parsed()) {
        emit(run_symbol_channel(symbol_args), "symbol-channel", symbol_args.ctx);
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        return run_impl(argc, argv);
    } catch (const SimulationError& e) {
        std::cerr << "simulation error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("statmc");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> parse_config_file(const std::string& path) {
    std::vector<std::string> synthesized;
    for (const auto& entry : read_config_entries(path))
        synthesized.push_back("--" + entry.key + "=" + entry.value);
    return synthesized;
}

}  // namespace statmc::cli
