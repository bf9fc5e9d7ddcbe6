// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMCOH_CLI_HPP
#define POVMCOH_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 numerical non-convergence, 64 usage or input-format error. Failures
// print {"error": {"kind", "message", "exit_code"}} on stderr.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "povmcoh/builtins.hpp"
#include "povmcoh/channels.hpp"
#include "povmcoh/experiment.hpp"
#include "povmcoh/io.hpp"
#include "povmcoh/monotones.hpp"
#include "povmcoh/povm.hpp"
#include "povmcoh/robustness.hpp"
#include "povmcoh/tomography.hpp"

namespace povmcoh {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitConvergence = 2, kExitUsage = 64 };

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace cli {

inline Povm load_povm(const std::string &spec) {
    if (is_builtin_povm(spec)) {
        return builtin_povm(spec);
    }
    return povm_from_json(read_json_file(spec));
}

inline KrausChannel load_channel(const std::string &spec, std::size_t dim) {
    if (is_builtin_channel(spec)) {
        return builtin_channel(spec, dim);
    }
    auto c = channel_from_json(read_json_file(spec));
    if (c.dim() != dim) {
        throw DimensionError("channel dim " + std::to_string(c.dim()) + " does not match dim " + std::to_string(dim));
    }
    return c;
}

inline std::optional<KrausChannel> load_noise(const std::string &spec, std::size_t dim) {
    if (spec.empty() || spec == "none") {
        return std::nullopt;
    }
    return load_channel(spec, dim);
}

/// Loads and rejects invalid measurements with a ValidationError.
inline Povm load_valid_povm(const std::string &spec, double tol = kDefaultValidationTol) {
    const Povm p = load_povm(spec);
    return Povm::checked(p.components(), tol);
}

inline void distinct_paths(const std::string &in, const std::string &out) {
    if (!in.empty() && !out.empty() && !is_builtin_povm(in)) {
        std::error_code ec;
        if (in == out || std::filesystem::equivalent(in, out, ec)) {
            throw UsageError("output path '" + out + "' must differ from input path '" + in + "'");
        }
    }
}

inline PlotFormat format_for(const std::string &format, const std::string &path) {
    if (format == "csv") {
        return PlotFormat::csv;
    }
    if (format == "json") {
        return PlotFormat::json;
    }
    if (!format.empty()) {
        throw UsageError("unknown --format '" + format + "' (expected csv or json)");
    }
    return path.size() >= 5 && path.ends_with(".json") ? PlotFormat::json : PlotFormat::csv;
}

inline void write_output(std::ostream &out, const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

inline Json statistic_json(const Statistic &s) {
    return {{"value", s.pooled}, {"run_mean", s.mean}, {"run_std", s.std}, {"stderr", s.stderr_}};
}

inline Json certificate_json(const SdpSolution &sol) {
    Json z = Json::array();
    for (const auto &m : sol.dual_matrices) {
        z.push_back(to_json(m.matrix()));
    }
    Json w = {{"dual", {{"z", z}, {"sigma", sol.sigma}, {"objective", sol.dual_value}}},
              {"primal", {{"diagonals", sol.primal_diagonals}, {"objective", sol.value}}}};
    if (sol.mixing_povm) {
        w["mixing_povm"] = to_json(*sol.mixing_povm);
    }
    return w;
}

inline PlotTable sweep_plot_table(const SweepTable &t) {
    PlotTable p{"sweep-" + to_string(t.spec.path), {"parameter", "theory", "mean", "std", "ratio", "run_std"}, {}};
    for (const auto &r : t.rows) {
        p.rows.push_back({r.parameter, r.theory, r.mean, r.std, r.ratio, r.run_std});
    }
    return p;
}

inline PlotTable fig2_plot_table(const std::vector<Fig2Row> &rows) {
    PlotTable p{"fig2", {"gamma", "rc", "gap", "clinf", "cl1half"}, {}};
    for (const auto &r : rows) {
        p.rows.push_back({r.gamma, r.rc, r.gap, r.clinf, r.cl1half});
    }
    return p;
}

inline void emit_error(std::ostream &err, const std::string &kind, const std::string &message, int code) {
    err << Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
}

} // namespace cli

/// Runs one command; `args` excludes the program name.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"povmcoh: coherence of quantum measurements"};
    app.name("povmcoh");
    app.require_subcommand(1);

    int code = kExitOk;
    std::function<void()> action;

    // validate
    std::string povm_arg;
    double tol = kDefaultValidationTol;
    auto *validate_cmd = app.add_subcommand("validate", "Check PSD-ness and completeness of a POVM");
    validate_cmd->add_option("--povm", povm_arg, "POVM JSON file or builtin name")->required();
    validate_cmd->add_option("--tol", tol, "Validation tolerance")->check(CLI::PositiveNumber);
    validate_cmd->callback([&] {
        action = [&] {
            const Povm p = cli::load_povm(povm_arg);
            const auto rep = validate(p, tol);
            const Json j = {{"valid", rep.valid},
                            {"incoherent", rep.valid && is_incoherent(p, tol)},
                            {"dim", p.dim()},
                            {"outcomes", p.outcomes()},
                            {"psd_margins", rep.psd_margins},
                            {"completeness_residual", rep.completeness_residual},
                            {"tolerance", rep.tolerance}};
            out << j.dump(2) << "\n";
            if (!rep.valid) {
                throw ValidationError("POVM is invalid");
            }
        };
    });

    // monotone
    std::string which = "linf";
    BracketConfig bracket;
    auto *monotone_cmd = app.add_subcommand("monotone", "Evaluate a coherence monotone");
    monotone_cmd->add_option("--povm", povm_arg, "POVM JSON file or builtin name")->required();
    monotone_cmd->add_option("--which", which, "linf | l1 | cs | tv")
        ->check(CLI::IsMember({"linf", "l1", "cs", "tv"}));
    monotone_cmd->add_option("--gap-tol", bracket.gap_tol, "Bracket width target (cs, tv)")
        ->check(CLI::PositiveNumber);
    monotone_cmd->add_option("--seed", bracket.seed, "Seed for the random ascent starts (cs, tv)");
    monotone_cmd->add_option("--starts", bracket.starts, "Random ascent starts (cs, tv)")->check(CLI::NonNegativeNumber);
    monotone_cmd->add_option("--max-iter", bracket.max_iterations, "Cutting-plane iterations (cs, tv)")
        ->check(CLI::PositiveNumber);
    monotone_cmd->callback([&] {
        action = [&] {
            const Povm p = cli::load_valid_povm(povm_arg);
            Json j = {{"which", which}};
            if (which == "linf") {
                const auto r = c_linf(p);
                j["value"] = r.value;
                j["argmax_pair"] = {r.i, r.j};
            } else if (which == "l1") {
                j["value"] = c_l1(p);
            } else {
                const auto est = distance_monotone(p, which == "cs" ? "relative-entropy" : "total-variation", bracket);
                j["distance"] = est.distance;
                j["bracket"] = {est.lower, est.upper};
                j["value"] = 0.5 * (est.lower + est.upper);
                j["converged"] = est.converged;
                j["iterations"] = est.iterations;
                j["witness_state"] = to_json(est.witness_state.matrix().matrix());
                out << j.dump(2) << "\n";
                if (!est.converged) {
                    throw ConvergenceError("bracket width " + std::to_string(est.upper - est.lower) +
                                           " exceeds --gap-tol");
                }
                return;
            }
            out << j.dump(2) << "\n";
        };
    });

    // robustness
    double sdp_tol = 1e-7;
    int max_iter = 50000;
    std::string witness_path;
    auto *robust_cmd = app.add_subcommand("robustness", "Solve the robustness SDP with certificates");
    robust_cmd->add_option("--povm", povm_arg, "POVM JSON file or builtin name")->required();
    robust_cmd->add_option("--tol", sdp_tol, "Certified duality-gap target")->check(CLI::PositiveNumber);
    robust_cmd->add_option("--max-iter", max_iter, "ADMM iteration cap")->check(CLI::PositiveNumber);
    robust_cmd->add_option("--emit-witness", witness_path, "Write primal/dual certificates to FILE");
    robust_cmd->callback([&] {
        action = [&] {
            cli::distinct_paths(povm_arg, witness_path);
            const Povm p = cli::load_valid_povm(povm_arg);
            const auto sol = robustness(p, sdp_tol, max_iter);
            const Json j = {{"value", sol.value},
                            {"dual_value", sol.dual_value},
                            {"duality_gap", sol.duality_gap},
                            {"status", to_string(sol.status)},
                            {"iterations", sol.iterations},
                            {"c_linf", c_linf(p).value},
                            {"c_l1_half", 0.5 * c_l1(p)}};
            if (!witness_path.empty()) {
                write_text_file(witness_path, cli::certificate_json(sol).dump(2) + "\n");
            }
            out << j.dump(2) << "\n";
            if (sol.status != SdpStatus::optimal) {
                throw ConvergenceError("robustness SDP stopped with status " + to_string(sol.status) +
                                       ", gap " + std::to_string(sol.duality_gap));
            }
        };
    });

    // channel apply
    std::string channel_arg;
    std::string out_path;
    bool selective = false;
    auto *channel_cmd = app.add_subcommand("channel", "Channel operations");
    channel_cmd->require_subcommand(1);
    auto *apply_cmd = channel_cmd->add_subcommand("apply", "Dual action of a channel on a POVM");
    apply_cmd->add_option("--channel", channel_arg, "Channel JSON file or builtin name")->required();
    apply_cmd->add_option("--povm", povm_arg, "POVM JSON file or builtin name")->required();
    apply_cmd->add_flag("--selective", selective, "Keep one outcome per (a, mu)");
    apply_cmd->add_option("--out", out_path, "Output POVM JSON (default stdout)");
    apply_cmd->callback([&] {
        action = [&] {
            cli::distinct_paths(povm_arg, out_path);
            cli::distinct_paths(channel_arg, out_path);
            const Povm p = cli::load_valid_povm(povm_arg);
            const KrausChannel c = cli::load_channel(channel_arg, p.dim());
            const Povm q = selective ? dual_apply_selective(c, p) : dual_apply_nonselective(c, p);
            Json j = to_json(q);
            j["sio"] = classify_sio(c).has_value();
            if (selective) {
                j["labels"] = selective_labels(p.outcomes(), c.size());
            }
            cli::write_output(out, out_path, j.dump(2) + "\n");
        };
    });

    // tomo
    std::string counts_path;
    bool project = false;
    std::uint64_t shots = 8192;
    std::size_t runs = 10;
    std::uint64_t seed = 0;
    std::string noise_arg = "none";
    auto *tomo_cmd = app.add_subcommand("tomo", "Detector tomography");
    tomo_cmd->require_subcommand(1);
    auto *recon_cmd = tomo_cmd->add_subcommand("reconstruct", "Reconstruct a POVM from probe counts");
    recon_cmd->add_option("--counts", counts_path, "Counts JSON file")->required();
    recon_cmd->add_flag("--project-psd", project, "Post-process: clip negative eigenvalues, restore completeness");
    recon_cmd->callback([&] {
        action = [&] {
            const auto rec = record_from_json(read_json_file(counts_path));
            CoherenceOptions opt;
            opt.project_psd = project;
            const auto rep = coherence_from_counts(rec, opt);
            const Json j = {{"povm", to_json(rep.reconstruction.povm)},
                            {"psd_ok", rep.reconstruction.psd_ok},
                            {"psd_margins", rep.reconstruction.psd_margins},
                            {"projected", rep.reconstruction.projected},
                            {"runs", rep.runs},
                            {"c_linf", cli::statistic_json(rep.c_linf)},
                            {"c_l1_half", cli::statistic_json(rep.c_l1_half)},
                            {"robustness", cli::statistic_json(rep.robustness)}};
            out << j.dump(2) << "\n";
        };
    });
    auto *tsim_cmd = tomo_cmd->add_subcommand("simulate", "Sample probe counts for a POVM");
    tsim_cmd->add_option("--povm", povm_arg, "POVM JSON file or builtin name")->required();
    tsim_cmd->add_option("--shots", shots, "Shots per probe and run")->check(CLI::PositiveNumber);
    tsim_cmd->add_option("--runs", runs, "Independent runs")->check(CLI::PositiveNumber);
    tsim_cmd->add_option("--seed", seed, "Master seed");
    tsim_cmd->add_option("--noise", noise_arg, "Noise channel on the probes (builtin or file)");
    tsim_cmd->add_option("--out", out_path, "Output counts JSON (default stdout)");
    tsim_cmd->callback([&] {
        action = [&] {
            cli::distinct_paths(povm_arg, out_path);
            const Povm p = cli::load_valid_povm(povm_arg);
            const auto family = build_probe_family(p.dim());
            const auto rec = sample_record(p, family, shots, runs, seed, cli::load_noise(noise_arg, p.dim()));
            cli::write_output(out, out_path, to_json(rec).dump() + "\n");
        };
    });

    // simulate
    std::string path_arg;
    std::string step_arg = "pi/8";
    std::string format_arg;
    std::string counts_dir;
    std::size_t jobs = 1;
    std::size_t grid = 21;
    auto *sim_cmd = app.add_subcommand("simulate", "Simulated experiments");
    sim_cmd->require_subcommand(1);
    auto *sweep_cmd = sim_cmd->add_subcommand("sweep", "Qubit measurement-direction sweep");
    sweep_cmd->add_option("--path", path_arg, "p1 (theta=pi/2) | p2 (theta=pi/4) | p3 (phi=0)")->required();
    sweep_cmd->add_option("--step", step_arg, "Parameter step, e.g. pi/8");
    sweep_cmd->add_option("--shots", shots, "Shots per probe and run; 0 uses exact probabilities");
    sweep_cmd->add_option("--runs", runs, "Independent runs")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--noise", noise_arg, "Noise channel on the probes (builtin or file)");
    sweep_cmd->add_option("--seed", seed, "Master seed");
    sweep_cmd->add_option("--out", out_path, "Output table (default stdout)");
    sweep_cmd->add_option("--format", format_arg, "csv | json (default from --out extension)");
    sweep_cmd->add_option("--counts-dir", counts_dir, "Also write per-direction counts JSON here");
    sweep_cmd->add_option("--jobs", jobs, "Directions evaluated in parallel")->check(CLI::PositiveNumber);
    sweep_cmd->callback([&] {
        action = [&] {
            SweepSpec spec;
            try {
                spec.path = parse_sweep_path(path_arg);
                spec.step = parse_angle(step_arg);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            spec.shots = shots;
            spec.runs = runs;
            spec.noise = cli::load_noise(noise_arg, 2);
            spec.seed = seed;
            spec.jobs = jobs;
            if (!counts_dir.empty() && shots == 0) {
                throw UsageError("--counts-dir needs sampled counts (--shots > 0)");
            }
            const auto fmt = cli::format_for(format_arg, out_path);
            const auto table = run_sweep(spec);
            if (!counts_dir.empty()) {
                std::filesystem::create_directories(counts_dir);
                for (std::size_t k = 0; k < table.rows.size(); ++k) {
                    const std::string name = to_string(spec.path) + "_" + (k < 10 ? "0" : "") + std::to_string(k) +
                                             ".json";
                    write_text_file((std::filesystem::path(counts_dir) / name).string(),
                                    to_json(table.rows[k].record).dump() + "\n");
                }
            }
            cli::write_output(out, out_path, render_plot_data(cli::sweep_plot_table(table), fmt));
        };
    });
    auto *fig2_cmd = sim_cmd->add_subcommand("fig2", "Amplitude-damping sweep of the qutrit POVM");
    fig2_cmd->add_option("--grid", grid, "Number of gamma points in [0, 1]")->check(CLI::Range(2, 100000));
    fig2_cmd->add_option("--tol", sdp_tol, "Certified duality-gap target")->check(CLI::PositiveNumber);
    fig2_cmd->add_option("--out", out_path, "Output table (default stdout)");
    fig2_cmd->add_option("--format", format_arg, "csv | json (default from --out extension)");
    fig2_cmd->callback([&] {
        action = [&] {
            const auto fmt = cli::format_for(format_arg, out_path);
            const auto rows = run_fig2_sweep(gamma_grid(grid), sdp_tol);
            cli::write_output(out, out_path, render_plot_data(cli::fig2_plot_table(rows), fmt));
            for (const auto &r : rows) {
                if (r.status != SdpStatus::optimal) {
                    throw ConvergenceError("robustness SDP did not converge at gamma = " + std::to_string(r.gamma));
                }
            }
        };
    });

    std::vector<std::string> argv_store{"povmcoh"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : argv_store) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        cli::emit_error(err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    }

    try {
        if (action) {
            action();
        }
    } catch (const ConvergenceError &e) {
        code = kExitConvergence;
        cli::emit_error(err, "convergence", e.what(), code);
    } catch (const ValidationError &e) {
        code = kExitValidation;
        cli::emit_error(err, "validation", e.what(), code);
    } catch (const DimensionError &e) {
        code = kExitValidation;
        cli::emit_error(err, "validation", e.what(), code);
    } catch (const UsageError &e) {
        code = kExitUsage;
        cli::emit_error(err, "usage", e.what(), code);
    } catch (const FormatError &e) {
        code = kExitUsage;
        cli::emit_error(err, "format", e.what(), code);
    } catch (const std::invalid_argument &e) {
        code = kExitUsage;
        cli::emit_error(err, "usage", e.what(), code);
    } catch (const std::exception &e) {
        code = kExitUsage;
        cli::emit_error(err, "io", e.what(), code);
    }
    return code;
}

} // namespace povmcoh

#endif // POVMCOH_CLI_HPP
