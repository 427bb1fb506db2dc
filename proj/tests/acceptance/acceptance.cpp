// Copyright 2026 The tascope Authors
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

// Acceptance gate. Each criterion prints one PASS/FAIL line; the process
// exits non-zero if any criterion fails. Tolerances are fixed here.

#include <Eigen/Dense>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tascope/alignment.hpp"
#include "tascope/cli.hpp"
#include "tascope/experiments.hpp"
#include "tascope/ingest.hpp"
#include "tascope/io.hpp"
#include "tascope/landscape.hpp"
#include "tascope/parallel.hpp"
#include "tascope/quantum_kernel.hpp"

using namespace tascope;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

const double kMaxAlignment = 1.0 / std::sqrt(2.0);

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void criterion(const std::string &name, double time_limit_s,
               const std::function<Outcome()> &body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0.0 && seconds > time_limit_s) {
        o.pass = false;
        o.detail += "; exceeded " + io::format_double(time_limit_s) + " s";
    }
    if (!o.pass) {
        ++g_failures;
    }
    std::printf("[%s] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double general_toy(int n, double gamma) {
    const auto d = build_toy_dataset({n});
    return target_alignment_general(kernel_matrix(d, FeatureMapParams::uniform(gamma)),
                                    d.labels);
}

std::string describe_trend(const std::vector<EnsemblePoint> &curve, const TrendCheck &check) {
    std::string s = "sizes " + std::to_string(curve.front().subset_size) + ".." +
                    std::to_string(curve.back().subset_size) + ", mean " +
                    sci(curve.front().mean) + " -> " + sci(curve.back().mean);
    if (!check.holds) {
        s += ", rise at size " + std::to_string(*check.first_violation);
    }
    return s;
}

int cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "tascope");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (code != 0) {
        std::cerr << err.str();
    }
    return code;
}

} // namespace

int main() {
    const std::size_t workers = default_worker_count();
    std::printf("tascope acceptance suite (%zu worker(s))\n", workers);

    criterion("kernel oracle equivalence", 1.0, [] {
        std::mt19937_64 gen(20240601);
        std::uniform_real_distribution<double> x(0.0, 1.0);
        std::uniform_real_distribution<double> g(-100.0, 100.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double xi = x(gen);
            const double xj = x(gen);
            const double gamma = g(gen);
            const double c = std::cos(0.5 * gamma * (xi - xj));
            worst = std::max(worst, std::fabs(kernel_entry_statevector(xi, xj, gamma) - c * c));
        }
        return Outcome{worst < 1e-12, "max |statevector - cos^2| = " + sci(worst) + " < 1e-12"};
    });

    criterion("alignment dual-path equivalence", 30.0, [] {
        std::mt19937_64 gen(77);
        double worst = 0.0;
        for (int n = 2; n <= 32; n += 2) {
            std::uniform_real_distribution<double> g(-4.0 * pi * (n - 1), 4.0 * pi * (n - 1));
            for (int i = 0; i < 200; ++i) {
                const double gamma = g(gen);
                worst = std::max(worst,
                                 std::fabs(target_alignment_toy({n}, gamma) - general_toy(n, gamma)));
            }
        }
        return Outcome{worst < 1e-10, "max |toy - general| = " + sci(worst) + " < 1e-10"};
    });

    criterion("exact optimum", 0.0, [] {
        double worst_peak = 0.0;
        double worst_zero = 0.0;
        for (int n : {2, 4, 8, 16, 32}) {
            const double mu = pi * (n - 1);
            worst_peak = std::max({worst_peak, std::fabs(target_alignment_toy({n}, mu) - kMaxAlignment),
                                   std::fabs(general_toy(n, mu) - kMaxAlignment)});
            worst_zero = std::max({worst_zero, std::fabs(target_alignment_toy({n}, 0.0)),
                                   std::fabs(general_toy(n, 0.0))});
        }
        return Outcome{worst_peak < 1e-12 && worst_zero < 1e-12,
                       "|T(pi(N-1)) - 1/sqrt2| <= " + sci(worst_peak) + ", |T(0)| <= " +
                           sci(worst_zero) + " (tol 1e-12)"};
    });

    criterion("periodicity", 0.0, [] {
        std::mt19937_64 gen(4);
        std::uniform_real_distribution<double> g(-100.0, 100.0);
        double worst = 0.0;
        for (int n : {2, 4, 8}) {
            for (int i = 0; i < 50; ++i) {
                const double gamma = g(gen);
                const double period = 2.0 * pi * (n - 1);
                worst = std::max({worst,
                                  std::fabs(target_alignment_toy({n}, gamma) -
                                            target_alignment_toy({n}, gamma + period)),
                                  std::fabs(general_toy(n, gamma) - general_toy(n, gamma + period))});
            }
        }
        return Outcome{worst < 1e-9, "max |T(g) - T(g + 2pi(N-1))| = " + sci(worst) + " < 1e-9"};
    });

    criterion("gaussian width", 10.0, [] {
        double worst = 0.0;
        int worst_n = 0;
        for (int n = 2; n <= 64; n += 2) {
            const double analytic = 2.0 * std::sqrt(3.0) * (n - 1) / std::sqrt(n * n + 2.0);
            const double rel = std::fabs(curvature_sigma({n}) - analytic) / analytic;
            if (rel > worst) {
                worst = rel;
                worst_n = n;
            }
        }
        const bool two_ok = std::fabs(analytic_gaussian_peak(2).sigma - std::sqrt(2.0)) < 1e-14;
        bool monotone = true;
        double previous_gap = INFINITY;
        for (int n = 2; n <= 1 << 16; n += 2) {
            const double gap = 2.0 * std::sqrt(3.0) - analytic_gaussian_peak(n).sigma;
            monotone = monotone && gap > 0.0 && gap < previous_gap;
            previous_gap = gap;
        }
        return Outcome{worst < 0.005 && two_ok && monotone,
                       "max relative error " + sci(worst) + " at N=" + std::to_string(worst_n) +
                           " (< 0.005); sigma(2)=sqrt2 " + (two_ok ? "yes" : "no") +
                           "; monotone approach to 2sqrt3 " + (monotone ? "yes" : "no")};
    });

    const std::vector<int> sizes{4, 8, 16, 32, 64};
    std::vector<ScalingPoint> scaling;
    criterion("scaling law", 300.0, [&] {
        scaling = scaling_experiment(sizes, kDefaultGammaSpacing, KernelMethod::closed_form,
                                     workers);
        std::vector<double> n;
        std::vector<double> m;
        for (const auto &p : scaling) {
            n.push_back(p.n_points);
            m.push_back(p.mean_ta);
        }
        const auto fit = fit_power_law(n, m);
        return Outcome{fit.exponent >= -1.15 && fit.exponent <= -0.85,
                       "exponent " + io::format_double(fit.exponent) + " in [-1.15, -0.85], r^2 " +
                           sci(fit.r_squared)};
    });

    criterion("incremental experiment (toy pool N=32, 10 seeds)", 0.0, [&] {
        IncrementalConfig cfg;
        cfg.pool = build_toy_dataset({32});
        cfg.seeds = seed_range(kDefaultSeedCount);
        cfg.max_spacing = kDefaultGammaSpacing;
        const auto traces = incremental_experiment(cfg, workers);
        const auto curve = summarize(traces);
        const auto trend = decreasing_within_noise(curve, 4, 3.0);
        double scaling32 = NAN;
        for (const auto &p : scaling) {
            if (p.n_points == 32) {
                scaling32 = p.mean_ta;
            }
        }
        bool final_exact = true;
        for (const auto &t : traces) {
            final_exact = final_exact && t.records.back().mean_ta == scaling32;
        }
        return Outcome{trend.holds && final_exact,
                       describe_trend(curve, trend) + "; final == scaling N=32 exactly: " +
                           (final_exact ? "yes" : "no")};
    });

    criterion("incremental experiment (ingested two-blob data) + PCA oracle", 0.0, [&] {
        const fs::path dir = fs::temp_directory_path() / "tascope-acceptance-ingest";
        fs::create_directories(dir);
        const auto synthetic = synthetic_two_blob_table(200, 2026);
        {
            std::ofstream f(dir / "pixels.csv");
            f << "R,G,B,NIR,cloud\n";
            for (std::size_t r = 0; r < synthetic.rows(); ++r) {
                for (std::size_t b = 0; b < synthetic.n_bands; ++b) {
                    f << io::format_double(synthetic.at(r, b)) << ',';
                }
                f << (synthetic.labels[r] == 1 ? 1 : 0) << '\n';
            }
        }
        const auto table = load_samples(dir / "pixels.csv", {',', true, std::nullopt});
        const auto model = fit_pca(table);

        // Dense symmetric eigensolve of the same covariance.
        const auto n = static_cast<Eigen::Index>(table.rows());
        Eigen::MatrixXd x(n, 4);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < 4; ++c) {
                x(r, c) = table.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            }
        }
        const Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
            centered.transpose() * centered / static_cast<double>(n - 1));
        Eigen::VectorXd v = solver.eigenvectors().col(3);
        Eigen::Index largest = 0;
        v.cwiseAbs().maxCoeff(&largest);
        if (v(largest) < 0.0) {
            v = -v;
        }
        double vec_err = 0.0;
        for (Eigen::Index c = 0; c < 4; ++c) {
            vec_err = std::max(vec_err, std::fabs(model.component[static_cast<std::size_t>(c)] - v(c)));
        }
        const double val_err = std::fabs(model.eigenvalue - solver.eigenvalues()(3));
        const auto projections = project(table, model);
        double ss = 0.0;
        for (double p : projections) {
            ss += p * p;
        }
        const double var_err =
            std::fabs(ss / static_cast<double>(projections.size() - 1) - model.eigenvalue);
        const bool pca_ok = vec_err < 1e-9 && val_err < 1e-9 && var_err < 1e-9;

        IncrementalConfig cfg;
        cfg.pool = balanced_subsample(project_and_rescale(table, model), 16, 7);
        cfg.seeds = seed_range(kDefaultSeedCount);
        cfg.max_spacing = kDefaultGammaSpacing;
        const auto curve = summarize(incremental_experiment(cfg, workers));
        const auto trend = decreasing_within_noise(curve, 4, 3.0);
        fs::remove_all(dir);
        return Outcome{pca_ok && trend.holds,
                       "PCA |dv| " + sci(vec_err) + ", |dlambda| " + sci(val_err) +
                           ", |var - lambda| " + sci(var_err) + " (< 1e-9); " +
                           describe_trend(curve, trend)};
    });

    criterion("determinism (manifest re-execution)", 0.0, [] {
        const fs::path dir = fs::temp_directory_path() / "tascope-acceptance-determinism";
        fs::remove_all(dir);
        fs::create_directories(dir);
        const auto blobs = synthetic_two_blob_table(20, 99);
        {
            std::ofstream f(dir / "pixels.csv");
            for (std::size_t r = 0; r < blobs.rows(); ++r) {
                for (std::size_t b = 0; b < blobs.n_bands; ++b) {
                    f << io::format_double(blobs.at(r, b)) << '\t';
                }
                f << blobs.labels[r] << '\n';
            }
        }
        const std::vector<std::vector<std::string>> runs{
            {"landscape", "--n", "8"},
            {"landscape", "--input", (dir / "pixels.csv").string(), "--delimiter", "tab",
             "--per-class", "6", "--method", "statevector"},
            {"scaling", "--sizes", "4,8,16"},
            {"incremental", "--toy-n", "12", "--seeds", "4"},
            {"incremental", "--input", (dir / "pixels.csv").string(), "--delimiter", "tab",
             "--per-class", "6", "--seeds", "3"},
        };
        std::size_t files = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto first = dir / ("run" + std::to_string(i));
            const auto second = dir / ("rerun" + std::to_string(i));
            auto args = runs[i];
            args.insert(args.end(), {"--out-dir", first.string()});
            if (cli_run(args) != 0) {
                return Outcome{false, "run " + std::to_string(i) + " failed"};
            }
            fs::path manifest;
            for (const auto &entry : fs::directory_iterator(first)) {
                if (entry.path().string().ends_with(".manifest.json")) {
                    manifest = entry.path();
                }
            }
            if (cli_run({"rerun", "--manifest", manifest.string(), "--out-dir",
                         second.string()}) != 0) {
                return Outcome{false, "rerun " + std::to_string(i) + " failed"};
            }
            const auto m = nlohmann::json::parse(io::read_file(manifest));
            for (const auto &name : m["outputs"]) {
                const auto file = name.get<std::string>();
                if (io::read_file(first / file) != io::read_file(second / file)) {
                    return Outcome{false, file + " differs after re-execution"};
                }
                ++files;
            }
        }
        fs::remove_all(dir);
        return Outcome{true, std::to_string(files) + " data files byte-identical across " +
                                 std::to_string(runs.size()) + " runs"};
    });

    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ALL PASSED" : "FAILED",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
