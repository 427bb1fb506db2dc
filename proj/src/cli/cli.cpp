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

#include "tascope/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <numbers>
#include <optional>
#include <sstream>

#include "tascope/errors.hpp"
#include "tascope/experiments.hpp"
#include "tascope/ingest.hpp"
#include "tascope/io.hpp"
#include "tascope/landscape.hpp"
#include "tascope/parallel.hpp"
#include "tascope/rng.hpp"

namespace tascope::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Resolved configurations. Each is echoed verbatim into the run manifest and
// can be rebuilt from it, which is what `rerun` relies on.

struct InputConfig {
    std::string path;
    std::string delimiter = ",";
    bool has_header = false;
    std::string label_column; // empty: last column
    std::optional<std::size_t> per_class;
    std::uint64_t subsample_seed = 0;
};

struct LandscapeConfig {
    std::optional<int> n;
    std::optional<InputConfig> input;
    std::optional<double> gamma_start;
    std::optional<double> gamma_end;
    std::optional<std::size_t> samples;
    double spacing = kDefaultGammaSpacing;
    std::string method = "closed";
    std::string out_dir = ".";
};

struct ScalingConfig {
    std::vector<int> sizes;
    double spacing = kDefaultGammaSpacing;
    std::string method = "closed";
    std::string out_dir = ".";
};

struct IncrementalCliConfig {
    std::optional<int> toy_n;
    std::optional<InputConfig> input;
    std::size_t seed_count = kDefaultSeedCount;
    std::uint64_t seed_base = 0;
    int per_iteration = 1;
    std::optional<double> gamma_start;
    std::optional<double> gamma_end;
    double spacing = kDefaultGammaSpacing;
    std::string method = "closed";
    std::string out_dir = ".";
};

template <typename T> void put_optional(json &j, const char *key, const std::optional<T> &v) {
    j[key] = v ? json(*v) : json(nullptr);
}

template <typename T> std::optional<T> get_optional(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

json to_json(const InputConfig &c) {
    json j{{"path", c.path},
           {"delimiter", c.delimiter},
           {"has_header", c.has_header},
           {"label_column", c.label_column},
           {"subsample_seed", c.subsample_seed}};
    put_optional(j, "per_class", c.per_class);
    return j;
}

InputConfig input_from_json(const json &j) {
    InputConfig c;
    c.path = j.at("path").get<std::string>();
    c.delimiter = j.at("delimiter").get<std::string>();
    c.has_header = j.at("has_header").get<bool>();
    c.label_column = j.at("label_column").get<std::string>();
    c.per_class = get_optional<std::size_t>(j, "per_class");
    c.subsample_seed = j.at("subsample_seed").get<std::uint64_t>();
    return c;
}

json input_or_null(const std::optional<InputConfig> &c) {
    return c ? to_json(*c) : json(nullptr);
}

std::optional<InputConfig> input_from(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return input_from_json(j.at(key));
}

char delimiter_char(const std::string &name) {
    if (name == "tab" || name == "\\t" || name == "\t") {
        return '\t';
    }
    if (name == "comma" || name == ",") {
        return ',';
    }
    if (name.size() == 1) {
        return name[0];
    }
    throw ConfigurationError("delimiter must be a single character, 'comma' or 'tab'");
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

struct LoadedData {
    LabeledDataset dataset;
    json identity;
};

LoadedData load_dataset(const InputConfig &in, bool force_balanced) {
    LoadOptions options;
    options.delimiter = delimiter_char(in.delimiter);
    options.has_header = in.has_header;
    if (!in.label_column.empty()) {
        options.label_column = in.label_column;
    }
    const std::string bytes = io::read_file(in.path);
    std::istringstream stream(bytes);
    const RawSampleTable table = parse_samples(stream, options);
    const PcaModel model = fit_pca(table);
    LabeledDataset d = project_and_rescale(table, model);
    std::optional<std::size_t> per_class = in.per_class;
    if (!per_class && force_balanced && !d.is_balanced()) {
        per_class = std::min(d.count(+1), d.count(-1));
    }
    if (per_class) {
        d = balanced_subsample(d, *per_class, in.subsample_seed);
    }
    require_valid(d);
    json identity{{"kind", "table"},
                  {"path", in.path},
                  {"fnv1a64", io::fnv1a_hex(bytes)},
                  {"rows", table.rows()},
                  {"bands", table.n_bands},
                  {"n_points", d.size()},
                  {"pca_component", model.component},
                  {"pca_eigenvalue", model.eigenvalue}};
    return {std::move(d), std::move(identity)};
}

json toy_identity(int n) { return json{{"kind", "toy"}, {"n_points", n}}; }

void require_one_source(bool has_toy, bool has_input, const char *toy_flag) {
    if (has_toy == has_input) {
        throw ConfigurationError(std::string("exactly one of ") + toy_flag +
                                 " or --input is required");
    }
}

json manifest(const std::string &subcommand, json config, json rng, json dataset,
              const std::vector<std::string> &outputs) {
    return json{{"tool", "tascope"},
                {"version", std::string(kVersion)},
                {"subcommand", subcommand},
                {"config", std::move(config)},
                {"rng", std::move(rng)},
                {"dataset", std::move(dataset)},
                {"outputs", outputs},
                {"created_utc", utc_timestamp()}};
}

// ---------------------------------------------------------------------------
// landscape

json to_json(const LandscapeConfig &c) {
    json j{{"spacing", c.spacing}, {"method", c.method}, {"out_dir", c.out_dir}};
    put_optional(j, "n", c.n);
    j["input"] = input_or_null(c.input);
    put_optional(j, "gamma_start", c.gamma_start);
    put_optional(j, "gamma_end", c.gamma_end);
    put_optional(j, "samples", c.samples);
    return j;
}

LandscapeConfig landscape_from_json(const json &j) {
    LandscapeConfig c;
    c.n = get_optional<int>(j, "n");
    c.input = input_from(j, "input");
    c.gamma_start = get_optional<double>(j, "gamma_start");
    c.gamma_end = get_optional<double>(j, "gamma_end");
    c.samples = get_optional<std::size_t>(j, "samples");
    c.spacing = j.at("spacing").get<double>();
    c.method = j.at("method").get<std::string>();
    c.out_dir = j.at("out_dir").get<std::string>();
    return c;
}

int run_landscape(LandscapeConfig c, std::ostream &out) {
    require_one_source(c.n.has_value(), c.input.has_value(), "--n");
    const KernelMethod method = parse_kernel_method(c.method);
    LoadedData data;
    if (c.n) {
        data = {build_toy_dataset({*c.n}), toy_identity(*c.n)};
    } else {
        data = load_dataset(*c.input, false);
    }
    const double start = c.gamma_start.value_or(0.0);
    const double end = c.gamma_end.value_or(
        2.0 * std::numbers::pi * static_cast<double>(data.dataset.size() - 1));
    const GammaGrid grid = c.samples ? GammaGrid(start, end, *c.samples)
                                     : GammaGrid::with_max_spacing(start, end, c.spacing, true);
    c.gamma_start = start;
    c.gamma_end = end;
    c.samples = grid.size();

    const AlignmentLandscape l = sweep(data.dataset, grid, method, default_worker_count());

    io::CsvTable csv{{"gamma", "ta"}, {}};
    csv.rows.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        csv.rows.push_back({io::format_double(grid.value(k)), io::format_double(l.values[k])});
    }
    const fs::path dir(c.out_dir);
    io::write_file_atomic(dir / "landscape.csv", csv.serialize());
    io::write_file_atomic(dir / "landscape.manifest.json",
                          dump(manifest("landscape", to_json(c),
                                        json{{"algorithm", nullptr}, {"seeds", json::array()}},
                                        data.identity, {"landscape.csv"})));

    const PeakLocation peak = find_global_peak(l);
    out << "samples " << grid.size() << " over [" << io::format_double(start) << ", "
        << io::format_double(end) << "]\n";
    out << "peak gamma " << io::format_double(peak.gamma) << " ta "
        << io::format_double(peak.value) << "\n";
    if (c.n) {
        const GaussianPeak g = analytic_gaussian_peak(*c.n);
        out << "gaussian mu " << io::format_double(g.mu) << " sigma "
            << io::format_double(g.sigma) << " amplitude " << io::format_double(g.amplitude)
            << "\n";
        out << "relative width " << io::format_double(relative_peak_width(*c.n)) << "\n";
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// scaling

json to_json(const ScalingConfig &c) {
    return json{{"sizes", c.sizes},
                {"spacing", c.spacing},
                {"method", c.method},
                {"out_dir", c.out_dir}};
}

ScalingConfig scaling_from_json(const json &j) {
    return ScalingConfig{j.at("sizes").get<std::vector<int>>(), j.at("spacing").get<double>(),
                         j.at("method").get<std::string>(), j.at("out_dir").get<std::string>()};
}

int run_scaling(const ScalingConfig &c, std::ostream &out, std::ostream &err) {
    if (c.sizes.empty()) {
        throw ConfigurationError("--sizes needs at least one even N");
    }
    const KernelMethod method = parse_kernel_method(c.method);
    const auto points = scaling_experiment(c.sizes, c.spacing, method, default_worker_count());

    io::CsvTable csv{{"n", "mean_ta"}, {}};
    std::vector<double> sizes;
    std::vector<double> means;
    for (const auto &p : points) {
        csv.rows.push_back({std::to_string(p.n_points), io::format_double(p.mean_ta)});
        sizes.push_back(p.n_points);
        means.push_back(p.mean_ta);
        out << "n " << p.n_points << " mean_ta " << io::format_double(p.mean_ta) << "\n";
    }
    const fs::path dir(c.out_dir);
    std::vector<std::string> outputs{"scaling.csv"};
    io::write_file_atomic(dir / "scaling.csv", csv.serialize());

    if (points.size() >= 3) {
        const PowerLawFit fit = fit_power_law(sizes, means);
        io::write_file_atomic(dir / "scaling_fit.json",
                              dump(json{{"exponent", fit.exponent},
                                        {"prefactor", fit.prefactor},
                                        {"r_squared", fit.r_squared},
                                        {"sizes", c.sizes}}));
        outputs.emplace_back("scaling_fit.json");
        out << "fit exponent " << io::format_double(fit.exponent) << " prefactor "
            << io::format_double(fit.prefactor) << " r_squared "
            << io::format_double(fit.r_squared) << "\n";
    } else {
        err << "power-law fit skipped: needs at least 3 sizes, got " << points.size() << "\n";
    }
    io::write_file_atomic(dir / "scaling.manifest.json",
                          dump(manifest("scaling", to_json(c),
                                        json{{"algorithm", nullptr}, {"seeds", json::array()}},
                                        json{{"kind", "toy"}, {"sizes", c.sizes}}, outputs)));
    return kSuccess;
}

// ---------------------------------------------------------------------------
// incremental

json to_json(const IncrementalCliConfig &c) {
    json j{{"seed_count", c.seed_count},   {"seed_base", c.seed_base},
           {"per_iteration", c.per_iteration}, {"spacing", c.spacing},
           {"method", c.method},           {"out_dir", c.out_dir}};
    put_optional(j, "toy_n", c.toy_n);
    j["input"] = input_or_null(c.input);
    put_optional(j, "gamma_start", c.gamma_start);
    put_optional(j, "gamma_end", c.gamma_end);
    return j;
}

IncrementalCliConfig incremental_from_json(const json &j) {
    IncrementalCliConfig c;
    c.toy_n = get_optional<int>(j, "toy_n");
    c.input = input_from(j, "input");
    c.seed_count = j.at("seed_count").get<std::size_t>();
    c.seed_base = j.at("seed_base").get<std::uint64_t>();
    c.per_iteration = j.at("per_iteration").get<int>();
    c.gamma_start = get_optional<double>(j, "gamma_start");
    c.gamma_end = get_optional<double>(j, "gamma_end");
    c.spacing = j.at("spacing").get<double>();
    c.method = j.at("method").get<std::string>();
    c.out_dir = j.at("out_dir").get<std::string>();
    return c;
}

std::string trace_file_name(std::uint64_t seed) {
    return "incremental_seed" + std::to_string(seed) + ".csv";
}

int run_incremental(IncrementalCliConfig c, std::ostream &out) {
    require_one_source(c.toy_n.has_value(), c.input.has_value(), "--toy-n");
    if (c.seed_count == 0) {
        throw ConfigurationError("--seeds must be >= 1");
    }
    LoadedData data;
    if (c.toy_n) {
        data = {build_toy_dataset({*c.toy_n}), toy_identity(*c.toy_n)};
    } else {
        data = load_dataset(*c.input, true);
    }

    IncrementalConfig cfg;
    cfg.pool = std::move(data.dataset);
    cfg.seeds = seed_range(c.seed_count, c.seed_base);
    cfg.points_per_class_per_iteration = c.per_iteration;
    cfg.gamma_start = c.gamma_start;
    cfg.gamma_end = c.gamma_end;
    cfg.max_spacing = c.spacing;
    cfg.method = parse_kernel_method(c.method);
    if (cfg.pool.size() >= 2) {
        const GammaGrid grid = cfg.resolved_grid();
        c.gamma_start = grid.start();
        c.gamma_end = grid.end();
    }

    const auto traces = incremental_experiment(cfg, default_worker_count());

    const fs::path dir(c.out_dir);
    std::vector<std::string> outputs;
    for (const auto &t : traces) {
        io::CsvTable csv{{"iteration", "subset_size", "mean_ta"}, {}};
        for (const auto &r : t.records) {
            csv.rows.push_back({std::to_string(r.iteration), std::to_string(r.subset_size),
                                io::format_double(r.mean_ta)});
        }
        const std::string name = trace_file_name(t.seed);
        io::write_file_atomic(dir / name, csv.serialize());
        outputs.push_back(name);
    }
    const auto curve = summarize(traces);
    io::CsvTable mean_csv{{"subset_size", "mean_ta", "std_error", "n_seeds"}, {}};
    for (const auto &p : curve) {
        mean_csv.rows.push_back({std::to_string(p.subset_size), io::format_double(p.mean),
                                 io::format_double(p.std_error), std::to_string(p.n_seeds)});
        out << "subset " << p.subset_size << " mean_ta " << io::format_double(p.mean)
            << " se " << io::format_double(p.std_error) << "\n";
    }
    io::write_file_atomic(dir / "incremental_mean.csv", mean_csv.serialize());
    outputs.emplace_back("incremental_mean.csv");
    io::write_file_atomic(
        dir / "incremental.manifest.json",
        dump(manifest("incremental", to_json(c),
                      json{{"algorithm", std::string(Rng::kAlgorithm)}, {"seeds", cfg.seeds}},
                      data.identity, outputs)));
    return kSuccess;
}

// ---------------------------------------------------------------------------
// ingest-check

int run_ingest_check(const InputConfig &in, const std::string &out_path, std::ostream &out) {
    LoadOptions options;
    options.delimiter = delimiter_char(in.delimiter);
    options.has_header = in.has_header;
    if (!in.label_column.empty()) {
        options.label_column = in.label_column;
    }
    const RawSampleTable table = load_samples(in.path, options);
    const PcaModel model = fit_pca(table);
    const LabeledDataset d = project_and_rescale(table, model);
    const ValidationReport report = validate_dataset(d);

    double total_variance = 0.0;
    const auto cov = sample_covariance(table, model.mean);
    for (std::size_t b = 0; b < table.n_bands; ++b) {
        total_variance += cov[b * table.n_bands + b];
    }
    const json summary{
        {"rows", table.rows()},
        {"bands", table.n_bands},
        {"band_names", table.band_names},
        {"class_counts", {{"+1", d.count(+1)}, {"-1", d.count(-1)}}},
        {"balanced", d.is_balanced()},
        {"pca",
         {{"mean", model.mean},
          {"component", model.component},
          {"eigenvalue", model.eigenvalue},
          {"explained_variance_ratio",
           total_variance > 0.0 ? model.eigenvalue / total_variance : 0.0},
          {"iterations", model.iterations}}},
        {"rescaled_valid", report.valid()},
        {"violations", report.messages()}};
    out << dump(summary);
    if (!out_path.empty()) {
        io::write_file_atomic(out_path, dump(summary));
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// rerun

int run_from_manifest(const std::string &path, const std::string &out_dir, std::ostream &out,
                      std::ostream &err) {
    json m;
    try {
        m = json::parse(io::read_file(path));
    } catch (const json::exception &e) {
        throw DataError("cannot parse manifest " + path + ": " + e.what());
    }
    try {
        const std::string sub = m.at("subcommand").get<std::string>();
        const json &config = m.at("config");
        if (sub == "landscape") {
            auto c = landscape_from_json(config);
            if (!out_dir.empty()) {
                c.out_dir = out_dir;
            }
            return run_landscape(c, out);
        }
        if (sub == "scaling") {
            auto c = scaling_from_json(config);
            if (!out_dir.empty()) {
                c.out_dir = out_dir;
            }
            return run_scaling(c, out, err);
        }
        if (sub == "incremental") {
            auto c = incremental_from_json(config);
            if (!out_dir.empty()) {
                c.out_dir = out_dir;
            }
            return run_incremental(c, out);
        }
        throw ConfigurationError("manifest names unknown subcommand '" + sub + "'");
    } catch (const json::exception &e) {
        throw ConfigurationError("malformed manifest " + path + ": " + e.what());
    }
}

void add_input_options(CLI::App *cmd, std::string &path, InputConfig &in,
                       std::optional<std::size_t> &per_class) {
    cmd->add_option("--input", path, "Delimited table of band values and a label column");
    cmd->add_option("--delimiter", in.delimiter, "Field delimiter: a character, comma or tab")
        ->capture_default_str();
    cmd->add_flag("--has-header", in.has_header, "First non-blank line is a header");
    cmd->add_option("--label-column", in.label_column,
                    "Label column: 0-based index, negative index from the end, or header name");
    cmd->add_option("--per-class", per_class, "Balanced subsample size per class");
    cmd->add_option("--subsample-seed", in.subsample_seed, "Seed for balanced subsampling")
        ->capture_default_str();
}

std::optional<InputConfig> finish_input(const std::string &path, InputConfig in,
                                        std::optional<std::size_t> per_class) {
    if (path.empty()) {
        return std::nullopt;
    }
    in.path = path;
    in.per_class = per_class;
    return in;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Kernel-target alignment landscapes of single-qubit fidelity kernels",
                 "tascope"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // landscape
    LandscapeConfig land;
    std::optional<int> land_n;
    std::optional<double> land_start;
    std::optional<double> land_end;
    std::optional<std::size_t> land_samples;
    std::string land_input;
    InputConfig land_in;
    std::optional<std::size_t> land_per_class;
    auto *landscape = app.add_subcommand("landscape", "Sample alignment over a gamma grid");
    landscape->add_option("--n", land_n, "Toy dataset size (even)");
    add_input_options(landscape, land_input, land_in, land_per_class);
    landscape->add_option("--gamma-start", land_start, "Grid start (default 0)");
    landscape->add_option("--gamma-end", land_end, "Grid end (default 2 pi (N-1))");
    landscape->add_option("--samples", land_samples, "Grid sample count");
    landscape->add_option("--spacing", land.spacing, "Maximum grid spacing when --samples is absent")
        ->capture_default_str();
    landscape->add_option("--method", land.method, "Kernel evaluation: closed or statevector")
        ->capture_default_str();
    landscape->add_option("--out-dir", land.out_dir, "Output directory")->capture_default_str();

    // scaling
    ScalingConfig scal;
    auto *scaling = app.add_subcommand("scaling", "One-period mean alignment versus toy size");
    scaling->add_option("--sizes", scal.sizes, "Comma-separated even sizes")
        ->delimiter(',')
        ->required();
    scaling->add_option("--spacing", scal.spacing, "Maximum grid spacing")->capture_default_str();
    scaling->add_option("--method", scal.method, "Kernel evaluation: closed or statevector")
        ->capture_default_str();
    scaling->add_option("--out-dir", scal.out_dir, "Output directory")->capture_default_str();

    // incremental
    IncrementalCliConfig inc;
    std::optional<int> inc_toy;
    std::optional<double> inc_start;
    std::optional<double> inc_end;
    std::string inc_input;
    InputConfig inc_in;
    std::optional<std::size_t> inc_per_class;
    auto *incremental =
        app.add_subcommand("incremental", "Mean alignment as pool points are introduced");
    incremental->add_option("--toy-n", inc_toy, "Toy pool size (even)");
    add_input_options(incremental, inc_input, inc_in, inc_per_class);
    incremental->add_option("--seeds", inc.seed_count, "Number of seeds")->capture_default_str();
    incremental->add_option("--seed-base", inc.seed_base, "First seed")->capture_default_str();
    incremental->add_option("--per-iteration", inc.per_iteration,
                            "Points added per class per iteration")
        ->capture_default_str();
    incremental->add_option("--gamma-start", inc_start, "Averaging range start (default 0)");
    incremental->add_option("--gamma-end", inc_end,
                            "Averaging range end (default 2 pi (pool size - 1))");
    incremental->add_option("--spacing", inc.spacing, "Maximum grid spacing")
        ->capture_default_str();
    incremental->add_option("--method", inc.method, "Kernel evaluation: closed or statevector")
        ->capture_default_str();
    incremental->add_option("--out-dir", inc.out_dir, "Output directory")->capture_default_str();

    // ingest-check
    std::string check_input;
    InputConfig check_in;
    std::optional<std::size_t> check_per_class_unused;
    std::string check_out;
    auto *check = app.add_subcommand("ingest-check", "Validate a sample table and summarize PCA");
    check->add_option("--input", check_input, "Delimited sample table")->required();
    check->add_option("--delimiter", check_in.delimiter, "Field delimiter")->capture_default_str();
    check->add_flag("--has-header", check_in.has_header, "First non-blank line is a header");
    check->add_option("--label-column", check_in.label_column, "Label column index or name");
    check->add_option("--out", check_out, "Also write the JSON summary here");

    // rerun
    std::string manifest_path;
    std::string rerun_out;
    auto *rerun = app.add_subcommand("rerun", "Re-execute a run from its manifest");
    rerun->add_option("--manifest", manifest_path, "Manifest JSON")->required();
    rerun->add_option("--out-dir", rerun_out, "Override the output directory");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << "\n";
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kConfigurationError;
    }

    try {
        if (landscape->parsed()) {
            land.n = land_n;
            land.gamma_start = land_start;
            land.gamma_end = land_end;
            land.samples = land_samples;
            land.input = finish_input(land_input, land_in, land_per_class);
            return run_landscape(land, out);
        }
        if (scaling->parsed()) {
            return run_scaling(scal, out, err);
        }
        if (incremental->parsed()) {
            inc.toy_n = inc_toy;
            inc.gamma_start = inc_start;
            inc.gamma_end = inc_end;
            inc.input = finish_input(inc_input, inc_in, inc_per_class);
            return run_incremental(inc, out);
        }
        if (check->parsed()) {
            check_in.path = check_input;
            return run_ingest_check(check_in, check_out, out);
        }
        if (rerun->parsed()) {
            return run_from_manifest(manifest_path, rerun_out, out, err);
        }
    } catch (const InvalidSpecError &e) {
        err << "error: " << e.what() << "\n";
        return kConfigurationError;
    } catch (const ConfigurationError &e) {
        err << "error: " << e.what() << "\n";
        return kConfigurationError;
    } catch (const DataError &e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kConfigurationError;
}

} // namespace tascope::cli
