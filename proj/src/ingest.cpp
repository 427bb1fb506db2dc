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

#include "tascope/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "tascope/errors.hpp"
#include "tascope/io.hpp"
#include "tascope/rng.hpp"
#include "tascope/summation.hpp"

namespace tascope {

namespace {

std::size_t resolve_label_column(const LoadOptions &options,
                                 const std::vector<std::string> &header,
                                 std::size_t n_columns) {
    if (!options.label_column || options.label_column->empty()) {
        return n_columns - 1;
    }
    const std::string &spec = *options.label_column;
    long long index = 0;
    const auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), index);
    if (ec == std::errc{} && ptr == spec.data() + spec.size()) {
        const long long resolved = index < 0 ? static_cast<long long>(n_columns) + index : index;
        if (resolved < 0 || resolved >= static_cast<long long>(n_columns)) {
            throw ConfigurationError("label column " + spec + " is out of range for " +
                                     std::to_string(n_columns) + " columns");
        }
        return static_cast<std::size_t>(resolved);
    }
    const auto it = std::find(header.begin(), header.end(), spec);
    if (it == header.end()) {
        throw ConfigurationError("label column '" + spec + "' not found in header");
    }
    return static_cast<std::size_t>(it - header.begin());
}

} // namespace

RawSampleTable parse_samples(std::istream &in, const LoadOptions &options) {
    RawSampleTable table;
    std::vector<std::string> header;
    std::size_t n_columns = 0;
    std::size_t label_col = 0;
    std::set<double> raw_labels;
    bool header_pending = options.has_header;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        auto fields = io::split(line, options.delimiter);
        if (header_pending) {
            header = std::move(fields);
            n_columns = header.size();
            header_pending = false;
            continue;
        }
        if (n_columns == 0) {
            n_columns = fields.size();
        }
        if (n_columns < 2) {
            throw ParseError(line_no, "need at least one band column and a label column");
        }
        if (table.n_bands == 0) {
            label_col = resolve_label_column(options, header, n_columns);
            table.n_bands = n_columns - 1;
            for (std::size_t c = 0; c < n_columns; ++c) {
                if (c != label_col) {
                    table.band_names.push_back(header.empty() ? "band" + std::to_string(c)
                                                              : header[c]);
                }
            }
        }
        if (fields.size() != n_columns) {
            throw ParseError(line_no, "expected " + std::to_string(n_columns) +
                                          " columns, found " + std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < n_columns; ++c) {
            double v = 0.0;
            try {
                v = io::parse_double(fields[c]);
            } catch (const DataError &e) {
                throw ParseError(line_no, "column " + std::to_string(c + 1) + ": " + e.what());
            }
            if (c == label_col) {
                if (v != 0.0 && v != 1.0 && v != -1.0) {
                    throw DomainError("line " + std::to_string(line_no) +
                                      ": label must be 0/1 or -1/+1, got " + fields[c]);
                }
                raw_labels.insert(v);
                table.labels.push_back(v == 1.0 ? +1 : -1);
            } else {
                table.bands.push_back(v);
            }
        }
    }
    if (raw_labels.size() > 2) {
        throw DomainError("labels mix the 0/1 and -1/+1 conventions");
    }
    if (table.rows() < 2) {
        throw DataError("sample table needs at least 2 rows, found " +
                        std::to_string(table.rows()));
    }
    return table;
}

RawSampleTable load_samples(const std::filesystem::path &path, const LoadOptions &options) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    return parse_samples(in, options);
}

std::vector<double> sample_covariance(const RawSampleTable &table,
                                      std::span<const double> mean) {
    const std::size_t d = table.n_bands;
    const std::size_t n = table.rows();
    std::vector<double> cov(d * d, 0.0);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            CompensatedSum s;
            for (std::size_t r = 0; r < n; ++r) {
                s.add((table.at(r, a) - mean[a]) * (table.at(r, b) - mean[b]));
            }
            const double v = s.value() / static_cast<double>(n - 1);
            cov[a * d + b] = v;
            cov[b * d + a] = v;
        }
    }
    return cov;
}

PcaModel fit_pca(const RawSampleTable &table) {
    const std::size_t d = table.n_bands;
    const std::size_t n = table.rows();
    if (d == 0 || n < 2 || table.bands.size() != n * d) {
        throw DataError("PCA needs a rectangular table with at least 2 rows");
    }

    PcaModel model;
    model.mean.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
        CompensatedSum s;
        for (std::size_t r = 0; r < n; ++r) {
            s.add(table.at(r, c));
        }
        model.mean[c] = s.value() / static_cast<double>(n);
    }
    const std::vector<double> cov = sample_covariance(table, model.mean);
    const auto multiply = [&](std::span<const double> v) {
        std::vector<double> out(d, 0.0);
        for (std::size_t a = 0; a < d; ++a) {
            CompensatedSum s;
            for (std::size_t b = 0; b < d; ++b) {
                s.add(cov[a * d + b] * v[b]);
            }
            out[a] = s.value();
        }
        return out;
    };
    const auto norm = [](std::span<const double> v) {
        CompensatedSum s;
        for (double x : v) {
            s.add(x * x);
        }
        return std::sqrt(s.value());
    };

    // Start from the covariance column of largest norm.
    std::vector<double> v(d, 0.0);
    double best = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<double> col(cov.begin() + static_cast<std::ptrdiff_t>(c * d),
                                cov.begin() + static_cast<std::ptrdiff_t>((c + 1) * d));
        const double nc = norm(col);
        if (nc > best) {
            best = nc;
            v = std::move(col);
        }
    }
    if (!(best > 0.0)) {
        throw DegenerateDataError("sample covariance is zero (all rows identical)");
    }
    for (double &x : v) {
        x /= best;
    }

    constexpr double kTolerance = 1e-12;
    constexpr std::size_t kMaxIterations = 1'000'000;
    bool converged = false;
    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        std::vector<double> w = multiply(v);
        const double nw = norm(w);
        if (!(nw > 0.0)) {
            throw DegenerateDataError("power iteration collapsed to zero");
        }
        double change = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            w[c] /= nw;
            change = std::max(change, std::fabs(w[c] - v[c]));
        }
        v = std::move(w);
        model.iterations = it;
        if (change < kTolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw DegenerateDataError(
            "power iteration did not converge; leading eigenvalue is not separated");
    }

    std::size_t largest = 0;
    for (std::size_t c = 1; c < d; ++c) {
        if (std::fabs(v[c]) > std::fabs(v[largest])) {
            largest = c;
        }
    }
    if (v[largest] < 0.0) {
        for (double &x : v) {
            x = -x;
        }
    }
    const std::vector<double> cv = multiply(v);
    CompensatedSum rayleigh;
    for (std::size_t c = 0; c < d; ++c) {
        rayleigh.add(v[c] * cv[c]);
    }
    model.eigenvalue = std::max(0.0, rayleigh.value());
    model.component = std::move(v);
    return model;
}

std::vector<double> project(const RawSampleTable &table, const PcaModel &model) {
    if (model.component.size() != table.n_bands || model.mean.size() != table.n_bands) {
        throw ConfigurationError("PCA model dimension does not match the table");
    }
    std::vector<double> out(table.rows());
    for (std::size_t r = 0; r < table.rows(); ++r) {
        CompensatedSum s;
        for (std::size_t c = 0; c < table.n_bands; ++c) {
            s.add((table.at(r, c) - model.mean[c]) * model.component[c]);
        }
        out[r] = s.value();
    }
    return out;
}

LabeledDataset project_and_rescale(const RawSampleTable &table, const PcaModel &model) {
    std::vector<double> p = project(table, model);
    const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
    const double min = *lo;
    const double range = *hi - *lo;
    if (!(range > 0.0)) {
        throw DegenerateDataError("all rows project to the same principal-component value");
    }
    for (double &x : p) {
        x = std::clamp((x - min) / range, 0.0, 1.0);
    }
    return LabeledDataset::from_scalars(std::move(p), table.labels);
}

LabeledDataset balanced_subsample(const LabeledDataset &d, std::size_t per_class,
                                  std::uint64_t seed) {
    if (per_class == 0) {
        throw ConfigurationError("per-class sample count must be >= 1");
    }
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.labels[i] == 1) {
            positive.push_back(i);
        } else if (d.labels[i] == -1) {
            negative.push_back(i);
        }
    }
    if (positive.size() < per_class || negative.size() < per_class) {
        throw ConfigurationError("cannot draw " + std::to_string(per_class) +
                                 " points per class from classes of size " +
                                 std::to_string(positive.size()) + " and " +
                                 std::to_string(negative.size()));
    }
    Rng rng(seed);
    rng.shuffle(positive);
    rng.shuffle(negative);
    std::vector<std::size_t> chosen(positive.begin(),
                                    positive.begin() + static_cast<std::ptrdiff_t>(per_class));
    chosen.insert(chosen.end(), negative.begin(),
                  negative.begin() + static_cast<std::ptrdiff_t>(per_class));
    std::sort(chosen.begin(), chosen.end());
    return d.subset(chosen);
}

RawSampleTable synthetic_two_blob_table(std::size_t per_class, std::uint64_t seed,
                                        double separation) {
    constexpr std::size_t kBands = 4;
    RawSampleTable table;
    table.n_bands = kBands;
    table.band_names = {"R", "G", "B", "NIR"};
    Rng rng(seed);
    for (std::size_t i = 0; i < per_class; ++i) {
        for (Label label : {+1, -1}) {
            const double center = label == 1 ? separation : 0.0;
            for (std::size_t b = 0; b < kBands; ++b) {
                table.bands.push_back(center + rng.standard_normal());
            }
            table.labels.push_back(label);
        }
    }
    return table;
}

} // namespace tascope
