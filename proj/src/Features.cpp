// Copyright 2026 The qcrack Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcrack/Features.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qcrack::data {

namespace {

constexpr std::size_t kCell = kPatchSize / kGridCells;
constexpr double kWeakEdge = 6.0;
constexpr double kStrongEdge = 18.0;
constexpr double kOrientationScale = 32.0;

} // namespace

FeatureVector extract_features(const Patch &patch) {
    patch.validate();
    const std::size_t n = kPatchSize;
    std::vector<double> mag(kPatchPixels);
    std::vector<std::uint8_t> bin(kPatchPixels);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t up = r == 0 ? 0 : r - 1;
        const std::size_t down = r + 1 == n ? r : r + 1;
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t left = c == 0 ? 0 : c - 1;
            const std::size_t right = c + 1 == n ? c : c + 1;
            const double gx = (patch.at(r, right) - patch.at(r, left)) / 2.0;
            const double gy = (patch.at(down, c) - patch.at(up, c)) / 2.0;
            const std::size_t i = r * n + c;
            mag[i] = std::hypot(gx, gy);
            double angle = std::atan2(gy, gx);
            if (angle < 0.0) {
                angle += std::numbers::pi;
            }
            bin[i] = static_cast<std::uint8_t>(
                std::min(2.0, std::floor(angle / (std::numbers::pi / 3.0))));
        }
    }

    FeatureVector out;
    out.values.assign(kBuiltinFeatureDim, 0.0);
    const double cell_pixels = static_cast<double>(kCell * kCell);
    for (std::size_t gr = 0; gr < kGridCells; ++gr) {
        for (std::size_t gc = 0; gc < kGridCells; ++gc) {
            double lo = 255.0;
            double hi = 0.0;
            double sum = 0.0;
            double weak = 0.0;
            double strong = 0.0;
            double orient[3] = {0.0, 0.0, 0.0};
            for (std::size_t r = gr * kCell; r < (gr + 1) * kCell; ++r) {
                for (std::size_t c = gc * kCell; c < (gc + 1) * kCell; ++c) {
                    const double v = patch.at(r, c);
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                    sum += v;
                    const std::size_t i = r * n + c;
                    if (mag[i] > kStrongEdge) {
                        strong += 1.0;
                    } else if (mag[i] > kWeakEdge) {
                        weak += 1.0;
                    }
                    orient[bin[i]] += mag[i];
                }
            }
            double *cell = out.values.data() + (gr * kGridCells + gc) * kValuesPerCell;
            cell[0] = lo / 255.0;
            cell[1] = sum / cell_pixels / 255.0;
            cell[2] = hi / 255.0;
            cell[3] = weak / cell_pixels;
            cell[4] = strong / cell_pixels;
            for (std::size_t b = 0; b < 3; ++b) {
                cell[5 + b] = orient[b] / (cell_pixels * kOrientationScale);
            }
        }
    }
    return out;
}

std::vector<FeatureVector> extract_all(const std::vector<Patch> &patches) {
    std::vector<FeatureVector> out(patches.size());
    parallel_for(patches.size(), [&](std::size_t i) { out[i] = extract_features(patches[i]); });
    return out;
}

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    for (auto &f : fields) {
        while (!f.empty() && (f.back() == ' ' || f.back() == '\r')) {
            f.pop_back();
        }
        f.erase(0, f.find_first_not_of(' '));
    }
    return fields;
}

} // namespace

ImportedFeatures import_features(const std::filesystem::path &path) {
    std::istringstream in(read_file(path));
    ImportedFeatures out;
    std::string line;
    std::size_t lineno = 0;
    auto where = [&] { return path.string() + ": line " + std::to_string(lineno) + ": "; };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \r\t") == std::string::npos) {
            continue;
        }
        const auto fields = split_csv(line);
        if (out.ids.empty() && fields[0] == "id") {
            continue;
        }
        if (fields.size() < 3) {
            throw FormatError(where() + "expected id,label and at least one feature");
        }
        const std::size_t dim = fields.size() - 2;
        if (!out.features.empty() && dim != out.dim()) {
            throw FormatError(where() + "row has " + std::to_string(dim) +
                              " features, expected " + std::to_string(out.dim()));
        }
        Label label;
        try {
            label = parse_label(fields[1]);
        } catch (const DataError &e) {
            throw FormatError(where() + e.what());
        }
        FeatureVector fv;
        fv.source = FeatureSource::Imported;
        fv.values.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const auto &f = fields[k + 2];
            const auto res = std::from_chars(f.data(), f.data() + f.size(), fv.values[k]);
            if (res.ec != std::errc{} || res.ptr != f.data() + f.size() ||
                !std::isfinite(fv.values[k])) {
                throw FormatError(where() + "feature " + std::to_string(k) +
                                  " is not a finite number: '" + f + "'");
            }
        }
        out.ids.push_back(fields[0]);
        out.labels.push_back(label);
        out.features.push_back(std::move(fv));
    }
    return out;
}

std::string features_csv(const ImportedFeatures &features) {
    std::ostringstream os;
    os.precision(17);
    os << "id,label";
    for (std::size_t k = 0; k < features.dim(); ++k) {
        os << ",f_" << k;
    }
    os << '\n';
    for (std::size_t i = 0; i < features.ids.size(); ++i) {
        os << features.ids[i] << ',' << label_name(features.labels[i]);
        for (double v : features.features[i].values) {
            os << ',' << v;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace qcrack::data
