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

#include "qcrack/cli/RunConfig.hpp"

#include "qcrack/Dataset.hpp"
#include "qcrack/Error.hpp"
#include "qcrack/Features.hpp"
#include "qcrack/Synthetic.hpp"

#include <set>

namespace qcrack::cli {

using nlohmann::json;

namespace {

void only_keys(const json &j, const std::string &where, std::set<std::string> allowed) {
    if (!j.is_object()) {
        throw FormatError(where + " must be a JSON object");
    }
    for (const auto &[key, _] : j.items()) {
        if (!allowed.count(key)) {
            throw FormatError(where + ": unknown key '" + key + "'");
        }
    }
}

std::uint64_t get_uint(const json &j, const std::string &key, const std::string &where) {
    const auto &v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw FormatError(where + "." + key + " must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

double get_number(const json &j, const std::string &key, const std::string &where) {
    const auto &v = j.at(key);
    if (!v.is_number()) {
        throw FormatError(where + "." + key + " must be a number");
    }
    return v.get<double>();
}

std::string get_string(const json &j, const std::string &key, const std::string &where) {
    const auto &v = j.at(key);
    if (!v.is_string()) {
        throw FormatError(where + "." + key + " must be a string");
    }
    return v.get<std::string>();
}

DataSource parse_data(const json &j) {
    DataSource d;
    if (!j.is_object() || !j.contains("source")) {
        throw FormatError("data must be an object with a \"source\"");
    }
    const auto source = get_string(j, "source", "data");
    if (source == "synthetic") {
        only_keys(j, "data", {"source", "n_crack", "n_clean", "seed"});
        d.kind = DataSource::Kind::Synthetic;
        if (j.contains("n_crack")) {
            d.n_crack = get_uint(j, "n_crack", "data");
        }
        if (j.contains("n_clean")) {
            d.n_clean = get_uint(j, "n_clean", "data");
        }
        if (j.contains("seed")) {
            d.seed = get_uint(j, "seed", "data");
        }
    } else if (source == "dir") {
        only_keys(j, "data", {"source", "dir", "manifest"});
        d.kind = DataSource::Kind::Directory;
        if (!j.contains("dir")) {
            throw FormatError("data.dir is required for source \"dir\"");
        }
        d.dir = get_string(j, "dir", "data");
        d.manifest = j.contains("manifest") ? std::filesystem::path(get_string(j, "manifest", "data"))
                                            : d.dir / "manifest.csv";
    } else if (source == "features") {
        only_keys(j, "data", {"source", "path"});
        d.kind = DataSource::Kind::Features;
        if (!j.contains("path")) {
            throw FormatError("data.path is required for source \"features\"");
        }
        d.features = get_string(j, "path", "data");
    } else {
        throw FormatError("data.source must be synthetic, dir, or features; got '" + source + "'");
    }
    return d;
}

} // namespace

data::SplitConfig RunConfig::resolved_split() const {
    data::SplitConfig s = split;
    s.seed = split_seed.value_or(seed);
    return s;
}

std::uint64_t RunConfig::data_seed() const { return data.seed.value_or(seed); }

RunConfig parse_run_config(const json &j) {
    only_keys(j, "config", {"circuit", "method", "epochs", "seed", "shots", "batch_size",
                            "split", "data", "out", "timing"});
    RunConfig c;
    try {
        if (j.contains("circuit")) {
            c.circuit = circuit::spec_from_json(j["circuit"]);
        }
        if (j.contains("method")) {
            c.method = autodiff::method_from_json(j["method"]);
        }
        if (j.contains("epochs")) {
            c.epochs = get_uint(j, "epochs", "config");
        }
        if (j.contains("seed")) {
            c.seed = get_uint(j, "seed", "config");
        }
        if (j.contains("shots")) {
            c.shots = get_uint(j, "shots", "config");
        }
        if (j.contains("batch_size")) {
            c.batch_size = get_uint(j, "batch_size", "config");
            if (c.batch_size == 0) {
                throw FormatError("config.batch_size must be >= 1");
            }
        }
        if (j.contains("split")) {
            const auto &s = j["split"];
            only_keys(s, "split", {"train", "val", "test", "seed"});
            if (s.contains("train")) {
                c.split.train = get_number(s, "train", "split");
            }
            if (s.contains("val")) {
                c.split.val = get_number(s, "val", "split");
            }
            if (s.contains("test")) {
                c.split.test = get_number(s, "test", "split");
            }
            if (s.contains("seed")) {
                c.split_seed = get_uint(s, "seed", "split");
            }
            try {
                c.split.validate();
            } catch (const ArgumentError &e) {
                throw FormatError(std::string("split: ") + e.what());
            }
        }
        if (j.contains("data")) {
            c.data = parse_data(j["data"]);
        }
        if (j.contains("out")) {
            c.out = get_string(j, "out", "config");
        }
        if (j.contains("timing")) {
            if (!j["timing"].is_boolean()) {
                throw FormatError("config.timing must be a boolean");
            }
            c.timing = j["timing"].get<bool>();
        }
    } catch (const json::exception &e) {
        throw FormatError(std::string("config: ") + e.what());
    }
    if (c.shots > 0 && std::holds_alternative<autodiff::Backprop>(c.method)) {
        throw FormatError("config: backprop cannot be combined with shots > 0");
    }
    return c;
}

json to_json(const RunConfig &c) {
    json data;
    switch (c.data.kind) {
    case DataSource::Kind::Synthetic:
        data = {{"source", "synthetic"}, {"n_crack", c.data.n_crack}, {"n_clean", c.data.n_clean}};
        if (c.data.seed) {
            data["seed"] = *c.data.seed;
        }
        break;
    case DataSource::Kind::Directory:
        data = {{"source", "dir"}, {"dir", c.data.dir.string()},
                {"manifest", c.data.manifest.string()}};
        break;
    case DataSource::Kind::Features:
        data = {{"source", "features"}, {"path", c.data.features.string()}};
        break;
    }
    json split = {{"train", c.split.train}, {"val", c.split.val}, {"test", c.split.test}};
    if (c.split_seed) {
        split["seed"] = *c.split_seed;
    }
    return {{"circuit", circuit::to_json(c.circuit)},
            {"method", autodiff::to_json(c.method)},
            {"epochs", c.epochs},
            {"seed", c.seed},
            {"shots", c.shots},
            {"batch_size", c.batch_size},
            {"split", split},
            {"data", data},
            {"out", c.out.string()},
            {"timing", c.timing}};
}

std::vector<model::Example> PreparedData::subset(const std::vector<std::size_t> &idx) const {
    std::vector<model::Example> out;
    out.reserve(idx.size());
    for (auto i : idx) {
        out.push_back(examples[i]);
    }
    return out;
}

std::vector<std::string> PreparedData::ids() const {
    std::vector<std::string> out;
    out.reserve(examples.size());
    for (const auto &e : examples) {
        out.push_back(e.id);
    }
    return out;
}

PreparedData prepare_data(const RunConfig &config) {
    PreparedData pd;
    if (config.data.kind == DataSource::Kind::Features) {
        auto imported = data::import_features(config.data.features);
        for (std::size_t i = 0; i < imported.ids.size(); ++i) {
            pd.examples.push_back({imported.ids[i], std::move(imported.features[i].values),
                                   static_cast<int>(imported.labels[i])});
        }
    } else {
        const auto patches =
            config.data.kind == DataSource::Kind::Synthetic
                ? data::generate_synthetic(config.data.n_crack, config.data.n_clean,
                                           config.data_seed())
                : data::load_dataset(config.data.dir, config.data.manifest);
        auto features = data::extract_all(patches);
        for (std::size_t i = 0; i < patches.size(); ++i) {
            pd.examples.push_back({patches[i].id, std::move(features[i].values),
                                   static_cast<int>(patches[i].label)});
        }
    }
    pd.feature_dim = pd.examples.empty() ? 0 : pd.examples.front().features.size();
    std::vector<int> labels;
    labels.reserve(pd.examples.size());
    for (const auto &e : pd.examples) {
        labels.push_back(e.label);
    }
    pd.split = data::split(labels, config.resolved_split());
    return pd;
}

} // namespace qcrack::cli
