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

#include "qcrack/Checkpoint.hpp"

#include "qcrack/Error.hpp"

namespace qcrack::model {

namespace {

const nlohmann::json &field(const nlohmann::json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("checkpoint: missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<double> numbers(const nlohmann::json &j, const char *key) {
    const auto &v = field(j, key);
    if (!v.is_array()) {
        throw FormatError(std::string("checkpoint: '") + key + "' must be an array");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto &x : v) {
        if (!x.is_number()) {
            throw FormatError(std::string("checkpoint: '") + key + "' holds a non-number");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

LinearLayer layer_from_json(const nlohmann::json &j) {
    LinearLayer l;
    l.in_dim = field(j, "in_dim").get<std::size_t>();
    l.out_dim = field(j, "out_dim").get<std::size_t>();
    l.weights = numbers(j, "weights");
    l.bias = numbers(j, "bias");
    try {
        l.validate();
    } catch (const Error &e) {
        throw FormatError(std::string("checkpoint: ") + e.what());
    }
    return l;
}

} // namespace

nlohmann::json to_json(const LinearLayer &layer) {
    return {{"in_dim", layer.in_dim},
            {"out_dim", layer.out_dim},
            {"weights", layer.weights},
            {"bias", layer.bias}};
}

nlohmann::json to_json(const HybridModel &model) {
    return {{"circuit", circuit::to_json(model.qspec)},
            {"pre", to_json(model.pre)},
            {"qparams", model.qparams},
            {"post", to_json(model.post)}};
}

nlohmann::json to_json(const Checkpoint &checkpoint) {
    const auto &opt = checkpoint.optimizer;
    return {{"format", kCheckpointFormat},
            {"model", to_json(checkpoint.model)},
            {"optimizer",
             {{"lr", opt.config.lr},
              {"beta1", opt.config.beta1},
              {"beta2", opt.config.beta2},
              {"eps", opt.config.eps},
              {"step", opt.step},
              {"m", opt.m},
              {"v", opt.v}}},
            {"seed", checkpoint.seed},
            {"config", checkpoint.config}};
}

HybridModel model_from_json(const nlohmann::json &j) {
    try {
        HybridModel m;
        m.qspec = circuit::spec_from_json(field(j, "circuit"));
        m.pre = layer_from_json(field(j, "pre"));
        m.qparams = numbers(j, "qparams");
        m.post = layer_from_json(field(j, "post"));
        m.validate();
        return m;
    } catch (const FormatError &) {
        throw;
    } catch (const std::exception &e) {
        throw FormatError(std::string("checkpoint model: ") + e.what());
    }
}

Checkpoint checkpoint_from_json(const nlohmann::json &j) {
    if (!j.is_object() || j.value("format", "") != kCheckpointFormat) {
        throw FormatError(std::string("not a ") + kCheckpointFormat + " document");
    }
    Checkpoint c;
    c.model = model_from_json(field(j, "model"));
    const auto &opt = field(j, "optimizer");
    try {
        c.optimizer.config = {opt.at("lr").get<double>(), opt.at("beta1").get<double>(),
                              opt.at("beta2").get<double>(), opt.at("eps").get<double>()};
        c.optimizer.step = opt.at("step").get<std::uint64_t>();
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("checkpoint optimizer: ") + e.what());
    }
    c.optimizer.m = numbers(opt, "m");
    c.optimizer.v = numbers(opt, "v");
    if (c.optimizer.m.size() != c.model.parameter_count() ||
        c.optimizer.v.size() != c.model.parameter_count()) {
        throw FormatError("checkpoint: optimizer moments do not match parameter count");
    }
    c.seed = field(j, "seed").get<std::uint64_t>();
    c.config = j.value("config", nlohmann::json());
    return c;
}

} // namespace qcrack::model
