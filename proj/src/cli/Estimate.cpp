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

#include "qcrack/cli/Estimate.hpp"

#include "qcrack/Dataset.hpp"
#include "qcrack/Error.hpp"

namespace qcrack::cli {

BackendProfile profile_from_json(const nlohmann::json &j) {
    BackendProfile p;
    try {
        p.name = j.at("name").get<std::string>();
        p.clops = j.at("clops").get<std::uint64_t>();
        p.qv = j.value("qv", std::uint64_t{0});
        p.overhead_factor = j.value("overhead_factor", 1.0);
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("backend profile: ") + e.what());
    }
    if (p.clops == 0) {
        throw FormatError("backend profile '" + p.name + "': clops must be positive");
    }
    if (!(p.overhead_factor >= 1.0)) {
        throw FormatError("backend profile '" + p.name + "': overhead_factor must be >= 1");
    }
    return p;
}

nlohmann::json to_json(const BackendProfile &p) {
    return {{"name", p.name}, {"clops", p.clops}, {"qv", p.qv},
            {"overhead_factor", p.overhead_factor}};
}

BackendProfile find_profile(const std::filesystem::path &dir, const std::string &name) {
    for (const auto &candidate : {dir / (name + ".json"), dir / ("ibmq_" + name + ".json")}) {
        if (std::filesystem::exists(candidate)) {
            try {
                return profile_from_json(nlohmann::json::parse(data::read_file(candidate)));
            } catch (const nlohmann::json::parse_error &e) {
                throw FormatError(candidate.string() + ": " + e.what());
            }
        }
    }
    throw IoError("no backend profile '" + name + "' in '" + dir.string() + "'");
}

RuntimeEstimate estimate_runtime(const BackendProfile &profile, std::uint64_t n_calls,
                                 std::uint64_t shots, std::uint64_t layers) {
    RuntimeEstimate e;
    e.device_seconds = static_cast<double>(n_calls) * static_cast<double>(shots) *
                       static_cast<double>(layers) / static_cast<double>(profile.clops);
    e.wall_seconds = e.device_seconds * profile.overhead_factor;
    return e;
}

} // namespace qcrack::cli
