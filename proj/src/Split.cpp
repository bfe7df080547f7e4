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

#include "qcrack/Split.hpp"

#include "qcrack/Error.hpp"
#include "qcrack/Log.hpp"
#include "qcrack/Rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qcrack::data {

void SplitConfig::validate() const {
    for (double r : {train, val, test}) {
        if (!std::isfinite(r) || r < 0.0) {
            throw ArgumentError("split ratios must be finite and nonnegative");
        }
    }
    if (std::abs(train + val + test - 1.0) > 1e-9) {
        throw ArgumentError("split ratios must sum to 1");
    }
}

std::array<std::size_t, 3> apportion(std::size_t n, const SplitConfig &config) {
    const std::array<double, 3> ratios{config.train, config.val, config.test};
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> remainders{};
    std::size_t assigned = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        double quota = static_cast<double>(n) * ratios[k];
        // Snap products like 175 * (4/7) that land a hair off an integer.
        if (std::abs(quota - std::round(quota)) < 1e-9) {
            quota = std::round(quota);
        }
        counts[k] = static_cast<std::size_t>(std::floor(quota));
        remainders[k] = quota - std::floor(quota);
        assigned += counts[k];
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainders[a] > remainders[b];
    });
    for (std::size_t k = 0; assigned < n; ++k) {
        ++counts[order[k % 3]];
        ++assigned;
    }
    return counts;
}

SplitIndices split(std::span<const int> labels, const SplitConfig &config) {
    config.validate();
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i]].push_back(i);
    }
    SplitIndices out;
    const std::array<double, 3> ratios{config.train, config.val, config.test};
    constexpr const char *names[3] = {"train", "val", "test"};
    // Descending label order puts the crack class first in every split.
    for (auto it = by_class.rbegin(); it != by_class.rend(); ++it) {
        auto &members = it->second;
        Rng rng(config.seed, 0x5EED0000ULL + static_cast<std::uint64_t>(it->first));
        rng.shuffle(std::span{members});
        const auto counts = apportion(members.size(), config);
        std::vector<std::size_t> *targets[3] = {&out.train, &out.val, &out.test};
        std::size_t pos = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            if (counts[k] == 0 && ratios[k] > 0.0) {
                std::string msg = std::string("split '") + names[k] +
                                  "' receives no samples of class " +
                                  std::to_string(it->first) + " despite a positive ratio";
                warn(msg);
                out.warnings.push_back(std::move(msg));
            }
            targets[k]->insert(targets[k]->end(), members.begin() + static_cast<std::ptrdiff_t>(pos),
                               members.begin() + static_cast<std::ptrdiff_t>(pos + counts[k]));
            pos += counts[k];
        }
    }
    return out;
}

nlohmann::json split_record(std::span<const std::string> ids, const SplitIndices &indices,
                            const SplitConfig &config) {
    auto names = [&](const std::vector<std::size_t> &idx) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto i : idx) {
            arr.push_back(ids[i]);
        }
        return arr;
    };
    return {{"seed", config.seed},
            {"ratios", {{"train", config.train}, {"val", config.val}, {"test", config.test}}},
            {"train", names(indices.train)},
            {"val", names(indices.val)},
            {"test", names(indices.test)}};
}

} // namespace qcrack::data
