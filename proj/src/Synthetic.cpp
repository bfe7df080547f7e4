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

#include "qcrack/Synthetic.hpp"

#include "qcrack/Parallel.hpp"
#include "qcrack/Rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qcrack::data {

namespace {

constexpr int kSize = static_cast<int>(kPatchSize);

// Lattice noise in [-1, 1] with cell size `cell`, smoothstep-interpolated.
class ValueNoise {
  public:
    ValueNoise(int cell, Rng &rng) : cell_{cell}, nodes_{kSize / cell + 2} {
        lattice_.resize(static_cast<std::size_t>(nodes_ * nodes_));
        for (auto &v : lattice_) {
            v = rng.uniform(-1.0, 1.0);
        }
    }

    double operator()(int row, int col) const {
        const double fy = static_cast<double>(row) / cell_;
        const double fx = static_cast<double>(col) / cell_;
        const int y0 = static_cast<int>(fy);
        const int x0 = static_cast<int>(fx);
        const double ty = smooth(fy - y0);
        const double tx = smooth(fx - x0);
        const double a = node(y0, x0) + (node(y0, x0 + 1) - node(y0, x0)) * tx;
        const double b = node(y0 + 1, x0) + (node(y0 + 1, x0 + 1) - node(y0 + 1, x0)) * tx;
        return a + (b - a) * ty;
    }

  private:
    static double smooth(double t) { return t * t * (3.0 - 2.0 * t); }
    double node(int y, int x) const {
        return lattice_[static_cast<std::size_t>(y * nodes_ + x)];
    }

    int cell_;
    int nodes_;
    std::vector<double> lattice_;
};

} // namespace

SyntheticPatch render_synthetic(std::uint64_t patch_seed, Label label, std::string id) {
    Rng texture_rng(patch_seed, 0);
    const double base = texture_rng.uniform(105.0, 155.0);
    const ValueNoise coarse(32, texture_rng);
    const ValueNoise medium(8, texture_rng);
    const ValueNoise fine(2, texture_rng);

    std::vector<double> img(kPatchPixels);
    for (int r = 0; r < kSize; ++r) {
        for (int c = 0; c < kSize; ++c) {
            img[static_cast<std::size_t>(r * kSize + c)] =
                base + 9.0 * coarse(r, c) + 4.0 * medium(r, c) + 1.5 * fine(r, c) +
                texture_rng.uniform(-1.5, 1.5);
        }
    }

    const auto pores = texture_rng.below(4);
    for (std::uint64_t k = 0; k < pores; ++k) {
        const double cy = texture_rng.uniform(0.0, kSize);
        const double cx = texture_rng.uniform(0.0, kSize);
        const double radius = texture_rng.uniform(1.5, 4.0);
        const double depth = texture_rng.uniform(25.0, 50.0);
        const int lo_r = std::max(0, static_cast<int>(cy - radius) - 1);
        const int hi_r = std::min(kSize - 1, static_cast<int>(cy + radius) + 1);
        const int lo_c = std::max(0, static_cast<int>(cx - radius) - 1);
        const int hi_c = std::min(kSize - 1, static_cast<int>(cx + radius) + 1);
        for (int r = lo_r; r <= hi_r; ++r) {
            for (int c = lo_c; c <= hi_c; ++c) {
                const double dy = r + 0.5 - cy;
                const double dx = c + 0.5 - cx;
                if (dy * dy + dx * dx <= radius * radius) {
                    img[static_cast<std::size_t>(r * kSize + c)] -= depth;
                }
            }
        }
    }

    SyntheticPatch out;
    out.crack_mask.assign(kPatchPixels, 0);
    if (label == Label::Crack) {
        Rng crack_rng(patch_seed, 1);
        const bool vertical = crack_rng.below(2) == 1;
        const int start = static_cast<int>(crack_rng.below(kSize - 112 + 1));
        const int length = 112 + static_cast<int>(crack_rng.below(
                                     static_cast<std::uint64_t>(kSize - 112 - start + 1)));
        int cross = 16 + static_cast<int>(crack_rng.below(kSize - 32));
        const int width = 1 + static_cast<int>(crack_rng.below(2));
        const double depth = crack_rng.uniform(45.0, 85.0);
        int drift = crack_rng.below(2) == 1 ? 1 : -1;

        auto mark = [&](int main, int x) {
            for (int w = 0; w < width; ++w) {
                const int xx = x + w;
                if (xx < 0 || xx >= kSize) {
                    continue;
                }
                const int r = vertical ? main : xx;
                const int c = vertical ? xx : main;
                out.crack_mask[static_cast<std::size_t>(r * kSize + c)] = 1;
            }
        };
        for (int m = start; m < start + length; ++m) {
            mark(m, cross);
            if (crack_rng.uniform() < 0.35) {
                if (crack_rng.uniform() < 0.2) {
                    drift = -drift;
                }
                const int next = std::clamp(cross + drift, 0, kSize - 1);
                if (next != cross) {
                    cross = next;
                    mark(m, cross);
                }
            }
        }
        for (std::size_t i = 0; i < kPatchPixels; ++i) {
            if (out.crack_mask[i]) {
                img[i] -= depth * crack_rng.uniform(0.75, 1.0);
            }
        }
    }

    out.patch.id = std::move(id);
    out.patch.label = label;
    out.patch.pixels.resize(kPatchPixels);
    for (std::size_t i = 0; i < kPatchPixels; ++i) {
        out.patch.pixels[i] =
            static_cast<std::uint8_t>(std::clamp(std::lround(img[i]), 0L, 255L));
    }
    return out;
}

std::vector<Patch> generate_synthetic(std::size_t n_crack, std::size_t n_clean,
                                      std::uint64_t seed) {
    const std::size_t n = n_crack + n_clean;
    std::vector<Patch> patches(n);
    parallel_for(n, [&](std::size_t i) {
        const Label label = i < n_crack ? Label::Crack : Label::NoCrack;
        char id[64];
        std::snprintf(id, sizeof id, "syn_%05zu_%s", i,
                      label == Label::Crack ? "crack" : "no_crack");
        patches[i] = render_synthetic(derive_seed(seed, i), label, id).patch;
    });
    return patches;
}

} // namespace qcrack::data
