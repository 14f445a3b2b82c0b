// Copyright 2026 The jnr Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace jnr {

/// splitmix64 mixing step; used to derive independent stream seeds.
inline uint64_t mix_seed(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for logical substream `index` of a master seed. Samples, trials and
/// waypoint searches each draw from their own derived stream so serial and
/// parallel execution produce identical results.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return mix_seed(master ^ mix_seed(index + 1));
}

/// Deterministic random source: std::mt19937_64 (fully specified by the
/// standard) with an explicit Box-Muller transform, so streams are
/// reproducible across platforms. std::normal_distribution is deliberately
/// avoided; its output is implementation-defined.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    /// Uniformly random unit vector in C^n (normalized complex Gaussian).
    std::vector<std::complex<double>> unit_vector(int n) {
        std::vector<std::complex<double>> v(static_cast<size_t>(n));
        double nrm2 = 0.0;
        do {
            nrm2 = 0.0;
            for (auto& z : v) {
                z = complex_gaussian();
                nrm2 += std::norm(z);
            }
        } while (nrm2 < 1e-30);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (auto& z : v) z *= inv;
        return v;
    }

    uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace jnr
