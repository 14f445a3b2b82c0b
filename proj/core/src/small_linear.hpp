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
#include <cstddef>
#include <vector>

namespace jnr::detail {

// Solves the n x n system A x = b in place (A row-major) by Gaussian
// elimination with partial pivoting. Returns false when a pivot is
// numerically zero. Intended for the tiny systems (n <= 8) of this library.
inline bool solve_dense(int n, std::vector<double>& A, std::vector<double>& b) {
    const auto at = [&](int i, int j) -> double& { return A[static_cast<size_t>(i) * n + j]; };
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (!(best > 1e-300)) return false;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
        }
        const double inv = 1.0 / at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = at(r, col) * inv;
            if (f == 0.0) continue;
            at(r, col) = 0.0;
            for (int j = col + 1; j < n; ++j) at(r, j) -= f * at(col, j);
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[static_cast<size_t>(r)];
        for (int j = r + 1; j < n; ++j) acc -= at(r, j) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(r)] = acc / at(r, r);
    }
    return true;
}

}  // namespace jnr::detail
