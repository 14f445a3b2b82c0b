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

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "jnr/errors.hpp"

namespace jnr {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using RVec = std::vector<double>;

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

/// Inner product, conjugate-linear in the first argument: sum conj(a_i)*b_i.
cplx inner(const CVec& a, const CVec& b);

double norm(const CVec& v);
double norm(const RVec& v);
double dot(const RVec& a, const RVec& b);

/// v / ||v||; throws Error on (near-)zero input.
CVec normalized(CVec v);

/// |  ||v|| - 1  | <= tol.
bool is_unit(const CVec& v, double tol = 1e-12);

/// Global-phase representative: largest-magnitude entry made real nonnegative.
/// Reporting convenience only; all algorithms are phase-invariant.
CVec canonical_phase(CVec v);

/// e^{i*phase} * v.
CVec phase_rotate(const CVec& v, double phase);

// ---------------------------------------------------------------------------
// Hermitian matrices and the eigensolver
// ---------------------------------------------------------------------------

/// Dense n x n complex Hermitian matrix (row-major). Construction validates
/// max_ij |A_ij - conj(A_ji)| <= tol * max(1, max_ij |A_ij|) and then
/// symmetrizes exactly, so downstream algebra sees an exactly Hermitian
/// matrix. Immutable after construction.
class HermitianMatrix {
  public:
    HermitianMatrix(int n, std::vector<cplx> entries, double tol = 1e-12);

    /// Zero matrix of dimension n.
    explicit HermitianMatrix(int n);

    int dim() const { return n_; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<cplx>& entries() const { return a_; }

    CVec apply(const CVec& h) const;

    /// real(h^dagger A h); asserts the imaginary part is round-off level.
    double expectation(const CVec& h) const;

    double frobenius_norm() const;
    double max_abs() const;

  private:
    int n_;
    std::vector<cplx> a_;
};

/// sum_k coeffs[k] * ms[k] - identity_shift * I. Exactly Hermitian by
/// construction (real coefficients).
HermitianMatrix hermitian_combination(std::span<const HermitianMatrix> ms, const RVec& coeffs,
                                      double identity_shift = 0.0);

struct EigenDecomposition {
    RVec eigenvalues;                  // ascending
    std::vector<CVec> eigenvectors;    // orthonormal, eigenvectors[i] pairs with eigenvalues[i]
};

/// Cyclic Jacobi for Hermitian matrices. Sweeps until the off-diagonal
/// Frobenius mass is <= 1e-14 * ||A||_F, at most 50 sweeps. Adequate for the
/// dense n <= 64 problems this library targets.
EigenDecomposition eig_hermitian(const HermitianMatrix& A);

/// Smallest eigenvalue with a unit eigenvector.
std::pair<double, CVec> lambda_min(const HermitianMatrix& A);

/// Spherical interpolation between unit vectors. h1 is phase-aligned to h0
/// first; near-parallel inputs yield the constant path h0.
CVec slerp(const CVec& h0, const CVec& h1, double t);

// ---------------------------------------------------------------------------
// Affine geometry
// ---------------------------------------------------------------------------

/// Affine span of a point set in R^d: an origin (the centroid), k orthonormal
/// in-span directions, and d-k orthonormal normals with offsets
/// c_j = normals[j] . origin.
struct AffineFrame {
    RVec origin;
    std::vector<RVec> directions;
    std::vector<RVec> normals;
    RVec offsets;
    double scale = 0.0;  // largest singular value of the difference matrix

    int ambient_dim() const { return static_cast<int>(origin.size()); }
    int dim() const { return static_cast<int>(directions.size()); }
    int codim() const { return static_cast<int>(normals.size()); }

    /// Coordinates of `point` along the frame directions (length dim()).
    RVec coords(const RVec& point) const;

    /// max_j |normals[j] . point - offsets[j]|.
    double span_violation(const RVec& point) const;

    /// Tolerance used to accept a point as lying in the span.
    double span_tolerance(double rank_tol = 1e-9) const;
};

/// Builds the affine span of `points`. The span dimension is the number of
/// singular values of the difference matrix above rank_tol * (largest).
AffineFrame affine_frame(const std::vector<RVec>& points, double rank_tol = 1e-9);

struct BarycentricResult {
    bool degenerate = false;
    RVec coords;                 // empty when degenerate
    double min_singular = 0.0;   // smallest singular value of the affine system
};

/// Affine weights of p relative to `points` (m points in R^r, m == r+1 for a
/// well-posed system). Degenerate when the affine system's smallest singular
/// value falls below degeneracy_tol * (largest), or when m > r+1.
BarycentricResult barycentric_coords(const std::vector<RVec>& points, const RVec& p,
                                     double degeneracy_tol = 1e-9);

/// Frame-level version: verifies p lies in the frame's span (SpanMismatch
/// otherwise), then solves in frame coordinates.
BarycentricResult barycentric(const AffineFrame& frame, const std::vector<RVec>& points,
                              const RVec& p, double degeneracy_tol = 1e-9);

// ---------------------------------------------------------------------------
// Real SVD (one-sided Jacobi)
// ---------------------------------------------------------------------------

/// Thin SVD of the matrix whose columns are `columns`, by one-sided Jacobi.
/// Singular values are returned in descending order; `left[i]` is zero for a
/// vanishing singular value. `right` holds the matching right singular
/// vectors (length = number of columns).
struct RealSvd {
    std::vector<RVec> left;
    RVec sigma;
    std::vector<RVec> right;
};

RealSvd svd_columns(const std::vector<RVec>& columns);

}  // namespace jnr
