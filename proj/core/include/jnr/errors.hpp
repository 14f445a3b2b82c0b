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

#include <stdexcept>
#include <string>
#include <vector>

namespace jnr {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible vector/matrix/tuple dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A point handed to `barycentric` lies outside the frame's affine span.
struct SpanMismatch : Error {
    using Error::Error;
};

/// A path endpoint violates its constraint set beyond the endpoint tolerance.
struct ConstraintViolation : Error {
    using Error::Error;
};

/// The two-constraint path construction requires matrix dimension >= 3.
struct InsufficientDimension : Error {
    using Error::Error;
};

/// Predictor-corrector tracking stalled and all waypoint retries failed.
struct PathTrackingFailed : Error {
    using Error::Error;
};

/// No vertex-drop or degeneracy event was found along a witness path.
struct EventScanFailed : Error {
    using Error::Error;
};

/// The reduction loop stopped above its target atom count.
struct ReductionStalled : Error {
    using Error::Error;
};

/// Malformed or inconsistent serialized input.
struct FormatError : Error {
    using Error::Error;
};

/// The queried point is certified to lie outside conv(W).
/// Carries the separating direction and its validated margin.
struct NonMemberError : Error {
    NonMemberError(std::string msg, std::vector<double> direction, double margin)
        : Error(std::move(msg)), certificate(std::move(direction)), margin(margin) {}

    std::vector<double> certificate;
    double margin;
};

}  // namespace jnr
