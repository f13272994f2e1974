// errors.hpp -- exception taxonomy for the steklov library
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

// Base class for all library failures. Everything thrown on purpose derives
// from this, so callers can catch one type at the boundary.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- geometry -------------------------------------------------------------

// t == 0: the spheres are concentric and the bispherical map degenerates
// (alpha -> infinity). The concentric closed form handles this case.
struct DegenerateConcentric : Error {
    using Error::Error;
};

// t >= r2 - r1: the inner sphere is not strictly inside the outer one.
struct Overlap : Error {
    using Error::Error;
};

// Radii or dimension out of range (need n >= 1, 0 < r1 < r2, all finite).
struct BadRadii : Error {
    using Error::Error;
};

// Cartesian point within 1e-13 * alpha of a focus of the bispherical map,
// where the inverse map loses all precision.
struct PoleSingular : Error {
    using Error::Error;
};

// ---- gegenbauer -----------------------------------------------------------

struct BadDegree : Error {
    using Error::Error;
};

// Argument s outside [-1, 1].
struct OutOfRange : Error {
    using Error::Error;
};

// ---- spectral -------------------------------------------------------------

// Truncation order below the minimum (M >= 8).
struct TruncationTooSmall : Error {
    using Error::Error;
};

// Iterative eigensolve failed to reach its residual target, or the adaptive
// truncation loop hit its cap without stabilising.
struct NoConvergence : Error {
    using Error::Error;
};

// xi1 - xi2 < 1e-6: the truncation order required for a trustworthy answer
// is beyond what double precision supports here.
struct GapTooSmall : Error {
    using Error::Error;
};

// ---- eigenfield -----------------------------------------------------------

struct OutsideAnnulus : Error {
    using Error::Error;
};

// Adaptive boundary quadrature failed to stabilise.
struct QuadratureFail : Error {
    using Error::Error;
};

// ---- finite-difference oracle ---------------------------------------------

// A block pivot in the layer elimination became numerically singular.
struct SingularSchur : Error {
    using Error::Error;
};

// Inverse power iteration on the reduced boundary operator did not converge.
struct NotConverged : Error {
    using Error::Error;
};

// Grid too coarse for the oracle's error model (need N >= 32).
struct BadGrid : Error {
    using Error::Error;
};

// ---- emit -----------------------------------------------------------------

struct EmitError : Error {
    using Error::Error;
};

}  // namespace steklov
