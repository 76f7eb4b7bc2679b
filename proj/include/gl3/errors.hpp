// Typed error taxonomy shared by every numerical routine in the library.
// Each failure mode gets its own exception class so callers (and the CLI)
// can map outcomes to exit codes without parsing message strings.
#pragma once

#include <stdexcept>
#include <string>

namespace gl3 {

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Gamma-function argument within the pole margin of a nonpositive integer.
struct PoleOfGamma final : NumericError {
  explicit PoleOfGamma(const std::string& what) : NumericError(what) {}
};

// A declared pole family of a Mellin-Barnes integrand touches (or crosses)
// the requested vertical contour.
struct PoleOnContour final : NumericError {
  explicit PoleOnContour(const std::string& what) : NumericError(what) {}
};

// An adaptive quadrature or series refinement loop hit its cap without the
// successive-refinement test being satisfied.
struct NonConvergent final : NumericError {
  explicit NonConvergent(const std::string& what) : NumericError(what) {}
};

// Parameters sit on (or within margin of) an exceptional set where the
// requested quantity degenerates, e.g. a spectral parameter that turns a
// series coefficient into a gamma pole.
struct DegenerateParameter final : NumericError {
  explicit DegenerateParameter(const std::string& what) : NumericError(what) {}
};

// A closed-form prefactor that must be divided out is numerically zero.
struct DegeneratePrefactor final : NumericError {
  explicit DegeneratePrefactor(const std::string& what) : NumericError(what) {}
};

// Vector/matrix operands with incompatible dimensions.
struct DimensionMismatch final : NumericError {
  explicit DimensionMismatch(const std::string& what) : NumericError(what) {}
};

// Input outside the supported range of an algorithm (documented per routine).
struct RangeExceeded final : NumericError {
  explicit RangeExceeded(const std::string& what) : NumericError(what) {}
};

}  // namespace gl3
