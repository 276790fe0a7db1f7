#pragma once

#include "gtsr/core.hpp"

#include <array>

namespace gtsr {

// Real spherical harmonics, bands 0..2 (up to 9 coefficients per channel).
// Colors are clamp(sum c_lm * Y_lm(dir), 0) with no constant offset.

constexpr int kShMaxDegree = 2;
constexpr int kShMaxCoeffs = (kShMaxDegree + 1) * (kShMaxDegree + 1);

using ShCoeffs = std::array<Vec3, kShMaxCoeffs>;

inline int sh_coeff_count(int degree) { return (degree + 1) * (degree + 1); }

/// Basis values Y_lm(dir) for bands 0..degree. dir must be unit length.
void sh_basis(int degree, const Vec3& dir, real* out);

/// d(Y_lm)/d(dir) for bands 0..degree, one Vec3 per coefficient.
void sh_basis_grad(int degree, const Vec3& dir, Vec3* out);

/// RGB = clamp(sum c_lm Y_lm(dir), 0).
Vec3 sh_evaluate(const ShCoeffs& coeffs, int degree, const Vec3& dir);

/// Backward of sh_evaluate. Accumulates into per-coefficient gradients and
/// returns the gradient with respect to the (unit) direction. Channels whose
/// pre-clamp value was negative pass no gradient.
Vec3 sh_evaluate_backward(const ShCoeffs& coeffs, int degree, const Vec3& dir,
                          const Vec3& grad_color, ShCoeffs& grad_coeffs);

}  // namespace gtsr
