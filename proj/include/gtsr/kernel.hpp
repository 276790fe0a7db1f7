#pragma once

#include "gtsr/core.hpp"
#include "gtsr/sh.hpp"

namespace gtsr {

/// One splat. Optimizable parameters are stored pre-activation:
/// scale as log-scale, opacity as a logit, base color and roughness as
/// logits, and the quaternion unnormalized (normalized on use and after
/// every optimizer step).
struct GaussianKernel {
    Vec3 position = Vec3::Zero();
    Vec4 rotation = Vec4(1, 0, 0, 0);  // (w, x, y, z)
    Vec3 log_scale = Vec3::Zero();
    real opacity_raw = 0.0;
    ShCoeffs sh_surface{};   // surface color (surface kernels)
    ShCoeffs sh_scatter{};   // scattering color (interior kernels)
    Vec3 base_color_raw = Vec3::Zero();  // surface kernels
    real roughness_raw = 0.0;            // surface kernels

    Vec3 scale() const { return log_scale.array().exp(); }
    real opacity() const { return sigmoid(opacity_raw); }
    Vec3 base_color() const {
        return Vec3(sigmoid(base_color_raw.x()), sigmoid(base_color_raw.y()),
                    sigmoid(base_color_raw.z()));
    }
    real roughness() const { return sigmoid(roughness_raw); }
    Vec4 unit_rotation() const { return rotation / rotation.norm(); }
};

/// Gradient slot mirroring GaussianKernel's raw parameters.
struct KernelGrad {
    Vec3 position = Vec3::Zero();
    Vec4 rotation = Vec4::Zero();
    Vec3 log_scale = Vec3::Zero();
    real opacity_raw = 0.0;
    ShCoeffs sh_surface{};
    ShCoeffs sh_scatter{};
    Vec3 base_color_raw = Vec3::Zero();
    real roughness_raw = 0.0;

    void add(const KernelGrad& o);
    void clear();
};

/// Rotation matrix of a unit quaternion (w, x, y, z).
Mat3 rotation_matrix(const Vec4& unit_q);

/// Accumulates d(loss)/d(unit_q) given d(loss)/d(R). The caller chains through
/// quaternion normalization separately.
Vec4 rotation_matrix_backward(const Vec4& unit_q, const Mat3& grad_R);

/// Chains a unit-quaternion gradient back to the stored raw quaternion.
Vec4 quat_normalize_backward(const Vec4& raw_q, const Vec4& grad_unit);

/// Sigma = R diag(s)^2 R^T for activated scales s.
Mat3 covariance_from_rotation_scale(const Vec4& unit_q, const Vec3& scale);

/// Backward of the covariance assembly. grad_sigma need not be symmetric;
/// it is symmetrized internally. Outputs gradients w.r.t. the unit quaternion
/// and the activated scale.
void covariance_backward(const Vec4& unit_q, const Vec3& scale, const Mat3& grad_sigma,
                         Vec4& grad_unit_q, Vec3& grad_scale);

/// Index of the shortest activated scale axis, ties broken by lowest index.
int shortest_axis(const Vec3& scale);

/// World-space unit normal of a kernel: the rotation column of the shortest
/// axis, flipped to face view_position.
Vec3 kernel_normal(const GaussianKernel& kernel, const Vec3& view_position);

/// Normal plus the data needed for its backward (sign and axis choice are
/// treated as locally constant).
struct KernelNormal {
    Vec3 normal;
    int axis;
    real sign;
};
KernelNormal kernel_normal_detail(const Mat3& R, const Vec3& scale, const Vec3& position,
                                  const Vec3& view_position);

}  // namespace gtsr
