#include "gtsr/kernel.hpp"

namespace gtsr {

void KernelGrad::add(const KernelGrad& o) {
    position += o.position;
    rotation += o.rotation;
    log_scale += o.log_scale;
    opacity_raw += o.opacity_raw;
    for (int i = 0; i < kShMaxCoeffs; ++i) {
        sh_surface[i] += o.sh_surface[i];
        sh_scatter[i] += o.sh_scatter[i];
    }
    base_color_raw += o.base_color_raw;
    roughness_raw += o.roughness_raw;
}

void KernelGrad::clear() { *this = KernelGrad{}; }

Mat3 rotation_matrix(const Vec4& q) {
    const real w = q[0], x = q[1], y = q[2], z = q[3];
    Mat3 R;
    R << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return R;
}

Vec4 rotation_matrix_backward(const Vec4& q, const Mat3& g) {
    const real w = q[0], x = q[1], y = q[2], z = q[3];
    Vec4 gq = Vec4::Zero();
    gq[0] = 2 * (-z * (g(0, 1) - g(1, 0)) + y * (g(0, 2) - g(2, 0)) - x * (g(1, 2) - g(2, 1)));
    gq[1] = 2 * (y * (g(0, 1) + g(1, 0)) + z * (g(0, 2) + g(2, 0)) - w * (g(1, 2) - g(2, 1)) -
                 2 * x * (g(1, 1) + g(2, 2)));
    gq[2] = 2 * (x * (g(0, 1) + g(1, 0)) + w * (g(0, 2) - g(2, 0)) + z * (g(1, 2) + g(2, 1)) -
                 2 * y * (g(0, 0) + g(2, 2)));
    gq[3] = 2 * (-w * (g(0, 1) - g(1, 0)) + x * (g(0, 2) + g(2, 0)) + y * (g(1, 2) + g(2, 1)) -
                 2 * z * (g(0, 0) + g(1, 1)));
    return gq;
}

Vec4 quat_normalize_backward(const Vec4& raw_q, const Vec4& grad_unit) {
    const real n = raw_q.norm();
    const Vec4 u = raw_q / n;
    return (grad_unit - u * u.dot(grad_unit)) / n;
}

Mat3 covariance_from_rotation_scale(const Vec4& unit_q, const Vec3& scale) {
    const Mat3 R = rotation_matrix(unit_q);
    return R * scale.array().square().matrix().asDiagonal() * R.transpose();
}

void covariance_backward(const Vec4& unit_q, const Vec3& scale, const Mat3& grad_sigma,
                         Vec4& grad_unit_q, Vec3& grad_scale) {
    const Mat3 R = rotation_matrix(unit_q);
    const Mat3 gs = 0.5 * (grad_sigma + grad_sigma.transpose());
    // Sigma = M M^T with M = R diag(s).
    const Mat3 M = R * scale.asDiagonal();
    const Mat3 gM = 2.0 * gs * M;
    Mat3 gR;
    for (int k = 0; k < 3; ++k) {
        grad_scale[k] = gM.col(k).dot(R.col(k));
        gR.col(k) = gM.col(k) * scale[k];
    }
    grad_unit_q = rotation_matrix_backward(unit_q, gR);
}

int shortest_axis(const Vec3& scale) {
    int k = 0;
    if (scale[1] < scale[k]) k = 1;
    if (scale[2] < scale[k]) k = 2;
    return k;
}

KernelNormal kernel_normal_detail(const Mat3& R, const Vec3& scale, const Vec3& position,
                                  const Vec3& view_position) {
    const int axis = shortest_axis(scale);
    Vec3 n = R.col(axis);
    const real sign = n.dot(view_position - position) >= 0.0 ? 1.0 : -1.0;
    return {sign * n, axis, sign};
}

Vec3 kernel_normal(const GaussianKernel& kernel, const Vec3& view_position) {
    const Mat3 R = rotation_matrix(kernel.unit_rotation());
    return kernel_normal_detail(R, kernel.scale(), kernel.position, view_position).normal;
}

}  // namespace gtsr
