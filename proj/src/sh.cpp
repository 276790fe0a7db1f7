#include "gtsr/sh.hpp"

namespace gtsr {

namespace {
constexpr real kC0 = 0.28209479177387814;
constexpr real kC1 = 0.4886025119029199;
constexpr real kC2[5] = {1.0925484305920792, -1.0925484305920792, 0.31539156525252005,
                         -1.0925484305920792, 0.5462742152960396};
}  // namespace

void sh_basis(int degree, const Vec3& dir, real* out) {
    out[0] = kC0;
    if (degree < 1) return;
    const real x = dir.x(), y = dir.y(), z = dir.z();
    out[1] = -kC1 * y;
    out[2] = kC1 * z;
    out[3] = -kC1 * x;
    if (degree < 2) return;
    out[4] = kC2[0] * x * y;
    out[5] = kC2[1] * y * z;
    out[6] = kC2[2] * (2.0 * z * z - x * x - y * y);
    out[7] = kC2[3] * x * z;
    out[8] = kC2[4] * (x * x - y * y);
}

void sh_basis_grad(int degree, const Vec3& dir, Vec3* out) {
    out[0].setZero();
    if (degree < 1) return;
    const real x = dir.x(), y = dir.y(), z = dir.z();
    out[1] = Vec3(0, -kC1, 0);
    out[2] = Vec3(0, 0, kC1);
    out[3] = Vec3(-kC1, 0, 0);
    if (degree < 2) return;
    out[4] = kC2[0] * Vec3(y, x, 0);
    out[5] = kC2[1] * Vec3(0, z, y);
    out[6] = kC2[2] * Vec3(-2.0 * x, -2.0 * y, 4.0 * z);
    out[7] = kC2[3] * Vec3(z, 0, x);
    out[8] = kC2[4] * Vec3(2.0 * x, -2.0 * y, 0);
}

Vec3 sh_evaluate(const ShCoeffs& coeffs, int degree, const Vec3& dir) {
    real basis[kShMaxCoeffs];
    sh_basis(degree, dir, basis);
    Vec3 c = Vec3::Zero();
    const int n = sh_coeff_count(degree);
    for (int i = 0; i < n; ++i) c += basis[i] * coeffs[i];
    return c.cwiseMax(0.0);
}

Vec3 sh_evaluate_backward(const ShCoeffs& coeffs, int degree, const Vec3& dir,
                          const Vec3& grad_color, ShCoeffs& grad_coeffs) {
    real basis[kShMaxCoeffs];
    Vec3 basis_grad[kShMaxCoeffs];
    sh_basis(degree, dir, basis);
    sh_basis_grad(degree, dir, basis_grad);

    const int n = sh_coeff_count(degree);
    Vec3 pre = Vec3::Zero();
    for (int i = 0; i < n; ++i) pre += basis[i] * coeffs[i];

    // Clamp gate per channel.
    Vec3 g;
    for (int ch = 0; ch < 3; ++ch) g[ch] = pre[ch] > 0.0 ? grad_color[ch] : 0.0;

    Vec3 grad_dir = Vec3::Zero();
    for (int i = 0; i < n; ++i) {
        grad_coeffs[i] += basis[i] * g;
        grad_dir += basis_grad[i] * coeffs[i].dot(g);
    }
    return grad_dir;
}

}  // namespace gtsr
