#pragma once

#include "gtsr/camera.hpp"
#include "gtsr/kernel.hpp"

#include <vector>

namespace gtsr {

/// First/second Adam moments, stored in kernel-parameter shape.
struct AdamMoments {
    std::vector<KernelGrad> m;
    std::vector<KernelGrad> v;

    void resize(size_t n) {
        m.resize(n);
        v.resize(n);
    }
};

/// The two kernel populations plus per-parameter optimizer state and the
/// positional-gradient statistics driving densification. Kernels never move
/// between populations.
struct GaussianScene {
    std::vector<GaussianKernel> surface;
    std::vector<GaussianKernel> interior;

    AdamMoments moments_surface;
    AdamMoments moments_interior;

    // Mean 2D positional gradient magnitude accumulators (3DGS-style).
    std::vector<real> grad_accum_surface;
    std::vector<int> seen_surface;
    std::vector<real> grad_accum_interior;
    std::vector<int> seen_interior;

    void sync_state_sizes() {
        moments_surface.resize(surface.size());
        moments_interior.resize(interior.size());
        grad_accum_surface.resize(surface.size(), 0.0);
        seen_surface.resize(surface.size(), 0);
        grad_accum_interior.resize(interior.size(), 0.0);
        seen_interior.resize(interior.size(), 0);
    }
};

/// Per-kernel gradients for a whole scene, aligned with the population lists.
struct SceneGrads {
    std::vector<KernelGrad> surface;
    std::vector<KernelGrad> interior;
    // Per-render 2D positional gradient norms from the combined pass.
    std::vector<real> mean2d_norm_surface;
    std::vector<real> mean2d_norm_interior;
    std::vector<uint8_t> visible_surface;
    std::vector<uint8_t> visible_interior;

    explicit SceneGrads(const GaussianScene& scene)
        : surface(scene.surface.size()),
          interior(scene.interior.size()),
          mean2d_norm_surface(scene.surface.size(), 0.0),
          mean2d_norm_interior(scene.interior.size(), 0.0),
          visible_surface(scene.surface.size(), 0),
          visible_interior(scene.interior.size(), 0) {}
};

enum class DiffuseFresnelMode {
    kLiteralSquared,       // F^2, as the shading model states it
    kTransmittanceSquared  // (1-F)^2 experiment switch
};

/// All tunables in one place. Defaults follow the published values where they
/// exist and the documented artifact defaults everywhere else.
struct Hyperparameters {
    // Loss weights.
    real lambda1 = 0.2;           // L1 vs SSIM mix in the photometric loss
    real lambda2_start = 0.0025;  // normal-consistency ramp, stage 2
    real lambda2_end = 0.9;
    real lambda3 = 0.01;  // multi-view depth consistency
    real lambda4 = 0.01;  // interior containment
    real lambda5 = 0.01;  // roughness smoothness
    real lambda6 = 0.01;  // base-color smoothness

    real gamma = 0.3;  // diffuse transparency mix
    real f0 = 0.04;    // base reflectance
    DiffuseFresnelMode diffuse_fresnel_mode = DiffuseFresnelMode::kLiteralSquared;

    // Schedule.
    int total_iterations = 3000;
    real stage1_fraction = 0.3;
    int stage1_iterations() const { return int(stage1_fraction * total_iterations); }

    // Densify / prune.
    int densify_interval = 100;
    int densify_start = 300;
    real densify_grad_threshold = 2e-4;
    real split_scale_fraction = 0.01;  // of scene extent
    real prune_opacity = 0.005;

    // Learning rates.
    real lr_position = 1.6e-4;
    real lr_position_final = 1.6e-6;
    real lr_rotation = 1e-3;
    real lr_scale = 5e-3;
    real lr_opacity = 5e-2;
    real lr_sh = 2.5e-3;
    real lr_base_color = 5e-3;
    real lr_roughness = 5e-3;

    // Adam.
    real adam_beta1 = 0.9;
    real adam_beta2 = 0.999;
    real adam_epsilon = 1e-15;

    // Renderer.
    int sh_degree = 2;
    int sh_unlock_interval = 500;  // iterations per extra active band
    int tile_size = 16;
    real lowpass = 0.3;
    real alpha_cutoff = 1.0 / 255.0;
    real alpha_clamp = 0.999;
    real near_z = 0.01;
    real min_transmittance = 0.0;  // early ray termination, 0 = off

    // Geometry validity.
    real depth_alpha_threshold = 0.5;
    real depth_ray_dot_epsilon = 1e-4;

    // Initialization.
    int init_surface_count = 2000;
    int init_interior_count = 500;
    real interior_shrink = 0.7;
    real init_opacity = 0.1;

    // Multi-view consistency.
    int neighbor_views = 2;
    real reprojection_threshold = 1.0;  // pixels

    // Ablation switches.
    bool enable_fresnel = true;
    bool enable_pbr = true;
    bool enable_interior = true;

    // Stage-2 lambda2 ramp value.
    real lambda2_at(int iteration) const {
        const int s1 = stage1_iterations();
        if (total_iterations <= s1) return lambda2_start;
        const real t = real(iteration - s1) / real(total_iterations - s1);
        return lambda2_start + (lambda2_end - lambda2_start) * std::clamp(t, 0.0, 1.0);
    }
};

}  // namespace gtsr
