#pragma once

#include "gtsr/core.hpp"

namespace gtsr {

/// Posed pinhole view. Extrinsics are camera-to-world in the computer-vision
/// frame (x right, y down, z forward); the dataset manifest's look-down-minus-z
/// convention is converted at load time. The ground-truth image and the
/// co-located point light belong to the view.
struct CameraView {
    real fx = 0, fy = 0, cx = 0, cy = 0;
    Mat3 rotation = Mat3::Identity();   // R_c, camera-to-world
    Vec3 translation = Vec3::Zero();    // T_c, camera center in world
    int width = 0, height = 0;
    Image3 ground_truth;
    Vec3 light_intensity = Vec3::Ones();

    Mat3 intrinsics() const {
        Mat3 K;
        K << fx, 0, cx, 0, fy, cy, 0, 0, 1;
        return K;
    }

    Vec3 world_to_camera(const Vec3& p) const { return rotation.transpose() * (p - translation); }
    Vec3 camera_to_world(const Vec3& p) const { return rotation * p + translation; }

    /// Projects a camera-space point to continuous pixel coordinates.
    Vec2 project_camera_point(const Vec3& t) const {
        return {fx * t.x() / t.z() + cx, fy * t.y() / t.z() + cy};
    }

    /// Camera-frame ray K^-1 (x+0.5, y+0.5, 1) through a pixel center; the
    /// z component stays 1 so that scaling by camera-space depth lands on
    /// the surface point.
    Vec3 pixel_ray(int x, int y) const {
        return {(x + 0.5 - cx) / fx, (y + 0.5 - cy) / fy, 1.0};
    }

    /// Same ray expressed in world space (unnormalized).
    Vec3 pixel_ray_world(int x, int y) const { return rotation * pixel_ray(x, y); }
};

/// Converts a row-major camera-to-world matrix using the looking-down-minus-z,
/// up-plus-y convention into the internal z-forward frame.
void set_pose_from_gl_matrix(CameraView& view, const Eigen::Matrix4d& camera_to_world);

/// Inverse of set_pose_from_gl_matrix, for writing manifests.
Eigen::Matrix4d gl_matrix_from_pose(const CameraView& view);

}  // namespace gtsr
