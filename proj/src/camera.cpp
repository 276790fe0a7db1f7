#include "gtsr/camera.hpp"

namespace gtsr {

namespace {
const Mat3 kGlToCv = (Mat3() << 1, 0, 0, 0, -1, 0, 0, 0, -1).finished();
}

void set_pose_from_gl_matrix(CameraView& view, const Eigen::Matrix4d& camera_to_world) {
    const Mat3 R_gl = camera_to_world.block<3, 3>(0, 0);
    view.rotation = R_gl * kGlToCv;
    view.translation = camera_to_world.block<3, 1>(0, 3);
}

Eigen::Matrix4d gl_matrix_from_pose(const CameraView& view) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = view.rotation * kGlToCv;
    m.block<3, 1>(0, 3) = view.translation;
    return m;
}

}  // namespace gtsr
