#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gtsr {

using real = double;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

constexpr real kPi = 3.14159265358979323846;

inline real sigmoid(real x) { return 1.0 / (1.0 + std::exp(-x)); }
inline real logit(real y) { return std::log(y / (1.0 - y)); }
inline real sigmoid_grad(real activated) { return activated * (1.0 - activated); }

/// Row-major single-channel or Vec3 image buffer.
template <class T>
class Image {
public:
    Image() = default;
    Image(int width, int height, T fill = T{})
        : width_(width), height_(height), data_(size_t(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return data_.empty(); }
    size_t pixel_count() const { return data_.size(); }

    T& at(int x, int y) { return data_[size_t(y) * width_ + x]; }
    const T& at(int x, int y) const { return data_[size_t(y) * width_ + x]; }
    T& operator[](size_t i) { return data_[i]; }
    const T& operator[](size_t i) const { return data_[i]; }

    bool contains(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

    void fill(const T& v) { std::fill(data_.begin(), data_.end(), v); }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

using ImageD = Image<real>;
using Image3 = Image<Vec3>;
using MaskImage = Image<uint8_t>;

inline void require(bool cond, const std::string& message) {
    if (!cond) throw std::runtime_error(message);
}

/// Number of worker threads used by parallel_for. 0 = hardware default.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n). Work is split into contiguous chunks, one per
/// worker, so any per-index output written to preallocated slots is
/// reproducible independent of the thread count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace gtsr
