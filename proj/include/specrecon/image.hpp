#ifndef SPECRECON_IMAGE_HPP_
#define SPECRECON_IMAGE_HPP_

#include <Eigen/Dense>

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace specrecon {

// Mirrors an out-of-range coordinate back into [0, n), repeating the edge
// sample (..., 2, 1, 0 | 0, 1, 2, ...).
inline int reflect_index(int i, int n) {
  assert(n >= 1);
  while (i < 0 || i >= n) {
    if (i < 0) i = -i - 1;
    if (i >= n) i = 2 * n - 1 - i;
  }
  return i;
}

namespace detail {
struct HyperTag {};
struct MultiTag {};
}  // namespace detail

/// Dense H x W raster with one value vector per pixel, stored pixel-major so
/// that the per-pixel vector is contiguous. `value_scale` is the nominal
/// maximum of the data (1.0 once an image has been normalized).
template <class Tag>
class BasicCube {
 public:
  BasicCube() = default;

  BasicCube(int width, int height, int bands, double value_scale = 1.0)
      : width_(width),
        height_(height),
        bands_(bands),
        value_scale_(value_scale) {
    if (width <= 0 || height <= 0 || bands <= 0) {
      throw std::invalid_argument("cube dimensions must be positive");
    }
    data_.assign(
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
            static_cast<std::size_t>(bands),
        0.0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int bands() const { return bands_; }
  // Alias; multispectral code reads better with "channels".
  int channels() const { return bands_; }
  std::size_t size() const { return data_.size(); }

  double value_scale() const { return value_scale_; }
  void set_value_scale(double s) { value_scale_ = s; }

  double operator()(int x, int y, int b) const { return data_[index(x, y, b)]; }
  double& operator()(int x, int y, int b) { return data_[index(x, y, b)]; }

  Eigen::Map<const Eigen::VectorXd> pixel(int x, int y) const {
    return {data_.data() + index(x, y, 0), bands_};
  }
  Eigen::Map<Eigen::VectorXd> pixel(int x, int y) {
    return {data_.data() + index(x, y, 0), bands_};
  }

  // One band as a height x width matrix (row = y).
  Eigen::MatrixXd band(int b) const {
    Eigen::MatrixXd out(height_, width_);
    for (int y = 0; y < height_; ++y) {
      for (int x = 0; x < width_; ++x) out(y, x) = (*this)(x, y, b);
    }
    return out;
  }

  void set_band(int b, const Eigen::MatrixXd& img) {
    if (img.rows() != height_ || img.cols() != width_) {
      throw std::invalid_argument("band image shape mismatch");
    }
    for (int y = 0; y < height_; ++y) {
      for (int x = 0; x < width_; ++x) (*this)(x, y, b) = img(y, x);
    }
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  template <class OtherTag>
  bool same_shape(const BasicCube<OtherTag>& other) const {
    return width_ == other.width() && height_ == other.height() &&
           bands_ == other.bands();
  }

 private:
  std::size_t index(int x, int y, int b) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    assert(b >= 0 && b < bands_);
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(bands_) +
           static_cast<std::size_t>(b);
  }

  int width_ = 0;
  int height_ = 0;
  int bands_ = 0;
  double value_scale_ = 1.0;
  std::vector<double> data_;
};

/// Finely sampled spectra, one per pixel.
using HyperCube = BasicCube<detail::HyperTag>;
/// Broad-band filtered channel measurements, one vector per pixel.
using MultiCube = BasicCube<detail::MultiTag>;

}  // namespace specrecon

#endif  // SPECRECON_IMAGE_HPP_
