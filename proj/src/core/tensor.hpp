#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace rma::nd {

// Dense row-major array of f64. Shapes are small (ndim <= 3 in practice).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v);
  static Tensor from(std::vector<int> shape, std::vector<double> data);
  static Tensor scalar(double v) { return from({1}, {v}); }
  static Tensor row(std::vector<double> data);

  const std::vector<int>& shape() const { return shape_; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

  // 2-D / 3-D accessors; bounds are the caller's responsibility
  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * shape_[1] + j]; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * shape_[1] + j]; }
  double& at(int i, int j, int k) {
    return data_[(static_cast<std::size_t>(i) * shape_[1] + j) * shape_[2] + k];
  }
  double at(int i, int j, int k) const {
    return data_[(static_cast<std::size_t>(i) * shape_[1] + j) * shape_[2] + k];
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  bool all_finite() const;
  std::string shape_str() const;

  void fill(double v);
  Tensor reshaped(std::vector<int> shape) const;

  static std::int64_t shape_size(const std::vector<int>& shape);

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

}  // namespace rma::nd
