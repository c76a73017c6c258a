#include "core/tensor.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace rma::nd {

std::int64_t Tensor::shape_size(const std::vector<int>& shape) {
  std::int64_t n = 1;
  for (int d : shape) {
    if (d < 0) fail(Errc::invalid_argument, "negative dimension in tensor shape");
    n *= d;
  }
  return n;
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<std::size_t>(shape_size(shape_)), 0.0);
}

Tensor Tensor::full(std::vector<int> shape, double v) {
  Tensor t(std::move(shape));
  t.fill(v);
  return t;
}

Tensor Tensor::from(std::vector<int> shape, std::vector<double> data) {
  if (shape_size(shape) != static_cast<std::int64_t>(data.size()))
    fail(Errc::shape_mismatch, "tensor data length does not match shape");
  Tensor t;
  t.shape_ = std::move(shape);
  t.data_ = std::move(data);
  return t;
}

Tensor Tensor::row(std::vector<double> data) {
  const int n = static_cast<int>(data.size());
  return from({n}, std::move(data));
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
  os << "]";
  return os.str();
}

void Tensor::fill(double v) {
  for (auto& x : data_) x = v;
}

Tensor Tensor::reshaped(std::vector<int> shape) const {
  if (shape_size(shape) != size())
    fail(Errc::shape_mismatch,
         "cannot reshape " + shape_str() + " to new shape with different element count");
  Tensor t = *this;
  t.shape_ = std::move(shape);
  return t;
}

}  // namespace rma::nd
