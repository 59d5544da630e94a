#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace caat {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& s);
std::string shape_str(const Shape& s);
std::vector<std::size_t> row_major_strides(const Shape& s);

// Shared storage behind a Tensor handle. Values are written once by the
// producing op; grad is populated by Tape::backward.
struct TensorImpl {
  Shape shape;
  std::vector<double> values;
  std::vector<double> grad;  // empty until a backward pass touches this tensor
  bool requires_grad = false;
};

// Dense row-major float64 tensor. Copying a Tensor copies the handle, not the
// storage; clone() deep-copies. Values are treated as immutable once the
// tensor has been consumed by an op on an active tape; parameter updates
// mutate leaf tensors between forward passes.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  static Tensor scalar(double value);
  static Tensor from(Shape shape, std::vector<double> values);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const;
  std::size_t size() const;
  std::size_t ndim() const;

  double* data();
  const double* data() const;
  std::vector<double>& values();
  const std::vector<double>& values() const;

  // Value of a 1-element tensor.
  double item() const;

  Tensor& set_requires_grad(bool v = true);
  bool requires_grad() const;

  bool has_grad() const;
  // Gradient buffer; empty if no backward pass has reached this tensor.
  const std::vector<double>& grad() const;
  // Gradient as a tensor; zeros when no backward pass reached this leaf.
  Tensor grad_tensor() const;

  Tensor clone() const;

  TensorImpl* impl() const { return impl_.get(); }
  const std::shared_ptr<TensorImpl>& impl_ptr() const { return impl_; }

 private:
  std::shared_ptr<TensorImpl> impl_;
};

}  // namespace caat
