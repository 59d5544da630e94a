#include "caat/tensor.hpp"

#include <utility>

#include "caat/error.hpp"

namespace caat {

std::size_t shape_size(const Shape& s) {
  std::size_t n = 1;
  for (std::size_t d : s) n *= d;
  return n;
}

std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  out += "]";
  return out;
}

std::vector<std::size_t> row_major_strides(const Shape& s) {
  std::vector<std::size_t> st(s.size(), 1);
  for (std::size_t i = s.size(); i-- > 1;) st[i - 1] = st[i] * s[i];
  return st;
}

Tensor::Tensor(Shape shape) : impl_(std::make_shared<TensorImpl>()) {
  impl_->shape = std::move(shape);
  impl_->values.assign(shape_size(impl_->shape), 0.0);
}

Tensor Tensor::zeros(Shape shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(Shape shape, double value) {
  Tensor t(std::move(shape));
  for (double& v : t.values()) v = value;
  return t;
}

Tensor Tensor::scalar(double value) {
  Tensor t(Shape{1});
  t.values()[0] = value;
  return t;
}

Tensor Tensor::from(Shape shape, std::vector<double> values) {
  if (shape_size(shape) != values.size())
    throw ShapeError("Tensor::from: shape " + shape_str(shape) + " wants " +
                     std::to_string(shape_size(shape)) + " values, got " +
                     std::to_string(values.size()));
  Tensor t;
  t.impl_ = std::make_shared<TensorImpl>();
  t.impl_->shape = std::move(shape);
  t.impl_->values = std::move(values);
  return t;
}

const Shape& Tensor::shape() const {
  if (!impl_) throw ContractError("shape() on undefined tensor");
  return impl_->shape;
}

std::size_t Tensor::size() const { return impl_ ? impl_->values.size() : 0; }

std::size_t Tensor::ndim() const { return shape().size(); }

double* Tensor::data() { return impl_->values.data(); }
const double* Tensor::data() const { return impl_->values.data(); }

std::vector<double>& Tensor::values() {
  if (!impl_) throw ContractError("values() on undefined tensor");
  return impl_->values;
}

const std::vector<double>& Tensor::values() const {
  if (!impl_) throw ContractError("values() on undefined tensor");
  return impl_->values;
}

double Tensor::item() const {
  if (size() != 1)
    throw ContractError("item() requires a 1-element tensor, shape is " + shape_str(shape()));
  return impl_->values[0];
}

Tensor& Tensor::set_requires_grad(bool v) {
  if (!impl_) throw ContractError("set_requires_grad() on undefined tensor");
  impl_->requires_grad = v;
  return *this;
}

bool Tensor::requires_grad() const { return impl_ && impl_->requires_grad; }

bool Tensor::has_grad() const { return impl_ && impl_->grad.size() == impl_->values.size(); }

const std::vector<double>& Tensor::grad() const {
  static const std::vector<double> kEmpty;
  if (!impl_) return kEmpty;
  return impl_->grad;
}

Tensor Tensor::grad_tensor() const {
  if (!impl_) throw ContractError("grad_tensor() on undefined tensor");
  if (has_grad()) return Tensor::from(impl_->shape, impl_->grad);
  return Tensor::zeros(impl_->shape);
}

Tensor Tensor::clone() const {
  if (!impl_) return Tensor();
  Tensor t;
  t.impl_ = std::make_shared<TensorImpl>();
  t.impl_->shape = impl_->shape;
  t.impl_->values = impl_->values;
  t.impl_->requires_grad = impl_->requires_grad;
  return t;
}

}  // namespace caat
