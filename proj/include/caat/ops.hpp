#pragma once

#include <cstdint>
#include <vector>

#include "caat/tensor.hpp"

namespace caat {

// Differentiable primitives. Each computes its output eagerly and, when a
// tape is active, records an exact reverse-mode rule. Inputs are never
// mutated. Shape mismatches throw ShapeError naming both shapes.

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);  // elementwise
Tensor add_scalar(const Tensor& a, double c);
Tensor mul_scalar(const Tensor& a, double c);

// 2-D matrix product [m x k] * [k x n] -> [m x n].
Tensor matmul(const Tensor& a, const Tensor& b);
// N-D matrix product over the trailing two axes; leading axes must match.
Tensor batched_matmul(const Tensor& a, const Tensor& b);

Tensor reshape(const Tensor& a, Shape shape);
// Permutes axes; perm must be a permutation of [0, ndim).
Tensor transpose(const Tensor& a, const std::vector<std::size_t>& perm);
// 2-D convenience transpose.
Tensor transpose(const Tensor& a);

Tensor slice(const Tensor& a, std::size_t axis, std::size_t start, std::size_t len);
Tensor concat(const std::vector<Tensor>& parts, std::size_t axis);

Tensor gelu(const Tensor& a);  // exact erf form
Tensor softmax(const Tensor& a);  // along the last axis

// Normalizes the last axis to mean 0 / variance 1, then applies gamma/beta.
Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, double eps = 1e-5);

// Mean over the batch of -log softmax(logits)[label]. Labels in [0, k).
Tensor softmax_cross_entropy(const Tensor& logits, const std::vector<int>& labels);

// Attack objective: -mean_i max(z_{y_i} - max_{j != y_i} z_j, -kappa).
// Ascending this drives the true-class margin negative. Ties in the
// runner-up max break toward the lowest class index.
Tensor cw_margin_loss(const Tensor& logits, const std::vector<int>& labels, double kappa);

Tensor sum_all(const Tensor& a);   // scalar
Tensor mean_all(const Tensor& a);  // scalar

// y's shape must be a suffix of x's shape; y is added to every leading slice.
Tensor add_broadcast(const Tensor& x, const Tensor& y);
// [d...] -> [b, d...] by repetition; backward sums over the new axis.
Tensor broadcast_to_batch(const Tensor& x, std::size_t batch);

// Row lookup (embedding): table [v x d], ids in [0, v) -> [n x d].
Tensor gather_rows(const Tensor& table, const std::vector<int>& ids);

// [b, c, H, W] -> [b, P, c*p*p] with P = (H/p)*(W/p); patches scan row-major
// over the grid, channel-major within a patch.
Tensor extract_patches(const Tensor& images, std::size_t patch);

}  // namespace caat
