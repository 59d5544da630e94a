#pragma once

#include <functional>
#include <memory>
#include <unordered_set>
#include <vector>

#include "caat/tensor.hpp"

namespace caat {

// Reverse-mode tape. Ops executed while a Tape::Scope is alive append one
// node each; nodes are replayed in reverse for backward. Recording order is
// construction order, so inputs always precede consumers.
//
// backward() zeroes every gradient buffer it owns before accumulating, so
// calling it twice on the same tape yields identical gradients (accumulation
// across passes is explicit, never implicit).
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Installs a tape as the active recording target for the current thread.
  class Scope {
   public:
    explicit Scope(Tape& tape);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Tape* prev_;
  };

  static Tape* active();

  // Registers one primitive application. backward_fn reads output->grad and
  // accumulates into the inputs' grad buffers (which backward() pre-sizes).
  void record(const std::vector<Tensor>& inputs, const Tensor& output,
              std::function<void()> backward_fn);

  // loss must be a scalar recorded on this tape.
  void backward(const Tensor& loss);

  std::size_t node_count() const { return nodes_.size(); }
  bool recorded(const Tensor& t) const;

 private:
  void note(const std::shared_ptr<TensorImpl>& impl);

  std::vector<std::function<void()>> nodes_;
  std::vector<std::shared_ptr<TensorImpl>> touched_;
  std::unordered_set<const TensorImpl*> seen_;
};

}  // namespace caat
