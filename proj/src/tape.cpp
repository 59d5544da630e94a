#include "caat/tape.hpp"

#include "caat/error.hpp"

namespace caat {

namespace {
thread_local Tape* g_active = nullptr;
}

Tape::Scope::Scope(Tape& tape) : prev_(g_active) { g_active = &tape; }

Tape::Scope::~Scope() { g_active = prev_; }

Tape* Tape::active() { return g_active; }

void Tape::note(const std::shared_ptr<TensorImpl>& impl) {
  if (seen_.insert(impl.get()).second) touched_.push_back(impl);
}

void Tape::record(const std::vector<Tensor>& inputs, const Tensor& output,
                  std::function<void()> backward_fn) {
  for (const Tensor& t : inputs) note(t.impl_ptr());
  note(output.impl_ptr());
  nodes_.push_back(std::move(backward_fn));
}

bool Tape::recorded(const Tensor& t) const { return seen_.count(t.impl()) != 0; }

void Tape::backward(const Tensor& loss) {
  if (!loss.defined() || loss.size() != 1)
    throw ContractError("backward: loss must be a scalar tensor, got shape " +
                        (loss.defined() ? shape_str(loss.shape()) : std::string("<undefined>")));
  if (!recorded(loss))
    throw ContractError("backward: loss tensor was not recorded on this tape");

  for (auto& impl : touched_) impl->grad.assign(impl->values.size(), 0.0);
  loss.impl()->grad[0] = 1.0;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) (*it)();
}

}  // namespace caat
