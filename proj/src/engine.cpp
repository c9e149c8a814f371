#include "monounion/engine.hpp"

#include "monounion/errors.hpp"
#include "monounion/rational.hpp"

namespace monounion {

Element Engine::mul(Element lhs, Element rhs) const {
  std::int64_t budget = limits_.step_budget;
  return mul_impl(lhs, rhs, budget);
}

Element Engine::right_mul_gen(Element e, gen_t letter) const {
  std::int64_t budget = limits_.step_budget;
  return step_impl(e, letter, budget);
}

Element Engine::reduce_word(std::span<const gen_t> word) const {
  if (word.empty()) throw DocumentError("cannot reduce an empty word");
  Element acc{word[0], 1};
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = right_mul_gen(acc, word[i]);
  }
  return acc;
}

Element Engine::mul_impl(Element lhs, Element rhs,
                         std::int64_t& budget) const {
  if (lhs.gen == rhs.gen) {
    return Element{lhs.gen, checked_add(lhs.exp, rhs.exp)};
  }
  Element acc = lhs;
  for (exp_t i = 0; i < rhs.exp; ++i) {
    acc = step_impl(acc, rhs.gen, budget);
  }
  return acc;
}

Element Engine::step_impl(Element e, gen_t letter,
                          std::int64_t& budget) const {
  if (--budget < 0) {
    throw DepthExceeded("reduction exceeded the step budget of " +
                        std::to_string(limits_.step_budget));
  }
  if (e.gen == letter) {
    return Element{e.gen, checked_add(e.exp, 1)};
  }
  StepKey key{e.gen, e.exp, letter};
  if (auto it = memo_.find(key); it != memo_.end()) {
    return it->second;
  }
  Element result;
  if (e.exp == 1) {
    result = spec_->table(e.gen, letter);
  } else {
    result = mul_impl(Element{e.gen, e.exp - 1}, spec_->table(e.gen, letter),
                      budget);
  }
  memo_.emplace(key, result);
  return result;
}

}  // namespace monounion
