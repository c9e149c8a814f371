#ifndef MONOUNION_ENGINE_HPP_
#define MONOUNION_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>

#include "monounion/spec.hpp"

namespace monounion {

struct EngineLimits {
  // Reduction steps allowed per top-level product. Valid tables terminate in
  // tens of steps; a runaway recursion indicates an invalid table.
  std::int64_t step_budget = 10000;
};

// Derived multiplication engine. Arbitrary products are reduced to the pair
// table one letter at a time:
//
//   e * y^n        = (..((e*y)*y)..)*y                (n single steps)
//   z^p * y, p > 1 = z^{p-1} * (z*y)                  (mutual recursion)
//   z^1 * y        = table lookup
//   z^m * z^n      = z^{m+n}
//
// Single-letter steps are memoized by (base, exponent, letter); memoized
// results are observationally identical to unmemoized ones. Not thread safe:
// the memo is a plain hash map, so concurrent callers clone one engine per
// worker (results are identical either way, the memo is only a cache).
class Engine {
 public:
  explicit Engine(const SemigroupSpec& spec, EngineLimits limits = {})
      : spec_(&spec), limits_(limits) {}

  const SemigroupSpec& spec() const { return *spec_; }
  const EngineLimits& limits() const { return limits_; }
  int size() const { return spec_->size(); }

  Element mul(Element lhs, Element rhs) const;
  Element right_mul_gen(Element e, gen_t letter) const;

  // Strict left-to-right fold by right_mul_gen; the brute-force oracle for
  // products of free words. Word must be nonempty.
  Element reduce_word(std::span<const gen_t> word) const;

 private:
  struct StepKey {
    gen_t base;
    exp_t exp;
    gen_t letter;
    friend bool operator==(const StepKey&, const StepKey&) = default;
  };
  struct StepKeyHash {
    std::size_t operator()(const StepKey& k) const {
      std::uint64_t h = static_cast<std::uint64_t>(k.exp);
      h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.base))
            << 32) |
           static_cast<std::uint32_t>(k.letter);
      h *= 0x9e3779b97f4a7c15ULL;
      h ^= h >> 29;
      return static_cast<std::size_t>(h);
    }
  };

  Element mul_impl(Element lhs, Element rhs, std::int64_t& budget) const;
  Element step_impl(Element e, gen_t letter, std::int64_t& budget) const;

  const SemigroupSpec* spec_;
  EngineLimits limits_;
  mutable std::unordered_map<StepKey, Element, StepKeyHash> memo_;
};

}  // namespace monounion

#endif  // MONOUNION_ENGINE_HPP_
