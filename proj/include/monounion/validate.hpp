#ifndef MONOUNION_VALIDATE_HPP_
#define MONOUNION_VALIDATE_HPP_

#include <string>
#include <vector>

#include "monounion/engine.hpp"
#include "monounion/spec.hpp"

namespace monounion {

struct AssocViolation {
  Element u, v, w;
  Element left;   // (u*v)*w
  Element right;  // u*(v*w)
};

// x^i * y^j landed back in <x> with exponent k < i.
struct MonoViolation {
  gen_t x;
  exp_t i, j, k;
};

struct ValidationReport {
  std::vector<AssocViolation> associativity_violations;
  std::vector<MonoViolation> monotonicity_violations;
  std::vector<std::string> depth_failures;
  exp_t window = 0;
  std::int64_t depth_bound = 0;

  bool accepted() const {
    return associativity_violations.empty() &&
           monotonicity_violations.empty() && depth_failures.empty();
  }
};

// Checks (u*v)*w == u*(v*w) for all elements with exponents <= window.
// Passing a finite window is necessary but not sufficient for global
// associativity. Iteration is in alphabet order so reports are reproducible.
void check_associativity(const Engine& eng, exp_t window,
                         ValidationReport& report);

// Whenever x^i * y^j is a power x^k, requires i <= k. A violation proves the
// table does not define a union of free monogenic semigroups.
void check_exponent_monotonicity(const Engine& eng, exp_t window,
                                 ValidationReport& report);

ValidationReport validate(const Engine& eng, exp_t window);

}  // namespace monounion

#endif  // MONOUNION_VALIDATE_HPP_
