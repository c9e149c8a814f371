#include "monounion/validate.hpp"

#include "monounion/errors.hpp"

namespace monounion {

namespace {

std::vector<Element> window_elements(const SemigroupSpec& spec, exp_t window) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(spec.size()) * window);
  for (gen_t g = 0; g < spec.size(); ++g) {
    for (exp_t e = 1; e <= window; ++e) {
      out.push_back(Element{g, e});
    }
  }
  return out;
}

}  // namespace

void check_associativity(const Engine& eng, exp_t window,
                         ValidationReport& report) {
  const SemigroupSpec& spec = eng.spec();
  const std::vector<Element> elems = window_elements(spec, window);
  for (Element u : elems) {
    for (Element v : elems) {
      for (Element w : elems) {
        Element left, right;
        try {
          left = eng.mul(eng.mul(u, v), w);
          right = eng.mul(u, eng.mul(v, w));
        } catch (const DepthExceeded&) {
          report.depth_failures.push_back("associativity triple (" +
                                          spec.show(u) + ", " + spec.show(v) +
                                          ", " + spec.show(w) + ")");
          continue;
        }
        if (left != right) {
          report.associativity_violations.push_back({u, v, w, left, right});
        }
      }
    }
  }
}

void check_exponent_monotonicity(const Engine& eng, exp_t window,
                                 ValidationReport& report) {
  const SemigroupSpec& spec = eng.spec();
  for (gen_t x = 0; x < spec.size(); ++x) {
    for (gen_t y = 0; y < spec.size(); ++y) {
      for (exp_t i = 1; i <= window; ++i) {
        for (exp_t j = 1; j <= window; ++j) {
          Element p;
          try {
            p = eng.mul(Element{x, i}, Element{y, j});
          } catch (const DepthExceeded&) {
            report.depth_failures.push_back(
                "monotonicity pair (" + spec.show(Element{x, i}) + ", " +
                spec.show(Element{y, j}) + ")");
            continue;
          }
          if (p.gen == x && i > p.exp) {
            report.monotonicity_violations.push_back({x, i, j, p.exp});
          }
        }
      }
    }
  }
}

ValidationReport validate(const Engine& eng, exp_t window) {
  ValidationReport report;
  report.window = window;
  report.depth_bound = eng.limits().step_budget;
  check_associativity(eng, window, report);
  check_exponent_monotonicity(eng, window, report);
  return report;
}

}  // namespace monounion
