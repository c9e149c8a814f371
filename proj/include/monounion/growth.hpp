#ifndef MONOUNION_GROWTH_HPP_
#define MONOUNION_GROWTH_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "monounion/engine.hpp"
#include "monounion/persistence.hpp"
#include "monounion/rational.hpp"
#include "monounion/spec.hpp"
#include "monounion/weights.hpp"

namespace monounion {

// Weight of an element: d(gen) * exp.
exp_t weight_of(const Weights& d, Element e);

// Largest defect along one start/letter trajectory, with the step where it
// peaked. The defect at step i is weight(start * letter^i) - d(letter) * i.
struct DefectPeak {
  gen_t start;
  gen_t letter;
  exp_t index;
  exp_t defect;
};

// Per (letter, target): the largest first-hit bound d(z)*n0 - d(y)*i0 seen
// across the scanned trajectories. The defect along hits of z never exceeds
// this, so it explains where the maxima come from.
struct ReturnBound {
  gen_t letter;
  gen_t target;
  exp_t value;
};

// The per-letter weight increment bound K: appending one letter to any word
// raises the weight of its value by at most K. Computed as the maximum of
// the generator weights and of all trajectory defects up to the horizon.
// Beyond the horizon the defect cannot grow: in the certified periodic
// regime it changes by (d(z) * m - d(letter)) * gap per progression step,
// which the weight inequalities make nonpositive.
struct LetterBound {
  exp_t value = 1;
  exp_t generator_max = 1;         // max over generators of d
  exp_t horizon = 0;               // scanned prefix backing the maximum
  std::vector<DefectPeak> peaks;   // one per (start, letter), in that order
  std::vector<ReturnBound> bounds; // per (letter, target), in that order
};

// Requires every generator trajectory to certify a period within the
// horizon and every periodic-regime target to carry a graph edge; throws
// HorizonExhausted otherwise, naming the bound to raise.
LetterBound compute_letter_bound(const Engine& eng,
                                 const PersistenceGraph& graph,
                                 const Weights& d, exp_t horizon);

// Independent re-check on a fresh window: reports every defect above k for
// steps in (lo, hi]. Empty result means the bound held.
std::vector<std::string> recheck_letter_bound(const Engine& eng,
                                              const Weights& d, exp_t k,
                                              exp_t lo, exp_t hi);

// L: sum over generators of 1/d(a), exact.
Rational density_bound(const Weights& d);

// |{elements of weight <= r}|: sum over generators of floor(r / d(a)).
// Exact because distinct powers of distinct generators never collide.
exp_t count_by_weight(const Weights& d, exp_t r);

struct BallOptions {
  int threads = 1;
  std::int64_t frontier_cap = 10'000'000;
};

// Breadth-first closure of the generators under right multiplication by
// single letters. Levels are sorted and deduplicated, so the enumeration is
// identical for every thread count. Each worker multiplies through its own
// engine clone; the shared engine is never touched.
class BallEnumerator {
 public:
  BallEnumerator(const Engine& eng, BallOptions opts = {});

  // Elements first reached at the next depth, sorted. Empty once the ball
  // stops growing (impossible here while exponents keep climbing, but the
  // interface allows it). Throws ResourceExceeded past the frontier cap.
  const std::vector<Element>& next_level();

  exp_t depth() const { return depth_; }
  std::int64_t total() const { return total_; }
  const std::vector<Element>& seen() const { return seen_; }

 private:
  std::vector<std::unique_ptr<Engine>> engines_;
  BallOptions opts_;
  exp_t depth_ = 0;
  std::int64_t total_ = 0;
  std::vector<Element> frontier_;
  std::vector<Element> seen_;  // sorted union of all levels
};

// J(m) as a sorted vector.
std::vector<Element> enumerate_ball(const Engine& eng, exp_t m,
                                    BallOptions opts = {});

struct BallRow {
  exp_t m;
  std::int64_t count;  // |J(m)|
  exp_t bound;         // ceiling(L * K * m)
};

struct GrowthCertificate {
  Weights d;
  LetterBound k;
  Rational density;      // L
  Rational coefficient;  // L * K
  std::vector<BallRow> rows;
  bool verdict = false;
};

// Enumerates J(1)..J(m_max) and asserts, for each m: every element first
// reached at depth m has weight <= K * m; |J(m)| <= count_by_weight(K * m);
// and |J(m)| <= L * K * m in exact rationals. Throws CertificateViolation
// naming the first failing radius and witness.
GrowthCertificate certify(const Engine& eng, const Weights& d,
                          const LetterBound& k, exp_t m_max,
                          BallOptions opts = {});

}  // namespace monounion

#endif  // MONOUNION_GROWTH_HPP_
