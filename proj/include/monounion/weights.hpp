#ifndef MONOUNION_WEIGHTS_HPP_
#define MONOUNION_WEIGHTS_HPP_

#include <string>
#include <vector>

#include "monounion/persistence.hpp"
#include "monounion/rational.hpp"
#include "monounion/spec.hpp"

namespace monounion {

// Classes of mutually persistent generators, with a processing order that
// visits a class only after every class it points into.
struct Condensation {
  std::vector<int> class_of;             // generator -> class id
  std::vector<std::vector<gen_t>> classes;  // class id -> members, ascending
  std::vector<int> order;                // class ids, sinks first
};

// Positive integer weight per generator. Within a class the weights track
// the multipliers exactly; across classes they dominate them.
struct Weights {
  std::vector<exp_t> d;

  exp_t of(gen_t g) const { return d[static_cast<std::size_t>(g)]; }
};

// Groups generators connected by mutual edges and orders the classes so
// that every cross edge points from a later class to an earlier one.
// Throws IntraClassInconsistency when the multipliers around a class do not
// cancel, or when the classes fail to form an acyclic order; both indicate
// the graph does not have the structure the synthesis relies on, so
// verify_transitivity should be run first.
Condensation condense(const SemigroupSpec& spec, const PersistenceGraph& graph);

// Sinks first: each class gets weights proportional to the multipliers into
// its smallest member, scaled to integers, then scaled again by the least
// factor that dominates every cross edge into the already-weighted classes.
Weights synthesize_weights(const SemigroupSpec& spec,
                           const PersistenceGraph& graph,
                           const Condensation& cond);

// Re-checks the defining inequalities on an arbitrary weight assignment:
// positivity, d(y) == d(z) * m for edges inside a class, and
// d(y) >= d(z) * m for edges across classes. Empty result means valid.
std::vector<std::string> verify_weights(const SemigroupSpec& spec,
                                        const PersistenceGraph& graph,
                                        const Condensation& cond,
                                        const Weights& weights);

}  // namespace monounion

#endif  // MONOUNION_WEIGHTS_HPP_
