#ifndef MONOUNION_PERSISTENCE_HPP_
#define MONOUNION_PERSISTENCE_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monounion/engine.hpp"
#include "monounion/rational.hpp"
#include "monounion/spec.hpp"

namespace monounion {

// Per-target summary within one trajectory: a base z that the products
// x*y^i landed on at least twice. The exponents along the hits advance with
// a fixed rational slope; the hit indices, shifted by the first one, form an
// additively closed set. Both facts are what verify_trajectory_structure
// re-checks.
struct TargetSummary {
  gen_t target;             // z
  exp_t first_index;        // smallest i with base(x*y^i) == z
  exp_t first_exp;          // exponent at that index
  exp_t gap;                // distance from first to second hit
  Rational multiplier;      // exponent slope along hits
  std::vector<exp_t> hits;  // every i <= horizon with base z, ascending
};

// The sequence x*y, x*y^2, ..., x*y^H recorded as (base, exponent) pairs.
struct Trajectory {
  Element start;  // x
  gen_t letter;   // y
  exp_t horizon;
  std::vector<Element> steps;          // steps[i-1] = x * y^i
  std::vector<TargetSummary> targets;  // bases seen at least twice, by index
  std::optional<exp_t> period;         // eventual period of the base sequence
  exp_t period_start = 0;              // first index the period holds from
};

// Witness equation z^t * y^q = z^s. A single return certifies that z is
// y-persistent and pins the multiplier (s - t) / q.
struct Return {
  gen_t letter;       // y
  gen_t base;         // z
  exp_t start_exp;    // t
  exp_t letter_count; // q
  exp_t end_exp;      // s
};

struct PersistenceEdge {
  Rational multiplier;
  Return witness;
};

// Digraph of the relation "z is y-persistent" on the alphabet, with exact
// rational multipliers. Always contains every reflexive edge with
// multiplier 1. Edge iteration is in (y, z) order.
class PersistenceGraph {
 public:
  using EdgeMap = std::map<std::pair<gen_t, gen_t>, PersistenceEdge>;

  explicit PersistenceGraph(int node_count) : node_count_(node_count) {}

  int node_count() const { return node_count_; }
  bool has_edge(gen_t y, gen_t z) const { return edges_.count({y, z}) > 0; }
  const PersistenceEdge* edge(gen_t y, gen_t z) const {
    auto it = edges_.find({y, z});
    return it == edges_.end() ? nullptr : &it->second;
  }
  void add_edge(gen_t y, gen_t z, PersistenceEdge e) {
    edges_.insert_or_assign({y, z}, e);
  }
  const EdgeMap& edges() const { return edges_; }

 private:
  int node_count_;
  EdgeMap edges_;
};

// Computes the full step sequence incrementally, summarizes every repeated
// base, and detects the eventual period of the base sequence by suffix
// comparison. Throws HorizonExhausted when nothing repeats and no period
// certifies within the horizon.
Trajectory trajectory(const Engine& eng, Element start, gen_t letter,
                      exp_t horizon);

// Searches t <= t_max, q <= q_max in lexicographic (t, q) order for
// z^t * y^q = z^s; first witness wins.
std::optional<Return> find_return(const Engine& eng, gen_t letter, gen_t base,
                                  exp_t t_max, exp_t q_max);

// (s - t) / q in lowest terms. Throws NegativeMultiplier when s < t.
Rational multiplier_of(const Return& ret);

// Runs find_return for every ordered pair; reflexive edges always appear
// (y^1 * y^1 = y^2) with multiplier 1.
PersistenceGraph build_persistence_graph(const Engine& eng, exp_t t_max,
                                         exp_t q_max);

// All generators plus all pairwise products of generators, deduplicated.
std::vector<Element> sample_elements(const Engine& eng);

// Each verifier returns human-readable violation entries; an empty list
// means the check passed. Violations are fatal for the pipeline.

// For every edge (y,z) and every sample x whose trajectory hits z at least
// twice, the trajectory-derived multiplier must equal the graph's.
std::vector<std::string> verify_x_independence(
    const Engine& eng, const PersistenceGraph& graph,
    std::span<const Element> samples, exp_t horizon);

// For composable edges (x,y), (y,z): edge (x,z) exists and the multipliers
// compose multiplicatively, in exact rationals.
std::vector<std::string> verify_transitivity(const SemigroupSpec& spec,
                                             const PersistenceGraph& graph);

// Re-checks, against the recorded steps: additive closure of the shifted hit
// sets, exact linearity of exponents along hits, nonnegative multipliers,
// and that the recorded period holds and is a common element of every
// shifted hit set.
std::vector<std::string> verify_trajectory_structure(const SemigroupSpec& spec,
                                                     const Trajectory& t);

}  // namespace monounion

#endif  // MONOUNION_PERSISTENCE_HPP_
