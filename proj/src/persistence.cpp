#include "monounion/persistence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "monounion/errors.hpp"

namespace monounion {

namespace {

std::string show_pair(const SemigroupSpec& spec, gen_t y, gen_t z) {
  return "(" + spec.name(y) + ", " + spec.name(z) + ")";
}

}  // namespace

Trajectory trajectory(const Engine& eng, Element start, gen_t letter,
                      exp_t horizon) {
  if (horizon < 2) throw DocumentError("trajectory horizon must be at least 2");
  Trajectory t;
  t.start = start;
  t.letter = letter;
  t.horizon = horizon;
  t.steps.reserve(static_cast<std::size_t>(horizon));

  Element acc = start;
  for (exp_t i = 1; i <= horizon; ++i) {
    acc = eng.right_mul_gen(acc, letter);
    t.steps.push_back(acc);
  }

  // Group step indices by base.
  std::map<gen_t, std::vector<exp_t>> by_base;
  for (exp_t i = 1; i <= horizon; ++i)
    by_base[t.steps[static_cast<std::size_t>(i - 1)].gen].push_back(i);

  std::vector<TargetSummary> targets;
  for (const auto& [base, hits] : by_base) {
    if (hits.size() < 2) continue;
    TargetSummary s;
    s.target = base;
    s.first_index = hits[0];
    s.first_exp = t.steps[static_cast<std::size_t>(hits[0] - 1)].exp;
    s.gap = hits[1] - hits[0];
    exp_t second_exp = t.steps[static_cast<std::size_t>(hits[1] - 1)].exp;
    s.multiplier = Rational(second_exp - s.first_exp, s.gap);
    s.hits = hits;
    targets.push_back(std::move(s));
  }
  std::sort(targets.begin(), targets.end(),
            [](const TargetSummary& a, const TargetSummary& b) {
              return a.first_index < b.first_index;
            });
  t.targets = std::move(targets);

  // Eventual period: smallest shift T under which a suffix of the base
  // sequence matches itself, with the matching suffix covering at least two
  // full periods so the repetition is actually observed.
  const auto base_at = [&](exp_t i) {
    return t.steps[static_cast<std::size_t>(i - 1)].gen;
  };
  for (exp_t shift = 1; 2 * shift < horizon; ++shift) {
    exp_t last_mismatch = 0;
    for (exp_t i = 1; i + shift <= horizon; ++i)
      if (base_at(i) != base_at(i + shift)) last_mismatch = i;
    exp_t from = last_mismatch + 1;
    if (from <= horizon - 2 * shift) {
      t.period = shift;
      t.period_start = from;
      break;
    }
  }

  if (t.targets.empty() && !t.period) {
    std::ostringstream msg;
    msg << "no base repeats within horizon " << horizon
        << " along the trajectory of a start element; raise the horizon";
    throw HorizonExhausted(msg.str());
  }
  return t;
}

std::optional<Return> find_return(const Engine& eng, gen_t letter, gen_t base,
                                  exp_t t_max, exp_t q_max) {
  for (exp_t start = 1; start <= t_max; ++start) {
    Element acc{base, start};
    for (exp_t count = 1; count <= q_max; ++count) {
      acc = eng.right_mul_gen(acc, letter);
      if (acc.gen == base)
        return Return{letter, base, start, count, acc.exp};
    }
  }
  return std::nullopt;
}

Rational multiplier_of(const Return& ret) {
  if (ret.end_exp < ret.start_exp) {
    std::ostringstream msg;
    msg << "return witness has a negative multiplier: start exponent "
        << ret.start_exp << ", end exponent " << ret.end_exp << " after "
        << ret.letter_count << " letters";
    throw NegativeMultiplier(msg.str());
  }
  return Rational(ret.end_exp - ret.start_exp, ret.letter_count);
}

PersistenceGraph build_persistence_graph(const Engine& eng, exp_t t_max,
                                         exp_t q_max) {
  const SemigroupSpec& spec = eng.spec();
  PersistenceGraph graph(spec.size());
  for (gen_t y = 0; y < spec.size(); ++y)
    for (gen_t z = 0; z < spec.size(); ++z)
      if (auto ret = find_return(eng, y, z, t_max, q_max))
        graph.add_edge(y, z, PersistenceEdge{multiplier_of(*ret), *ret});
  return graph;
}

std::vector<Element> sample_elements(const Engine& eng) {
  const SemigroupSpec& spec = eng.spec();
  std::set<Element> seen;
  for (gen_t x = 0; x < spec.size(); ++x) seen.insert(Element{x, 1});
  for (gen_t x = 0; x < spec.size(); ++x)
    for (gen_t y = 0; y < spec.size(); ++y)
      seen.insert(eng.mul(Element{x, 1}, Element{y, 1}));
  return std::vector<Element>(seen.begin(), seen.end());
}

std::vector<std::string> verify_x_independence(
    const Engine& eng, const PersistenceGraph& graph,
    std::span<const Element> samples, exp_t horizon) {
  const SemigroupSpec& spec = eng.spec();
  std::vector<std::string> violations;
  for (const Element& x : samples) {
    for (gen_t y = 0; y < spec.size(); ++y) {
      Trajectory t = trajectory(eng, x, y, horizon);
      for (const TargetSummary& s : t.targets) {
        const PersistenceEdge* e = graph.edge(y, s.target);
        std::ostringstream msg;
        if (!e) {
          msg << "trajectory of " << spec.show(x) << " under " << spec.name(y)
              << " reaches " << spec.name(s.target)
              << " repeatedly, but no return witness was found; raise the "
                 "return search bounds";
          violations.push_back(msg.str());
        } else if (s.multiplier != e->multiplier) {
          msg << "multiplier for " << show_pair(spec, y, s.target)
              << " along the trajectory of " << spec.show(x) << " is "
              << s.multiplier.str() << ", but the return witness gives "
              << e->multiplier.str();
          violations.push_back(msg.str());
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_transitivity(const SemigroupSpec& spec,
                                             const PersistenceGraph& graph) {
  std::vector<std::string> violations;
  for (gen_t x = 0; x < spec.size(); ++x) {
    for (gen_t y = 0; y < spec.size(); ++y) {
      const PersistenceEdge* xy = graph.edge(x, y);
      if (!xy) continue;
      for (gen_t z = 0; z < spec.size(); ++z) {
        const PersistenceEdge* yz = graph.edge(y, z);
        if (!yz) continue;
        const PersistenceEdge* xz = graph.edge(x, z);
        std::ostringstream msg;
        if (!xz) {
          msg << "edges " << show_pair(spec, x, y) << " and "
              << show_pair(spec, y, z) << " exist but "
              << show_pair(spec, x, z) << " is missing";
          violations.push_back(msg.str());
          continue;
        }
        Rational expected = xy->multiplier * yz->multiplier;
        if (xz->multiplier != expected) {
          msg << "multiplier for " << show_pair(spec, x, z) << " is "
              << xz->multiplier.str() << ", expected "
              << xy->multiplier.str() << " * " << yz->multiplier.str()
              << " = " << expected.str();
          violations.push_back(msg.str());
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> verify_trajectory_structure(const SemigroupSpec& spec,
                                                     const Trajectory& t) {
  std::vector<std::string> violations;
  std::string label = "trajectory of " + spec.show(t.start) + " under " +
                      spec.name(t.letter);

  for (const TargetSummary& s : t.targets) {
    // Shifted hit set, as a set for membership tests.
    std::set<exp_t> shifted;
    for (exp_t h : s.hits) shifted.insert(h - s.first_index);
    exp_t max_shift = *shifted.rbegin();

    // Additive closure, restricted to sums still inside the horizon.
    for (exp_t a : shifted) {
      for (exp_t b : shifted) {
        if (a + b > max_shift) continue;
        if (!shifted.count(a + b)) {
          std::ostringstream msg;
          msg << label << ": hits of " << spec.name(s.target)
              << " are not additively closed: shifts " << a << " and " << b
              << " occur but " << a + b << " does not";
          violations.push_back(msg.str());
        }
      }
    }

    // Exponents along the hits lie exactly on a line with the recorded
    // slope, and the slope is nonnegative.
    if (s.multiplier < Rational(0)) {
      std::ostringstream msg;
      msg << label << ": multiplier for " << spec.name(s.target) << " is "
          << s.multiplier.str() << ", which is negative";
      violations.push_back(msg.str());
    }
    for (exp_t h : s.hits) {
      Rational expected =
          Rational(s.first_exp) + s.multiplier * Rational(h - s.first_index);
      Rational actual(t.steps[static_cast<std::size_t>(h - 1)].exp);
      if (expected != actual) {
        std::ostringstream msg;
        msg << label << ": exponent at step " << h << " for "
            << spec.name(s.target) << " is " << actual.str() << ", expected "
            << expected.str();
        violations.push_back(msg.str());
      }
    }
  }

  if (t.period) {
    exp_t shift = *t.period;
    const auto base_at = [&](exp_t i) {
      return t.steps[static_cast<std::size_t>(i - 1)].gen;
    };
    for (exp_t i = t.period_start; i + shift <= t.horizon; ++i) {
      if (base_at(i) != base_at(i + shift)) {
        std::ostringstream msg;
        msg << label << ": recorded period " << shift
            << " fails at steps " << i << " and " << i + shift;
        violations.push_back(msg.str());
      }
    }
    if (t.period_start > t.horizon - 2 * shift) {
      std::ostringstream msg;
      msg << label << ": period " << shift << " starting at "
          << t.period_start << " is not observed twice within horizon "
          << t.horizon;
      violations.push_back(msg.str());
    }
    // The period is a common shift of every repeated target's hit set.
    for (const TargetSummary& s : t.targets) {
      std::set<exp_t> shifted;
      for (exp_t h : s.hits) shifted.insert(h - s.first_index);
      if (shift <= *shifted.rbegin() && !shifted.count(shift)) {
        std::ostringstream msg;
        msg << label << ": period " << shift
            << " is not a hit shift of target " << spec.name(s.target);
        violations.push_back(msg.str());
      }
    }
  }

  return violations;
}

}  // namespace monounion
