#include "monounion/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monounion/errors.hpp"

namespace monounion {

namespace {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace

Condensation condense(const SemigroupSpec& spec,
                      const PersistenceGraph& graph) {
  const int n = spec.size();

  // Union generators joined by a mutual edge. The relation is already an
  // equivalence when the graph is transitive; union-find keeps the classes
  // well defined even when it is not, and the pairwise check below then
  // reports the inconsistency.
  std::vector<gen_t> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  const auto find = [&](gen_t g) {
    while (root[static_cast<std::size_t>(g)] != g)
      g = root[static_cast<std::size_t>(g)] =
          root[static_cast<std::size_t>(root[static_cast<std::size_t>(g)])];
    return g;
  };
  for (gen_t x = 0; x < n; ++x)
    for (gen_t y = x + 1; y < n; ++y)
      if (graph.has_edge(x, y) && graph.has_edge(y, x)) {
        gen_t rx = find(x), ry = find(y);
        if (rx != ry) root[static_cast<std::size_t>(std::max(rx, ry))] =
            std::min(rx, ry);
      }

  Condensation cond;
  cond.class_of.assign(static_cast<std::size_t>(n), -1);
  for (gen_t g = 0; g < n; ++g) {
    gen_t r = find(g);
    if (cond.class_of[static_cast<std::size_t>(r)] < 0) {
      cond.class_of[static_cast<std::size_t>(r)] =
          static_cast<int>(cond.classes.size());
      cond.classes.emplace_back();
    }
    int c = cond.class_of[static_cast<std::size_t>(r)];
    cond.class_of[static_cast<std::size_t>(g)] = c;
    cond.classes[static_cast<std::size_t>(c)].push_back(g);
  }

  // Every pair inside a class must have mutual edges whose multipliers
  // cancel; otherwise no weight assignment can track them exactly.
  for (const auto& members : cond.classes) {
    for (gen_t x : members) {
      for (gen_t y : members) {
        if (x == y) continue;
        const PersistenceEdge* xy = graph.edge(x, y);
        const PersistenceEdge* yx = graph.edge(y, x);
        std::ostringstream msg;
        if (!xy || !yx) {
          msg << "generators " << spec.name(x) << " and " << spec.name(y)
              << " fall in one class but lack mutual edges; the graph is "
                 "not transitive";
          throw IntraClassInconsistency(msg.str());
        }
        if (xy->multiplier * yx->multiplier != Rational(1)) {
          msg << "multipliers between " << spec.name(x) << " and "
              << spec.name(y) << " do not cancel: " << xy->multiplier.str()
              << " * " << yx->multiplier.str() << " != 1";
          throw IntraClassInconsistency(msg.str());
        }
      }
    }
  }

  // Sinks-first order: a class is ready once all its cross edges point at
  // classes already placed. Smallest ready class id goes first, so the
  // order is deterministic.
  const int k = static_cast<int>(cond.classes.size());
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  for (int step = 0; step < k; ++step) {
    int chosen = -1;
    for (int c = 0; c < k && chosen < 0; ++c) {
      if (placed[static_cast<std::size_t>(c)]) continue;
      bool ready = true;
      for (gen_t y : cond.classes[static_cast<std::size_t>(c)]) {
        for (gen_t z = 0; z < n && ready; ++z) {
          int cz = cond.class_of[static_cast<std::size_t>(z)];
          if (cz != c && graph.has_edge(y, z) &&
              !placed[static_cast<std::size_t>(cz)])
            ready = false;
        }
        if (!ready) break;
      }
      if (ready) chosen = c;
    }
    if (chosen < 0)
      throw IntraClassInconsistency(
          "persistence classes form a cycle; the graph is not transitive");
    placed[static_cast<std::size_t>(chosen)] = true;
    cond.order.push_back(chosen);
  }
  return cond;
}

Weights synthesize_weights(const SemigroupSpec& spec,
                           const PersistenceGraph& graph,
                           const Condensation& cond) {
  const int n = spec.size();
  Weights w;
  w.d.assign(static_cast<std::size_t>(n), 0);

  for (int c : cond.order) {
    const std::vector<gen_t>& members =
        cond.classes[static_cast<std::size_t>(c)];
    gen_t base = members.front();

    // Raw weights: the multiplier into the class base. Mutual cancellation,
    // checked in condense, makes these consistent across the class.
    std::vector<Rational> raw;
    raw.reserve(members.size());
    std::int64_t denom_lcm = 1;
    for (gen_t y : members) {
      Rational r = y == base ? Rational(1) : graph.edge(y, base)->multiplier;
      if (r <= Rational(0)) {
        std::ostringstream msg;
        msg << "multiplier from " << spec.name(y) << " into its class base "
            << spec.name(base) << " is " << r.str()
            << "; weights must be positive";
        throw IntraClassInconsistency(msg.str());
      }
      denom_lcm = lcm_checked(denom_lcm, r.den());
      raw.push_back(r);
    }

    // Clear denominators, then scale the whole class by the least integer
    // factor that dominates every edge into the classes already weighted.
    std::vector<exp_t> cleared;
    cleared.reserve(members.size());
    for (const Rational& r : raw)
      cleared.push_back(checked_mul(r.num(), denom_lcm / r.den()));

    exp_t scale = 1;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      gen_t y = members[idx];
      for (gen_t z = 0; z < n; ++z) {
        if (cond.class_of[static_cast<std::size_t>(z)] == c) continue;
        const PersistenceEdge* e = graph.edge(y, z);
        if (!e) continue;
        Rational needed = Rational(w.of(z)) * e->multiplier /
                          Rational(cleared[idx]);
        scale = std::max(scale, needed.ceil());
      }
    }
    for (std::size_t idx = 0; idx < members.size(); ++idx)
      w.d[static_cast<std::size_t>(members[idx])] =
          checked_mul(scale, cleared[idx]);
  }
  return w;
}

std::vector<std::string> verify_weights(const SemigroupSpec& spec,
                                        const PersistenceGraph& graph,
                                        const Condensation& cond,
                                        const Weights& weights) {
  std::vector<std::string> violations;
  for (gen_t g = 0; g < spec.size(); ++g) {
    if (weights.of(g) <= 0) {
      std::ostringstream msg;
      msg << "weight of " << spec.name(g) << " is " << weights.of(g)
          << "; weights must be positive";
      violations.push_back(msg.str());
    }
  }
  for (const auto& [key, e] : graph.edges()) {
    auto [y, z] = key;
    Rational lhs(weights.of(y));
    Rational rhs = Rational(weights.of(z)) * e.multiplier;
    bool same_class = cond.class_of[static_cast<std::size_t>(y)] ==
                      cond.class_of[static_cast<std::size_t>(z)];
    if (same_class ? lhs != rhs : lhs < rhs) {
      std::ostringstream msg;
      msg << "edge (" << spec.name(y) << ", " << spec.name(z)
          << ") with multiplier " << e.multiplier.str() << " needs d("
          << spec.name(y) << ") " << (same_class ? "==" : ">=") << " "
          << rhs.str() << ", but it is " << lhs.str();
      violations.push_back(msg.str());
    }
  }
  return violations;
}

}  // namespace monounion
