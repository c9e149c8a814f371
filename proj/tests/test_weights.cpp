#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "monounion/engine.hpp"
#include "monounion/errors.hpp"
#include "monounion/fixtures.hpp"
#include "monounion/persistence.hpp"
#include "monounion/rational.hpp"
#include "monounion/spec.hpp"
#include "monounion/weights.hpp"

using namespace monounion;

namespace {

PersistenceGraph graph_of(const Fixture& fx) {
  Engine eng(fx.spec);
  return build_persistence_graph(eng, 16, 16);
}

PersistenceGraph with_reflexives(int n) {
  PersistenceGraph graph(n);
  Return dummy{0, 0, 1, 1, 2};
  for (gen_t g = 0; g < n; ++g)
    graph.add_edge(g, g, PersistenceEdge{Rational(1), dummy});
  return graph;
}

// a*b = a^2, b*a = b^2: one mutual class of two generators. This is the
// canonical representative of the class the "swap" fixture belongs to.
SemigroupSpec co_swap() {
  return SemigroupSpec({"a", "b"},
                       std::vector<Element>{Element{0, 2}, Element{0, 2},
                                            Element{1, 2}, Element{1, 2}});
}

}  // namespace

TEST_CASE("fixture condensations are singleton classes, sinks first") {
  for (const char* name : {"fold", "shift2", "swap", "cascade3"}) {
    CAPTURE(name);
    Fixture fx = get_fixture(name);
    PersistenceGraph graph = graph_of(fx);
    Condensation cond = condense(fx.spec, graph);
    const int n = fx.spec.size();
    REQUIRE(static_cast<int>(cond.classes.size()) == n);
    for (gen_t g = 0; g < n; ++g) {
      CHECK(cond.class_of[static_cast<std::size_t>(g)] == g);
      CHECK(cond.classes[static_cast<std::size_t>(g)] ==
            std::vector<gen_t>{g});
    }
    // All fixture edges point down the alphabet, so ascending ids work.
    std::vector<int> ascending;
    for (int c = 0; c < n; ++c) ascending.push_back(c);
    CHECK(cond.order == ascending);
  }
}

TEST_CASE("mutual edges merge generators into one class") {
  SemigroupSpec spec = co_swap();
  Engine eng(spec);
  PersistenceGraph graph = build_persistence_graph(eng, 16, 16);
  REQUIRE(graph.has_edge(0, 1));
  REQUIRE(graph.has_edge(1, 0));
  Condensation cond = condense(spec, graph);
  CHECK(cond.classes == std::vector<std::vector<gen_t>>{{0, 1}});
  CHECK(cond.class_of == std::vector<int>{0, 0});
  CHECK(cond.order == std::vector<int>{0});
  Weights w = synthesize_weights(spec, graph, cond);
  CHECK(w.d == std::vector<exp_t>{1, 1});
  CHECK(verify_weights(spec, graph, cond, w).empty());
}

TEST_CASE("order places a class only after the classes it points into") {
  for (const char* name : {"fold", "shift2", "swap", "cascade3"}) {
    CAPTURE(name);
    Fixture fx = get_fixture(name);
    PersistenceGraph graph = graph_of(fx);
    Condensation cond = condense(fx.spec, graph);
    std::vector<int> position(cond.order.size());
    for (std::size_t i = 0; i < cond.order.size(); ++i)
      position[static_cast<std::size_t>(cond.order[i])] = static_cast<int>(i);
    for (const auto& [key, e] : graph.edges()) {
      auto [y, z] = key;
      int cy = cond.class_of[static_cast<std::size_t>(y)];
      int cz = cond.class_of[static_cast<std::size_t>(z)];
      if (cy != cz)
        CHECK(position[static_cast<std::size_t>(cz)] <
              position[static_cast<std::size_t>(cy)]);
    }
  }
}

TEST_CASE("synthesized weights match the frozen fixture values") {
  for (const char* name : {"fold", "shift2", "swap", "cascade3"}) {
    CAPTURE(name);
    Fixture fx = get_fixture(name);
    REQUIRE(fx.analysis.has_value());
    PersistenceGraph graph = graph_of(fx);
    Condensation cond = condense(fx.spec, graph);
    Weights w = synthesize_weights(fx.spec, graph, cond);
    for (const auto& [gname, expected] : fx.analysis->d) {
      auto g = fx.spec.find(gname);
      REQUIRE(g.has_value());
      CHECK(w.of(*g) == expected);
    }
    CHECK(verify_weights(fx.spec, graph, cond, w).empty());
  }
}

TEST_CASE("fractional multipliers clear denominators and scale up") {
  Fixture names = get_fixture("cascade3");
  PersistenceGraph graph = with_reflexives(3);
  Return dummy{0, 0, 1, 1, 2};
  graph.add_edge(0, 1, PersistenceEdge{Rational(2), dummy});
  graph.add_edge(1, 0, PersistenceEdge{Rational(1, 2), dummy});
  graph.add_edge(2, 0, PersistenceEdge{Rational(3, 4), dummy});
  graph.add_edge(2, 1, PersistenceEdge{Rational(3, 2), dummy});
  Condensation cond = condense(names.spec, graph);
  CHECK(cond.classes == std::vector<std::vector<gen_t>>{{0, 1}, {2}});
  CHECK(cond.order == std::vector<int>{0, 1});
  Weights w = synthesize_weights(names.spec, graph, cond);
  // Class {a, b}: raw weights 1 and 1/2 clear to 2 and 1. Class {c}: the
  // cross edges demand at least 2*(3/4) = 3/2, so the scale rounds up to 2.
  CHECK(w.d == std::vector<exp_t>{2, 1, 2});
  CHECK(verify_weights(names.spec, graph, cond, w).empty());
}

TEST_CASE("multipliers that do not cancel are rejected") {
  Fixture names = get_fixture("fold");
  PersistenceGraph graph = with_reflexives(2);
  Return dummy{0, 0, 1, 1, 2};
  graph.add_edge(0, 1, PersistenceEdge{Rational(2), dummy});
  graph.add_edge(1, 0, PersistenceEdge{Rational(1), dummy});
  CHECK_THROWS_AS(condense(names.spec, graph), IntraClassInconsistency);
}

TEST_CASE("a class joined through a middle generator needs all mutual edges") {
  Fixture names = get_fixture("cascade3");
  PersistenceGraph graph = with_reflexives(3);
  Return dummy{0, 0, 1, 1, 2};
  graph.add_edge(0, 1, PersistenceEdge{Rational(1), dummy});
  graph.add_edge(1, 0, PersistenceEdge{Rational(1), dummy});
  graph.add_edge(1, 2, PersistenceEdge{Rational(1), dummy});
  graph.add_edge(2, 1, PersistenceEdge{Rational(1), dummy});
  // a and c fall in one class but have no mutual edges.
  CHECK_THROWS_AS(condense(names.spec, graph), IntraClassInconsistency);
}

TEST_CASE("a directed cycle between classes is rejected") {
  Fixture names = get_fixture("cascade3");
  PersistenceGraph graph = with_reflexives(3);
  Return dummy{0, 0, 1, 1, 2};
  graph.add_edge(0, 1, PersistenceEdge{Rational(1), dummy});
  graph.add_edge(1, 2, PersistenceEdge{Rational(1), dummy});
  graph.add_edge(2, 0, PersistenceEdge{Rational(1), dummy});
  CHECK_THROWS_AS(condense(names.spec, graph), IntraClassInconsistency);
}

TEST_CASE("a nonpositive multiplier into the class base is rejected") {
  Fixture names = get_fixture("fold");
  PersistenceGraph graph = with_reflexives(2);
  Return dummy{0, 0, 1, 1, 2};
  graph.add_edge(1, 0, PersistenceEdge{Rational(0), dummy});
  // Hand-built condensation bypassing the mutual-edge check.
  Condensation cond;
  cond.class_of = {0, 0};
  cond.classes = {{0, 1}};
  cond.order = {0};
  CHECK_THROWS_AS(synthesize_weights(names.spec, graph, cond),
                  IntraClassInconsistency);
}

TEST_CASE("uniform weights fail where a multiplier exceeds one") {
  Fixture fx = get_fixture("shift2");
  PersistenceGraph graph = graph_of(fx);
  Condensation cond = condense(fx.spec, graph);
  Weights flat;
  flat.d = {1, 1};
  std::vector<std::string> violations =
      verify_weights(fx.spec, graph, cond, flat);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().find("edge (b, a)") != std::string::npos);
}

TEST_CASE("weight verification rejects nonpositive entries") {
  Fixture fx = get_fixture("fold");
  PersistenceGraph graph = graph_of(fx);
  Condensation cond = condense(fx.spec, graph);
  Weights zeroed;
  zeroed.d = {0, 1};
  CHECK_FALSE(verify_weights(fx.spec, graph, cond, zeroed).empty());
}

TEST_CASE("the inequalities are closed under uniform scaling") {
  for (const char* name : {"fold", "shift2", "swap", "cascade3"}) {
    CAPTURE(name);
    Fixture fx = get_fixture(name);
    PersistenceGraph graph = graph_of(fx);
    Condensation cond = condense(fx.spec, graph);
    Weights w = synthesize_weights(fx.spec, graph, cond);
    for (exp_t& v : w.d) v *= 3;
    CHECK(verify_weights(fx.spec, graph, cond, w).empty());
  }
}
