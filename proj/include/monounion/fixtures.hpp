#ifndef MONOUNION_FIXTURES_HPP_
#define MONOUNION_FIXTURES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "monounion/rational.hpp"
#include "monounion/spec.hpp"

namespace monounion {

// Frozen analysis results for a curated spec; regression tests and the
// acceptance suite reproduce every field from scratch.
struct ExpectedAnalysis {
  // (letter, target, multiplier) triples, sorted by (letter, target).
  std::vector<std::tuple<std::string, std::string, Rational>> edges;
  std::map<std::string, exp_t> d;
  exp_t letter_bound;
  Rational density;
  std::vector<std::int64_t> ball_counts;  // |J(m)| for m = 1..12
};

// Frozen first associativity violation for a curated invalid spec.
struct ExpectedRejection {
  Element u, v, w;
  Element left;   // (u * v) * w
  Element right;  // u * (v * w)
};

struct Fixture {
  std::string name;
  SemigroupSpec spec;
  std::optional<ExpectedAnalysis> analysis;
  std::optional<ExpectedRejection> rejection;
};

std::vector<std::string> fixture_names();

// Throws UnknownFixture for anything outside fixture_names().
Fixture get_fixture(const std::string& name);

// Off-diagonal table cells in row-major order; the comparison key for
// deduplication.
using TableEncoding = std::vector<Element>;

TableEncoding table_encoding(const SemigroupSpec& spec);

// Minimum encoding over all generator renamings, of the table and of its
// reversal (the anti-isomorphic semigroup with x*y read as y*x).
TableEncoding canonical_encoding(const SemigroupSpec& spec);

struct SearchOptions {
  int alphabet = 2;        // 2 or 3
  exp_t max_exp = 2;       // 1 to 3
  exp_t window = 6;
  std::int64_t depth_bound = 10000;
  std::int64_t cap = 10'000'000;  // enumeration size limit
};

// Enumerates every product table over the alphabet with result exponents up
// to max_exp, keeps the tables that pass the associativity window and
// exponent monotonicity checks, and returns one representative per
// renaming/reversal class: the one whose encoding is minimal, in encoding
// order. Representatives are exactly the survivors that equal their own
// canonical encoding, so the filter runs on them alone.
std::vector<SemigroupSpec> search_fixtures(const SearchOptions& opts);

}  // namespace monounion

#endif  // MONOUNION_FIXTURES_HPP_
