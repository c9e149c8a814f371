#include "monounion/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "monounion/engine.hpp"
#include "monounion/errors.hpp"

namespace monounion {

namespace {

std::vector<std::string> letter_names(int n) {
  static const char* kLetters[] = {"a", "b", "c"};
  return std::vector<std::string>(kLetters, kLetters + n);
}

Fixture make_fold() {
  SemigroupSpec spec(letter_names(2), std::vector<ProductRule>{
                                          {"a", "b", "a", 2},
                                          {"b", "a", "a", 2},
                                      });
  ExpectedAnalysis e;
  e.edges = {{"a", "a", Rational(1)},
             {"b", "a", Rational(1)},
             {"b", "b", Rational(1)}};
  e.d = {{"a", 1}, {"b", 1}};
  e.letter_bound = 1;
  e.density = Rational(2);
  e.ball_counts = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24};
  return Fixture{"fold", std::move(spec), std::move(e), std::nullopt};
}

Fixture make_shift2() {
  SemigroupSpec spec(letter_names(2), std::vector<ProductRule>{
                                          {"a", "b", "a", 3},
                                          {"b", "a", "a", 3},
                                      });
  ExpectedAnalysis e;
  e.edges = {{"a", "a", Rational(1)},
             {"b", "a", Rational(2)},
             {"b", "b", Rational(1)}};
  e.d = {{"a", 1}, {"b", 2}};
  e.letter_bound = 2;
  e.density = Rational(3, 2);
  e.ball_counts = {2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35};
  return Fixture{"shift2", std::move(spec), std::move(e), std::nullopt};
}

Fixture make_swap() {
  SemigroupSpec spec(letter_names(2), std::vector<ProductRule>{
                                          {"a", "b", "b", 2},
                                          {"b", "a", "a", 2},
                                      });
  ExpectedAnalysis e;
  e.edges = {{"a", "a", Rational(1)}, {"b", "b", Rational(1)}};
  e.d = {{"a", 1}, {"b", 1}};
  e.letter_bound = 1;
  e.density = Rational(2);
  e.ball_counts = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24};
  return Fixture{"swap", std::move(spec), std::move(e), std::nullopt};
}

Fixture make_cascade3() {
  SemigroupSpec spec(letter_names(3), std::vector<ProductRule>{
                                          {"a", "b", "a", 2},
                                          {"b", "a", "a", 2},
                                          {"a", "c", "a", 2},
                                          {"c", "a", "a", 2},
                                          {"b", "c", "b", 2},
                                          {"c", "b", "b", 2},
                                      });
  ExpectedAnalysis e;
  e.edges = {{"a", "a", Rational(1)}, {"b", "a", Rational(1)},
             {"b", "b", Rational(1)}, {"c", "a", Rational(1)},
             {"c", "b", Rational(1)}, {"c", "c", Rational(1)}};
  e.d = {{"a", 1}, {"b", 1}, {"c", 1}};
  e.letter_bound = 1;
  e.density = Rational(3);
  e.ball_counts = {3, 6, 9, 12, 15, 18, 21, 24, 27, 30, 33, 36};
  return Fixture{"cascade3", std::move(spec), std::move(e), std::nullopt};
}

Fixture make_nonassoc() {
  SemigroupSpec spec(letter_names(2), std::vector<ProductRule>{
                                          {"a", "b", "b", 2},
                                          {"b", "a", "a", 3},
                                      });
  // (a*b)*a = b^2*a = a^5 but a*(b*a) = a*a^3 = a^4, the first triple the
  // window checker visits that disagrees.
  ExpectedRejection r{Element{0, 1}, Element{1, 1}, Element{0, 1},
                      Element{0, 5}, Element{0, 4}};
  return Fixture{"nonassoc", std::move(spec), std::nullopt, r};
}

// Early-exit twin of the validation checks, for the search inner loop. The
// unit tests pin it to the collecting checkers on a full small universe.
bool window_accepts(const Engine& eng, exp_t window) {
  const SemigroupSpec& spec = eng.spec();
  const gen_t n = spec.size();
  try {
    for (gen_t x = 0; x < n; ++x)
      for (gen_t y = 0; y < n; ++y) {
        if (x == y) continue;
        for (exp_t i = 1; i <= window; ++i)
          for (exp_t j = 1; j <= window; ++j) {
            Element p = eng.mul(Element{x, i}, Element{y, j});
            if (p.gen == x && p.exp < i) return false;
          }
      }
    std::vector<Element> elems;
    for (gen_t g = 0; g < n; ++g)
      for (exp_t e = 1; e <= window; ++e) elems.push_back(Element{g, e});
    for (const Element& u : elems)
      for (const Element& v : elems) {
        Element uv = eng.mul(u, v);
        for (const Element& w : elems)
          if (eng.mul(uv, w) != eng.mul(u, eng.mul(v, w))) return false;
      }
  } catch (const Error&) {
    return false;  // budget or overflow blowups reject the table
  }
  return true;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"fold", "shift2", "swap", "cascade3", "nonassoc"};
}

Fixture get_fixture(const std::string& name) {
  if (name == "fold") return make_fold();
  if (name == "shift2") return make_shift2();
  if (name == "swap") return make_swap();
  if (name == "cascade3") return make_cascade3();
  if (name == "nonassoc") return make_nonassoc();
  throw UnknownFixture("unknown fixture: " + name);
}

TableEncoding table_encoding(const SemigroupSpec& spec) {
  TableEncoding enc;
  for (gen_t x = 0; x < spec.size(); ++x)
    for (gen_t y = 0; y < spec.size(); ++y)
      if (x != y) enc.push_back(spec.table(x, y));
  return enc;
}

TableEncoding canonical_encoding(const SemigroupSpec& spec) {
  const gen_t n = spec.size();
  std::vector<gen_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  TableEncoding best;
  do {
    for (int reversed = 0; reversed < 2; ++reversed) {
      std::vector<Element> cells(static_cast<std::size_t>(n) * n);
      for (gen_t x = 0; x < n; ++x)
        for (gen_t y = 0; y < n; ++y) {
          if (x == y) continue;
          Element src = reversed ? spec.table(y, x) : spec.table(x, y);
          gen_t px = perm[static_cast<std::size_t>(x)];
          gen_t py = perm[static_cast<std::size_t>(y)];
          cells[static_cast<std::size_t>(px) * n + py] =
              Element{perm[static_cast<std::size_t>(src.gen)], src.exp};
        }
      TableEncoding enc;
      for (gen_t x = 0; x < n; ++x)
        for (gen_t y = 0; y < n; ++y)
          if (x != y) enc.push_back(cells[static_cast<std::size_t>(x) * n + y]);
      if (best.empty() || enc < best) best = std::move(enc);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SemigroupSpec> search_fixtures(const SearchOptions& opts) {
  if (opts.alphabet < 2 || opts.alphabet > 3)
    throw DocumentError("search alphabet size must be 2 or 3");
  if (opts.max_exp < 1 || opts.max_exp > 3)
    throw DocumentError("search result exponent bound must be 1 to 3");
  if (opts.window < 2) throw DocumentError("search window must be at least 2");

  const gen_t n = opts.alphabet;
  const std::size_t cells = static_cast<std::size_t>(n) * (n - 1);
  const std::int64_t options_per_cell = static_cast<std::int64_t>(n) *
                                        opts.max_exp;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i)
    total = checked_mul(total, options_per_cell);
  if (total > opts.cap) {
    throw ResourceExceeded("search space of " + std::to_string(total) +
                           " tables passes the cap of " +
                           std::to_string(opts.cap));
  }

  const std::vector<std::string> names = letter_names(n);
  EngineLimits limits{opts.depth_bound};
  std::vector<SemigroupSpec> survivors;

  std::vector<std::int64_t> digits(cells, 0);
  while (true) {
    std::vector<Element> table(static_cast<std::size_t>(n) * n);
    std::size_t cell = 0;
    for (gen_t x = 0; x < n; ++x)
      for (gen_t y = 0; y < n; ++y) {
        std::size_t at = static_cast<std::size_t>(x) * n + y;
        if (x == y) {
          table[at] = Element{x, 2};
        } else {
          std::int64_t v = digits[cell++];
          table[at] = Element{static_cast<gen_t>(v / opts.max_exp),
                              static_cast<exp_t>(v % opts.max_exp) + 1};
        }
      }

    SemigroupSpec candidate(names, table);
    // Renaming and reversal preserve the checks, so testing the least
    // member of each class is enough.
    if (table_encoding(candidate) == canonical_encoding(candidate)) {
      Engine eng(candidate, limits);
      if (window_accepts(eng, opts.window))
        survivors.push_back(std::move(candidate));
    }

    std::size_t pos = cells;
    while (pos > 0 && digits[pos - 1] == options_per_cell - 1)
      digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }

  std::sort(survivors.begin(), survivors.end(),
            [](const SemigroupSpec& a, const SemigroupSpec& b) {
              return table_encoding(a) < table_encoding(b);
            });
  return survivors;
}

}  // namespace monounion
