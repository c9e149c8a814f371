#ifndef MONOUNION_SPEC_HPP_
#define MONOUNION_SPEC_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monounion {

using gen_t = std::int32_t;  // index into the alphabet, 0..|A|-1
using exp_t = std::int64_t;  // exponent, always >= 1

// A power of a single generator: the universal element form. Every element
// of a union of free monogenic semigroups is z^n for exactly one generator z
// and one n >= 1 (there is no identity element).
struct Element {
  gen_t gen = 0;
  exp_t exp = 1;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// One product record in the textual spec document: left * right = gen^exp.
struct ProductRule {
  std::string left;
  std::string right;
  std::string gen;
  exp_t exp = 1;
};

// Finite presentation of the semigroup: an ordered alphabet plus the pair
// table x*y = z^k for every ordered pair of distinct generators. Products
// within one copy are implicit (x^m * x^n = x^{m+n}), so the table
// determines every product under associativity. Construction checks shape
// only; whether the table actually defines a semigroup is the validators'
// job.
class SemigroupSpec {
 public:
  // Index-based table: table[x*n + y] for x != y; diagonal entries ignored.
  SemigroupSpec(std::vector<std::string> names, std::vector<Element> table);

  // Name-based, as parsed from a spec document.
  SemigroupSpec(std::vector<std::string> names,
                const std::vector<ProductRule>& products);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(gen_t g) const { return names_[g]; }
  std::optional<gen_t> find(std::string_view name) const;

  // x*y for distinct generators x, y.
  Element table(gen_t x, gen_t y) const { return table_[x * size() + y]; }

  std::string show(Element e) const;  // "a^5"
  std::string show_gen(gen_t g) const { return names_[g]; }

  friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;

 private:
  void check_names() const;

  std::vector<std::string> names_;
  std::vector<Element> table_;  // row-major |A| x |A|, diagonal unused
};

}  // namespace monounion

#endif  // MONOUNION_SPEC_HPP_
