#include "monounion/spec.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "monounion/errors.hpp"

namespace monounion {

SemigroupSpec::SemigroupSpec(std::vector<std::string> names,
                             std::vector<Element> table)
    : names_(std::move(names)), table_(std::move(table)) {
  check_names();
  const int n = size();
  if (table_.size() != static_cast<std::size_t>(n) * n) {
    throw DocumentError("product table has wrong shape");
  }
  for (gen_t x = 0; x < n; ++x) {
    // Same-generator products are implicit; pin the diagonal to the true
    // value so spec equality ignores whatever the caller put there.
    table_[static_cast<std::size_t>(x) * n + x] = Element{x, 2};
    for (gen_t y = 0; y < n; ++y) {
      if (x == y) continue;
      Element e = table_[x * n + y];
      if (e.gen < 0 || e.gen >= n) {
        throw DocumentError("product " + names_[x] + "*" + names_[y] +
                            " references an unknown generator");
      }
      if (e.exp < 1) {
        throw DocumentError("product " + names_[x] + "*" + names_[y] +
                            " has exponent < 1");
      }
    }
  }
}

SemigroupSpec::SemigroupSpec(std::vector<std::string> names,
                             const std::vector<ProductRule>& products)
    : names_(std::move(names)) {
  check_names();
  const int n = size();
  table_.assign(static_cast<std::size_t>(n) * n, Element{0, 1});
  for (gen_t x = 0; x < n; ++x)
    table_[static_cast<std::size_t>(x) * n + x] = Element{x, 2};
  std::set<std::pair<gen_t, gen_t>> seen;
  for (const ProductRule& p : products) {
    auto left = find(p.left);
    auto right = find(p.right);
    auto result = find(p.gen);
    if (!left || !right || !result) {
      throw DocumentError("product (" + p.left + ", " + p.right +
                          ") references an unknown generator");
    }
    if (*left == *right) {
      throw DocumentError("product (" + p.left + ", " + p.right +
                          ") is a same-generator pair; those are implicit");
    }
    if (p.exp < 1) {
      throw DocumentError("product (" + p.left + ", " + p.right +
                          ") has exponent < 1");
    }
    if (!seen.insert({*left, *right}).second) {
      throw DocumentError("duplicate product record for (" + p.left + ", " +
                          p.right + ")");
    }
    table_[*left * n + *right] = Element{*result, p.exp};
  }
  if (seen.size() != static_cast<std::size_t>(n) * (n - 1)) {
    throw DocumentError(
        "product table is not total: need exactly one record per ordered "
        "pair of distinct generators");
  }
}

std::optional<gen_t> SemigroupSpec::find(std::string_view name) const {
  for (gen_t g = 0; g < size(); ++g) {
    if (names_[g] == name) return g;
  }
  return std::nullopt;
}

std::string SemigroupSpec::show(Element e) const {
  return names_[e.gen] + "^" + std::to_string(e.exp);
}

void SemigroupSpec::check_names() const {
  if (names_.empty()) throw DocumentError("alphabet is empty");
  std::set<std::string_view> distinct;
  for (const std::string& name : names_) {
    if (name.empty()) throw DocumentError("generator name is empty");
    for (unsigned char c : name) {
      if (std::isspace(c)) {
        throw DocumentError("generator name '" + name +
                            "' contains whitespace");
      }
    }
    if (!distinct.insert(name).second) {
      throw DocumentError("duplicate generator name '" + name + "'");
    }
  }
}

}  // namespace monounion
