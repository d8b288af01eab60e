#include "tsg/standard_groups.hpp"

#include <numeric>

#include "tsg/error.hpp"

namespace tsg {

namespace {

Permutation rotation(int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    img[static_cast<std::size_t>(i)] = (i + 1) % k;
  return Permutation(std::move(img));
}

Permutation reflection(int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    img[static_cast<std::size_t>(i)] = (k - i) % k;
  return Permutation(std::move(img));
}

void require_positive(int k, const char *what) {
  if (k < 1)
    throw DomainError("bad_parameter", std::string(what) + " requires k >= 1");
}

} // namespace

PermGroup cyclic_group(int k) {
  require_positive(k, "cyclic_group");
  return PermGroup::generate(k, {rotation(k)});
}

PermGroup dihedral_group(int k) {
  require_positive(k, "dihedral_group");
  if (k == 1)
    return PermGroup::generate(2, {parse_cycles("(1 2)", 2)});
  if (k == 2)
    return PermGroup::generate(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  return PermGroup::generate(k, {rotation(k), reflection(k)});
}

PermGroup symmetric_group(int k) {
  require_positive(k, "symmetric_group");
  if (k == 1)
    return PermGroup::trivial(1);
  std::vector<Permutation> gens{parse_cycles("(1 2)", k)};
  if (k > 2)
    gens.push_back(rotation(k));
  return PermGroup::generate(k, std::move(gens));
}

PermGroup alternating_group(int k) {
  require_positive(k, "alternating_group");
  std::vector<Permutation> gens;
  for (int i = 2; i < k; ++i) {
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    img[0] = 1;
    img[1] = i;
    img[static_cast<std::size_t>(i)] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup::generate(k, std::move(gens));
}

Permutation embed(const Permutation &p, int offset, int n) {
  if (offset < 0 || offset + p.degree() > n)
    throw DomainError("bad_parameter", "block does not fit");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (int i = 0; i < p.degree(); ++i)
    img[static_cast<std::size_t>(offset + i)] = offset + p(i);
  return Permutation(std::move(img));
}

PermGroup direct_product(const PermGroup &g, const PermGroup &h) {
  const int n = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto &x : g.generators())
    gens.push_back(embed(x, 0, n));
  for (const auto &y : h.generators())
    gens.push_back(embed(y, g.degree(), n));
  return PermGroup::generate(n, std::move(gens));
}

} // namespace tsg
