#include "tsg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tsg/error.hpp"

namespace tsg {

int CycleType::degree() const {
  int n = fixed_points;
  for (auto [len, count] : counts)
    n += len * count;
  return n;
}

long long CycleType::order() const {
  long long m = 1;
  for (auto [len, count] : counts)
    m = std::lcm(m, static_cast<long long>(len));
  return m;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw DomainError("not_a_bijection", "image array is not a bijection on 1.." +
                                               std::to_string(degree()));
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::vector<int> Permutation::one_based_images() const {
  std::vector<int> out(images_);
  for (int &x : out)
    ++x;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

long long Permutation::order() const { return cycle_type(*this).order(); }

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start)
      continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw DomainError("degree_mismatch", "cannot compose permutations of degree " +
                                             std::to_string(a.degree()) + " and " +
                                             std::to_string(b.degree()));
  Permutation c;
  c.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i)
    c.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return c;
}

Permutation parse_cycles(std::string_view text, int n) {
  if (n < 0)
    throw DomainError("bad_degree", "degree must be non-negative");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto malformed = [&](const std::string &why) {
    return DomainError("malformed_cycle",
                       "malformed cycle notation \"" + std::string(text) + "\": " + why);
  };

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw malformed("expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size())
        throw malformed("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw malformed(std::string("unexpected character '") + text[i] + "'");
      long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000'000)
          break;
        ++i;
      }
      if (value < 1 || value > n)
        throw DomainError("point_out_of_range", "point " + std::to_string(value) +
                                                    " outside 1.." + std::to_string(n));
      int x = static_cast<int>(value) - 1;
      if (used[static_cast<std::size_t>(x)])
        throw DomainError("repeated_point",
                          "point " + std::to_string(value) + " appears more than once");
      used[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

CycleType cycle_type(const Permutation &p) {
  CycleType ct;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
    }
    if (len == 1)
      ++ct.fixed_points;
    else
      ++ct.counts[len];
  }
  return ct;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace tsg
