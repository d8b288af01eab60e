#include "tsg/dihedral_products.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tsg/error.hpp"
#include "tsg/standard_groups.hpp"

namespace tsg {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

Permutation block_map(int m, int offset, int shift, bool reflection) {
  std::vector<int> img(static_cast<std::size_t>(2 * m));
  std::iota(img.begin(), img.end(), 0);
  for (int x = 0; x < m; ++x)
    img[static_cast<std::size_t>(offset + x)] = offset + mod(reflection ? shift - x : shift + x, m);
  return Permutation(std::move(img));
}

std::optional<DihedralElement> read_block(const Permutation &p, int m, int offset) {
  const int a = p(offset) - offset;
  if (a < 0 || a >= m)
    return std::nullopt;
  const int d = mod(p(offset + 1) - offset - a, m);
  DihedralElement el{a, d == m - 1};
  if (d != 1 && d != m - 1)
    return std::nullopt;
  for (int x = 0; x < m; ++x)
    if (p(offset + x) != offset + mod(el.reflection ? a - x : a + x, m))
      return std::nullopt;
  return el;
}

// Rotation pair (a, b) in Z_m x Z_m.
using Rot = std::pair<int, int>;

int rot_order(const Rot &x, int m) {
  int oa = m / std::gcd(x.first, m), ob = m / std::gcd(x.second, m);
  return std::lcm(oa, ob);
}

std::size_t span_size(const Rot &g1, const Rot &g2, int m) {
  std::set<Rot> s;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      s.emplace(mod(i * g1.first + j * g2.first, m), mod(i * g1.second + j * g2.second, m));
  return s.size();
}

} // namespace

DihedralProduct build_dihedral_product(int m, std::size_t guard) {
  if (m < 3 || m % 2 == 0)
    throw DomainError("bad_parameter", "m must be odd and at least 3");
  if (static_cast<std::size_t>(4 * m * m) > guard)
    throw DomainError("guard_exceeded", "D_m x D_m exceeds the order guard");
  DihedralProduct dp;
  dp.m = m;
  dp.left_rotation = block_map(m, 0, 1, false);
  dp.left_reflection = block_map(m, 0, 0, true);
  dp.right_rotation = block_map(m, m, 1, false);
  dp.right_reflection = block_map(m, m, 0, true);
  dp.group = PermGroup::generate(2 * m, {dp.left_rotation, dp.left_reflection, dp.right_rotation,
                                         dp.right_reflection});
  if (dp.group.order() != static_cast<std::size_t>(4 * m * m))
    throw VerificationFailure("bad_order", "D_m x D_m has the wrong order");
  return dp;
}

std::pair<DihedralElement, DihedralElement> decompose(const DihedralProduct &dp,
                                                      const Permutation &p) {
  if (p.degree() != 2 * dp.m)
    throw DomainError("not_in_group", "permutation has the wrong degree", p.to_cycle_string());
  auto l = read_block(p, dp.m, 0);
  auto r = read_block(p, dp.m, dp.m);
  if (!l || !r)
    throw DomainError("not_in_group", "permutation is not in D_m x D_m", p.to_cycle_string());
  return {*l, *r};
}

std::pair<int, int> sigma(const DihedralProduct &dp, const Permutation &p) {
  auto [l, r] = decompose(dp, p);
  return {l.reflection ? 1 : 0, r.reflection ? 1 : 0};
}

std::string family_tag(Family f) {
  switch (f) {
  case Family::trivial: return "TRIVIAL";
  case Family::z2: return "Z2";
  case Family::zr: return "Zr";
  case Family::z2r: return "Z2r";
  case Family::d2: return "D2";
  case Family::dr: return "Dr";
  case Family::d2r: return "D2r";
  case Family::zr_x_zs: return "ZrxZs";
  case Family::dr_x_zs: return "DrxZs";
  case Family::dr_x_ds: return "DrxDs";
  case Family::semidirect_zr_zs_z2: return "SemidirectZrZsZ2";
  }
  return "?";
}

Family family_from_tag(const std::string &tag) {
  for (Family f : kAllFamilies)
    if (family_tag(f) == tag)
      return f;
  throw DomainError("bad_parameter", "unknown family tag", tag);
}

int family_parameter_count(Family f) {
  switch (f) {
  case Family::trivial:
  case Family::z2:
  case Family::d2:
    return 0;
  case Family::zr:
  case Family::z2r:
  case Family::dr:
  case Family::d2r:
    return 1;
  default:
    return 2;
  }
}

std::size_t family_order(Family f, int r, int s) {
  const auto R = static_cast<std::size_t>(r), S = static_cast<std::size_t>(s);
  switch (f) {
  case Family::trivial: return 1;
  case Family::z2: return 2;
  case Family::zr: return R;
  case Family::z2r: return 2 * R;
  case Family::d2: return 4;
  case Family::dr: return 2 * R;
  case Family::d2r: return 4 * R;
  case Family::zr_x_zs: return R * S;
  case Family::dr_x_zs: return 2 * R * S;
  case Family::dr_x_ds: return 4 * R * S;
  case Family::semidirect_zr_zs_z2: return 2 * R * S;
  }
  return 0;
}

std::size_t GroupClassification::family_order() const { return tsg::family_order(family, r, s); }

PermGroup reference_group(Family f, int r, int s) {
  switch (f) {
  case Family::trivial: return PermGroup::trivial(1);
  case Family::z2: return cyclic_group(2);
  case Family::zr: return cyclic_group(r);
  case Family::z2r: return cyclic_group(2 * r);
  case Family::d2: return dihedral_group(2);
  case Family::dr: return dihedral_group(r);
  case Family::d2r: return dihedral_group(2 * r);
  case Family::zr_x_zs: return direct_product(cyclic_group(r), cyclic_group(s));
  case Family::dr_x_zs: return direct_product(dihedral_group(r), cyclic_group(s));
  case Family::dr_x_ds: return direct_product(dihedral_group(r), dihedral_group(s));
  case Family::semidirect_zr_zs_z2: {
    const int n = r + s;
    std::vector<int> rot_r(static_cast<std::size_t>(r)), rot_s(static_cast<std::size_t>(s));
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) {
      rot_r[static_cast<std::size_t>(i)] = (i + 1) % r;
      inv[static_cast<std::size_t>(i)] = (r - i) % r;
    }
    for (int i = 0; i < s; ++i) {
      rot_s[static_cast<std::size_t>(i)] = (i + 1) % s;
      inv[static_cast<std::size_t>(r + i)] = r + (s - i) % s;
    }
    return PermGroup::generate(n, {embed(Permutation(rot_r), 0, n), embed(Permutation(rot_s), r, n),
                                   Permutation(inv)});
  }
  }
  throw DomainError("bad_parameter", "unknown family");
}

GroupClassification classify_subgroup(const DihedralProduct &dp, const PermGroup &g) {
  if (g.degree() != dp.group.degree() || !g.is_subgroup_of(dp.group))
    throw DomainError("not_subgroup", "group is not a subgroup of D_m x D_m");
  const int m = dp.m;

  std::set<std::pair<int, int>> image;
  std::vector<Rot> kernel;
  for (const auto &p : g.elements()) {
    auto [l, r] = decompose(dp, p);
    image.emplace(l.reflection, r.reflection);
    if (!l.reflection && !r.reflection)
      kernel.emplace_back(l.shift, r.shift);
  }

  GroupClassification c;
  c.order = g.order();
  c.sigma_image.assign(image.begin(), image.end());
  c.kernel_order = kernel.size();

  // Canonical form: a one-sided sigma image is moved to the left factor.
  const bool has10 = image.contains({1, 0}), has01 = image.contains({0, 1});
  const bool has11 = image.contains({1, 1});
  if (has01 && !has10) {
    c.swapped_factors = true;
    for (auto &x : kernel)
      std::swap(x.first, x.second);
  }

  // Kernel rank and invariant factors inside Z_m x Z_m.
  int exponent = 1;
  Rot top{0, 0};
  for (const auto &x : kernel)
    if (int o = rot_order(x, m); o > exponent) {
      exponent = o;
      top = x;
    }
  if (kernel.size() == 1) {
    c.kernel_rank = 0;
  } else if (static_cast<std::size_t>(exponent) == kernel.size()) {
    c.kernel_rank = 1;
  } else {
    const bool found = std::any_of(kernel.begin(), kernel.end(), [&](const Rot &y) {
      return span_size(top, y, m) == kernel.size();
    });
    if (!found)
      throw VerificationFailure("rank_search_failed", "no two-element generating set of the kernel");
    c.kernel_rank = 2;
  }
  const int k_order = static_cast<int>(kernel.size());
  const int d1 = k_order / exponent, d2 = exponent;

  // Projections of the kernel onto each factor.
  std::set<int> left, right;
  for (const auto &[a, b] : kernel) {
    left.insert(a);
    right.insert(b);
  }
  const int hl = static_cast<int>(left.size()), hr = static_cast<int>(right.size());

  auto set = [&](Family f, int r = 0, int s = 0) {
    c.family = f;
    c.r = r;
    c.s = s;
  };

  if (image.size() == 1) {
    c.proof_case = "kernel_only";
    if (c.kernel_rank == 0)
      set(Family::trivial);
    else if (c.kernel_rank == 1)
      set(Family::zr, k_order);
    else
      set(Family::zr_x_zs, d1, d2);
  } else if (c.kernel_rank == 0) {
    c.proof_case = "trivial_kernel";
    set(image.size() == 2 ? Family::z2 : Family::d2);
  } else if (image.size() == 2 && has11) {
    c.proof_case = "case1";
    if (c.kernel_rank == 1)
      set(Family::dr, k_order);
    else
      set(Family::semidirect_zr_zs_z2, d1, d2);
  } else {
    // A one-sided reflection (x, e) lies in g, so the kernel splits as
    // H_L x H_R and g is H_L x H_R extended by one or two reflections.
    c.proof_case = c.kernel_rank == 1 ? "case2a" : "case2b";
    if (static_cast<std::size_t>(hl * hr) != kernel.size())
      throw VerificationFailure("kernel_not_split", "kernel is not the product of its projections");
    const bool full = image.size() == 4;
    if (!full) {
      if (hl == 1)
        set(Family::z2r, hr);
      else if (hr == 1)
        set(Family::dr, hl);
      else
        set(Family::dr_x_zs, hl, hr);
    } else {
      if (hl == 1)
        set(Family::d2r, hr);
      else if (hr == 1)
        set(Family::d2r, hl);
      else
        set(Family::dr_x_ds, hl, hr);
    }
  }

  if (c.family_order() != c.order)
    throw VerificationFailure("order_mismatch", "classified family has the wrong order",
                              family_tag(c.family));
  return c;
}

ClassificationReport verify_classification(const DihedralProduct &dp, Exec exec) {
  auto subs = enumerate_subgroups(dp.group, exec);
  struct Outcome {
    GroupClassification c;
    bool ok = false;
  };
  auto outcomes = kernels::map_indices(
      subs.size(),
      [&](std::size_t i) {
        Outcome o;
        o.c = classify_subgroup(dp, subs[i]);
        o.ok = isomorphic(reference_group(o.c.family, o.c.r, o.c.s), subs[i]);
        return o;
      },
      exec);

  ClassificationReport report;
  report.m = dp.m;
  report.subgroup_count = subs.size();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    ++report.census[family_tag(outcomes[i].c.family)];
    if (!outcomes[i].ok)
      report.mismatches.push_back({i, subs[i], outcomes[i].c});
  }
  return report;
}

} // namespace tsg
