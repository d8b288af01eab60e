#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tsg/exec.hpp"
#include "tsg/perm_group.hpp"

namespace tsg {

/// D_m x D_m for odd m >= 3. Points 0..m-1 carry the left factor, m..2m-1
/// the right; rotation is i -> i+1 and reflection i -> -i on each m-gon.
struct DihedralProduct {
  int m = 0;
  PermGroup group;
  Permutation left_rotation, left_reflection, right_rotation, right_reflection;
};

/// Throws DomainError "bad_parameter" (m even or < 3) or "guard_exceeded".
DihedralProduct build_dihedral_product(int m, std::size_t guard = kSubgroupGuard);

/// An element of D_m as the affine map x -> shift + x or x -> shift - x.
struct DihedralElement {
  int shift = 0;
  bool reflection = false;

  friend bool operator==(const DihedralElement &, const DihedralElement &) = default;
};

/// Splits p into its two block components. Throws DomainError
/// "not_in_group".
std::pair<DihedralElement, DihedralElement> decompose(const DihedralProduct &dp,
                                                      const Permutation &p);

/// (rho(left), rho(right)), where rho is 1 on reflections and 0 on rotations.
std::pair<int, int> sigma(const DihedralProduct &dp, const Permutation &p);

enum class Family {
  trivial,
  z2,
  zr,
  z2r,
  d2,
  dr,
  d2r,
  zr_x_zs,
  dr_x_zs,
  dr_x_ds,
  semidirect_zr_zs_z2,
};

inline constexpr Family kAllFamilies[] = {
    Family::trivial, Family::z2,      Family::zr,      Family::z2r,
    Family::d2,      Family::dr,      Family::d2r,     Family::zr_x_zs,
    Family::dr_x_zs, Family::dr_x_ds, Family::semidirect_zr_zs_z2};

/// "TRIVIAL", "Z2", "Zr", ..., "SemidirectZrZsZ2".
std::string family_tag(Family f);
/// Inverse of family_tag; throws DomainError "bad_parameter".
Family family_from_tag(const std::string &tag);
int family_parameter_count(Family f);

struct GroupClassification {
  Family family = Family::trivial;
  int r = 0; ///< 0 when the family has no parameter
  int s = 0;
  std::size_t order = 1;
  /// Factors were swapped so that a one-sided reflection sits on the left.
  bool swapped_factors = false;
  /// Which branch of the sigma/kernel case analysis produced the result:
  /// "trivial_kernel", "kernel_only", "case1", "case2a" or "case2b".
  std::string proof_case;
  int kernel_rank = 0;
  std::size_t kernel_order = 1;
  std::vector<std::pair<int, int>> sigma_image;

  std::size_t family_order() const;
};

/// Order the family's abstract group has for the given parameters.
std::size_t family_order(Family f, int r, int s);

/// Explicit permutation group of the family: Z_k as a k-cycle, D_k on k
/// points, products on disjoint blocks, the semidirect family as
/// <(a,e),(e,b),(inv,inv)> inside D_r x D_s.
PermGroup reference_group(Family f, int r, int s);

/// Throws DomainError "not_subgroup".
GroupClassification classify_subgroup(const DihedralProduct &dp, const PermGroup &g);

struct ClassificationMismatch {
  std::size_t index;
  PermGroup subgroup;
  GroupClassification classification;
};

struct ClassificationReport {
  int m = 0;
  std::size_t subgroup_count = 0;
  std::vector<ClassificationMismatch> mismatches;
  std::map<std::string, int> census;
};

/// Classifies every subgroup of dp.group and checks each against its
/// reference group with the isomorphism oracle.
ClassificationReport verify_classification(const DihedralProduct &dp, Exec exec = Exec::parallel);

} // namespace tsg
