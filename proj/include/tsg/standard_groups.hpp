#pragma once

#include "tsg/perm_group.hpp"

namespace tsg {

/// Z_k acting regularly on k points (k = 1 gives the trivial group on 1 point).
PermGroup cyclic_group(int k);

/// D_k of order 2k: natural action on a k-gon for k >= 3, the Klein four
/// group on 4 points for k = 2, Z_2 for k = 1.
PermGroup dihedral_group(int k);

PermGroup symmetric_group(int k);
PermGroup alternating_group(int k);

/// g x h acting on disjoint point blocks [0, g.degree()) and
/// [g.degree(), g.degree() + h.degree()).
PermGroup direct_product(const PermGroup &g, const PermGroup &h);

/// Places p on the points [offset, offset + p.degree()) of a degree-n
/// permutation, fixing everything else.
Permutation embed(const Permutation &p, int offset, int n);

} // namespace tsg
