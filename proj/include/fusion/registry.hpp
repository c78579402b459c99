#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusion/group.hpp"

namespace fusion {

/// Permutation realization of a named group. Accepted names:
///
///   S<n>, A<n>           symmetric / alternating, natural action
///   C<n>, C<p>^<k>       cyclic, elementary abelian
///   D<2n>                dihedral of order 2n (D8 = <(1234),(13)>)
///   Q<2^k>, SD<2^k>      generalized quaternion (k>=3), semidihedral (k>=4)
///   C<m>:C<k>            C_m extended by C_k acting through the unit of
///                        largest order r with r^k = 1, smallest such r
///   C<p>wrC<p>           wreath product on p^2 points
///   GL(n,p), SL(n,p)     on the nonzero vectors of F_p^n
///   PSL(2,q), PGL(2,q)   on the projective line, q prime
///   Qd(p)                F_p^2 : SL(2,p) on p^2 points
///   C2^3:C7, C3^2:C4, C3^2:Q8   affine groups
///   <A>x<B>              direct product on disjoint points
///
/// Aliases: PSL(2,7) and L3(2) for GL(3,2); V4 for C2^2.
/// Throws UnknownName for anything else.
GroupPtr named_group(std::string_view name);

/// Names listed by the CLI `registry` subcommand and used for realization
/// search by the classifier.
const std::vector<std::string>& registry_names();

/// Direct product on disjoint point sets.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string label = {});

}  // namespace fusion
