#pragma once

#include <set>
#include <string>
#include <vector>

#include "lie/root_system.h"

namespace lie {

// Standard parabolic p^Theta: Levi spanned by Theta, nilradical the rest.
struct ParabolicTheta {
  const RootSystem* rs = nullptr;
  std::set<int> theta;
  std::vector<int> levi_positive;       // indices into rs->positive_roots
  std::vector<int> nilradical;          // complementary indices

  long flag_dimension() const { return static_cast<long>(nilradical.size()); }
};

ParabolicTheta make_parabolic(const RootSystem& rs, const std::set<int>& theta);

// Highest-weight membership in Irr(g; p^Theta)_f: <lambda, alpha> = 0 on Theta.
bool irr_pq_member(const ParabolicTheta& p, const Weight& lambda);

// Dimension of the unique irreducible q-submodule: Weyl dimension over the Levi.
BigInt d_q(const ParabolicTheta& p, const Weight& lambda);

// True iff no two nilradical roots sum to a root.
bool abelian_nilradical(const ParabolicTheta& p);

std::set<int> parse_theta(const std::string& csv, int rank);  // "1,3" in Bourbaki indices
std::string theta_str(const std::set<int>& theta);

}  // namespace lie
