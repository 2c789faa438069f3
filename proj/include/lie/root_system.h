#pragma once

#include <set>
#include <string>
#include <vector>

#include "lie/cartan.h"
#include "lie/numeric.h"

namespace lie {

// Weights are rational vectors in the fundamental-weight basis, one coordinate
// per simple root plus one per central-torus direction.
using Weight = RatVec;

Weight weight_from(const std::vector<long>& coords);
std::string weight_str(const Weight& w);

struct RootSystem {
  CartanType type;
  int rank = 0;       // semisimple rank
  int wdim = 0;       // rank + torus_rank

  // cartan(i, j) = <alpha_i, alpha_j^vee>
  IntMat cartan;
  RatMat inv_cartan_t;          // (cartan^T)^{-1}, converts fw coords to simple-root coords
  IntVec d;                     // d_i = <alpha_i, alpha_i>/2, short roots normalized to 2
  std::vector<IntVec> positive_roots;  // simple-root coordinates, sorted by (factor, height, lex)
  std::vector<int> root_factor;        // factor index of each positive root
  std::vector<int> factor_of_node;     // factor index of each simple root
  std::vector<int> w0_perm;            // permutation induced by -w0 on simple roots

  long num_positive() const { return static_cast<long>(positive_roots.size()); }

  // fundamental-weight coordinates of a simple-root-coordinate vector
  RatVec fw_of_sr(const RatVec& sr) const;
  RatVec sr_of_fw(const RatVec& fw) const;   // semisimple part only (torus coords dropped)
  IntVec fw_of_root(const IntVec& root) const;

  // invariant form, short roots of squared length 2 in every factor
  Rat form_fw_fw(const RatVec& a, const RatVec& b) const;  // both in fw coords (semisimple part)
  Rat form_fw_sr(const RatVec& fw, const RatVec& sr) const;
  Rat form_sr_sr(const RatVec& a, const RatVec& b) const;

  Weight rho() const;  // all fw coords 1, torus coords 0
  IntVec highest_root(int factor) const;

  // simple reflection on fw coordinates (torus coords untouched)
  void reflect(int i, RatVec& fw) const;
  // conjugates fw coords into the dominant chamber; returns number of reflections used mod 2... (sign)
  int dominate(RatVec& fw) const;
};

RootSystem build_root_system(const CartanType& t);

bool is_dominant(const RootSystem& rs, const Weight& w);         // dominant integral
bool is_dominant_rational(const RootSystem& rs, const RatVec& w);  // chamber only
Weight dual_weight(const RootSystem& rs, const Weight& w);
std::set<int> dual_theta(const RootSystem& rs, const std::set<int>& theta);
BigInt weyl_dimension(const RootSystem& rs, const Weight& w);
Rat pairing(const RootSystem& rs, const Weight& w, const IntVec& beta);
bool is_root(const RootSystem& rs, const IntVec& beta);

// A3 <-> D3 relabeling (the one exceptional isomorphism the engine exposes);
// acts on fundamental-weight coordinates.
Weight a3_weight_as_d3(const Weight& w);
Weight d3_weight_as_a3(const Weight& w);

}  // namespace lie
