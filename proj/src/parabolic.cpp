#include "lie/parabolic.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lie {

ParabolicTheta make_parabolic(const RootSystem& rs, const std::set<int>& theta) {
  ParabolicTheta p;
  p.rs = &rs;
  p.theta = theta;
  for (int i : theta) {
    if (i < 0 || i >= rs.rank) throw std::out_of_range("theta index out of range");
  }
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const IntVec& beta = rs.positive_roots[k];
    bool in_levi = true;
    for (int j = 0; j < rs.rank; ++j) {
      if (beta(j) != 0 && !theta.count(j)) { in_levi = false; break; }
    }
    if (in_levi)
      p.levi_positive.push_back(static_cast<int>(k));
    else
      p.nilradical.push_back(static_cast<int>(k));
  }
  return p;
}

bool irr_pq_member(const ParabolicTheta& p, const Weight& lambda) {
  if (!is_dominant(*p.rs, lambda)) throw std::invalid_argument("irr_pq_member requires a dominant integral weight");
  for (int i : p.theta) {
    if (!lambda(i).is_zero()) return false;
  }
  return true;
}

BigInt d_q(const ParabolicTheta& p, const Weight& lambda) {
  const RootSystem& rs = *p.rs;
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("d_q requires a dominant integral weight");
  // Weyl dimension over the Levi subsystem; full rho works since <rho, alpha_i^vee> = 1
  // for every simple root of the Levi.
  Rat num(1), den(1);
  for (int k : p.levi_positive) {
    const IntVec& beta = rs.positive_roots[k];
    Rat a(0), b(0);
    for (int j = 0; j < rs.rank; ++j) {
      if (beta(j) == 0) continue;
      a += (lambda(j) + Rat(1)) * Rat(rs.d(j) * beta(j));
      b += Rat(rs.d(j) * beta(j));
    }
    num *= a;
    den *= b;
  }
  Rat q = num / den;
  if (!q.is_integer()) throw std::logic_error("d_q not integral");
  return q.num();
}

bool abelian_nilradical(const ParabolicTheta& p) {
  const RootSystem& rs = *p.rs;
  for (size_t a = 0; a < p.nilradical.size(); ++a) {
    for (size_t b = a; b < p.nilradical.size(); ++b) {
      IntVec s = rs.positive_roots[p.nilradical[a]] + rs.positive_roots[p.nilradical[b]];
      if (is_root(rs, s)) return false;
    }
  }
  return true;
}

std::set<int> parse_theta(const std::string& csv, int rank) {
  std::set<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1 || v > rank) throw std::out_of_range("theta index " + tok + " out of range");
    out.insert(v - 1);  // Bourbaki 1-based on the wire, 0-based internally
  }
  return out;
}

std::string theta_str(const std::set<int>& theta) {
  std::ostringstream os;
  bool first = true;
  for (int i : theta) {
    if (!first) os << ",";
    os << (i + 1);
    first = false;
  }
  return os.str();
}

}  // namespace lie
