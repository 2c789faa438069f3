#include "lie/root_system.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lie/linalg.h"

namespace lie {

Weight weight_from(const std::vector<long>& coords) {
  Weight w(static_cast<Eigen::Index>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) w(static_cast<Eigen::Index>(i)) = Rat(coords[i]);
  return w;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w(i).str();
  }
  os << ")";
  return os.str();
}

namespace {

// Bourbaki Cartan matrix of one simple factor; entry (i,j) = <alpha_i, alpha_j^vee>.
IntMat factor_cartan(char series, int n) {
  IntMat a = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto chain = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case 'D':
      if (n == 3) {  // central node 1, leaves 2 and 3
        chain(0, 1);
        chain(0, 2);
      } else {
        for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
        chain(n - 3, n - 1);
      }
      break;
    case 'E':
      // chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      chain(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case 'F':
      chain(0, 1);
      chain(1, 2);
      chain(2, 3);
      a(1, 2) = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      a(0, 1) = -1;
      a(1, 0) = -3;  // alpha_1 short, alpha_2 long
      break;
    default:
      throw std::invalid_argument("bad series");
  }
  return a;
}

IntVec factor_d(char series, int n) {
  IntVec d = IntVec::Ones(n);
  switch (series) {
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d(i) = 2;
      break;
    case 'C':
      d(n - 1) = 2;
      break;
    case 'F':
      d(0) = d(1) = 2;
      break;
    case 'G':
      d(1) = 3;
      break;
    default:
      break;
  }
  return d;
}

struct VecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

// closure from simple roots using root strings
std::vector<IntVec> factor_positive_roots(const IntMat& cartan) {
  int n = static_cast<int>(cartan.rows());
  std::map<IntVec, int, VecLess> known;  // root -> height
  std::vector<std::vector<IntVec>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < n; ++i) {
    IntVec e = IntVec::Zero(n);
    e(i) = 1;
    by_height[0].push_back(e);
    known[e] = 1;
  }
  for (int h = 0; !by_height[h].empty(); ++h) {
    by_height.emplace_back();
    for (const IntVec& beta : by_height[h]) {
      for (int i = 0; i < n; ++i) {
        // q = how far the string continues downward
        int q = 0;
        IntVec down = beta;
        for (;;) {
          down(i) -= 1;
          bool neg = false;
          for (int k = 0; k < n; ++k) neg |= down(k) < 0;
          if (neg || !known.count(down)) break;
          ++q;
        }
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta(j) * cartan(j, i);
        if (q - pairing >= 1) {
          IntVec up = beta;
          up(i) += 1;
          if (!known.count(up)) {
            known[up] = h + 2;
            by_height[h + 1].push_back(up);
          }
        }
      }
    }
  }
  std::vector<IntVec> out;
  for (const auto& level : by_height)
    for (const auto& r : level) out.push_back(r);
  return out;
}

}  // namespace

RootSystem build_root_system(const CartanType& t) {
  validate(t);
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank();
  rs.wdim = t.weight_dim();
  rs.cartan = IntMat::Zero(rs.rank, rs.rank);
  rs.d = IntVec::Ones(rs.rank);
  rs.factor_of_node.assign(rs.rank, -1);

  int off = 0;
  for (size_t f = 0; f < t.factors.size(); ++f) {
    const auto& fac = t.factors[f];
    int n = fac.rank;
    IntMat a = factor_cartan(fac.series, n);
    rs.cartan.block(off, off, n, n) = a;
    rs.d.segment(off, n) = factor_d(fac.series, n);
    for (int i = 0; i < n; ++i) rs.factor_of_node[off + i] = static_cast<int>(f);
    for (const IntVec& r : factor_positive_roots(a)) {
      IntVec g = IntVec::Zero(rs.rank);
      g.segment(off, n) = r;
      rs.positive_roots.push_back(g);
      rs.root_factor.push_back(static_cast<int>(f));
    }
    off += n;
  }
  // stable sort roots by (factor, height, lex)
  std::vector<size_t> idx(rs.positive_roots.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto height = [&](const IntVec& v) { return v.sum(); };
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (rs.root_factor[a] != rs.root_factor[b]) return rs.root_factor[a] < rs.root_factor[b];
    long ha = height(rs.positive_roots[a]), hb = height(rs.positive_roots[b]);
    if (ha != hb) return ha < hb;
    return VecLess{}(rs.positive_roots[a], rs.positive_roots[b]);
  });
  std::vector<IntVec> roots;
  std::vector<int> rf;
  for (size_t i : idx) {
    roots.push_back(rs.positive_roots[i]);
    rf.push_back(rs.root_factor[i]);
  }
  rs.positive_roots = std::move(roots);
  rs.root_factor = std::move(rf);

  if (rs.rank > 0) {
    RatMat ct = to_rat(IntMat(rs.cartan.transpose()));
    RatMat aug(rs.rank, 2 * rs.rank);
    aug.leftCols(rs.rank) = ct;
    aug.rightCols(rs.rank) = RatMat::Zero(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i) aug(i, rs.rank + i) = Rat(1);
    std::vector<Eigen::Index> piv = row_echelon(aug);
    if (static_cast<int>(piv.size()) != rs.rank) throw std::logic_error("singular Cartan matrix");
    // back substitution for the inverse
    for (int k = rs.rank - 1; k >= 0; --k) {
      Rat inv_p = Rat(1) / aug(k, k);
      for (int c = k; c < 2 * rs.rank; ++c) aug(k, c) *= inv_p;
      for (int r = 0; r < k; ++r) {
        Rat f = aug(r, k);
        if (f.is_zero()) continue;
        for (int c = k; c < 2 * rs.rank; ++c) aug(r, c) -= f * aug(k, c);
      }
    }
    rs.inv_cartan_t = aug.rightCols(rs.rank);
  } else {
    rs.inv_cartan_t = RatMat(0, 0);
  }

  // -w0 permutation: dominate(-omega_i) = omega_{perm(i)}
  rs.w0_perm.assign(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    RatVec v = RatVec::Zero(rs.wdim).eval();
    for (int j = 0; j < rs.rank; ++j) v(j) = Rat(0);
    v(i) = Rat(-1);
    rs.dominate(v);
    int target = -1;
    for (int j = 0; j < rs.rank; ++j) {
      if (v(j) == Rat(1)) {
        if (target >= 0) throw std::logic_error("w0 image not a fundamental weight");
        target = j;
      } else if (!v(j).is_zero()) {
        throw std::logic_error("w0 image not a fundamental weight");
      }
    }
    rs.w0_perm[i] = target;
  }
  return rs;
}

RatVec RootSystem::fw_of_sr(const RatVec& sr) const {
  RatVec out = RatVec::Zero(wdim).eval();
  for (int j = 0; j < rank; ++j) {
    Rat acc(0);
    for (int i = 0; i < rank; ++i) acc += sr(i) * Rat(cartan(i, j));
    out(j) = acc;
  }
  return out;
}

IntVec RootSystem::fw_of_root(const IntVec& root) const {
  IntVec out = IntVec::Zero(wdim);
  for (int j = 0; j < rank; ++j) {
    long acc = 0;
    for (int i = 0; i < rank; ++i) acc += root(i) * cartan(i, j);
    out(j) = acc;
  }
  return out;
}

RatVec RootSystem::sr_of_fw(const RatVec& fw) const {
  RatVec head = fw.head(rank);
  return inv_cartan_t * head;
}

Rat RootSystem::form_fw_sr(const RatVec& fw, const RatVec& sr) const {
  Rat acc(0);
  for (int j = 0; j < rank; ++j) acc += fw(j) * Rat(d(j)) * sr(j);
  return acc;
}

Rat RootSystem::form_sr_sr(const RatVec& a, const RatVec& b) const {
  Rat acc(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (cartan(i, j) == 0) continue;
      acc += a(i) * b(j) * Rat(cartan(i, j) * d(j));
    }
  return acc;
}

Rat RootSystem::form_fw_fw(const RatVec& a, const RatVec& b) const {
  return form_fw_sr(a, sr_of_fw(b));
}

Weight RootSystem::rho() const {
  Weight r = RatVec::Zero(wdim).eval();
  for (int i = 0; i < rank; ++i) r(i) = Rat(1);
  return r;
}

IntVec RootSystem::highest_root(int factor) const {
  IntVec best;
  long h = -1;
  for (size_t k = 0; k < positive_roots.size(); ++k) {
    if (root_factor[k] != factor) continue;
    if (positive_roots[k].sum() > h) {
      h = positive_roots[k].sum();
      best = positive_roots[k];
    }
  }
  if (h < 0) throw std::out_of_range("no such factor");
  return best;
}

void RootSystem::reflect(int i, RatVec& fw) const {
  Rat c = fw(i);
  if (c.is_zero()) return;
  for (int j = 0; j < rank; ++j) fw(j) -= c * Rat(cartan(i, j));
}

int RootSystem::dominate(RatVec& fw) const {
  int count = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank; ++i) {
      if (fw(i).sign() < 0) { neg = i; break; }
    }
    if (neg < 0) return count;
    reflect(neg, fw);
    ++count;
  }
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.wdim) throw std::invalid_argument("weight length mismatch");
  for (int i = 0; i < rs.rank; ++i) {
    if (!w(i).is_integer() || w(i).sign() < 0) return false;
  }
  for (int i = rs.rank; i < rs.wdim; ++i) {
    if (!w(i).is_integer()) return false;
  }
  return true;
}

bool is_dominant_rational(const RootSystem& rs, const RatVec& w) {
  for (int i = 0; i < rs.rank; ++i)
    if (w(i).sign() < 0) return false;
  return true;
}

Weight dual_weight(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.wdim) throw std::invalid_argument("weight length mismatch");
  Weight out = w;
  for (int i = 0; i < rs.rank; ++i) out(rs.w0_perm[i]) = w(i);
  for (int i = rs.rank; i < rs.wdim; ++i) out(i) = -w(i);
  return out;
}

std::set<int> dual_theta(const RootSystem& rs, const std::set<int>& theta) {
  std::set<int> out;
  for (int i : theta) {
    if (i < 0 || i >= rs.rank) throw std::out_of_range("theta index out of range");
    out.insert(rs.w0_perm[i]);
  }
  return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& w) {
  if (!is_dominant(rs, w)) throw std::invalid_argument("weyl_dimension requires a dominant integral weight");
  Rat num(1), den(1);
  for (const IntVec& beta : rs.positive_roots) {
    Rat a(0), b(0);
    for (int j = 0; j < rs.rank; ++j) {
      if (beta(j) == 0) continue;
      a += (w(j) + Rat(1)) * Rat(rs.d(j) * beta(j));
      b += Rat(rs.d(j) * beta(j));
    }
    num *= a;
    den *= b;
  }
  Rat q = num / den;
  if (!q.is_integer()) throw std::logic_error("Weyl dimension not integral");
  return q.num();
}

bool is_root(const RootSystem& rs, const IntVec& beta) {
  for (const IntVec& r : rs.positive_roots) {
    if (r == beta || r == IntVec(-beta)) return true;
  }
  return false;
}

Rat pairing(const RootSystem& rs, const Weight& w, const IntVec& beta) {
  if (!is_root(rs, beta)) throw std::invalid_argument("beta is not a root");
  RatVec b = to_rat(beta);
  Rat nn = rs.form_sr_sr(b, b);
  RatVec fw = w.head(rs.rank);
  return rs.form_fw_sr(fw, b) / nn;
}

Weight a3_weight_as_d3(const Weight& w) {
  Weight out = w;
  out(0) = w(1);
  out(1) = w(0);
  return out;
}

Weight d3_weight_as_a3(const Weight& w) { return a3_weight_as_d3(w); }

}  // namespace lie
