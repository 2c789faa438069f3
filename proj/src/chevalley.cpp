#include "lie/chevalley.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lie {

namespace {

struct VecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

// Signed root index: positive roots as +1, negatives as -1 against the table.
struct RootIndexer {
  std::map<IntVec, int, VecLess> pos;
  explicit RootIndexer(const RootSystem& rs) {
    for (size_t k = 0; k < rs.positive_roots.size(); ++k)
      pos[rs.positive_roots[k]] = static_cast<int>(k);
  }
  // returns (index, sign) or (-1, 0)
  std::pair<int, int> find(const IntVec& v) const {
    auto it = pos.find(v);
    if (it != pos.end()) return {it->second, +1};
    it = pos.find(IntVec(-v));
    if (it != pos.end()) return {it->second, -1};
    return {-1, 0};
  }
};

// Frenkel-Kac style cocycle table for one simply-laced factor (standalone
// root system). Basis order matches ChevalleyAlgebra conventions.
std::vector<ChevalleyAlgebra::SparseVec> simply_laced_table(const RootSystem& rs) {
  const int rank = rs.rank;
  const int npos = static_cast<int>(rs.positive_roots.size());
  const int dim = rank + 2 * npos;
  std::vector<ChevalleyAlgebra::SparseVec> table(static_cast<size_t>(dim) * dim);
  RootIndexer idx(rs);

  auto eps = [&](const IntVec& x, const IntVec& y) -> long {
    long e = 0;
    for (int i = 0; i < rank; ++i) {
      e += x(i) * y(i);
      for (int j = i + 1; j < rank; ++j)
        if (rs.cartan(i, j) != 0) e += x(i) * y(j);
    }
    return (e % 2 == 0) ? 1 : -1;
  };

  auto e_of = [&](int k, int sign) { return sign > 0 ? rank + 2 * k : rank + 2 * k + 1; };
  auto at = [&](int i, int j) -> ChevalleyAlgebra::SparseVec& { return table[i * dim + j]; };

  // [h_i, e_gamma]
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < npos; ++k) {
      for (int sg : {+1, -1}) {
        long pair = 0;
        for (int j = 0; j < rank; ++j) pair += rs.positive_roots[k](j) * rs.cartan(j, i);
        pair *= sg;
        if (pair != 0) {
          at(i, e_of(k, sg)).push_back({e_of(k, sg), pair});
          at(e_of(k, sg), i).push_back({e_of(k, sg), -pair});
        }
      }
    }
  }
  // [e_gamma, e_delta] in the lattice frame, with the basis convention
  // f_beta = -e_{-beta} (so that [e_beta, f_beta] = +beta^vee).
  for (int k = 0; k < npos; ++k) {
    for (int sg : {+1, -1}) {
      IntVec gamma = sg > 0 ? rs.positive_roots[k] : IntVec(-rs.positive_roots[k]);
      for (int m = 0; m < npos; ++m) {
        for (int sh : {+1, -1}) {
          IntVec delta = sh > 0 ? rs.positive_roots[m] : IntVec(-rs.positive_roots[m]);
          long pre = static_cast<long>(sg < 0 ? -1 : 1) * (sh < 0 ? -1 : 1);
          IntVec sum = gamma + delta;
          if (sum.isZero()) {
            // [e_gamma, e_{-gamma}] = -gamma^vee (ADE: coroot coords = root coords)
            for (int i = 0; i < rank; ++i)
              if (gamma(i) != 0) at(e_of(k, sg), e_of(m, sh)).push_back({i, -pre * gamma(i)});
            continue;
          }
          auto [si, ssign] = idx.find(sum);
          if (si < 0) continue;
          long c = pre * eps(gamma, delta) * (ssign < 0 ? -1 : 1);
          at(e_of(k, sg), e_of(m, sh)).push_back({e_of(si, ssign), c});
        }
      }
    }
  }
  return table;
}

struct FoldSpec {
  CartanType cover;
  std::vector<int> perm;       // 0-based node permutation of the cover
  std::vector<int> node_map;   // cover node -> folded node (0-based)
};

FoldSpec fold_spec(char series, int n) {
  FoldSpec fs;
  switch (series) {
    case 'B': {
      fs.cover.factors = {{'D', n + 1}};
      fs.perm.resize(n + 1);
      fs.node_map.resize(n + 1);
      for (int i = 0; i < n + 1; ++i) { fs.perm[i] = i; fs.node_map[i] = std::min(i, n - 1); }
      std::swap(fs.perm[n - 1], fs.perm[n]);
      if (n == 2) {
        // D3 has its central node first; leaves 2,3 fold onto the short root
        fs.perm = {0, 2, 1};
        fs.node_map = {0, 1, 1};
      }
      break;
    }
    case 'C': {
      fs.cover.factors = {{'A', 2 * n - 1}};
      fs.perm.resize(2 * n - 1);
      fs.node_map.resize(2 * n - 1);
      for (int i = 0; i < 2 * n - 1; ++i) {
        fs.perm[i] = 2 * n - 2 - i;
        fs.node_map[i] = std::min(i, 2 * n - 2 - i);
      }
      break;
    }
    case 'F': {
      fs.cover.factors = {{'E', 6}};
      fs.perm = {5, 1, 4, 3, 2, 0};            // 1<->6, 3<->5
      fs.node_map = {3, 0, 2, 1, 2, 3};        // 2->1, 4->2, {3,5}->3, {1,6}->4
      break;
    }
    case 'G': {
      fs.cover.factors = {{'D', 4}};
      fs.perm = {2, 1, 3, 0};                  // 1 -> 3 -> 4 -> 1
      fs.node_map = {0, 1, 0, 0};
      break;
    }
    default:
      throw std::logic_error("fold_spec: not a folded series");
  }
  return fs;
}

int order_of_perm(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  int ord = 1;
  for (int i = 0; i < n; ++i) {
    int len = 1, j = p[i];
    while (j != i) { j = p[j]; ++len; }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<ChevalleyAlgebra::SparseVec> folded_table(char series, int n, const RootSystem& frs);

// Builds a standalone algebra for one factor.
ChevalleyAlgebra factor_algebra(char series, int n) {
  CartanType t;
  t.factors = {{series, n}};
  ChevalleyAlgebra alg;
  alg.rs = build_root_system(t);
  alg.dim = alg.rs.wdim + 2 * static_cast<int>(alg.rs.positive_roots.size());
  bool simply_laced = (series == 'A' || series == 'D' || series == 'E');
  if (simply_laced)
    alg.set_table(simply_laced_table(alg.rs));
  else
    alg.set_table(folded_table(series, n, alg.rs));
  return alg;
}

std::vector<ChevalleyAlgebra::SparseVec> folded_table(char series, int n, const RootSystem& frs) {
  FoldSpec fs = fold_spec(series, n);
  ChevalleyAlgebra cover = factor_algebra(fs.cover.factors[0].series, fs.cover.factors[0].rank);
  const RootSystem& crs = cover.rs;
  int crank = crs.rank;
  int ord = order_of_perm(fs.perm);

  RatMat tau = diagram_automorphism(cover, fs.perm);
  // tau^ord must be the identity for orbit sums to be well defined
  RatMat acc = tau;
  for (int i = 1; i < ord; ++i) acc = (tau * acc).eval();
  for (int i = 0; i < cover.dim; ++i)
    for (int j = 0; j < cover.dim; ++j)
      if (acc(i, j) != (i == j ? Rat(1) : Rat(0))) throw std::logic_error("folding automorphism order mismatch");

  // folded root of a cover root, in folded simple-root coordinates
  auto fold_root = [&](const IntVec& c) {
    IntVec r = IntVec::Zero(frs.rank);
    for (int i = 0; i < crank; ++i) r(fs.node_map[i]) += c(i);
    return r;
  };
  std::map<IntVec, int, VecLess> folded_index;
  for (size_t k = 0; k < frs.positive_roots.size(); ++k)
    folded_index[frs.positive_roots[k]] = static_cast<int>(k);

  // orbits of cover positive roots
  std::vector<int> orbit_of(crs.positive_roots.size(), -1);
  std::vector<std::vector<int>> orbits;
  RootIndexer cidx(crs);
  for (size_t k = 0; k < crs.positive_roots.size(); ++k) {
    if (orbit_of[k] >= 0) continue;
    std::vector<int> orb;
    IntVec cur = crs.positive_roots[k];
    for (;;) {
      auto [ci, sg] = cidx.find(cur);
      if (sg != +1 || ci < 0) throw std::logic_error("fold orbit left positive roots");
      if (orbit_of[ci] >= 0) break;
      orbit_of[ci] = static_cast<int>(orbits.size());
      orb.push_back(ci);
      IntVec nxt = IntVec::Zero(crank);
      for (int i = 0; i < crank; ++i) nxt(fs.perm[i]) = cur(i);
      cur = nxt;
    }
    orbits.push_back(orb);
  }

  int fdim = frs.wdim + 2 * static_cast<int>(frs.positive_roots.size());
  // folded basis vectors inside the cover algebra
  RatMat basis = RatMat::Zero(fdim, cover.dim).eval();
  for (int i = 0; i < crank; ++i) basis(fs.node_map[i], cover.h_index(i)) += Rat(1);
  for (const auto& orb : orbits) {
    IntVec fr = fold_root(crs.positive_roots[orb[0]]);
    auto it = folded_index.find(fr);
    if (it == folded_index.end()) throw std::logic_error("folded root missing");
    int fk = it->second;
    // sum the tau-orbit of e and f of the orbit representative
    RatVec e = cover.basis_vector(cover.e_index(orb[0]));
    RatVec f = cover.basis_vector(cover.f_index(orb[0]));
    RatVec esum = RatVec::Zero(cover.dim).eval();
    RatVec fsum = RatVec::Zero(cover.dim).eval();
    int len = static_cast<int>(orb.size());
    for (int m = 0; m < len; ++m) {
      esum += e;
      fsum += f;
      if (m + 1 < len) { e = (tau * e).eval(); f = (tau * f).eval(); }
    }
    // fixed roots must carry sign +1 under tau
    if (len == 1) {
      RatVec te = tau * cover.basis_vector(cover.e_index(orb[0]));
      if (te != cover.basis_vector(cover.e_index(orb[0])))
        throw std::logic_error("folding sign obstruction on fixed root");
    }
    basis.row(frs.wdim + 2 * fk) = esum.transpose();
    basis.row(frs.wdim + 2 * fk + 1) = fsum.transpose();
  }

  // ownership of cover basis indices (supports are disjoint)
  std::vector<int> owner(cover.dim, -1);
  for (int r = 0; r < fdim; ++r)
    for (int c = 0; c < cover.dim; ++c)
      if (!basis(r, c).is_zero()) owner[c] = r;

  std::vector<ChevalleyAlgebra::SparseVec> table(static_cast<size_t>(fdim) * fdim);
  for (int a = 0; a < fdim; ++a) {
    RatVec va = basis.row(a).transpose();
    for (int b = 0; b < fdim; ++b) {
      RatVec vb = basis.row(b).transpose();
      RatVec z = cover.bracket(va, vb);
      ChevalleyAlgebra::SparseVec out;
      std::vector<bool> seen(fdim, false);
      for (int c = 0; c < cover.dim; ++c) {
        if (z(c).is_zero()) continue;
        int w = owner[c];
        if (w < 0) throw std::logic_error("folded bracket leaves folded span");
        if (seen[w]) continue;
        seen[w] = true;
        Rat coeff = z(c) / basis(w, c);
        if (!coeff.is_integer()) throw std::logic_error("non-integral folded structure constant");
        out.push_back({w, coeff.to_long()});
      }
      // consistency: z equals sum coeff * basis row
      RatVec recon = RatVec::Zero(cover.dim).eval();
      for (auto& en : out) recon += basis.row(en.first).transpose() * Rat(en.second);
      if (recon != z) throw std::logic_error("folded bracket inconsistent across orbit");
      table[a * fdim + b] = std::move(out);
    }
  }
  return table;
}

}  // namespace

ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  if (rs.rank > 16) throw std::invalid_argument("build_chevalley: rank guard exceeded (16)");
  ChevalleyAlgebra alg;
  alg.rs = rs;
  int npos = static_cast<int>(rs.positive_roots.size());
  alg.dim = rs.wdim + 2 * npos;
  std::vector<ChevalleyAlgebra::SparseVec> table(static_cast<size_t>(alg.dim) * alg.dim);

  // positive-root index offset per factor (roots are sorted by factor)
  std::vector<int> root_off(rs.type.factors.size() + 1, 0);
  for (int k = 0; k < npos; ++k) root_off[rs.root_factor[k] + 1] = k + 1;
  std::vector<int> node_off(rs.type.factors.size() + 1, 0);
  for (size_t f = 0; f < rs.type.factors.size(); ++f)
    node_off[f + 1] = node_off[f] + rs.type.factors[f].rank;

  for (size_t f = 0; f < rs.type.factors.size(); ++f) {
    ChevalleyAlgebra fac = factor_algebra(rs.type.factors[f].series, rs.type.factors[f].rank);
    int fr = fac.rs.rank;
    int fnpos = static_cast<int>(fac.rs.positive_roots.size());
    // local sorted root order must match the global slice
    for (int k = 0; k < fnpos; ++k) {
      IntVec g = rs.positive_roots[root_off[f] + k].segment(node_off[f], fr);
      if (g != fac.rs.positive_roots[k]) throw std::logic_error("factor root order mismatch");
    }
    auto map_idx = [&](int li) {
      if (li < fr) return static_cast<int>(node_off[f]) + li;
      int rem = li - fr;
      int k = rem / 2;
      int global = rs.wdim + 2 * (root_off[f] + k) + rem % 2;
      return global;
    };
    for (int i = 0; i < fac.dim; ++i)
      for (int j = 0; j < fac.dim; ++j) {
        const auto& sv = fac.bracket_basis(i, j);
        if (sv.empty()) continue;
        auto& out = table[map_idx(i) * alg.dim + map_idx(j)];
        for (const auto& en : sv) out.push_back({map_idx(en.first), en.second});
      }
  }
  alg.set_table(std::move(table));
  return alg;
}

IntVec ChevalleyAlgebra::coroot(int k) const {
  const IntVec& beta = rs.positive_roots[k];
  RatVec b = to_rat(beta);
  Rat len = rs.form_sr_sr(b, b);
  IntVec out = IntVec::Zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rat c = Rat(beta(i) * rs.d(i)) * Rat(2) / len;
    if (!c.is_integer()) throw std::logic_error("coroot not integral");
    out(i) = c.to_long();
  }
  return out;
}

std::vector<ChevalleyAlgebra::SparseVec> ChevalleyAlgebra::ad_columns(int b) const {
  std::vector<SparseVec> cols(dim);
  for (int j = 0; j < dim; ++j) {
    for (const Entry& en : bracket_basis(b, j)) cols[j].push_back(en);
  }
  return cols;
}

RatMat word_operator(const ChevalleyAlgebra& alg, const GroupElementWord& w) {
  RatMat rows = RatMat::Zero(alg.dim, alg.dim).eval();
  for (int i = 0; i < alg.dim; ++i) rows(i, i) = Rat(1);
  rows = apply_word(alg, w, rows);
  return rows.transpose();
}

RatMat extend_generator_map(const ChevalleyAlgebra& alg, const RatMat& h_images,
                            const RatMat& z_images, const RatMat& e_images,
                            const RatMat& f_images) {
  const RootSystem& rs = alg.rs;
  int npos = static_cast<int>(rs.positive_roots.size());
  RatMat m = RatMat::Zero(alg.dim, alg.dim).eval();
  for (int i = 0; i < rs.rank; ++i) m.col(alg.h_index(i)) = h_images.col(i);
  for (int j = 0; j < rs.type.torus_rank; ++j) m.col(alg.z_index(j)) = z_images.col(j);

  // simple root positions
  std::map<IntVec, int, VecLess> pos;
  for (int k = 0; k < npos; ++k) pos[rs.positive_roots[k]] = k;
  std::vector<int> order(npos);
  for (int k = 0; k < npos; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rs.positive_roots[a].sum() < rs.positive_roots[b].sum();
  });

  for (int k : order) {
    const IntVec& beta = rs.positive_roots[k];
    if (beta.sum() == 1) {
      int node = -1;
      for (int i = 0; i < rs.rank; ++i)
        if (beta(i) == 1) node = i;
      m.col(alg.e_index(k)) = e_images.col(node);
      m.col(alg.f_index(k)) = f_images.col(node);
      continue;
    }
    int si = -1, dk = -1;
    for (int i = 0; i < rs.rank && si < 0; ++i) {
      if (beta(i) == 0) continue;
      IntVec delta = beta;
      delta(i) -= 1;
      auto it = pos.find(delta);
      if (it != pos.end()) {
        // the bracket [e_i, e_delta] must actually hit e_beta
        int simple_k = pos.at([&] { IntVec e = IntVec::Zero(rs.rank); e(i) = 1; return e; }());
        for (const auto& en : alg.bracket_basis(alg.e_index(simple_k), alg.e_index(it->second))) {
          if (en.first == alg.e_index(k) && en.second != 0) {
            si = simple_k;
            dk = it->second;
            break;
          }
        }
      }
    }
    if (si < 0) throw std::logic_error("no bracket decomposition for root");
    long ne = 0, nf = 0;
    for (const auto& en : alg.bracket_basis(alg.e_index(si), alg.e_index(dk)))
      if (en.first == alg.e_index(k)) ne = en.second;
    for (const auto& en : alg.bracket_basis(alg.f_index(si), alg.f_index(dk)))
      if (en.first == alg.f_index(k)) nf = en.second;
    if (ne == 0 || nf == 0) throw std::logic_error("bad decomposition constants");
    RatVec ei = alg.bracket<Rat>(m.col(alg.e_index(si)), m.col(alg.e_index(dk)));
    RatVec fi = alg.bracket<Rat>(m.col(alg.f_index(si)), m.col(alg.f_index(dk)));
    m.col(alg.e_index(k)) = ei / Rat(ne);
    m.col(alg.f_index(k)) = fi / Rat(nf);
  }
  return m;
}

bool is_automorphism(const ChevalleyAlgebra& alg, const RatMat& m) {
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = i + 1; j < alg.dim; ++j) {
      RatVec lhs = alg.bracket<Rat>(m.col(i), m.col(j));
      RatVec rhs = RatVec::Zero(alg.dim).eval();
      for (const auto& en : alg.bracket_basis(i, j)) rhs += m.col(en.first) * Rat(en.second);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

RatMat chevalley_involution(const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.rs;
  RatMat h = RatMat::Zero(alg.dim, rs.rank).eval();
  RatMat z = RatMat::Zero(alg.dim, rs.type.torus_rank).eval();
  RatMat e = RatMat::Zero(alg.dim, rs.rank).eval();
  RatMat f = RatMat::Zero(alg.dim, rs.rank).eval();
  std::map<IntVec, int, VecLess> pos;
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) pos[rs.positive_roots[k]] = static_cast<int>(k);
  for (int i = 0; i < rs.rank; ++i) {
    h(alg.h_index(i), i) = Rat(-1);
    IntVec ev = IntVec::Zero(rs.rank);
    ev(i) = 1;
    int k = pos.at(ev);
    e(alg.f_index(k), i) = Rat(-1);
    f(alg.e_index(k), i) = Rat(-1);
  }
  for (int j = 0; j < rs.type.torus_rank; ++j) z(alg.z_index(j), j) = Rat(-1);
  return extend_generator_map(alg, h, z, e, f);
}

RatMat diagram_automorphism(const ChevalleyAlgebra& alg, const std::vector<int>& perm) {
  const RootSystem& rs = alg.rs;
  if (static_cast<int>(perm.size()) != rs.rank) throw std::invalid_argument("perm size mismatch");
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (rs.cartan(perm[i], perm[j]) != rs.cartan(i, j))
        throw std::invalid_argument("not a diagram automorphism");
  RatMat h = RatMat::Zero(alg.dim, rs.rank).eval();
  RatMat z = RatMat::Zero(alg.dim, rs.type.torus_rank).eval();
  RatMat e = RatMat::Zero(alg.dim, rs.rank).eval();
  RatMat f = RatMat::Zero(alg.dim, rs.rank).eval();
  std::map<IntVec, int, VecLess> pos;
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) pos[rs.positive_roots[k]] = static_cast<int>(k);
  for (int i = 0; i < rs.rank; ++i) {
    h(alg.h_index(perm[i]), i) = Rat(1);
    IntVec ev = IntVec::Zero(rs.rank);
    ev(i) = 1;
    int k = pos.at(ev);
    IntVec pv = IntVec::Zero(rs.rank);
    pv(perm[i]) = 1;
    int pk = pos.at(pv);
    e(alg.e_index(pk), i) = Rat(1);
    f(alg.f_index(pk), i) = Rat(1);
  }
  for (int j = 0; j < rs.type.torus_rank; ++j) z(alg.z_index(j), j) = Rat(1);
  return extend_generator_map(alg, h, z, e, f);
}

RatMat sign_automorphism(const ChevalleyAlgebra& alg, const std::vector<int>& sign_nodes) {
  const RootSystem& rs = alg.rs;
  RatMat m = RatMat::Zero(alg.dim, alg.dim).eval();
  for (int i = 0; i < rs.wdim; ++i) m(i, i) = Rat(1);
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    long s = 0;
    for (int i : sign_nodes) s += rs.positive_roots[k](i);
    Rat sign = (s % 2 == 0) ? Rat(1) : Rat(-1);
    m(alg.e_index(static_cast<int>(k)), alg.e_index(static_cast<int>(k))) = sign;
    m(alg.f_index(static_cast<int>(k)), alg.f_index(static_cast<int>(k))) = sign;
  }
  return m;
}

}  // namespace lie
