#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lie/linalg.h"
#include "lie/root_system.h"

namespace lie {

// Chevalley basis of the semisimple algebra of a root system (plus central
// torus elements when the type has one). Basis order: h_1..h_r, z_1..z_t,
// then e_k, f_k per positive root k in the root system ordering. All
// structure constants are integers; signs come from a fixed bimultiplicative
// cocycle on the root lattice (ADE) transported through folding (B,C,F,G).
class ChevalleyAlgebra {
 public:
  RootSystem rs;
  int dim = 0;

  using Entry = std::pair<int, long>;           // (basis index, coefficient)
  using SparseVec = std::vector<Entry>;

  int h_index(int i) const { return i; }
  int z_index(int j) const { return rs.rank + j; }
  int e_index(int k) const { return rs.wdim + 2 * k; }
  int f_index(int k) const { return rs.wdim + 2 * k + 1; }
  bool is_e(int idx) const { return idx >= rs.wdim && (idx - rs.wdim) % 2 == 0; }
  bool is_f(int idx) const { return idx >= rs.wdim && (idx - rs.wdim) % 2 == 1; }
  int root_of(int idx) const { return (idx - rs.wdim) / 2; }

  const SparseVec& bracket_basis(int i, int j) const { return table_[i * dim + j]; }

  template <class S>
  Vec<S> bracket(const Vec<S>& a, const Vec<S>& b) const {
    Vec<S> out(dim);
    out.setConstant(S(0));
    for (int i = 0; i < dim; ++i) {
      if (is_zero(a(i))) continue;
      for (int j = 0; j < dim; ++j) {
        if (is_zero(b(j))) continue;
        for (const Entry& en : bracket_basis(i, j)) out(en.first) += a(i) * b(j) * S(en.second);
      }
    }
    return out;
  }

  RatVec basis_vector(int idx) const {
    RatVec v = RatVec::Zero(dim).eval();
    v(idx) = Rat(1);
    return v;
  }

  // coroot of positive root k expanded over h_1..h_r
  IntVec coroot(int k) const;

  // columns of ad(basis element b): ad_cols[j] = [(i, c)] with [b, basis_j] = sum c e_i
  std::vector<SparseVec> ad_columns(int b) const;

  // exp(t ad x_b) applied to a row-spanned subspace or vector, exact over S
  template <class S>
  void apply_exp_ad(int b, const S& t, Mat<S>& rows) const {
    std::vector<SparseVec> cols = ad_columns(b);
    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
      Vec<S> acc = rows.row(r).transpose();
      Vec<S> w = acc;
      for (long m = 1;; ++m) {
        Vec<S> nw(dim);
        nw.setConstant(S(0));
        bool nonzero = false;
        for (int j = 0; j < dim; ++j) {
          if (is_zero(w(j))) continue;
          for (const Entry& en : cols[j]) {
            nw(en.first) += S(en.second) * w(j);
          }
        }
        for (int j = 0; j < dim; ++j) {
          if (!is_zero(nw(j))) { nonzero = true; break; }
        }
        if (!nonzero) break;
        if (m > 64) throw std::logic_error("ad not nilpotent");
        w = nw * (t / S(m));
        acc += w;
        bool wz = true;
        for (int j = 0; j < dim; ++j) {
          if (!is_zero(w(j))) { wz = false; break; }
        }
        if (wz) break;
      }
      rows.row(r) = acc.transpose();
    }
  }

  void set_table(std::vector<SparseVec> t) { table_ = std::move(t); }

 private:
  std::vector<SparseVec> table_;
};

// Words of exponentials of root vectors; each letter is exp(t ad e_beta) or
// exp(t ad f_beta), an exact polynomial operator.
struct WordLetter {
  int root = 0;       // index into positive_roots
  bool positive = true;
  long scalar = 1;    // integer scalar, reduced mod p in modular mode
};
using GroupElementWord = std::vector<WordLetter>;

ChevalleyAlgebra build_chevalley(const RootSystem& rs);  // total rank <= 16 guard

template <class S>
Mat<S> apply_word(const ChevalleyAlgebra& alg, const GroupElementWord& w, Mat<S> rows,
                  std::uint64_t p = 0) {
  for (const WordLetter& letter : w) {
    int b = letter.positive ? alg.e_index(letter.root) : alg.f_index(letter.root);
    S t;
    if constexpr (std::is_same_v<S, Fp>) {
      t = Fp::from_int(letter.scalar, p);
    } else {
      t = S(letter.scalar);
    }
    alg.apply_exp_ad(b, t, rows);
  }
  return rows;
}

// Full operator of a word (columns = images of basis vectors).
RatMat word_operator(const ChevalleyAlgebra& alg, const GroupElementWord& w);

// Extends an assignment on generators (images of h_i, z_j, e_i, f_i) to a
// linear map on the whole algebra by bracketing up the root heights.
RatMat extend_generator_map(const ChevalleyAlgebra& alg, const RatMat& h_images,
                            const RatMat& z_images, const RatMat& e_images,
                            const RatMat& f_images);

bool is_automorphism(const ChevalleyAlgebra& alg, const RatMat& m);

// Chevalley involution: e_i -> -f_i, h -> -h, extended homomorphically.
RatMat chevalley_involution(const ChevalleyAlgebra& alg);

// Diagram automorphism given by a simple-root permutation (with e_i -> e_perm(i)).
RatMat diagram_automorphism(const ChevalleyAlgebra& alg, const std::vector<int>& perm);

// Diagonal sign automorphism chi(gamma) = (-1)^{sum of gamma-coords over S}.
RatMat sign_automorphism(const ChevalleyAlgebra& alg, const std::vector<int>& sign_nodes);

}  // namespace lie
