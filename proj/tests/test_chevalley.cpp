#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/chevalley.h"

using namespace lie;

namespace {

ChevalleyAlgebra make(const char* name) { return build_chevalley(build_root_system(CartanType::parse(name))); }

// Length of the alpha-string through beta going down: max k with beta - k*alpha a root.
int string_down(const RootSystem& rs, const IntVec& alpha, const IntVec& beta) {
  int k = 0;
  IntVec cur = beta - alpha;
  while (is_root(rs, cur)) {
    ++k;
    cur -= alpha;
  }
  return k;
}

void check_chevalley_identities(const ChevalleyAlgebra& alg, bool exhaustive_jacobi) {
  const RootSystem& rs = alg.rs;
  int npos = static_cast<int>(rs.positive_roots.size());

  // [h_i, e_beta] = <beta, alpha_i^vee> e_beta
  for (int i = 0; i < rs.rank; ++i) {
    for (int k = 0; k < npos; ++k) {
      long pair = 0;
      for (int j = 0; j < rs.rank; ++j) pair += rs.positive_roots[k](j) * rs.cartan(j, i);
      RatVec v = alg.bracket<Rat>(alg.basis_vector(alg.h_index(i)), alg.basis_vector(alg.e_index(k)));
      RatVec expect = alg.basis_vector(alg.e_index(k)) * Rat(pair);
      CHECK(v == expect);
    }
  }
  // [e_beta, f_beta] = coroot
  for (int k = 0; k < npos; ++k) {
    RatVec v = alg.bracket<Rat>(alg.basis_vector(alg.e_index(k)), alg.basis_vector(alg.f_index(k)));
    IntVec c = alg.coroot(k);
    RatVec expect = RatVec::Zero(alg.dim).eval();
    for (int i = 0; i < rs.rank; ++i) expect(alg.h_index(i)) = Rat(c(i));
    CHECK(v == expect);
  }
  // N_{alpha,beta} = +-(p+1)
  for (int k = 0; k < npos; ++k) {
    for (int m = 0; m < npos; ++m) {
      IntVec sum = rs.positive_roots[k] + rs.positive_roots[m];
      if (!is_root(rs, sum)) continue;
      const auto& sv = alg.bracket_basis(alg.e_index(k), alg.e_index(m));
      REQUIRE(sv.size() == 1);
      long n = sv[0].second;
      int p = string_down(rs, rs.positive_roots[k], rs.positive_roots[m]);
      CHECK(std::abs(n) == p + 1);
    }
  }
  // Jacobi
  auto jac = [&](int a, int b, int c) {
    RatVec va = alg.basis_vector(a), vb = alg.basis_vector(b), vc = alg.basis_vector(c);
    RatVec s = alg.bracket<Rat>(alg.bracket<Rat>(va, vb), vc) +
               alg.bracket<Rat>(alg.bracket<Rat>(vb, vc), va) +
               alg.bracket<Rat>(alg.bracket<Rat>(vc, va), vb);
    CHECK(s.isZero());
  };
  if (exhaustive_jacobi) {
    for (int a = 0; a < alg.dim; ++a)
      for (int b = a + 1; b < alg.dim; ++b)
        for (int c = b + 1; c < alg.dim; ++c) jac(a, b, c);
  } else {
    Rng rng(11);
    for (int t = 0; t < 400; ++t) {
      int a = static_cast<int>(rng.uniform(0, alg.dim - 1));
      int b = static_cast<int>(rng.uniform(0, alg.dim - 1));
      int c = static_cast<int>(rng.uniform(0, alg.dim - 1));
      jac(a, b, c);
    }
  }
}

}  // namespace

TEST_CASE("A1 is the split sl2") {
  ChevalleyAlgebra alg = make("A1");
  CHECK(alg.dim == 3);
  RatVec ef = alg.bracket<Rat>(alg.basis_vector(alg.e_index(0)), alg.basis_vector(alg.f_index(0)));
  CHECK(ef == alg.basis_vector(alg.h_index(0)));
  RatVec he = alg.bracket<Rat>(alg.basis_vector(alg.h_index(0)), alg.basis_vector(alg.e_index(0)));
  CHECK(he == RatVec(alg.basis_vector(alg.e_index(0)) * Rat(2)));
}

TEST_CASE("A2 structure constants") {
  ChevalleyAlgebra alg = make("A2");
  CHECK(alg.dim == 8);
  const auto& sv = alg.bracket_basis(alg.e_index(0), alg.e_index(1));
  REQUIRE(sv.size() == 1);
  CHECK(std::abs(sv[0].second) == 1);
  check_chevalley_identities(alg, true);
}

TEST_CASE("chevalley identities across the folded and simply-laced types") {
  for (const char* name : {"B2", "C2", "A3", "B3", "C3", "D3"}) {
    ChevalleyAlgebra alg = make(name);
    check_chevalley_identities(alg, true);
  }
  for (const char* name : {"D4", "B4", "C4", "F4", "A1+A1", "B2+A1"}) {
    ChevalleyAlgebra alg = make(name);
    check_chevalley_identities(alg, false);
  }
}

TEST_CASE("G2 has dimension 14 and max |N| = 3") {
  ChevalleyAlgebra alg = make("G2");
  CHECK(alg.dim == 14);
  check_chevalley_identities(alg, true);
  long maxn = 0;
  int npos = static_cast<int>(alg.rs.positive_roots.size());
  for (int k = 0; k < npos; ++k)
    for (int m = 0; m < npos; ++m) {
      for (const auto& en : alg.bracket_basis(alg.e_index(k), alg.e_index(m)))
        if (alg.is_e(en.first)) maxn = std::max(maxn, std::abs(en.second));
    }
  CHECK(maxn == 3);
}

TEST_CASE("E6 builds and passes sampled identities") {
  ChevalleyAlgebra alg = make("E6");
  CHECK(alg.dim == 78);
  check_chevalley_identities(alg, false);
}

TEST_CASE("adjoint exponential") {
  ChevalleyAlgebra alg = make("A1");
  // exp(ad e) f = f + h - e
  RatMat rows = RatMat::Zero(1, 3).eval();
  rows(0, alg.f_index(0)) = Rat(1);
  alg.apply_exp_ad(alg.e_index(0), Rat(1), rows);
  RatVec expect = RatVec::Zero(3).eval();
  expect(alg.f_index(0)) = Rat(1);
  expect(alg.h_index(0)) = Rat(1);
  expect(alg.e_index(0)) = Rat(-1);
  CHECK(RatVec(rows.row(0).transpose()) == expect);

  // empty word is the identity
  ChevalleyAlgebra b2 = make("B2");
  GroupElementWord empty;
  RatMat op = word_operator(b2, empty);
  CHECK(op == RatMat(RatMat::Identity(b2.dim, b2.dim)));

  // a word composed with its formal inverse is the identity
  Rng rng(3);
  for (const char* name : {"A2", "B2", "C3", "D4"}) {
    ChevalleyAlgebra alg2 = make(name);
    for (int trial = 0; trial < 50; ++trial) {
      GroupElementWord w, winv;
      int len = 6;
      for (int i = 0; i < len; ++i) {
        WordLetter l;
        l.root = static_cast<int>(rng.uniform(0, alg2.rs.num_positive() - 1));
        l.positive = rng.uniform(0, 1) == 1;
        l.scalar = rng.uniform(-20, 20);
        w.push_back(l);
      }
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        WordLetter l = *it;
        l.scalar = -l.scalar;
        winv.push_back(l);
      }
      GroupElementWord both = w;
      both.insert(both.end(), winv.begin(), winv.end());
      RatMat op2 = word_operator(alg2, both);
      CHECK(op2 == RatMat(RatMat::Identity(alg2.dim, alg2.dim)));
    }
  }
}

TEST_CASE("word operators are invertible (unipotent factors)") {
  Rng rng(5);
  ChevalleyAlgebra alg = make("B2");
  for (int trial = 0; trial < 10; ++trial) {
    GroupElementWord w;
    for (int i = 0; i < 8; ++i) {
      WordLetter l;
      l.root = static_cast<int>(rng.uniform(0, alg.rs.num_positive() - 1));
      l.positive = rng.uniform(0, 1) == 1;
      l.scalar = rng.uniform(1, 50);
      w.push_back(l);
    }
    RatMat op = word_operator(alg, w);
    CHECK(rank_of(Mat<Rat>(op)) == alg.dim);
  }
}

TEST_CASE("generator map extension reproduces known automorphisms") {
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    ChevalleyAlgebra alg = make(name);
    RatMat omega = chevalley_involution(alg);
    CHECK(is_automorphism(alg, omega));
    CHECK(RatMat(omega * omega) == RatMat(RatMat::Identity(alg.dim, alg.dim)));
  }
  ChevalleyAlgebra a3 = make("A3");
  RatMat flip = diagram_automorphism(a3, {2, 1, 0});
  CHECK(is_automorphism(a3, flip));
  CHECK(RatMat(flip * flip) == RatMat(RatMat::Identity(a3.dim, a3.dim)));
  RatMat sgn = sign_automorphism(a3, {1});
  CHECK(is_automorphism(a3, sgn));
}
