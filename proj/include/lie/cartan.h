#pragma once

#include <string>
#include <vector>

#include "lie/numeric.h"

namespace lie {

// Cartan type: a list of simple factors plus a central torus, e.g. "D4+A1",
// "B3+T1". Bourbaki numbering throughout.
struct CartanType {
  struct Factor {
    char series = 0;  // A..G
    int rank = 0;
    friend bool operator==(const Factor& a, const Factor& b) {
      return a.series == b.series && a.rank == b.rank;
    }
  };
  std::vector<Factor> factors;
  int torus_rank = 0;

  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
  int weight_dim() const { return rank() + torus_rank; }
  bool is_torus() const { return factors.empty(); }
  bool is_simple() const { return factors.size() == 1 && torus_rank == 0; }

  // algebra dimension (rank + number of roots + torus)
  long dimension() const;
  long num_positive_roots() const;

  std::string str() const;
  static CartanType parse(const std::string& s);  // throws std::invalid_argument

  // direct sum
  friend CartanType operator+(const CartanType& a, const CartanType& b);
  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.factors == b.factors && a.torus_rank == b.torus_rank;
  }
};

// Admissibility: B>=2, C>=2 (C2 kept as a distinct label by convention),
// D>=3 (D3 kept distinct from A3; A3<->D3 conversion is explicit), E in 6..8,
// F=4, G=2. Throws std::invalid_argument naming the offending factor.
void validate(const CartanType& t);

long factor_positive_root_count(char series, int rank);
long factor_dimension(char series, int rank);

}  // namespace lie
