#include "lie/cartan.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lie {

long factor_positive_root_count(char series, int rank) {
  long n = rank;
  switch (series) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::invalid_argument("unknown series");
}

long factor_dimension(char series, int rank) {
  return rank + 2 * factor_positive_root_count(series, rank);
}

long CartanType::num_positive_roots() const {
  long c = 0;
  for (const auto& f : factors) c += factor_positive_root_count(f.series, f.rank);
  return c;
}

long CartanType::dimension() const { return rank() + 2 * num_positive_roots() + torus_rank; }

std::string CartanType::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) os << "+";
    os << f.series << f.rank;
    first = false;
  }
  if (torus_rank > 0) {
    if (!first) os << "+";
    os << "T" << torus_rank;
    first = false;
  }
  if (first) os << "T0";
  return os.str();
}

CartanType CartanType::parse(const std::string& s) {
  CartanType t;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("empty Cartan type");
  while (i < s.size()) {
    skip_ws();
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (c < 'A' || (c > 'G' && c != 'T')) throw std::invalid_argument("bad series letter in '" + s + "'");
    ++i;
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("missing rank in '" + s + "'");
    int r = std::stoi(s.substr(start, i - start));
    if (c == 'T') {
      t.torus_rank += r;
    } else {
      t.factors.push_back({c, r});
    }
    skip_ws();
    if (i < s.size()) {
      if (s[i] != '+') throw std::invalid_argument("expected '+' in '" + s + "'");
      ++i;
    }
  }
  validate(t);
  return t;
}

CartanType operator+(const CartanType& a, const CartanType& b) {
  CartanType t = a;
  t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
  t.torus_rank += b.torus_rank;
  return t;
}

void validate(const CartanType& t) {
  for (const auto& f : t.factors) {
    bool ok = false;
    switch (f.series) {
      case 'A': ok = f.rank >= 1; break;
      case 'B': ok = f.rank >= 2; break;
      case 'C': ok = f.rank >= 2; break;  // C2 admitted by convention (isomorphic to B2, not collapsed)
      case 'D': ok = f.rank >= 3; break;  // D3 admitted; conversion to A3 is explicit
      case 'E': ok = f.rank >= 6 && f.rank <= 8; break;
      case 'F': ok = f.rank == 4; break;
      case 'G': ok = f.rank == 2; break;
      default: ok = false;
    }
    if (!ok) {
      std::ostringstream os;
      os << "inadmissible Cartan factor " << f.series << f.rank;
      throw std::invalid_argument(os.str());
    }
  }
  if (t.torus_rank < 0) throw std::invalid_argument("negative torus rank");
}

}  // namespace lie
