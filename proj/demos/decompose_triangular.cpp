// Wedderburn b-decomposition of F1 + block upper triangular 3x3 matrices.

#include <iostream>

#include "wbd/wbd.hpp"

using namespace wbd;
using Q = Rational;

namespace {

void print_space(const char* name, const Algebra<Q>& a, const Subspace<Q>& s) {
  std::cout << name << " (dim " << s.dim() << "):\n";
  for (const auto& v : s.vectors()) {
    std::cout << "  ";
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      std::cout << (first ? "" : " + ") << v[i] << "*" << a.label(i);
      first = false;
    }
    std::cout << "\n";
  }
}

}  // namespace

int main() {
  const BaricAlgebra<Q> u = fixture_t12<Q>();
  const Decomposition<Q> d = decompose(u);
  print_space("S", u.algebra(), d.s);
  print_space("V", u.algebra(), d.v);
  print_space("rad", u.algebra(), d.rad);
  const Certificate c = verify_decomposition(u, d);
  for (const auto& check : c.checks) std::cout << check.name << ": " << (check.passed ? "pass" : "FAIL") << "\n";
  return c.passed() ? 0 : 1;
}
