// Peirce corners of the split Cayley algebra for e = e11, then a Zorn frame
// recovered from a scrambled basis.

#include <iostream>

#include "wbd/wbd.hpp"

using namespace wbd;
using Q = Rational;

namespace {

void print_vector(const Algebra<Q>& a, const Vec<Q>& v) {
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::cout << (first ? "" : " + ") << v[i] << "*" << a.label(i);
    first = false;
  }
  std::cout << (first ? "0" : "") << "\n";
}

}  // namespace

int main() {
  const Algebra<Q> z = zorn_algebra<Q>();
  std::cout << "alternative: " << (check_alternative(z) ? "no" : "yes") << "\n";

  const PeirceSystem<Q> p = peirce_single(z, z.basis_vector(0));
  std::cout << "corner dims for e11: U11=" << p.component(1, 1).dim() << " U10=" << p.component(1, 0).dim()
            << " U01=" << p.component(0, 1).dim() << " U00=" << p.component(0, 0).dim() << "\n";
  std::cout << "Peirce relations: " << (verify_peirce_relations(z, p).ok ? "hold" : "violated") << "\n";

  const auto conj = conjugate(fixture_zb<Q>(), 11);
  const Algebra<Q>& a = conj.algebra.algebra();
  const auto comps = simple_components(a, bar_ideal(conj.algebra));
  const CayleyFrame<Q> f = zorn_frame_of_cayley(a, comps.front());
  std::cout << "frame in the scrambled basis:\n  e11 = ";
  print_vector(a, f.units.unit(0, 0));
  std::cout << "  v   = ";
  print_vector(a, f.v);
  std::cout << "frame identities: " << (check_cayley_frame(a, f) ? "violated" : "exact") << "\n";
}
