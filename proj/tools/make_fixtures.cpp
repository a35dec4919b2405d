// Writes the fixture algebras as .alg files: make_fixtures <dir>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "wbd/fixtures.hpp"
#include "wbd/io.hpp"

namespace {

const std::map<std::string, std::string> kDescriptions = {
    {"t1", "the field itself"},
    {"t2", "F1 + M2"},
    {"t3", "F1 + upper triangular 2x2 matrices"},
    {"t4", "F[x]/(x^8); the radical has nilpotency index 4"},
    {"t5", "F1 + M2 + Fn with n annihilated and n^2 = 0"},
    {"t6", "F1 + M2 + column and row modules of square zero"},
    {"t6u", "F1 + M2(F[eps]/eps^2); bar(U) has an identity"},
    {"t7", "c^2 = c, cn = n, nc = 0, n^2 = 0; no identity"},
    {"t8", "F1 + Zorn (x) F[eps]/eps^2"},
    {"t9", "c = E11 + E22 + E33, M2, E14, E24, E34 inside 4x4 matrices; no identity"},
    {"t10", "F1 + M2(F[x]/x^3)"},
    {"t11", "F1 + M2 + M2"},
    {"t12", "F1 + block upper triangular [[M2, F^2], [0, F]]"},
    {"zb", "F1 + split Cayley (Zorn) algebra"},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (const auto& name : wbd::fixture_names()) {
    const auto u = wbd::fixture<wbd::Rational>(name);
    const wbd::AlgebraMetadata meta{name, kDescriptions.at(name)};
    std::ofstream f(dir + "/" + name + ".alg");
    f << wbd::pretty_json(wbd::algebra_to_json(u, meta));
    if (!f) {
      std::cerr << "cannot write " << dir << "/" << name << ".alg\n";
      return 1;
    }
  }
  return 0;
}
