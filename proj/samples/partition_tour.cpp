// Builds the tower for a given s, prints T1, T2, T3 and checks the Singer
// difference set identity.
#include <cstdlib>
#include <iostream>

#include "cyclo3/cyclo3.hpp"

int main(int argc, char** argv) {
  const unsigned s = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 2;
  const auto t = cyclo3::build_tower(s);
  const auto p = cyclo3::partition_by_psiD(t);
  std::cout << "F = GF(2^" << t.F.degree() << ") mod " << cyclo3::gf2x::to_hex(t.F.modulus()) << ", M = " << p.M
            << '\n';
  for (int k = 1; k <= 3; ++k) {
    std::cout << "T" << k << " (" << p.block(k).size() << "):";
    for (auto a : p.block(k)) std::cout << ' ' << a;
    std::cout << '\n';
  }
  const auto r = cyclo3::verify_singer(p);
  std::cout << r;
  return r.passed() ? 0 : 1;
}
