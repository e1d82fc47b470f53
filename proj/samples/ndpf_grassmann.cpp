// Parking functions, the Grassmann order and the Cartan matrix of NDPFA_n.
#include "hecke/nd_monoids.hpp"

#include <iostream>

int main() {
  using namespace hecke;
  for (int n = 1; n <= 7; ++n) {
    std::cout << "n = " << n << ": |NDPF_n| = " << ndpf_enumerate(n).size()
              << ", pairs S <=_G T = " << grassmann_incidence_dim(n) << '\n';
  }

  const int n = 4;
  std::cout << "\nNDPF_3:";
  for (const auto& f : ndpf_enumerate(3)) std::cout << ' ' << nd_str(f);
  std::cout << "\n\nCartan matrix of NDPFA_" << n << " ([P_I : S_J], subsets of {1..3}):\n";
  auto subs = all_subsets(n - 1);
  Matrix c = ndpfa_cartan(n);
  for (Index i = 0; i < subs.size(); ++i) {
    std::cout << "  " << subs[i].str() << "\t";
    for (Index j = 0; j < subs.size(); ++j) std::cout << ' ' << c.at(i, j);
    std::cout << '\n';
  }
  std::cout << "matches the Grassmann order: " << std::boolalpha << (c == grassmann_cartan(n)) << '\n';
}
