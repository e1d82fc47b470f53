// Multiplication table of HS(S_2) in the basis {1, s1, pi1}.
#include "hecke/hecke_group.hpp"

#include <iomanip>
#include <iostream>

int main() {
  using namespace hecke;
  const char* names[] = {"1", "s1", "pi1"};
  auto t = hs2_table();
  std::cout << std::setw(6) << "x";
  for (auto* c : names) std::cout << std::setw(16) << c;
  std::cout << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::cout << std::setw(6) << names[i];
    for (const auto& cell : t[i]) std::cout << std::setw(16) << cell;
    std::cout << '\n';
  }

  // the same operators act on kS_2 = span{12, 21}; rows are inputs
  auto g = make_generators(CoxeterGroup::symmetric(2));
  for (const auto& [name, op] : {std::pair{"s1", g.s[0]}, {"pi1", g.pi[0]}, {"pibar1", g.pibar[0]}}) {
    std::cout << name << ":";
    for (const auto& row : op.to_dense()) {
      std::cout << " [";
      for (const auto& x : row) std::cout << ' ' << x;
      std::cout << " ]";
    }
    std::cout << '\n';
  }
}
