// Dimension of the Hecke-group algebra, counted three ways.
#include "hecke/hecke_group.hpp"

#include <iostream>

int main() {
  using namespace hecke;
  for (const char* name : {"A1", "A2", "A3", "B2", "I2(5)"}) {
    auto W = CoxeterGroup::parse(name);
    auto g = make_generators(W);
    std::cout << name << ": |W| = " << W.size() << ", pairs = " << pair_count(W)
              << ", closure = " << hs_closure(g).dim() << ", sandwich = " << sandwich_solve(W).dim() << '\n';
  }
  // beyond desk scale only the combinatorial count is cheap
  for (int n = 5; n <= 7; ++n) std::cout << "S_" << n << ": pairs = " << pair_count(CoxeterGroup::symmetric(n)) << '\n';
}
