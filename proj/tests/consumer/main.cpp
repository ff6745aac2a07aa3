#include <iostream>

#include "tripext/factorize.hpp"

int main() {
  const auto chi = tripext::chromatic_index(9, 1);
  std::cout << chi << '\n';
  return chi == 28 ? 0 : 1;
}
