// Small tour of the library: exact shifted-gcd search, greedy pairwise-coprime
// shifting, a CRT-planted hard instance, and the counting identity.

#include "shiftgcd/coprime.hpp"
#include "shiftgcd/crt_instance.hpp"
#include "shiftgcd/linear_forms.hpp"
#include "shiftgcd/shift_search.hpp"

#include <iostream>

using namespace shiftgcd;

int main() {
  // How large can gcd(a + h) get with |h_i| <= 3?
  IntVector a{10, 16};
  auto best = max_shifted_gcd(a, 3);
  std::cout << "gcd((10,16) + (" << best.witness[0] << "," << best.witness[1]
            << ")) = " << best.d << "\n";

  // Smallest one-sided shifts making (4, 6, 9) pairwise coprime.
  auto cop = greedy_coprime(IntVector{4, 6, 9});
  std::cout << "greedy shifts:";
  for (auto h : cop.shifts.entries()) std::cout << " " << h;
  std::cout << "  (height " << cop.height_used << ")\n";

  // A vector that no shift of height <= 2 can make coprime.
  auto inst = crt_hard_instance(2, 2);
  std::cout << "hard instance height ~2^" << bit_length(height(inst.a))
            << ", certified ell(a) >= " << inst.certified_lower_bound << "\n";

  // Exact pair count against the 1/zeta(2) density.
  IntVector c{1, 2};
  std::cout << "R((1,2), 16) = " << r_mobius(c, 16) << "  (main term "
            << std::pow(16.0, 4) * zeta2_inv() << ")\n";
  return 0;
}
