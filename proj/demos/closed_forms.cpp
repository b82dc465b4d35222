// A short tour: closed forms at a few weights, checked against direct sums.

#include <fibsum/generating.hpp>
#include <fibsum/oracle.hpp>
#include <fibsum/render.hpp>

#include <iostream>

using namespace fibsum;

int main() {
  const auto one = GaussianRational(1);
  const auto half = GaussianRational::parse("1/2");

  std::cout << "sum_{j<=k} j^2 G_j\n  = " << render(rebase_tail(closed_form(1, 2, one))) << "\n\n";
  std::cout << "sum_{j<=k} G_j^2\n  = " << render(closed_form(2, 0, one)) << "\n\n";
  std::cout << "sum_{j>=0} j G_j / 2^j\n  = " << render(generating_function(1, 1, half)) << "\n\n";

  const auto s = split_alternating(1, 0);
  std::cout << "sum_{j<=K} (-1)^j G_2j\n  = " << render(s.even) << "\n\n";

  std::cout << "sum_{j>=0} w^j j G_j\n  = " << render(generating_function(1, 1, Symbolic{})) << "\n\n";

  // Lucas numbers, cubes, weight -2/3, k = 40.
  const auto w = GaussianRational::parse("-2/3");
  const auto cf = closed_form(3, 1, w);
  const auto closed = evaluate_closed(cf, 40, Seeds::lucas());
  const auto brute = brute_sum(3, 1, w, 40, Seeds::lucas());
  std::cout << "sum_{j<=40} (-2/3)^j j L_j^3 = " << closed << (closed == brute ? "  (matches direct sum)" : "  (MISMATCH)")
            << "\n";
  return closed == brute ? 0 : 1;
}
