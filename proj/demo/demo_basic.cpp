// Walkthrough of the library API: build a few 2V elements, do arithmetic,
// certify torsion, close a twisted subgroup, and profile power growth.

#include <iostream>

#include <nvcalc/nvcalc.hpp>

using namespace nvcalc;

namespace {

Pattern halves_axis(int axis) {
  Pattern p = trivial_pattern(2);
  return split_block(p, 0, axis);
}

}  // namespace

int main() {
  // The swap of the two vertical halves of the square.
  const Element s = make_identical_pair_element(halves_axis(1), {1, 0});

  // The coordinate exchange: one block, twist (1 2).
  const Element tau = make_identical_pair_element(trivial_pattern(2), {0},
                                                  {parse_cycles("(1 2)", 2)});

  std::cout << "s =\n" << serialize_element(s) << "\n";
  std::cout << "tau =\n" << serialize_element(tau) << "\n";

  // Arithmetic: compose applies the left factor first.
  const Element st = reduce(compose(s, tau));
  std::cout << "s then tau =\n" << serialize_element(st) << "\n";
  std::cout << "s*tau equals tau*s: " << (equals(st, reduce(compose(tau, s))) ? "yes" : "no")
            << "\n";
  std::cout << "(s*tau)^4 is the identity: "
            << (equals(power(st, 4, true), identity_element(2)) ? "yes" : "no") << "\n\n";

  // Torsion certification: the first power whose domain and range agree.
  if (const auto cert = torsion_certificate(st, 16)) {
    std::cout << "certificate at power " << cert->power_k << ", pattern of "
              << cert->pattern.blocks.size() << " blocks, order bound " << cert->order_bound
              << "\n";
  }
  std::cout << "exact order of s*tau: " << order_up_to(st, 64).value_or(-1) << "\n\n";

  // The subgroup generated by s and tau closes into a dihedral group of
  // order 8, and one pattern witnesses all of it rigidly.
  const SameVWitness w = same_v_witness({s, tau}, 64);
  std::cout << "closure of {s, tau}: " << w.group.elements.size() << " elements, witness has "
            << w.witness.blocks.size() << " blocks\n\n";

  // An infinite-order element and its growth profile.
  const Element a = parse_element(
      "nv 1\n"
      "blocks 3\n"
      "D 0 : 0\nD 1 : 10\nD 2 : 11\n"
      "R 0 : 00\nR 1 : 01\nR 2 : 1\n"
      "map 0->0 ; 1->1 ; 2->2\n");
  std::cout << "growth of a one-dimensional shift-like element:\n"
            << profile_csv(power_profile(a, 6));
  std::cout << "point image: a(10:1,...) = " << format_point(apply(a, parse_point("10:1", 1)))
            << "\n";
  return 0;
}
