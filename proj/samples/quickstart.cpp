// Walks through the main entry points on a few small graphs.
#include <iostream>

#include "oddhole/oddhole.hpp"

using namespace oddhole;

int main() {
  Graph pet = petersen_graph();
  auto m = check_membership(pet, 2);
  std::cout << "petersen in G_2: " << to_string(m.status) << "\n";

  auto holes = odd_holes(pet);
  std::cout << "odd holes: " << holes.holes.size() << ", first " << Json(holes.holes.front().vertices()).dump() << "\n";

  auto jumps = find_jumps(pet, holes.holes.front());
  for (const auto& j : jumps.jumps) std::cout << "  jump " << to_json(j).dump() << "\n";

  auto k4 = find_odd_k4(pet);
  if (k4.found) std::cout << "odd K4 on branch vertices " << Json(k4.found->branch).dump() << "\n";

  Graph c11 = gen::odd_cycle(5);
  auto d = decompose(c11, 5);
  std::cout << "C11 decomposes as " << to_json(d).dump() << "\n";

  Graph gr = grotzsch_graph();
  auto col = chromatic_number(gr);
  std::cout << "grotzsch chromatic number " << col.k << ", certificate "
            << (verify_certificate(gr, col) ? "verified" : "rejected") << "\n";
  std::cout << "grotzsch graph6 " << to_graph6(gr) << "\n";
}
