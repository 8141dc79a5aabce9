#pragma once

// Small members of G_ell shared by the unit tests.

#include <array>
#include <utility>
#include <vector>

#include "oddhole/generators.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/named_graphs.hpp"
#include "oracles.hpp"

namespace fixtures {

using oddhole::Graph;

/// Subdivided K4s with every arris of length at most max_len that lie in G_ell.
inline std::vector<Graph> k4_members(int ell, std::size_t max_len) {
  std::vector<Graph> out;
  std::array<std::size_t, 6> len{};
  std::size_t total = 1;
  for (int i = 0; i < 6; ++i) total *= max_len;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& l : len) {
      l = 1 + c % max_len;
      c /= max_len;
    }
    Graph g = oddhole::subdivided_k4(len);
    if (oddhole::check_membership(g, ell).member()) out.push_back(g);
  }
  return out;
}

/// Random members of G_2 on 8 to 12 vertices.
inline std::vector<Graph> random_g2_members(std::size_t want, std::uint64_t seed) {
  oddhole::Rng rng(seed);
  std::vector<Graph> out;
  for (int t = 0; t < 20000 && out.size() < want; ++t) {
    Graph g = oracle::random_graph(8 + rng.below(5), 0.2 + 0.1 * rng.uniform(), rng);
    if (oddhole::check_membership(g, 2).member()) out.push_back(g);
  }
  return out;
}

/// Petersen, small subdivided K4 members and grown members for ell = 2..max_ell, and random G_2 members.
inline std::vector<std::pair<Graph, int>> member_pool(int max_ell, std::size_t random_count, std::uint64_t seed,
                                                      int min_ell = 2) {
  std::vector<std::pair<Graph, int>> pool;
  if (min_ell == 2) pool.push_back({oddhole::petersen_graph(), 2});
  for (int ell = min_ell; ell <= max_ell; ++ell) {
    for (auto& g : k4_members(ell, static_cast<std::size_t>(ell + 2))) pool.push_back({g, ell});
    for (auto& g : oddhole::gen::member_corpus(ell, 120, static_cast<std::size_t>(2 * ell + 1), 30, seed + ell))
      pool.push_back({g, ell});
  }
  if (min_ell == 2)
    for (auto& g : random_g2_members(random_count, seed)) pool.push_back({g, 2});
  return pool;
}

}  // namespace fixtures
