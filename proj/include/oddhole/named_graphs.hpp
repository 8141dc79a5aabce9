#pragma once

#include <array>
#include <string>

#include "oddhole/graph.hpp"

namespace oddhole {

/// Standard labeling: outer cycle v1..v5 = 0..4, spokes v_i u_i, inner pentagram u_i u_{i+2},
/// with u1..u5 = 5..9.
inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return b.build("petersen");
}

/// Mycielskian of C5: cycle 0..4, shadow vertices 5..9 (5+i adjacent to the cycle neighbours of i), apex 10.
inline Graph grotzsch_graph() {
  GraphBuilder b(11);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 4) % 5);
    b.add_edge(10, 5 + i);
  }
  return b.build("grotzsch");
}

/// Hub 0 joined to every vertex of the rim cycle 1..k.
inline Graph wheel_graph(std::size_t k) {
  if (k < 3) throw InputError("wheel needs a rim of at least 3 vertices");
  GraphBuilder b(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    auto v = static_cast<Vertex>(i + 1);
    b.add_edge(0, v);
    b.add_edge(v, static_cast<Vertex>((i + 1) % k + 1));
  }
  return b.build("wheel_" + std::to_string(k));
}

/// Two vertices (0 and 1) joined by three internally disjoint paths with the given edge counts.
inline Graph theta_graph(std::size_t a, std::size_t b, std::size_t c) {
  std::size_t ones = (a == 1) + (b == 1) + (c == 1);
  if (a == 0 || b == 0 || c == 0 || ones > 1) throw InputError("theta arms must be positive with at most one edge arm");
  GraphBuilder g(2);
  for (std::size_t len : {a, b, c}) g.add_path(0, 1, len);
  return g.build("theta_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(c));
}

/// Arris order of a subdivided K4 on branch vertices 0..3: 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::pair<int, int>, 6> kK4ArrisEnds{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Faces as arris triples in the order above: 012, 013, 023, 123.
inline constexpr std::array<std::array<int, 3>, 4> kK4FaceArrises{{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};

/// The arris vertex-disjoint from arris i.
inline constexpr std::array<int, 6> kK4Opposite{5, 4, 3, 2, 1, 0};

/// K4 with arris i subdivided into lengths[i] edges; internal vertices are numbered from 4 in arris order.
inline Graph subdivided_k4(const std::array<std::size_t, 6>& lengths) {
  GraphBuilder b(4);
  for (std::size_t i = 0; i < 6; ++i) {
    if (lengths[i] == 0) throw InputError("arris lengths must be positive");
    b.add_path(kK4ArrisEnds[i].first, kK4ArrisEnds[i].second, lengths[i]);
  }
  std::string label = "k4sub";
  for (auto l : lengths) label += "_" + std::to_string(l);
  return b.build(label);
}

inline std::array<std::size_t, 4> k4_face_lengths(const std::array<std::size_t, 6>& lengths) {
  std::array<std::size_t, 4> out{};
  for (std::size_t f = 0; f < 4; ++f)
    for (int a : kK4FaceArrises[f]) out[f] += lengths[static_cast<std::size_t>(a)];
  return out;
}

}  // namespace oddhole
