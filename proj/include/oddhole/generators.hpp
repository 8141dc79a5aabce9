#pragma once

#include <array>
#include <deque>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "oddhole/graph.hpp"
#include "oddhole/graph6.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/named_graphs.hpp"
#include "oddhole/rng.hpp"

namespace oddhole::gen {

enum class GeneratorKind { odd_cycle, subdivided_k4, augmented_member, named, graph6_stream };

inline std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::odd_cycle: return "odd_cycle";
    case GeneratorKind::subdivided_k4: return "subdivided_k4";
    case GeneratorKind::augmented_member: return "augmented_member";
    case GeneratorKind::named: return "named";
    case GeneratorKind::graph6_stream: return "graph6_stream";
  }
  return "odd_cycle";
}

inline GeneratorKind generator_kind_from_string(std::string_view s) {
  for (auto k : {GeneratorKind::odd_cycle, GeneratorKind::subdivided_k4, GeneratorKind::augmented_member,
                 GeneratorKind::named, GeneratorKind::graph6_stream})
    if (to_string(k) == s) return k;
  throw InputError("unknown generator kind '" + std::string(s) + "'");
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::odd_cycle;
  int ell = 2;
  std::array<std::size_t, 6> arrises{1, 1, 1, 1, 1, 1};
  /// Optional declared parity per face (true = odd), checked against the arris lengths.
  std::optional<std::array<bool, 4>> face_odd;
  int steps = 0;
  std::uint64_t seed = 0;
  std::string name;
  std::string path;
  std::size_t count = 1;
  std::size_t min_vertices = 0, max_vertices = 0;
};

/// Short description of a spec, attached to every generated graph as its label.
inline std::string spec_tag(const GeneratorSpec& s) {
  std::string t(to_string(s.kind));
  switch (s.kind) {
    case GeneratorKind::odd_cycle: return t + "(ell=" + std::to_string(s.ell) + ")";
    case GeneratorKind::subdivided_k4: {
      t += "(";
      for (std::size_t i = 0; i < 6; ++i) t += (i ? "," : "") + std::to_string(s.arrises[i]);
      return t + ")";
    }
    case GeneratorKind::augmented_member:
      return t + "(ell=" + std::to_string(s.ell) + ",steps=" + std::to_string(s.steps) +
             ",seed=" + std::to_string(s.seed) + ")";
    case GeneratorKind::named: return t + "(" + s.name + ")";
    case GeneratorKind::graph6_stream: return t + "(" + s.path + ")";
  }
  return t;
}

inline Graph odd_cycle(int ell) {
  if (ell < 2) throw InputError("ell must be at least 2");
  return cycle_graph(static_cast<std::size_t>(2 * ell + 1));
}

/// petersen, grotzsch, or wheel_k (k rim vertices).
inline Graph named(std::string_view name) {
  if (name == "petersen") return petersen_graph();
  if (name == "grotzsch") return grotzsch_graph();
  if (name.starts_with("wheel_")) {
    std::size_t k = 0;
    for (char c : name.substr(6)) {
      if (c < '0' || c > '9') throw InputError("bad wheel size in '" + std::string(name) + "'");
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    if (k < 3) throw InputError("wheel needs at least 3 rim vertices");
    return wheel_graph(k);
  }
  throw InputError("unknown named graph '" + std::string(name) + "'");
}

/// Subdivided K4, checking declared face parities when given.
inline Graph subdivided_k4_checked(const std::array<std::size_t, 6>& arrises,
                                   const std::optional<std::array<bool, 4>>& face_odd) {
  Graph g = subdivided_k4(arrises);
  if (face_odd) {
    auto faces = k4_face_lengths(arrises);
    for (std::size_t f = 0; f < 4; ++f)
      if ((faces[f] % 2 == 1) != (*face_odd)[f])
        throw InputError("face " + std::to_string(f) + " has length " + std::to_string(faces[f]) + ", declared " +
                         ((*face_odd)[f] ? "odd" : "even"));
  }
  return g;
}

struct Augmented {
  Graph graph;
  bool changed = false;
  int accepted = 0;
  int attempts = 0;
};

namespace detail {

inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> d(g.num_vertices(), -1);
  d[src] = 0;
  std::deque<Vertex> q{src};
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(u))
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
  }
  return d;
}

}  // namespace detail

/// Random path, edge, and pendant additions to a member of G_ℓ; each candidate is re-checked
/// and rejected unless it is still a member. Stops after `steps` accepted additions, after
/// 40 * steps attempts, or once the graph has max_vertices vertices (0 = no cap).
inline Augmented augment_member(const Graph& g, int ell, int steps, std::uint64_t seed, std::size_t max_vertices = 0,
                                Budget membership_budget = Budget{2'000'000}) {
  if (!check_membership(g, ell, membership_budget).member()) throw InputError("input is not a member of G_ell");
  Augmented out{g, false, 0, 0};
  Rng rng(seed);
  const int target = 2 * ell + 1;
  const int max_attempts = 40 * steps;
  while (out.accepted < steps && out.attempts < max_attempts) {
    ++out.attempts;
    const Graph& cur = out.graph;
    const auto n = static_cast<Vertex>(cur.num_vertices());
    GraphBuilder b = GraphBuilder::from(cur);
    double roll = rng.uniform();
    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (roll < 0.1) {
      b.add_path(u, b.add_vertex(), 1);
    } else {
      Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == v) continue;
      int d = detail::bfs_distances(cur, u)[v];
      int lo = std::max(1, target - (d < 0 ? target : d));
      int len = static_cast<int>(rng.between(lo, lo + target));
      if (len == 1 && cur.adjacent(u, v)) continue;
      if (len == 1)
        b.add_edge(u, v);
      else
        b.add_path(u, v, static_cast<std::size_t>(len));
    }
    if (max_vertices && b.num_vertices() > max_vertices) continue;
    Graph cand = b.build();
    if (check_membership(cand, ell, membership_budget).member()) {
      out.graph = std::move(cand);
      ++out.accepted;
      out.changed = true;
      if (max_vertices && out.graph.num_vertices() == max_vertices) break;
    }
  }
  return out;
}

/// theta(a, b, b) with a + b = 2ℓ + 1, which lies in G_ℓ.
inline Graph member_theta(int ell, int b) {
  if (b < ell + 1 || b > 2 * ell) throw InputError("theta arm must lie in [ell+1, 2ell]");
  return theta_graph(static_cast<std::size_t>(2 * ell + 1 - b), static_cast<std::size_t>(b),
                     static_cast<std::size_t>(b));
}

/// Seeds for growing members: the odd cycle, a theta, and an odd K4 with all faces of length 2ℓ+1.
inline std::vector<Graph> member_seeds(int ell) {
  auto l = static_cast<std::size_t>(ell);
  return {odd_cycle(ell), member_theta(ell, ell + 1), subdivided_k4({1, l, l, l, l, 1})};
}

/// `count` verified members of G_ℓ with vertex counts in [min_n, max_n] where reachable. Instance i
/// depends only on (seed, i).
inline std::vector<Graph> member_corpus(int ell, std::size_t count, std::size_t min_n, std::size_t max_n,
                                        std::uint64_t seed) {
  std::vector<Graph> out;
  auto seeds = member_seeds(ell);
  const Rng root(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = root.split(i);
    Graph g = seeds[rng.below(seeds.size())];
    std::size_t want = static_cast<std::size_t>(rng.between(static_cast<long long>(min_n), static_cast<long long>(max_n)));
    for (int round = 0; round < 8 && g.num_vertices() < want; ++round) {
      auto a = augment_member(g, ell, 4, rng.next(), want);
      g = std::move(a.graph);
    }
    out.push_back(g.with_label("member(ell=" + std::to_string(ell) + ",seed=" + std::to_string(seed) +
                               ",i=" + std::to_string(i) + ")"));
  }
  return out;
}

/// Deterministic graph stream for a spec; every graph carries spec_tag(spec) in its label.
inline std::vector<Graph> generate(const GeneratorSpec& s) {
  std::vector<Graph> out;
  const std::string tag = spec_tag(s);
  switch (s.kind) {
    case GeneratorKind::odd_cycle: out.push_back(odd_cycle(s.ell)); break;
    case GeneratorKind::subdivided_k4: out.push_back(subdivided_k4_checked(s.arrises, s.face_odd)); break;
    case GeneratorKind::named: out.push_back(named(s.name)); break;
    case GeneratorKind::augmented_member: {
      if (s.count == 1 && !s.min_vertices) {
        out.push_back(augment_member(odd_cycle(s.ell), s.ell, s.steps, s.seed, s.max_vertices).graph);
      } else {
        std::size_t lo = s.min_vertices ? s.min_vertices : static_cast<std::size_t>(2 * s.ell + 1);
        std::size_t hi = s.max_vertices ? s.max_vertices : lo + static_cast<std::size_t>(4 * s.ell);
        out = member_corpus(s.ell, s.count, lo, hi, s.seed);
        return out;
      }
      break;
    }
    case GeneratorKind::graph6_stream: {
      std::ifstream in(s.path);
      if (!in) throw InputError("cannot open '" + s.path + "'");
      for (auto& rec : read_graph6_stream(in)) out.push_back(rec.graph);
      break;
    }
  }
  for (auto& g : out) g = g.with_label(tag);
  return out;
}

}  // namespace oddhole::gen
