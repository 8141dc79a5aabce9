#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddhole/common.hpp"

namespace oddhole {

/// Fixed-width bitset over vertex ids [0, kMaxVertices).
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  template <class Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  /// All vertices in [lo, hi).
  static VertexSet range(Vertex lo, Vertex hi) {
    VertexSet s;
    for (Vertex v = lo; v < hi; ++v) s.insert(v);
    return s;
  }

  bool contains(Vertex v) const { return (words_[word(v)] >> bit(v)) & 1u; }
  void insert(Vertex v) { words_[word(v)] |= std::uint64_t{1} << bit(v); }
  void erase(Vertex v) { words_[word(v)] &= ~(std::uint64_t{1} << bit(v)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::optional<Vertex> first() const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
  static unsigned bit(Vertex v) { return static_cast<unsigned>(v) & 63u; }

  std::array<std::uint64_t, kWords> words_{};
};

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, parallel edges, or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string label = {}) {
    if (n > kMaxVertices)
      throw InputError("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxVertices));
    Graph g;
    g.adj_.resize(n);
    g.nbrs_.resize(n);
    g.label_ = std::move(label);
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
        throw InputError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
      if (g.adj_[a].contains(b))
        throw InputError("parallel edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      g.adj_[a].insert(b);
      g.adj_[b].insert(a);
      g.edges_.push_back(make_edge(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t v = 0; v < n; ++v) g.nbrs_[v] = g.adj_[v].to_vector();
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges, std::string label = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label));
  }

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighborhood(Vertex v) const { return adj_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }

  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  VertexSet vertex_set() const { return VertexSet::range(0, static_cast<Vertex>(num_vertices())); }

  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < num_vertices(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
  std::string label_;
};

/// Mutable edge accumulator used to construct graphs.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  /// Starts from an existing graph's vertices and edges.
  static GraphBuilder from(const Graph& g) {
    GraphBuilder b(g.num_vertices());
    b.edges_ = g.edges();
    return b;
  }

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  void add_edge(Vertex u, Vertex v) { edges_.push_back(make_edge(u, v)); }

  /// Adds a path of `length` edges from u to v through fresh internal vertices.
  void add_path(Vertex u, Vertex v, std::size_t length) {
    if (length == 0) throw InputError("path length must be positive");
    Vertex prev = u;
    for (std::size_t i = 1; i < length; ++i) {
      Vertex x = add_vertex();
      add_edge(prev, x);
      prev = x;
    }
    add_edge(prev, v);
  }

  std::size_t num_vertices() const { return n_; }
  Graph build(std::string label = {}) const { return Graph::from_edges(n_, edges_, std::move(label)); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

inline Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return b.build("C" + std::to_string(n));
}

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return b.build("K" + std::to_string(n));
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return b.build("P" + std::to_string(n));
}

inline void check_vertices(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs)
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
}

/// G[S] together with the index maps in both directions.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new id -> original id
  std::vector<int> to_local;        // original id -> new id, or -1

  Vertex original(Vertex local) const { return to_original[local]; }
  std::optional<Vertex> local(Vertex original) const {
    if (original < 0 || static_cast<std::size_t>(original) >= to_local.size() || to_local[original] < 0)
      return std::nullopt;
    return to_local[original];
  }
};

/// New ids follow increasing original id.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_local.assign(g.num_vertices(), -1);
  std::vector<Vertex> vs = s.to_vector();
  check_vertices(g, vs);
  for (Vertex v : vs) {
    out.to_local[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> es;
  for (Vertex v : vs)
    for (Vertex w : g.neighbors(v))
      if (v < w && s.contains(w)) es.emplace_back(out.to_local[v], out.to_local[w]);
  out.graph = Graph::from_edges(vs.size(), es, g.label());
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  return induced_subgraph(g, VertexSet::of(s));
}

/// N(H): vertices outside h with a neighbour in h.
inline VertexSet neighbors_of_set(const Graph& g, const VertexSet& h) {
  VertexSet out;
  h.for_each([&](Vertex v) {
    if (g.contains(v)) out |= g.neighborhood(v);
  });
  return out - h;
}

/// N[H] = N(H) ∪ H.
inline VertexSet closed_neighbors_of_set(const Graph& g, const VertexSet& h) { return neighbors_of_set(g, h) | h; }

/// Removes the given edges (missing edges are ignored).
inline Graph remove_edges(const Graph& g, std::span<const Edge> drop) {
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) keep.push_back(e);
  return Graph::from_edges(g.num_vertices(), keep, g.label());
}

/// Connected components of G[alive], each sorted; ordered by least vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& alive) {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen;
  std::vector<Vertex> stack;
  alive.for_each([&](Vertex root) {
    if (seen.contains(root)) return;
    std::vector<Vertex> comp;
    seen.insert(root);
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      (g.neighborhood(v) & (alive - seen)).for_each([&](Vertex w) {
        seen.insert(w);
        stack.push_back(w);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g) { return components(g, g.vertex_set()); }

/// The empty graph and K1 count as connected.
inline bool is_connected(const Graph& g, const VertexSet& alive) { return components(g, alive).size() <= 1; }
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertex_set()); }

/// Why a vertex sequence fails to be an induced path.
enum class PathDefect { none, empty, out_of_range, repeated_vertex, missing_edge, chord };

inline std::string_view to_string(PathDefect d) {
  switch (d) {
    case PathDefect::none: return "none";
    case PathDefect::empty: return "empty";
    case PathDefect::out_of_range: return "out_of_range";
    case PathDefect::repeated_vertex: return "repeated_vertex";
    case PathDefect::missing_edge: return "missing_edge";
    case PathDefect::chord: return "chord";
  }
  return "none";
}

struct PathCheck {
  bool ok = false;
  PathDefect defect = PathDefect::none;
  explicit operator bool() const { return ok; }
};

/// Checks that vs is a path of g; with `induced` also that it has no chord.
inline PathCheck check_path(const Graph& g, std::span<const Vertex> vs, bool induced) {
  if (vs.empty()) return {false, PathDefect::empty};
  VertexSet seen;
  for (Vertex v : vs) {
    if (!g.contains(v)) return {false, PathDefect::out_of_range};
    if (seen.contains(v)) return {false, PathDefect::repeated_vertex};
    seen.insert(v);
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return {false, PathDefect::missing_edge};
  if (induced)
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 2; j < vs.size(); ++j)
        if (g.adjacent(vs[i], vs[j])) return {false, PathDefect::chord};
  return {true, PathDefect::none};
}

inline PathCheck is_induced_path(const Graph& g, std::span<const Vertex> vs) { return check_path(g, vs, true); }

struct Path {
  std::vector<Vertex> vertices;
  bool induced = false;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  /// P*: internal vertices.
  VertexSet interior() const {
    VertexSet s;
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i) s.insert(vertices[i]);
    return s;
  }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Throws InputError unless vs is a path of g.
inline Path make_path(const Graph& g, std::vector<Vertex> vs) {
  auto c = check_path(g, vs, false);
  if (!c) throw InputError("not a path: " + std::string(to_string(c.defect)));
  bool induced = static_cast<bool>(check_path(g, vs, true));
  return Path{std::move(vs), induced};
}

struct Cycle {
  std::vector<Vertex> vertices;  // cyclic order
  std::vector<Edge> chords;

  std::size_t length() const { return vertices.size(); }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }
  std::size_t index_of(Vertex v) const {
    return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
  }
  bool contains(Vertex v) const { return index_of(v) < vertices.size(); }
  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      es.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
    std::sort(es.begin(), es.end());
    return es;
  }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Host edges between non-consecutive cycle vertices.
inline std::vector<Edge> cycle_chords(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Edge> chords;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (g.adjacent(vs[i], vs[j])) chords.push_back(make_edge(vs[i], vs[j]));
    }
  std::sort(chords.begin(), chords.end());
  return chords;
}

inline bool is_cycle(const Graph& g, std::span<const Vertex> vs) {
  if (vs.size() < 3) return false;
  if (!check_path(g, vs, false)) return false;
  return g.adjacent(vs.front(), vs.back());
}

/// Throws InputError unless vs is a cycle of g.
inline Cycle make_cycle(const Graph& g, std::vector<Vertex> vs) {
  check_vertices(g, vs);
  if (!is_cycle(g, vs)) throw InputError("vertex sequence is not a cycle");
  auto chords = cycle_chords(g, vs);
  return Cycle{std::move(vs), std::move(chords)};
}

inline bool is_hole(const Graph& g, std::span<const Vertex> vs) {
  return vs.size() >= 4 && is_cycle(g, vs) && cycle_chords(g, vs).empty();
}

struct Hole {
  Cycle cycle;
  bool odd = false;

  std::size_t length() const { return cycle.length(); }
  const std::vector<Vertex>& vertices() const { return cycle.vertices; }
  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Throws InputError unless vs is an induced cycle of length >= 4.
inline Hole make_hole(const Graph& g, std::vector<Vertex> vs) {
  Cycle c = make_cycle(g, std::move(vs));
  if (c.length() < 4) throw InputError("a hole needs at least four vertices");
  if (!c.chords.empty()) throw InputError("cycle has a chord, not a hole");
  bool odd = c.length() % 2 == 1;
  return Hole{std::move(c), odd};
}

/// Rotates/reflects a cyclic sequence so it starts at its least vertex followed by the smaller neighbour.
inline std::vector<Vertex> canonical_cycle(std::vector<Vertex> vs) {
  if (vs.size() < 3) return vs;
  auto it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), it, vs.end());
  if (vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return vs;
}

/// GraphViz rendering for human inspection.
inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph " + std::string(name) + " {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [a, b] : g.edges()) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace oddhole
