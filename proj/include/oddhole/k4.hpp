#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oddhole/graph.hpp"
#include "oddhole/named_graphs.hpp"

namespace oddhole {

enum class FaceClass { odd_hole, even_hole, not_hole };

inline std::string_view to_string(FaceClass f) {
  switch (f) {
    case FaceClass::odd_hole: return "odd_hole";
    case FaceClass::even_hole: return "even_hole";
    case FaceClass::not_hole: return "not_hole";
  }
  return "not_hole";
}

enum class K4Kind { plain, odd, balanced, balanced_type_1_2 };

inline std::string_view to_string(K4Kind k) {
  switch (k) {
    case K4Kind::plain: return "plain";
    case K4Kind::odd: return "odd";
    case K4Kind::balanced: return "balanced";
    case K4Kind::balanced_type_1_2: return "balanced_type_1_2";
  }
  return "plain";
}

/// Arris indices {P1,P2,Q1,Q2,L1,L2} and face indices {C1..C4} of a balanced subdivision.
/// C1 = P1 Q1 L1 and C2 = P1 Q2 L2 are the odd holes; C3 = P2 Q1 L2 and C4 = P2 Q2 L1.
struct K4Labeling {
  int p1 = 0, p2 = 0, q1 = 0, q2 = 0, l1 = 0, l2 = 0;
  int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  friend bool operator==(const K4Labeling&, const K4Labeling&) = default;
};

/// Index of the arris joining branch slots i and j.
inline int k4_arris_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 6; ++k)
    if (kK4ArrisEnds[k].first == i && kK4ArrisEnds[k].second == j) return k;
  throw InputError("no arris between equal branch slots");
}

/// Branch slots of face f, ascending.
inline constexpr std::array<std::array<int, 3>, 4> kK4FaceBranches{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

/// The arris shared by two distinct faces.
inline int k4_shared_arris(int f1, int f2) {
  for (int a : kK4FaceArrises[f1])
    for (int b : kK4FaceArrises[f2])
      if (a == b) return a;
  throw InputError("a face shares no arris with itself");
}

struct K4Subdivision {
  std::array<Vertex, 4> branch{};
  /// Arris i runs from branch[kK4ArrisEnds[i].first] to branch[kK4ArrisEnds[i].second].
  std::array<std::vector<Vertex>, 6> arrises;
  /// Face f starts at its least branch slot.
  std::array<std::vector<Vertex>, 4> faces;
  std::array<FaceClass, 4> face_class{};
  K4Kind kind = K4Kind::plain;
  /// H equals the subgraph of G induced on V(H).
  bool induced = true;
  /// Set for balanced kinds: the type (1,2) labeling when one exists, otherwise the first labeling.
  std::optional<K4Labeling> labeling;

  std::array<std::size_t, 6> lengths() const {
    std::array<std::size_t, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = arrises[i].size() - 1;
    return out;
  }
  std::size_t num_edges() const {
    std::size_t e = 0;
    for (auto l : lengths()) e += l;
    return e;
  }
  VertexSet vertex_set() const {
    VertexSet s;
    for (const auto& a : arrises) s |= VertexSet::of(a);
    return s;
  }
  std::size_t odd_hole_faces() const {
    return static_cast<std::size_t>(std::count(face_class.begin(), face_class.end(), FaceClass::odd_hole));
  }
};

inline std::vector<Vertex> k4_face_cycle(const std::array<std::vector<Vertex>, 6>& arrises, int f) {
  auto [x, y, z] = kK4FaceBranches[f];
  const auto& xy = arrises[k4_arris_index(x, y)];
  const auto& yz = arrises[k4_arris_index(y, z)];
  const auto& xz = arrises[k4_arris_index(x, z)];
  std::vector<Vertex> cyc(xy.begin(), xy.end());
  cyc.insert(cyc.end(), yz.begin() + 1, yz.end());
  for (std::size_t i = xz.size() - 2; i >= 1; --i) cyc.push_back(xz[i]);
  return cyc;
}

/// Every labeling of a subdivision whose odd-hole faces are exactly f_odd[0], f_odd[1].
inline std::vector<K4Labeling> k4_labelings(const std::array<int, 2>& f_odd, const std::array<int, 2>& f_even) {
  std::vector<K4Labeling> out;
  for (int swap_odd = 0; swap_odd < 2; ++swap_odd)
    for (int swap_even = 0; swap_even < 2; ++swap_even) {
      K4Labeling lab;
      lab.c1 = f_odd[swap_odd];
      lab.c2 = f_odd[1 - swap_odd];
      lab.c3 = f_even[swap_even];
      lab.c4 = f_even[1 - swap_even];
      lab.p1 = k4_shared_arris(lab.c1, lab.c2);
      lab.p2 = kK4Opposite[lab.p1];
      lab.q1 = k4_shared_arris(lab.c1, lab.c3);
      lab.l2 = k4_shared_arris(lab.c2, lab.c3);
      lab.l1 = k4_shared_arris(lab.c1, lab.c4);
      lab.q2 = k4_shared_arris(lab.c2, lab.c4);
      out.push_back(lab);
    }
  return out;
}

inline bool is_type_1_2(const std::array<std::size_t, 6>& len, const K4Labeling& lab) {
  return len[lab.q1] == 1 && len[lab.l2] > 1;
}

/// Fills faces, face classes, kind, and labeling from the branch vertices and arrises.
inline void classify_faces(const Graph& g, K4Subdivision& h) {
  std::array<int, 2> odd{}, even{};
  int n_odd = 0, n_even = 0;
  for (int f = 0; f < 4; ++f) {
    h.faces[f] = k4_face_cycle(h.arrises, f);
    const auto& c = h.faces[f];
    if (!is_hole(g, c))
      h.face_class[f] = FaceClass::not_hole;
    else
      h.face_class[f] = c.size() % 2 ? FaceClass::odd_hole : FaceClass::even_hole;
    if (h.face_class[f] == FaceClass::odd_hole) {
      if (n_odd < 2) odd[n_odd] = f;
      ++n_odd;
    } else {
      if (n_even < 2) even[n_even] = f;
      ++n_even;
    }
  }
  h.labeling.reset();
  if (n_odd == 4) {
    h.kind = K4Kind::odd;
  } else if (n_odd == 2 && h.induced) {
    h.kind = K4Kind::balanced;
    auto labs = k4_labelings(odd, even);
    h.labeling = labs.front();
    auto len = h.lengths();
    for (const auto& lab : labs)
      if (is_type_1_2(len, lab)) {
        h.kind = K4Kind::balanced_type_1_2;
        h.labeling = lab;
        break;
      }
  } else {
    h.kind = K4Kind::plain;
  }
}

inline bool k4_is_induced(const Graph& g, const K4Subdivision& h) {
  VertexSet s = h.vertex_set();
  std::size_t inside = 0;
  s.for_each([&](Vertex v) { inside += (g.neighborhood(v) & s).size(); });
  return inside / 2 == h.num_edges();
}

/// Re-derives faces, classes and kind; throws InputError unless h is a K4-subdivision subgraph of g.
inline K4Kind classify_k4(const Graph& g, K4Subdivision& h);

namespace detail {

// Grows the six arrises in index order. Arrises 0..2 leave the least branch vertex a and end at
// branch vertices b < c < d chosen on the fly; arrises 3..5 join fixed ends. Each new vertex may only
// see the current tip, the arris target, and (in face-induced mode) interior vertices of the opposite
// arris, so every emitted H is induced, or has chords only between opposite arrises.
template <class Visitor>
class K4Search {
 public:
  K4Search(const Graph& g, bool induced_only, BudgetMeter& meter, Visitor& visit)
      : g_(g), induced_only_(induced_only), meter_(meter), visit_(visit) {}

  SearchStatus run() {
    const auto n = static_cast<Vertex>(g_.num_vertices());
    for (Vertex a = 0; a < n && !done_; ++a) {
      if (g_.degree(a) < 3) continue;
      branch_[0] = a;
      nbranch_ = 1;
      used_ = VertexSet{a};
      grow(0);
    }
    if (exceeded_) return SearchStatus::budget_exceeded;
    return stopped_ ? SearchStatus::stopped : SearchStatus::complete;
  }

 private:
  void grow(int k) {
    if (done_) return;
    if (k == 6) {
      emit();
      return;
    }
    arr_[k].assign(1, branch_[kK4ArrisEnds[k].first]);
    step(k);
  }

  void step(int k) {
    if (!meter_.tick()) {
      exceeded_ = done_ = true;
      return;
    }
    if (k < 3)
      step_open(k);
    else
      step_fixed(k);
  }

  VertexSet allowed_extra(int k) const {
    if (induced_only_ || k < 3) return {};
    return interior_[kK4Opposite[k]];
  }

  void step_fixed(int k) {
    const Vertex tip = arr_[k].back();
    const Vertex t = branch_[kK4ArrisEnds[k].second];
    if (g_.adjacent(tip, t)) {
      arr_[k].push_back(t);
      grow(k + 1);
      arr_[k].pop_back();
      return;
    }
    const VertexSet extra = allowed_extra(k);
    VertexSet ok_nbrs = extra;
    ok_nbrs.insert(tip);
    ok_nbrs.insert(t);
    // Unused vertices that could still sit on this arris beyond the next step.
    VertexSet blockers = used_ - extra;
    blockers.erase(t);
    const VertexSet region = g_.vertex_set() - used_ - neighbors_of_set(g_, blockers);
    VertexSet cand = g_.neighborhood(tip) - used_;
    cand.for_each([&](Vertex x) {
      if (done_) return;
      if (!(g_.neighborhood(x) & used_).is_subset_of(ok_nbrs)) return;
      if (!g_.adjacent(x, t) && !reaches(x, region, g_.neighborhood(t))) return;
      push_interior(k, x);
      step(k);
      pop_interior(k);
    });
  }

  void step_open(int k) {
    const Vertex tip = arr_[k].back();
    const Vertex a = branch_[0];
    const Vertex floor = branch_[nbranch_ - 1];
    VertexSet declared;
    for (int i = 1; i < nbranch_; ++i) declared.insert(branch_[i]);
    VertexSet cand = g_.neighborhood(tip) - used_;
    cand.for_each([&](Vertex x) {
      if (done_) return;
      VertexSet bad = g_.neighborhood(x) & used_;
      bad.erase(tip);
      const bool eligible = x > floor && x > a && g_.degree(x) >= 3;
      if (!bad.is_subset_of(declared)) return;
      if (eligible) {
        branch_[nbranch_++] = x;
        used_.insert(x);
        arr_[k].push_back(x);
        grow(k + 1);
        arr_[k].pop_back();
        used_.erase(x);
        --nbranch_;
      }
      if (!bad.empty() || done_) return;
      push_interior(k, x);
      step(k);
      pop_interior(k);
    });
  }

  // BFS from x through `region` until a vertex of `goal` is met.
  bool reaches(Vertex x, const VertexSet& region, const VertexSet& goal) const {
    VertexSet seen{x};
    VertexSet frontier{x};
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g_.neighborhood(v); });
      next &= region;
      next -= seen;
      if (next.intersects(goal)) return true;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  void push_interior(int k, Vertex x) {
    arr_[k].push_back(x);
    used_.insert(x);
    interior_[k].insert(x);
  }

  void pop_interior(int k) {
    Vertex x = arr_[k].back();
    arr_[k].pop_back();
    used_.erase(x);
    interior_[k].erase(x);
  }

  void emit() {
    K4Subdivision h;
    h.branch = branch_;
    h.arrises = arr_;
    h.induced = induced_only_ || k4_is_induced(g_, h);
    classify_faces(g_, h);
    if (!visit_(std::as_const(h))) stopped_ = done_ = true;
  }

  const Graph& g_;
  bool induced_only_;
  BudgetMeter& meter_;
  Visitor& visit_;
  std::array<Vertex, 4> branch_{};
  int nbranch_ = 0;
  std::array<std::vector<Vertex>, 6> arr_;
  std::array<VertexSet, 6> interior_;
  VertexSet used_;
  bool done_ = false;
  bool stopped_ = false;
  bool exceeded_ = false;
};

}  // namespace detail

/// Calls visit(const K4Subdivision&) for every K4-subdivision H of g with classified faces. With
/// induced_only, H ranges over induced subgraphs; otherwise H may also carry chords between interior
/// vertices of opposite arrises (every face is then still induced). Returning false stops the search.
template <class Visitor>
SearchStatus for_each_k4_subdivision(const Graph& g, bool induced_only, BudgetMeter& meter, Visitor&& visit) {
  detail::K4Search<std::remove_reference_t<Visitor>> search(g, induced_only, meter, visit);
  return search.run();
}

inline bool k4_order(const K4Subdivision& a, const K4Subdivision& b) {
  if (a.branch != b.branch) return a.branch < b.branch;
  return a.arrises < b.arrises;
}

struct K4List {
  std::vector<K4Subdivision> subdivisions;  // sorted by branch quadruple, then arrises
  BudgetState budget_state = BudgetState::within;
  std::uint64_t nodes = 0;
  bool complete() const { return budget_state == BudgetState::within; }
};

inline K4List find_k4_subdivisions(const Graph& g, bool induced_only = true, Budget budget = {}) {
  BudgetMeter meter(budget);
  K4List out;
  for_each_k4_subdivision(g, induced_only, meter, [&](const K4Subdivision& h) {
    out.subdivisions.push_back(h);
    return true;
  });
  std::sort(out.subdivisions.begin(), out.subdivisions.end(), k4_order);
  out.budget_state = meter.state();
  out.nodes = meter.used();
  return out;
}

/// First subdivision of the requested kind in search order.
struct K4Hit {
  std::optional<K4Subdivision> found;
  SearchStatus status = SearchStatus::complete;
  std::uint64_t nodes = 0;

  /// True when the search finished without finding one.
  bool proved_absent() const { return !found && status == SearchStatus::complete; }
};

inline K4Hit find_odd_k4(const Graph& g, Budget budget = {}) {
  BudgetMeter meter(budget);
  K4Hit hit;
  hit.status = for_each_k4_subdivision(g, false, meter, [&](const K4Subdivision& h) {
    if (h.kind != K4Kind::odd) return true;
    hit.found = h;
    return false;
  });
  hit.nodes = meter.used();
  return hit;
}

inline K4Hit find_balanced_type_1_2(const Graph& g, Budget budget = {}) {
  BudgetMeter meter(budget);
  K4Hit hit;
  hit.status = for_each_k4_subdivision(g, true, meter, [&](const K4Subdivision& h) {
    if (h.kind != K4Kind::balanced_type_1_2) return true;
    hit.found = h;
    return false;
  });
  hit.nodes = meter.used();
  return hit;
}

/// Reads G[s] as a K4-subdivision: four vertices of degree 3, the rest of degree 2, six distinct links.
inline std::optional<K4Subdivision> k4_from_vertex_set(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> branch;
  bool shape_ok = true;
  s.for_each([&](Vertex v) {
    auto d = (g.neighborhood(v) & s).size();
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      shape_ok = false;
  });
  if (!shape_ok || branch.size() != 4 || !is_connected(g, s)) return std::nullopt;
  K4Subdivision h;
  std::copy(branch.begin(), branch.end(), h.branch.begin());
  std::array<bool, 6> seen{};
  for (int i = 0; i < 4; ++i) {
    for (Vertex w : g.neighbors(h.branch[i])) {
      if (!s.contains(w)) continue;
      std::vector<Vertex> chain{h.branch[i]};
      Vertex prev = h.branch[i], cur = w;
      while (std::find(h.branch.begin(), h.branch.end(), cur) == h.branch.end()) {
        chain.push_back(cur);
        Vertex next = -1;
        for (Vertex x : g.neighbors(cur))
          if (s.contains(x) && x != prev) next = x;
        prev = cur;
        cur = next;
      }
      chain.push_back(cur);
      int j = static_cast<int>(std::find(h.branch.begin(), h.branch.end(), cur) - h.branch.begin());
      if (j == i) return std::nullopt;
      if (j < i) continue;
      int k = k4_arris_index(i, j);
      if (seen[k]) return std::nullopt;
      seen[k] = true;
      h.arrises[k] = std::move(chain);
    }
  }
  for (bool b : seen)
    if (!b) return std::nullopt;
  h.induced = true;
  classify_faces(g, h);
  return h;
}

namespace detail {

inline Check k4_structure(const Graph& g, const K4Subdivision& h) {
  for (int i = 0; i < 4; ++i) {
    if (!g.contains(h.branch[i])) return Check::fail("branch vertex out of range");
    for (int j = 0; j < i; ++j)
      if (h.branch[i] == h.branch[j]) return Check::fail("repeated branch vertex");
  }
  VertexSet seen;
  for (Vertex b : h.branch) seen.insert(b);
  for (int k = 0; k < 6; ++k) {
    const auto& a = h.arrises[k];
    if (a.size() < 2) return Check::fail("arris " + std::to_string(k) + " has no edge");
    if (a.front() != h.branch[kK4ArrisEnds[k].first] || a.back() != h.branch[kK4ArrisEnds[k].second])
      return Check::fail("arris " + std::to_string(k) + " has wrong ends");
    if (!check_path(g, a, false)) return Check::fail("arris " + std::to_string(k) + " is not a path of g");
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
      if (seen.contains(a[i])) return Check::fail("arrises are not internally disjoint");
      seen.insert(a[i]);
    }
  }
  return Check::pass();
}

}  // namespace detail

inline K4Kind classify_k4(const Graph& g, K4Subdivision& h) {
  if (auto c = detail::k4_structure(g, h); !c) throw InputError("not a K4-subdivision: " + c.reason);
  h.induced = k4_is_induced(g, h);
  classify_faces(g, h);
  return h.kind;
}

/// Definitional re-check of a reported subdivision: structure, induced flag, faces, face classes,
/// kind and labeling are recomputed from adjacency and compared with the record.
inline Check validate_k4(const Graph& g, const K4Subdivision& h) {
  if (auto c = detail::k4_structure(g, h); !c) return c;
  VertexSet vs;
  std::size_t edges = 0;
  for (const auto& a : h.arrises) {
    vs |= VertexSet::of(a);
    edges += a.size() - 1;
  }
  std::size_t inside = 0;
  vs.for_each([&](Vertex v) { inside += (g.neighborhood(v) & vs).size(); });
  if ((inside / 2 == edges) != h.induced) return Check::fail("induced flag is wrong");

  int odd_faces = 0;
  std::array<bool, 4> odd{};
  for (int f = 0; f < 4; ++f) {
    auto [x, y, z] = kK4FaceBranches[f];
    std::vector<Vertex> cyc;
    auto append = [&](int i, int j) {
      const auto& a = h.arrises[k4_arris_index(i, j)];
      std::vector<Vertex> seg(a.begin(), a.end());
      if (seg.front() != h.branch[i]) std::reverse(seg.begin(), seg.end());
      cyc.insert(cyc.end(), seg.begin(), seg.end() - 1);
    };
    append(x, y);
    append(y, z);
    append(z, x);
    if (cyc != h.faces[f]) return Check::fail("face " + std::to_string(f) + " does not match its arrises");
    bool hole = cyc.size() >= 4 && cycle_chords(g, cyc).empty();
    FaceClass expect = !hole ? FaceClass::not_hole : cyc.size() % 2 ? FaceClass::odd_hole : FaceClass::even_hole;
    if (expect != h.face_class[f]) return Check::fail("face " + std::to_string(f) + " misclassified");
    odd[f] = expect == FaceClass::odd_hole;
    odd_faces += odd[f];
  }

  K4Kind expect = K4Kind::plain;
  if (odd_faces == 4) expect = K4Kind::odd;
  else if (odd_faces == 2 && h.induced) expect = K4Kind::balanced;
  if (expect == K4Kind::balanced) {
    if (!h.labeling) return Check::fail("balanced subdivision without labeling");
    const auto& L = *h.labeling;
    auto len = h.lengths();
    if (!odd[L.c1] || !odd[L.c2] || odd[L.c3] || odd[L.c4] || L.c1 == L.c2 || L.c3 == L.c4)
      return Check::fail("labeling faces do not match the odd holes");
    auto in_face = [&](int arris, int face) {
      const auto& fa = kK4FaceArrises[face];
      return std::find(fa.begin(), fa.end(), arris) != fa.end();
    };
    auto on = [&](int arris, int f1, int f2) { return in_face(arris, f1) && in_face(arris, f2); };
    if (!on(L.p1, L.c1, L.c2) || !on(L.p2, L.c3, L.c4) || !on(L.q1, L.c1, L.c3) || !on(L.q2, L.c2, L.c4) ||
        !on(L.l1, L.c1, L.c4) || !on(L.l2, L.c2, L.c3))
      return Check::fail("labeling arrises do not match its faces");
    bool any_type = false;
    int fo[2], fe[2], io = 0, ie = 0;
    for (int f = 0; f < 4; ++f) (odd[f] ? fo[io++] : fe[ie++]) = f;
    for (int so = 0; so < 2; ++so)
      for (int se = 0; se < 2; ++se) {
        int q1 = k4_shared_arris(fo[so], fe[se]);
        int l2 = k4_shared_arris(fo[1 - so], fe[se]);
        if (len[q1] == 1 && len[l2] > 1) any_type = true;
      }
    if (any_type) {
      expect = K4Kind::balanced_type_1_2;
      if (!(len[L.q1] == 1 && len[L.l2] > 1)) return Check::fail("stored labeling is not of type (1,2)");
    }
  }
  if (expect != h.kind) return Check::fail("kind should be " + std::string(to_string(expect)));
  return Check::pass();
}

/// Renames a subdivision found in an induced subgraph back to the host's vertex ids.
/// The renaming is monotone, so canonical orderings survive.
inline K4Subdivision lift_k4(const InducedSubgraph& sub, K4Subdivision h) {
  for (auto& b : h.branch) b = sub.original(b);
  for (auto& a : h.arrises)
    for (auto& v : a) v = sub.original(v);
  for (auto& f : h.faces)
    for (auto& v : f) v = sub.original(v);
  return h;
}

/// Lazily runs the two whole-graph subdivision searches once each.
class K4Cache {
 public:
  explicit K4Cache(const Graph& g, Budget budget = {}) : g_(&g), budget_(budget) {}

  const K4Hit& odd() {
    if (!odd_) odd_ = find_odd_k4(*g_, budget_);
    return *odd_;
  }
  const K4Hit& balanced_type_1_2() {
    if (!balanced_) balanced_ = find_balanced_type_1_2(*g_, budget_);
    return *balanced_;
  }

 private:
  const Graph* g_;
  Budget budget_;
  std::optional<K4Hit> odd_, balanced_;
};

}  // namespace oddhole
