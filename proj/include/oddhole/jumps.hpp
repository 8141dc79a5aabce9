#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/k4.hpp"
#include "oddhole/structures.hpp"

namespace oddhole {

enum class JumpKind { short_jump, local, other };

inline std::string_view to_string(JumpKind k) {
  switch (k) {
    case JumpKind::short_jump: return "short";
    case JumpKind::local: return "local";
    case JumpKind::other: return "other";
  }
  return "other";
}

/// An induced (s,t)-path with s,t nonadjacent on the odd hole C and interior off C.
/// q1 and q2 are the (s,t)-paths of C, q1 walking forward through `hole`.
struct Jump {
  std::vector<Vertex> hole;
  std::vector<Vertex> path;
  std::vector<Vertex> q1, q2;
  JumpKind kind = JumpKind::other;
  bool touches_q1 = false, touches_q2 = false;
  /// 1 or 2: the side the jump is across. 0 for `other`.
  int across = 0;

  Vertex s() const { return path.front(); }
  Vertex t() const { return path.back(); }
  std::size_t length() const { return path.size() - 1; }
  const std::vector<Vertex>& across_side() const { return across == 2 ? q2 : q1; }
  const std::vector<Vertex>& other_side() const { return across == 2 ? q1 : q2; }
  bool across_one_vertex() const { return kind == JumpKind::local && across_side().size() == 3; }
};

inline Check check_jump(const Graph& g, const std::vector<Vertex>& hole, const std::vector<Vertex>& path) {
  if (!is_hole(g, hole) || hole.size() % 2 == 0) return Check::fail("C is not an odd hole");
  if (auto c = check_path(g, path, true); !c) return Check::fail("path: " + std::string(to_string(c.defect)));
  VertexSet cv = VertexSet::of(hole);
  if (!cv.contains(path.front()) || !cv.contains(path.back())) return Check::fail("ends not on C");
  if (g.adjacent(path.front(), path.back())) return Check::fail("ends are adjacent");
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (cv.contains(path[i])) return Check::fail("interior meets C");
  return Check::pass();
}

inline Jump classify_jump(const Graph& g, const std::vector<Vertex>& hole, std::vector<Vertex> path) {
  if (auto c = check_jump(g, hole, path); !c) throw InputError("not a jump: " + c.reason);
  Jump j;
  j.hole = hole;
  std::tie(j.q1, j.q2) = cycle_paths_between(hole, path.front(), path.back());
  j.path = std::move(path);
  VertexSet reach;
  for (std::size_t i = 1; i + 1 < j.path.size(); ++i) reach |= g.neighborhood(j.path[i]);
  auto inner = [](const std::vector<Vertex>& q) { return VertexSet::of(std::span(q).subspan(1, q.size() - 2)); };
  j.touches_q1 = reach.intersects(inner(j.q1));
  j.touches_q2 = reach.intersects(inner(j.q2));
  if (!j.touches_q1 && !j.touches_q2) {
    j.kind = JumpKind::short_jump;
    // The jump hole is the side whose union with P is odd.
    j.across = (j.length() + j.q1.size() - 1) % 2 == 1 ? 1 : 2;
  } else if (j.touches_q1 != j.touches_q2) {
    j.kind = JumpKind::local;
    j.across = j.touches_q1 ? 1 : 2;
  }
  return j;
}

inline bool jump_order(const Jump& a, const Jump& b) {
  if (a.s() != b.s()) return a.s() < b.s();
  if (a.t() != b.t()) return a.t() < b.t();
  if (a.length() != b.length()) return a.length() < b.length();
  return a.path < b.path;
}

struct JumpList {
  std::vector<Jump> jumps;
  BudgetState budget_state = BudgetState::within;
  std::uint64_t nodes = 0;
  bool complete() const { return budget_state == BudgetState::within; }
};

/// Every jump over the odd hole, oriented from its smaller end.
inline JumpList find_jumps(const Graph& g, const std::vector<Vertex>& hole, Budget budget = {}) {
  if (!is_hole(g, hole) || hole.size() % 2 == 0) throw InputError("C is not an odd hole of g");
  const VertexSet cv = VertexSet::of(hole);
  BudgetMeter meter(budget);
  JumpList out;
  std::vector<Vertex> path;
  bool exceeded = false;

  // `forbidden` holds the closed neighbourhoods of every path vertex except the tip.
  auto extend = [&](auto&& self, const VertexSet& forbidden) -> void {
    if (exceeded) return;
    if (!meter.tick()) {
      exceeded = true;
      return;
    }
    const Vertex s = path.front(), tip = path.back();
    if (path.size() >= 2) {
      (g.neighborhood(tip) & cv).for_each([&](Vertex t) {
        if (t > s && !forbidden.contains(t)) {
          path.push_back(t);
          out.jumps.push_back(classify_jump(g, hole, path));
          path.pop_back();
        }
      });
    }
    VertexSet next = forbidden | g.neighborhood(tip);
    next.insert(tip);
    (g.neighborhood(tip) - cv - forbidden).for_each([&](Vertex x) {
      if (exceeded) return;
      path.push_back(x);
      self(self, next);
      path.pop_back();
    });
  };
  for (Vertex s : cv.to_vector()) {
    path.assign({s});
    extend(extend, VertexSet{});
    if (exceeded) break;
  }
  std::sort(out.jumps.begin(), out.jumps.end(), jump_order);
  out.budget_state = meter.state();
  out.nodes = meter.used();
  return out;
}

inline JumpList find_jumps(const Graph& g, const Hole& c, Budget budget = {}) {
  return find_jumps(g, c.vertices(), budget);
}

struct JumpCheck {
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

/// A short or local jump across Q1 makes P Q2 even.
inline JumpCheck jump_parity_check(const Host& host, const Jump& j) {
  JumpCheck r;
  if (!host.admits_lemmas()) {
    r.detail = "host is not a member";
    return r;
  }
  if (j.kind == JumpKind::other) {
    r.detail = "jump is neither short nor local";
    return r;
  }
  std::size_t other = j.other_side().size() - 1;
  bool even = (j.length() + other) % 2 == 0;
  r.verdict = even ? Verdict::consistent : Verdict::violation;
  r.detail = "|P|=" + std::to_string(j.length()) + ", other side " + std::to_string(other);
  return r;
}

struct JumpExtraction {
  Verdict verdict = Verdict::not_applicable;
  std::optional<Jump> result;
  std::size_t steps = 0;
  std::string detail;
};

namespace detail {

inline VertexSet side_interior(const std::vector<Vertex>& q) {
  return VertexSet::of(std::span(q).subspan(1, q.size() - 2));
}

inline std::optional<Jump> try_jump(const Graph& g, const std::vector<Vertex>& hole, std::vector<Vertex> path) {
  if (!check_jump(g, hole, path)) return std::nullopt;
  return classify_jump(g, hole, std::move(path));
}

}  // namespace detail

/// A jump that is neither short nor local contains a short jump: between two consecutive interior
/// vertices touching different sides of C.
inline JumpExtraction extract_short_jump(const Host& host, const Graph& g, const Jump& j) {
  if (j.kind == JumpKind::local) throw InputError("jump is local");
  JumpExtraction r;
  if (!host.admits_lemmas()) {
    r.detail = "host is not a member";
    return r;
  }
  if (j.kind == JumpKind::short_jump) {
    r.verdict = Verdict::consistent;
    r.result = j;
    r.detail = "already short";
    return r;
  }
  const std::array<VertexSet, 2> sides{detail::side_interior(j.q1), detail::side_interior(j.q2)};
  std::vector<std::size_t> touchers;
  for (std::size_t i = 1; i + 1 < j.path.size(); ++i)
    if (g.neighborhood(j.path[i]).intersects(sides[0] | sides[1])) touchers.push_back(i);
  for (std::size_t k = 0; k + 1 < touchers.size(); ++k) {
    std::size_t a = touchers[k], b = touchers[k + 1];
    for (int sa = 0; sa < 2; ++sa) {
      auto wa = (g.neighborhood(j.path[a]) & sides[sa]).first();
      auto wb = (g.neighborhood(j.path[b]) & sides[1 - sa]).first();
      if (!wa || !wb) continue;
      std::vector<Vertex> cand{*wa};
      cand.insert(cand.end(), j.path.begin() + static_cast<std::ptrdiff_t>(a),
                  j.path.begin() + static_cast<std::ptrdiff_t>(b) + 1);
      cand.push_back(*wb);
      auto found = detail::try_jump(g, j.hole, cand);
      if (found && found->kind == JumpKind::short_jump) {
        r.verdict = Verdict::consistent;
        r.result = std::move(found);
        r.detail = "short jump between path positions " + std::to_string(a) + " and " + std::to_string(b);
        return r;
      }
    }
  }
  r.verdict = Verdict::violation;
  r.detail = "no short jump between consecutive touching vertices";
  return r;
}

/// A local jump contains a local jump across one vertex or a short jump. Follows the descent that
/// shortens the jump until one of the two appears.
inline JumpExtraction extract_local_one_or_short(const Host& host, const Graph& g, const Jump& j) {
  if (j.kind != JumpKind::local) throw InputError("jump is not local");
  JumpExtraction r;
  if (!host.admits_lemmas()) {
    r.detail = "host is not a member";
    return r;
  }
  const VertexSet cv = VertexSet::of(j.hole);
  auto fail = [&](std::string why) {
    r.verdict = Verdict::violation;
    r.detail = std::move(why);
    return r;
  };
  Jump cur = j;
  while (true) {
    if (cur.kind == JumpKind::short_jump || cur.across_one_vertex()) {
      r.verdict = Verdict::consistent;
      r.detail = cur.kind == JumpKind::short_jump ? "short jump" : "local jump across one vertex";
      r.result = std::move(cur);
      return r;
    }
    if (cur.kind != JumpKind::local) return fail("descent produced a jump that is neither short nor local");
    const auto& p = cur.path;
    const std::size_t m = p.size();
    const Vertex v1 = p.front(), v2 = p.back();
    VertexSet rest = cv;
    rest.erase(v1);
    rest.erase(v2);
    std::size_t i1 = 0, i2 = 0;
    for (std::size_t i = 1; i + 1 < m; ++i)
      if (g.neighborhood(p[i]).intersects(rest)) {
        if (!i1) i1 = i;
        i2 = i;
      }
    VertexSet n1 = g.neighborhood(p[i1]) & rest, n2 = g.neighborhood(p[i2]) & rest;
    if (n1.size() != 1 || n2.size() != 1) return fail("a path vertex has two neighbours on C");
    const Vertex w1 = *n1.first(), w2 = *n2.first();
    auto finish = [&](std::vector<Vertex> cand) {
      auto found = detail::try_jump(g, cur.hole, std::move(cand));
      if (!found || found->kind != JumpKind::short_jump) return fail("expected a short jump");
      r.verdict = Verdict::consistent;
      r.detail = "short jump";
      r.result = std::move(found);
      return r;
    };
    if (!g.adjacent(w1, v1)) {
      std::vector<Vertex> cand{w1};
      for (std::size_t i = i1 + 1; i-- > 0;) cand.push_back(p[i]);
      return finish(std::move(cand));
    }
    if (!g.adjacent(w2, v2)) {
      std::vector<Vertex> cand{w2};
      cand.insert(cand.end(), p.begin() + static_cast<std::ptrdiff_t>(i2), p.end());
      return finish(std::move(cand));
    }
    std::size_t i3 = 0;
    for (std::size_t i = 1; i + 1 < m; ++i)
      if (g.adjacent(p[i], w1)) i3 = i;
    if (i3 <= 1) return fail("descent does not shorten the jump");
    std::vector<Vertex> cand{w1};
    cand.insert(cand.end(), p.begin() + static_cast<std::ptrdiff_t>(i3), p.end());
    auto next = detail::try_jump(g, cur.hole, std::move(cand));
    if (!next) return fail("descent step is not a jump");
    cur = std::move(*next);
    ++r.steps;
  }
}

/// Chords ab and cd of a cycle cross when c and d lie strictly on different sides of ab.
/// Chords sharing an end never cross.
inline bool crossing(const std::vector<Vertex>& cyc, std::pair<Vertex, Vertex> e, std::pair<Vertex, Vertex> f) {
  auto pos = [&](Vertex v) {
    auto it = std::find(cyc.begin(), cyc.end(), v);
    if (it == cyc.end()) throw InputError("vertex " + std::to_string(v) + " is not on the cycle");
    return static_cast<std::size_t>(it - cyc.begin());
  };
  std::size_t a = pos(e.first), b = pos(e.second), c = pos(f.first), d = pos(f.second);
  if (a == c || a == d || b == c || b == d) return false;
  if (a > b) std::swap(a, b);
  auto inside = [&](std::size_t x) { return a < x && x < b; };
  return inside(c) != inside(d);
}

inline bool crossing(const Jump& a, const Jump& b) { return crossing(a.hole, {a.s(), a.t()}, {b.s(), b.t()}); }

/// The path of the cycle from anchors.front() to anchors.back() that meets the anchors in order.
/// Two anchors give the forward path.
inline std::vector<Vertex> cycle_segment(const std::vector<Vertex>& cyc, const std::vector<Vertex>& anchors) {
  if (anchors.size() < 2) throw InputError("cycle_segment needs two anchors");
  auto [fwd, bwd] = cycle_paths_between(cyc, anchors.front(), anchors.back());
  auto in_order = [&](const std::vector<Vertex>& seg) {
    std::size_t at = 0;
    for (Vertex a : anchors) {
      auto it = std::find(seg.begin() + static_cast<std::ptrdiff_t>(at), seg.end(), a);
      if (it == seg.end()) return false;
      at = static_cast<std::size_t>(it - seg.begin());
    }
    return true;
  };
  if (in_order(fwd)) return fwd;
  if (in_order(bwd)) return bwd;
  throw InputError("anchors are not in cyclic order");
}

enum class CrossOutcome { odd_k4, balanced_type_1_2, none };

inline std::string_view to_string(CrossOutcome o) {
  switch (o) {
    case CrossOutcome::odd_k4: return "odd_k4";
    case CrossOutcome::balanced_type_1_2: return "balanced_type_1_2";
    case CrossOutcome::none: return "none";
  }
  return "none";
}

struct CrossJumpResult {
  Verdict verdict = Verdict::not_applicable;
  CrossOutcome outcome = CrossOutcome::none;
  std::optional<K4Subdivision> subdivision;
  /// True when the subdivision lies inside G[V(C ∪ P1 ∪ P2)].
  bool local = false;
  std::string detail;
};

/// Crossing short jumps give an odd K4-subdivision or a balanced one of type (1,2). The search
/// runs on G[V(C ∪ P1 ∪ P2)] first and falls back to the whole graph through `cache`.
inline CrossJumpResult check_cross_short_jump(const Host& host, const Jump& p1, const Jump& p2, K4Cache& cache,
                                              Budget budget = {}) {
  if (p1.hole != p2.hole) throw InputError("jumps are over different holes");
  if (p1.kind != JumpKind::short_jump || p2.kind != JumpKind::short_jump) throw InputError("jumps must be short");
  if (!crossing(p1, p2)) throw InputError("jumps do not cross");
  CrossJumpResult r;
  if (!host.admits_lemmas()) {
    r.detail = "host is not a member";
    return r;
  }
  const Graph& g = host.graph();
  auto sub = induced_subgraph(g, VertexSet::of(p1.hole) | VertexSet::of(p1.path) | VertexSet::of(p2.path));
  auto take = [&](const K4Subdivision& h, CrossOutcome o, bool local) {
    r.verdict = Verdict::consistent;
    r.outcome = o;
    r.subdivision = h;
    r.local = local;
    r.detail = std::string(to_string(o)) + (local ? " inside C ∪ P1 ∪ P2" : " elsewhere in G");
    return r;
  };
  auto lodd = find_odd_k4(sub.graph, budget);
  if (lodd.found) return take(lift_k4(sub, *lodd.found), CrossOutcome::odd_k4, true);
  auto lbal = find_balanced_type_1_2(sub.graph, budget);
  if (lbal.found) return take(lift_k4(sub, *lbal.found), CrossOutcome::balanced_type_1_2, true);
  const auto& godd = cache.odd();
  if (godd.found) return take(*godd.found, CrossOutcome::odd_k4, false);
  const auto& gbal = cache.balanced_type_1_2();
  if (gbal.found) return take(*gbal.found, CrossOutcome::balanced_type_1_2, false);
  if (godd.proved_absent() && gbal.proved_absent()) {
    r.verdict = Verdict::violation;
    r.detail = "no odd or balanced type (1,2) K4-subdivision";
  } else {
    r.verdict = Verdict::unknown;
    r.detail = "subdivision search exceeded its budget";
  }
  return r;
}

/// Vertices of C lying in some jump hole over C, collected from every short jump.
struct JumpHoleCover {
  VertexSet covered;
  BudgetState budget_state = BudgetState::within;
};

inline JumpHoleCover jump_hole_cover(const Graph& g, const std::vector<Vertex>& hole, Budget budget = {}) {
  BudgetMeter meter(budget);
  JumpHoleCover out;
  for_each_chordal_path(g, hole, true, meter, [&](const std::vector<Vertex>& p) {
    Jump j = classify_jump(g, hole, p);
    out.covered |= VertexSet::of(j.across_side());
    return true;
  });
  out.budget_state = meter.state();
  return out;
}

/// Hypotheses on two jumps for the uncrossing statement: distinct end pairs, each short or local
/// across one vertex, and neither across side containing an end of the other jump inside it.
inline Check check_uncrossing_hypotheses(const Jump& p1, const Jump& p2) {
  if (p1.hole != p2.hole) return Check::fail("jumps are over different holes");
  auto ok_kind = [](const Jump& j) { return j.kind == JumpKind::short_jump || j.across_one_vertex(); };
  if (!ok_kind(p1) || !ok_kind(p2)) return Check::fail("each jump must be short or local across one vertex");
  auto ends = [](const Jump& j) { return std::pair{std::min(j.s(), j.t()), std::max(j.s(), j.t())}; };
  if (ends(p1) == ends(p2)) return Check::fail("jumps share both ends");
  auto avoids = [](const Jump& a, const Jump& b) {
    VertexSet inner = detail::side_interior(a.across_side());
    return !inner.contains(b.s()) && !inner.contains(b.t());
  };
  if (!avoids(p1, p2) || !avoids(p2, p1)) return Check::fail("an across side contains an end of the other jump");
  return Check::pass();
}

struct UncrossingResult {
  ClaimVerdict claim1, claim2;
  std::vector<Vertex> uncovered;
  std::optional<K4Subdivision> subdivision;
};

/// (1) two short jumps give an odd K4-subdivision; (2) at most two vertices of the two across
/// sides miss every jump hole over C. Needs ℓ ≥ 4.
inline UncrossingResult check_uncrossing_jumps(const Host& host, const Jump& p1, const Jump& p2, K4Cache& cache,
                                               Budget budget = {}) {
  if (auto c = check_uncrossing_hypotheses(p1, p2); !c) throw InputError(c.reason);
  UncrossingResult r;
  if (!host.admits_lemmas() || host.ell() < 4) {
    r.claim1.detail = r.claim2.detail = host.admits_lemmas() ? "needs ell >= 4" : "host is not a member";
    return r;
  }
  const Graph& g = host.graph();
  if (p1.kind == JumpKind::short_jump && p2.kind == JumpKind::short_jump) {
    auto sub = induced_subgraph(g, VertexSet::of(p1.hole) | VertexSet::of(p1.path) | VertexSet::of(p2.path));
    auto local = find_odd_k4(sub.graph, budget);
    if (local.found) {
      r.claim1 = {Verdict::consistent, "odd K4-subdivision inside C ∪ P1 ∪ P2"};
      r.subdivision = lift_k4(sub, *local.found);
    } else if (const auto& whole = cache.odd(); whole.found) {
      r.claim1 = {Verdict::consistent, "odd K4-subdivision elsewhere in G"};
      r.subdivision = whole.found;
    } else if (whole.proved_absent()) {
      r.claim1 = {Verdict::violation, "no odd K4-subdivision"};
    } else {
      r.claim1 = {Verdict::unknown, "odd K4-subdivision search exceeded its budget"};
    }
  } else {
    r.claim1.detail = "a jump is local";
  }

  auto cover = jump_hole_cover(g, p1.hole, budget);
  VertexSet sides = VertexSet::of(p1.across_side()) | VertexSet::of(p2.across_side());
  r.uncovered = (sides - cover.covered).to_vector();
  if (r.uncovered.size() <= 2)
    r.claim2 = {Verdict::consistent, std::to_string(r.uncovered.size()) + " uncovered"};
  else if (cover.budget_state != BudgetState::within)
    r.claim2 = {Verdict::unknown, "jump search exceeded its budget"};
  else
    r.claim2 = {Verdict::violation, std::to_string(r.uncovered.size()) + " uncovered"};
  return r;
}

}  // namespace oddhole
