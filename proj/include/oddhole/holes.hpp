#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "oddhole/graph.hpp"

namespace oddhole {

/// Shortest cycle of g, or empty when g is a forest.
inline std::vector<Vertex> shortest_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = SIZE_MAX;
  Vertex best_root = -1, best_u = -1, best_w = -1;
  std::vector<int> dist(n), parent(n);
  std::deque<Vertex> queue;
  for (Vertex r = 0; r < static_cast<Vertex>(n); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    queue.assign(1, r);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (static_cast<std::size_t>(2 * dist[u] + 1) >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (len < best) {
            best = len;
            best_root = r;
            best_u = u;
            best_w = w;
          }
        }
      }
    }
  }
  if (best == SIZE_MAX) return {};

  // Recompute the BFS tree of the winning root; at the minimum the two tree paths meet only at the root.
  std::fill(dist.begin(), dist.end(), -1);
  dist[best_root] = 0;
  parent[best_root] = -1;
  queue.assign(1, best_root);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
  }
  std::vector<Vertex> left, right;
  for (Vertex v = best_u; v != -1; v = parent[v]) left.push_back(v);
  for (Vertex v = best_w; v != -1; v = parent[v]) right.push_back(v);
  std::reverse(left.begin(), left.end());  // root .. u
  right.pop_back();                        // drop the root
  left.insert(left.end(), right.begin(), right.end());
  return canonical_cycle(std::move(left));
}

/// Minimum cycle length; nullopt means infinite (g is a forest).
inline std::optional<std::size_t> girth(const Graph& g) {
  auto c = shortest_cycle(g);
  if (c.empty()) return std::nullopt;
  return c.size();
}

struct HoleQuery {
  std::size_t min_length = 4;
  std::optional<std::size_t> max_length;
  bool odd_only = false;
};

namespace detail {

// Anchored DFS: every hole is grown from its least vertex `a` through its smaller cycle-neighbour p1,
// so it is reported once, already in canonical form. Partial paths stay induced; the closing vertex
// must be adjacent to a and larger than p1.
template <class Visitor>
class HoleSearch {
 public:
  HoleSearch(const Graph& g, const HoleQuery& q, BudgetMeter& meter, Visitor& visit)
      : g_(g), q_(q), meter_(meter), visit_(visit) {}

  SearchStatus run() {
    const auto n = static_cast<Vertex>(g_.num_vertices());
    for (Vertex a = 0; a < n && !done_; ++a) {
      if (g_.degree(a) < 2) continue;
      allowed_ = VertexSet::range(a + 1, n);
      for (Vertex p1 : g_.neighbors(a)) {
        if (p1 < a || done_) continue;
        closers_ = g_.neighborhood(a) & VertexSet::range(p1 + 1, n);
        path_.assign({a, p1});
        VertexSet forbidden{a};
        extend(forbidden);
      }
    }
    if (exceeded_) return SearchStatus::budget_exceeded;
    return stopped_ ? SearchStatus::stopped : SearchStatus::complete;
  }

 private:
  void extend(const VertexSet& forbidden) {
    if (!meter_.tick()) {
      exceeded_ = done_ = true;
      return;
    }
    const Vertex tip = path_.back();
    VertexSet cand = g_.neighborhood(tip) & allowed_;
    cand -= forbidden;
    VertexSet child_forbidden = forbidden | g_.neighborhood(tip);
    child_forbidden.insert(tip);
    cand.for_each([&](Vertex x) {
      if (done_) return;
      if (g_.adjacent(path_[0], x)) {
        if (path_.size() < 3 || !closers_.contains(x)) return;
        const std::size_t len = path_.size() + 1;
        if (len < q_.min_length || (q_.max_length && len > *q_.max_length)) return;
        if (q_.odd_only && len % 2 == 0) return;
        path_.push_back(x);
        if (!visit_(std::as_const(path_))) stopped_ = done_ = true;
        path_.pop_back();
        return;
      }
      auto extra = distance_to_closer(x, child_forbidden);
      if (!extra) return;
      if (q_.max_length && path_.size() + 1 + *extra > *q_.max_length) return;
      path_.push_back(x);
      extend(child_forbidden);
      path_.pop_back();
    });
  }

  // Fewest further vertices needed to close from x, ignoring inducedness beyond `forbidden`.
  std::optional<std::size_t> distance_to_closer(Vertex x, const VertexSet& forbidden) const {
    VertexSet region = allowed_ - forbidden;
    region.erase(x);
    VertexSet frontier{x};
    VertexSet targets = closers_ & region;
    for (std::size_t d = 1; !frontier.empty(); ++d) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g_.neighborhood(v); });
      next &= region;
      if (next.intersects(targets)) return d;
      next -= closers_;
      region -= next;
      frontier = next;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const HoleQuery& q_;
  BudgetMeter& meter_;
  Visitor& visit_;
  std::vector<Vertex> path_;
  VertexSet allowed_;
  VertexSet closers_;
  bool done_ = false;
  bool stopped_ = false;
  bool exceeded_ = false;
};

}  // namespace detail

/// Calls visit(const std::vector<Vertex>&) with each hole matching q, in canonical form
/// (least vertex first, then its smaller neighbour). Returning false from visit stops the search.
template <class Visitor>
SearchStatus for_each_hole(const Graph& g, const HoleQuery& q, BudgetMeter& meter, Visitor&& visit) {
  detail::HoleSearch<std::remove_reference_t<Visitor>> search(g, q, meter, visit);
  return search.run();
}

inline bool hole_order(const Hole& a, const Hole& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices() < b.vertices();
}

struct HoleList {
  std::vector<Hole> holes;  // sorted by (length, vertex sequence)
  BudgetState budget_state = BudgetState::within;
  std::uint64_t nodes = 0;
  bool complete() const { return budget_state == BudgetState::within; }
};

inline HoleList enumerate_holes(const Graph& g, const HoleQuery& q = {}, Budget budget = {}) {
  BudgetMeter meter(budget);
  HoleList out;
  for_each_hole(g, q, meter, [&](const std::vector<Vertex>& c) {
    out.holes.push_back(Hole{Cycle{c, {}}, c.size() % 2 == 1});
    return true;
  });
  std::sort(out.holes.begin(), out.holes.end(), hole_order);
  out.budget_state = meter.state();
  out.nodes = meter.used();
  return out;
}

inline HoleList enumerate_holes(const Graph& g, std::optional<std::size_t> max_len, Budget budget = {}) {
  HoleQuery q;
  q.max_length = max_len;
  return enumerate_holes(g, q, budget);
}

inline HoleList odd_holes(const Graph& g, Budget budget = {}) {
  HoleQuery q;
  q.odd_only = true;
  return enumerate_holes(g, q, budget);
}

struct HoleSpectrum {
  std::optional<std::size_t> girth;
  std::map<std::size_t, std::size_t> odd_lengths;  // length -> number of holes
  std::map<std::size_t, std::size_t> even_lengths;
  std::vector<Hole> holes;  // filled only when requested
  BudgetState budget_state = BudgetState::within;

  std::size_t distinct_odd_lengths() const { return odd_lengths.size(); }
};

inline HoleSpectrum odd_hole_spectrum(const Graph& g, Budget budget = {}, bool keep_holes = false) {
  HoleSpectrum s;
  s.girth = girth(g);
  HoleList all = enumerate_holes(g, HoleQuery{}, budget);
  for (const Hole& h : all.holes) ++(h.odd ? s.odd_lengths : s.even_lengths)[h.length()];
  if (keep_holes) s.holes = std::move(all.holes);
  s.budget_state = all.budget_state;
  return s;
}

enum class Membership { member, non_member, unknown };

inline std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::unknown: return "unknown";
  }
  return "unknown";
}

/// Verdict for G ∈ G_ℓ (girth exactly 2ℓ+1 and every odd hole has length 2ℓ+1).
struct MembershipVerdict {
  int ell = 2;
  Membership status = Membership::unknown;
  std::optional<std::size_t> girth;
  /// A shortest cycle, attached whenever the girth disqualifies g.
  std::vector<Vertex> girth_cycle;
  /// An odd hole of length >= 2ℓ+3.
  std::optional<Hole> long_odd_hole;
  BudgetState budget_state = BudgetState::within;
  std::uint64_t nodes = 0;

  bool member() const { return status == Membership::member; }
};

inline MembershipVerdict check_membership(const Graph& g, int ell, Budget budget = {}) {
  if (ell < 2) throw InputError("ell must be at least 2");
  MembershipVerdict v;
  v.ell = ell;
  auto cyc = shortest_cycle(g);
  const auto target = static_cast<std::size_t>(2 * ell + 1);
  if (!cyc.empty()) v.girth = cyc.size();
  if (cyc.size() != target) {
    v.status = Membership::non_member;
    v.girth_cycle = std::move(cyc);
    return v;
  }
  HoleQuery q;
  q.min_length = target + 2;
  q.odd_only = true;
  BudgetMeter meter(budget);
  std::optional<std::vector<Vertex>> found;
  auto status = for_each_hole(g, q, meter, [&](const std::vector<Vertex>& c) {
    found = c;
    return false;
  });
  v.nodes = meter.used();
  v.budget_state = meter.state();
  if (found) {
    v.status = Membership::non_member;
    v.long_odd_hole = Hole{Cycle{*found, {}}, true};
  } else if (status == SearchStatus::budget_exceeded) {
    v.status = Membership::unknown;
  } else {
    v.status = Membership::member;
  }
  return v;
}

/// A graph together with a claim about its membership in G_ℓ. Lemma checkers only evaluate
/// their conclusions on hosts that are verified members or explicitly assumed ones (negative controls).
/// The graph must outlive the Host.
class Host {
 public:
  enum class Status { verified, assumed, rejected, unknown };

  static Host verify(const Graph& g, int ell, Budget budget = {}) {
    auto v = check_membership(g, ell, budget);
    Status s = v.status == Membership::member       ? Status::verified
               : v.status == Membership::non_member ? Status::rejected
                                                    : Status::unknown;
    return Host(g, ell, s);
  }

  /// Treats g as a member without checking.
  static Host assume(const Graph& g, int ell) {
    if (ell < 2) throw InputError("ell must be at least 2");
    return Host(g, ell, Status::assumed);
  }

  const Graph& graph() const { return *g_; }
  int ell() const { return ell_; }
  Status status() const { return status_; }
  bool admits_lemmas() const { return status_ == Status::verified || status_ == Status::assumed; }

 private:
  Host(const Graph& g, int ell, Status s) : g_(&g), ell_(ell), status_(s) {}

  const Graph* g_;
  int ell_;
  Status status_;
};

inline std::string_view to_string(Host::Status s) {
  switch (s) {
    case Host::Status::verified: return "verified";
    case Host::Status::assumed: return "assumed";
    case Host::Status::rejected: return "rejected";
    case Host::Status::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace oddhole
