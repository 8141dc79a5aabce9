#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "oddhole/cuts.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/k4.hpp"

namespace oddhole {

enum class DecomposeOutcome { odd_k4, balanced_type_1_2, p3_cut, degree2_vertex };

inline std::string_view to_string(DecomposeOutcome o) {
  switch (o) {
    case DecomposeOutcome::odd_k4: return "odd_k4";
    case DecomposeOutcome::balanced_type_1_2: return "balanced_type_1_2";
    case DecomposeOutcome::p3_cut: return "p3_cut";
    case DecomposeOutcome::degree2_vertex: return "degree2_vertex";
  }
  return "odd_k4";
}

enum class DecomposeStatus { certified, not_applicable, unknown, violation };

inline std::string_view to_string(DecomposeStatus s) {
  switch (s) {
    case DecomposeStatus::certified: return "certified";
    case DecomposeStatus::not_applicable: return "not_applicable";
    case DecomposeStatus::unknown: return "unknown";
    case DecomposeStatus::violation: return "violation";
  }
  return "unknown";
}

/// One of the four outcomes with its payload. `scope` is the component searched for the cut and
/// the subdivisions: the component of a shortest cycle.
struct DecomposeCertificate {
  DecomposeOutcome outcome = DecomposeOutcome::degree2_vertex;
  std::optional<Vertex> degree2;
  std::optional<CutCertificate> cut;
  std::optional<K4Subdivision> k4;
  std::vector<Vertex> scope;
};

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::unknown;
  std::optional<DecomposeCertificate> certificate;
  MembershipVerdict membership;
  std::string detail;
  std::uint64_t nodes = 0;
};

/// Searches degree-2 vertices, then P3-cuts, then odd and balanced type (1,2) subdivisions.
/// Each stage gets its own `budget`. A completed search with no outcome is reported as a violation.
inline DecomposeResult decompose(const Graph& g, int ell, Budget budget = {}) {
  DecomposeResult r;
  if (ell < 2) throw InputError("ell must be at least 2");
  r.membership = check_membership(g, ell, budget);
  r.nodes = r.membership.nodes;
  if (ell < 5) {
    r.status = DecomposeStatus::not_applicable;
    r.detail = "decomposition needs ell >= 5";
    return r;
  }
  if (r.membership.status == Membership::non_member) {
    r.status = DecomposeStatus::not_applicable;
    r.detail = "not a member of G_" + std::to_string(ell);
    return r;
  }
  if (r.membership.status == Membership::unknown) {
    r.status = DecomposeStatus::unknown;
    r.detail = "membership check exceeded its budget";
    return r;
  }

  auto certify = [&](DecomposeCertificate c, std::string detail) {
    r.status = DecomposeStatus::certified;
    r.certificate = std::move(c);
    r.detail = std::move(detail);
    return r;
  };

  DecomposeCertificate c;
  if (auto d2 = degree_two_vertices(g); !d2.empty()) {
    c.outcome = DecomposeOutcome::degree2_vertex;
    c.degree2 = d2.front();
    return certify(c, "vertex " + std::to_string(d2.front()) + " has degree 2");
  }

  auto cyc = shortest_cycle(g);
  for (auto& comp : components(g))
    if (std::find(comp.begin(), comp.end(), cyc.front()) != comp.end()) c.scope = comp;
  auto sub = induced_subgraph(g, c.scope);

  if (auto cut = find_path_cut(sub.graph, 3)) {
    for (auto& v : cut->path) v = sub.original(v);
    for (auto& v : cut->side_a) v = sub.original(v);
    for (auto& v : cut->side_b) v = sub.original(v);
    c.outcome = DecomposeOutcome::p3_cut;
    c.cut = std::move(*cut);
    return certify(c, "P3-cut found");
  }

  bool exhausted = true;
  auto odd = find_odd_k4(sub.graph, budget);
  r.nodes += odd.nodes;
  if (odd.found) {
    c.outcome = DecomposeOutcome::odd_k4;
    c.k4 = lift_k4(sub, *odd.found);
    return certify(c, "odd K4-subdivision found");
  }
  exhausted &= odd.status == SearchStatus::complete;

  auto bal = find_balanced_type_1_2(sub.graph, budget);
  r.nodes += bal.nodes;
  if (bal.found) {
    c.outcome = DecomposeOutcome::balanced_type_1_2;
    c.k4 = lift_k4(sub, *bal.found);
    return certify(c, "balanced K4-subdivision of type (1,2) found");
  }
  exhausted &= bal.status == SearchStatus::complete;

  if (exhausted) {
    r.status = DecomposeStatus::violation;
    r.detail = "no degree-2 vertex, P3-cut, odd or balanced type (1,2) K4-subdivision";
  } else {
    r.status = DecomposeStatus::unknown;
    r.detail = "subdivision search exceeded its budget";
  }
  return r;
}

}  // namespace oddhole
