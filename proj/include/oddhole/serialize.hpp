#pragma once

#include <json.hpp>

#include "oddhole/coloring.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/decompose.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/jumps.hpp"
#include "oddhole/k4.hpp"
#include "oddhole/structures.hpp"

namespace oddhole {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

inline Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const auto& [u, v] : es) a.push_back({u, v});
  return a;
}

inline Json to_json(const K4Labeling& l) {
  return Json{{"P1", l.p1}, {"P2", l.p2}, {"Q1", l.q1}, {"Q2", l.q2}, {"L1", l.l1}, {"L2", l.l2},
              {"C1", l.c1}, {"C2", l.c2}, {"C3", l.c3}, {"C4", l.c4}};
}

inline Json to_json(const K4Subdivision& h) {
  Json faces = Json::array(), classes = Json::array();
  for (int f = 0; f < 4; ++f) {
    faces.push_back(h.faces[f]);
    classes.push_back(to_string(h.face_class[f]));
  }
  Json j{{"kind", to_string(h.kind)},
         {"branch_vertices", h.branch},
         {"arrises", h.arrises},
         {"faces", faces},
         {"face_classes", classes},
         {"lengths", h.lengths()},
         {"induced", h.induced}};
  j["labeling"] = h.labeling ? to_json(*h.labeling) : Json(nullptr);
  return j;
}

inline Json to_json(const CutCertificate& c) {
  Json j{{"kind", to_string(c.kind)}};
  if (c.kind == CutKind::two_edge_cut)
    j["edges"] = edges_json(c.edges);
  else
    j["path"] = c.path;
  j["component_split"] = {c.side_a, c.side_b};
  return j;
}

inline Json to_json(const LowerBound& lb) {
  return Json{{"kind", to_string(lb.kind)}, {"value", lb.value}, {"witness", lb.witness}};
}

inline Json to_json(const ColoringResult& r) {
  Json j{{"status", to_string(r.status)}, {"k", r.k}};
  j["assignment"] = r.assignment;
  j["proof_of_lower_bound"] = to_json(r.lower_bound);
  j["nodes"] = r.nodes;
  return j;
}

inline Json to_json(const CriticalityResult& r, int k) {
  Json j{{"k", k}, {"decided", r.decided}, {"critical", r.critical}, {"chromatic", to_json(r.chromatic)}};
  j["vertex_colorings"] = r.vertex_colorings;
  j["failing_vertex"] = r.failing_vertex ? Json(*r.failing_vertex) : Json(nullptr);
  j["reason"] = r.reason;
  return j;
}

inline Json to_json(const DecomposeCertificate& c) {
  Json j{{"outcome", to_string(c.outcome)}};
  switch (c.outcome) {
    case DecomposeOutcome::degree2_vertex: j["payload"] = {{"vertex", *c.degree2}}; break;
    case DecomposeOutcome::p3_cut: j["payload"] = to_json(*c.cut); break;
    case DecomposeOutcome::odd_k4:
    case DecomposeOutcome::balanced_type_1_2: j["payload"] = to_json(*c.k4); break;
  }
  j["scope"] = c.scope;
  return j;
}

inline Json to_json(const DecomposeResult& r) {
  Json j{{"status", to_string(r.status)}, {"membership", to_string(r.membership.status)}};
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["detail"] = r.detail;
  j["nodes"] = r.nodes;
  return j;
}

inline Json to_json(const MembershipVerdict& v) {
  Json j{{"ell", v.ell}, {"member", v.member()}, {"status", to_string(v.status)}};
  j["girth"] = v.girth ? Json(*v.girth) : Json(nullptr);
  if (v.long_odd_hole)
    j["witness"] = {{"kind", "long_odd_hole"}, {"cycle", v.long_odd_hole->vertices()}};
  else if (!v.girth_cycle.empty())
    j["witness"] = {{"kind", "girth_cycle"}, {"cycle", v.girth_cycle}};
  else
    j["witness"] = nullptr;
  j["budget_state"] = to_string(v.budget_state);
  return j;
}

inline Json to_json(const ChordalPath& cp) {
  return Json{{"kind", "chordal_path"}, {"hole", cp.hole}, {"path", cp.path.vertices}, {"P1", cp.p1}, {"P2", cp.p2},
              {"lengths", {cp.len_p(), cp.len_p1(), cp.len_p2()}}};
}

inline Json to_json(const Jump& j) {
  Json o{{"ends", {j.s(), j.t()}}, {"path", j.path}, {"class", to_string(j.kind)}};
  o["across"] = j.across == 0 ? Json(nullptr) : Json(j.across_side());
  o["across_one_vertex"] = j.across_one_vertex();
  return o;
}

inline Json to_json(const ThetaPairResult& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"induced", r.induced}, {"sym_diff", r.sym_diff}};
  j["subdivision"] = r.subdivision ? to_json(*r.subdivision) : Json(nullptr);
  j["reason"] = r.reason;
  return j;
}

inline Json to_json(const ClaimVerdict& c) { return Json{{"verdict", to_string(c.verdict)}, {"detail", c.detail}}; }

}  // namespace oddhole
