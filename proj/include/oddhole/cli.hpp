#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "oddhole/generators.hpp"
#include "oddhole/graph6.hpp"
#include "oddhole/serialize.hpp"
#include "oddhole/suites.hpp"
#include "oddhole/verify.hpp"

namespace oddhole::cli {

/// Exit codes: 0 success, 1 a violation or failed replay was reported, 2 bad input or usage.
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

namespace detail {

struct Common {
  std::string input;
  std::string out;
  std::uint64_t budget = Budget::from_env().max_nodes;
};

inline void add_common(CLI::App* sub, Common& c, bool input = true) {
  if (input) sub->add_option("input", c.input, "graph6 file; '-' or omitted reads stdin");
  sub->add_option("--out", c.out, "write JSONL here instead of stdout");
  sub->add_option("--budget", c.budget, "search-node cap per search (default: $ODDHOLE_BUDGET or 20000000)");
}

inline std::vector<Graph6Record> read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_graph6_stream(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_graph6_stream(f);
}

/// Stdout or the --out file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot write '" + path + "'");
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }
  void line(const Json& j) { *os_ << j.dump() << '\n'; }

 private:
  std::ostream* os_;
  std::unique_ptr<std::ofstream> file_;
};

inline int resolve_ell(std::optional<int> given, const Graph& g) {
  if (given) return *given;
  if (auto e = harness::ell_from_girth(g)) return *e;
  throw InputError("no --ell given and the girth is not odd and at least 5");
}

inline std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in '" + s + "'");
    }
  }
  return out;
}

}  // namespace detail

/// Runs the command line with the given streams; returns the process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd-hole structure analysis for graphs of girth 2l+1"};
  app.require_subcommand(1);
  using detail::Common;

  // membership
  Common mc;
  int m_ell = 2;
  auto* membership = app.add_subcommand("membership", "decide membership in G_l");
  detail::add_common(membership, mc);
  membership->add_option("--ell", m_ell, "l (at least 2)")->required();

  // holes
  Common hc;
  std::size_t h_min = 4;
  std::optional<std::size_t> h_max;
  bool h_odd = false;
  auto* holes = app.add_subcommand("holes", "enumerate holes");
  detail::add_common(holes, hc);
  holes->add_option("--max-len", h_max, "longest hole to report");
  holes->add_option("--min-len", h_min, "shortest hole to report");
  holes->add_flag("--odd", h_odd, "odd holes only");

  // structures
  Common sc;
  std::string s_find;
  std::optional<int> s_ell;
  std::optional<std::size_t> s_hole;
  bool s_all = false;
  auto* structures = app.add_subcommand("structures", "find K4-subdivisions, theta pairs or chordal paths");
  detail::add_common(structures, sc);
  structures->add_option("--find", s_find, "k4, theta or chordal")->required()->check(CLI::IsMember({"k4", "theta", "chordal"}));
  structures->add_option("--ell", s_ell, "l for the theta check (default from the girth)");
  structures->add_option("--hole-index", s_hole, "restrict chordal paths to this odd hole");
  structures->add_flag("--non-induced", s_all, "also report K4-subdivisions that are not induced");

  // jumps
  Common jc;
  std::optional<std::size_t> j_hole;
  std::optional<int> j_ell;
  bool j_lemmas = false;
  auto* jumps = app.add_subcommand("jumps", "jumps over odd holes");
  detail::add_common(jumps, jc);
  jumps->add_option("--hole-index", j_hole, "index into the sorted odd holes (default: all)");
  jumps->add_option("--ell", j_ell, "l for --lemmas (default from the girth)");
  jumps->add_flag("--lemmas", j_lemmas, "attach jump lemma verdicts to every jump");

  // decompose
  Common dc;
  int d_ell = 5;
  auto* decomp = app.add_subcommand("decompose", "four-way decomposition certificate for members with l >= 5");
  detail::add_common(decomp, dc);
  decomp->add_option("--ell", d_ell, "l")->required();

  // color
  Common cc;
  int c_max = 8;
  auto* color = app.add_subcommand("color", "exact chromatic number");
  detail::add_common(color, cc);
  color->add_option("--max-k", c_max, "largest number of colours tried (at most 8)");

  // critical
  Common kc;
  int k_k = 4;
  auto* critical = app.add_subcommand("critical", "k-vertex-criticality");
  detail::add_common(critical, kc);
  critical->add_option("--k", k_k, "k")->required();

  // suite and conjecture share their options
  struct SuiteArgs {
    Common c;
    std::string id;
    std::uint64_t seed = 0;
    std::size_t count = 30;
    unsigned jobs = 1;
    bool timing = false;
    std::optional<int> assume_ell, ell;
  };
  SuiteArgs sa, ca;
  auto add_suite_opts = [](CLI::App* sub, SuiteArgs& a) {
    detail::add_common(sub, a.c, false);
    sub->add_option("input", a.c.input, "graph6 corpus; omitted uses the generated default corpus");
    sub->add_option("--id", a.id, "suite id")->required();
    sub->add_option("--seed", a.seed, "corpus seed");
    sub->add_option("--count", a.count, "generated members per l");
    sub->add_option("--jobs", a.jobs, "worker threads");
    sub->add_flag("--timing", a.timing, "record wall time in the summary");
    sub->add_option("--ell", a.ell, "l for every input graph (default from the girth)");
    sub->add_option("--assume-ell", a.assume_ell, "treat every graph as a member of G_l without checking");
  };
  auto* suite = app.add_subcommand("suite", "run a lemma suite");
  add_suite_opts(suite, sa);
  auto* conj = app.add_subcommand("conjecture", "check a colourability conjecture");
  add_suite_opts(conj, ca);

  // generate
  Common gc;
  std::string g_kind, g_arrises = "1,1,1,1,1,1", g_faces, g_name, g_path;
  gen::GeneratorSpec spec;
  auto* generate = app.add_subcommand("generate", "write generated graphs as graph6");
  detail::add_common(generate, gc, false);
  generate->add_option("--kind", g_kind, "odd_cycle, subdivided_k4, augmented_member, named or graph6_stream")->required();
  generate->add_option("--ell", spec.ell, "l");
  generate->add_option("--arrises", g_arrises, "six arris lengths, comma separated");
  generate->add_option("--face-parity", g_faces, "declared face parities, four of 0 (even) or 1 (odd)");
  generate->add_option("--steps", spec.steps, "augmentation steps");
  generate->add_option("--seed", spec.seed, "seed");
  generate->add_option("--name", spec.name, "petersen, grotzsch or wheel_k");
  generate->add_option("--path", spec.path, "graph6 stream to read");
  generate->add_option("--count", spec.count, "number of members");
  generate->add_option("--min-n", spec.min_vertices, "smallest member");
  generate->add_option("--max-n", spec.max_vertices, "largest member");

  // replay
  std::string r_input;
  auto* replay = app.add_subcommand("replay", "re-evaluate reproduction bundles");
  replay->add_option("input", r_input, "JSON lines holding bundles or instance records; '-' or omitted reads stdin");

  // list
  auto* list = app.add_subcommand("list", "list suite and conjecture ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitInput;
  }

  try {
    if (*membership) {
      detail::Sink sink(mc.out, out);
      auto recs = detail::read_input(mc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        Json j{{"input_index", i}};
        j.update(to_json(check_membership(rec.graph, m_ell, Budget{mc.budget})));
        sink.line(j);
      }
      return 0;
    }

    if (*holes) {
      detail::Sink sink(hc.out, out);
      HoleQuery q;
      q.min_length = h_min;
      q.max_length = h_max;
      q.odd_only = h_odd;
      auto recs = detail::read_input(hc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        auto list = enumerate_holes(rec.graph, q, Budget{hc.budget});
        Json lengths = Json::object();
        for (const auto& h : list.holes) lengths[std::to_string(h.length())] = lengths.value(std::to_string(h.length()), 0) + 1;
        Json hs = Json::array();
        for (const auto& h : list.holes) hs.push_back(h.vertices());
        auto gi = girth(rec.graph);
        sink.line(Json{{"input_index", i},
                       {"girth", gi ? Json(*gi) : Json(nullptr)},
                       {"lengths", lengths},
                       {"holes", hs},
                       {"budget_state", to_string(list.budget_state)}});
      }
      return 0;
    }

    if (*structures) {
      detail::Sink sink(sc.out, out);
      auto recs = detail::read_input(sc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        const Graph& g = rec.graph;
        Budget b{sc.budget};
        auto emit = [&](Json j) {
          Json o{{"input_index", i}};
          o.update(j);
          sink.line(o);
        };
        bool exceeded = false;
        if (s_find == "k4") {
          auto l = find_k4_subdivisions(g, !s_all, b);
          for (const auto& h : l.subdivisions) emit(to_json(h));
          exceeded = l.budget_state != BudgetState::within;
        } else {
          auto oh = odd_holes(g, b);
          exceeded = !oh.complete();
          if (s_find == "theta") {
            Host host = Host::verify(g, detail::resolve_ell(s_ell, g), b);
            for (std::size_t a = 0; a < oh.holes.size(); ++a)
              for (std::size_t c = a + 1; c < oh.holes.size(); ++c) {
                const auto& c1 = oh.holes[a].vertices();
                const auto& c2 = oh.holes[c].vertices();
                if (!theta_split(c1, c2)) continue;
                Json t{{"kind", "theta"}, {"holes", {c1, c2}}};
                t.update(to_json(check_theta_pair(host, c1, c2)));
                emit(t);
              }
          } else {
            for (std::size_t k = 0; k < oh.holes.size(); ++k) {
              if (s_hole && *s_hole != k) continue;
              auto ps = find_chordal_paths(g, oh.holes[k], b);
              exceeded |= !ps.complete();
              for (const auto& p : ps.paths) {
                Json t = to_json(p);
                t["hole_index"] = k;
                emit(t);
              }
            }
            if (s_hole && *s_hole >= oh.holes.size()) throw InputError("hole index out of range");
          }
        }
        if (exceeded) emit(Json{{"kind", "budget_exceeded"}});
      }
      return 0;
    }

    if (*jumps) {
      detail::Sink sink(jc.out, out);
      auto recs = detail::read_input(jc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        const Graph& g = rec.graph;
        Budget b{jc.budget};
        auto oh = odd_holes(g, b);
        if (j_hole && *j_hole >= oh.holes.size()) throw InputError("hole index out of range");
        std::optional<Host> host;
        if (j_lemmas) host = Host::verify(g, detail::resolve_ell(j_ell, g), b);
        bool exceeded = !oh.complete();
        for (std::size_t k = 0; k < oh.holes.size(); ++k) {
          if (j_hole && *j_hole != k) continue;
          auto js = find_jumps(g, oh.holes[k], b);
          exceeded |= !js.complete();
          for (const auto& jp : js.jumps) {
            Json o{{"input_index", i}, {"hole_index", k}};
            o.update(to_json(jp));
            if (host) {
              Json lem = Json::object();
              if (jp.kind != JumpKind::other) {
                auto pc = jump_parity_check(*host, jp);
                lem["L4.1"] = {{"verdict", to_string(pc.verdict)}, {"detail", pc.detail}};
              }
              if (jp.kind != JumpKind::local) {
                auto r = extract_short_jump(*host, g, jp);
                lem["L4.2"] = {{"verdict", to_string(r.verdict)}, {"detail", r.detail}};
              } else {
                auto r = extract_local_one_or_short(*host, g, jp);
                lem["L4.3"] = {{"verdict", to_string(r.verdict)}, {"detail", r.detail}};
              }
              o["lemmas"] = lem;
            }
            sink.line(o);
          }
        }
        if (exceeded) sink.line(Json{{"input_index", i}, {"kind", "budget_exceeded"}});
      }
      return 0;
    }

    if (*decomp) {
      detail::Sink sink(dc.out, out);
      int code = 0;
      auto recs = detail::read_input(dc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        auto r = decompose(rec.graph, d_ell, Budget{dc.budget});
        Json o{{"input_index", i}};
        o.update(to_json(r));
        if (r.certificate) {
          auto c = verify_certificate(rec.graph, *r.certificate);
          o["verified"] = c.ok;
          if (!c.ok) code = kExitViolation;
        }
        if (r.status == DecomposeStatus::violation) code = kExitViolation;
        sink.line(o);
      }
      return code;
    }

    if (*color) {
      detail::Sink sink(cc.out, out);
      auto recs = detail::read_input(cc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        auto r = chromatic_number(rec.graph, c_max, Budget{cc.budget});
        Json o{{"input_index", i}};
        o.update(to_json(r));
        o["verified"] = verify_certificate(rec.graph, r).ok;
        sink.line(o);
      }
      return 0;
    }

    if (*critical) {
      detail::Sink sink(kc.out, out);
      auto recs = detail::read_input(kc.input, in);
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& rec = recs[i];
        auto r = is_k_vertex_critical(rec.graph, k_k, Budget{kc.budget});
        Json o{{"input_index", i}};
        o.update(to_json(r, k_k));
        o["verified"] = verify_certificate(rec.graph, r, k_k).ok;
        sink.line(o);
      }
      return 0;
    }

    for (auto [sub, a] : {std::pair{suite, &sa}, std::pair{conj, &ca}}) {
      if (!*sub) continue;
      const auto& def = harness::find_suite(a->id);
      bool is_conj = sub == conj;
      bool listed = false;
      for (const auto& d : is_conj ? harness::conjectures() : harness::suites()) listed |= d.id == a->id;
      if (!listed) throw InputError("'" + a->id + "' is not a " + (is_conj ? "conjecture" : "suite") + " id");
      std::vector<harness::CorpusItem> corpus;
      if (a->c.input.empty())
        corpus = harness::default_corpus(def, a->count, a->seed);
      else
        for (auto& rec : detail::read_input(a->c.input, in)) corpus.push_back({rec.graph, a->ell});
      harness::SuiteOptions opt{Budget{a->c.budget}, a->seed, a->jobs, a->assume_ell};
      auto rep = harness::run_suite(def, corpus, opt);
      detail::Sink sink(a->c.out, out);
      harness::write_report(*sink, rep, a->timing);
      return rep.count(Verdict::violation) ? kExitViolation : 0;
    }

    if (*generate) {
      spec.kind = gen::generator_kind_from_string(g_kind);
      auto ar = detail::parse_list(g_arrises);
      if (ar.size() != 6) throw InputError("--arrises needs six lengths");
      std::copy(ar.begin(), ar.end(), spec.arrises.begin());
      if (!g_faces.empty()) {
        auto fp = detail::parse_list(g_faces);
        if (fp.size() != 4) throw InputError("--face-parity needs four entries");
        std::array<bool, 4> odd{};
        for (std::size_t f = 0; f < 4; ++f) odd[f] = fp[f] != 0;
        spec.face_odd = odd;
      }
      auto graphs = gen::generate(spec);
      detail::Sink sink(gc.out, out);
      for (const auto& g : graphs) *sink << to_graph6(g) << '\n';
      return 0;
    }

    if (*replay) {
      std::unique_ptr<std::ifstream> file;
      std::istream* src = &in;
      if (!r_input.empty() && r_input != "-") {
        file = std::make_unique<std::ifstream>(r_input);
        if (!*file) throw InputError("cannot open '" + r_input + "'");
        src = file.get();
      }
      int code = 0;
      std::string line;
      std::size_t replayed = 0;
      while (std::getline(*src, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        if (j.contains("bundle")) j = j["bundle"];
        if (!j.contains("graph6")) continue;
        auto r = harness::replay(j);
        ++replayed;
        if (!r.reproduced()) code = kExitViolation;
        out << Json{{"suite", j["suite"]}, {"expected", to_string(r.expected)}, {"actual", to_string(r.actual)},
                    {"reproduced", r.reproduced()}, {"detail", r.detail}}
                   .dump()
            << '\n';
      }
      if (replayed == 0) throw InputError("no bundles found");
      return code;
    }

    if (*list) {
      for (const auto* l : {&harness::suites(), &harness::conjectures()})
        for (const auto& d : *l)
          out << Json{{"id", d.id}, {"kind", l == &harness::suites() ? "suite" : "conjecture"}, {"summary", d.summary}}.dump()
              << '\n';
      return 0;
    }
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

inline int run(int argc, const char* const* argv) { return run(argc, argv, std::cin, std::cout, std::cerr); }

}  // namespace oddhole::cli
