#include "expcycles/serialize.hpp"

#include <cmath>

namespace expcycles {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::exact: return "exact";
    case CertificateKind::spectral: return "spectral";
    case CertificateKind::refuted: return "refuted";
  }
  return "unknown";
}

std::string_view to_string(BroomVariant v) { return v == BroomVariant::broad ? "broad" : "binary"; }

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const Path& p) { return Json{{"length", p.length()}, {"vertices", p.vertices}}; }

Json to_json(const CycleCertificate& c) { return Json{{"length", c.length()}, {"vertices", c.vertices()}}; }

Json to_json(const RootedTree& t) {
  Json parent = Json::array();
  for (Vertex v : t.members()) {
    if (v != t.root()) parent.push_back({v, t.parent(v)});
  }
  return Json{{"root", t.size() ? Json(t.root()) : Json(nullptr)}, {"size", t.size()}, {"parent", std::move(parent)}};
}

Json to_json(const ExpansionCertificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"alpha", c.value}, {"k", c.k}};
  if (c.exact_value) j["exact"] = c.exact_value->to_string();
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  if (c.lambda) j["lambda"] = *c.lambda;
  return j;
}

namespace {

Json pair_json(const std::optional<SetPair>& p) {
  if (!p) return nullptr;
  return Json{{"a", to_json(p->a)}, {"b", to_json(p->b)}};
}

Json optional_set(const VertexSet& s) { return s.universe() ? to_json(s) : Json(nullptr); }

Json cycles_json(const std::vector<CycleCertificate>& cycles) {
  Json out = Json::array();
  for (const auto& c : cycles) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json to_json(const BetaCheck& c, double beta) {
  return Json{{"beta", beta}, {"holds", c.holds}, {"exhaustive", c.exhaustive}, {"witness", pair_json(c.witness)}};
}

Json to_json(const HaxellCheck& c) {
  return Json{{"holds", c.holds},
              {"exhaustive", c.exhaustive},
              {"condition", c.condition},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

Json to_json(const Spectrum& s, bool witnesses) {
  Json j{{"lengths", s.lengths}, {"complete", s.complete}};
  if (witnesses) {
    Json w = Json::object();
    for (const auto& [len, cyc] : s.witnesses) w[std::to_string(len)] = Json{{"length", len}, {"vertices", cyc}};
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json to_json(const CheckLog& log) {
  Json out = Json::array();
  for (const auto& c : log.checks()) {
    out.push_back({{"stage", c.stage},
                   {"name", c.name},
                   {"value", c.value},
                   {"bound", c.bound},
                   {"relation", c.at_least ? ">=" : "<="},
                   {"slack", c.slack()},
                   {"holds", c.holds()}});
  }
  return out;
}

Json to_json(const PipelineConstants& c) {
  return Json{{"mode", c.mode == ConstantsMode::paper ? "paper" : "practical"},
              {"alpha", c.alpha},
              {"delta", c.delta},
              {"c0", c.c0},
              {"c1", c.c1},
              {"c2", c.c2},
              {"c3", std::isfinite(c.c3) ? Json(c.c3) : Json(nullptr)},
              {"log2_c3", c.log2_c3},
              {"mu", c.mu},
              {"a", c.a},
              {"a1", c.a1},
              {"a2", c.a2},
              {"log2_a2", c.log2_a2},
              {"skeleton_fraction", c.skeleton_fraction},
              {"absorb_fraction", c.absorb_fraction},
              {"stage_fraction", c.stage_fraction},
              {"level_fraction", c.level_fraction},
              {"eps", c.eps}};
}

Json to_json(const Thm2Trace& t) {
  std::vector<int> lengths;
  for (const auto& c : t.cycles) lengths.push_back(c.length());
  return Json{{"alpha", t.alpha},
              {"k", t.k},
              {"lengths", lengths},
              {"cycles", cycles_json(t.cycles)},
              {"t", to_json(t.t)},
              {"p", to_json(t.p)},
              {"x0", optional_set(t.x0)},
              {"t1", to_json(t.t1)},
              {"x1_level", t.x1_level},
              {"x1", optional_set(t.x1)},
              {"t3", to_json(t.t3)},
              {"v", t.v},
              {"y", optional_set(t.y)},
              {"x2", optional_set(t.x2)},
              {"u", t.u},
              {"x3_forward", t.x3_forward},
              {"x3_order", t.x3_order},
              {"checks", to_json(t.log)}};
}

Json to_json(const Thm1Trace& t) {
  const auto& key = t.key;
  Json paths = Json::array();
  for (const auto& p : t.q_family.paths) paths.push_back(p.vertices);
  return Json{{"alpha", t.alpha},
              {"n", t.n},
              {"m", t.m},
              {"skeleton", to_json(t.t)},
              {"skeleton_size", t.skeleton_size},
              {"absorb_rounds", t.absorb_rounds},
              {"u1", optional_set(t.u1)},
              {"z", optional_set(t.z)},
              {"x0", optional_set(t.x0)},
              {"x1", optional_set(t.x1)},
              {"y", t.y},
              {"key_tree",
               {{"tree", to_json(key.tree)},
                {"k0", key.k0},
                {"k1", key.k1},
                {"k2", key.k2},
                {"t1", key.t1},
                {"t2", key.t2},
                {"x", optional_set(key.x)},
                {"w", optional_set(key.w)},
                {"u2", optional_set(key.u2)},
                {"u2_exhaustive", key.u2_exhaustive},
                {"checks", to_json(key.log)}}},
              {"q_family", paths},
              {"x2", optional_set(t.x2)},
              {"x0_vertex", t.x0_vertex},
              {"b_x0", t.b_x0},
              {"b_level", t.b_level},
              {"b_count", t.b_count},
              {"y_elim", optional_set(t.y_elim)},
              {"a_good", optional_set(t.a_good)},
              {"a_bad", optional_set(t.a_bad)},
              {"v0", t.v0},
              {"k_component", optional_set(t.k_component)},
              {"u3", optional_set(t.u3)},
              {"d", optional_set(t.d)},
              {"u0", t.u0},
              {"w0", t.w0},
              {"q_prime", to_json(t.q_prime)},
              {"p_pieces", t.p_pieces},
              {"p", to_json(t.p)},
              {"q", to_json(t.q)},
              {"key_constants", to_json(t.key_constants)},
              {"checks", to_json(t.log)}};
}

Json to_json(const Thm1Run& r) {
  Json targets = Json::array();
  for (const auto& o : r.outcomes) {
    Json j{{"ell", o.ell}};
    if (o.cycle) {
      j["cycle"] = to_json(*o.cycle);
    } else {
      j["error"] = o.error ? Json(to_string(*o.error)) : Json(nullptr);
      j["message"] = o.message;
    }
    targets.push_back(std::move(j));
  }
  return Json{{"targets", std::move(targets)}, {"trace", to_json(r.trace)}};
}

Json to_json(const Thm3Result& r) {
  const auto& p = r.params;
  return Json{{"beta", p.beta},
              {"n", p.n},
              {"ell", r.ell},
              {"variant", to_string(r.variant)},
              {"cycle", to_json(r.cycle)},
              {"params",
               {{"k", p.k},
                {"t", p.t},
                {"r", p.r},
                {"b1", p.b1},
                {"b2", p.b2},
                {"theorem_lo", p.theorem_lo},
                {"theorem_hi", p.theorem_hi},
                {"broad_ceiling", p.broad_ceiling}}},
              {"broom", {{"k", r.shape.k}, {"t", r.shape.t}, {"p", r.shape.p}, {"vertices", r.shape.vertex_count()}}},
              {"h", to_json(r.h)},
              {"h_exhaustive", r.h_exhaustive},
              {"embedding", r.embedding},
              {"closing", {r.closing.first, r.closing.second}}};
}

Json error_json(const Error& e) {
  Json j{{"error", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const StageFailure*>(&e)) {
    j["stage"] = s->stage();
    j["diagnostic"] = s->diagnostic();
  } else if (const auto* b = dynamic_cast<const BetaGraphRefuted*>(&e)) {
    j["deleted"] = to_json(b->deleted());
    j["witness"] = pair_json(b->witness());
  } else if (const auto* c = dynamic_cast<const NoClosingEdge*>(&e)) {
    j["leaves1"] = to_json(c->leaves1());
    j["leaves2"] = to_json(c->leaves2());
  }
  return j;
}

namespace {

void collect(const nlohmann::json& j, std::vector<std::vector<Vertex>>& out) {
  if (j.is_object()) {
    const auto len = j.find("length");
    const auto verts = j.find("vertices");
    // Paths also carry length + vertices, but their length is one less.
    if (len != j.end() && verts != j.end() && len->is_number_integer() && verts->is_array() &&
        len->get<long long>() == static_cast<long long>(verts->size())) {
      out.push_back(verts->get<std::vector<Vertex>>());
      return;
    }
    for (const auto& [key, value] : j.items()) collect(value, out);
  } else if (j.is_array()) {
    for (const auto& value : j) collect(value, out);
  }
}

}  // namespace

std::vector<std::vector<Vertex>> collect_cycles(const nlohmann::json& j) {
  std::vector<std::vector<Vertex>> out;
  collect(j, out);
  return out;
}

}  // namespace expcycles
