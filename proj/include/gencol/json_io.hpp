#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gencol/error.hpp"
#include "gencol/formats.hpp"
#include "gencol/properties.hpp"
#include "gencol/ramsey.hpp"
#include "gencol/recognizer.hpp"
#include "gencol/reductions.hpp"

namespace gencol {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

inline Json to_json(const RecognizerTrace& t) {
  return Json{
      {"step2_iterations", t.step2_iterations},
      {"step2_candidates_examined", t.step2_candidates_examined},
      {"step2_peak_candidates", t.step2_peak_candidates},
      {"step3_candidates_examined", t.step3_candidates_examined},
      {"tau_used", t.tau_used},
      {"membership_checks", t.membership_checks},
      {"oracle_subsets_examined", t.oracle_subsets_examined},
  };
}

inline Json bound_json(const std::optional<CliqueBound>& b) {
  if (!b || !b->bounded()) return nullptr;
  return *b->n;
}

/// Decision record: {member, certificate, trace, p_spec, q_spec, tau, n, m, method, order}.
/// Unknown or unbounded n / m and the oracle's tau are null.
inline Json decision_json(const Decision& d, const Graph& g, const PropertySpec& p_spec, const PropertySpec& q_spec) {
  Json out;
  out["member"] = d.member;
  if (d.certificate)
    out["certificate"] = Json{{"part_a", to_json(d.certificate->part_a)}, {"part_rest", to_json(d.certificate->part_rest)}};
  else
    out["certificate"] = nullptr;
  out["trace"] = to_json(d.trace);
  out["p_spec"] = p_spec.to_string();
  out["q_spec"] = q_spec.to_string();
  out["tau"] = d.tau ? Json(*d.tau) : Json(nullptr);
  out["n"] = bound_json(d.clique_bound);
  out["m"] = bound_json(d.co_clique_bound);
  out["method"] = d.method == Method::algorithm_a ? "algorithm_a" : "oracle";
  out["order"] = g.order();
  return out;
}

inline Json tau_json(const RamseyBound& b) {
  return Json{{"m", b.m}, {"n", b.n}, {"tau", b.tau}, {"exact", b.exact}};
}

// ---------------------------------------------------------------------------
// Witness files: {host: graph6, parts: [[indices]...], specs: [spec strings],
// anchor: index, additive_count: n}. additive_count may be omitted when there
// are exactly two parts.

inline Json witness_json(const UniquePartitionWitness& w) {
  Json parts = Json::array();
  for (const auto& p : w.parts) parts.push_back(to_json(p));
  Json specs = Json::array();
  for (const auto& s : w.specs) specs.push_back(s.to_string());
  return Json{{"host", emit_graph6(w.host)},   {"parts", parts},        {"specs", specs},
              {"anchor", w.anchor},            {"additive_count", w.additive_count}};
}

inline UniquePartitionWitness witness_from_json(const Json& j) {
  try {
    Graph host = parse_graph6(j.at("host").get<std::string>());
    std::vector<VertexSet> parts;
    for (const auto& part : j.at("parts")) {
      VertexSet s(host.order());
      for (const auto& v : part) {
        auto index = v.get<std::size_t>();
        if (index >= host.order())
          throw InvalidArgument("witness: part member " + std::to_string(index) + " outside the host");
        s.insert(index);
      }
      parts.push_back(std::move(s));
    }
    std::vector<PropertySpec> specs;
    for (const auto& s : j.at("specs")) specs.push_back(parse_spec(s.get<std::string>()));
    std::size_t additive_count = 1;
    if (j.contains("additive_count"))
      additive_count = j.at("additive_count").get<std::size_t>();
    else if (parts.size() != 2)
      throw InvalidArgument("witness: additive_count is required when there are more than two parts");
    return make_witness(std::move(host), std::move(parts), std::move(specs), additive_count,
                        j.at("anchor").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("witness: malformed JSON: ") + e.what());
  }
}

}  // namespace gencol
