#include "monounion/io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"
#include "monounion/errors.hpp"

namespace monounion {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json element_doc(const SemigroupSpec& spec, Element e) {
  return ordered_json{{"gen", spec.name(e.gen)}, {"exp", e.exp}};
}

ordered_json edges_doc(const SemigroupSpec& spec,
                       const PersistenceGraph& graph) {
  ordered_json edges = ordered_json::array();
  for (const auto& [key, e] : graph.edges()) {
    auto [y, z] = key;
    edges.push_back(ordered_json{
        {"y", spec.name(y)},
        {"z", spec.name(z)},
        {"m_num", e.multiplier.num()},
        {"m_den", e.multiplier.den()},
        {"witness",
         ordered_json{{"t", e.witness.start_exp},
                      {"q", e.witness.letter_count},
                      {"s", e.witness.end_exp}}},
    });
  }
  return edges;
}

ordered_json weights_doc(const SemigroupSpec& spec, const Weights& w) {
  ordered_json doc = ordered_json::object();
  for (gen_t g = 0; g < spec.size(); ++g) doc[spec.name(g)] = w.of(g);
  return doc;
}

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::int64_t require_int(const ordered_json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw DocumentError(std::string("missing or non-integer field '") + key +
                        "'");
  return doc[key].get<std::int64_t>();
}

std::string require_string(const ordered_json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw DocumentError(std::string("missing or non-string field '") + key +
                        "'");
  return doc[key].get<std::string>();
}

}  // namespace

SemigroupSpec parse_spec(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("spec document must be an object");
  if (require_int(doc, "format") != 1)
    throw DocumentError("unsupported document format");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw DocumentError("missing or non-array field 'generators'");
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string())
      throw DocumentError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  if (!doc.contains("products") || !doc["products"].is_array())
    throw DocumentError("missing or non-array field 'products'");
  std::vector<ProductRule> products;
  for (const auto& p : doc["products"]) {
    if (!p.is_object())
      throw DocumentError("product records must be objects");
    ProductRule rule;
    rule.left = require_string(p, "left");
    rule.right = require_string(p, "right");
    rule.gen = require_string(p, "result_gen");
    rule.exp = require_int(p, "result_exp");
    products.push_back(std::move(rule));
  }
  return SemigroupSpec(std::move(names), products);
}

std::string serialize_spec(const SemigroupSpec& spec) {
  ordered_json doc;
  doc["format"] = 1;
  doc["generators"] = ordered_json::array();
  for (gen_t g = 0; g < spec.size(); ++g)
    doc["generators"].push_back(spec.name(g));
  doc["products"] = ordered_json::array();
  for (gen_t x = 0; x < spec.size(); ++x)
    for (gen_t y = 0; y < spec.size(); ++y) {
      if (x == y) continue;
      Element e = spec.table(x, y);
      doc["products"].push_back(ordered_json{
          {"left", spec.name(x)},
          {"right", spec.name(y)},
          {"result_gen", spec.name(e.gen)},
          {"result_exp", e.exp},
      });
    }
  return finish(doc);
}

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  return LoadedSpec{parse_spec(text), sha256_hex(text)};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1)
    throw DocumentError("content digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string serialize_validation(const SemigroupSpec& spec,
                                 const ValidationReport& report,
                                 const std::string& digest) {
  ordered_json doc;
  doc["format"] = 1;
  doc["spec_digest"] = digest;
  doc["accepted"] = report.accepted();
  doc["window"] = report.window;
  doc["depth_bound"] = report.depth_bound;
  doc["associativity"] = ordered_json::array();
  for (const AssocViolation& v : report.associativity_violations)
    doc["associativity"].push_back(ordered_json{
        {"u", element_doc(spec, v.u)},
        {"v", element_doc(spec, v.v)},
        {"w", element_doc(spec, v.w)},
        {"left", element_doc(spec, v.left)},
        {"right", element_doc(spec, v.right)},
    });
  doc["monotonicity"] = ordered_json::array();
  for (const MonoViolation& v : report.monotonicity_violations)
    doc["monotonicity"].push_back(ordered_json{
        {"x", spec.name(v.x)}, {"i", v.i}, {"j", v.j}, {"k", v.k}});
  doc["depth_failures"] = report.depth_failures;
  return finish(doc);
}

std::string serialize_analysis(const SemigroupSpec& spec, const Analysis& a,
                               const std::string& digest) {
  ordered_json doc;
  doc["format"] = 1;
  doc["spec_digest"] = digest;
  doc["edges"] = edges_doc(spec, a.graph);

  doc["classes"] = ordered_json::array();
  for (const auto& members : a.cond.classes) {
    ordered_json names = ordered_json::array();
    for (gen_t g : members) names.push_back(spec.name(g));
    doc["classes"].push_back(names);
  }
  doc["order"] = a.cond.order;

  ordered_json sinks = ordered_json::array();
  for (std::size_t c = 0; c < a.cond.classes.size(); ++c) {
    bool sink = true;
    for (gen_t y : a.cond.classes[c])
      for (gen_t z = 0; z < spec.size() && sink; ++z)
        if (a.cond.class_of[static_cast<std::size_t>(z)] !=
                static_cast<int>(c) &&
            a.graph.has_edge(y, z))
          sink = false;
    if (sink) sinks.push_back(c);
  }
  doc["sinks"] = sinks;
  doc["weights"] = weights_doc(spec, a.weights);

  doc["trajectories"] = ordered_json::array();
  for (const Trajectory& t : a.trajectories) {
    ordered_json targets = ordered_json::array();
    for (const TargetSummary& s : t.targets)
      targets.push_back(ordered_json{
          {"target", spec.name(s.target)},
          {"first_index", s.first_index},
          {"first_exp", s.first_exp},
          {"gap", s.gap},
          {"m_num", s.multiplier.num()},
          {"m_den", s.multiplier.den()},
      });
    ordered_json entry{
        {"start", element_doc(spec, t.start)},
        {"letter", spec.name(t.letter)},
        {"horizon", t.horizon},
        {"period", t.period ? ordered_json(*t.period) : ordered_json(nullptr)},
        {"period_start", t.period_start},
        {"targets", targets},
    };
    doc["trajectories"].push_back(entry);
  }
  return finish(doc);
}

std::string serialize_certificate(const SemigroupSpec& spec,
                                  const PersistenceGraph& graph,
                                  const GrowthCertificate& cert,
                                  const std::string& digest) {
  ordered_json doc;
  doc["format"] = 1;
  doc["spec_digest"] = digest;
  doc["edges"] = edges_doc(spec, graph);
  doc["weights"] = weights_doc(spec, cert.d);
  doc["K"] = cert.k.value;
  doc["L_num"] = cert.density.num();
  doc["L_den"] = cert.density.den();
  doc["balls"] = ordered_json::array();
  for (const BallRow& row : cert.rows)
    doc["balls"].push_back(ordered_json{
        {"m", row.m}, {"count", row.count}, {"bound", row.bound}});
  doc["verdict"] = cert.verdict ? "pass" : "fail";
  return finish(doc);
}

std::string ball_table_csv(const GrowthCertificate& cert) {
  std::ostringstream out;
  out << "m,count,bound\n";
  for (const BallRow& row : cert.rows)
    out << row.m << "," << row.count << "," << row.bound << "\n";
  return out.str();
}

std::string growth_csv(
    const std::vector<std::pair<exp_t, std::int64_t>>& rows) {
  std::ostringstream out;
  out << "m,count\n";
  for (const auto& [m, count] : rows) out << m << "," << count << "\n";
  return out.str();
}

}  // namespace monounion
