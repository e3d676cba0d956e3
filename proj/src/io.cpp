#include "vres/io.hpp"

#include <algorithm>
#include <sstream>

#include "vres/error.hpp"

namespace vres {

using nlohmann::json;

namespace {

ToricContext parse_context(const json& j, std::string& shorthand) {
  if (j.is_string()) {
    std::istringstream in(j.get<std::string>());
    std::string tag;
    int n = -1, k = -1;
    in >> tag >> n >> k;
    if (tag != "P" || in.fail() || n < 0 || k < 0)
      throw ArgumentError("context shorthand must look like \"P 2 1\", got \"" +
                          j.get<std::string>() + "\"");
    std::string rest;
    if (in >> rest) throw ArgumentError("trailing text in context shorthand: " + rest);
    shorthand = "P " + std::to_string(n) + " " + std::to_string(k);
    return product_of_projective_spaces(n, k);
  }
  if (!j.is_object())
    throw ArgumentError("context must be a \"P n k\" string or an object");
  ToricContext ctx;
  if (!j.contains("variables") || !j["variables"].is_array())
    throw ArgumentError("context.variables must be an array of names");
  for (const auto& v : j["variables"]) ctx.variables.push_back(v.get<std::string>());
  if (!j.contains("irrelevant") || !j["irrelevant"].is_array())
    throw ArgumentError("context.irrelevant must be an array of monomials");
  std::vector<Monomial> gens;
  for (const auto& g : j["irrelevant"])
    gens.push_back(parse_monomial(g.get<std::string>(), ctx.variables));
  ctx.irrelevant = MonomialIdeal(gens, static_cast<int>(ctx.variables.size()));
  if (j.contains("grading")) {
    for (const auto& row : j["grading"]) {
      std::vector<int> r;
      for (const auto& e : row) r.push_back(e.get<int>());
      if (r.size() != ctx.variables.size())
        throw ArgumentError("grading row length does not match the variable count");
      ctx.picard_grading.push_back(std::move(r));
    }
  }
  return ctx;
}

Face face_from_key(const SimplicialComplex& k, const std::string& key) {
  std::vector<std::string> names;
  std::string token;
  std::istringstream in(key);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) names.push_back(token);
  }
  return k.face_by_names(names);
}

std::string face_key(const SimplicialComplex& k, const Face& f) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += k.vertex_names()[f[i]];
  }
  return out;
}

}  // namespace

InputDocument parse_document(const json& j) {
  if (!j.is_object()) throw ArgumentError("input document must be a JSON object");
  InputDocument doc;
  if (!j.contains("context")) throw ArgumentError("missing \"context\"");
  doc.context = parse_context(j["context"], doc.shorthand);

  if (!j.contains("complex") || !j["complex"].is_object())
    throw ArgumentError("missing \"complex\" object");
  const json& cx = j["complex"];
  if (!cx.contains("vertices") || !cx["vertices"].is_array())
    throw ArgumentError("complex.vertices must be an array of names");
  std::vector<std::string> vertices;
  for (const auto& v : cx["vertices"]) vertices.push_back(v.get<std::string>());

  if (!cx.contains("facets") || !cx["facets"].is_array())
    throw ArgumentError("complex.facets must be an array of vertex-name lists");
  std::vector<Face> facets;
  for (const auto& facet : cx["facets"]) {
    Face f;
    for (const auto& name : facet) {
      std::string s = name.get<std::string>();
      int idx = -1;
      for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == s) {
          idx = static_cast<int>(i);
          break;
        }
      if (idx < 0) throw ArgumentError("facet uses unknown vertex \"" + s + "\"");
      f.push_back(idx);
    }
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  SimplicialComplex complex(vertices, facets);

  if (j.contains("face_labels")) {
    if (!j["face_labels"].is_object())
      throw ArgumentError("face_labels must map \"v0,v1\" keys to monomials");
    std::map<Face, Monomial> labels;
    for (const auto& [key, value] : j["face_labels"].items())
      labels[face_from_key(complex, key)] =
          parse_monomial(value.get<std::string>(), doc.context.variables);
    doc.labeled = LabeledComplex::with_face_labels(complex, std::move(labels));
  } else {
    if (!j.contains("labels") || !j["labels"].is_object())
      throw ArgumentError("missing \"labels\" (vertex → monomial)");
    std::map<std::string, Monomial> labels;
    for (const auto& [key, value] : j["labels"].items())
      labels[key] = parse_monomial(value.get<std::string>(), doc.context.variables);
    doc.labeled = LabeledComplex::from_vertex_labels(complex, labels);
  }
  if (doc.labeled.nvars() != doc.context.nvars())
    throw ArgumentError("labels and context disagree on the ring");

  if (j.contains("field")) doc.field = FieldSpec::parse(j["field"].get<std::string>());
  return doc;
}

InputDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

json document_json(const InputDocument& doc) {
  json j;
  if (!doc.shorthand.empty()) {
    j["context"] = doc.shorthand;
  } else {
    json ctx;
    ctx["variables"] = doc.context.variables;
    json gens = json::array();
    for (const Monomial& g : doc.context.irrelevant.generators())
      gens.push_back(render_monomial(g, doc.context.variables));
    ctx["irrelevant"] = gens;
    if (!doc.context.picard_grading.empty()) ctx["grading"] = doc.context.picard_grading;
    j["context"] = ctx;
  }

  const SimplicialComplex& k = doc.labeled.complex();
  json cx;
  cx["vertices"] = k.vertex_names();
  json facets = json::array();
  for (const Face& f : k.facets()) facets.push_back(k.face_names(f));
  cx["facets"] = facets;
  j["complex"] = cx;

  if (doc.labeled.lcm_labeled()) {
    json labels;
    for (int v = 0; v < k.vertex_count(); ++v) {
      // vertices appearing in no face get the neutral label
      Monomial label = k.has_face(Face{v}) ? doc.labeled.vertex_label(v)
                                           : Monomial::one(doc.labeled.nvars());
      labels[k.vertex_names()[v]] = render_monomial(label, doc.context.variables);
    }
    j["labels"] = labels;
  } else {
    json labels;
    for (const auto& [face, label] : doc.labeled.labels())
      labels[face_key(k, face)] = render_monomial(label, doc.context.variables);
    j["face_labels"] = labels;
  }
  if (doc.field) j["field"] = doc.field->to_string();
  return j;
}

InputDocument with_labeling(const InputDocument& doc, LabeledComplex l) {
  InputDocument out;
  out.context = doc.context;
  out.shorthand = doc.shorthand;
  out.field = doc.field;
  out.labeled = std::move(l);
  return out;
}

}  // namespace vres
