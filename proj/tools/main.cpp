#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vres/bipyramid.hpp"
#include "vres/chain.hpp"
#include "vres/error.hpp"
#include "vres/homology.hpp"
#include "vres/io.hpp"
#include "vres/subdivision.hpp"
#include "vres/virtualcheck.hpp"

using nlohmann::json;

namespace {

vres::InputDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vres::ArgumentError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return vres::parse_document_text(buf.str());
}

// Precedence: --field flag, then the document's field, then VRES_FIELD,
// then exact rationals.
vres::FieldSpec resolve_field(const std::string& flag, const vres::InputDocument& doc) {
  if (!flag.empty()) return vres::FieldSpec::parse(flag);
  if (doc.field) return *doc.field;
  if (const char* env = std::getenv("VRES_FIELD")) {
    if (*env) return vres::FieldSpec::parse(env);
  }
  return vres::FieldSpec::rationals();
}

std::string face_text(const vres::SimplicialComplex& k, const vres::Face& f) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += k.vertex_names()[f[i]];
  }
  return out;
}

json cycle_json(const vres::SimplicialComplex& k, const vres::Cycle& cycle) {
  json out = json::array();
  for (const vres::CycleTerm& t : cycle)
    out.push_back(json::array({face_text(k, t.face), t.coefficient}));
  return out;
}

std::string cycle_text(const vres::SimplicialComplex& k, const vres::Cycle& cycle) {
  std::string out;
  bool first = true;
  for (const vres::CycleTerm& t : cycle) {
    std::string coeff = t.coefficient;
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += "[" + face_text(k, t.face) + "]";
  }
  return out.empty() ? "0" : out;
}

std::string ideal_text(const vres::MonomialIdeal& ideal,
                       const std::vector<std::string>& names) {
  if (ideal.is_zero()) return "<0>";
  std::string out = "<";
  const auto& gens = ideal.generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += vres::render_monomial(gens[i], names);
  }
  return out + ">";
}

json ideal_json(const vres::MonomialIdeal& ideal, const std::vector<std::string>& names) {
  json out = json::array();
  for (const vres::Monomial& g : ideal.generators())
    out.push_back(vres::render_monomial(g, names));
  return out;
}

vres::Face parse_face_arg(const vres::SimplicialComplex& k, const std::string& arg) {
  std::vector<std::string> names;
  std::string token;
  std::istringstream in(arg);
  while (std::getline(in, token, ','))
    if (!token.empty()) names.push_back(token);
  return k.face_by_names(names);
}

struct Output {
  json machine;
  std::string human;
};

void emit(const Output& out, bool human, bool verbose) {
  if (human)
    std::cout << out.human;
  else
    std::cout << out.machine.dump(2) << "\n";
  if (verbose) std::cerr << out.human;
}

Output run_check(const vres::InputDocument& doc, const vres::FieldSpec& field) {
  const vres::LabeledComplex& l = doc.labeled;
  const auto& vars = doc.context.variables;
  vres::Verdict v = vres::check_virtual(l, doc.context, field);
  vres::HomologyReport table = vres::homology_table(l, vars, field);
  vres::FreeChainComplex f = vres::FreeChainComplex::build(l);

  json j;
  j["command"] = "check";
  j["field"] = field.to_string();
  j["free"] = v.is_free;
  if (!v.is_free)
    j["free_witness"] = {
        {"monomial", vres::render_monomial(*v.free_check.witness_degree, vars)},
        {"index", v.free_check.witness_index}};
  j["virtual"] = v.is_virtual;
  json pg = json::array();
  for (const vres::GeneratorCheck& g : v.per_generator) {
    json e;
    e["generator"] = vres::render_monomial(g.generator, vars);
    e["free_after_truncation"] = g.free_after_truncation;
    if (!g.free_after_truncation) {
      e["witness"] = {{"monomial", vres::render_monomial(*g.truncated_witness, vars)},
                      {"index", g.witness_index}};
      e["persistent"] = vres::render_monomial(*g.persistent_degree, vars);
    }
    pg.push_back(e);
  }
  j["per_generator"] = pg;
  json hom = json::array();
  for (const vres::HomologyEntry& e : table.entries) {
    json he;
    he["index"] = e.index;
    he["monomial"] = vres::render_monomial(e.degree, vars);
    he["degree"] = e.degree.exponents();
    he["dim"] = e.dimension;
    json reps = json::array();
    for (const vres::Cycle& c : e.representatives) reps.push_back(cycle_json(l.complex(), c));
    he["representatives"] = reps;
    hom.push_back(he);
  }
  j["homology"] = hom;
  j["ranks"] = f.ranks();

  std::ostringstream h;
  h << "field: " << field.to_string() << "\n";
  h << "virtual: " << (v.is_virtual ? "true" : "false") << "\n";
  h << "free: " << (v.is_free ? "true" : "false") << "\n";
  if (!v.is_free)
    h << "witness: m = " << vres::render_monomial(*v.free_check.witness_degree, vars)
      << " (simplicial index " << v.free_check.witness_index << ")\n";
  h << "ranks:";
  for (int r : f.ranks()) h << " " << r;
  h << "\n";
  for (const vres::HomologyEntry& e : table.entries) {
    h << "H_" << e.index << " @ " << vres::render_monomial(e.degree, vars) << " dim "
      << e.dimension << "\n";
    for (const vres::Cycle& c : e.representatives)
      h << "  " << cycle_text(l.complex(), c) << "\n";
  }
  return {j, h.str()};
}

json plan_json(const vres::SubdivisionPlan& plan, const vres::InputDocument& doc) {
  json p;
  json face = json::array();
  for (int v : plan.omega) face.push_back(doc.labeled.complex().vertex_names()[v]);
  p["face"] = face;
  p["new_vertex"] = plan.new_vertex_name;
  p["label"] = vres::render_monomial(plan.label, doc.context.variables);
  p["divides_face_label"] = plan.divides_face_label;
  p["in_saturation"] = plan.in_saturation;
  p["compatible"] = plan.virtual_compatible();
  return p;
}

Output run_subdivide(const vres::InputDocument& doc, const vres::FieldSpec& field,
                     const std::string& face_arg, const std::string& label_arg,
                     const std::string& name, bool verify, const std::string& outfile) {
  const auto& vars = doc.context.variables;
  vres::Face omega = parse_face_arg(doc.labeled.complex(), face_arg);
  vres::Monomial label = vres::parse_monomial(label_arg, vars);
  vres::SubdivisionPlan plan =
      vres::plan_subdivision(doc.labeled, omega, label, doc.context, name);
  if (!plan.virtual_compatible()) {
    if (!plan.divides_face_label)
      throw vres::ArgumentError(
          "subdivision is not virtual-compatible: condition 1 fails (label does not "
          "divide the face label " +
          vres::render_monomial(doc.labeled.label(omega), vars) + ")");
    throw vres::ArgumentError(
        "subdivision is not virtual-compatible: condition 2 fails (label is not in "
        "the saturation of the face's vertex-label ideal)");
  }
  vres::LabeledComplex lp = vres::apply_subdivision(doc.labeled, plan);
  vres::InputDocument subdoc = vres::with_labeling(doc, lp);

  json j;
  j["command"] = "subdivide";
  j["field"] = field.to_string();
  j["plan"] = plan_json(plan, doc);
  j["document"] = vres::document_json(subdoc);

  std::ostringstream h;
  h << "plan: face {" << face_arg << "}, new vertex " << plan.new_vertex_name << ", label "
    << vres::render_monomial(plan.label, vars) << "\n";
  h << "condition 1 (divides face label): " << (plan.divides_face_label ? "true" : "false")
    << "\n";
  h << "condition 2 (in saturation): " << (plan.in_saturation ? "true" : "false") << "\n";

  if (verify) {
    vres::ReductionReport red = vres::verify_reduction(doc.labeled, lp, plan, field);
    json hyp;
    hyp["pass"] = red.hypothesis.pass;
    hyp["degrees_checked"] = red.hypothesis.degrees_checked;
    json fails = json::array();
    for (const vres::HypothesisFailure& f : red.hypothesis.failures)
      fails.push_back({{"monomial", vres::render_monomial(f.degree, vars)},
                       {"index", f.index}});
    hyp["failures"] = fails;
    j["hypothesis"] = hyp;
    json rj;
    rj["inequality_holds"] = red.inequality_holds;
    rj["strictness_holds"] = red.strictness_holds;
    json rows = json::array();
    for (const vres::ReductionRow& r : red.rows)
      rows.push_back({{"monomial", vres::render_monomial(r.degree, vars)},
                      {"index", r.index},
                      {"before", r.before},
                      {"after", r.after},
                      {"link_dim", r.link_dim},
                      {"strict_required", r.strict_required}});
    rj["rows"] = rows;
    j["reduction"] = rj;

    h << "hypothesis: " << (red.hypothesis.pass ? "pass" : "fail") << " ("
      << red.hypothesis.degrees_checked << " degrees checked)\n";
    for (const vres::HypothesisFailure& f : red.hypothesis.failures)
      h << "  not injective at m = " << vres::render_monomial(f.degree, vars)
        << ", j = " << f.index << "\n";
    for (const vres::ReductionRow& r : red.rows)
      h << "  H_" << r.index << " @ " << vres::render_monomial(r.degree, vars) << ": "
        << r.before << " -> " << r.after << (r.strict_required ? " [strict]" : "") << "\n";
  }

  if (!outfile.empty()) {
    std::ofstream out(outfile);
    if (!out) throw vres::ArgumentError("cannot write " + outfile);
    out << vres::document_json(subdoc).dump(2) << "\n";
    h << "document written to " << outfile << "\n";
  }
  return {j, h.str()};
}

Output run_saturate(const vres::InputDocument& doc) {
  const auto& vars = doc.context.variables;
  vres::MonomialIdeal ideal = doc.labeled.vertex_label_ideal();
  vres::MonomialIdeal sat = ideal.saturate(doc.context.irrelevant);
  json j;
  j["command"] = "saturate";
  j["ideal"] = ideal_json(ideal, vars);
  j["irrelevant"] = ideal_json(doc.context.irrelevant, vars);
  j["saturation"] = ideal_json(sat, vars);
  std::ostringstream h;
  h << "I = " << ideal_text(ideal, vars) << "\n";
  h << "B = " << ideal_text(doc.context.irrelevant, vars) << "\n";
  h << "I : B^inf = " << ideal_text(sat, vars) << "\n";
  return {j, h.str()};
}

Output run_classify(const vres::InputDocument& doc, const vres::FieldSpec& field) {
  const auto& vars = doc.context.variables;
  vres::BipyramidClassification cls = vres::classify(doc.labeled, doc.context, field);
  json j;
  j["command"] = "bipyramid";
  j["action"] = "classify";
  j["field"] = field.to_string();
  j["verdict"] = vres::to_string(cls.verdict);
  j["base"] = cls.base;
  j["apexes"] = json::array({cls.apexes.first, cls.apexes.second});
  j["apex_lcm"] = vres::render_monomial(cls.apex_lcm, vars);
  std::ostringstream h;
  h << "verdict: " << vres::to_string(cls.verdict) << "\n";
  h << "apexes: " << cls.apexes.first << ", " << cls.apexes.second << " (lcm "
    << vres::render_monomial(cls.apex_lcm, vars) << ")\n";
  if (cls.dividing_vertex) {
    j["dividing_vertex"] = *cls.dividing_vertex;
    h << "base label dividing the apex lcm: " << *cls.dividing_vertex << "\n";
  }
  if (cls.verdict == vres::BipyramidClassification::Verdict::virtual_case2) {
    j["swapped"] = cls.swapped;
    json assign = json::array();
    for (int var : cls.assignment) assign.push_back(vars[var]);
    j["assignment"] = assign;
    j["p"] = cls.p;
    json ms = json::array();
    for (const vres::Monomial& m : cls.m) ms.push_back(vres::render_monomial(m, vars));
    j["m"] = ms;
    for (size_t i = 0; i < cls.base.size(); ++i)
      h << "  " << cls.base[i] << ": " << vars[cls.assignment[i]] << "^" << cls.p[i]
        << " * " << vres::render_monomial(cls.m[i], vars) << "\n";
  }
  return {j, h.str()};
}

Output run_eliminate(const vres::InputDocument& doc, const vres::FieldSpec& field,
                     const std::string& outfile) {
  const auto& vars = doc.context.variables;
  vres::LabeledComplex lp = vres::eliminate_homology(doc.labeled, doc.context, field);
  vres::InputDocument subdoc = vres::with_labeling(doc, lp);
  const auto& names = lp.complex().vertex_names();
  const std::string& new_name = names.back();
  vres::Monomial new_label = lp.vertex_label(lp.complex().vertex_count() - 1);

  json j;
  j["command"] = "bipyramid";
  j["action"] = "eliminate";
  j["field"] = field.to_string();
  j["new_vertex"] = new_name;
  j["new_label"] = vres::render_monomial(new_label, vars);
  j["document"] = vres::document_json(subdoc);
  std::ostringstream h;
  h << "subdivided at the base; new vertex " << new_name << " labeled "
    << vres::render_monomial(new_label, vars) << "\n";
  h << "result is a free resolution\n";
  if (!outfile.empty()) {
    std::ofstream out(outfile);
    if (!out) throw vres::ArgumentError("cannot write " + outfile);
    out << vres::document_json(subdoc).dump(2) << "\n";
    h << "document written to " << outfile << "\n";
  }
  return {j, h.str()};
}

Output run_standard(int n, int k, const std::string& outfile) {
  vres::LabeledComplex l = vres::standard_virtual_labeling(n, k);
  vres::InputDocument doc;
  doc.context = vres::product_of_projective_spaces(n, k);
  doc.shorthand = "P " + std::to_string(n) + " " + std::to_string(k);
  doc.labeled = std::move(l);
  json j = vres::document_json(doc);
  std::ostringstream h;
  h << "bipyramid over the " << k << "-simplex with the standard virtual-not-free "
    << "labeling over P^" << n << " x P^" << k << "\n";
  if (!outfile.empty()) {
    std::ofstream out(outfile);
    if (!out) throw vres::ArgumentError("cannot write " + outfile);
    out << j.dump(2) << "\n";
    h << "document written to " << outfile << "\n";
  }
  return {j, h.str()};
}

Output run_matrices(const vres::InputDocument& doc) {
  vres::FreeChainComplex f = vres::FreeChainComplex::build(doc.labeled);
  std::string text = vres::render_matrices(f, doc.context.variables);
  json j;
  j["command"] = "matrices";
  j["ranks"] = f.ranks();
  j["text"] = text;
  return {j, text};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for monomial virtual resolutions over products of "
               "projective spaces"};
  app.require_subcommand(1);
  std::string field_flag;
  bool human = false;
  bool verbose = false;
  app.add_option("--field", field_flag, "coefficient field: rational | gf(p) | p");
  app.add_flag("--human", human, "human-readable output on stdout instead of JSON");
  app.add_flag("-v,--verbose", verbose, "echo the human-readable report to stderr");

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "free/virtual verdict and homology table");
  check->add_option("file", check_file, "input document")->required();

  std::string sub_file, sub_face, sub_label, sub_name = "vp", sub_out;
  bool sub_verify = false;
  CLI::App* subdivide =
      app.add_subcommand("subdivide", "plan and apply a virtual-compatible subdivision");
  subdivide->add_option("file", sub_file, "input document")->required();
  subdivide->add_option("--face", sub_face, "face to subdivide, e.g. v0,v1")->required();
  subdivide->add_option("--label", sub_label, "label of the new vertex")->required();
  subdivide->add_option("--name", sub_name, "name of the new vertex (default vp)");
  subdivide->add_flag("--verify", sub_verify,
                      "run the reduction hypothesis check and before/after comparison");
  subdivide->add_option("-o,--output", sub_out, "write the subdivided document here");

  std::string sat_file;
  CLI::App* saturate = app.add_subcommand("saturate", "vertex-label ideal and its "
                                                      "saturation by B");
  saturate->add_option("file", sat_file, "input document")->required();

  CLI::App* bip = app.add_subcommand("bipyramid", "bipyramid labelings toolkit");
  bip->require_subcommand(1);
  std::string cls_file;
  CLI::App* bip_classify = bip->add_subcommand("classify", "combinatorial virtuality test");
  bip_classify->add_option("file", cls_file, "input document")->required();
  std::string elim_file, elim_out;
  CLI::App* bip_eliminate =
      bip->add_subcommand("eliminate", "subdivide to a free resolution");
  bip_eliminate->add_option("file", elim_file, "input document")->required();
  bip_eliminate->add_option("-o,--output", elim_out, "write the subdivided document here");
  int std_n = 0, std_k = 0;
  std::string std_out;
  CLI::App* bip_standard =
      bip->add_subcommand("standard", "standard virtual-not-free labeling document");
  bip_standard->add_option("--n", std_n, "x-block projective dimension")->required();
  bip_standard->add_option("--k", std_k, "y-block projective dimension")->required();
  bip_standard->add_option("-o,--output", std_out, "write the document here");

  std::string mat_file;
  CLI::App* matrices = app.add_subcommand("matrices", "differential matrices of the "
                                                      "free complex");
  matrices->add_option("file", mat_file, "input document")->required();

  // global flags may appear after the subcommand
  for (CLI::App* sub : {check, subdivide, saturate, bip, matrices}) sub->fallthrough();
  for (CLI::App* sub : {bip_classify, bip_eliminate, bip_standard}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Output out;
    if (*check) {
      vres::InputDocument doc = load(check_file);
      out = run_check(doc, resolve_field(field_flag, doc));
    } else if (*subdivide) {
      vres::InputDocument doc = load(sub_file);
      out = run_subdivide(doc, resolve_field(field_flag, doc), sub_face, sub_label,
                          sub_name, sub_verify, sub_out);
    } else if (*saturate) {
      vres::InputDocument doc = load(sat_file);
      out = run_saturate(doc);
    } else if (*bip) {
      if (*bip_classify) {
        vres::InputDocument doc = load(cls_file);
        out = run_classify(doc, resolve_field(field_flag, doc));
      } else if (*bip_eliminate) {
        vres::InputDocument doc = load(elim_file);
        out = run_eliminate(doc, resolve_field(field_flag, doc), elim_out);
      } else {
        out = run_standard(std_n, std_k, std_out);
      }
    } else if (*matrices) {
      vres::InputDocument doc = load(mat_file);
      out = run_matrices(doc);
    }
    emit(out, human, verbose);
    return 0;
  } catch (const vres::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const vres::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
