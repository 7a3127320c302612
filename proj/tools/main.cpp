#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/center.hpp"
#include "hecke/hecke.hpp"
#include "hecke/trace.hpp"

using nlohmann::json;
using namespace hecke;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertification = 2;

struct Options {
  std::string group;
  std::string word;
  std::string output = "text";
  std::uint64_t seed = 1;
};

bool json_mode(const Options& o) { return o.output == "json"; }

json report_to_json(const ValidationReport& r) {
  return json{{"ok", r.ok}, {"passed", r.passed}, {"failures", r.failures}};
}

json gram_to_json(const GroupSpec& spec, const GramData& g) {
  json rows = json::array();
  for (int i = 0; i < g.A.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.A.cols(); ++j) row.push_back(g.A.at(i, j).to_text());
    rows.push_back(row);
  }
  (void)spec;
  return json{{"matrix", rows},
              {"det", g.det.to_text()},
              {"det_inverse", g.det_inverse.to_text()}};
}

json dual_to_json(const GroupSpec& spec, const DualBasis& d) {
  json out = json::array();
  for (const HeckeElement& v : d.vectors) out.push_back(element_to_text(spec, v));
  return out;
}

json span_to_json(const SpanReport& r) {
  return json{{"equal_F_span", r.equal_F_span},
              {"x_in_R_span_of_y", r.x_in_R_span_of_y},
              {"y_in_R_span_of_x", r.y_in_R_span_of_x}};
}

json center_to_json(const GroupSpec& spec, const CenterBasis& cb) {
  json vecs = json::array();
  for (const FracVec& v : cb.vectors) {
    json row = json::array();
    for (const RatFunc& c : v) row.push_back(c.to_text());
    vecs.push_back(row);
  }
  (void)spec;
  return json{{"provenance", provenance_name(cb.provenance)},
              {"vectors", vecs},
              {"integral", cb.integral}};
}

void emit(const Options& o, const json& doc, const std::string& text) {
  if (json_mode(o))
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_validate(const GroupSpec& spec, const Options& o) {
  ValidationReport r = verify_relations(spec);
  std::string text;
  for (const auto& p : r.passed) text += "ok: " + p + "\n";
  for (const auto& f : r.failures) text += "FAIL: " + f + "\n";
  text += r.ok ? "validation passed\n" : "validation failed\n";
  emit(o, report_to_json(r), text);
  return r.ok ? kExitOk : kExitCertification;
}

int cmd_eval(const GroupSpec& spec, const Options& o) {
  if (o.word.empty()) {
    std::cerr << "eval requires --word\n";
    return kExitUsage;
  }
  HeckeElement h = word_to_element(spec, parse_word(o.word));
  emit(o, json{{"word", o.word}, {"element", element_to_json(h)},
               {"text", element_to_text(spec, h)}},
       element_to_text(spec, h) + "\n");
  return kExitOk;
}

int cmd_gram(const GroupSpec& spec, const Options& o) {
  GramData g = gram(spec);
  std::string text;
  for (int i = 0; i < g.A.rows(); ++i) {
    for (int j = 0; j < g.A.cols(); ++j)
      text += (j ? " | " : "") + g.A.at(i, j).to_text();
    text += "\n";
  }
  text += "det = " + g.det.to_text() + "\n";
  text += "det inverse = " + g.det_inverse.to_text() + "\n";
  emit(o, gram_to_json(spec, g), text);
  return kExitOk;
}

int cmd_dual(const GroupSpec& spec, const Options& o) {
  GramData g = gram(spec);
  DualBasis d = dual_basis(spec, g);
  std::string text;
  for (size_t i = 0; i < d.vectors.size(); ++i) {
    std::string label = i < spec.basis_labels.size()
                            ? spec.basis_labels[i]
                            : "b" + std::to_string(i + 1);
    text += label + "^ = " + element_to_text(spec, d.vectors[i]) + "\n";
  }
  emit(o, dual_to_json(spec, d), text);
  return kExitOk;
}

int cmd_mm_check(const GroupSpec& spec, const Options& o) {
  MMConditionReport r = mm_condition_check(spec);
  json doc{{"ok", r.ok},
           {"tau_pi", r.tau_pi.to_text()},
           {"violations", r.violations}};
  std::string text = "tau(pi) = " + r.tau_pi.to_text() + "\n";
  if (r.ok) {
    text += "all off-identity traces vanish\n";
  } else {
    for (int j : r.violations)
      text += "nonzero trace at basis index " + std::to_string(j) + "\n";
  }
  emit(o, doc, text);
  return r.ok ? kExitOk : kExitCertification;
}

json compare_against_reference(const GroupSpec& spec, const CenterBasis& cb,
                               bool* ok) {
  CenterBasis ref = CenterBasis::from_poly(spec.reference_center,
                                           Provenance::reference);
  SpanReport sr = span_compare(spec, cb, ref);
  *ok = sr.equal_F_span && sr.x_in_R_span_of_y && sr.y_in_R_span_of_x;
  return span_to_json(sr);
}

int cmd_center(const GroupSpec& spec, const Options& o) {
  CenterBasis cb = commutant_center(spec);
  json doc = center_to_json(spec, cb);
  bool ok = true;
  std::string text;
  for (size_t i = 0; i < cb.vectors.size(); ++i) {
    text += "z" + std::to_string(i + 1) + (cb.integral[i] ? "" : " (non-integral)");
    text += ":";
    for (const RatFunc& c : cb.vectors[i]) text += " " + c.to_text() + ";";
    text += "\n";
  }
  if (!spec.reference_center.empty()) {
    doc["reference_compare"] = compare_against_reference(spec, cb, &ok);
    text += ok ? "matches the reference basis\n"
               : "does NOT match the reference basis\n";
  }
  emit(o, doc, text);
  return ok ? kExitOk : kExitCertification;
}

int cmd_compare(const GroupSpec& spec, const Options& o) {
  CenterBasis cb = commutant_center(spec);
  json doc;
  bool ok = true;
  std::string text;
  if (!spec.reference_center.empty()) {
    doc["against"] = "reference";
    doc["report"] = compare_against_reference(spec, cb, &ok);
    text += ok ? "commutant basis and reference basis span the same R-module\n"
               : "commutant basis and reference basis differ\n";
  } else {
    RepresentationData reps = a2_representations(spec);
    validate_representations(spec, reps);
    GramData g = gram(spec);
    DualBasis d = dual_basis(spec, g);
    ClassCoeffs fc = class_coeffs(spec, reps, spec.class_reps.at("minimal"),
                                  CoeffMode::f_on_basis, nullptr);
    CenterBasis yc = build_center(spec, fc, CenterMode::y_from_duals, &d);
    doc["against"] = "theorem";
    SpanReport sr = span_compare(spec, cb, yc);
    ok = sr.equal_F_span && sr.x_in_R_span_of_y && sr.y_in_R_span_of_x;
    doc["report"] = span_to_json(sr);
    text += ok ? "commutant basis and theorem basis span the same R-module\n"
               : "commutant basis and theorem basis differ\n";
  }
  emit(o, doc, text);
  return ok ? kExitOk : kExitCertification;
}

int cmd_report(const GroupSpec& spec, const Options& o) {
  json doc;
  bool ok = true;

  ValidationReport vr = verify_relations(spec);
  doc["validate"] = report_to_json(vr);
  ok = ok && vr.ok;

  GramData g = gram(spec);
  doc["gram"] = gram_to_json(spec, g);

  DualBasis d = dual_basis(spec, g);
  doc["dual"] = dual_to_json(spec, d);

  TracePropertyReport tp = trace_property_check(spec, 25, o.seed);
  doc["trace_property"] = json{{"ok", tp.ok}, {"samples", tp.samples}};
  ok = ok && tp.ok;

  MMConditionReport mm = mm_condition_check(spec);
  doc["mm_check"] = json{{"ok", mm.ok},
                         {"tau_pi", mm.tau_pi.to_text()},
                         {"violations", mm.violations}};
  ok = ok && mm.ok;

  CenterBasis cb = commutant_center(spec);
  doc["center"] = center_to_json(spec, cb);
  if (!spec.reference_center.empty()) {
    bool cmp_ok = true;
    doc["compare"] = compare_against_reference(spec, cb, &cmp_ok);
    ok = ok && cmp_ok;
  }

  doc["ok"] = ok;
  std::cout << doc.dump(2) << "\n";
  return ok ? kExitOk : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for generic Hecke algebras of small complex "
               "reflection groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--group", opt.group, "builtin group name (a2, g4) or a spec file path")
      ->required();
  app.add_option("--word", opt.word, "braid word, tokens s<k>^<e>");
  app.add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized property checks");

  std::string command;
  for (const char* name :
       {"validate", "eval", "gram", "dual", "mm-check", "center", "compare",
        "report"}) {
    app.add_subcommand(name, "")
        ->fallthrough()
        ->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  GroupSpec spec;
  try {
    spec = load_group(opt.group);
  } catch (const std::exception& e) {
    std::cerr << "failed to load group: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (command == "validate") return cmd_validate(spec, opt);
    if (command == "eval") return cmd_eval(spec, opt);
    if (command == "gram") return cmd_gram(spec, opt);
    if (command == "dual") return cmd_dual(spec, opt);
    if (command == "mm-check") return cmd_mm_check(spec, opt);
    if (command == "center") return cmd_center(spec, opt);
    if (command == "compare") return cmd_compare(spec, opt);
    if (command == "report") return cmd_report(spec, opt);
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::logic_error& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
