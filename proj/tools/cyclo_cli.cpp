// Command-line front end for the cyclo library.
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cyclo/contact.hpp"
#include "cyclo/hoch.hpp"
#include "cyclo/liebi.hpp"
#include "cyclo/linfty.hpp"
#include "cyclo/report.hpp"
#include "cyclo/specfile.hpp"

using namespace cyclo;

namespace {

struct Common {
  std::string path;
  std::string field;
  std::string format = "text";
  std::string normalize_kappa;
  int N = 0;
  int W = 0;
  int max_arity = 0;
};

ojson betti_json(const BettiTable& b) {
  ojson j = ojson::object();
  for (auto& [k, v] : b) j[std::to_string(k)] = v;
  return j;
}

std::vector<CheckResult> validators(const SpecFile& s) {
  std::vector<CheckResult> out;
  if (s.has_category()) {
    try {
      AinfCategory cat = s.category();
      int arity = s.options.max_arity ? s.options.max_arity
                                      : (s.cyclic ? s.cyc.max_length() : cat.max_arity());
      out.push_back(from_report(check_ainf(cat, std::max(arity, 1))));
    } catch (const DegreeViolation& e) {
      out.push_back({"ainf", false, {std::string("DegreeViolation: ") + e.what()}});
    }
    if (s.cyclic) {
      out.push_back(from_report(check_cyclic(s.cyc)));
      out.push_back(from_report(check_star(s.cyc)));
    }
  }
  if (s.contact) {
    out.push_back(from_report(check_contact_data(*s.contact, s.has_category() ? &s.quiver() : nullptr)));
    out.push_back(from_report(check_d_squared(*s.contact)));
    if (s.cyclic) out.push_back(from_report(check_relate_invariance(*s.contact, s.cyc)));
  }
  if (s.lie_bracket) {
    try {
      out.push_back(from_report(check_linfty(chevalley_eilenberg(*s.lie_bracket), 3)));
      out.back().check = "chevalley-eilenberg";
    } catch (const NotAntisymmetric& e) {
      out.push_back({"chevalley-eilenberg", false, {std::string("NotAntisymmetric: ") + e.what()}});
    }
  }
  if (s.linfty) out.push_back(from_report(check_linfty(*s.linfty, 3)));
  return out;
}

Report run_homology(const SpecFile& s, const std::string& complex, int N) {
  Report r;
  AinfCategory cat = s.category();
  CheckResult res{"homology-" + complex};
  try {
    BettiTable b;
    if (complex == "hoch") b = betti(build_truncated(cat, N));
    else if (complex == "cyclic") b = betti(build_cyclic(cat, N));
    else if (complex == "dual-hoch") b = betti(dualize(build_truncated(cat, N)));
    else if (complex == "dual-cyclic") b = betti(dualize(build_cyclic(cat, N)));
    else throw std::invalid_argument("unknown complex '" + complex + "'");
    res.extra["N"] = N;
    res.extra["betti"] = betti_json(b);
  } catch (const NotAComplex& e) {
    res.pass = false;
    res.witnesses.push_back(std::string("NotAComplex: ") + e.what());
  }
  r.results.push_back(res);
  return r;
}

Report run_bialgebra(const SpecFile& s, int N, int W) {
  if (!s.cyclic) throw std::invalid_argument("bialgebra needs a cyclic structure");
  Report r;
  r.results = validators(s);
  AxiomReport ax = verify_bialgebra(s.cyc, N, W, false);
  for (auto& f : ax.families) r.results.push_back(from_report(f));
  return r;
}

Report run_contact(const SpecFile& s, const std::string& check, int N) {
  if (!s.contact) throw std::invalid_argument("input has no contact block");
  Report r;
  const ContactData& c = *s.contact;
  if (check == "d2") {
    r.results.push_back(from_report(check_d_squared(c)));
  } else if (check == "skew") {
    r.results.push_back(from_report(check_cl_skew(c)));
  } else if (check == "chainmap" || check.rfind("linfty-", 0) == 0) {
    if (!s.cyclic) throw std::invalid_argument("relating map needs a cyclic structure");
    r.results = validators(s);
    bool gates = r.pass();
    int k = check == "chainmap" ? 1 : std::stoi(check.substr(7));
    ValidationReport v = check == "chainmap" ? check_chain_map(c, s.cyc, N, false)
                                             : linfty_morphism_residual(c, s.cyc, k, N, false);
    if (check == "chainmap") v.check = "chain-map";
    if (!gates) v.witnesses.insert(v.witnesses.begin(), "evaluated on data failing validators");
    r.results.push_back(from_report(v));
  } else {
    throw std::invalid_argument("unknown contact check '" + check + "'");
  }
  return r;
}

Report run_linfty(const SpecFile& s, int max_arity) {
  Report r;
  if (s.lie_bracket) {
    CheckResult ce{"chevalley-eilenberg"};
    try {
      auto alg = chevalley_eilenberg(*s.lie_bracket);
      ce = from_report(check_linfty(alg, max_arity));
      ce.check = "chevalley-eilenberg";
    } catch (const NotAntisymmetric& e) {
      ce.pass = false;
      ce.witnesses.push_back(std::string("NotAntisymmetric: ") + e.what());
    }
    r.results.push_back(ce);
  }
  if (s.linfty) {
    auto rel = check_linfty(*s.linfty, max_arity);
    r.results.push_back(from_report(rel));
    auto jac = from_report(jacobi_residual(*s.linfty));
    jac.check = "chain-jacobi";
    jac.extra["informational"] = true;
    r.results.push_back(jac);
    CheckResult hj{"homology-jacobi"};
    try {
      InducedBracket ib = induced_bracket(*s.linfty);
      auto h = jacobi_residual(ib.homology);
      hj = from_report(h);
      hj.check = "homology-jacobi";
      hj.extra["homology_dim"] = ib.homology.basis.size();
    } catch (const PreconditionFailed& e) {
      hj.pass = false;
      hj.witnesses.push_back(std::string("PreconditionFailed: ") + e.what());
    }
    r.results.push_back(hj);
  }
  if (r.results.empty()) throw std::invalid_argument("input has no linfty block");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain-level checks for cyclic A-infinity categories"};
  app.require_subcommand(1);
  Common o;
  std::string complex = "hoch", check = "d2";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.path, "specification file")->required();
    sub->add_option("--field", o.field, "rational or mod2")->check(CLI::IsMember({"rational", "mod2"}));
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--normalize-kappa", o.normalize_kappa, "on or off")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--N", o.N, "truncation length");
    sub->add_option("--W", o.W, "verification window");
  };
  auto* v = app.add_subcommand("validate", "run all applicable validators");
  add_common(v);
  auto* h = app.add_subcommand("homology", "Betti table of a truncated complex");
  add_common(h);
  h->add_option("--complex", complex)->check(CLI::IsMember({"hoch", "cyclic", "dual-hoch", "dual-cyclic"}));
  auto* b = app.add_subcommand("bialgebra", "Lie bialgebra axiom suite");
  add_common(b);
  auto* c = app.add_subcommand("contact", "contact-side checks");
  add_common(c);
  c->add_option("--check", check, "d2, skew, chainmap or linfty-<k>");
  auto* l = app.add_subcommand("linfty", "Lie-infinity checks");
  add_common(l);
  l->add_option("--max-arity", o.max_arity, "largest wedge length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::optional<Field> fo;
    if (!o.field.empty()) fo = parse_field(o.field);
    SpecFile s = load_spec(o.path, fo);
    if (!o.normalize_kappa.empty() && s.contact) s.contact->normalize_kappa = o.normalize_kappa == "on";
    const int N = o.N ? o.N : s.options.N;
    const int W = o.W ? o.W : (s.options.W ? s.options.W : N - 4);
    Report r;
    r.input = o.path;
    r.options["field"] = field_name(s.field);
    if (v->parsed()) {
      r.command = "validate";
      r.results = validators(s);
    } else if (h->parsed()) {
      r = run_homology(s, complex, N);
      r.command = "homology";
      r.options["complex"] = complex;
      r.options["N"] = N;
    } else if (b->parsed()) {
      r = run_bialgebra(s, N, W);
      r.command = "bialgebra";
      r.options["N"] = N;
      r.options["W"] = W;
    } else if (c->parsed()) {
      r = run_contact(s, check, N);
      r.command = "contact";
      r.options["check"] = check;
      r.options["N"] = N;
      r.options["normalize_kappa"] = s.contact->normalize_kappa ? "on" : "off";
    } else {
      int arity = o.max_arity ? o.max_arity : (s.options.max_arity ? s.options.max_arity : 3);
      r = run_linfty(s, arity);
      r.command = "linfty";
      r.options["max_arity"] = arity;
    }
    r.input = o.path;
    if (!r.options.contains("field")) r.options["field"] = field_name(s.field);
    std::cout << (o.format == "json" ? r.json() : r.text());
    return r.pass() ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
  } catch (const ResolutionError& e) {
    std::cerr << "ResolutionError: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
