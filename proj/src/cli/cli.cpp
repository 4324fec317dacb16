#include "paut/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "paut/degeneration.hpp"

namespace paut {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::pair<std::string, std::size_t>> kVerbs = {
    {"compose", 2}, {"inverse", 1},   {"factor", 1},     {"classify", 1},   {"conj-test", 2},    {"degseq", 1},
    {"regular", 1}, {"degenerate", 1}, {"xalpha", 1},     {"pole-check", 2}, {"decompose-vp", 1},
};

struct Options {
  std::string verb;
  std::vector<std::string> inputs;
  std::string field = "Q";
  std::string format = "text";
  int n = 5;
  std::string variant = "F1";
  std::string file;
  std::string conjugator;
};

ordered_json degree_json(const ExtendedInt& d) {
  if (d.is_neg_inf()) return "-inf";
  return d.value();
}

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json a = ordered_json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"passed", c.passed}});
  return a;
}

ordered_json scalars_json(std::span<const Scalar> v) {
  ordered_json a = ordered_json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

ordered_json word_json(const AmalgamWord& w) {
  ordered_json a = ordered_json::array();
  for (const auto& x : w.factors()) a.push_back(format_factor(x));
  return a;
}

struct Input {
  std::vector<LaurentPoly> comps;
  bool has_t() const {
    return std::any_of(comps.begin(), comps.end(), [](const LaurentPoly& p) { return involves_t(p); });
  }
  TFamily family() const { return TFamily(comps); }
  Endo endo() const {
    // A family stands for its value at t = 0; a pole raises PoleError.
    if (has_t()) return family_value_at_zero(family());
    std::vector<ScalarPoly> out;
    for (const auto& c : comps) out.push_back(drop_t(c));
    return Endo(std::move(out));
  }
  PlaneAut aut() const {
    Endo e = endo();
    if (e.nvars() != 2) throw DomainError("expected an automorphism of the plane (two components)");
    return PlaneAut::create(e);
  }
};

struct Report {
  std::string verdict = "ok";
  ordered_json data = ordered_json::object();
  std::vector<Check> checks;
};

Report do_compose(const Input& f, const Input& g) {
  Report r;
  if (f.comps.size() != g.comps.size()) throw DomainError("maps have different numbers of variables");
  if (f.has_t() || g.has_t()) {
    TFamily h = compose(f.family(), g.family());
    r.data["result"] = format_map(h);
    r.data["valuation"] = degree_json(family_valuation(h));
    return r;
  }
  Endo h = compose(f.endo(), g.endo());
  r.data["result"] = format_map(h);
  r.data["degree"] = degree_json(h.degree());
  return r;
}

Report do_inverse(const Input& f) {
  Report r;
  if (f.has_t()) {
    TFamily inv = family_inverse(f.family());
    r.data["inverse"] = format_map(inv);
    r.data["valuation"] = degree_json(family_valuation(inv));
    r.checks.push_back({"f f^-1 = id", true});
    return r;
  }
  PlaneAut a = f.aut();
  r.data["inverse"] = format_map(a.inverse_map());
  r.data["degree"] = degree_json(a.degree());
  r.data["jacobian"] = a.jacobian().to_string();
  r.checks.push_back({"f f^-1 = id", compose(a.forward(), a.inverse_map()).is_identity()});
  return r;
}

Report do_factor(const Input& f) {
  Report r;
  PlaneAut a = f.aut();
  if (!a.word()) throw DomainError("factorization needs a special automorphism (Jacobian 1)");
  const AmalgamWord& w = *a.word();
  r.data["word"] = word_json(w);
  r.data["length"] = w.size();
  r.data["jonquieres_degrees"] = w.jonquieres_degrees();
  r.data["degree"] = w.degree();
  r.checks.push_back({"recompose = f", w.recompose() == a.forward()});
  return r;
}

Report do_classify(const Input& f) {
  Report r;
  PlaneAut a = f.aut();
  if (!a.is_special()) throw DomainError("classification needs a special automorphism (Jacobian 1)");
  bool alg = is_algebraic(a);
  r.data["algebraic"] = alg;
  if (alg) {
    NormalFormResult nf = normal_form(a);
    r.verdict = family_name(nf.form.family);
    r.data["normal_form"] = nf.form.describe();
    r.data["representative"] = format_map(nf.form.representative());
    r.data["conjugator"] = format_map(nf.conjugator.forward());
    r.checks.push_back({"representative = h f h^-1", conjugate(nf.conjugator, a).forward() == nf.form.representative()});
    return r;
  }
  auto hf = std::get<HenonForm>(henon_normalize(a));
  HenonInvariants inv = henon_invariants(hf);
  r.verdict = "henon";
  r.data["core"] = word_json(hf.core);
  r.data["invariants"] = {{"m", inv.m}, {"degrees", inv.degrees}};
  r.data["dynamical_degree"] = hf.core.degree();
  r.data["conjugator"] = format_map(hf.conjugator.forward());
  r.checks.push_back({"core = h f h^-1", conjugate(hf.conjugator, a).forward() == hf.core.recompose()});
  return r;
}

Report do_conj_test(const Input& f, const Input& g, const std::string& conj_src, Field k) {
  Report r;
  PlaneAut a = f.aut(), b = g.aut();
  ConjugacyResult c = are_conjugate(a, b);
  r.verdict = verdict_name(c.verdict);
  r.data["reason"] = c.reason;
  r.data["needs_extension"] = c.needs_extension;
  if (c.form_f) r.data["normal_form_f"] = c.form_f->describe();
  if (c.form_g) r.data["normal_form_g"] = c.form_g->describe();
  if (c.invariants_f) r.data["invariants_f"] = c.invariants_f->to_string();
  if (c.invariants_g) r.data["invariants_g"] = c.invariants_g->to_string();
  if (c.conjugator) r.data["conjugator"] = format_map(c.conjugator->forward());
  r.checks = c.checks;
  if (!conj_src.empty()) {
    PlaneAut h = Input{parse_tuple(conj_src, k)}.aut();
    CertificateReport cr = verify_conjugacy_certificate(a, b, h);
    ordered_json j{{"valid", cr.valid},
                   {"deg_h", degree_json(cr.deg_h)},
                   {"deg_g", degree_json(cr.deg_g)},
                   {"regular_bound", cr.regular_bound},
                   {"diagonal_bound", cr.diagonal_bound}};
    if (cr.minimizing_power) {
      j["minimizing_power"] = *cr.minimizing_power;
      j["deg_h_min"] = degree_json(cr.deg_h_min);
      j["regular_bound_min"] = cr.regular_bound_min;
    }
    r.data["certificate"] = j;
    r.checks.push_back({"supplied conjugator g = h f h^-1", cr.valid});
  }
  return r;
}

Report do_degseq(const Input& f, int n) {
  if (n < 1) throw UsageError("--n must be positive");
  Report r;
  Endo e = f.endo();
  ordered_json d = ordered_json::array();
  for (const auto& x : degree_sequence(e, n)) d.push_back(degree_json(x));
  r.data["degrees"] = d;
  return r;
}

Report do_regular(const Input& f) {
  Report r;
  PlaneAut a = f.aut();
  bool reg = is_dynamically_regular(a);
  r.verdict = reg ? "true" : "false";
  r.data["regular"] = reg;
  r.data["degree"] = degree_json(a.degree());
  r.data["degree_square"] = degree_json(composite_degree(a, a));
  if (a.degree().value() >= 2) {
    r.data["I_f"] = indeterminacy_point(a).to_string();
    r.data["I_f_inverse"] = indeterminacy_point(a.inverse()).to_string();
  }
  return r;
}

Report do_degenerate(const Input& f, Variant v) {
  Report r;
  DegenerationWitness w = degenerate(f.aut(), v);
  r.data["variant"] = variant_name(v);
  r.data["source"] = format_map(w.source);
  r.data["conjugator"] = format_map(w.conjugator);
  r.data["family"] = format_map(w.family);
  r.data["limit"] = format_map(w.limit);
  ordered_json p = ordered_json::object();
  if (w.d) p["d"] = *w.d;
  if (w.mu) p["mu"] = w.mu->to_string();
  if (w.q) p["q"] = *w.q;
  if (w.lambda) p["lambda"] = w.lambda->to_string();
  if (w.m) p["m"] = *w.m;
  if (w.P) p["P"] = format_poly(*w.P);
  r.data["parameters"] = p;
  r.checks = w.checks;
  return r;
}

ordered_json x_alpha_json(const XAlphaSet& x) {
  ordered_json s = ordered_json::array();
  for (std::size_t i = 0; i < x.images.size(); ++i)
    s.push_back({{"point", scalars_json(x.sample_points[i])}, {"image", x.images[i].to_string()}});
  return {{"m", x.m}, {"reduced", format_map(x.reduced)}, {"samples", s}};
}

Report do_xalpha(const Input& a) {
  Report r;
  r.data = x_alpha_json(x_alpha(a.family()));
  return r;
}

Report do_pole_check(const Input& f, const Input& a) {
  Report r;
  PoleReport p = pole_propagation_check(f.aut(), a.family());
  bool pole = p.nu_conjugate.is_neg_inf() || p.nu_conjugate.value() < 0;
  r.verdict = pole ? "pole" : "no-pole";
  r.data["nu_alpha"] = degree_json(p.nu_alpha);
  if (p.i_f) r.data["I_f"] = p.i_f->to_string();
  if (p.x) r.data["x_alpha"] = x_alpha_json(*p.x);
  r.data["avoids"] = p.avoids;
  r.data["hypothesis"] = p.hypothesis;
  r.data["nu_conjugate"] = degree_json(p.nu_conjugate);
  r.data["nu_inverse_conjugate"] = degree_json(p.nu_inverse_conjugate);
  r.data["nu_reverse_inverse"] = degree_json(p.nu_reverse_inverse);
  r.data["dichotomy"] = p.dichotomy;
  if (!p.note.empty()) r.data["note"] = p.note;
  r.checks.push_back({"hypothesis implies pole", p.implication_holds});
  return r;
}

Report do_decompose(const std::string& src, Field k) {
  Report r;
  LaurentPoly lp = parse_polynomial(src, k, 1, {{"x", 0}, {"x1", 0}});
  CharPDecomposition d = decompose_v_delta(UPoly::from_poly(drop_t(lp), 0));
  r.data["input"] = d.input.to_string();
  r.data["v"] = d.v.to_string();
  r.data["r"] = d.r.to_string();
  r.data["P"] = d.v_reduced.to_string();
  r.checks.push_back({"F = v + delta(r)", d.v + delta_map(d.r) == d.input});
  r.checks.push_back({"v in V", in_v(d.v)});
  return r;
}

Report dispatch(const Options& o, Field k) {
  std::vector<Input> in;
  auto tuple_input = [&](std::size_t i) { return Input{parse_tuple(o.inputs[i], k)}; };
  const std::string& v = o.verb;
  if (v == "decompose-vp") return do_decompose(o.inputs[0], k);
  for (std::size_t i = 0; i < o.inputs.size(); ++i) in.push_back(tuple_input(i));
  if (v == "compose") return do_compose(in[0], in[1]);
  if (v == "inverse") return do_inverse(in[0]);
  if (v == "factor") return do_factor(in[0]);
  if (v == "classify") return do_classify(in[0]);
  if (v == "conj-test") return do_conj_test(in[0], in[1], o.conjugator, k);
  if (v == "degseq") return do_degseq(in[0], o.n);
  if (v == "regular") return do_regular(in[0]);
  if (v == "degenerate") return do_degenerate(in[0], parse_variant(o.variant));
  if (v == "xalpha") return do_xalpha(in[0]);
  if (v == "pole-check") return do_pole_check(in[0], in[1]);
  throw UsageError("unknown verb " + v);
}

void render_text(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, val] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (val.is_object()) {
      render_text(val, name, out);
    } else if (val.is_array() && std::any_of(val.begin(), val.end(), [](const auto& e) { return e.is_object(); })) {
      for (std::size_t i = 0; i < val.size(); ++i) render_text(val[i], name + "." + std::to_string(i), out);
    } else if (val.is_array()) {
      out << name << ": [";
      for (std::size_t i = 0; i < val.size(); ++i)
        out << (i ? ", " : "") << (val[i].is_string() ? val[i].get<std::string>() : val[i].dump());
      out << "]\n";
    } else if (val.is_string()) {
      out << name << ": " << val.get<std::string>() << "\n";
    } else {
      out << name << ": " << val.dump() << "\n";
    }
  }
}

void emit(const Options& o, const ordered_json& j, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  out << "verb: " << j["verb"].get<std::string>() << "\n";
  out << "verdict: " << j["verdict"].get<std::string>() << "\n";
  render_text(j["data"], "", out);
  for (const auto& c : j["checks"]) out << "check " << c["name"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
}

int fail(const Options& o, std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& msg,
         ordered_json extra = ordered_json::object()) {
  if (o.format == "json") {
    ordered_json e{{"kind", kind}, {"message", msg}};
    e.update(extra);
    ordered_json j{{"verb", o.verb}, {"field", o.field}, {"verdict", "error"}, {"error", e},
                   {"data", ordered_json::object()}, {"checks", ordered_json::array()}};
    out << j.dump(2) << "\n";
  } else {
    err << "error (" << kind << "): " << msg << "\n";
  }
  return code;
}

std::vector<std::string> read_inputs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(line.substr(b));
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with polynomial automorphisms of affine space", "paut"};
  std::vector<std::string> verbs;
  for (const auto& [v, n] : kVerbs) verbs.push_back(v);
  app.add_option("verb", o.verb, "Operation to run")->required()->check(CLI::IsMember(verbs));
  app.add_option("inputs", o.inputs, "Maps as \"(e1, ..., en)\" over x1..xn, optionally with t");
  app.add_option("--field", o.field, "Q or Fp:<p>");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--n", o.n, "Number of iterates for degseq");
  app.add_option("--variant", o.variant, "F1 or F2 for degenerate")->check(CLI::IsMember({"F1", "F2"}));
  app.add_option("--file", o.file, "Read inputs from a file, one per line");
  app.add_option("--conjugator", o.conjugator, "Certificate h to verify in conj-test");
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(o, out, err, 2, "usage", e.what());
  }
  try {
    if (!o.file.empty()) {
      auto more = read_inputs(o.file);
      o.inputs.insert(o.inputs.end(), more.begin(), more.end());
    }
    auto arity = std::find_if(kVerbs.begin(), kVerbs.end(), [&](const auto& p) { return p.first == o.verb; })->second;
    if (o.inputs.size() != arity)
      throw UsageError(o.verb + " takes " + std::to_string(arity) + " input(s), got " + std::to_string(o.inputs.size()));
    Field k;
    try {
      k = Field::parse(o.field);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    Report r = dispatch(o, k);
    ordered_json j{{"verb", o.verb}, {"field", k.descriptor()}, {"verdict", r.verdict}, {"data", r.data},
                   {"checks", checks_json(r.checks)}};
    emit(o, j, out);
    bool ok = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    return fail(o, out, err, 2, "usage", e.what());
  } catch (const ParseError& e) {
    return fail(o, out, err, 2, "parse", e.what(), {{"position", e.position()}});
  } catch (const PoleError& e) {
    return fail(o, out, err, 1, "pole", e.what(), {{"valuation", e.valuation()}});
  } catch (const FieldExtensionRequired& e) {
    return fail(o, out, err, 1, "field-extension", e.what());
  } catch (const NotInvertible& e) {
    return fail(o, out, err, 1, "not-invertible", e.what());
  } catch (const DomainError& e) {
    return fail(o, out, err, 1, "domain", e.what());
  } catch (const std::exception& e) {
    return fail(o, out, err, 1, "internal", e.what());
  }
}

}  // namespace paut
