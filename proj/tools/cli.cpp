#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rrtrop/error.hpp"
#include "rrtrop/groebner.hpp"
#include "rrtrop/parse.hpp"
#include "rrtrop/report.hpp"
#include "rrtrop/sos.hpp"
#include "rrtrop/tropical.hpp"

namespace rrtrop {

namespace {

struct Options {
  std::string input, components, rep, out_file, orthant;
  std::vector<std::string> weights;
  std::uint64_t seed = 1;
  int samples = 1000;
  int jobs = 0;
  std::string format = "text";
  std::string tiebreak = "grlex";
  bool all_cones = false;
  bool assert_real_radical = false;
  bool assert_qm_basis = false;
};

PolynomialFile load_input(const Options& o) {
  if (o.input.empty()) throw PreconditionError("an input file is required (--ideal/--poly FILE)");
  PolynomialFile file = read_polynomial_file(o.input);
  if (file.polynomials.empty()) throw ParseError("'" + o.input + "' contains no polynomials");
  if (!o.orthant.empty()) {
    SignVector pi = parse_signs(o.orthant);
    if (pi.size() != file.ring->size()) throw ParseError("orthant dimension does not match vars");
    for (auto& p : file.polynomials) p = orthant_flip(p, pi);
  }
  return file;
}

std::vector<WeightVector> load_weights(const Options& o, std::size_t n) {
  std::vector<WeightVector> out;
  for (const auto& s : o.weights) {
    auto w = parse_weight(s);
    if (w.size() != n) throw ParseError("weight " + s + " has dimension " + std::to_string(w.size()) +
                                        ", expected " + std::to_string(n));
    out.push_back(std::move(w));
  }
  return out;
}

ClassifyOptions classify_options(const Options& o) {
  ClassifyOptions c;
  c.seed = o.seed;
  c.samples = o.samples;
  c.assert_real_radical = o.assert_real_radical;
  return c;
}

Json input_json(const PolynomialFile& file, const Options& o) {
  Json j;
  j["vars"] = file.ring->names();
  j["generators"] = to_json(file.polynomials);
  if (!o.orthant.empty()) j["orthant"] = o.orthant;
  return j;
}

Json search_json(const Options& o) {
  Json j;
  j["seed"] = o.seed;
  j["samples"] = o.samples;
  return j;
}

Json principal_sets(const PrincipalAnalysis& a) {
  Json trop = trop_principal(a);
  Json rstar = {{"IN", Json::array()}, {"OUT", Json::array()}, {"UNKNOWN", Json::array()}};
  for (const auto& [id, v] : trop_real_principal(a)) rstar[to_string(v)].push_back(id);
  Json rad = {{"YES", Json::array()}, {"NO", Json::array()}, {"UNKNOWN", Json::array()}};
  for (const auto& [id, v] : trop_rad_principal(a)) rad[to_string(v)].push_back(id);
  Json j;
  j["trop"] = trop;
  j["trop_rstar"] = rstar;
  j["trop_rad"] = rad;
  return j;
}

Json reports_json(const std::vector<ConeReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ComponentsInput {
  RingPtr ring;
  std::optional<Polynomial> target;
  std::vector<std::pair<Polynomial, int>> components;
  std::optional<WeightVector> weight;
};

ComponentsInput load_components(const std::string& path, const RingPtr& ring_hint) {
  try {
    Json j = Json::parse(read_text(path));
    ComponentsInput in;
    if (j.contains("vars"))
      in.ring = make_ring(j["vars"].get<std::vector<std::string>>());
    else if (ring_hint)
      in.ring = ring_hint;
    else
      throw ParseError("components file needs 'vars'");
    if (ring_hint && !(*ring_hint == *in.ring)) throw ParseError("components file vars differ from the input vars");
    if (ring_hint) in.ring = ring_hint;
    if (j.contains("target")) in.target = parse_polynomial(j["target"].get<std::string>(), in.ring);
    for (const auto& c : j.at("components")) {
      int m = c.contains("multiplicity") ? c["multiplicity"].get<int>() : 1;
      in.components.emplace_back(parse_polynomial(c.at("factor").get<std::string>(), in.ring), m);
    }
    if (j.contains("weight")) in.weight = parse_weight(j["weight"].get<std::string>());
    return in;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("components file: ") + e.what());
  }
}

ComponentClassification run_components(const Options& o, const RingPtr& ring,
                                       const std::optional<Polynomial>& f, Json& doc) {
  ComponentsInput in = load_components(o.components, ring);
  if (!o.weights.empty()) in.weight = parse_weight(o.weights.front());
  if (in.weight && in.weight->size() != in.ring->size()) throw ParseError("weight dimension does not match vars");
  Polynomial target = in.target ? *in.target : Polynomial(in.ring);
  if (!in.target) {
    if (!f || !in.weight) throw PreconditionError("components need a 'target' or an input polynomial and a weight");
    target = initial_form(*f, *in.weight);
    doc["target_source"] = "initial form of the input at " + to_string(*in.weight);
  }
  return classify_components(target, in.components, in.weight);
}

int cmd_initial(const Options& o, Json& doc) {
  auto file = load_input(o);
  auto ws = load_weights(o, file.ring->size());
  if (ws.size() != 1) throw PreconditionError("initial needs exactly one --weight");
  Ideal I(file.polynomials);
  doc["input"] = input_json(file, o);
  doc["weight"] = to_string(ws[0]);
  doc["tiebreak"] = o.tiebreak;
  doc["generators"] = to_json(initial_ideal(I, ws[0], InitialRoute::Auto, parse_tiebreak(o.tiebreak)));
  return 0;
}

int cmd_classify(const Options& o, Json& doc) {
  auto file = load_input(o);
  doc["input"] = input_json(file, o);
  doc["search"] = search_json(o);
  auto opts = classify_options(o);
  if (o.all_cones == !o.weights.empty()) throw PreconditionError("classify needs exactly one of --all-cones or --weight");
  if (o.all_cones) {
    if (file.polynomials.size() != 1)
      throw PreconditionError("--all-cones needs a principal ideal; use --weight for general ideals");
    const Polynomial& f = file.polynomials.front();
    if (f.is_zero()) throw PreconditionError("the zero polynomial has no Newton polytope");
    auto a = analyze_principal(f, opts, o.jobs);
    doc["fan"] = {{"cones", a.fan.size()}, {"polytope_dim", a.fan.polytope().dim()}};
    doc["cones"] = reports_json(a.reports);
    doc["sets"] = principal_sets(a);
    doc["chain"] = to_json(a.chain);
    if (f.is_monomial()) doc["notes"] = Json::array({"monomial input: Trop is empty"});
    return 0;
  }
  Ideal I(file.polynomials);
  std::vector<ConeReport> reports;
  for (const auto& w : load_weights(o, file.ring->size())) reports.push_back(classify_weight(I, w, opts));
  doc["cones"] = reports_json(reports);
  doc["chain"] = to_json(verify_chain(reports));
  return 0;
}

int cmd_compactness(const Options& o, Json& doc) {
  auto file = load_input(o);
  doc["input"] = input_json(file, o);
  doc["search"] = search_json(o);
  auto opts = classify_options(o);
  std::vector<ConeReport> reports;
  bool complete = false;
  std::vector<ComponentClassification> comps;
  std::optional<Polynomial> principal;
  if (file.polynomials.size() == 1) principal = file.polynomials.front();
  if (principal && o.weights.empty()) {
    auto a = analyze_principal(*principal, opts, o.jobs);
    reports = a.reports;
    complete = true;
    doc["chain"] = to_json(a.chain);
  } else {
    if (o.weights.empty()) throw PreconditionError("non-principal input needs --weight (one per cone to inspect)");
    Ideal I(file.polynomials);
    for (const auto& w : load_weights(o, file.ring->size())) reports.push_back(classify_weight(I, w, opts));
    doc["chain"] = to_json(verify_chain(reports));
  }
  doc["complete"] = complete;
  doc["cones"] = reports_json(reports);
  if (!o.components.empty()) {
    comps.push_back(run_components(o, file.ring, principal, doc));
    doc["components"] = to_json(comps.back());
  }
  doc["certificate"] = to_json(compactness_certificate(reports, complete, comps));
  return 0;
}

int cmd_stability(const Options& o, Json& doc) {
  auto file = load_input(o);
  doc["input"] = input_json(file, o);
  doc["search"] = search_json(o);
  Ideal I(file.polynomials);
  auto cert = stability_certificate(I, load_weights(o, file.ring->size()), classify_options(o));
  doc["certificate"] = to_json(cert);
  return 0;
}

int cmd_sos_reduce(const Options& o, Json& doc) {
  if (o.rep.empty()) throw PreconditionError("sos-reduce needs --rep FILE");
  RepresentationFile file = read_representation_file(o.rep);
  std::optional<WeightVector> w = file.weight;
  if (!o.weights.empty()) w = parse_weight(o.weights.front());
  if (!w) throw PreconditionError("sos-reduce needs a weight (--weight or the file's 'weight')");
  if (w->size() != file.ring->size()) throw ParseError("weight dimension does not match vars");
  Ideal I(file.ideal);

  BasisAssertion assertion;
  if (o.assert_qm_basis) {
    assertion = {BasisAssertionKind::QMBasis, "user assertion: the initial forms of the generators form a QM basis"};
  } else {
    if (!file.rep.generators.empty())
      throw PreconditionError("representations with generators need --assert-qm-basis");
    ConeReport r = classify_weight(I, *w, classify_options(o));
    if (r.real_radical != RealRadical::Yes)
      throw PreconditionError("In_w(I) is not certified real radical at " + to_string(*w) +
                              "; pass --assert-qm-basis to proceed on an assertion");
    assertion = {BasisAssertionKind::RealRadicalInitial, "In_w(I) real radical (" + r.radical_rule + ")"};
  }

  doc["input"] = {{"vars", file.ring->names()}, {"f", to_string(file.f)}, {"ideal", to_json(file.ideal)},
                  {"weight", to_string(*w)}};
  doc["assertion"] = assertion.evidence;
  doc["representation_in"] = to_json(file.rep);
  ReductionResult r = reduce_degree(file.f, file.rep, I, *w, assertion, parse_tiebreak(o.tiebreak));
  doc["status"] = to_string(r.status);
  doc["trace"] = to_json(r.trace);
  if (r.status != ReductionStatus::Ok) {
    Json v;
    v["message"] = r.message;
    if (r.violation_top) v["top_sum"] = to_string(*r.violation_top);
    if (r.violation_witness) v["initial_form_outside"] = to_string(*r.violation_witness);
    if (r.violation_pair)
      v["pair"] = "(" + std::to_string(r.violation_pair->first) + "," + std::to_string(r.violation_pair->second) + ")";
    doc["violation"] = v;
    return exit_code(ErrorKind::Violation);
  }
  auto check = verify_representation(file.f, r.rep, I);
  doc["representation_out"] = to_json(r.rep);
  doc["verified"] = check.ok;
  auto d = max_weighted_degree(r.rep, *w);
  auto t = max_total_degree(r.rep);
  doc["max_weighted_degree"] = d ? d->get_str() : "none";
  doc["weighted_degree_f"] = file.f.is_zero() ? "none" : w_degree(file.f, *w).get_str();
  doc["max_total_degree"] = t ? std::to_string(*t) : "none";
  if (!file.f.is_zero()) doc["total_degree_bound"] = stability_bound(*w, file.f.total_degree());
  if (!o.out_file.empty()) {
    RepresentationFile out{file.ring, file.f, file.ideal, r.rep, w};
    std::ofstream os(o.out_file);
    if (!os) throw PreconditionError("cannot write '" + o.out_file + "'");
    os << format_representation_file(out);
    doc["written"] = o.out_file;
  }
  if (!check.ok) throw ViolationError("reduced representation failed verification");
  return 0;
}

int cmd_components(const Options& o, Json& doc) {
  if (o.components.empty()) throw PreconditionError("components needs --components FILE");
  std::optional<PolynomialFile> file;
  if (!o.input.empty()) file = load_input(o);
  std::optional<Polynomial> f;
  if (file) {
    if (file->polynomials.size() != 1) throw PreconditionError("components needs a principal input");
    f = file->polynomials.front();
    doc["input"] = input_json(*file, o);
  }
  doc["classification"] = to_json(run_components(o, file ? file->ring : nullptr, f, doc));
  return 0;
}

int cmd_audit(const Options& o, Json& doc) {
  auto file = load_input(o);
  doc["input"] = input_json(file, o);
  doc["audit"] = to_json(universal_gb_squarefree_audit(file.polynomials));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real radical initial ideals, real tropical varieties and stability certificates", "rrtrop"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for the witness search")->capture_default_str();
    sub->add_option("--samples", o.samples, "witness search budget per cone")->capture_default_str();
    sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_option("--tiebreak", o.tiebreak, "term order refining weights")
        ->check(CLI::IsMember({"grlex", "lex", "grevlex"}))
        ->capture_default_str();
  };
  auto input = [&](CLI::App* sub) { sub->add_option("--ideal,--poly", o.input, "input file: 'vars:' line, one polynomial per line"); };
  auto weights = [&](CLI::App* sub) {
    sub->add_option("--weight", o.weights, "weight vector \"(w1,...,wn)\"; repeatable")->allow_extra_args(false);
  };
  auto orthant = [&](CLI::App* sub) { sub->add_option("--orthant", o.orthant, "apply x_i -> s_i x_i first, \"(+-1,...)\""); };

  auto* initial = app.add_subcommand("initial", "reduced basis of In_w(I)");
  input(initial), weights(initial), orthant(initial), common(initial);
  auto* classify = app.add_subcommand("classify", "per-cone real-radical and real tropical verdicts");
  input(classify), weights(classify), orthant(classify), common(classify);
  classify->add_flag("--all-cones", o.all_cones, "classify every cone of the Newton polytope fan");
  classify->add_flag("--assert-real-radical", o.assert_real_radical, "accept binomial initial ideals as real radical");
  auto* compact = app.add_subcommand("compactness", "compactness certificate for the real variety");
  input(compact), weights(compact), orthant(compact), common(compact);
  compact->add_option("--components", o.components, "components file (JSON)");
  auto* stab = app.add_subcommand("stability", "stability certificate for sums of squares modulo I");
  input(stab), weights(stab), orthant(stab), common(stab);
  stab->add_flag("--assert-real-radical", o.assert_real_radical, "accept binomial initial ideals as real radical");
  auto* sos = app.add_subcommand("sos-reduce", "weighted degree reduction of a representation");
  weights(sos), common(sos);
  sos->add_option("--rep", o.rep, "representation file (JSON)");
  sos->add_option("--out", o.out_file, "write the reduced representation here");
  sos->add_flag("--assert-qm-basis", o.assert_qm_basis, "assume the initial forms of the generators form a QM basis");
  auto* comps = app.add_subcommand("components", "verify and classify user-supplied components");
  input(comps), weights(comps), common(comps);
  comps->add_option("--components", o.components, "components file (JSON)");
  auto* audit = app.add_subcommand("audit-ugb", "square-free audit of an asserted universal Groebner basis");
  input(audit), common(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::Parse);
  }

  CLI::App* sub = app.get_subcommands().front();
  Json doc = make_report(sub->get_name(), args);
  try {
    int code = 0;
    const std::string name = sub->get_name();
    if (name == "initial") code = cmd_initial(o, doc);
    else if (name == "classify") code = cmd_classify(o, doc);
    else if (name == "compactness") code = cmd_compactness(o, doc);
    else if (name == "stability") code = cmd_stability(o, doc);
    else if (name == "sos-reduce") code = cmd_sos_reduce(o, doc);
    else if (name == "components") code = cmd_components(o, doc);
    else code = cmd_audit(o, doc);
    out << render(doc, parse_report_format(o.format));
    return code;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Violation) {
      doc["error"] = e.what();
      out << render(doc, parse_report_format(o.format));
    }
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rrtrop
