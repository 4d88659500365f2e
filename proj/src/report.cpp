#include "rrtrop/report.hpp"

#include <yaml-cpp/yaml.h>

#include "rrtrop/error.hpp"
#include "rrtrop/parse.hpp"

namespace rrtrop {

ReportFormat parse_report_format(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "structured") return ReportFormat::Structured;
  throw ParseError("unknown format '" + s + "' (expected text or structured)");
}

namespace {

std::string point_string(const std::vector<Rational>& p) { return to_string(WeightVector(p)); }

std::vector<Rational> parse_point(const std::string& s) { return parse_weight(s).entries(); }

IntVec parse_intvec(const std::string& s) {
  IntVec out;
  const WeightVector w = parse_weight(s);
  for (const auto& x : w.entries()) {
    if (x.get_den() != 1) throw ParseError("expected an integer vector, got '" + s + "'");
    out.push_back(x.get_num());
  }
  return out;
}

Exponent parse_exponent(const std::string& s) {
  Exponent out;
  for (const auto& x : parse_intvec(s)) out.push_back(static_cast<int>(x.get_si()));
  return out;
}

template <class T, class F>
Json list(const std::vector<T>& v, F f) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(f(x));
  return a;
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

Json to_json(const WeightVector& w) { return to_string(w); }

Json to_json(const std::vector<Polynomial>& v) {
  return list(v, [](const Polynomial& p) { return to_string(p); });
}

Json to_json(const ConeReport& r) {
  Json j;
  j["cone"] = r.cone_id;
  j["from_fan"] = r.from_fan;
  j["dim"] = r.dim;
  j["face_dim"] = r.face_dim;
  j["rays"] = list(r.rays, [](const IntVec& v) { return to_string(v); });
  j["lineality"] = list(r.lineality, [](const IntVec& v) { return to_string(v); });
  j["dual_face_vertices"] = list(r.dual_face_vertices, [](const Exponent& a) { return to_string(a); });
  j["weight"] = to_string(r.weight);
  j["initial"] = to_json(r.initial);
  j["is_monomial"] = r.is_monomial;
  j["squarefree_monomial"] = to_string(r.squarefree);
  j["in_trop"] = r.in_trop;
  j["in_trop_rstar"] = to_string(r.rstar);
  j["real_radical"] = to_string(r.real_radical);
  j["radical_rule"] = r.radical_rule;
  j["rstar_rule"] = r.rstar_rule;
  if (r.edge) {
    const auto& e = *r.edge;
    Json ej;
    ej["a"] = to_string(e.a);
    ej["b"] = to_string(e.b);
    ej["v"] = to_string(e.v);
    ej["d"] = e.d;
    ej["gamma"] = list(e.gamma, [](const Rational& c) { return c.get_str(); });
    ej["u"] = to_string(UnivariatePolynomial::from_edge(e));
    j["edge"] = ej;
  }
  if (r.sturm) {
    Json s;
    s["roots_all"] = r.sturm->roots_all;
    s["roots_positive"] = r.sturm->roots_pos;
    s["roots_negative"] = r.sturm->roots_neg;
    s["squarefree"] = r.sturm->squarefree;
    j["sturm"] = s;
  }
  if (r.rstar_witness) {
    Json w;
    w["negative"] = point_string(r.rstar_witness->negative);
    w["positive"] = point_string(r.rstar_witness->positive);
    j["rstar_witness"] = w;
  }
  if (r.rstar_source) j["rstar_source"] = *r.rstar_source;
  if (r.radical_source) j["radical_source"] = *r.radical_source;
  if (r.refinement) j["refinement"] = to_string(*r.refinement);
  j["notes"] = r.notes;
  return j;
}

ConeReport cone_report_from_json(const Json& j, const RingPtr& ring) {
  try {
    ConeReport r;
    r.cone_id = j.at("cone").get<std::size_t>();
    r.from_fan = j.at("from_fan").get<bool>();
    r.dim = j.at("dim").get<int>();
    r.face_dim = j.at("face_dim").get<int>();
    for (const auto& s : strings(j.at("rays"))) r.rays.push_back(parse_intvec(s));
    for (const auto& s : strings(j.at("lineality"))) r.lineality.push_back(parse_intvec(s));
    for (const auto& s : strings(j.at("dual_face_vertices"))) r.dual_face_vertices.push_back(parse_exponent(s));
    r.weight = parse_weight(j.at("weight").get<std::string>());
    for (const auto& s : strings(j.at("initial"))) r.initial.push_back(parse_polynomial(s, ring));
    r.is_monomial = j.at("is_monomial").get<bool>();
    r.squarefree = parse_squarefree(j.at("squarefree_monomial").get<std::string>());
    r.in_trop = j.at("in_trop").get<bool>();
    r.rstar = parse_membership(j.at("in_trop_rstar").get<std::string>());
    r.real_radical = parse_real_radical(j.at("real_radical").get<std::string>());
    r.radical_rule = j.at("radical_rule").get<std::string>();
    r.rstar_rule = j.at("rstar_rule").get<std::string>();
    if (j.contains("edge")) {
      const auto& ej = j["edge"];
      EdgeData e;
      e.a = parse_exponent(ej.at("a").get<std::string>());
      e.b = parse_exponent(ej.at("b").get<std::string>());
      e.v = parse_exponent(ej.at("v").get<std::string>());
      e.d = ej.at("d").get<int>();
      for (const auto& s : strings(ej.at("gamma"))) e.gamma.push_back(parse_rational(s));
      r.edge = std::move(e);
    }
    if (j.contains("sturm")) {
      const auto& s = j["sturm"];
      r.sturm = SturmEvidence{s.at("roots_all").get<int>(), s.at("roots_positive").get<int>(),
                              s.at("roots_negative").get<int>(), s.at("squarefree").get<bool>()};
    }
    if (j.contains("rstar_witness")) {
      const auto& w = j["rstar_witness"];
      r.rstar_witness = SignWitness{parse_point(w.at("negative").get<std::string>()),
                                    parse_point(w.at("positive").get<std::string>())};
    }
    if (j.contains("rstar_source")) r.rstar_source = j["rstar_source"].get<std::size_t>();
    if (j.contains("radical_source")) r.radical_source = j["radical_source"].get<std::size_t>();
    if (j.contains("refinement")) r.refinement = parse_weight(j["refinement"].get<std::string>());
    r.notes = strings(j.at("notes"));
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("cone report: ") + e.what());
  }
}

Json to_json(const ChainCheck& c) {
  Json j;
  j["ok"] = c.ok;
  j["undecided"] = c.undecided;
  j["violations"] = c.violations;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  if (c.witness) j["witness"] = to_string(*c.witness);
  j["cones"] = c.cones;
  j["steps"] = c.steps;
  if (c.ratio) {
    j["ratio"] = c.ratio->get_str();
    j["bound"] = "l(d) = ceil(" + c.ratio->get_str() + " * d)";
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
    if (j.contains("witness")) c.witness = parse_weight(j["witness"].get<std::string>());
    c.cones = j.at("cones").get<std::vector<std::size_t>>();
    c.steps = strings(j.at("steps"));
    if (j.contains("ratio")) c.ratio = parse_rational(j["ratio"].get<std::string>());
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

Json to_json(const ComponentClassification& c) {
  Json j;
  j["target"] = to_string(c.target);
  j["product_verified"] = c.product_verified;
  j["scalar"] = c.scalar.get_str();
  if (c.weight) j["weight"] = to_string(*c.weight);
  Json comps = Json::array();
  for (const auto& v : c.components) {
    Json x;
    x["component"] = to_string(v.component);
    x["multiplicity"] = v.multiplicity;
    x["real_radical"] = to_string(v.verdict);
    x["rstar_zero"] = to_string(v.rstar);
    x["rule"] = v.rule;
    comps.push_back(x);
  }
  j["components"] = comps;
  if (c.conclusion) j["conclusion"] = *c.conclusion;
  return j;
}

Json to_json(const AuditResult& a) {
  Json j;
  j["assumption"] = "generators form a universal Groebner basis (recorded, not verified)";
  j["passed"] = a.passed;
  j["offending_terms"] = a.offending;
  j["steps"] = a.steps;
  if (a.passed) j["conclusion"] = "|Delta_Rad(I)| = R^n";
  return j;
}

Json to_json(const QMRepresentation& rep) {
  Json j;
  j["generators"] = to_json(rep.generators);
  Json sq = Json::array();
  for (const auto& l : rep.squares) sq.push_back(to_json(l));
  j["squares"] = sq;
  j["h"] = to_string(rep.h);
  return j;
}

QMRepresentation representation_from_json(const Json& j, const RingPtr& ring) {
  try {
    QMRepresentation rep{{}, {}, parse_polynomial(j.at("h").get<std::string>(), ring)};
    for (const auto& s : strings(j.at("generators"))) rep.generators.push_back(parse_polynomial(s, ring));
    for (const auto& l : j.at("squares")) {
      rep.squares.emplace_back();
      for (const auto& s : strings(l)) rep.squares.back().push_back(parse_polynomial(s, ring));
    }
    return rep;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("representation: ") + e.what());
  }
}

Json to_json(const ReductionTrace& t) {
  Json j;
  j["target_degree"] = t.target_degree.get_str();
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json x;
    x["degree"] = s.degree.get_str();
    x["active"] = list(s.active, [](const auto& p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; });
    x["top"] = to_string(s.top);
    x["cancelled"] = to_json(s.cancelled);
    x["lifts"] = to_json(s.lifts);
    x["next_degree"] = s.next_degree.get_str();
    steps.push_back(x);
  }
  j["steps"] = steps;
  return j;
}

Json make_report(const std::string& command, const std::vector<std::string>& args) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["arguments"] = args;
  return j;
}

namespace {

void emit(YAML::Emitter& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object:
      if (j.empty()) {
        out << YAML::Flow << YAML::BeginMap << YAML::EndMap;
        break;
      }
      out << YAML::BeginMap;
      for (const auto& [k, v] : j.items()) {
        out << YAML::Key << k << YAML::Value;
        emit(out, v);
      }
      out << YAML::EndMap;
      break;
    case Json::value_t::array:
      if (j.empty()) {
        out << YAML::Flow << YAML::BeginSeq << YAML::EndSeq;
        break;
      }
      out << YAML::BeginSeq;
      for (const auto& v : j) emit(out, v);
      out << YAML::EndSeq;
      break;
    case Json::value_t::string: out << YAML::DoubleQuoted << j.get<std::string>(); break;
    case Json::value_t::boolean: out << (j.get<bool>() ? "true" : "false"); break;
    case Json::value_t::number_integer: out << j.get<long long>(); break;
    case Json::value_t::number_unsigned: out << j.get<unsigned long long>(); break;
    case Json::value_t::number_float: out << j.get<double>(); break;
    default: out << YAML::Null; break;
  }
}

Json from_yaml(const YAML::Node& n) {
  switch (n.Type()) {
    case YAML::NodeType::Map: {
      Json j = Json::object();
      for (const auto& kv : n) j[kv.first.as<std::string>()] = from_yaml(kv.second);
      return j;
    }
    case YAML::NodeType::Sequence: {
      Json j = Json::array();
      for (const auto& v : n) j.push_back(from_yaml(v));
      return j;
    }
    case YAML::NodeType::Scalar: {
      const std::string& s = n.Scalar();
      if (n.Tag() == "!") return s;  // quoted: always a string
      if (s == "true") return true;
      if (s == "false") return false;
      if (s == "~" || s == "null") return nullptr;
      try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size()) return v;
      } catch (const std::exception&) {
      }
      return s;
    }
    default: return nullptr;
  }
}

}  // namespace

std::string render(const Json& doc, ReportFormat format) {
  if (format == ReportFormat::Structured) return doc.dump(2) + "\n";
  YAML::Emitter out;
  out.SetIndent(2);
  emit(out, doc);
  return std::string(out.c_str()) + "\n";
}

Json parse_report(const std::string& text, ReportFormat format) {
  if (format == ReportFormat::Structured) {
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("report: ") + e.what());
    }
  }
  try {
    return from_yaml(YAML::Load(text));
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace rrtrop
