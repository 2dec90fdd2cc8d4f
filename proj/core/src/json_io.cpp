#include "nilorb/json_io.hpp"

#include "nilorb/error.hpp"

namespace nilorb {

using nlohmann::json;

namespace {

std::string_view kind_name(SingularityClass::Kind k) {
  switch (k) {
    case SingularityClass::Kind::KleinianA: return "kleinian_a";
    case SingularityClass::Kind::KleinianD: return "kleinian_d";
    case SingularityClass::Kind::TwoBranchesA: return "two_branches_a";
    case SingularityClass::Kind::MinimalClosure: return "minimal_closure";
    case SingularityClass::Kind::NotMinimal: return "not_minimal";
    case SingularityClass::Kind::UnknownNonMinimal: return "unknown_non_minimal";
  }
  return "?";
}

SingularityClass::Kind parse_kind(const std::string& s) {
  using K = SingularityClass::Kind;
  for (K k : {K::KleinianA, K::KleinianD, K::TwoBranchesA, K::MinimalClosure, K::NotMinimal, K::UnknownNonMinimal}) {
    if (kind_name(k) == s) return k;
  }
  throw DomainError("unknown singularity kind '" + s + "'");
}

NormalityVerdict::Status parse_status(const std::string& s) {
  using S = NormalityVerdict::Status;
  for (S st : {S::Normal, S::NonNormal, S::VeryEvenUnsupported}) {
    if (to_string(st) == s) return st;
  }
  throw DomainError("unknown normality status '" + s + "'");
}

}  // namespace

void to_json(json& j, const Partition& p) { j = std::vector<int>(p.parts().begin(), p.parts().end()); }
void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, Eps e) { j = sign(e); }
void from_json(const json& j, Eps& e) {
  const int v = j.get<int>();
  if (v != 1 && v != -1) throw DomainError("eps must be 1 or -1");
  e = static_cast<Eps>(v);
}

void to_json(json& j, const ClassicalAlgebra& g) { j = {{"series", to_string(g.series)}, {"n", g.n}}; }
void from_json(const json& j, ClassicalAlgebra& g) {
  g = ClassicalAlgebra::make(parse_series(j.at("series").get<std::string>()), j.at("n").get<int>());
}

void to_json(json& j, const Orbit& o) {
  j = {{"series", to_string(o.algebra().series)},
       {"n", o.algebra().n},
       {"partition", o.partition()},
       {"very_even", o.very_even()},
       {"so_label", nullptr}};
  if (o.so_label()) j["so_label"] = to_string(*o.so_label());
}
void from_json(const json& j, Orbit& o) {
  const auto g = j.get<ClassicalAlgebra>();
  std::optional<SoLabel> label;
  if (j.contains("so_label") && !j.at("so_label").is_null()) label = parse_so_label(j.at("so_label").get<std::string>());
  o = orbit_from_partition(g, j.at("partition").get<Partition>(), label);
}

void to_json(json& j, const WeightedDynkinDiagram& d) {
  j = {{"cartan_type", std::string(1, d.cartan_type)}, {"rank", d.rank}, {"labels", d.labels}};
}
void from_json(const json& j, WeightedDynkinDiagram& d) {
  const auto t = j.at("cartan_type").get<std::string>();
  if (t.size() != 1) throw DomainError("cartan_type must be one letter");
  d.cartan_type = t[0];
  d.rank = j.at("rank").get<int>();
  d.labels = j.at("labels").get<std::vector<int>>();
}

void to_json(json& j, const ErasureStep& s) {
  if (s.kind == ErasureStep::Kind::Rows) {
    j = {{"kind", "rows"}, {"stage", s.stage}, {"rows", s.rows}};
  } else {
    j = {{"kind", "columns"}, {"stage", s.stage}, {"columns", s.columns}};
  }
}
void from_json(const json& j, ErasureStep& s) {
  const auto kind = j.at("kind").get<std::string>();
  s = ErasureStep{};
  s.stage = j.at("stage").get<int>();
  if (kind == "rows") {
    s.kind = ErasureStep::Kind::Rows;
    s.rows = j.at("rows").get<std::vector<int>>();
  } else if (kind == "columns") {
    s.kind = ErasureStep::Kind::Columns;
    s.columns = j.at("columns").get<int>();
  } else {
    throw DomainError("unknown erasure kind '" + kind + "'");
  }
}

void to_json(json& j, const Reduction& r) {
  j = {{"lambda_p", r.lambda_p}, {"eta_p", r.eta_p}, {"eps_p", r.eps_p}, {"steps", r.steps}};
}
void from_json(const json& j, Reduction& r) {
  r.lambda_p = j.at("lambda_p").get<Partition>();
  r.eta_p = j.at("eta_p").get<Partition>();
  r.eps_p = j.at("eps_p").get<Eps>();
  r.steps = j.value("steps", json::array()).get<std::vector<ErasureStep>>();
}

void to_json(json& j, const SingularityClass& c) {
  j = {{"kind", kind_name(c.kind)}, {"label", c.label()}, {"index", c.index}};
  j["series"] = c.series ? json(std::string(1, c.series)) : json(nullptr);
  j["kp_type"] = c.kp_type ? json(std::string(1, to_char(*c.kp_type))) : json(nullptr);
  j["reduced"] = c.reduced ? json(*c.reduced) : json(nullptr);
}
void from_json(const json& j, SingularityClass& c) {
  c = SingularityClass{};
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.index = j.value("index", 0);
  if (j.contains("series") && !j["series"].is_null()) c.series = j["series"].get<std::string>().at(0);
  if (j.contains("kp_type") && !j["kp_type"].is_null()) c.kp_type = parse_kp_type(j["kp_type"].get<std::string>().at(0));
  if (j.contains("reduced") && !j["reduced"].is_null()) c.reduced = j["reduced"].get<Reduction>();
}

void to_json(json& j, const NormalityVerdict& v) {
  j = {{"status", to_string(v.status)}, {"witnesses", v.witnesses}, {"hesselink_applies", v.hesselink_applies}};
}
void from_json(const json& j, NormalityVerdict& v) {
  v.status = parse_status(j.at("status").get<std::string>());
  v.witnesses = j.value("witnesses", json::array()).get<std::vector<Partition>>();
  v.hesselink_applies = j.value("hesselink_applies", false);
}

void to_json(json& j, const SliceReport& r) {
  j = {{"empty", r.empty}, {"dimension", r.dimension}};
  j["components"] = r.components ? json(*r.components) : json(nullptr);
  j["singularity"] = r.singularity ? json(*r.singularity) : json(nullptr);
}
void from_json(const json& j, SliceReport& r) {
  r = SliceReport{};
  r.empty = j.at("empty").get<bool>();
  r.dimension = j.at("dimension").get<long>();
  if (!j.at("components").is_null()) r.components = j["components"].get<int>();
  if (!j.at("singularity").is_null()) r.singularity = j["singularity"].get<SingularityClass>();
}

void to_json(json& j, const TableRow& r) {
  j = {{"lambda", r.lambda},       {"eta", r.eta},         {"eps_prime", r.eps_prime},
       {"lambda_prime", r.lambda_prime}, {"eta_prime", r.eta_prime}, {"type", std::string(1, to_char(r.type))}};
}
void from_json(const json& j, TableRow& r) {
  r.lambda = j.at("lambda").get<Partition>();
  r.eta = j.at("eta").get<Partition>();
  r.eps_prime = j.at("eps_prime").get<Eps>();
  r.lambda_prime = j.at("lambda_prime").get<Partition>();
  r.eta_prime = j.at("eta_prime").get<Partition>();
  r.type = parse_kp_type(j.at("type").get<std::string>().at(0));
}

void to_json(json& j, const FamilySpec& f) {
  j = {{"series", to_string(f.series)}, {"family", to_string(f.family)}, {"q", f.q}, {"s", f.s}, {"rank", f.rank}};
}
void from_json(const json& j, FamilySpec& f) {
  f.series = parse_adm_series(j.at("series").get<std::string>());
  f.family = parse_family(j.at("family").get<std::string>());
  f.q = j.at("q").get<int>();
  f.s = j.at("s").get<int>();
  f.rank = j.at("rank").get<int>();
}

void to_json(json& j, const VerificationReport& r) {
  json mismatches = json::array();
  for (const Mismatch& m : r.mismatches) {
    json e = {{"spec", m.spec}, {"lambda", m.lambda}, {"predicted", nullptr}, {"produced", nullptr}};
    if (m.predicted) e["predicted"] = {{"pattern", m.predicted->pattern_id}, {"row", m.predicted->row}};
    if (m.produced) e["produced"] = *m.produced;
    mismatches.push_back(std::move(e));
  }
  json skipped = json::array();
  for (const SkippedRow& s : r.skipped) {
    skipped.push_back({{"spec", s.spec}, {"pattern", s.pattern_id}, {"reason", s.reason}});
  }
  j = {{"q_max", r.q_max},
       {"r_max", r.r_max},
       {"instances", r.instances},
       {"rows_checked", r.rows_checked},
       {"type_e_hits", r.type_e_hits},
       {"normal", r.normal},
       {"non_normal", r.non_normal},
       {"ok", r.ok()},
       {"mismatches", std::move(mismatches)},
       {"skipped", std::move(skipped)},
       {"patterns_matched", r.patterns_matched},
       {"patterns_vacuous", r.patterns_vacuous},
       {"patterns_unreached", r.patterns_unreached}};
}

void to_json(json& j, const QuadPoly& p) {
  json terms = json::array();
  for (const auto& [ij, c] : p.terms()) terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", c}});
  j = {{"rank", p.rank()}, {"terms", std::move(terms)}, {"text", p.to_string()}};
}
void from_json(const json& j, QuadPoly& p) {
  p = QuadPoly(j.at("rank").get<int>());
  for (const json& t : j.at("terms")) p.add(t.at("i").get<int>(), t.at("j").get<int>(), t.at("coeff").get<Rational>());
}

void to_json(json& j, const CartanPoint& p) {
  j = {{"basis", p.basis == CartanPoint::Basis::Omega ? "omega" : "eps"}, {"coords", p.coords}};
}
void from_json(const json& j, CartanPoint& p) {
  const auto basis = j.at("basis").get<std::string>();
  if (basis != "omega" && basis != "eps") throw DomainError("basis must be omega or eps");
  p.basis = basis == "omega" ? CartanPoint::Basis::Omega : CartanPoint::Basis::Eps;
  p.coords = j.at("coords").get<std::vector<Rational>>();
}

json sing_report(const Partition& lam, const Partition& eta, Eps eps) {
  const Reduction red = reduce(lam, eta, eps);
  const SingularityClass c = degeneration_singularity(lam, eta, eps);
  const ClassicalAlgebra g = algebra_for(eps, lam.total());
  json j = {{"lambda", lam},
            {"eta", eta},
            {"eps", eps},
            {"reduction", {{"lambda_p", red.lambda_p}, {"eta_p", red.eta_p}, {"eps_p", red.eps_p}}},
            {"kp_type", nullptr},
            {"singularity", c.label()},
            {"codim", codim_degeneration(g, lam, eta)},
            {"components", nullptr}};
  if (c.kp_type) j["kp_type"] = std::string(1, to_char(*c.kp_type));
  if (auto b = branches_at(lam, eta, eps)) j["components"] = *b;
  return j;
}

}  // namespace nilorb

namespace nlohmann {
void adl_serializer<nilorb::Rational>::from_json(const json& j, nilorb::Rational& x) {
  if (j.is_number_integer()) {
    x = nilorb::Rational(j.get<long long>());
  } else {
    x = nilorb::parse_rational(j.get<std::string>());
  }
}
}  // namespace nlohmann
