#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilorb/admissible.hpp"
#include "nilorb/error.hpp"
#include "nilorb/exceptional.hpp"
#include "nilorb/json_io.hpp"
#include "nilorb/kraft_procesi.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/w2.hpp"

namespace nilorb::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string eps;
  std::string series;
  int n = 0;
  int rank = 0;
  std::string lambda;
  std::string eta;
  std::string label;
  std::string type;
  std::string adm_series;
  std::string family;
  int q = 0;
  int s = 0;
  int q_max = 9;
  int r_max = 12;
  int which = 0;
  std::string k;
  int p = 0;
  std::string omega;
  std::string eps_coords;
  std::size_t count = 10000;
  std::uint64_t seed = 1;
  std::string golden;
  bool update = false;
};

void add_format(CLI::App* app, Options& o, std::vector<std::string> allowed) {
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

void need_format(const Options& o, std::initializer_list<std::string_view> ok) {
  if (std::find(ok.begin(), ok.end(), o.format) == ok.end()) {
    throw UsageError("format '" + o.format + "' is not available for this command");
  }
}

ClassicalAlgebra algebra(const Options& o) {
  if (o.series.empty()) throw UsageError("--series is required");
  if (o.n <= 0) throw UsageError("--n is required");
  return ClassicalAlgebra::make(parse_series(o.series), o.n);
}

Eps eps_flag(const Options& o) {
  if (o.eps.empty()) throw UsageError("--eps is required");
  return parse_eps(o.eps);
}

Partition lambda_flag(const Options& o) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  return parse_partition(o.lambda);
}

Partition eta_flag(const Options& o) {
  if (o.eta.empty()) throw UsageError("--eta is required");
  return parse_partition(o.eta);
}

std::optional<SoLabel> label_flag(const Options& o) {
  if (o.label.empty()) return std::nullopt;
  return parse_so_label(o.label);
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- partitions -----------------------------------------------------------

int cmd_partition(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const Partition lam = lambda_flag(o);
  json j = {{"partition", lam},
            {"total", lam.total()},
            {"dual", dual(lam)},
            {"valid_orthogonal", is_valid_eps(lam, Eps::Orthogonal)},
            {"valid_symplectic", is_valid_eps(lam, Eps::Symplectic)},
            {"collapse_orthogonal", collapse(lam, Eps::Orthogonal)},
            {"collapse_symplectic", nullptr}};
  if (lam.total() % 2 == 0) j["collapse_symplectic"] = collapse(lam, Eps::Symplectic);
  if (o.format == "json") {
    emit(out, j);
    return kOk;
  }
  out << "partition   " << paren(lam) << " of " << lam.total() << "\n"
      << "dual        " << paren(dual(lam)) << "\n"
      << "orthogonal  " << (is_valid_eps(lam, Eps::Orthogonal) ? "yes" : "no") << ", collapse "
      << paren(collapse(lam, Eps::Orthogonal)) << "\n"
      << "symplectic  " << (is_valid_eps(lam, Eps::Symplectic) ? "yes" : "no");
  if (lam.total() % 2 == 0) out << ", collapse " << paren(collapse(lam, Eps::Symplectic));
  out << "\n";
  return kOk;
}

int cmd_hasse(const Options& o, std::ostream& out) {
  const Eps eps = eps_flag(o);
  if (o.n <= 0) throw UsageError("--n is required");
  const auto nodes = enumerate_eps(o.n, eps);
  const auto edges = hasse(o.n, eps);
  if (o.format == "json") {
    json e = json::array();
    for (const auto& edge : edges) e.push_back({{"from", edge.from}, {"to", edge.to}});
    emit(out, {{"n", o.n}, {"eps", eps}, {"nodes", nodes}, {"edges", e}});
  } else if (o.format == "tsv") {
    out << "from\tto\n";
    for (const auto& edge : edges) out << edge.from.to_string() << "\t" << edge.to.to_string() << "\n";
  } else if (o.format == "dot") {
    out << "digraph hasse {\n";
    for (const auto& p : nodes) out << "  \"" << p.to_string() << "\";\n";
    for (const auto& edge : edges) {
      out << "  \"" << edge.from.to_string() << "\" -> \"" << edge.to.to_string() << "\";\n";
    }
    out << "}\n";
  } else {
    for (const auto& edge : edges) out << paren(edge.from) << " -> " << paren(edge.to) << "\n";
  }
  return kOk;
}

int cmd_degen(const Options& o, std::ostream& out) {
  need_format(o, {"json", "tsv", "pretty"});
  const Eps eps = eps_flag(o);
  const Partition lam = lambda_flag(o);
  const ClassicalAlgebra g = algebra_for(eps, lam.total());
  const auto etas = minimal_degenerations(lam, eps);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& eta : etas) {
      const SingularityClass c = degeneration_singularity(lam, eta, eps);
      arr.push_back({{"eta", eta},
                     {"codim", codim_degeneration(g, lam, eta)},
                     {"kp_type", std::string(1, to_char(*c.kp_type))},
                     {"singularity", c.label()}});
    }
    emit(out, {{"lambda", lam}, {"eps", eps}, {"minimal_degenerations", arr}});
  } else {
    if (o.format == "tsv") out << "eta\tcodim\tkp_type\tsingularity\n";
    for (const auto& eta : etas) {
      const SingularityClass c = degeneration_singularity(lam, eta, eps);
      if (o.format == "tsv") {
        out << eta.to_string() << "\t" << codim_degeneration(g, lam, eta) << "\t" << to_char(*c.kp_type) << "\t"
            << c.label() << "\n";
      } else {
        out << paren(lam) << " > " << paren(eta) << "  codim " << codim_degeneration(g, lam, eta) << "  type "
            << to_char(*c.kp_type) << "  " << c.label() << "\n";
      }
    }
  }
  return kOk;
}

// --- orbits ---------------------------------------------------------------

int cmd_orbit(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const ClassicalAlgebra g = algebra(o);
  const Orbit orbit = orbit_from_partition(g, lambda_flag(o), label_flag(o));
  json j = {{"orbit", orbit}, {"dimension", dim_orbit(orbit)}, {"algebra_dimension", g.dimension()},
            {"weighted_dynkin", nullptr}};
  if (!orbit.very_even() || orbit.so_label()) j["weighted_dynkin"] = weighted_dynkin(orbit);
  if (o.format == "json") {
    emit(out, j);
    return kOk;
  }
  out << to_string(g.series) << "(" << g.n << ") orbit " << paren(orbit.partition());
  if (orbit.so_label()) out << " " << to_string(*orbit.so_label());
  out << "\ndimension " << dim_orbit(orbit) << " of " << g.dimension() << "\n";
  if (orbit.very_even()) out << "very even\n";
  if (!j["weighted_dynkin"].is_null()) {
    out << "diagram  ";
    for (int v : weighted_dynkin(orbit).labels) out << " " << v;
    out << "\n";
  }
  return kOk;
}

int cmd_dynkin(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const ClassicalAlgebra g = algebra(o);
  const WeightedDynkinDiagram d = weighted_dynkin(orbit_from_partition(g, lambda_flag(o), label_flag(o)));
  if (o.format == "json") {
    emit(out, d);
  } else {
    out << d.cartan_type << d.rank << ":";
    for (int v : d.labels) out << " " << v;
    out << "\n";
  }
  return kOk;
}

// --- degenerations --------------------------------------------------------

int cmd_sing(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const Eps eps = eps_flag(o);
  const json j = sing_report(lambda_flag(o), eta_flag(o), eps);
  if (o.format == "json") {
    emit(out, j);
    return kOk;
  }
  out << "codim " << j["codim"] << ", singularity " << j["singularity"].get<std::string>();
  if (!j["kp_type"].is_null()) out << " (type " << j["kp_type"].get<std::string>() << ")";
  out << "\nreduced to (" << j["reduction"]["lambda_p"].get<Partition>().to_string() << ") > ("
      << j["reduction"]["eta_p"].get<Partition>().to_string() << "), eps' = " << j["reduction"]["eps_p"] << "\n";
  return kOk;
}

int cmd_normal(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const NormalityVerdict v = is_normal_closure(algebra(o), lambda_flag(o));
  if (o.format == "json") {
    emit(out, v);
  } else {
    out << to_string(v.status);
    for (const auto& w : v.witnesses) out << " " << paren(w);
    out << "\n";
  }
  return kOk;
}

int cmd_slice(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const SliceReport r = slice_report(algebra(o), lambda_flag(o), eta_flag(o));
  if (o.format == "json") {
    emit(out, r);
    return kOk;
  }
  if (r.empty) {
    out << "empty slice\n";
    return kOk;
  }
  out << "dimension " << r.dimension << ", components "
      << (r.components ? std::to_string(*r.components) : std::string("unknown"));
  if (r.singularity) out << ", singularity " << r.singularity->label();
  out << "\n";
  return kOk;
}

// --- admissible families --------------------------------------------------

std::string pattern_for(const FamilySpec& spec, const TableRow& row) {
  for (const PredictedRow& p : predicted_rows(spec)) {
    if (p.row == row) return p.pattern_id;
  }
  return "-";
}

constexpr std::string_view kTableHeader =
    "family\tq\ts\trank\tlambda\tpattern\teta\teps_prime\tlambda_prime\teta_prime\ttype\n";

void table_tsv(std::ostream& out, const FamilySpec& spec) {
  const Partition lam = family_partition(spec);
  for (const TableRow& row : codim2_rows(lam, eps_of(spec.series))) {
    out << to_string(spec.family) << "\t" << spec.q << "\t" << spec.s << "\t" << spec.rank << "\t"
        << lam.to_string() << "\t" << pattern_for(spec, row) << "\t" << row.eta.to_string() << "\t"
        << sign(row.eps_prime) << "\t" << row.lambda_prime.to_string() << "\t" << row.eta_prime.to_string() << "\t"
        << to_char(row.type) << "\n";
  }
}

std::vector<FamilySpec> members_at(AdmSeries series, int q, int rank) {
  std::vector<FamilySpec> out;
  for (Family f : families_of(series)) {
    for (const FamilySpec& spec : family_members(series, f, q, rank)) {
      if (spec.q == q && spec.rank == rank) out.push_back(spec);
    }
  }
  return out;
}

int adm_table(const Options& o, std::ostream& out) {
  need_format(o, {"json", "tsv", "pretty"});
  if (o.adm_series.empty() || o.q <= 0 || o.rank <= 0) throw UsageError("--series, --q and --rank are required");
  const AdmSeries series = parse_adm_series(o.adm_series);
  const auto members = members_at(series, o.q, o.rank);
  if (o.format == "tsv") {
    out << kTableHeader;
    for (const auto& spec : members) table_tsv(out, spec);
    return kOk;
  }
  json arr = json::array();
  for (const auto& spec : members) {
    json rows = json::array();
    const Partition lam = family_partition(spec);
    for (const TableRow& row : codim2_rows(lam, eps_of(series))) {
      json r = row;
      r["pattern"] = pattern_for(spec, row);
      rows.push_back(std::move(r));
    }
    arr.push_back({{"spec", spec}, {"lambda", lam}, {"caveat", has_caveat(series, spec.family)}, {"rows", rows}});
  }
  if (o.format == "json") {
    emit(out, {{"series", to_string(series)}, {"q", o.q}, {"rank", o.rank}, {"members", arr}});
    return kOk;
  }
  for (const auto& m : arr) {
    out << to_string(series) << " " << m["spec"]["family"].get<std::string>() << " s=" << m["spec"]["s"] << "  "
        << paren(m["lambda"].get<Partition>()) << (m["caveat"].get<bool>() ? "  [caveat]" : "") << "\n";
    for (const auto& r : m["rows"]) {
      out << "    eta " << paren(r["eta"].get<Partition>()) << "  eps' " << r["eps_prime"] << "  "
          << paren(r["lambda_prime"].get<Partition>()) << " > " << paren(r["eta_prime"].get<Partition>()) << "  "
          << r["type"].get<std::string>() << "  " << r["pattern"].get<std::string>() << "\n";
    }
  }
  return kOk;
}

std::string golden_table(AdmSeries series, int q_max, int r_max) {
  std::ostringstream os;
  os << kTableHeader;
  for (Family f : families_of(series)) {
    for (const FamilySpec& spec : family_members(series, f, q_max, r_max)) table_tsv(os, spec);
  }
  return os.str();
}

int adm_verify(const Options& o, std::ostream& out, std::ostream& err) {
  need_format(o, {"json", "pretty"});
  const VerificationReport rep = verify_paper_tables(o.q_max, o.r_max);
  json j = rep;
  int code = kOk;
  if (!o.golden.empty()) {
    namespace fs = std::filesystem;
    json files = json::object();
    for (AdmSeries series : {AdmSeries::SP, AdmSeries::SO_ODD, AdmSeries::SO_EVEN}) {
      const fs::path path = fs::path(o.golden) / (std::string(to_string(series)) + ".tsv");
      const std::string fresh = golden_table(series, o.q_max, o.r_max);
      if (o.update) {
        fs::create_directories(path.parent_path());
        std::ofstream(path, std::ios::binary) << fresh;
        files[path.filename().string()] = "written";
        continue;
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) throw DomainError("golden file " + path.string() + " is missing");
      std::stringstream stored;
      stored << in.rdbuf();
      const bool same = stored.str() == fresh;
      files[path.filename().string()] = same ? "match" : "differs";
      if (!same) {
        err << "golden mismatch: " << path.string() << "\n";
        code = kDomainError;
      }
    }
    j["golden"] = files;
  }
  if (o.format == "json") {
    emit(out, j);
    return code;
  }
  out << "instances " << rep.instances << ", rows " << rep.rows_checked << ", type e " << rep.type_e_hits
      << ", normal " << rep.normal << ", non-normal " << rep.non_normal << "\n"
      << "patterns matched " << rep.patterns_matched.size() << ", vacuous " << rep.patterns_vacuous.size()
      << ", unreached " << rep.patterns_unreached.size() << ", skipped instances " << rep.skipped.size() << "\n"
      << "mismatches " << rep.mismatches.size() << "\n";
  for (const Mismatch& m : rep.mismatches) {
    out << "  " << to_string(m.spec.series) << " " << to_string(m.spec.family) << " q=" << m.spec.q
        << " s=" << m.spec.s << " r=" << m.spec.rank << " " << paren(m.lambda) << ": ";
    if (m.predicted) {
      out << "predicted " << m.predicted->pattern_id << " eta " << paren(m.predicted->row.eta) << " not produced\n";
    } else {
      out << "unpredicted eta " << paren(m.produced->eta) << " type " << to_char(m.produced->type) << "\n";
    }
  }
  if (j.contains("golden")) {
    for (const auto& [file, state] : j["golden"].items()) out << file << ": " << state.get<std::string>() << "\n";
  }
  return code;
}

int adm_family(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  if (o.adm_series.empty() || o.family.empty() || o.q <= 0 || o.rank <= 0) {
    throw UsageError("--series, --family, --q, --s and --rank are required");
  }
  const FamilySpec spec{parse_adm_series(o.adm_series), parse_family(o.family), o.q, o.s, o.rank};
  const Partition lam = family_partition(spec);
  if (o.format == "json") {
    emit(out, {{"spec", spec}, {"lambda", lam}, {"caveat", has_caveat(spec.series, spec.family)}});
  } else {
    out << paren(lam) << "\n";
  }
  return kOk;
}

int adm_table1(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const Partition lam = table1_partition(o.which, o.rank);
  if (o.format == "json") {
    emit(out, {{"case", o.which}, {"rank", o.rank}, {"partition", lam}});
  } else {
    out << paren(lam) << "\n";
  }
  return kOk;
}

int adm_charge(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  if (o.k.empty()) throw UsageError("--k is required");
  const Rational c = central_charge_typeD(parse_rational(o.k), o.rank);
  if (o.format == "json") {
    emit(out, {{"k", to_string(parse_rational(o.k))}, {"rank", o.rank}, {"central_charge", to_string(c)}});
  } else {
    out << to_string(c) << "\n";
  }
  return kOk;
}

int adm_virasoro(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const Rational c = virasoro_c(o.p, o.q);
  if (o.format == "json") {
    emit(out, {{"p", o.p}, {"q", o.q}, {"c", to_string(c)}});
  } else {
    out << to_string(c) << "\n";
  }
  return kOk;
}

// --- exceptional ----------------------------------------------------------

int cmd_exceptional(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  if (o.type.empty()) {
    if (!o.label.empty()) throw UsageError("--label needs --type");
    emit(out, export_exceptional_tables());
    return kOk;
  }
  const ExceptionalType t = parse_exceptional_type(o.type);
  if (o.label.empty()) {
    const json all = export_exceptional_tables();
    emit(out, all[std::string(to_string(t))]);
    return kOk;
  }
  const BalaCarterLabel label = BalaCarterLabel::parse(t, o.label);
  const NonNormalStatus st = nonnormal_status(label);
  json j = {{"type", to_string(t)},
            {"label", label.text()},
            {"has_branching", has_branching(label)},
            {"slice_irreducible", slice_irreducible_exceptional(label)},
            {"non_normal", {{"listed", st.listed}, {"exhaustive", st.exhaustive}}},
            {"note", nullptr}};
  if (st.note) j["note"] = *st.note;
  if (o.format == "json") {
    emit(out, j);
    return kOk;
  }
  out << to_string(t) << " " << label.text() << ": " << (has_branching(label) ? "branching" : "unibranch") << ", "
      << (st.listed ? "non-normal" : (st.exhaustive ? "normal" : "not listed as non-normal")) << "\n";
  if (st.note) out << "note: " << *st.note << "\n";
  return kOk;
}

// --- w2 -------------------------------------------------------------------

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  return out;
}

int w2_gens(const Options& o, std::ostream& out) {
  need_format(o, {"json", "tsv", "pretty"});
  const auto gens = w2_generators(o.rank);
  if (o.format == "json") {
    emit(out, {{"rank", o.rank}, {"count", gens.size()}, {"generators", gens}});
  } else if (o.format == "tsv") {
    out << "index\tpolynomial\n";
    for (std::size_t i = 0; i < gens.size(); ++i) out << i + 1 << "\t" << gens[i].to_string() << "\n";
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) out << "p" << i + 1 << " = " << gens[i].to_string() << "\n";
  }
  return kOk;
}

int w2_check(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  if (o.omega.empty() == o.eps_coords.empty()) throw UsageError("give exactly one of --omega and --eps-coords");
  CartanPoint p;
  if (!o.omega.empty()) {
    p = {CartanPoint::Basis::Omega, rational_list(o.omega)};
  } else {
    p = {CartanPoint::Basis::Eps, rational_list(o.eps_coords)};
  }
  if (p.rank() != o.rank) throw DomainError("point has " + std::to_string(p.rank()) + " coordinates, rank is " +
                                            std::to_string(o.rank));
  const auto gens = w2_generators(o.rank);
  const LineMembership m = eps_line_membership(p);
  json j = {{"rank", o.rank},
            {"omega", eps_to_omega(p).coords},
            {"eps", omega_to_eps(p).coords},
            {"values", evaluate(gens, p)},
            {"vanishes", vanishes_at(gens, p)},
            {"on_axis", m.member},
            {"axis", nullptr}};
  if (m.axis) j["axis"] = *m.axis;
  if (o.format == "json") {
    emit(out, j);
  } else {
    out << (j["vanishes"].get<bool>() ? "vanishes" : "does not vanish") << "; "
        << (m.member ? (m.axis ? "on axis " + std::to_string(*m.axis) : std::string("origin")) : "off the axes")
        << "\n";
  }
  return kOk;
}

int w2_sample(const Options& o, std::ostream& out) {
  need_format(o, {"json", "pretty"});
  const auto gens = w2_generators(o.rank);
  std::size_t vanishing = 0;
  for (const CartanPoint& p : sample_off_axis(o.rank, o.count, o.seed)) {
    if (vanishes_at(gens, p)) ++vanishing;
  }
  if (o.format == "json") {
    emit(out, {{"rank", o.rank}, {"seed", o.seed}, {"samples", o.count}, {"vanishing", vanishing}});
  } else {
    out << vanishing << " of " << o.count << " off-axis points vanish\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nilpotent orbits of classical Lie algebras: partitions, degenerations, slices", "nilorb"};
  app.require_subcommand(1);

  const std::vector<std::string> basic = {"json", "pretty"};
  const std::vector<std::string> tabular = {"json", "tsv", "pretty"};

  auto* partition = app.add_subcommand("partition", "Dual, validity and collapses of a partition");
  partition->add_option("--lambda", o.lambda, "Partition, e.g. 7^2,4")->required();
  add_format(partition, o, basic);

  auto* orbit = app.add_subcommand("orbit", "Orbit descriptor, dimension and weighted Dynkin diagram");
  auto* hasse_cmd = app.add_subcommand("hasse", "Covering relation of P_eps(n)");
  auto* degen = app.add_subcommand("degen", "Minimal degenerations of a partition");
  auto* sing = app.add_subcommand("sing", "Singularity of a closure along a smaller orbit");
  auto* normal = app.add_subcommand("normal", "Normality of an orbit closure");
  auto* slice = app.add_subcommand("slice", "Nilpotent Slodowy slice report");
  auto* dynkin = app.add_subcommand("dynkin", "Weighted Dynkin diagram");
  auto* exceptional = app.add_subcommand("exceptional", "Branching and non-normal exceptional orbits");
  auto* admissible = app.add_subcommand("admissible", "Admissible families and related numerology");
  auto* w2 = app.add_subcommand("w2", "Quadratic generators on the Cartan of so_{2r+1}");

  for (CLI::App* sub : {orbit, normal, slice, dynkin}) {
    sub->add_option("--series", o.series, "sl, so or sp")->required();
    sub->add_option("--n", o.n, "Size of the natural representation")->required();
    sub->add_option("--lambda", o.lambda, "Partition")->required();
  }
  for (CLI::App* sub : {orbit, dynkin}) sub->add_option("--label", o.label, "I or II for very even partitions");
  slice->add_option("--eta", o.eta, "Smaller partition")->required();
  add_format(orbit, o, basic);
  add_format(normal, o, basic);
  add_format(slice, o, basic);
  add_format(dynkin, o, basic);

  hasse_cmd->add_option("--eps", o.eps, "1 or -1")->required();
  hasse_cmd->add_option("--n", o.n, "Total")->required();
  add_format(hasse_cmd, o, {"json", "tsv", "dot", "pretty"});

  for (CLI::App* sub : {degen, sing}) {
    sub->add_option("--eps", o.eps, "1 or -1")->required();
    sub->add_option("--lambda", o.lambda, "Partition")->required();
  }
  sing->add_option("--eta", o.eta, "Smaller partition")->required();
  add_format(degen, o, tabular);
  add_format(sing, o, basic);

  exceptional->add_option("--type", o.type, "G2, F4, E6, E7 or E8");
  exceptional->add_option("--label", o.label, "Bala-Carter label");
  add_format(exceptional, o, basic);

  admissible->require_subcommand(1);
  auto* adm_t = admissible->add_subcommand("table", "Codimension-2 rows of every family member at (q, rank)");
  adm_t->add_option("--series", o.adm_series, "sp, so-odd or so-even")->required();
  adm_t->add_option("--q", o.q, "q")->required();
  adm_t->add_option("--rank", o.rank, "Rank r")->required();
  add_format(adm_t, o, tabular);
  auto* adm_v = admissible->add_subcommand("verify", "Check every family member against the symbolic tables");
  adm_v->add_option("--q-max", o.q_max, "Largest q")->capture_default_str();
  adm_v->add_option("--r-max", o.r_max, "Largest rank")->capture_default_str();
  adm_v->add_option("--golden", o.golden, "Directory of golden TSV tables to compare against");
  adm_v->add_flag("--update", o.update, "Rewrite the golden tables instead of comparing");
  add_format(adm_v, o, basic);
  auto* adm_f = admissible->add_subcommand("family", "Partition of one family member");
  adm_f->add_option("--series", o.adm_series, "sp, so-odd or so-even")->required();
  adm_f->add_option("--family", o.family, "I, II, III, IV or V")->required();
  adm_f->add_option("--q", o.q, "q")->required();
  adm_f->add_option("--s", o.s, "s")->required();
  adm_f->add_option("--rank", o.rank, "Rank r")->required();
  add_format(adm_f, o, basic);
  auto* adm_1 = admissible->add_subcommand("table1", "Partition of the orbit in rows 5, 6, 7 of the known levels");
  adm_1->add_option("--case", o.which, "5, 6 or 7")->required();
  adm_1->add_option("--rank", o.rank, "Rank r")->required();
  add_format(adm_1, o, basic);
  auto* adm_c = admissible->add_subcommand("charge", "Central charge of the type D W-algebra at level k");
  adm_c->add_option("--k", o.k, "Level, e.g. -2 or 1/3")->required();
  adm_c->add_option("--rank", o.rank, "Rank r")->required();
  add_format(adm_c, o, basic);
  auto* adm_vir = admissible->add_subcommand("virasoro", "Minimal model central charge c_{p,q}");
  adm_vir->add_option("--p", o.p, "p")->required();
  adm_vir->add_option("--q", o.q, "q")->required();
  add_format(adm_vir, o, basic);

  w2->require_subcommand(1);
  auto* w2_g = w2->add_subcommand("gens", "List the generators");
  auto* w2_c = w2->add_subcommand("check", "Evaluate the generators at a point");
  auto* w2_s = w2->add_subcommand("sample", "Count vanishing generators on random off-axis points");
  for (CLI::App* sub : {w2_g, w2_c, w2_s}) sub->add_option("--rank", o.rank, "Rank r >= 3")->required();
  w2_c->add_option("--omega", o.omega, "Fundamental-weight coordinates c1,...,cr");
  w2_c->add_option("--eps-coords", o.eps_coords, "Epsilon coordinates a1,...,ar");
  w2_s->add_option("--count", o.count, "Number of samples")->capture_default_str();
  w2_s->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  add_format(w2_g, o, tabular);
  add_format(w2_c, o, basic);
  add_format(w2_s, o, basic);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (partition->parsed()) return cmd_partition(o, out);
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (hasse_cmd->parsed()) return cmd_hasse(o, out);
    if (degen->parsed()) return cmd_degen(o, out);
    if (sing->parsed()) return cmd_sing(o, out);
    if (normal->parsed()) return cmd_normal(o, out);
    if (slice->parsed()) return cmd_slice(o, out);
    if (dynkin->parsed()) return cmd_dynkin(o, out);
    if (exceptional->parsed()) return cmd_exceptional(o, out);
    if (adm_t->parsed()) return adm_table(o, out);
    if (adm_v->parsed()) return adm_verify(o, out, err);
    if (adm_f->parsed()) return adm_family(o, out);
    if (adm_1->parsed()) return adm_table1(o, out);
    if (adm_c->parsed()) return adm_charge(o, out);
    if (adm_vir->parsed()) return adm_virasoro(o, out);
    if (w2_g->parsed()) return w2_gens(o, out);
    if (w2_c->parsed()) return w2_check(o, out);
    if (w2_s->parsed()) return w2_sample(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  err << "usage error: no command\n";
  return kUsageError;
}

}  // namespace nilorb::cli
