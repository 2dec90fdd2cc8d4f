#include "nilorb/admissible.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "nilorb/error.hpp"
#include "nilorb/orbit.hpp"

namespace nilorb {

namespace {

using Parts = std::vector<int>;
using PartsFn = Parts (*)(int q, int s);
using RangeFn = bool (*)(int q, int s);

#define PARTS(...) [](int q, int s) -> Parts { (void)q; (void)s; return {__VA_ARGS__}; }
#define WHEN(...) [](int q, int s) -> bool { (void)q; (void)s; return __VA_ARGS__; }

struct Shape {
  AdmSeries series;
  Family family;
  bool lead;  // a leading part q+1
  PartsFn suffix;
  int q_parity;     // 0 even, 1 odd
  int mult_parity;  // -1 any, 0 even, 1 odd
  int s_parity;
  int s_lo;
  int s_hi_offset;  // s <= q + offset
};

// clang-format off
const std::array<Shape, 13> kShapes = {{
  {AdmSeries::SP, Family::I,   false, PARTS(s),           1, -1, 0, 0, -1},
  {AdmSeries::SP, Family::II,  false, PARTS(q - 1, s),    1, -1, 0, 0, -1},
  {AdmSeries::SP, Family::III, false, PARTS(s),           0, -1, 0, 0, -1},
  {AdmSeries::SP, Family::IV,  true,  PARTS(s),           1, -1, 0, 0, -1},
  {AdmSeries::SP, Family::V,   true,  PARTS(q - 1, s),    1, -1, 0, 2, -1},
  {AdmSeries::SO_ODD, Family::I,   false, PARTS(s),           1,  0, 1, 0,  0},
  {AdmSeries::SO_ODD, Family::II,  false, PARTS(s, 1),        1,  1, 1, 0, -1},
  {AdmSeries::SO_ODD, Family::III, false, PARTS(s),           0, -1, 1, 0, -1},
  {AdmSeries::SO_ODD, Family::IV,  false, PARTS(q - 1, s, 1), 0, -1, 1, 0, -1},
  {AdmSeries::SO_EVEN, Family::I,   false, PARTS(s),           1,  1, 1, 0,  0},
  {AdmSeries::SO_EVEN, Family::II,  false, PARTS(s, 1),        1,  0, 1, 0, -1},
  {AdmSeries::SO_EVEN, Family::III, true,  PARTS(s),           0, -1, 1, 0, -1},
  {AdmSeries::SO_EVEN, Family::IV,  true,  PARTS(q - 1, s, 1), 0, -1, 1, 0, -1},
}};
// clang-format on

struct Pattern {
  const char* id;
  AdmSeries series;
  Family family;
  const char* range;
  RangeFn applies;
  const char* eta_text;
  PartsFn eta_suffix;
  int eps_prime;
  const char* lp_text;
  PartsFn lp;
  const char* ep_text;
  PartsFn ep;
  KpType type;
};

constexpr auto SP = AdmSeries::SP;
constexpr auto SOO = AdmSeries::SO_ODD;
constexpr auto SOE = AdmSeries::SO_EVEN;

// Each eta is lambda's leading block, then q repeated, then the listed tail.
// clang-format off
const Pattern kPatterns[] = {
  {"sp.I.1", SP, Family::I, "0<=s<=q-3", WHEN(s <= q - 3), "q-1,q-1,s+2", PARTS(q - 1, q - 1, s + 2), -1, "q-s,q-s", PARTS(q - s, q - s), "q-s-1,q-s-1,2", PARTS(q - s - 1, q - s - 1, 2), KpType::d},
  {"sp.I.2", SP, Family::I, "4<=s<=q-1", WHEN(s >= 4 && s <= q - 1), "s-2,2", PARTS(s - 2, 2), -1, "s", PARTS(s), "s-2,2", PARTS(s - 2, 2), KpType::b},
  {"sp.I.3", SP, Family::I, "s=2", WHEN(s == 2), "1,1", PARTS(1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.II.1", SP, Family::II, "0<=s<=q-5", WHEN(s <= q - 5), "q-3,s+2", PARTS(q - 3, s + 2), -1, "q-1-s", PARTS(q - 1 - s), "q-3-s,2", PARTS(q - 3 - s, 2), KpType::b},
  {"sp.II.2", SP, Family::II, "s=q-3", WHEN(s == q - 3), "q-2,s+1", PARTS(q - 2, s + 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.II.3", SP, Family::II, "4<=s<=q-1", WHEN(s >= 4 && s <= q - 1), "q-1,s-2,2", PARTS(q - 1, s - 2, 2), -1, "s", PARTS(s), "s-2,2", PARTS(s - 2, 2), KpType::b},
  {"sp.II.4", SP, Family::II, "s=2", WHEN(s == 2), "q-1,1,1", PARTS(q - 1, 1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.III.1", SP, Family::III, "0<=s<=q-2", WHEN(s <= q - 2), "q-2,s+2", PARTS(q - 2, s + 2), -1, "q-s", PARTS(q - s), "q-s-2,2", PARTS(q - s - 2, 2), KpType::b},
  {"sp.III.2", SP, Family::III, "s=q-2", WHEN(s == q - 2), "q-1,s+1", PARTS(q - 1, s + 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.III.3", SP, Family::III, "4<=s<=q-1", WHEN(s >= 4 && s <= q - 1), "s-2,2", PARTS(s - 2, 2), -1, "s", PARTS(s), "s-2,2", PARTS(s - 2, 2), KpType::b},
  {"sp.III.4", SP, Family::III, "s=2", WHEN(s == 2), "1,1", PARTS(1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.IV.1", SP, Family::IV, "0<=s<=q-3", WHEN(s <= q - 3), "q-1,q-1,s+2", PARTS(q - 1, q - 1, s + 2), -1, "q-s,q-s", PARTS(q - s, q - s), "q-s-1,q-s-1,2", PARTS(q - s - 1, q - s - 1, 2), KpType::d},
  {"sp.IV.2", SP, Family::IV, "4<=s<=q-1", WHEN(s >= 4 && s <= q - 1), "s-2,2", PARTS(s - 2, 2), -1, "s", PARTS(s), "s-2,2", PARTS(s - 2, 2), KpType::b},
  {"sp.IV.3", SP, Family::IV, "s=2", WHEN(s == 2), "1,1", PARTS(1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.V.1", SP, Family::V, "0<=s<=q-5", WHEN(s <= q - 5), "q-3,s+2", PARTS(q - 3, s + 2), -1, "q-1-s", PARTS(q - 1 - s), "q-3-s,2", PARTS(q - 3 - s, 2), KpType::b},
  {"sp.V.2", SP, Family::V, "s=q-3", WHEN(s == q - 3), "q-2,s+1", PARTS(q - 2, s + 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"sp.V.3", SP, Family::V, "4<=s<=q-1", WHEN(s >= 4 && s <= q - 1), "q-1,s-2,2", PARTS(q - 1, s - 2, 2), -1, "s", PARTS(s), "s-2,2", PARTS(s - 2, 2), KpType::b},
  {"sp.V.4", SP, Family::V, "s=2", WHEN(s == 2), "q-1,1,1", PARTS(q - 1, 1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},

  {"so-odd.I.1", SOO, Family::I, "0<=s<=q-4", WHEN(s <= q - 4), "q-2,s+2", PARTS(q - 2, s + 2), -1, "q-s", PARTS(q - s), "q-s-2,2", PARTS(q - s - 2, 2), KpType::b},
  {"so-odd.I.2", SOO, Family::I, "3<=s<=q", WHEN(s >= 3 && s <= q), "s-2,1,1", PARTS(s - 2, 1, 1), 1, "s", PARTS(s), "s-2,1,1", PARTS(s - 2, 1, 1), KpType::c},
  {"so-odd.I.3", SOO, Family::I, "s=q-2", WHEN(s == q - 2), "q-1,q-1", PARTS(q - 1, q - 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-odd.II.1", SOO, Family::II, "0<=s<=q-4", WHEN(s <= q - 4), "q-2,s+2,1", PARTS(q - 2, s + 2, 1), -1, "q-s", PARTS(q - s), "q-s-2,2", PARTS(q - s - 2, 2), KpType::b},
  {"so-odd.II.2", SOO, Family::II, "5<=s<=q-1", WHEN(s >= 5 && s <= q - 1), "s-2,3", PARTS(s - 2, 3), -1, "s-1", PARTS(s - 1), "s-3,2", PARTS(s - 3, 2), KpType::b},
  {"so-odd.II.3", SOO, Family::II, "s=3", WHEN(s == 3), "2,2", PARTS(2, 2), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-odd.III.1", SOO, Family::III, "0<=s<=q-3", WHEN(s <= q - 3), "q-1,q-1,s+2", PARTS(q - 1, q - 1, s + 2), -1, "q-s,q-s", PARTS(q - s, q - s), "q-1-s,q-s-1,2", PARTS(q - 1 - s, q - s - 1, 2), KpType::d},
  {"so-odd.III.2", SOO, Family::III, "3<=s<=q", WHEN(s >= 3 && s <= q), "s-2,1,1", PARTS(s - 2, 1, 1), 1, "s", PARTS(s), "s-2,1,1", PARTS(s - 2, 1, 1), KpType::c},
  {"so-odd.IV.1", SOO, Family::IV, "1<=s<=q-5", WHEN(s >= 1 && s <= q - 5), "q-3,s+2,1", PARTS(q - 3, s + 2, 1), -1, "q-1-s", PARTS(q - 1 - s), "q-3-s,2", PARTS(q - 3 - s, 2), KpType::b},
  {"so-odd.IV.2", SOO, Family::IV, "s=q-3", WHEN(s == q - 3), "q-2,s+1,1", PARTS(q - 2, s + 1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-odd.IV.3", SOO, Family::IV, "5<=s<=q-1", WHEN(s >= 5 && s <= q - 1), "q-1,s-2,3", PARTS(q - 1, s - 2, 3), -1, "s-1", PARTS(s - 1), "s-3,2", PARTS(s - 3, 2), KpType::b},
  {"so-odd.IV.4", SOO, Family::IV, "s=3", WHEN(s == 3), "q-1,2,2", PARTS(q - 1, 2, 2), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},

  {"so-even.I.1", SOE, Family::I, "0<=s<=q-4", WHEN(s <= q - 4), "q-2,s+2", PARTS(q - 2, s + 2), -1, "q-s", PARTS(q - s), "q-s-2,2", PARTS(q - s - 2, 2), KpType::b},
  {"so-even.I.2", SOE, Family::I, "3<=s<=q", WHEN(s >= 3 && s <= q), "s-2,1,1", PARTS(s - 2, 1, 1), 1, "s", PARTS(s), "s-2,1,1", PARTS(s - 2, 1, 1), KpType::c},
  {"so-even.I.3", SOE, Family::I, "s=q-2", WHEN(s == q - 2), "q-1,s+1", PARTS(q - 1, s + 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-even.II.1", SOE, Family::II, "0<=s<=q-4", WHEN(s <= q - 4), "q-2,s+2,1", PARTS(q - 2, s + 2, 1), -1, "q-s", PARTS(q - s), "q-s-2,2", PARTS(q - s - 2, 2), KpType::b},
  {"so-even.II.2", SOE, Family::II, "5<=s<=q-1", WHEN(s >= 5 && s <= q - 1), "s-2,3", PARTS(s - 2, 3), -1, "s-1", PARTS(s - 1), "s-3,2", PARTS(s - 3, 2), KpType::b},
  {"so-even.II.3", SOE, Family::II, "s=3", WHEN(s == 3), "2,2", PARTS(2, 2), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-even.III.1", SOE, Family::III, "3<=s<=q-1", WHEN(s >= 3 && s <= q - 1), "s-2,1,1", PARTS(s - 2, 1, 1), 1, "s", PARTS(s), "s-2,1,1", PARTS(s - 2, 1, 1), KpType::c},
  {"so-even.III.2", SOE, Family::III, "0<=s<=q-3", WHEN(s <= q - 3), "q-1,q-1,s+2", PARTS(q - 1, q - 1, s + 2), -1, "q-s,q-s", PARTS(q - s, q - s), "q-1-s,q-1-s,2", PARTS(q - 1 - s, q - 1 - s, 2), KpType::d},
  {"so-even.III.3", SOE, Family::III, "s=2", WHEN(s == 2), "1,1", PARTS(1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-even.IV.1", SOE, Family::IV, "0<=s<=q-5", WHEN(s <= q - 5), "q-3,s+2,1", PARTS(q - 3, s + 2, 1), -1, "q-1-s", PARTS(q - 1 - s), "q-3-s,2", PARTS(q - 3 - s, 2), KpType::b},
  {"so-even.IV.2", SOE, Family::IV, "s=q-3", WHEN(s == q - 3), "q-2,s+1,1", PARTS(q - 2, s + 1, 1), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
  {"so-even.IV.3", SOE, Family::IV, "5<=s<=q-1", WHEN(s >= 5 && s <= q - 1), "q-1,s-2,3", PARTS(q - 1, s - 2, 3), -1, "s-1", PARTS(s - 1), "s-3,2", PARTS(s - 3, 2), KpType::b},
  {"so-even.IV.4", SOE, Family::IV, "s=3", WHEN(s == 3), "q-1,2,2", PARTS(q - 1, 2, 2), -1, "2", PARTS(2), "1,1", PARTS(1, 1), KpType::a},
};
// clang-format on

#undef PARTS
#undef WHEN

const Shape& shape_of(AdmSeries series, Family family) {
  for (const Shape& s : kShapes) {
    if (s.series == series && s.family == family) return s;
  }
  throw DomainError("family " + std::string(to_string(family)) + " does not exist for " +
                    std::string(to_string(series)));
}

std::string spec_text(const FamilySpec& f) {
  return std::string(to_string(f.series)) + " family " + std::string(to_string(f.family)) +
         " (q=" + std::to_string(f.q) + ", s=" + std::to_string(f.s) + ", r=" + std::to_string(f.rank) + ")";
}

// Leading block, q-multiplicity and tail; the multiplicity may come out negative.
struct Layout {
  Parts head;
  long mult = 0;
  Parts tail;
  bool integral = true;
};

Layout layout(const Shape& sh, int q, int n, const Parts& tail) {
  Layout l;
  if (sh.lead) l.head.push_back(q + 1);
  l.tail = tail;
  const long rest = n - std::accumulate(l.head.begin(), l.head.end(), 0L) - std::accumulate(tail.begin(), tail.end(), 0L);
  l.integral = rest % q == 0;
  l.mult = rest / q;
  if (rest < 0 && !l.integral) l.mult -= 1;
  return l;
}

Partition assemble(const Layout& l, int q) {
  Parts parts = l.head;
  parts.insert(parts.end(), static_cast<std::size_t>(std::max(l.mult, 0L)), q);
  parts.insert(parts.end(), l.tail.begin(), l.tail.end());
  return Partition(std::move(parts));
}

std::optional<Partition> try_family_partition(const FamilySpec& spec, std::string* why) {
  auto fail = [&](const std::string& msg) -> std::optional<Partition> {
    if (why) *why = msg;
    return std::nullopt;
  };
  const Shape& sh = shape_of(spec.series, spec.family);
  const int q = spec.q;
  const int s = spec.s;
  if (q < 1) return fail("q must be positive");
  if (spec.rank < 1) return fail("rank must be positive");
  if (q % 2 != sh.q_parity) return fail(std::string("q must be ") + (sh.q_parity ? "odd" : "even"));
  if (((s % 2) + 2) % 2 != sh.s_parity) return fail(std::string("s must be ") + (sh.s_parity ? "odd" : "even"));
  if (s < sh.s_lo || s > q + sh.s_hi_offset) {
    return fail("s must satisfy " + std::to_string(sh.s_lo) + " <= s <= q" +
                (sh.s_hi_offset ? std::to_string(sh.s_hi_offset) : std::string()));
  }
  const Layout l = layout(sh, q, total_for(spec.series, spec.rank), sh.suffix(q, s));
  if (!l.integral) return fail("no integral multiplicity of q gives total " + std::to_string(total_for(spec.series, spec.rank)));
  if (l.mult < 1) return fail("the q block would be empty");
  if (sh.mult_parity >= 0 && l.mult % 2 != sh.mult_parity) {
    return fail(std::string("the multiplicity of q must be ") + (sh.mult_parity ? "odd" : "even") + ", got " +
                std::to_string(l.mult));
  }
  Partition lam = assemble(l, q);
  if (!is_valid_eps(lam, eps_of(spec.series))) {
    return fail("(" + lam.to_string() + ") is not a valid partition for " + std::string(to_string(spec.series)));
  }
  return lam;
}

bool pattern_vacuous(const Pattern& p) {
  const Shape& sh = shape_of(p.series, p.family);
  for (int q = 1; q <= 64; ++q) {
    if (q % 2 != sh.q_parity || (sh.lead ? q + 1 : q) < 3) continue;
    for (int s = sh.s_lo; s <= q + sh.s_hi_offset; ++s) {
      if (s % 2 == sh.s_parity && p.applies(q, s)) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(AdmSeries s) {
  switch (s) {
    case AdmSeries::SP: return "sp";
    case AdmSeries::SO_ODD: return "so-odd";
    case AdmSeries::SO_EVEN: return "so-even";
  }
  return "?";
}

AdmSeries parse_adm_series(std::string_view text) {
  if (text == "sp") return AdmSeries::SP;
  if (text == "so-odd" || text == "so_odd") return AdmSeries::SO_ODD;
  if (text == "so-even" || text == "so_even") return AdmSeries::SO_EVEN;
  throw DomainError("unknown series '" + std::string(text) + "' (expected sp, so-odd or so-even)");
}

Eps eps_of(AdmSeries s) { return s == AdmSeries::SP ? Eps::Symplectic : Eps::Orthogonal; }

int total_for(AdmSeries s, int r) { return s == AdmSeries::SO_ODD ? 2 * r + 1 : 2 * r; }

std::string_view to_string(Family f) {
  static constexpr std::array<std::string_view, 5> names = {"I", "II", "III", "IV", "V"};
  return names[static_cast<std::size_t>(f)];
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V}) {
    if (text == to_string(f)) return f;
  }
  throw DomainError("unknown family '" + std::string(text) + "'");
}

std::vector<Family> families_of(AdmSeries s) {
  if (s == AdmSeries::SP) return {Family::I, Family::II, Family::III, Family::IV, Family::V};
  return {Family::I, Family::II, Family::III, Family::IV};
}

bool has_caveat(AdmSeries s, Family f) {
  return s == AdmSeries::SO_ODD && (f == Family::III || f == Family::IV);
}

Partition family_partition(const FamilySpec& spec) {
  std::string why;
  auto lam = try_family_partition(spec, &why);
  if (!lam) throw DomainError(spec_text(spec) + ": " + why);
  return *lam;
}

std::vector<TableRow> codim2_rows(const Partition& lam, Eps eps) {
  if (!is_valid_eps(lam, eps)) {
    throw DomainError("(" + lam.to_string() + ") is not in P_" + std::to_string(sign(eps)) + "(" +
                      std::to_string(lam.total()) + ")");
  }
  const ClassicalAlgebra g = algebra_for(eps, lam.total());
  const long top = dim_orbit(g, lam);
  std::vector<TableRow> rows;
  for (const Partition& eta : minimal_degenerations(lam, eps)) {
    if (top - dim_orbit(g, eta) != 2) continue;
    const Reduction red = reduce(lam, eta, eps);
    const SingularityClass c = degeneration_singularity(lam, eta, eps);
    rows.push_back({lam, eta, red.eps_p, red.lambda_p, red.eta_p, *c.kp_type});
  }
  return rows;
}

std::vector<RowPatternInfo> row_patterns() {
  std::vector<RowPatternInfo> out;
  for (const Pattern& p : kPatterns) {
    const bool lead = shape_of(p.series, p.family).lead;
    std::string eta = std::string("(") + (lead ? "q+1," : "") + "q,...,q," + p.eta_text + ")";
    out.push_back({p.id, p.series, p.family, p.range, std::move(eta), p.eps_prime, std::string("(") + p.lp_text + ")",
                   std::string("(") + p.ep_text + ")", p.type});
  }
  return out;
}

std::vector<PredictedRow> predicted_rows(const FamilySpec& spec, std::vector<SkippedRow>* skipped) {
  const Partition lam = family_partition(spec);
  const Shape& sh = shape_of(spec.series, spec.family);
  const Eps eps = eps_of(spec.series);
  std::vector<PredictedRow> out;
  auto skip = [&](const Pattern& p, std::string reason) {
    if (skipped) skipped->push_back({spec, p.id, std::move(reason)});
  };
  for (const Pattern& p : kPatterns) {
    if (p.series != spec.series || p.family != spec.family || !p.applies(spec.q, spec.s)) continue;
    const Layout l = layout(sh, spec.q, lam.total(), p.eta_suffix(spec.q, spec.s));
    if (!l.integral || l.mult < 0) {
      skip(p, "q block of eta would have negative length");
      continue;
    }
    const Partition eta = assemble(l, spec.q);
    if (eta == lam) {
      skip(p, "eta coincides with lambda");
      continue;
    }
    if (!is_valid_eps(eta, eps)) {
      skip(p, "(" + eta.to_string() + ") is not eps-valid");
      continue;
    }
    if (!dominates(lam, eta)) {
      skip(p, "(" + eta.to_string() + ") is not below lambda");
      continue;
    }
    const Eps eps_p = p.eps_prime > 0 ? Eps::Orthogonal : Eps::Symplectic;
    out.push_back({p.id,
                   {lam, eta, eps_p, Partition(p.lp(spec.q, spec.s)), Partition(p.ep(spec.q, spec.s)), p.type}});
  }
  return out;
}

std::vector<FamilySpec> family_members(AdmSeries series, Family family, int q_max, int r_max) {
  const Shape& sh = shape_of(series, family);
  std::vector<FamilySpec> out;
  for (int q = 1; q <= q_max; ++q) {
    if (q % 2 != sh.q_parity || (sh.lead ? q + 1 : q) < 3) continue;
    for (int s = sh.s_lo; s <= q + sh.s_hi_offset; ++s) {
      if (s % 2 != sh.s_parity) continue;
      for (int r = 1; r <= r_max; ++r) {
        FamilySpec spec{series, family, q, s, r};
        if (try_family_partition(spec, nullptr)) out.push_back(spec);
      }
    }
  }
  return out;
}

VerificationReport verify_paper_tables(int q_max, int r_max) {
  VerificationReport rep;
  rep.q_max = q_max;
  rep.r_max = r_max;
  std::set<std::string> matched;
  for (AdmSeries series : {AdmSeries::SP, AdmSeries::SO_ODD, AdmSeries::SO_EVEN}) {
    const Eps eps = eps_of(series);
    for (Family family : families_of(series)) {
      for (const FamilySpec& spec : family_members(series, family, q_max, r_max)) {
        const Partition lam = family_partition(spec);
        ++rep.instances;
        std::vector<TableRow> produced = codim2_rows(lam, eps);
        std::vector<PredictedRow> predicted = predicted_rows(spec, &rep.skipped);
        rep.rows_checked += static_cast<int>(produced.size());
        for (const TableRow& row : produced) {
          if (row.type == KpType::e) ++rep.type_e_hits;
        }
        std::vector<bool> used(produced.size(), false);
        for (const PredictedRow& pr : predicted) {
          auto it = std::find(produced.begin(), produced.end(), pr.row);
          if (it == produced.end()) {
            rep.mismatches.push_back({spec, lam, pr, std::nullopt});
            continue;
          }
          used[static_cast<std::size_t>(it - produced.begin())] = true;
          matched.insert(pr.pattern_id);
        }
        for (std::size_t i = 0; i < produced.size(); ++i) {
          if (!used[i]) rep.mismatches.push_back({spec, lam, std::nullopt, produced[i]});
        }
        const NormalityVerdict v = is_normal_closure(algebra_for(eps, lam.total()), lam);
        if (v.status == NormalityVerdict::Status::Normal) ++rep.normal;
        if (v.status == NormalityVerdict::Status::NonNormal) ++rep.non_normal;
      }
    }
  }
  for (const Pattern& p : kPatterns) {
    if (matched.count(p.id)) {
      rep.patterns_matched.emplace_back(p.id);
    } else if (pattern_vacuous(p)) {
      rep.patterns_vacuous.emplace_back(p.id);
    } else {
      rep.patterns_unreached.emplace_back(p.id);
    }
  }
  return rep;
}

Partition table1_partition(int which, int r) {
  switch (which) {
    case 5: {
      if (r < 5) throw DomainError("row 5 needs D_r with r >= 5");
      Parts p(static_cast<std::size_t>(2 * r - 4), 1);
      p.insert(p.begin(), {2, 2});
      return Partition(std::move(p));
    }
    case 6: {
      if (r < 4 || r % 2 != 0) throw DomainError("row 6 needs D_r with r an even integer >= 4");
      Parts p(static_cast<std::size_t>(r - 2), 2);
      p.insert(p.end(), 4, 1);
      return Partition(std::move(p));
    }
    case 7: {
      if (r < 2) throw DomainError("row 7 needs B_r with r >= 2");
      Parts p(static_cast<std::size_t>(2 * r - 2), 1);
      p.insert(p.begin(), 3);
      return Partition(std::move(p));
    }
    default: throw DomainError("only rows 5, 6 and 7 name a fixed orbit, got " + std::to_string(which));
  }
}

Rational central_charge_typeD(const Rational& k, int r) {
  const Rational denom = k + 2 * r - 2;
  if (denom == 0) throw DomainError("central charge has a pole at k = 2 - 2r");
  const Rational rr = r;
  return -(k + rr - 2) * (3 * k * rr - 6 * k + 2 * rr * rr - 12 * rr + 10) / denom;
}

Rational virasoro_c(int p, int q) {
  if (p < 2 || q < 2) throw DomainError("p and q must be >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  const Rational d = p - q;
  return 1 - 6 * d * d / (Rational(p) * q);
}

}  // namespace nilorb
