#include "nilorb/kraft_procesi.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

void require_degeneration(const Partition& lam, const Partition& eta, Eps eps) {
  if (lam.total() != eta.total()) {
    throw DomainError("totals differ: " + lam.to_string() + " vs " + eta.to_string());
  }
  for (const Partition* p : {&lam, &eta}) {
    if (!is_valid_eps(*p, eps)) {
      throw DomainError(p->to_string() + " is not in P_" + std::to_string(sign(eps)) + "(" +
                        std::to_string(p->total()) + ")");
    }
  }
  if (!dominates(lam, eta)) {
    throw DomainError(eta.to_string() + " is not dominated by " + lam.to_string());
  }
}

// Length of the longest common leading row block that is an eps-partition.
std::size_t erasable_rows(const Partition& lam, const Partition& eta, Eps eps) {
  std::size_t common = 0;
  while (common < lam.length() && common < eta.length() && lam[common] == eta[common]) ++common;
  for (std::size_t k = common; k > 0; --k) {
    std::vector<int> prefix(lam.parts().begin(), lam.parts().begin() + static_cast<long>(k));
    if (is_valid_eps(Partition(std::move(prefix)), eps)) return k;
  }
  return 0;
}

int erasable_columns(const Partition& lam, const Partition& eta) {
  const Partition a = dual(lam);
  const Partition b = dual(eta);
  std::size_t s = 0;
  while (s < a.length() && s < b.length() && a[s] == b[s]) ++s;
  return static_cast<int>(s);
}

Partition drop_rows(const Partition& p, std::size_t k) {
  return Partition(std::vector<int>(p.parts().begin() + static_cast<long>(k), p.parts().end()));
}

Partition drop_columns(const Partition& p, int s) {
  std::vector<int> parts;
  for (int v : p.parts()) parts.push_back(std::max(v - s, 0));
  return Partition(std::move(parts));
}

struct Eraser {
  Reduction& red;

  bool rows() {
    const std::size_t k = erasable_rows(red.lambda_p, red.eta_p, red.eps_p);
    if (k == 0) return false;
    ErasureStep step;
    step.kind = ErasureStep::Kind::Rows;
    step.stage = static_cast<int>(red.steps.size());
    step.rows.assign(red.lambda_p.parts().begin(), red.lambda_p.parts().begin() + static_cast<long>(k));
    red.lambda_p = drop_rows(red.lambda_p, k);
    red.eta_p = drop_rows(red.eta_p, k);
    red.steps.push_back(std::move(step));
    return true;
  }

  bool columns() {
    const int s = erasable_columns(red.lambda_p, red.eta_p);
    if (s == 0) return false;
    ErasureStep step;
    step.kind = ErasureStep::Kind::Columns;
    step.stage = static_cast<int>(red.steps.size());
    step.columns = s;
    red.lambda_p = drop_columns(red.lambda_p, s);
    red.eta_p = drop_columns(red.eta_p, s);
    red.eps_p = flip(red.eps_p, s);
    red.steps.push_back(std::move(step));
    return true;
  }
};

}  // namespace

int Reduction::columns_erased() const {
  int total = 0;
  for (const auto& s : steps) total += s.columns;
  return total;
}

int Reduction::rows_erased() const {
  int total = 0;
  for (const auto& s : steps) total += static_cast<int>(s.rows.size());
  return total;
}

Reduction reduce(const Partition& lam, const Partition& eta, Eps eps, ErasureOrder order) {
  require_degeneration(lam, eta, eps);
  if (lam == eta) throw DomainError("nothing to reduce: lambda equals eta");
  Reduction red{lam, eta, eps, {}};
  Eraser eraser{red};
  bool progress = true;
  while (progress) {
    if (order == ErasureOrder::RowsFirst) {
      const bool r = eraser.rows();
      const bool c = eraser.columns();
      progress = r || c;
    } else {
      const bool c = eraser.columns();
      const bool r = eraser.rows();
      progress = r || c;
    }
  }
  return red;
}

bool is_irreducible(const Partition& lam, const Partition& eta, Eps eps) {
  return erasable_rows(lam, eta, eps) == 0 && erasable_columns(lam, eta) == 0;
}

char to_char(KpType t) { return static_cast<char>('a' + static_cast<int>(t)); }

KpType parse_kp_type(char c) {
  if (c < 'a' || c > 'h') throw DomainError(std::string("unknown table type '") + c + "'");
  return static_cast<KpType>(c - 'a');
}

std::string SingularityClass::label() const {
  const std::string k = std::to_string(index);
  switch (kind) {
    case Kind::KleinianA: return "A" + k;
    case Kind::KleinianD: return "D" + k;
    case Kind::TwoBranchesA: return "A" + k + "\xE2\x88\xAA" "A" + k;  // U+222A
    case Kind::MinimalClosure: return std::string(1, series) + k;
    case Kind::NotMinimal: return "not-minimal";
    case Kind::UnknownNonMinimal: return "unknown";
  }
  return "?";
}

int SingularityClass::table_codim() const {
  if (!kp_type) throw DomainError("codimension is only tabulated for table rows");
  switch (*kp_type) {
    case KpType::f: return 4 * index - 4;
    case KpType::g: return 2 * index;
    case KpType::h: return 4 * index - 6;
    default: return 2;
  }
}

namespace {

Partition ones(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

SingularityClass make_class(SingularityClass::Kind kind, int index, KpType t, char series = '\0') {
  SingularityClass c;
  c.kind = kind;
  c.index = index;
  c.kp_type = t;
  c.series = series;
  return c;
}

}  // namespace

SingularityClass classify_irreducible(const Partition& lam, const Partition& eta, Eps eps) {
  require_degeneration(lam, eta, eps);
  if (lam == eta) throw DomainError("classification needs eta < lambda");
  if (!is_irreducible(lam, eta, eps)) {
    throw DomainError("pair (" + lam.to_string() + ") > (" + eta.to_string() + ") is reducible");
  }
  using K = SingularityClass::Kind;
  const int total = lam.total();
  if (eps == Eps::Symplectic) {
    if (lam == Partition{2} && eta == Partition{1, 1}) return make_class(K::KleinianA, 1, KpType::a);
    if (total % 2 == 0) {
      const int n = total / 2;
      if (n > 1 && lam == Partition{2 * n} && eta == Partition{2 * n - 2, 2}) {
        return make_class(K::KleinianD, n + 1, KpType::b);
      }
      if (n > 1) {
        std::vector<int> g(static_cast<std::size_t>(2 * n - 2), 1);
        g.insert(g.begin(), 2);
        if (lam == Partition(g) && eta == ones(2 * n)) return make_class(K::MinimalClosure, n, KpType::g, 'c');
      }
    }
    if (total % 4 == 2) {
      const int n = (total - 2) / 4;
      if (n > 0 && lam == Partition{2 * n + 1, 2 * n + 1} && eta == Partition{2 * n, 2 * n, 2}) {
        return make_class(K::KleinianA, 2 * n - 1, KpType::d);
      }
    }
  } else {
    if (total % 2 == 1) {
      const int n = (total - 1) / 2;
      if (n > 0 && lam == Partition{2 * n + 1} && eta == Partition{2 * n - 1, 1, 1}) {
        return make_class(K::KleinianA, 2 * n - 1, KpType::c);
      }
      if (n > 1) {
        std::vector<int> f(static_cast<std::size_t>(2 * n - 3), 1);
        f.insert(f.begin(), {2, 2});
        if (lam == Partition(f) && eta == ones(2 * n + 1)) return make_class(K::MinimalClosure, n, KpType::f, 'b');
      }
    } else {
      if (total % 4 == 0) {
        const int n = total / 4;
        if (n > 0 && lam == Partition{2 * n, 2 * n} && eta == Partition{2 * n - 1, 2 * n - 1, 1, 1}) {
          return make_class(K::TwoBranchesA, 2 * n - 1, KpType::e);
        }
      }
      const int n = total / 2;
      if (n > 2) {
        std::vector<int> h(static_cast<std::size_t>(2 * n - 4), 1);
        h.insert(h.begin(), {2, 2});
        if (lam == Partition(h) && eta == ones(2 * n)) return make_class(K::MinimalClosure, n, KpType::h, 'd');
      }
    }
  }
  SingularityClass none;
  none.kind = K::NotMinimal;
  return none;
}

SingularityClass degeneration_singularity(const Partition& lam, const Partition& eta, Eps eps) {
  require_degeneration(lam, eta, eps);
  Reduction red = reduce(lam, eta, eps);
  if (!is_minimal_degeneration(lam, eta, eps)) {
    SingularityClass c;
    c.kind = SingularityClass::Kind::UnknownNonMinimal;
    c.reduced = std::move(red);
    return c;
  }
  SingularityClass c = classify_irreducible(red.lambda_p, red.eta_p, red.eps_p);
  if (c.kind == SingularityClass::Kind::NotMinimal) {
    throw std::logic_error("minimal degeneration " + lam.to_string() + " > " + eta.to_string() +
                           " reduced to an untabulated pair");
  }
  return c;
}

std::string_view to_string(NormalityVerdict::Status s) {
  switch (s) {
    case NormalityVerdict::Status::Normal: return "Normal";
    case NormalityVerdict::Status::NonNormal: return "NonNormal";
    case NormalityVerdict::Status::VeryEvenUnsupported: return "VeryEvenUnsupported";
  }
  return "?";
}

bool hesselink_normal(const ClassicalAlgebra& g, const Partition& lam) {
  switch (g.series) {
    case Series::O: return lam[0] + lam[1] <= 4;
    case Series::SP: return lam[0] <= 2;
    case Series::SL: return true;
  }
  return false;
}

NormalityVerdict is_normal_closure(const ClassicalAlgebra& g, const Partition& lam) {
  const Orbit orbit = orbit_from_partition(g, lam);
  NormalityVerdict v;
  if (g.series == Series::SL) return v;
  if (orbit.very_even()) {
    v.status = NormalityVerdict::Status::VeryEvenUnsupported;
    return v;
  }
  v.hesselink_applies = hesselink_normal(g, lam);
  const Eps eps = *g.eps();
  const long top = dim_orbit(g, lam);
  for (const Partition& eta : minimal_degenerations(lam, eps)) {
    if (top - dim_orbit(g, eta) != 2) continue;
    const Reduction red = reduce(lam, eta, eps);
    const SingularityClass c = classify_irreducible(red.lambda_p, red.eta_p, red.eps_p);
    if (c.kp_type == KpType::e) v.witnesses.push_back(eta);
  }
  if (!v.witnesses.empty()) {
    v.status = NormalityVerdict::Status::NonNormal;
    if (v.hesselink_applies) {
      throw std::logic_error("normality scan contradicts the Hesselink criterion for " + lam.to_string());
    }
  }
  return v;
}

std::optional<int> branches_at(const Partition& lam, const Partition& eta, Eps eps) {
  require_degeneration(lam, eta, eps);
  if (lam == eta) return 1;
  if (is_minimal_degeneration(lam, eta, eps)) {
    const SingularityClass c = degeneration_singularity(lam, eta, eps);
    return c.kp_type == KpType::e ? 2 : 1;
  }
  const NormalityVerdict v = is_normal_closure(algebra_for(eps, lam.total()), lam);
  if (v.status == NormalityVerdict::Status::Normal) return 1;
  return std::nullopt;
}

SliceReport slice_report(const ClassicalAlgebra& g, const Partition& lam, const Partition& eta) {
  const Orbit big = orbit_from_partition(g, lam);
  const Orbit small = orbit_from_partition(g, eta);
  SliceReport r;
  if (!closure_leq(small, big).leq) {
    r.empty = true;
    return r;
  }
  r.dimension = dim_orbit(big) - dim_orbit(small);
  const auto eps = g.eps();
  if (!eps) {
    r.components = 1;
    return r;
  }
  r.components = branches_at(lam, eta, *eps);
  if (lam != eta && is_minimal_degeneration(lam, eta, *eps)) {
    r.singularity = degeneration_singularity(lam, eta, *eps);
  }
  return r;
}

}  // namespace nilorb
