#include "nilorb/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "nilorb/error.hpp"

namespace nilorb {

std::string_view to_string(Series s) {
  switch (s) {
    case Series::SL: return "sl";
    case Series::O: return "so";
    case Series::SP: return "sp";
  }
  return "?";
}

Series parse_series(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sl") return Series::SL;
  if (lower == "so" || lower == "o") return Series::O;
  if (lower == "sp") return Series::SP;
  throw DomainError("unknown series '" + std::string(text) + "' (expected sl, so or sp)");
}

ClassicalAlgebra ClassicalAlgebra::make(Series series, int n) {
  switch (series) {
    case Series::SL:
      if (n < 2) throw DomainError("sl_n needs n >= 2");
      break;
    case Series::O:
      if (n < 3) throw DomainError("so_n needs n >= 3");
      break;
    case Series::SP:
      if (n < 2 || n % 2 != 0) throw DomainError("sp_n needs even n >= 2, got " + std::to_string(n));
      break;
  }
  return ClassicalAlgebra{series, n};
}

std::optional<Eps> ClassicalAlgebra::eps() const {
  switch (series) {
    case Series::O: return Eps::Orthogonal;
    case Series::SP: return Eps::Symplectic;
    case Series::SL: break;
  }
  return std::nullopt;
}

int ClassicalAlgebra::rank() const { return series == Series::SL ? n - 1 : n / 2; }

char ClassicalAlgebra::cartan_type() const {
  switch (series) {
    case Series::SL: return 'A';
    case Series::SP: return 'C';
    case Series::O: return n % 2 ? 'B' : 'D';
  }
  return '?';
}

long ClassicalAlgebra::dimension() const {
  const long m = n;
  switch (series) {
    case Series::SL: return m * m - 1;
    case Series::O: return m * (m - 1) / 2;
    case Series::SP: return m * (m + 1) / 2;
  }
  return 0;
}

ClassicalAlgebra algebra_for(Eps eps, int n) {
  return ClassicalAlgebra::make(eps == Eps::Orthogonal ? Series::O : Series::SP, n);
}

std::string_view to_string(SoLabel l) { return l == SoLabel::I ? "I" : "II"; }

SoLabel parse_so_label(std::string_view text) {
  if (text == "I" || text == "i" || text == "1") return SoLabel::I;
  if (text == "II" || text == "ii" || text == "2") return SoLabel::II;
  throw DomainError("SO label must be I or II, got '" + std::string(text) + "'");
}

bool is_very_even(const ClassicalAlgebra& g, const Partition& lam) {
  if (g.series != Series::O || g.n % 2 != 0 || lam.empty()) return false;
  return std::all_of(lam.parts().begin(), lam.parts().end(), [](int p) { return p % 2 == 0; });
}

Orbit orbit_from_partition(const ClassicalAlgebra& g, const Partition& lam, std::optional<SoLabel> label) {
  if (lam.total() != g.n) {
    throw DomainError("partition " + lam.to_string() + " has total " + std::to_string(lam.total()) +
                      " but the algebra acts on dimension " + std::to_string(g.n));
  }
  if (const auto eps = g.eps(); eps && !is_valid_eps(lam, *eps)) {
    throw DomainError("partition " + lam.to_string() + " is not in P_" + std::to_string(sign(*eps)) +
                      "(" + std::to_string(g.n) + ")");
  }
  Orbit o;
  o.algebra_ = g;
  o.lam_ = lam;
  o.very_even_ = is_very_even(g, lam);
  if (label && !o.very_even_) {
    throw DomainError("an I/II label only applies to very even partitions");
  }
  o.so_label_ = label;
  return o;
}

long dim_orbit(const ClassicalAlgebra& g, const Partition& lam) {
  const Partition s = dual(lam);
  long sum_sq = 0;
  for (int c : s.parts()) sum_sq += static_cast<long>(c) * c;
  const long odd = lam.count_odd_parts();
  const long n = g.n;
  switch (g.series) {
    case Series::SL: return n * n - sum_sq;
    case Series::O: return (n * n - n) / 2 - (sum_sq - odd) / 2;
    case Series::SP: return (n * n + n) / 2 - (sum_sq + odd) / 2;
  }
  return 0;
}

long dim_orbit(const Orbit& orbit) { return dim_orbit(orbit.algebra(), orbit.partition()); }

long codim_degeneration(const ClassicalAlgebra& g, const Partition& lam, const Partition& eta) {
  const Orbit a = orbit_from_partition(g, lam);
  const Orbit b = orbit_from_partition(g, eta);
  if (!dominates(lam, eta)) {
    throw DomainError(eta.to_string() + " is not dominated by " + lam.to_string());
  }
  return dim_orbit(a) - dim_orbit(b);
}

ClosureComparison closure_leq(const Orbit& a, const Orbit& b) {
  if (!(a.algebra() == b.algebra())) throw DomainError("orbits live in different algebras");
  ClosureComparison out;
  out.so_caveat = a.very_even() && b.very_even() && a.partition() == b.partition() && a.so_label() &&
                  b.so_label() && *a.so_label() != *b.so_label();
  out.leq = !out.so_caveat && dominates(b.partition(), a.partition());
  return out;
}

WeightedDynkinDiagram weighted_dynkin(const Orbit& orbit) {
  const ClassicalAlgebra& g = orbit.algebra();
  if (orbit.very_even() && !orbit.so_label()) {
    throw DomainError("very even partition " + orbit.partition().to_string() +
                      " needs an I/II label for its weighted Dynkin diagram");
  }
  std::vector<int> eigen;
  for (int p : orbit.partition().parts()) {
    for (int v = p - 1; v >= 1 - p; v -= 2) eigen.push_back(v);
  }
  std::sort(eigen.begin(), eigen.end(), std::greater<>());

  WeightedDynkinDiagram d;
  d.cartan_type = g.cartan_type();
  d.rank = g.rank();
  const int r = d.rank;
  d.labels.resize(static_cast<std::size_t>(r));
  auto h = [&](int i) { return eigen[static_cast<std::size_t>(i - 1)]; };  // 1-based
  for (int i = 1; i < r; ++i) d.labels[static_cast<std::size_t>(i - 1)] = h(i) - h(i + 1);
  if (r == 0) return d;
  auto& last = d.labels[static_cast<std::size_t>(r - 1)];
  switch (d.cartan_type) {
    case 'A': last = h(r) - h(r + 1); break;
    case 'B': last = h(r); break;
    case 'C': last = 2 * h(r); break;
    case 'D':
      if (r == 1) {
        last = 0;
      } else {
        last = h(r - 1) + h(r);
        if (orbit.so_label() == SoLabel::II) {
          std::swap(d.labels[static_cast<std::size_t>(r - 2)], last);
        }
      }
      break;
    default: break;
  }
  return d;
}

}  // namespace nilorb
