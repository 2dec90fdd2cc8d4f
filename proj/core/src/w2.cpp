#include "nilorb/w2.hpp"

#include <random>
#include <sstream>

#include "nilorb/error.hpp"

namespace nilorb {

QuadPoly::QuadPoly(int rank) : rank_(rank) {}

QuadPoly QuadPoly::product(const LinearForm& a, const LinearForm& b) {
  if (a.size() != b.size()) throw DomainError("linear forms of different rank");
  QuadPoly p(static_cast<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) p.add(static_cast<int>(i) + 1, static_cast<int>(j) + 1, a[i] * b[j]);
    }
  }
  return p;
}

QuadPoly QuadPoly::monomial(int rank, int i, int j, const Rational& c) {
  QuadPoly p(rank);
  p.add(i, j, c);
  return p;
}

Rational QuadPoly::coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QuadPoly::add(int i, int j, const Rational& c) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > rank_) throw DomainError("variable index out of range");
  auto& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  if (o.rank_ != rank_) throw DomainError("polynomials of different rank");
  for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, c);
  return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
  if (o.rank_ != rank_) throw DomainError("polynomials of different rank");
  for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, -c);
  return *this;
}

QuadPoly QuadPoly::shifted(int new_rank, int offset) const {
  QuadPoly p(new_rank);
  for (const auto& [ij, c] : terms_) p.add(ij.first + offset, ij.second + offset, c);
  return p;
}

Rational QuadPoly::evaluate(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != rank_) throw DomainError("point rank does not match polynomial rank");
  Rational sum = 0;
  for (const auto& [ij, c] : terms_) sum += c * values[ij.first - 1] * values[ij.second - 1];
  return sum;
}

std::string QuadPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : terms_) {
    Rational mag = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (mag != 1) os << nilorb::to_string(mag) << "*";
    if (ij.first == ij.second) {
      os << "h" << ij.first << "^2";
    } else {
      os << "h" << ij.first << "*h" << ij.second;
    }
  }
  return os.str();
}

CartanPoint omega_to_eps(const CartanPoint& p) {
  if (p.basis == CartanPoint::Basis::Eps) return p;
  const int r = p.rank();
  CartanPoint out{CartanPoint::Basis::Eps, std::vector<Rational>(p.coords.size())};
  if (r == 0) return out;
  Rational tail = p.coords[r - 1] / 2;
  out.coords[r - 1] = tail;
  for (int i = r - 2; i >= 0; --i) {
    tail += p.coords[i];
    out.coords[i] = tail;
  }
  return out;
}

CartanPoint eps_to_omega(const CartanPoint& p) {
  if (p.basis == CartanPoint::Basis::Omega) return p;
  const int r = p.rank();
  CartanPoint out{CartanPoint::Basis::Omega, std::vector<Rational>(p.coords.size())};
  if (r == 0) return out;
  for (int i = 0; i + 1 < r; ++i) out.coords[i] = p.coords[i] - p.coords[i + 1];
  out.coords[r - 1] = 2 * p.coords[r - 1];
  return out;
}

LinearForm b_coroot(int i, int j, int r) {
  if (!(1 <= i && i < j && j <= r)) throw DomainError("need 1 <= i < j <= r for a coroot of e_i + e_j");
  LinearForm f(static_cast<std::size_t>(r), Rational(0));
  for (int k = i; k < j; ++k) f[k - 1] = 1;
  for (int k = j; k < r; ++k) f[k - 1] = 2;
  f[r - 1] = 1;
  return f;
}

std::vector<QuadPoly> w2_generators(int r) {
  if (r < 3) throw DomainError("generators are defined for rank >= 3");
  if (r == 3) {
    QuadPoly p1 = QuadPoly::monomial(3, 1, 3);
    QuadPoly p2 = QuadPoly::monomial(3, 2, 3, 2) + QuadPoly::monomial(3, 3, 3);
    QuadPoly p3 = QuadPoly::monomial(3, 1, 2) + QuadPoly::monomial(3, 2, 2) +
                  QuadPoly::monomial(3, 2, 3, Rational(1, 2));
    return {p1, p2, p3};
  }
  std::vector<QuadPoly> gens;
  for (int j = 1; j <= r - 2; ++j) gens.push_back(QuadPoly::monomial(r, 1, j + 2));
  for (const QuadPoly& p : w2_generators(r - 1)) gens.push_back(p.shifted(r, 1));

  QuadPoly last = QuadPoly::product(b_coroot(1, 3, r), b_coroot(2, 4, r));
  LinearForm h1(static_cast<std::size_t>(r), Rational(0));
  h1[0] = 1;
  LinearForm tail(static_cast<std::size_t>(r), Rational(0));
  tail[2] = 1;
  for (int k = 4; k < r; ++k) tail[k - 1] = 2;
  tail[r - 1] += 1;
  last -= QuadPoly::product(h1, tail);
  gens.push_back(std::move(last));
  return gens;
}

std::vector<Rational> evaluate(const std::vector<QuadPoly>& gens, const CartanPoint& p) {
  const CartanPoint w = eps_to_omega(p);
  std::vector<Rational> out;
  out.reserve(gens.size());
  for (const QuadPoly& g : gens) out.push_back(g.evaluate(w.coords));
  return out;
}

bool vanishes_at(const std::vector<QuadPoly>& gens, const CartanPoint& p) {
  const CartanPoint w = eps_to_omega(p);
  for (const QuadPoly& g : gens) {
    if (g.rank() != w.rank()) throw DomainError("point rank does not match generator rank");
    if (g.evaluate(w.coords) != 0) return false;
  }
  return true;
}

LineMembership eps_line_membership(const CartanPoint& p) {
  const CartanPoint e = omega_to_eps(p);
  int nonzero = 0;
  int where = 0;
  for (int i = 0; i < e.rank(); ++i) {
    if (e.coords[i] != 0) {
      ++nonzero;
      where = i + 1;
    }
  }
  LineMembership m;
  m.member = nonzero <= 1;
  if (nonzero == 1) m.axis = where;
  return m;
}

std::vector<CartanPoint> sample_off_axis(int r, std::size_t count, std::uint64_t seed) {
  if (r < 2) throw DomainError("off-axis points need rank >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> index(0, r - 1);
  std::bernoulli_distribution sparse(0.5);
  std::vector<CartanPoint> out;
  out.reserve(count);
  while (out.size() < count) {
    CartanPoint p{CartanPoint::Basis::Eps, std::vector<Rational>(static_cast<std::size_t>(r), Rational(0))};
    int nonzero = 0;
    for (auto& c : p.coords) {
      if (sparse(rng)) continue;
      c = Rational(num(rng), den(rng));
      if (c != 0) ++nonzero;
    }
    // Force a second coordinate when the draw landed near an axis.
    while (nonzero < 2) {
      auto& c = p.coords[static_cast<std::size_t>(index(rng))];
      if (c != 0) continue;
      c = Rational(num(rng), den(rng));
      if (c != 0) ++nonzero;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace nilorb
