#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

/// A linear form c_1 h_1 + ... + c_r h_r in Cartan coordinates.
using LinearForm = std::vector<Rational>;

/// Homogeneous quadratic in h_1..h_r with exact coefficients.
class QuadPoly {
 public:
  QuadPoly() = default;
  explicit QuadPoly(int rank);

  /// The product of two linear forms of the same rank.
  [[nodiscard]] static QuadPoly product(const LinearForm& a, const LinearForm& b);
  /// h_i * h_j (1-based).
  [[nodiscard]] static QuadPoly monomial(int rank, int i, int j, const Rational& c = 1);

  [[nodiscard]] int rank() const { return rank_; }
  /// Coefficient of h_i h_j; order of i, j is irrelevant.
  [[nodiscard]] Rational coeff(int i, int j) const;
  [[nodiscard]] const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(int i, int j, const Rational& c);
  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }

  /// Re-indexes onto a larger rank: h_i becomes h_{i+offset}.
  [[nodiscard]] QuadPoly shifted(int new_rank, int offset) const;

  /// Value at h_i = values[i-1].
  [[nodiscard]] Rational evaluate(const std::vector<Rational>& values) const;

  /// "h1*h3 + 1/2*h2*h3 + h2^2"; the zero polynomial prints as "0".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  int rank_ = 0;
  std::map<std::pair<int, int>, Rational> terms_;  // i <= j, no zero coefficients
};

/// A point of the Cartan subalgebra of so_{2r+1} (identified with its dual),
/// in fundamental-weight coordinates or in epsilon coordinates.
struct CartanPoint {
  enum class Basis { Omega, Eps };
  Basis basis = Basis::Omega;
  std::vector<Rational> coords;

  [[nodiscard]] int rank() const { return static_cast<int>(coords.size()); }
};

/// a_i = l_i + ... + l_{r-1} + l_r / 2. Identity on Eps input.
[[nodiscard]] CartanPoint omega_to_eps(const CartanPoint& p);
/// l_i = a_i - a_{i+1}, l_r = 2 a_r. Identity on Omega input.
[[nodiscard]] CartanPoint eps_to_omega(const CartanPoint& p);

/// Coroot of the long root e_i + e_j (1 <= i < j <= r) of B_r as a linear
/// form in h_1..h_r.
[[nodiscard]] LinearForm b_coroot(int i, int j, int r);

/// The r(r-1)/2 quadratic generators on the Cartan for B_r, r >= 3.
[[nodiscard]] std::vector<QuadPoly> w2_generators(int r);

/// Values of the generators at a point (h_i evaluated as the i-th
/// fundamental-weight coordinate).
[[nodiscard]] std::vector<Rational> evaluate(const std::vector<QuadPoly>& gens, const CartanPoint& p);

/// True iff every generator vanishes exactly. Throws DomainError on a rank mismatch.
[[nodiscard]] bool vanishes_at(const std::vector<QuadPoly>& gens, const CartanPoint& p);

struct LineMembership {
  bool member = false;      ///< the point lies on some line C e_i
  std::optional<int> axis;  ///< 1-based i; empty for the origin
};

[[nodiscard]] LineMembership eps_line_membership(const CartanPoint& p);

/// Deterministic points in epsilon coordinates with at least two nonzero
/// coordinates; entries are small signed fractions.
[[nodiscard]] std::vector<CartanPoint> sample_off_axis(int r, std::size_t count, std::uint64_t seed);

}  // namespace nilorb
