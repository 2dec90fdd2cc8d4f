#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

/// A partition of n, stored as a weakly decreasing list of positive parts.
///
/// The stored form is canonical: construction sorts the input and strips
/// zero parts, so two equal partitions always have identical part lists.
/// Comparison operators implement the lexicographic order on part lists,
/// which is a linear extension of the dominance order on partitions of a
/// fixed n. Dominance itself is `dominates()`.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws DomainError on a negative part. Zero parts are dropped.
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] int total() const { return total_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  /// The i-th part (0-based); parts beyond the length read as 0.
  [[nodiscard]] int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  [[nodiscard]] int multiplicity(int value) const;
  [[nodiscard]] int count_odd_parts() const;

  /// Comma separated, exponents expanded: "5,5,4". The empty partition is "".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parity rule selecting orthogonal (+1) or symplectic (-1) partitions.
enum class Eps : int { Orthogonal = 1, Symplectic = -1 };

[[nodiscard]] constexpr int sign(Eps e) { return static_cast<int>(e); }
[[nodiscard]] constexpr Eps flip(Eps e, int times = 1) {
  return (times % 2 == 0) ? e : (e == Eps::Orthogonal ? Eps::Symplectic : Eps::Orthogonal);
}
/// Accepts 1/+1/-1 and the words "orthogonal"/"symplectic".
[[nodiscard]] Eps parse_eps(std::string_view text);

/// Parses "7^2,4" style input. Tokens are `k` or `k^m`; the result is sorted.
/// Throws DomainError on empty input, non-integer tokens or non-positive parts.
[[nodiscard]] Partition parse_partition(std::string_view text);

/// Membership in P_eps(n): for eps = +1 every even part value has even
/// multiplicity; for eps = -1 every odd part value has even multiplicity.
[[nodiscard]] bool is_valid_eps(const Partition& lam, Eps eps);

/// Transpose of the Young diagram.
[[nodiscard]] Partition dual(const Partition& lam);

/// Dominance order: all partial sums of `lam` are >= those of `eta`.
/// Throws DomainError when the totals differ.
[[nodiscard]] bool dominates(const Partition& lam, const Partition& eta);

/// The largest eps-partition dominated by `lam` (lambda^+ / lambda^-).
/// Throws DomainError for eps = -1 and odd n.
[[nodiscard]] Partition collapse(const Partition& lam, Eps eps);

/// All partitions of n in decreasing lexicographic order. n = 0 yields {()}.
[[nodiscard]] std::vector<Partition> enumerate_partitions(int n);

/// All eps-partitions of n in decreasing lexicographic order (possibly empty).
[[nodiscard]] std::vector<Partition> enumerate_eps(int n, Eps eps);

/// Partitions eta in P_eps(n) covered by `lam` in the dominance order,
/// in decreasing lexicographic order. Throws if `lam` is not eps-valid.
[[nodiscard]] std::vector<Partition> minimal_degenerations(const Partition& lam, Eps eps);

/// True when eta < lam are adjacent in P_eps(n).
[[nodiscard]] bool is_minimal_degeneration(const Partition& lam, const Partition& eta, Eps eps);

struct HasseEdge {
  Partition from;  ///< the larger orbit
  Partition to;    ///< a minimal degeneration of `from`
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering relation of P_eps(n); edges are grouped by source in decreasing
/// lexicographic order.
[[nodiscard]] std::vector<HasseEdge> hasse(int n, Eps eps);

}  // namespace nilorb
