#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

/// sl_n, o_n / so_n, sp_n acting on their natural n-dimensional module.
enum class Series { SL, O, SP };

[[nodiscard]] std::string_view to_string(Series s);
/// Accepts sl, so, o, sp (case-insensitive).
[[nodiscard]] Series parse_series(std::string_view text);

struct ClassicalAlgebra {
  Series series = Series::SL;
  int n = 2;

  /// Validates the size: SL needs n >= 2, O needs n >= 3, SP needs even n >= 2.
  [[nodiscard]] static ClassicalAlgebra make(Series series, int n);

  /// The parity rule of the algebra; empty for SL.
  [[nodiscard]] std::optional<Eps> eps() const;
  /// Rank of the simple algebra (n-1 for SL, floor(n/2) otherwise).
  [[nodiscard]] int rank() const;
  /// Cartan type letter: A, B, C or D.
  [[nodiscard]] char cartan_type() const;
  [[nodiscard]] long dimension() const;

  friend bool operator==(const ClassicalAlgebra&, const ClassicalAlgebra&) = default;
};

/// The algebra whose orbits are parametrised by P_eps(n).
[[nodiscard]] ClassicalAlgebra algebra_for(Eps eps, int n);

/// Distinguishes the two SO(n)-orbits sharing a very even partition.
enum class SoLabel { I, II };

[[nodiscard]] std::string_view to_string(SoLabel l);
[[nodiscard]] SoLabel parse_so_label(std::string_view text);

class Orbit {
 public:
  [[nodiscard]] const ClassicalAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const Partition& partition() const { return lam_; }
  [[nodiscard]] bool very_even() const { return very_even_; }
  [[nodiscard]] const std::optional<SoLabel>& so_label() const { return so_label_; }

  friend bool operator==(const Orbit&, const Orbit&) = default;

 private:
  friend Orbit orbit_from_partition(const ClassicalAlgebra&, const Partition&, std::optional<SoLabel>);
  ClassicalAlgebra algebra_;
  Partition lam_;
  bool very_even_ = false;
  std::optional<SoLabel> so_label_;
};

/// Very even: O(n) with n even and all parts even.
[[nodiscard]] bool is_very_even(const ClassicalAlgebra& g, const Partition& lam);

/// Validates `lam` against the algebra. Without a label a very even partition
/// denotes the O(n)-orbit (union of both SO(n)-orbits). A label on a partition
/// that is not very even is rejected.
[[nodiscard]] Orbit orbit_from_partition(const ClassicalAlgebra& g, const Partition& lam,
                                         std::optional<SoLabel> label = std::nullopt);

[[nodiscard]] long dim_orbit(const Orbit& orbit);
[[nodiscard]] long dim_orbit(const ClassicalAlgebra& g, const Partition& lam);

/// dim O_lam - dim O_eta for eta <= lam. Throws on invalid or incomparable input.
[[nodiscard]] long codim_degeneration(const ClassicalAlgebra& g, const Partition& lam,
                                      const Partition& eta);

struct ClosureComparison {
  bool leq = false;
  /// Set when both orbits are very even with the same partition but distinct
  /// I/II labels: they are equal as O(n)-orbits but incomparable as SO(n)-orbits.
  bool so_caveat = false;
};

/// Whether `a` lies in the closure of `b` (dominance of partitions).
[[nodiscard]] ClosureComparison closure_leq(const Orbit& a, const Orbit& b);

struct WeightedDynkinDiagram {
  char cartan_type = 'A';
  int rank = 0;
  /// Labels alpha_i(h) in Bourbaki order, each in {0, 1, 2}.
  std::vector<int> labels;

  friend bool operator==(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;
};

/// Labels of the dominant neutral element of an sl2-triple through the orbit.
///
/// Nodes follow Bourbaki: a chain 1..r with the B arrow into node r and the
/// D fork at nodes r-1, r. For a very even orbit label I puts the larger
/// value on node r and label II on node r-1; a label is required there.
[[nodiscard]] WeightedDynkinDiagram weighted_dynkin(const Orbit& orbit);

}  // namespace nilorb
