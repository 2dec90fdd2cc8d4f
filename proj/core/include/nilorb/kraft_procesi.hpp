#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilorb/orbit.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

/// One erasure performed while reducing a degeneration.
struct ErasureStep {
  enum class Kind { Rows, Columns };
  Kind kind = Kind::Rows;
  int stage = 0;          ///< 0-based position in the erasure sequence
  std::vector<int> rows;  ///< erased row lengths (Rows only)
  int columns = 0;        ///< number of erased leading columns (Columns only)

  friend bool operator==(const ErasureStep&, const ErasureStep&) = default;
};

/// An irreducible pair reached by erasing common leading rows and columns.
struct Reduction {
  Partition lambda_p;
  Partition eta_p;
  Eps eps_p = Eps::Orthogonal;
  std::vector<ErasureStep> steps;

  [[nodiscard]] int columns_erased() const;
  [[nodiscard]] int rows_erased() const;
};

enum class ErasureOrder { RowsFirst, ColumnsFirst };

/// Erases common leading rows (whose block must itself be an eps-partition)
/// and common leading columns (each column flips eps) until neither applies.
///
/// Throws DomainError unless eta < lam strictly with both eps-valid.
[[nodiscard]] Reduction reduce(const Partition& lam, const Partition& eta, Eps eps,
                               ErasureOrder order = ErasureOrder::RowsFirst);

/// True when no common leading row or column block can be erased.
[[nodiscard]] bool is_irreducible(const Partition& lam, const Partition& eta, Eps eps);

/// Rows of the table of irreducible minimal degenerations.
enum class KpType { a, b, c, d, e, f, g, h };

[[nodiscard]] char to_char(KpType t);
[[nodiscard]] KpType parse_kp_type(char c);

/// The singularity class of an orbit closure along a smaller orbit.
struct SingularityClass {
  enum class Kind {
    KleinianA,       ///< A_k surface singularity
    KleinianD,       ///< D_k surface singularity
    TwoBranchesA,    ///< A_k u A_k: two branches, non-normal
    MinimalClosure,  ///< closure of the minimal orbit of type b_k, c_k or d_k
    NotMinimal,      ///< irreducible pair matching no table row
    UnknownNonMinimal
  };
  Kind kind = Kind::NotMinimal;
  int index = 0;       ///< k in A_k, D_k, b_k, c_k, d_k
  char series = '\0';  ///< 'b', 'c' or 'd' for MinimalClosure
  std::optional<KpType> kp_type;
  /// Only for UnknownNonMinimal: the reduced pair.
  std::optional<Reduction> reduced;

  /// "A1", "D3", "A3uA3", "b2", "not-minimal", "unknown".
  [[nodiscard]] std::string label() const;
  /// Codimension read off the table row (requires kp_type).
  [[nodiscard]] int table_codim() const;
};

/// Matches an irreducible pair against the eight table rows. Rows b and f use
/// eta = (2n-2, 2) and lam = (2,2,1^{2n-3}) respectively.
/// Throws DomainError when the pair is reducible or not a strict degeneration.
[[nodiscard]] SingularityClass classify_irreducible(const Partition& lam_p, const Partition& eta_p, Eps eps_p);

/// classify_irreducible after reduce(); UnknownNonMinimal (carrying the
/// reduction) when eta is not a minimal degeneration of lam.
[[nodiscard]] SingularityClass degeneration_singularity(const Partition& lam, const Partition& eta, Eps eps);

struct NormalityVerdict {
  enum class Status { Normal, NonNormal, VeryEvenUnsupported };
  Status status = Status::Normal;
  /// Codimension-2 minimal degenerations reducing to row e, canonically ordered.
  std::vector<Partition> witnesses;
  /// Whether the lambda_1 + lambda_2 <= 4 (orthogonal) or lambda_1 <= 2
  /// (symplectic) sufficient condition holds.
  bool hesselink_applies = false;
};

[[nodiscard]] std::string_view to_string(NormalityVerdict::Status s);

[[nodiscard]] bool hesselink_normal(const ClassicalAlgebra& g, const Partition& lam);

/// Normality of the orbit closure, decided by scanning codimension-2 minimal
/// degenerations for row e. sl_n is always normal; very even orthogonal
/// partitions are reported as unsupported.
[[nodiscard]] NormalityVerdict is_normal_closure(const ClassicalAlgebra& g, const Partition& lam);

/// Number of branches of the closure of O_lam at O_eta, equivalently the
/// number of irreducible components of the nilpotent Slodowy slice.
/// Empty when it cannot be decided from the available data.
[[nodiscard]] std::optional<int> branches_at(const Partition& lam, const Partition& eta, Eps eps);

struct SliceReport {
  bool empty = false;  ///< eta is not in the closure of O_lam
  long dimension = 0;
  std::optional<int> components;
  std::optional<SingularityClass> singularity;
};

/// Slice through O_eta in the closure of O_lam: dimension, components and,
/// for minimal degenerations, the singularity class.
[[nodiscard]] SliceReport slice_report(const ClassicalAlgebra& g, const Partition& lam, const Partition& eta);

}  // namespace nilorb
