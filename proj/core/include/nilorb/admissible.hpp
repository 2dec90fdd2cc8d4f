#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/kraft_procesi.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/rational.hpp"

namespace nilorb {

/// The three classical settings of the admissible families:
/// sp_{2r} (eps = -1), so_{2r+1} and so_{2r} (eps = +1).
enum class AdmSeries { SP, SO_ODD, SO_EVEN };

[[nodiscard]] std::string_view to_string(AdmSeries s);
/// Accepts sp, so-odd, so-even (also so_odd / so_even).
[[nodiscard]] AdmSeries parse_adm_series(std::string_view text);
[[nodiscard]] Eps eps_of(AdmSeries s);
/// 2r or 2r+1.
[[nodiscard]] int total_for(AdmSeries s, int r);

enum class Family { I, II, III, IV, V };

[[nodiscard]] std::string_view to_string(Family f);
[[nodiscard]] Family parse_family(std::string_view text);
/// Families available for a series: I..V for SP, I..IV otherwise.
[[nodiscard]] std::vector<Family> families_of(AdmSeries s);

struct FamilySpec {
  AdmSeries series = AdmSeries::SP;
  Family family = Family::I;
  int q = 1;
  int s = 0;
  int rank = 1;
};

/// Families III and IV of so_{2r+1} carry a caveat: q even is not expected to
/// occur there, but both families are kept so their table rows stay checkable.
[[nodiscard]] bool has_caveat(AdmSeries s, Family f);

/// The concrete partition of a family member. The multiplicity of q is the
/// one making the parts add up to 2r (or 2r+1); it must be >= 1 and have the
/// family's parity. Throws DomainError on any violated constraint.
[[nodiscard]] Partition family_partition(const FamilySpec& spec);

struct TableRow {
  Partition lambda;
  Partition eta;
  Eps eps_prime = Eps::Orthogonal;
  Partition lambda_prime;
  Partition eta_prime;
  KpType type = KpType::a;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// One row per codimension-2 minimal degeneration of lam, in decreasing
/// lexicographic order of eta. Empty means the closure has no orbit in
/// codimension 2. Throws DomainError if lam is not eps-valid.
[[nodiscard]] std::vector<TableRow> codim2_rows(const Partition& lam, Eps eps);

/// A symbolic row of the family tables; id is "<series>.<family>.<k>".
struct RowPatternInfo {
  std::string id;
  AdmSeries series;
  Family family;
  std::string range;    ///< e.g. "0<=s<=q-3"
  std::string eta;      ///< e.g. "(q,...,q,q-1,q-1,s+2)"
  int eps_prime;
  std::string lambda_prime;
  std::string eta_prime;
  KpType type;
};

[[nodiscard]] std::vector<RowPatternInfo> row_patterns();

/// The rows predicted by the symbolic table for one family member.
struct PredictedRow {
  std::string pattern_id;
  TableRow row;
};

struct SkippedRow {
  FamilySpec spec;
  std::string pattern_id;
  std::string reason;
};

/// Predictions for `spec`; instances that fall outside the pattern's own
/// validity (negative q-block, eps-invalid eta, eta not below lambda) are
/// returned in `skipped`.
[[nodiscard]] std::vector<PredictedRow> predicted_rows(const FamilySpec& spec, std::vector<SkippedRow>* skipped = nullptr);

struct Mismatch {
  FamilySpec spec;
  Partition lambda;
  /// Set when the table predicts a row the engine does not produce.
  std::optional<PredictedRow> predicted;
  /// Set when the engine produces a row the table does not predict.
  std::optional<TableRow> produced;
};

struct VerificationReport {
  int q_max = 0;
  int r_max = 0;
  int instances = 0;
  int rows_checked = 0;
  int type_e_hits = 0;
  int normal = 0;
  int non_normal = 0;
  std::vector<Mismatch> mismatches;
  std::vector<SkippedRow> skipped;
  /// Pattern ids that matched at least one produced row.
  std::vector<std::string> patterns_matched;
  /// Pattern ids whose row range never meets the family constraints for any q.
  std::vector<std::string> patterns_vacuous;
  /// Pattern ids with a legal (q, s) in range but no instance within the bounds.
  std::vector<std::string> patterns_unreached;

  [[nodiscard]] bool ok() const { return mismatches.empty() && type_e_hits == 0 && non_normal == 0; }
};

/// All legal family members with q <= q_max, rank <= r_max and lambda_1 >= 3,
/// checked row by row against the symbolic tables.
[[nodiscard]] VerificationReport verify_paper_tables(int q_max, int r_max);

/// Legal (q, s, r) members of one family within the bounds, lambda_1 >= 3.
[[nodiscard]] std::vector<FamilySpec> family_members(AdmSeries series, Family family, int q_max, int r_max);

/// Partitions of the orbits in rows 5, 6, 7 of the list of known levels:
/// 5 -> (2,2,1^{2r-4}) for r >= 5, 6 -> (2^{r-2},1^4) for even r >= 4,
/// 7 -> (3,1^{2r-2}) for r >= 2.
[[nodiscard]] Partition table1_partition(int which, int r);

/// -(k+r-2)(3kr-6k+2r^2-12r+10)/(k+2r-2). Throws DomainError at k = 2-2r.
[[nodiscard]] Rational central_charge_typeD(const Rational& k, int r);

/// 1 - 6(p-q)^2/(pq) for coprime p, q >= 2.
[[nodiscard]] Rational virasoro_c(int p, int q);

}  // namespace nilorb
