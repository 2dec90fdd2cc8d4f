#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

namespace nilorb {

enum class ExceptionalType { G2, F4, E6, E7, E8 };

[[nodiscard]] std::string_view to_string(ExceptionalType t);
[[nodiscard]] ExceptionalType parse_exceptional_type(std::string_view text);

/// Canonical ASCII spelling of a Bala-Carter label: whitespace, underscores
/// and braces removed, tilde written as a "~" prefix ("Ã1" -> "~A1"), prime
/// marks folded to apostrophes with the primed part parenthesised
/// ("A5''" -> "(A5)''"), and "(A1)" after a digit lowered to "(a1)".
[[nodiscard]] std::string normalize_label(std::string_view text);

/// A label checked against the vocabulary of its exceptional type.
class BalaCarterLabel {
 public:
  /// Throws DomainError if the normalized label is not an orbit of `type`.
  [[nodiscard]] static BalaCarterLabel parse(ExceptionalType type, std::string_view text);

  [[nodiscard]] ExceptionalType type() const { return type_; }
  [[nodiscard]] const std::string& text() const { return text_; }
  /// Set for entries stored verbatim from the tables but not valid labels.
  [[nodiscard]] std::optional<std::string_view> data_note() const;

 private:
  ExceptionalType type_ = ExceptionalType::G2;
  std::string text_;
};

[[nodiscard]] std::span<const std::string_view> vocabulary(ExceptionalType t);
[[nodiscard]] std::span<const std::string_view> branching_orbits(ExceptionalType t);
[[nodiscard]] std::span<const std::string_view> nonnormal_orbits(ExceptionalType t);

[[nodiscard]] bool has_branching(const BalaCarterLabel& label);
[[nodiscard]] bool has_branching(ExceptionalType t, std::string_view label);

struct NonNormalStatus {
  bool listed = false;
  /// For unlisted orbits: whether the table is known to be complete (G2, F4, E6).
  bool exhaustive = false;
  std::optional<std::string> note;
};

[[nodiscard]] NonNormalStatus nonnormal_status(const BalaCarterLabel& label);
[[nodiscard]] NonNormalStatus nonnormal_status(ExceptionalType t, std::string_view label);

/// Every nilpotent Slodowy slice into the closure of the orbit is irreducible
/// iff the closure has no branching.
[[nodiscard]] bool slice_irreducible_exceptional(const BalaCarterLabel& label);
[[nodiscard]] bool slice_irreducible_exceptional(ExceptionalType t, std::string_view label);

/// {"G2": {"orbits": [...], "branching": [...], "non_normal": [...],
///  "non_normal_exhaustive": bool}, ...}
[[nodiscard]] nlohmann::json export_exceptional_tables();

}  // namespace nilorb
