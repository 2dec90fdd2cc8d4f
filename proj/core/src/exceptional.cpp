#include "nilorb/exceptional.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>

#include <nlohmann/json.hpp>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

#include "exceptional_tables.inc"

struct TypeData {
  std::span<const std::string_view> orbits;
  std::span<const std::string_view> branching;
  std::span<const std::string_view> non_normal;
  bool non_normal_exhaustive;
};

const TypeData& data(ExceptionalType t) {
  static const std::array<TypeData, 5> table = {{
      {kVocabularyG2, {}, kNonNormalG2, true},
      {kVocabularyF4, kBranchingF4, kNonNormalF4, true},
      {kVocabularyE6, kBranchingE6, kNonNormalE6, true},
      {kVocabularyE7, kBranchingE7, kNonNormalE7, false},
      {kVocabularyE8, kBranchingE8, kNonNormalE8, false},
  }};
  return table[static_cast<std::size_t>(t)];
}

bool contains(std::span<const std::string_view> list, std::string_view label) {
  return std::find(list.begin(), list.end(), label) != list.end();
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

std::string_view to_string(ExceptionalType t) {
  static constexpr std::array<std::string_view, 5> names = {"G2", "F4", "E6", "E7", "E8"};
  return names[static_cast<std::size_t>(t)];
}

ExceptionalType parse_exceptional_type(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (ExceptionalType t : {ExceptionalType::G2, ExceptionalType::F4, ExceptionalType::E6, ExceptionalType::E7,
                            ExceptionalType::E8}) {
    if (upper == to_string(t)) return t;
  }
  throw DomainError("unknown exceptional type '" + std::string(text) + "'");
}

std::string normalize_label(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}' || c == '$') continue;
    s += c;
  }
  replace_all(s, "\\tilde", "~");
  replace_all(s, "\xC3\x83", "~A");      // U+00C3
  replace_all(s, "A\xCC\x83", "~A");     // A + combining tilde
  replace_all(s, "\xE2\x80\xB3", "''");  // double prime
  replace_all(s, "\xE2\x80\xB2", "'");   // prime
  replace_all(s, "\xE2\x80\x99", "'");
  replace_all(s, "\xE2\x80\x98", "'");
  replace_all(s, "\"", "''");

  // "A~1" and "A1~" spellings.
  static const std::regex postfix_tilde(R"(([A-Z])~?(\d+)~)");
  s = std::regex_replace(s, postfix_tilde, "~$1$2");
  static const std::regex infix_tilde(R"(([A-Z])~(\d+))");
  s = std::regex_replace(s, infix_tilde, "~$1$2");

  // Lower-case a/b parameters attached to a simple factor: D4(A1) -> D4(a1).
  static const std::regex param(R"((\d)\(([AaBb])(\d+)\))");
  std::string out;
  auto begin = std::sregex_iterator(s.begin(), s.end(), param);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out.append(s, last, static_cast<std::size_t>(m.position()) - last);
    out += m[1].str();
    out += '(';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(m[2].str()[0])));
    out += m[3].str();
    out += ')';
    last = static_cast<std::size_t>(m.position() + m.length());
  }
  out.append(s, last, std::string::npos);
  s = std::move(out);

  // Trailing primes apply to the whole label; parenthesise it.
  const std::size_t primes = s.find_last_not_of('\'');
  if (primes != std::string::npos && primes + 1 < s.size() && s.front() != '(') {
    s = "(" + s.substr(0, primes + 1) + ")" + s.substr(primes + 1);
  }
  return s;
}

BalaCarterLabel BalaCarterLabel::parse(ExceptionalType type, std::string_view text) {
  BalaCarterLabel label;
  label.type_ = type;
  label.text_ = normalize_label(text);
  const TypeData& d = data(type);
  if (!contains(d.orbits, label.text_) && !contains(d.non_normal, label.text_) &&
      !contains(d.branching, label.text_)) {
    throw DomainError("'" + std::string(text) + "' is not a nilpotent orbit label of " +
                      std::string(to_string(type)));
  }
  return label;
}

std::optional<std::string_view> BalaCarterLabel::data_note() const {
  if (type_ == ExceptionalType::E8 && text_ == kSuspectE8Label) return kSuspectE8Note;
  return std::nullopt;
}

std::span<const std::string_view> vocabulary(ExceptionalType t) { return data(t).orbits; }
std::span<const std::string_view> branching_orbits(ExceptionalType t) { return data(t).branching; }
std::span<const std::string_view> nonnormal_orbits(ExceptionalType t) { return data(t).non_normal; }

bool has_branching(const BalaCarterLabel& label) { return contains(data(label.type()).branching, label.text()); }

bool has_branching(ExceptionalType t, std::string_view label) {
  return has_branching(BalaCarterLabel::parse(t, label));
}

NonNormalStatus nonnormal_status(const BalaCarterLabel& label) {
  const TypeData& d = data(label.type());
  NonNormalStatus st;
  st.listed = contains(d.non_normal, label.text());
  st.exhaustive = d.non_normal_exhaustive;
  if (auto note = label.data_note()) st.note = std::string(*note);
  return st;
}

NonNormalStatus nonnormal_status(ExceptionalType t, std::string_view label) {
  return nonnormal_status(BalaCarterLabel::parse(t, label));
}

bool slice_irreducible_exceptional(const BalaCarterLabel& label) { return !has_branching(label); }

bool slice_irreducible_exceptional(ExceptionalType t, std::string_view label) {
  return slice_irreducible_exceptional(BalaCarterLabel::parse(t, label));
}

nlohmann::json export_exceptional_tables() {
  nlohmann::json out = nlohmann::json::object();
  for (ExceptionalType t : {ExceptionalType::G2, ExceptionalType::F4, ExceptionalType::E6, ExceptionalType::E7,
                            ExceptionalType::E8}) {
    const TypeData& d = data(t);
    auto strings = [](std::span<const std::string_view> list) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto s : list) arr.push_back(std::string(s));
      return arr;
    };
    out[std::string(to_string(t))] = {
        {"orbits", strings(d.orbits)},
        {"branching", strings(d.branching)},
        {"non_normal", strings(d.non_normal)},
        {"non_normal_exhaustive", d.non_normal_exhaustive},
    };
  }
  out["notes"] = {{"E8", {{std::string(kSuspectE8Label), std::string(kSuspectE8Note)}}}};
  return out;
}

}  // namespace nilorb
