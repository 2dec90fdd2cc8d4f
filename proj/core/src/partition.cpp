#include "nilorb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view tok, std::string_view whole, bool allow_zero = false) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw DomainError("invalid partition token '" + std::string(tok) + "' in '" +
                      std::string(whole) + "'");
  }
  if (value < 0 || (value == 0 && !allow_zero)) {
    throw DomainError("partition parts must be positive, got " + std::to_string(value));
  }
  return value;
}

// Parts whose parity is constrained to even multiplicity under eps.
bool constrained_parity(int part, Eps eps) {
  return eps == Eps::Orthogonal ? part % 2 == 0 : part % 2 == 1;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw DomainError("partition parts must be non-negative");
  }
  std::erase(parts_, 0);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::count_odd_parts() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; }));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

Eps parse_eps(std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "+1" || text == "orthogonal") return Eps::Orthogonal;
  if (text == "-1" || text == "symplectic") return Eps::Symplectic;
  throw DomainError("eps must be 1 or -1, got '" + std::string(text) + "'");
}

Partition parse_partition(std::string_view text) {
  const std::string_view whole = text;
  if (trim(text).empty()) throw DomainError("empty partition");
  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view tok = text.substr(0, comma);
    const auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(tok, whole));
    } else {
      const int value = parse_positive(tok.substr(0, caret), whole);
      const int exponent = parse_positive(tok.substr(caret + 1), whole, true);
      parts.insert(parts.end(), static_cast<std::size_t>(exponent), value);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (parts.empty()) throw DomainError("empty partition '" + std::string(whole) + "'");
  return Partition(std::move(parts));
}

bool is_valid_eps(const Partition& lam, Eps eps) {
  const auto parts = lam.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (constrained_parity(parts[i], eps) && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

Partition dual(const Partition& lam) {
  std::vector<int> cols(static_cast<std::size_t>(lam.largest()), 0);
  for (int p : lam.parts()) {
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool dominates(const Partition& lam, const Partition& eta) {
  if (lam.total() != eta.total()) {
    throw DomainError("dominance needs equal totals: " + lam.to_string() + " vs " + eta.to_string());
  }
  int a = 0;
  int b = 0;
  const std::size_t len = std::max(lam.length(), eta.length());
  for (std::size_t k = 0; k < len; ++k) {
    a += lam[k];
    b += eta[k];
    if (a < b) return false;
  }
  return true;
}

Partition collapse(const Partition& lam, Eps eps) {
  if (eps == Eps::Symplectic && lam.total() % 2 != 0) {
    throw DomainError("no symplectic partition of odd n = " + std::to_string(lam.total()));
  }
  std::vector<int> parts(lam.parts().begin(), lam.parts().end());
  while (true) {
    // Largest constrained value with odd multiplicity.
    int bad = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (constrained_parity(parts[i], eps) && (j - i) % 2 != 0) {
        bad = parts[i];
        last = j - 1;
        break;
      }
      i = j;
    }
    if (bad == 0) break;
    parts[last] -= 1;
    std::size_t k = last + 1;
    while (k < parts.size() && parts[k] >= bad - 1) ++k;
    if (k == parts.size()) parts.push_back(0);
    parts[k] += 1;
    std::erase(parts, 0);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_eps(int n, Eps eps) {
  std::vector<Partition> all = enumerate_partitions(n);
  std::erase_if(all, [eps](const Partition& p) { return !is_valid_eps(p, eps); });
  return all;
}

namespace {

// Covers of lam among `candidates` (which must be in decreasing lex order).
// Lex order extends dominance, so any non-maximal eta below lam is dominated
// by a maximal element that was already visited.
std::vector<Partition> covers_among(const Partition& lam, const std::vector<Partition>& candidates) {
  std::vector<Partition> covers;
  for (const Partition& eta : candidates) {
    if (eta >= lam) continue;
    if (!dominates(lam, eta)) continue;
    const bool shadowed = std::any_of(covers.begin(), covers.end(),
                                      [&](const Partition& c) { return dominates(c, eta); });
    if (!shadowed) covers.push_back(eta);
  }
  return covers;
}

}  // namespace

std::vector<Partition> minimal_degenerations(const Partition& lam, Eps eps) {
  if (!is_valid_eps(lam, eps)) {
    throw DomainError("partition " + lam.to_string() + " is not in P_" +
                      std::to_string(sign(eps)) + "(" + std::to_string(lam.total()) + ")");
  }
  return covers_among(lam, enumerate_eps(lam.total(), eps));
}

bool is_minimal_degeneration(const Partition& lam, const Partition& eta, Eps eps) {
  if (lam.total() != eta.total() || lam == eta) return false;
  const auto covers = minimal_degenerations(lam, eps);
  return std::find(covers.begin(), covers.end(), eta) != covers.end();
}

std::vector<HasseEdge> hasse(int n, Eps eps) {
  const std::vector<Partition> nodes = enumerate_eps(n, eps);
  std::vector<HasseEdge> edges;
  for (const Partition& lam : nodes) {
    for (Partition& eta : covers_among(lam, nodes)) edges.push_back({lam, std::move(eta)});
  }
  return edges;
}

}  // namespace nilorb
