#include "modpoly/sutherland.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace modpoly {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool read_index(std::string_view& s, int& out) {
  s = trim(s);
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr == first || out < 0) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - first));
  return true;
}

bool consume(std::string_view& s, char c) {
  s = trim(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

// "# ell = 5" or "# ell: 5"
std::optional<int> header_ell(std::string_view comment) {
  comment.remove_prefix(1);
  comment = trim(comment);
  if (!comment.starts_with("ell")) return std::nullopt;
  comment.remove_prefix(3);
  comment = trim(comment);
  if (comment.empty() || (comment.front() != '=' && comment.front() != ':')) return std::nullopt;
  comment.remove_prefix(1);
  comment = trim(comment);
  int v = 0;
  auto [ptr, ec] = std::from_chars(comment.data(), comment.data() + comment.size(), v);
  if (ec != std::errc() || ptr != comment.data() + comment.size() || v < 1) return std::nullopt;
  return v;
}

struct Seen {
  BigInt value;
  std::size_t line;
  bool swapped;
};

}  // namespace

SutherlandFile parse_sutherland(std::istream& in, std::optional<int> ell_hint) {
  std::map<std::pair<int, int>, Seen> seen;
  std::optional<int> header;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto h = header_ell(line)) header = h;
      continue;
    }
    int m = 0;
    int n = 0;
    std::string_view rest = line;
    if (!consume(rest, '[') || !read_index(rest, m) || !consume(rest, ',') || !read_index(rest, n) ||
        !consume(rest, ']')) {
      throw ParseError(line_no, "expected '[m,n] value'");
    }
    if (rest.empty() || !std::isspace(static_cast<unsigned char>(rest.front()))) {
      throw ParseError(line_no, "expected whitespace before the coefficient");
    }
    BigInt value;
    try {
      value = parse_decimal(std::string(trim(rest)));
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "malformed integer coefficient");
    }

    const bool swapped = m < n;
    if (swapped) std::swap(m, n);
    auto [it, inserted] = seen.try_emplace({m, n}, Seen{value, line_no, swapped});
    if (inserted) continue;
    const Seen& prev = it->second;
    const std::string where = "[" + std::to_string(m) + "," + std::to_string(n) + "]";
    if (prev.swapped == swapped || m == n) {
      throw DuplicateEntryError("line " + std::to_string(line_no) + ": duplicate entry " + where +
                                " (first on line " + std::to_string(prev.line) + ")");
    }
    if (prev.value != value) {
      throw SymmetryConflictError("line " + std::to_string(line_no) + ": " + where +
                                  " and its mirror have different values");
    }
  }

  SutherlandFile file;
  if (ell_hint) {
    file.ell = *ell_hint;
  } else if (header) {
    file.ell = *header;
  } else if (!seen.empty()) {
    const int top = seen.rbegin()->first.first;
    const auto monic = seen.find({top, 0});
    const bool only_monic_at_top =
        top >= 1 && monic != seen.end() && monic->second.value == 1 &&
        std::none_of(seen.begin(), seen.end(), [&](const auto& kv) { return kv.first.first == top && kv.first.second != 0; });
    file.ell = only_monic_at_top ? top - 1 : top;
  }
  if (file.ell < 1) throw FormatError("cannot determine ell for an empty coefficient file");

  file.entries.reserve(seen.size());
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
    file.entries.push_back(SutherlandEntry{it->first.first, it->first.second, it->second.value});
  }
  return file;
}

SutherlandFile parse_sutherland(std::string_view text, std::optional<int> ell_hint) {
  std::istringstream in{std::string(text)};
  return parse_sutherland(in, ell_hint);
}

std::optional<int> ell_from_filename(std::string_view path) {
  const auto slash = path.find_last_of("/\\");
  if (slash != std::string_view::npos) path.remove_prefix(slash + 1);
  if (const auto dot = path.find('.'); dot != std::string_view::npos) path = path.substr(0, dot);
  std::size_t end = path.size();
  while (end > 0 && !std::isdigit(static_cast<unsigned char>(path[end - 1]))) --end;
  std::size_t begin = end;
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(path[begin - 1]))) --begin;
  if (begin == end) return std::nullopt;
  int v = 0;
  std::from_chars(path.data() + begin, path.data() + end, v);
  if (v < 1) return std::nullopt;
  return v;
}

ModularPolynomial to_polynomial(const SutherlandFile& file) {
  ModularPolynomial poly(file.ell);
  for (const auto& e : file.entries) {
    if (e.m == file.ell + 1 && e.n == 0) {
      if (e.value != 1) throw FormatError("monic entry [" + std::to_string(e.m) + ",0] must be 1");
      continue;
    }
    if (e.m > file.ell) {
      throw FormatError("entry [" + std::to_string(e.m) + "," + std::to_string(e.n) + "] exceeds ell = " +
                        std::to_string(file.ell));
    }
    if (e.m == file.ell && e.n == file.ell && e.value != -1) {
      throw FormatError("a_{ell,ell} must be -1");
    }
    poly.set(e.m, e.n, e.value);
  }
  return poly;
}

std::string write_sutherland(const ModularPolynomial& poly) {
  std::string out = "[" + std::to_string(poly.ell() + 1) + ",0] 1\n";
  for (int m = poly.ell(); m >= 0; --m) {
    for (int n = m; n >= 0; --n) {
      const BigInt& a = poly.at(m, n);
      if (sgn(a) == 0) continue;
      out += "[" + std::to_string(m) + "," + std::to_string(n) + "] " + to_decimal(a) + "\n";
    }
  }
  return out;
}

}  // namespace modpoly
