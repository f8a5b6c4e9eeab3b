#include "riordan/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace riordan {

ParseError::ParseError(const std::string& message, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + message),
      line(line_),
      column(column_) {}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<Rational> parse_row(const std::string& line, int line_no, char sep) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= line.size()) {
    size_t end = sep == ',' ? line.find(',', pos) : std::string::npos;
    std::string token;
    if (sep == ',') {
      token = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    } else {
      // whitespace separated
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      size_t stop = pos;
      while (stop < line.size() && !std::isspace(static_cast<unsigned char>(line[stop]))) ++stop;
      token = line.substr(pos, stop - pos);
      end = stop;
    }
    try {
      out.push_back(parse_rational(token));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, static_cast<int>(pos) + 1);
    }
    if (end == std::string::npos) break;
    pos = end + (sep == ',' ? 1 : 0);
    if (sep != ',' && pos >= line.size()) break;
  }
  if (out.empty()) throw ParseError("empty row", line_no, 1);
  return out;
}

}  // namespace

Series parse_series(std::string_view text) {
  auto lines = split_lines(text);
  std::string joined;
  for (const auto& l : lines)
    if (!blank(l)) joined += (joined.empty() ? "" : ",") + l;
  if (joined.empty()) throw ParseError("empty series", 1, 1);
  return Series(parse_row(joined, 1, ','));
}

std::string format_series(const Series& s) {
  std::string out;
  for (int j = 0; j <= s.valid_to(); ++j) {
    if (j) out += ", ";
    out += to_string(s[j]);
  }
  return out;
}

RiordanPair parse_pair(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<Series> g, f;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (blank(line)) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'g:' or 'f:' label", static_cast<int>(i) + 1, 1);
    std::string label = line.substr(0, colon);
    label.erase(label.find_last_not_of(" \t") + 1);
    std::string rest = line.substr(colon + 1);
    if (label == "g")
      g = Series(parse_row(rest, static_cast<int>(i) + 1, ','));
    else if (label == "f")
      f = Series(parse_row(rest, static_cast<int>(i) + 1, ','));
    else
      throw ParseError("unknown label '" + label + "'", static_cast<int>(i) + 1, 1);
  }
  if (!g) throw ParseError("missing g: line", 1, 1);
  if (!f) throw ParseError("missing f: line", 1, 1);
  return make_pair(std::move(*g), std::move(*f));
}

std::string format_pair(const RiordanPair& p) {
  return "g: " + format_series(p.g) + "\nf: " + format_series(p.f) + "\n";
}

Triangle parse_triangle(std::string_view text) {
  auto lines = split_lines(text);
  Triangle t;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto row = parse_row(lines[i], static_cast<int>(i) + 1, ' ');
    if (row.size() != t.rows.size() + 1)
      throw ParseError("ragged triangle: row " + std::to_string(t.rows.size()) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(t.rows.size() + 1),
                       static_cast<int>(i) + 1, 1);
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw ParseError("empty triangle", 1, 1);
  return t;
}

std::string format_triangle(const Triangle& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

ParsedInput parse_input(std::string_view text) {
  auto lines = split_lines(text);
  int nonblank = 0;
  bool labeled = false;
  for (const auto& l : lines) {
    if (blank(l)) continue;
    ++nonblank;
    if (l.find(':') != std::string::npos) labeled = true;
  }
  if (labeled) return parse_pair(text);
  if (nonblank > 1) return parse_triangle(text);
  return parse_series(text);
}

std::string format_verdict(const BSeqVerdict& v) {
  std::ostringstream out;
  out << "kind: " << (v.kind == BKind::TypeI ? "type-I" : "type-II") << "\n";
  if (v.exists) {
    out << "verdict: EXISTS to order " << v.exists_to_order << "\n";
    if (v.b_seq) out << "b: " << format_series(*v.b_seq) << "\n";
  } else {
    out << "verdict: NO at index " << v.witness_index << "\n";
  }
  return out.str();
}

std::string format_membership(const MembershipResult& r) {
  if (r.member) return "MEMBER to order " + std::to_string(r.checked_to) + "\n";
  return "NOT MEMBER, witness index " + std::to_string(r.witness) + "\n";
}

}  // namespace riordan
