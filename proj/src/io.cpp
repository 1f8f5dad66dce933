#include "bitrade/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace bitrade {

namespace {

// Walks one line, tracking a 1-based column for error messages.
class LineCursor {
 public:
  LineCursor(std::string_view line, int line_number)
      : line_(line), line_number_(line_number) {}

  void skip_space() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < line_.size() && line_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() &&
           !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
           line_[pos_] != '(') {
      ++pos_;
    }
    return line_.substr(start, pos_ - start);
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* begin = line_.data() + pos_;
    const char* end = line_.data() + line_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  int column() const { return static_cast<int>(pos_) + 1; }
  int line_number() const { return line_number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_number_, column(), what);
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
  int line_number_;
};

std::vector<std::pair<int, std::string_view>> nonblank_lines(
    std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      lines.emplace_back(number, line);
    }
  }
  return lines;
}

}  // namespace

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (int c = 0; c < p.num_cycles(); ++c) {
    const auto cycle = p.cycle(c);
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::string format_tau(const TauTriple& t) {
  std::string out = "size " + std::to_string(t.size()) + "\n";
  for (int j = 1; j <= 3; ++j) {
    out += "t" + std::to_string(j) + " " + format_cycles(t.tau(j)) + "\n";
  }
  return out;
}

TauTriple parse_tau(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  LineCursor head(lines[0].second, lines[0].first);
  if (head.word() != "size") head.fail("expected 'size N'");
  const int n = head.integer();
  if (n < 0) head.fail("size must be non-negative");
  if (!head.at_end()) head.fail("trailing characters");

  std::array<std::optional<Permutation>, 3> taus;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    LineCursor cur(lines[li].second, lines[li].first);
    const int name_column = cur.column();
    const std::string_view name = cur.word();
    int j = 0;
    if (name == "t1") j = 1;
    if (name == "t2") j = 2;
    if (name == "t3") j = 3;
    if (j == 0) {
      throw ParseError(cur.line_number(), name_column,
                       "expected t1, t2 or t3");
    }
    if (taus[j - 1]) {
      throw ParseError(cur.line_number(), name_column,
                       "duplicate line for t" + std::to_string(j));
    }
    std::vector<Point> images(n, -1);
    while (!cur.at_end()) {
      cur.expect('(');
      std::vector<Point> cycle;
      while (!cur.peek(')')) {
        if (cur.at_end()) cur.fail("unterminated cycle");
        const int column = cur.column();
        const int p = cur.integer();
        if (p < 0 || p >= n) {
          throw ParseError(cur.line_number(), column,
                           "point " + std::to_string(p) + " out of range");
        }
        for (Point q : cycle) {
          if (q == p) {
            throw ParseError(cur.line_number(), column,
                             "point " + std::to_string(p) + " repeated");
          }
        }
        if (images[p] != -1) {
          throw ParseError(cur.line_number(), column,
                           "point " + std::to_string(p) + " repeated");
        }
        cycle.push_back(p);
      }
      cur.expect(')');
      if (cycle.empty()) cur.fail("empty cycle");
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    }
    for (Point p = 0; p < n; ++p) {
      if (images[p] == -1) images[p] = p;
    }
    taus[j - 1] = Permutation(std::move(images));
  }
  for (int j = 1; j <= 3; ++j) {
    if (!taus[j - 1]) {
      const int last = lines.back().first;
      throw ParseError(last, 1, "missing line for t" + std::to_string(j));
    }
  }
  return TauTriple(std::move(*taus[0]), std::move(*taus[1]),
                   std::move(*taus[2]));
}

std::string format_trade(const TradePair& p) {
  std::ostringstream out;
  for (const Entry& e : p.entries_a) {
    out << "A " << e.row << ' ' << e.column << ' ' << e.symbol << '\n';
  }
  for (const Entry& e : p.entries_b) {
    out << "B " << e.row << ' ' << e.column << ' ' << e.symbol << '\n';
  }
  return out.str();
}

TradePair parse_trade(std::string_view text) {
  TradePair pair;
  for (const auto& [number, line] : nonblank_lines(text)) {
    LineCursor cur(line, number);
    const int tag_column = cur.column();
    const std::string_view tag = cur.word();
    if (tag != "A" && tag != "B") {
      throw ParseError(number, tag_column, "expected 'A' or 'B'");
    }
    Entry e;
    e.row = cur.integer();
    e.column = cur.integer();
    e.symbol = cur.integer();
    if (e.row < 0 || e.column < 0 || e.symbol < 0) {
      throw ParseError(number, tag_column, "negative coordinate");
    }
    if (!cur.at_end()) cur.fail("trailing characters");
    auto& target = tag == "A" ? pair.entries_a : pair.entries_b;
    if (!target.insert(e).second) {
      throw ParseError(number, tag_column, "duplicate entry");
    }
  }
  return pair;
}

BitradeText parse_bitrade(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  LineCursor cur(lines[0].second, lines[0].first);
  const std::string_view first = cur.word();
  if (first == "size") return parse_tau(text);
  if (first == "A" || first == "B") return parse_trade(text);
  throw ParseError(lines[0].first, 1,
                   "unrecognised input: expected 'size' or 'A'");
}

}  // namespace bitrade
