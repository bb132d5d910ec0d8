#pragma once

// Text formats. A matrix file is a header "R C" followed by R rows of C
// integers. A vector list file has the same shape; weight files may use p/q
// rationals. Blank lines and lines starting with '#' are ignored. Parse
// errors carry the source name and line number.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/vector.hpp"

namespace toric::io {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string s;
  std::size_t no = 0;
  while (std::getline(in, s)) {
    ++no;
    std::size_t start = s.find_first_not_of(" \t\r");
    if (start == std::string::npos || s[start] == '#') continue;
    std::istringstream ls(s);
    Line l{no, {}};
    std::string t;
    while (ls >> t) l.tokens.push_back(t);
    out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] inline void parse_error(const std::string& src, std::size_t line, const std::string& msg) {
  fail(ErrorKind::Parse, src + ":" + std::to_string(line) + ": " + msg);
}

inline bool is_integer_token(const std::string& t) {
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

inline Integer parse_integer(const std::string& t, const std::string& src, std::size_t line) {
  if (t.empty() || !is_integer_token(t)) parse_error(src, line, "expected an integer, got '" + t + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

inline Rational parse_rational(const std::string& t, const std::string& src, std::size_t line) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, src, line));
  Integer p = parse_integer(t.substr(0, slash), src, line);
  std::string qs = t.substr(slash + 1);
  if (qs.empty() || !is_integer_token(qs) || qs[0] == '-') parse_error(src, line, "bad denominator in '" + t + "'");
  Integer q(qs[0] == '+' ? qs.substr(1) : qs);
  if (q == 0) parse_error(src, line, "zero denominator in '" + t + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::size_t parse_count(const std::string& t, const std::string& src, std::size_t line) {
  Integer z = parse_integer(t, src, line);
  if (z < 0 || !z.fits_ulong_p()) parse_error(src, line, "bad dimension '" + t + "'");
  return z.get_ui();
}

template <class T, class F>
std::vector<std::vector<T>> parse_table(std::istream& in, const std::string& src, std::size_t& cols, F parse) {
  std::vector<Line> lines = tokenize(in);
  if (lines.empty()) parse_error(src, 1, "missing header 'rows cols'");
  const Line& h = lines[0];
  if (h.tokens.size() != 2) parse_error(src, h.number, "header must be 'rows cols'");
  std::size_t rows = parse_count(h.tokens[0], src, h.number);
  cols = parse_count(h.tokens[1], src, h.number);
  if (lines.size() - 1 != rows)
    parse_error(src, lines.back().number,
                "expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<T>> out;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Line& l = lines[r];
    if (l.tokens.size() != cols)
      parse_error(src, l.number,
                  "expected " + std::to_string(cols) + " entries, found " + std::to_string(l.tokens.size()));
    std::vector<T> row;
    for (const auto& t : l.tokens) row.push_back(parse(t, src, l.number));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

inline IntMatrix read_matrix(std::istream& in, const std::string& src = "<input>") {
  std::size_t cols = 0;
  auto rows = detail::parse_table<Integer>(in, src, cols, detail::parse_integer);
  if (rows.empty() || cols == 0) fail(ErrorKind::Parse, src + ": matrix must have at least one row and column");
  IntMatrix M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
  return M;
}

inline void write_matrix(std::ostream& out, const IntMatrix& M) {
  out << M.rows() << ' ' << M.cols() << '\n';
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) out << (j ? " " : "") << M(i, j).get_str();
    out << '\n';
  }
}

struct VectorList {
  std::size_t cols = 0;
  std::vector<IntVec> rows;

  friend bool operator==(const VectorList&, const VectorList&) = default;
};

inline VectorList read_vector_list(std::istream& in, const std::string& src = "<input>") {
  VectorList v;
  auto rows = detail::parse_table<Int>(in, src, v.cols, [](const std::string& t, const std::string& s, std::size_t l) {
    Integer z = detail::parse_integer(t, s, l);
    if (!z.fits_slong_p()) detail::parse_error(s, l, "entry '" + t + "' out of range");
    return static_cast<Int>(z.get_si());
  });
  v.rows = std::move(rows);
  return v;
}

inline void write_vector_list(std::ostream& out, const VectorList& v) {
  out << v.rows.size() << ' ' << v.cols << '\n';
  for (const auto& r : v.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  }
}

inline void write_vector_list(std::ostream& out, std::size_t cols, const std::vector<IntVec>& rows) {
  write_vector_list(out, VectorList{cols, rows});
}

/// Weight file: header "1 N" and one row, entries integers or p/q.
inline RationalVector read_weight(std::istream& in, const std::string& src = "<input>") {
  std::size_t cols = 0;
  auto rows = detail::parse_table<Rational>(in, src, cols, detail::parse_rational);
  if (rows.size() != 1) fail(ErrorKind::Parse, src + ": weight file must have exactly one row");
  return rows[0];
}

inline std::string rational_string(Rational q) {
  q.canonicalize();
  return q.get_str();
}

inline void write_weight(std::ostream& out, const RationalVector& w) {
  out << "1 " << w.size() << '\n';
  for (std::size_t j = 0; j < w.size(); ++j) out << (j ? " " : "") << rational_string(w[j]);
  out << '\n';
}

/// Comma or whitespace separated entries, e.g. "1,0,3/2".
inline RationalVector parse_rational_list(const std::string& s, const std::string& src = "<argument>") {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  RationalVector out;
  std::string tok;
  while (in >> tok) out.push_back(detail::parse_rational(tok, src, 1));
  if (out.empty()) fail(ErrorKind::Parse, src + ": empty vector");
  return out;
}

inline IntVec parse_integer_list(const std::string& s, const std::string& src = "<argument>") {
  IntVec out;
  for (const auto& q : parse_rational_list(s, src)) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      fail(ErrorKind::Parse, src + ": expected integers, got '" + q.get_str() + "'");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

}  // namespace toric::io
