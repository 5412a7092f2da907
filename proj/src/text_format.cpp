#include "majorana/text_format.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace majorana {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
}

double parse_double(const std::string& s, std::size_t& pos) {
  std::size_t used = 0;
  double v = std::stod(s.substr(pos), &used);
  pos += used;
  return v;
}

}  // namespace

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = "(" + format_double(z.real());
  if (!std::signbit(z.imag())) out += "+";
  out += format_double(z.imag()) + "i)";
  return out;
}

std::string render_operator(const MajoranaOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : op.sorted_terms()) {
    if (!first) out += " + ";
    first = false;
    out += format_complex(c);
    out += " * ";
    if (m == 0) {
      out += "1";
    } else {
      for (int s : sites_of(m)) out += "c[" + std::to_string(s) + "]";
    }
  }
  return out;
}

MajoranaOperator parse_operator(const std::string& text) {
  MajoranaOperator op;
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (text.compare(pos, 1, "0") == 0 && pos + 1 >= text.size()) return op;
  while (pos < text.size()) {
    skip_ws(text, pos);
    Complex coeff;
    if (text[pos] == '(') {
      ++pos;
      double re = parse_double(text, pos);
      skip_ws(text, pos);
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        double im = parse_double(text, pos);
        if (pos >= text.size() || text[pos] != 'i')
          throw std::invalid_argument("parse_operator: expected 'i' in complex coefficient");
        ++pos;
        coeff = Complex(re, im);
      } else {
        coeff = Complex(re, 0.0);
      }
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("parse_operator: expected ')'");
      ++pos;
    } else {
      coeff = Complex(parse_double(text, pos), 0.0);
    }
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '*')
      throw std::invalid_argument("parse_operator: expected '*'");
    ++pos;
    skip_ws(text, pos);
    SiteMask m = 0;
    if (pos < text.size() && text[pos] == '1' &&
        (pos + 1 >= text.size() || text[pos + 1] != '[')) {
      ++pos;
    } else {
      while (pos < text.size() && text[pos] == 'c') {
        ++pos;
        if (pos >= text.size() || text[pos] != '[')
          throw std::invalid_argument("parse_operator: expected '[' after 'c'");
        ++pos;
        std::size_t close = text.find(']', pos);
        if (close == std::string::npos)
          throw std::invalid_argument("parse_operator: missing ']'");
        int site = std::stoi(text.substr(pos, close - pos));
        if (site < 1 || site > kMaxSites)
          throw std::invalid_argument("parse_operator: site out of range");
        m |= SiteMask{1} << (site - 1);
        pos = close + 1;
      }
    }
    op.add_term(m, coeff);
    skip_ws(text, pos);
    if (pos < text.size()) {
      if (text[pos] != '+')
        throw std::invalid_argument("parse_operator: expected '+' between terms");
      ++pos;
    }
  }
  return op;
}

}  // namespace majorana
