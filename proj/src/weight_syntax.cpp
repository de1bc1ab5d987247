#include "superdim/weight_syntax.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace superdim {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

Wvec parse_side(const std::string& side, const char* which) {
  Wvec out;
  std::string body = strip(side);
  if (body.empty()) return out;
  for (const auto& tok : split(body, ',')) {
    std::string t = strip(tok);
    if (t.empty()) throw ParseError(std::string("empty entry on the ") + which + " side");
    std::size_t used = 0;
    long long v;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string("not an integer on the ") + which + " side: '" + t + "'");
    }
    if (used != t.size())
      throw ParseError(std::string("trailing characters on the ") + which + " side: '" + t +
                       "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

SuperWeight parse_weight(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw ParseError("weight must contain a '|' separating the two sides");
  if (text.find('|', bar + 1) != std::string::npos)
    throw ParseError("weight must contain exactly one '|'");
  Wvec c = parse_side(text.substr(0, bar), "left");
  Wvec d = parse_side(text.substr(bar + 1), "right");
  if (c.empty()) throw ParseError("left side must contain at least one entry");
  return SuperWeight(static_cast<int>(c.size()), static_cast<int>(d.size()), c, d);
}

std::string format_weight(const SuperWeight& w) {
  std::ostringstream os;
  for (int i = 0; i < w.m; ++i) os << (i ? "," : "") << w.c[i];
  os << "|";
  for (int j = 0; j < w.n; ++j) os << (j ? "," : "") << w.d[j];
  return os.str();
}

}  // namespace superdim
