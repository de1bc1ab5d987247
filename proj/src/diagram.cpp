#include "superdim/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace superdim {

WeightDiagram::Symbol WeightDiagram::at(std::int64_t pos) const {
  if (pos < lo || pos > hi) return Symbol::Circ;
  return symbols[pos - lo];
}

WeightDiagram build_diagram(const RhoShiftedWeight& rs) {
  WeightDiagram d;
  std::int64_t lo = rs.a.back(), hi = rs.a.front();
  if (rs.n > 0) {
    lo = std::min(lo, rs.b.front());
    hi = std::max(hi, rs.b.back());
  }
  d.lo = lo;
  d.hi = hi;
  d.symbols.assign(hi - lo + 1, WeightDiagram::Symbol::Circ);
  for (auto v : rs.a) d.symbols[v - lo] = WeightDiagram::Symbol::Gt;
  for (auto v : rs.b) {
    auto& s = d.symbols[v - lo];
    s = (s == WeightDiagram::Symbol::Gt) ? WeightDiagram::Symbol::Cross
                                         : WeightDiagram::Symbol::Lt;
  }
  for (std::int64_t p = lo; p <= hi; ++p)
    if (d.symbols[p - lo] == WeightDiagram::Symbol::Cross) d.cross_positions.push_back(p);

  // Crosses left to right are the gamma pairs ordered by increasing j.
  auto g = gamma_set(rs);
  if (g.size() != d.r()) throw InternalError("cross count disagrees with gamma set");
  for (int k = 0; k < g.size(); ++k)
    if (rs.b[g.pairs[k].j - 1] != d.cross_positions[k])
      throw InternalError("cross order disagrees with gamma order");
  return d;
}

namespace {

void check_cross_index(const WeightDiagram& d, int k) {
  if (k < 1 || k > d.r())
    throw IndexOutOfRangeError("cross index " + std::to_string(k) + " out of range 1.." +
                               std::to_string(d.r()));
}

// circles and crosses strictly between cross k and cross i (1-based)
std::pair<int, int> between(const WeightDiagram& d, int k, int i) {
  int circ = 0, cross = 0;
  for (std::int64_t p = d.cross_positions[k - 1] + 1; p < d.cross_positions[i - 1]; ++p) {
    auto s = d.at(p);
    if (s == WeightDiagram::Symbol::Circ) ++circ;
    if (s == WeightDiagram::Symbol::Cross) ++cross;
  }
  return {circ, cross};
}

}  // namespace

bool strongly_connected(const WeightDiagram& d, int k, int l) {
  check_cross_index(d, k);
  check_cross_index(d, l);
  if (k > l) throw IndexOutOfRangeError("strongly_connected needs k <= l");
  for (int i = k + 1; i <= l; ++i) {
    auto [circ, cross] = between(d, k, i);
    if (circ > cross) return false;
  }
  return true;
}

int max_s(const WeightDiagram& d, int s) {
  check_cross_index(d, s);
  for (int t = d.r(); t > s; --t)
    if (strongly_connected(d, s, t)) return t;
  return s;
}

BigInt s_lambda(const WeightDiagram& d) {
  int r = d.r();
  BigInt num = factorial(r);
  for (int s = 1; s <= r; ++s) {
    BigInt q = max_s(d, s) - s + 1;
    if (num % q != 0) throw InternalError("s_lambda product does not divide r!");
    num /= q;
  }
  return num;
}

std::vector<std::vector<int>> enumerate_S_Lambda(const WeightDiagram& d, int bound) {
  int r = d.r();
  if (r > bound)
    throw BoundExceededError("S_Lambda enumeration capped at r <= " + std::to_string(bound) +
                             ", got r = " + std::to_string(r));
  std::vector<std::vector<bool>> conn(r + 1, std::vector<bool>(r + 1, false));
  for (int k = 1; k <= r; ++k)
    for (int l = k + 1; l <= r; ++l) conn[k][l] = strongly_connected(d, k, l);

  std::vector<int> sigma(r);
  for (int i = 0; i < r; ++i) sigma[i] = i + 1;
  std::vector<int> pos(r + 1);
  std::vector<std::vector<int>> out;
  do {
    for (int i = 0; i < r; ++i) pos[sigma[i]] = i;
    bool ok = true;
    for (int s = 1; s <= r && ok; ++s)
      for (int t = s + 1; t <= r && ok; ++t)
        if (conn[s][t] && pos[s] > pos[t]) ok = false;
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::string render(const WeightDiagram& d) {
  std::ostringstream row, lab;
  for (std::int64_t p = d.lo - 1; p <= d.hi + 1; ++p) {
    std::string label = std::to_string(p);
    std::string sym(1, static_cast<char>(d.at(p)));
    if (p > d.lo - 1) {
      row << ' ';
      lab << ' ';
    }
    row << std::string(label.size() - 1, ' ') << sym;
    lab << label;
  }
  return row.str() + "\n" + lab.str() + "\n";
}

}  // namespace superdim
