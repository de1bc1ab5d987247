#include "superdim/verify.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "superdim/superdim.hpp"
#include "superdim/weight_syntax.hpp"

namespace superdim {

int SuiteResult::failures() const {
  int f = 0;
  for (const auto& c : cases)
    if (!c.pass) ++f;
  return f;
}

namespace {

// weakly decreasing tuples over [-bound, bound]
void monotone_tuples(int len, int bound, std::vector<Wvec>& out) {
  Wvec cur(len);
  auto rec = [&](auto&& self, int k, std::int64_t hi) -> void {
    if (k == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = hi; v >= -bound; --v) {
      cur[k] = v;
      self(self, k + 1, v);
    }
  };
  if (len == 0)
    out.push_back({});
  else
    rec(rec, 0, bound);
}

std::vector<std::pair<int, int>> effective_shapes(const VerifyOptions& opts,
                                                  std::vector<std::pair<int, int>> fallback) {
  if (!opts.shapes.empty()) return opts.shapes;
  if (opts.max_m > 0) {
    int cap_n = opts.max_n > 0 ? opts.max_n : opts.max_m;
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= opts.max_m; ++m)
      for (int n = 1; n <= std::min(m, cap_n); ++n) out.emplace_back(m, n);
    return out;
  }
  return fallback;
}

bool weyl_too_large(int m, int n, std::int64_t guard) {
  BigInt size = factorial(m) * factorial(n);
  return size > guard;
}

// filesystem-safe name: commas become dashes, the bar an underscore, and
// minus signs an 'm' so they cannot collide with the comma replacement
std::string weight_slug(const SuperWeight& w) {
  std::string out;
  for (char ch : format_weight(w)) {
    switch (ch) {
      case ',': out += '-'; break;
      case '|': out += '_'; break;
      case '-': out += 'm'; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::vector<SuperWeight> enumerate_dominant_weights(int m, int n, int bound) {
  std::vector<Wvec> cs, ds_desc;
  monotone_tuples(m, bound, cs);
  monotone_tuples(n, bound, ds_desc);
  std::vector<SuperWeight> out;
  out.reserve(cs.size() * ds_desc.size());
  for (const auto& c : cs)
    for (const auto& d0 : ds_desc) {
      Wvec d(d0.rbegin(), d0.rend());  // weakly increasing
      out.emplace_back(m, n, c, d);
    }
  return out;
}

std::vector<Partition> enumerate_hook_partitions(int m, int n, std::int64_t max_cells) {
  std::vector<Partition> out;
  out.emplace_back(std::vector<std::int64_t>{});
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t cap) -> void {
    for (std::int64_t p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      Partition lam(cur);
      if (fits_hook(lam, m, n)) {
        out.push_back(lam);
        self(self, rest - p, p);
      }
      cur.pop_back();
    }
  };
  rec(rec, max_cells, max_cells);
  return out;
}

BigInt evaluate_with_retry(
    const std::function<FormalCharacter(const SuperWeight&, std::int64_t)>& build,
    const SuperWeight& w, std::int64_t cutoff, int margin, const std::string& dump_path) {
  std::int64_t c = cutoff > 0 ? cutoff : default_cutoff(w);
  for (int attempt = 0;; ++attempt) {
    FormalCharacter f = build(w, c);
    try {
      BigInt v = evaluate_at_zero(f, margin);
      if (!dump_path.empty()) {
        std::ofstream os(dump_path);
        if (!os) throw ParseError("cannot open dump file " + dump_path);
        os << character_to_json(f);
      }
      return v;
    } catch (const ShellNotCleanError&) {
      if (attempt >= 3) throw;
      c *= 2;
    }
  }
}

SuiteResult run_formula_suite(const VerifyOptions& opts) {
  SuiteResult res{"formula", {}};
  int cap_m = opts.max_m > 0 ? opts.max_m : 6;
  int cap_n = opts.max_n > 0 ? opts.max_n : 6;
  auto check = [&](const std::string& name, const SuperWeight& w, const BigInt& expect) {
    BigInt got = superdimension(w).sdim_abs;
    std::ostringstream d;
    d << "sdim(" << format_weight(w) << ") = " << got << ", expected " << expect;
    res.cases.push_back({name, got == expect, d.str()});
  };
  for (int m = 1; m <= cap_m; ++m)
    for (int n = 1; n <= std::min(m, cap_n); ++n) {
      std::string shape = std::to_string(m) + "|" + std::to_string(n);
      check("trivial " + shape, SuperWeight(m, n, Wvec(m, 0), Wvec(n, 0)), 1);

      Wvec c(m, 0);
      c[0] = 1;
      check("natural " + shape, SuperWeight(m, n, c, Wvec(n, 0)), m == n ? 0 : m - n);

      Wvec d(n, 0);
      d[n - 1] = 1;
      BigInt adj;
      if (m == n)
        adj = (m == 1) ? 1 : 2;  // square case; see the README note on gl(1|1)
      else if (m == n + 1)
        adj = 0;
      else
        adj = BigInt(m - n) * (m - n) - 1;
      check("adjoint " + shape, SuperWeight(m, n, c, d), adj);
    }
  return res;
}

SuiteResult run_lemma2_suite(const VerifyOptions& opts) {
  SuiteResult res{"lemma2", {}};
  for (int r = 1; r <= opts.max_r; ++r) {
    BigInt s = lemma2_sum(r);
    std::ostringstream d;
    d << "alternating multinomial sum over compositions of " << r << " = " << s;
    res.cases.push_back({"lemma2 r=" + std::to_string(r), s == 1, d.str()});
  }
  return res;
}

SuiteResult run_engine_suite(const VerifyOptions& opts) {
  SuiteResult res{"engine", {}};
  auto shapes = effective_shapes(opts, {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}});
  for (auto [m, n] : shapes) {
    if (weyl_too_large(m, n, opts.weyl_guard)) {
      res.cases.push_back({"shape " + std::to_string(m) + "|" + std::to_string(n), false,
                           "Weyl group order m! n! exceeds the guard of " +
                               std::to_string(opts.weyl_guard)});
      continue;
    }
    for (const auto& w : enumerate_dominant_weights(m, n, opts.entry_bound)) {
      auto rep = superdimension(w);
      std::string name = "engine " + format_weight(w);
      std::string dump;
      if (!opts.dump_dir.empty()) dump = opts.dump_dir + "/sch_" + weight_slug(w) + ".json";
      try {
        BigInt ev = evaluate_with_retry(
            [](const SuperWeight& x, std::int64_t c) { return supercharacter(x, c); }, w,
            opts.cutoff, opts.margin, dump);
        BigInt ab = ev < 0 ? BigInt(-ev) : ev;
        bool pass = (ab == rep.sdim_abs) && ((ev != 0) == rep.maximal);
        std::ostringstream d;
        d << "|sch(0)| = " << ab << ", formula = " << rep.sdim_abs << ", atypicality "
          << rep.atypicality << "/" << n;
        res.cases.push_back({name, pass, d.str()});
      } catch (const std::exception& e) {
        res.cases.push_back({name, false, std::string("error: ") + e.what()});
      }
    }
  }
  return res;
}

SuiteResult run_tableaux_suite(const VerifyOptions& opts) {
  SuiteResult res{"tableaux", {}};
  auto shapes = effective_shapes(opts, {{1, 1}, {2, 1}, {2, 2}, {3, 1}});
  for (auto [m, n] : shapes) {
    if (weyl_too_large(m, n, opts.weyl_guard)) {
      res.cases.push_back({"shape " + std::to_string(m) + "|" + std::to_string(n), false,
                           "Weyl group order m! n! exceeds the guard of " +
                               std::to_string(opts.weyl_guard)});
      continue;
    }
    for (const auto& lam : enumerate_hook_partitions(m, n, opts.max_cells)) {
      std::ostringstream nm;
      nm << "hook (";
      for (std::size_t k = 0; k < lam.parts.size(); ++k)
        nm << (k ? "," : "") << lam.parts[k];
      nm << ") " << m << "|" << n;
      try {
        SuperWeight w = covariant_weight(lam, m, n);
        auto counts = count_hook_tableaux(lam, m, n, opts.max_cells);
        auto rep = superdimension(w);
        std::string dump_ch, dump_sch;
        if (!opts.dump_dir.empty()) {
          dump_ch = opts.dump_dir + "/ch_" + weight_slug(w) + ".json";
          dump_sch = opts.dump_dir + "/sch_" + weight_slug(w) + ".json";
        }
        BigInt dim = evaluate_with_retry(
            [](const SuperWeight& x, std::int64_t c) { return su_zhang_character(x, c); }, w,
            opts.cutoff, opts.margin, dump_ch);
        BigInt sdim = evaluate_with_retry(
            [](const SuperWeight& x, std::int64_t c) { return supercharacter(x, c); }, w,
            opts.cutoff, opts.margin, dump_sch);
        BigInt sab = sdim < 0 ? BigInt(-sdim) : sdim;
        BigInt cab = counts.signed_total < 0 ? BigInt(-counts.signed_total)
                                             : counts.signed_total;
        bool pass = counts.total == dim && cab == sab && sab == rep.sdim_abs;
        std::ostringstream d;
        d << "count " << counts.total << " vs ch(0) " << dim << "; |signed| " << cab
          << " vs |sch(0)| " << sab << " vs formula " << rep.sdim_abs;
        res.cases.push_back({nm.str(), pass, d.str()});
      } catch (const std::exception& e) {
        res.cases.push_back({nm.str(), false, std::string("error: ") + e.what()});
      }
    }
  }
  return res;
}

bool print_suite(std::ostream& os, const SuiteResult& suite) {
  for (const auto& c : suite.cases)
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
  os << "suite " << suite.suite << ": " << (suite.cases.size() - suite.failures()) << "/"
     << suite.cases.size() << " passed\n";
  return suite.ok();
}

}  // namespace superdim
