// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected closed forms are written out here independently of the
// library's own helpers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "powerspec/powerspec.hpp"

using namespace powerspec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first witness
    ok = false;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

FactoredCharPoly gq_closed_form(unsigned alpha) {
  const std::int64_t a = std::int64_t{1} << alpha;  // 2^alpha
  FactoredCharPoly p;
  p.add_root(0, 1);
  p.add_root(2, static_cast<std::size_t>(a / 2));
  p.add_root(4, static_cast<std::size_t>(a / 2));
  p.add_root(a, static_cast<std::size_t>(a - 3));
  p.add_root(2 * a, 2);
  return p;
}

// ---- AC10 expression generator -------------------------------------------

struct Expr {
  Graph graph;
  FactoredCharPoly poly;
  std::string text;
};

Expr random_expr(std::mt19937_64& rng, std::size_t budget, int depth) {
  std::uniform_int_distribution<int> kind(0, 2);
  const int k = depth >= 4 || budget < 2 ? 0 : kind(rng);
  if (k == 0) {
    std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(budget, 12));
    const auto n = size(rng);
    return {complete_graph(n), FactoredCharPoly::complete(n), "K" + std::to_string(n)};
  }
  std::uniform_int_distribution<std::size_t> split(1, budget - 1);
  const auto left_budget = split(rng);
  Expr a = random_expr(rng, left_budget, depth + 1);
  Expr b = random_expr(rng, budget - a.graph.vertex_count(), depth + 1);
  if (k == 1)
    return {disjoint_union(a.graph, b.graph), union_charpoly({a.poly, b.poly}), "(" + a.text + " + " + b.text + ")"};
  return {graph_join(a.graph, b.graph),
          join_charpoly(a.poly, a.graph.vertex_count(), b.poly, b.graph.vertex_count()),
          "(" + a.text + " v " + b.text + ")"};
}

// ---- criteria --------------------------------------------------------------

Outcome ac1() {
  Outcome o;
  const auto g = direct_product(cyclic_group(9), cyclic_group(3));
  const FactoredCharPoly expected{{0, 1}, {1, 3}, {3, 5}, {9, 15}, {21, 2}, {27, 1}};
  const auto tree = tree_charpoly(decompose(g));
  const auto direct = spectrum(power_graph(g));
  if (tree != expected) o.fail("tree charpoly " + tree.to_string());
  if (!direct.is_exact() || direct.exact != expected) o.fail("direct spectrum " + direct.exact.to_string());
  return o;
}

Outcome ac2() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t n = 2; n <= 1024; ++n) {
    if (!is_prime_power(n)) continue;
    const auto s = spectrum(power_graph(cyclic_group(n)));
    const FactoredCharPoly expected{{0, 1}, {static_cast<std::int64_t>(n), n - 1}};
    if (!s.is_exact() || s.exact != expected) o.fail("n = " + std::to_string(n) + ": " + s.exact.to_string());
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " prime powers";
  return o;
}

Outcome ac3() {
  Outcome o;
  for (unsigned alpha = 2; alpha <= 6; ++alpha) {
    const auto s = spectrum(power_graph(generalized_quaternion(alpha)));
    const auto expected = gq_closed_form(alpha);
    if (!s.is_exact() || s.exact != expected)
      o.fail("alpha = " + std::to_string(alpha) + ": " + s.exact.to_string() + " != " + expected.to_string());
  }
  return o;
}

Outcome suite_outcome(const std::vector<ClaimReport>& reports, std::size_t expected_count) {
  Outcome o;
  if (reports.size() != expected_count)
    o.fail("expected " + std::to_string(expected_count) + " reports, got " + std::to_string(reports.size()));
  for (const auto& r : reports)
    if (!r.passed())
      o.fail(r.claim_id + " " + r.params.dump() + " " + to_string(r.verdict) + ": " + r.witness);
  if (o.ok) o.detail = std::to_string(reports.size()) + " reports pass";
  return o;
}

Outcome ac4() {
  SuiteOptions opt;
  opt.cyclic_max = 300;
  return suite_outcome(run_suite(opt, {"cyclic.algcon", "cyclic.radius_multiplicity", "cyclic.kappa_eq_algcon"}),
                       3 * 299);
}

Outcome ac5() {
  SuiteOptions opt;
  opt.dicyclic_max = 32;
  return suite_outcome(run_suite(opt, {"dicyclic.bundle"}), 31);
}

// Criteria 6 and 7 share the per-group spectra.
struct PGroupResults {
  Outcome integrality;
  Outcome oracle;
  std::size_t groups = 0;
};

const PGroupResults& pgroup_results() {
  static const PGroupResults results = [] {
    PGroupResults r;
    for (const auto& g : desk_pgroups(256)) {
      ++r.groups;
      const GroupStructure s(g);
      const Graph pg = power_graph(s);
      const auto spec = spectrum(pg);
      if (!spec.is_exact()) {
        r.integrality.fail(g.label() + " is not Laplacian integral");
        r.oracle.fail(g.label() + " has no exact spectrum to compare");
        continue;
      }
      for (const auto& f : classify_eigenvalues(s, spec)) {
        if (f.form == EigenvalueFormKind::Zero) continue;
        if (f.form == EigenvalueFormKind::Unclassified || !f.witness) {
          r.integrality.fail(g.label() + ": eigenvalue " + std::to_string(f.value) + " unclassified");
          continue;
        }
        const auto w = *f.witness;
        const auto value = f.form == EigenvalueFormKind::OrderOf ? s.order(w) : s.hat_up_set(w).size() + s.order(w);
        if (static_cast<std::int64_t>(value) != f.value)
          r.integrality.fail(g.label() + ": witness for " + std::to_string(f.value) + " evaluates to " +
                             std::to_string(value));
      }
      const auto tree = decompose(s);
      const auto poly = tree_charpoly(tree);
      if (poly != spec.exact) r.oracle.fail(g.label() + ": tree " + poly.to_string() + " != " + spec.exact.to_string());
      const Graph tg = tree_graph(tree);
      auto d1 = pg.degrees(), d2 = tg.degrees();
      std::sort(d1.begin(), d1.end());
      std::sort(d2.begin(), d2.end());
      if (d1 != d2) r.oracle.fail(g.label() + ": degree sequences differ");
      const auto ts = spectrum(tg);
      if (!ts.is_exact() || ts.exact != spec.exact) r.oracle.fail(g.label() + ": tree graph spectrum differs");
    }
    const auto count = std::to_string(r.groups) + " groups";
    if (r.integrality.ok) r.integrality.detail = count;
    if (r.oracle.ok) r.oracle.detail = count;
    return r;
  }();
  return results;
}

Outcome ac6() { return pgroup_results().integrality; }
Outcome ac7() { return pgroup_results().oracle; }

Outcome ac8() {
  Outcome o;
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto up = static_cast<std::uint64_t>(p);
    FactoredCharPoly expected;
    expected.add_root(0, 1);
    expected.add_root(1, up);
    expected.add_root(p, up * up - up - 2);  // (p+1)(p-2)
    expected.add_root(p * p, 1);
    const auto s = spectrum(power_graph(direct_product(cyclic_group(up), cyclic_group(up))));
    if (!s.is_exact() || s.exact != expected)
      o.fail("p = " + std::to_string(p) + ": " + s.exact.to_string() + " != " + expected.to_string());
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto scan = scan_conjecture(200);
  for (const auto& row : scan.rows)
    if (!row.agrees_strict()) {
      std::ostringstream w;
      w << "n = " << row.n << " algcon_integer=" << row.algcon_integer
        << " laplacian_integral=" << row.laplacian_integral << " predicate=" << row.predicate_strict;
      o.fail(w.str());
    }
  if (o.ok)
    o.detail = std::to_string(scan.rows.size()) + " rows; loose-reading failures: " +
               std::to_string(scan.failures_loose.size());
  return o;
}

Outcome ac10() {
  Outcome o;
  std::mt19937_64 rng(20241019);
  std::uniform_int_distribution<std::size_t> total(1, 100);
  for (int t = 0; t < 200; ++t) {
    const Expr e = random_expr(rng, total(rng), 0);
    const Graph& g = e.graph;
    const std::size_t n = g.vertex_count();
    const auto s = spectrum(g);
    const std::string tag = "case " + std::to_string(t) + " " + e.text + ": ";
    if (!s.is_exact() || s.exact != e.poly) {
      o.fail(tag + "calculus " + e.poly.to_string() + " != spectrum " + s.exact.to_string());
      continue;
    }
    if (complement_spectrum(complement_spectrum(s)).exact != s.exact) o.fail(tag + "complement twice differs");
    if (complement_spectrum(s).exact != spectrum(complement(g)).exact) o.fail(tag + "complement spectrum differs");
    if (s.exact.multiplicity(0) != components(g).size()) o.fail(tag + "zero multiplicity != components");
    if (integer_eigenvalue_multiplicity(g, 0) != components(g).size()) o.fail(tag + "nullity of L != components");
    const bool top_is_n = s.exact.largest_root() == static_cast<std::int64_t>(n);
    if (top_is_n == is_connected(complement(g))) o.fail(tag + "lambda_1 = n does not match complement connectivity");
  }
  if (o.ok) o.detail = "200 expressions";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "Z_9 x Z_3 worked example, tree and direct spectrum", 1.0, ac1},
      {"AC2", "prime-power cyclic spectra, n <= 1024", 60.0, ac2},
      {"AC3", "generalized quaternion closed form, alpha = 2..6", 60.0, ac3},
      {"AC4", "cyclic algcon / radius multiplicity / kappa suites, n <= 300", 600.0, ac4},
      {"AC5", "dicyclic bundle, n <= 32", 300.0, ac5},
      {"AC6", "p-groups of order <= 256 are Laplacian integral and classify", 600.0, ac6},
      {"AC7", "p-group structural charpoly and tree graph match direct spectrum (spectra shared with AC6)", 600.0, ac7},
      {"AC8", "order p^2 elementary abelian closed form, p in {2,3,5,7}", 60.0, ac8},
      {"AC9", "conjecture scan n <= 200, distinct-primes reading", 900.0, ac9},
      {"AC10", "join/union calculus on 200 random clique expressions", 600.0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      std::ostringstream w;
      w << "runtime " << secs << "s exceeds " << c.limit_seconds << "s";
      o.fail(w.str());
    }
    failures += !o.ok;
    std::printf("%-4s %s  %s [%.2fs]%s%s\n", c.id.c_str(), o.ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
