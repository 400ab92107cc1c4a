#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "charpoly.hpp"
#include "connectivity.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "group_structure.hpp"
#include "number_theory.hpp"
#include "pgroup.hpp"
#include "power_graph.hpp"
#include "spectrum.hpp"

namespace powerspec {

enum class Verdict { Pass, Fail, Inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct ClaimReport {
  std::string claim_id;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::Pass;
  std::string witness;  // what violated the claim, or why it does not apply
  std::chrono::duration<double> elapsed{0};
  nlohmann::json evidence = nlohmann::json::object();

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

/// Elapsed time is left out so that reports are byte-stable.
inline nlohmann::json report_to_json(const ClaimReport& r) {
  return {{"claim", r.claim_id},
          {"params", r.params},
          {"verdict", to_string(r.verdict)},
          {"witness", r.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.witness)},
          {"evidence", r.evidence}};
}

inline nlohmann::json spectral_value_json(const SpectralValue& v) {
  if (v.exact) return *v.exact;
  return v.value;
}

namespace detail {

/// Collects named sub-conditions; the first failures become the witness.
class Conditions {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string witness() const {
    std::string w;
    for (const auto& f : failures_) w += (w.empty() ? "" : "; ") + f;
    return w;
  }

 private:
  std::vector<std::string> failures_;
};

/// Times `body`, turning any exception into a Fail so checkers stay total.
inline ClaimReport run_claim(std::string id, nlohmann::json params,
                             const std::function<void(ClaimReport&, Conditions&)>& body) {
  ClaimReport r;
  r.claim_id = std::move(id);
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  Conditions c;
  try {
    body(r, c);
    if (r.verdict != Verdict::Inapplicable) {
      r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
      if (!c.ok()) r.witness = c.witness();
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Fail;
    r.witness = std::string("exception: ") + e.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline void mark_inapplicable(ClaimReport& r, std::string reason) {
  r.verdict = Verdict::Inapplicable;
  r.witness = std::move(reason);
}

inline bool is_pq_distinct(std::uint64_t n) { return n >= 2 && factorize(n).is_product_of_two_distinct_primes(); }

inline bool equals_integer(const SpectralValue& v, std::int64_t k) { return v.exact && *v.exact == k; }

/// Checks that G = K_a v H from spectra alone: spec(G) must be
/// {0} + {n}^a + (spec(H) minus one 0, shifted by a). Integer parts are
/// compared exactly, the rest within a tolerance.
inline std::string join_shift_mismatch(const Spectrum& g, const Spectrum& h, std::size_t a) {
  const auto n = static_cast<std::int64_t>(g.n);
  if (g.n != h.n + a) return "vertex counts do not add up";
  FactoredCharPoly expected;
  expected.add_root(0);
  expected.add_root(n, a);
  FactoredCharPoly rest = h.exact;
  if (h.n > 0) {
    if (rest.multiplicity(0) == 0) return "H has no certified zero eigenvalue";
    rest.remove_root(0);
  }
  for (auto [r, m] : rest.roots()) expected.add_root(r + static_cast<std::int64_t>(a), m);
  if (expected != g.exact)
    return "integer eigenvalues " + g.exact.to_string() + " != expected " + expected.to_string();
  std::vector<double> shifted;
  for (double x : h.numeric) shifted.push_back(x + static_cast<double>(a));
  if (shifted.size() != g.numeric.size()) return "non-integer eigenvalue counts differ";
  for (std::size_t i = 0; i < shifted.size(); ++i)
    if (std::abs(shifted[i] - g.numeric[i]) > 1e-8 * std::max<double>(1.0, static_cast<double>(g.n))) {
      std::ostringstream os;
      os.precision(12);
      os << "non-integer eigenvalue " << g.numeric[i] << " != shifted " << shifted[i];
      return os.str();
    }
  return {};
}

inline nlohmann::json charpoly_json(const FactoredCharPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = p.roots().rbegin(); it != p.roots().rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

}  // namespace detail

/// The power graph of G is complete iff G is cyclic of order 1 or a prime power.
inline ClaimReport check_complete_power_graph(const FiniteGroup& group) {
  return detail::run_claim("complete_power_graph", {{"group", group.label()}}, [&](ClaimReport& r, auto& c) {
    const GroupStructure s(group);
    const bool complete = is_complete(power_graph(s));
    const bool predicted = s.is_cyclic() && (s.size() == 1 || is_prime_power(s.size()));
    r.evidence = {{"complete", complete}, {"cyclic", s.is_cyclic()}};
    c.require(complete == predicted, complete ? "complete but not cyclic of prime-power order"
                                              : "cyclic of prime-power order but not complete");
  });
}

/// G'(Z_n) is disconnected iff n is a product of two distinct primes.
inline ClaimReport check_reduced_cyclic_disconnection(std::uint64_t n) {
  return detail::run_claim("reduced_cyclic_disconnection", {{"n", n}}, [&](ClaimReport& r, auto& c) {
    if (n < 4 || is_prime(n)) return detail::mark_inapplicable(r, "n must be composite");
    const Graph g = reduced_cyclic_graph(n);
    const auto comps = components(g).size();
    r.evidence = {{"vertices", g.vertex_count()}, {"components", comps}};
    c.require((comps > 1) == detail::is_pq_distinct(n),
              "components = " + std::to_string(comps) + " for n = " + std::to_string(n));
  });
}

/// Algebraic connectivity of G(Z_n) equals phi(n)+1 iff n is prime or a
/// product of two distinct primes.
inline ClaimReport check_cyclic_algcon(std::uint64_t n) {
  return detail::run_claim("cyclic.algcon", {{"n", n}}, [&](ClaimReport& r, auto& c) {
    if (n < 2) return detail::mark_inapplicable(r, "n must be >= 2");
    const auto spec = spectrum(power_graph(cyclic_group(n)));
    const auto mu = algebraic_connectivity(spec);
    const auto target = static_cast<std::int64_t>(euler_phi(n) + 1);
    const bool equal = detail::equals_integer(mu, target);
    const bool predicted = is_prime(n) || detail::is_pq_distinct(n);
    r.evidence = {{"algcon", spectral_value_json(mu)}, {"phi_plus_one", target}, {"predicate", predicted}};
    c.require(equal == predicted, "algcon equality " + std::string(equal ? "holds" : "fails") +
                                      " but predicate is " + (predicted ? "true" : "false"));
  });
}

/// Multiplicity of n in the spectrum of G(Z_n) is phi(n)+1 iff n = 4 or n is
/// not a prime power. For composite n the spectrum is also the K_{phi(n)+1}
/// join shift of the spectrum of G'(Z_n).
inline ClaimReport check_cyclic_radius_mult(std::uint64_t n) {
  return detail::run_claim("cyclic.radius_multiplicity", {{"n", n}}, [&](ClaimReport& r, auto& c) {
    if (n < 2) return detail::mark_inapplicable(r, "n must be >= 2");
    const auto spec = spectrum(power_graph(cyclic_group(n)));
    const auto mult = spec.exact.multiplicity(static_cast<std::int64_t>(n));
    const auto phi1 = euler_phi(n) + 1;
    const bool predicted = n == 4 || !is_prime_power(n);
    r.evidence = {{"multiplicity", mult}, {"phi_plus_one", phi1}, {"predicate", predicted}};
    c.require((mult == phi1) == predicted, "multiplicity of n is " + std::to_string(mult));
    if (!is_prime(n)) {
      const auto reduced = spectrum(reduced_cyclic_graph(n));
      const auto mismatch = detail::join_shift_mismatch(spec, reduced, phi1);
      r.evidence["block_shift"] = mismatch.empty();
      c.require(mismatch.empty(), "block shift from G'(Z_n): " + mismatch);
    }
  });
}

/// kappa(G(Z_n)) equals the algebraic connectivity iff n = pq with p != q.
inline ClaimReport check_cyclic_kappa_eq_mu(std::uint64_t n) {
  return detail::run_claim("cyclic.kappa_eq_algcon", {{"n", n}}, [&](ClaimReport& r, auto& c) {
    if (n < 2) return detail::mark_inapplicable(r, "n must be >= 2");
    const Graph g = power_graph(cyclic_group(n));
    const auto mu = algebraic_connectivity(spectrum(g));
    const auto kappa = vertex_connectivity(g);
    const bool equal = detail::equals_integer(mu, static_cast<std::int64_t>(kappa.size));
    const bool predicted = detail::is_pq_distinct(n);
    r.evidence = {{"kappa", kappa.size}, {"algcon", spectral_value_json(mu)}, {"predicate", predicted}};
    c.require(equal == predicted, "kappa = " + std::to_string(kappa.size) + ", equality " +
                                      (equal ? "holds" : "fails") + ", predicate " +
                                      (predicted ? "true" : "false"));
  });
}

/// Closed-form spectrum of G(Q_{2^(alpha-1)}).
inline FactoredCharPoly generalized_quaternion_charpoly(unsigned alpha) {
  const std::int64_t h = std::int64_t{1} << (alpha - 1);
  FactoredCharPoly p;
  p.add_root(0, 1);
  p.add_root(2, static_cast<std::size_t>(h));
  p.add_root(4, static_cast<std::size_t>(h));
  p.add_root(2 * h, static_cast<std::size_t>(2 * h - 3));
  p.add_root(4 * h, 2);
  return p;
}

/// Spectral facts about G(Q_n): bounds on the algebraic connectivity, the
/// radius multiplicity rule, the five-way equivalence, universality of a^n,
/// the closed form for generalized quaternion groups, and the join
/// decomposition over the separator {e, a^n}.
inline ClaimReport check_dicyclic_bundle(std::uint64_t n) {
  return detail::run_claim("dicyclic.bundle", {{"n", n}}, [&](ClaimReport& r, auto& c) {
    if (n < 2) return detail::mark_inapplicable(r, "n must be >= 2");
    const GroupStructure s(dicyclic_group(n));
    const Graph g = power_graph(s);
    const auto spec = spectrum(g);
    const auto mu = algebraic_connectivity(spec);
    const auto order = static_cast<std::int64_t>(4 * n);
    const bool pow2 = is_power_of_two(n);
    const Element an = n;  // index of a^n

    // (a) 1 < algcon <= 2, and 2 is an eigenvalue.
    c.require(mu.value > 1.0 + 1e-8, "algcon not above 1");
    c.require(mu.exact ? *mu.exact <= 2 : mu.value <= 2.0 + 1e-8, "algcon above 2");
    c.require(spec.exact.multiplicity(2) > 0, "2 is not an eigenvalue");

    // (b) radius multiplicity.
    const auto radius = spectral_radius(spec);
    const auto rmult = spectral_radius_multiplicity(spec);
    c.require(detail::equals_integer(radius, order), "spectral radius is not 4n");
    c.require(rmult == (pow2 ? 2u : 1u), "radius multiplicity " + std::to_string(rmult));

    // (c) five-way equivalence.
    const auto kappa = vertex_connectivity(g);
    const bool st[5] = {detail::equals_integer(mu, static_cast<std::int64_t>(kappa.size)),
                        detail::equals_integer(mu, 2), mu.exact.has_value(), spec.is_exact(), pow2};
    for (int i = 1; i < 5; ++i)
      c.require(st[i] == st[0], "statement " + std::to_string(i + 1) + " disagrees with statement 1");
    c.require(kappa.size == 2, "kappa = " + std::to_string(kappa.size));
    c.require(separates(g, {s.group().identity(), an}), "{e, a^n} does not separate");

    // (d) a^n adjacent to everything iff n is a power of 2.
    const bool universal = g.degree(an) == g.vertex_count() - 1;
    c.require(universal == pow2, "a^n universality mismatch");

    // (e) closed form.
    if (pow2) {
      unsigned alpha = 1;
      while ((std::uint64_t{1} << (alpha - 1)) < n) ++alpha;
      const auto expected = generalized_quaternion_charpoly(alpha);
      c.require(spec.is_exact() && spec.exact == expected,
                "spectrum " + spec.exact.to_string() + " != closed form " + expected.to_string());
    }

    // (f) kappa = algcon iff G = (G - {e,a^n}) v K_2 with the first part disconnected.
    const Graph rest = remove_vertices(g, {s.group().identity(), an});
    const bool decomposes = universal && g.degree(s.group().identity()) == g.vertex_count() - 1 &&
                            !is_connected(rest);
    c.require(decomposes == st[0], "join decomposition mismatch");

    r.evidence = {{"algcon", spectral_value_json(mu)},
                  {"kappa", kappa.size},
                  {"kappa_witness", kappa.separating_set},
                  {"radius_multiplicity", rmult},
                  {"laplacian_integral", spec.is_exact()},
                  {"statements", {st[0], st[1], st[2], st[3], st[4]}},
                  {"an_universal", universal}};
  });
}

/// Closed forms for groups of order p^2.
inline std::vector<FactoredCharPoly> order_p2_charpolys(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p * p);
  FactoredCharPoly cyclic{{0, 1}, {q, static_cast<std::size_t>(q - 1)}};
  FactoredCharPoly elementary;
  elementary.add_root(0, 1);
  elementary.add_root(1, p);
  elementary.add_root(static_cast<std::int64_t>(p), (p + 1) * (p - 2));
  elementary.add_root(q, 1);
  return {cyclic, elementary};
}

/// Spectral and structural facts for power graphs of p-groups.
inline ClaimReport check_pgroup_bundle(const FiniteGroup& group) {
  return detail::run_claim("pgroup.bundle", {{"group", group.label()}}, [&](ClaimReport& r, auto& c) {
    const GroupStructure s(group);
    const auto p = s.p_group_prime();
    if (!p) return detail::mark_inapplicable(r, group.label() + " is not a p-group");
    const std::size_t n = s.size();
    const Graph g = power_graph(s);
    const auto spec = spectrum(g);
    const auto mu = algebraic_connectivity(spec);
    const auto rmult = spectral_radius_multiplicity(spec);
    const bool cyclic = s.is_cyclic();
    const bool gq = s.is_generalized_quaternion();
    const auto kappa = vertex_connectivity(g);

    // (a) algcon = 1 <=> radius multiplicity 1 <=> neither cyclic nor GQ.
    if (n >= 3) {
      const bool a1 = detail::equals_integer(mu, 1), a2 = rmult == 1, a3 = !cyclic && !gq;
      c.require(a1 == a3 && a2 == a3, "algcon/radius/structure equivalence fails");
      // algcon = 1 <=> kappa = 1
      c.require(a1 == (kappa.size == 1), "algcon = 1 and kappa = 1 disagree");
    }
    // (b) kappa = algcon <=> not cyclic.
    const bool kappa_eq = detail::equals_integer(mu, static_cast<std::int64_t>(kappa.size));
    c.require(kappa_eq == !cyclic, "kappa = algcon does not match non-cyclicity");

    // (c) Laplacian integral and every eigenvalue classifies.
    c.require(spec.is_exact(), "spectrum is not Laplacian integral");
    nlohmann::json forms = nlohmann::json::array();
    if (spec.is_exact()) {
      for (const auto& f : classify_eigenvalues(s, spec)) {
        c.require(f.form != EigenvalueFormKind::Unclassified,
                  "eigenvalue " + std::to_string(f.value) + " unclassified");
        forms.push_back({{"value", f.value},
                         {"form", to_string(f.form)},
                         {"witness", f.witness ? nlohmann::json(group.element_label(*f.witness))
                                               : nlohmann::json(nullptr)}});
      }
      const auto mp = check_multiple_property(s, spec);
      for (const auto& v : mp.violations) c.require(false, v);
    }

    // (d) order p^2 closed forms.
    if (n == *p * *p) {
      const auto forms2 = order_p2_charpolys(*p);
      c.require(spec.exact == forms2[0] || spec.exact == forms2[1], "order p^2 spectrum matches no closed form");
    }

    // (e) structural recursion agrees with the direct computation.
    const auto tree = decompose(s);
    const auto tree_poly = tree_charpoly(tree);
    c.require(tree_poly == spec.exact, "tree charpoly " + tree_poly.to_string() + " != " + spec.exact.to_string());
    const Graph tg = tree_graph(tree);
    auto d1 = g.degrees(), d2 = tg.degrees();
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    c.require(d1 == d2, "tree graph degree sequence differs");
    const auto tspec = spectrum(tg);
    c.require(tspec.exact == spec.exact && tspec.numeric.size() == spec.numeric.size(),
              "tree graph spectrum differs");

    // Node sizes and disjoint, non-adjacent sibling subtrees.
    std::function<void(const DecompTree&)> walk = [&](const DecompTree& t) {
      c.require(t.vertex_count() == t.up_size, "node " + t.element_label + " size != |U(g)|");
      for (std::size_t i = 0; i < t.children.size(); ++i)
        for (std::size_t j = i + 1; j < t.children.size(); ++j) {
          const auto& ui = s.up_set(t.children[i].representative);
          const auto& uj = s.up_set(t.children[j].representative);
          bool clean = true;
          for (Element x : ui)
            for (Element y : uj) clean = clean && x != y && !g.adjacent(x, y);
          c.require(clean, "subtrees of " + t.children[i].element_label + " and " +
                               t.children[j].element_label + " overlap or touch");
        }
      for (const auto& ch : t.children) walk(ch);
    };
    walk(tree);

    // G* connected iff cyclic or GQ; for o(g) = p its component is U(g).
    if (n >= 2) {
      const Graph star = proper_power_graph(s);
      const auto comps = components(star);
      c.require((comps.size() == 1) == (cyclic || gq), "proper power graph connectivity mismatch");
      std::vector<Element> vertex_of;  // vertex index in G* -> element
      for (Element x = 0; x < n; ++x)
        if (x != group.identity()) vertex_of.push_back(x);
      for (const auto& comp : comps) {
        std::vector<Element> elems;
        for (Vertex v : comp) elems.push_back(vertex_of[v]);
        for (Element x : elems)
          if (s.order(x) == *p) {
            auto u = s.up_set(x);
            std::sort(u.begin(), u.end());
            c.require(u == elems, "component of " + group.element_label(x) + " is not U(g)");
          }
      }
    }

    r.evidence = {{"p", *p},
                  {"order", n},
                  {"cyclic", cyclic},
                  {"generalized_quaternion", gq},
                  {"algcon", spectral_value_json(mu)},
                  {"kappa", kappa.size},
                  {"radius_multiplicity", rmult},
                  {"spectrum", detail::charpoly_json(spec.exact)},
                  {"decomposition", tree.to_string()},
                  {"eigenvalue_forms", forms}};
  });
}

/// For |G| >= 3, the algebraic connectivity of G(G) is 1 iff its vertex
/// connectivity is 1; the spectrum is also the K_1 join shift of G*'s.
inline ClaimReport check_proper_shift(const FiniteGroup& group) {
  return detail::run_claim("proper_shift", {{"group", group.label()}}, [&](ClaimReport& r, auto& c) {
    if (group.order() < 3) return detail::mark_inapplicable(r, "order must be >= 3");
    const GroupStructure s(group);
    const Graph g = power_graph(s);
    const auto spec = spectrum(g);
    const auto mismatch = detail::join_shift_mismatch(spec, spectrum(proper_power_graph(s)), 1);
    c.require(mismatch.empty(), "shift from G*: " + mismatch);
    const auto mu = algebraic_connectivity(spec);
    const auto kappa = vertex_connectivity(g);
    c.require(detail::equals_integer(mu, 1) == (kappa.size == 1), "algcon = 1 and kappa = 1 disagree");
    r.evidence = {{"algcon", spectral_value_json(mu)}, {"kappa", kappa.size}};
  });
}

/// Desk-scale p-groups: abelian p-groups Z_{p^a1} x ... (one per partition)
/// and generalized quaternion groups times abelian 2-groups.
inline std::vector<FiniteGroup> desk_pgroups(std::uint64_t max_order) {
  std::vector<FiniteGroup> out;
  auto abelian = [](std::uint64_t p, const std::vector<unsigned>& parts) {
    std::vector<FiniteGroup> f;
    for (unsigned a : parts) f.push_back(cyclic_group(ipow(p, a)));
    return f;
  };
  for (std::uint64_t p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned k = 1; ipow(p, k) <= max_order; ++k)
      for (const auto& parts : integer_partitions(k)) out.push_back(direct_product(abelian(p, parts)));
  }
  for (unsigned alpha = 2; (std::uint64_t{1} << (alpha + 1)) <= max_order; ++alpha) {
    const std::uint64_t q = std::uint64_t{1} << (alpha + 1);
    for (unsigned k = 0; q * ipow(2, k) <= max_order; ++k) {
      if (k == 0) {
        out.push_back(generalized_quaternion(alpha));
        continue;
      }
      for (const auto& parts : integer_partitions(k)) {
        auto f = abelian(2, parts);
        f.insert(f.begin(), generalized_quaternion(alpha));
        out.push_back(direct_product(f));
      }
    }
  }
  return out;
}

struct ConjectureRow {
  std::uint64_t n = 0;
  bool algcon_integer = false;
  bool laplacian_integral = false;
  bool predicate_strict = false;  // prime power or product of two distinct primes
  bool predicate_loose = false;   // prime power or product of two primes

  bool agrees_strict() const { return algcon_integer == laplacian_integral && laplacian_integral == predicate_strict; }
  bool agrees_loose() const { return algcon_integer == laplacian_integral && laplacian_integral == predicate_loose; }
};

struct ConjectureScan {
  std::vector<ConjectureRow> rows;
  std::vector<std::uint64_t> failures_strict;
  std::vector<std::uint64_t> failures_loose;
};

inline ConjectureRow conjecture_row(std::uint64_t n) {
  const auto spec = spectrum(power_graph(cyclic_group(n)));
  const auto f = factorize(n);
  ConjectureRow row;
  row.n = n;
  row.algcon_integer = algebraic_connectivity(spec).exact.has_value();
  row.laplacian_integral = spec.is_exact();
  row.predicate_strict = f.is_prime_power() || f.is_product_of_two_distinct_primes();
  row.predicate_loose = f.is_prime_power() || f.is_product_of_two_primes();
  return row;
}

inline ConjectureScan scan_conjecture(std::uint64_t max_n) {
  if (max_n < 2) throw std::domain_error("scan_conjecture: max_n must be >= 2");
  ConjectureScan scan;
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    const auto row = conjecture_row(n);
    if (!row.agrees_strict()) scan.failures_strict.push_back(n);
    if (!row.agrees_loose()) scan.failures_loose.push_back(n);
    scan.rows.push_back(row);
  }
  return scan;
}

inline std::string scan_to_tsv(const ConjectureScan& scan) {
  std::ostringstream out;
  out << "n\talgcon_integer\tlaplacian_integral\tpredicate_strict\tpredicate_loose\n";
  for (const auto& r : scan.rows)
    out << r.n << '\t' << r.algcon_integer << '\t' << r.laplacian_integral << '\t' << r.predicate_strict << '\t'
        << r.predicate_loose << '\n';
  return out.str();
}

inline nlohmann::json scan_to_json(const ConjectureScan& scan) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : scan.rows)
    rows.push_back({{"n", r.n},
                    {"algcon_integer", r.algcon_integer},
                    {"laplacian_integral", r.laplacian_integral},
                    {"predicate_strict", r.predicate_strict},
                    {"predicate_loose", r.predicate_loose}});
  return {{"rows", rows},
          {"failures_strict", scan.failures_strict},
          {"failures_loose", scan.failures_loose}};
}

/// The conjecture scan as a claim: Pass iff the strict reading holds on every n.
inline ClaimReport check_conjecture(std::uint64_t max_n) {
  return detail::run_claim("conjecture.scan", {{"max_n", max_n}}, [&](ClaimReport& r, auto& c) {
    const auto scan = scan_conjecture(max_n);
    for (auto n : scan.failures_strict) c.require(false, "equivalence fails at n = " + std::to_string(n));
    for (const auto& row : scan.rows)
      c.require(!row.laplacian_integral || row.algcon_integer,
                "Laplacian integral without integer algcon at n = " + std::to_string(row.n));
    r.evidence = {{"failures_strict", scan.failures_strict}, {"failures_loose", scan.failures_loose}};
  });
}

struct SuiteOptions {
  std::uint64_t cyclic_max = 300;
  std::uint64_t dicyclic_max = 32;
  std::uint64_t pgroup_max = 256;
  std::uint64_t scan_max = 200;
};

/// Claim identifiers accepted by run_suite.
inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "complete_power_graph",  "reduced_cyclic_disconnection", "cyclic.algcon", "cyclic.radius_multiplicity",
      "cyclic.kappa_eq_algcon", "dicyclic.bundle",             "pgroup.bundle", "proper_shift",
      "conjecture.scan"};
  return ids;
}

/// Runs the named claims (all when `only` is empty) over the option ranges.
/// Reports come back in a fixed order: by claim, then by parameter.
inline std::vector<ClaimReport> run_suite(const SuiteOptions& opt, const std::vector<std::string>& only = {}) {
  auto wanted = [&](const std::string& id) {
    return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
  };
  for (const auto& id : only)
    if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end())
      throw std::invalid_argument("unknown claim id: " + id);
  std::vector<ClaimReport> out;
  if (wanted("complete_power_graph"))
    for (std::uint64_t n = 1; n <= opt.cyclic_max; ++n) out.push_back(check_complete_power_graph(cyclic_group(n)));
  if (wanted("reduced_cyclic_disconnection"))
    for (std::uint64_t n = 4; n <= opt.cyclic_max; ++n)
      if (!is_prime(n)) out.push_back(check_reduced_cyclic_disconnection(n));
  if (wanted("cyclic.algcon"))
    for (std::uint64_t n = 2; n <= opt.cyclic_max; ++n) out.push_back(check_cyclic_algcon(n));
  if (wanted("cyclic.radius_multiplicity"))
    for (std::uint64_t n = 2; n <= opt.cyclic_max; ++n) out.push_back(check_cyclic_radius_mult(n));
  if (wanted("cyclic.kappa_eq_algcon"))
    for (std::uint64_t n = 2; n <= opt.cyclic_max; ++n) out.push_back(check_cyclic_kappa_eq_mu(n));
  if (wanted("dicyclic.bundle"))
    for (std::uint64_t n = 2; n <= opt.dicyclic_max; ++n) out.push_back(check_dicyclic_bundle(n));
  if (wanted("pgroup.bundle"))
    for (const auto& g : desk_pgroups(opt.pgroup_max)) out.push_back(check_pgroup_bundle(g));
  if (wanted("proper_shift")) {
    for (std::uint64_t n = 3; n <= opt.cyclic_max; ++n) out.push_back(check_proper_shift(cyclic_group(n)));
    for (std::uint64_t n = 2; n <= opt.dicyclic_max; ++n) out.push_back(check_proper_shift(dicyclic_group(n)));
  }
  if (wanted("conjecture.scan")) out.push_back(check_conjecture(opt.scan_max));
  return out;
}

}  // namespace powerspec
