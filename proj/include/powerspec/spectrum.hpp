#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "charpoly.hpp"
#include "exact_linalg.hpp"
#include "graph.hpp"
#include "twins.hpp"

namespace powerspec {

/// Numeric eigenvalue within this distance of a certified integer is treated
/// as a copy of it.
inline constexpr double kAbsorptionTolerance = 1e-6;

inline RationalMatrix laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  RationalMatrix l(n, n);
  for (Vertex u = 0; u < n; ++u) {
    l(u, u) = static_cast<long>(g.degree(u));
    for (Vertex v : g.neighbors(u)) l(u, v) = -1;
  }
  return l;
}

inline Int64Rows laplacian_int(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Int64Rows l(n, std::vector<std::int64_t>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    l[u][u] = static_cast<std::int64_t>(g.degree(u));
    for (Vertex v : g.neighbors(u)) l[u][v] = -1;
  }
  return l;
}

/// Multiplicity of the integer lambda as a Laplacian eigenvalue: the nullity
/// of L - lambda I over the rationals (L is symmetric, so geometric and
/// algebraic multiplicities agree). Works on the full matrix.
inline std::size_t integer_eigenvalue_multiplicity(const Graph& g, std::int64_t lambda) {
  auto m = laplacian_int(g);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= lambda;
  return integer_nullity(m);
}

/// Laplacian spectrum. Integer eigenvalues are certified exactly; whatever
/// is left over is reported numerically.
struct Spectrum {
  std::size_t n = 0;
  FactoredCharPoly exact;
  std::vector<double> numeric;  // descending

  bool is_exact() const { return numeric.empty(); }
  bool is_laplacian_integral() const { return is_exact(); }

  /// All eigenvalues, descending.
  std::vector<double> values() const {
    std::vector<double> v = numeric;
    for (auto [r, m] : exact.roots()) v.insert(v.end(), m, static_cast<double>(r));
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

  double trace() const {
    double s = 0;
    for (double x : values()) s += x;
    return s;
  }
};

/// An eigenvalue that is either a certified integer or a numeric value.
struct SpectralValue {
  double value = 0;
  std::optional<std::int64_t> exact;
  bool is_integer() const { return exact.has_value(); }
};

namespace detail {

/// The Laplacian split along twin classes. Vectors summing to zero on a
/// class of t closed (open) twins of degree d are eigenvectors for d+1 (d),
/// giving t-1 eigenvalues each; class-constant vectors form an invariant
/// subspace on which L acts as the quotient matrix below.
struct TwinReduction {
  FactoredCharPoly class_part;
  Int64Rows quotient;               // acts on class-constant vectors
  std::vector<double> symmetrized;  // similar to quotient, row-major
  std::size_t k = 0;
};

inline TwinReduction reduce_by_twins(const Graph& g) {
  const auto classes = twin_classes(g, true);
  TwinReduction r;
  r.k = classes.size();
  r.quotient.assign(r.k, std::vector<std::int64_t>(r.k, 0));
  r.symmetrized.assign(r.k * r.k, 0.0);
  std::vector<std::int64_t> size(r.k);
  for (std::size_t c = 0; c < r.k; ++c) size[c] = static_cast<std::int64_t>(classes[c].members.size());
  for (std::size_t c = 0; c < r.k; ++c) {
    const Vertex rep = classes[c].members[0];
    const auto d = static_cast<std::int64_t>(g.degree(rep));
    const std::int64_t t = size[c];
    const bool closed = classes[c].closed;
    if (t > 1) r.class_part.add_root(closed ? d + 1 : d, static_cast<std::size_t>(t - 1));
    r.quotient[c][c] = d - (closed ? t - 1 : 0);
    r.symmetrized[c * r.k + c] = static_cast<double>(r.quotient[c][c]);
    for (std::size_t e = 0; e < r.k; ++e) {
      if (e == c || !g.adjacent(rep, classes[e].members[0])) continue;
      r.quotient[c][e] = -size[e];
      r.symmetrized[c * r.k + e] = -std::sqrt(static_cast<double>(size[c] * size[e]));
    }
  }
  return r;
}

}  // namespace detail

/// Laplacian spectrum of g.
///
/// Every integer 0..n is tested by exact nullity (modular screen, then
/// Bareiss) on the twin-class quotient; the twin classes contribute their
/// eigenvalues in closed form. If the certified multiplicities account for
/// all n eigenvalues the spectrum is exact. Otherwise the quotient is
/// diagonalized by cyclic Jacobi and the certified integers are removed from
/// the numeric list, leaving the non-integer eigenvalues.
inline Spectrum spectrum(const Graph& g) {
  Spectrum s;
  s.n = g.vertex_count();
  if (s.n == 0) return s;
  const auto red = detail::reduce_by_twins(g);
  s.exact = red.class_part;

  FactoredCharPoly quotient_part;
  std::size_t certified = 0;
  for (std::int64_t lambda = 0; lambda <= static_cast<std::int64_t>(s.n) && certified < red.k; ++lambda) {
    auto m = red.quotient;
    for (std::size_t i = 0; i < red.k; ++i) m[i][i] -= lambda;
    if (const auto mult = integer_nullity(m)) {
      quotient_part.add_root(lambda, mult);
      certified += mult;
    }
  }
  for (auto [r, m] : quotient_part.roots()) s.exact.add_root(r, m);
  if (certified == red.k) return s;

  auto numeric = jacobi_eigenvalues(red.symmetrized, red.k);
  for (auto [r, m] : quotient_part.roots()) {
    for (std::size_t i = 0; i < m; ++i) {
      auto best = std::min_element(numeric.begin(), numeric.end(), [r](double a, double b) {
        return std::abs(a - static_cast<double>(r)) < std::abs(b - static_cast<double>(r));
      });
      if (best == numeric.end() || std::abs(*best - static_cast<double>(r)) > kAbsorptionTolerance)
        throw std::runtime_error("spectrum: numeric eigensolver missed certified eigenvalue " +
                                 std::to_string(r));
      numeric.erase(best);
    }
  }
  s.numeric = std::move(numeric);
  std::sort(s.numeric.begin(), s.numeric.end(), std::greater<>());
  return s;
}

/// Full-matrix Jacobi eigenvalues of L, descending. Independent of the twin
/// reduction; used as a cross-check.
inline std::vector<double> numeric_laplacian_eigenvalues(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> a(n * n, 0.0);
  for (Vertex u = 0; u < n; ++u) {
    a[u * n + u] = static_cast<double>(g.degree(u));
    for (Vertex v : g.neighbors(u)) a[u * n + v] = -1.0;
  }
  return jacobi_eigenvalues(std::move(a), n);
}

/// Eigenvalues in ascending order, integers marked as exact.
inline std::vector<SpectralValue> ascending_values(const Spectrum& s) {
  std::vector<SpectralValue> out;
  for (auto [r, m] : s.exact.roots())
    for (std::size_t i = 0; i < m; ++i) out.push_back({static_cast<double>(r), r});
  for (double x : s.numeric) out.push_back({x, std::nullopt});
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectralValue& a, const SpectralValue& b) { return a.value < b.value; });
  return out;
}

/// Second-smallest eigenvalue counting multiplicity.
inline SpectralValue algebraic_connectivity(const Spectrum& s) {
  if (s.n < 2) throw std::domain_error("algebraic_connectivity: needs at least two vertices");
  return ascending_values(s)[1];
}

inline SpectralValue spectral_radius(const Spectrum& s) {
  if (s.n == 0) throw std::domain_error("spectral_radius: empty graph");
  return ascending_values(s).back();
}

inline std::size_t spectral_radius_multiplicity(const Spectrum& s) {
  const auto top = spectral_radius(s);
  if (top.exact) return s.exact.multiplicity(*top.exact);
  return static_cast<std::size_t>(std::count_if(s.numeric.begin(), s.numeric.end(), [&](double x) {
    return std::abs(x - top.value) <= kAbsorptionTolerance;
  }));
}

/// Spectrum of the complement: one zero stays, every other eigenvalue l
/// becomes n - l.
inline Spectrum complement_spectrum(const Spectrum& s) {
  if (!s.is_exact()) throw std::invalid_argument("complement_spectrum: requires an exact spectrum");
  Spectrum c;
  c.n = s.n;
  if (s.n == 0) return c;
  FactoredCharPoly rest = s.exact;
  rest.remove_root(0);
  const auto n = static_cast<std::int64_t>(s.n);
  c.exact.add_root(0);
  for (auto [r, m] : rest.roots()) c.exact.add_root(n - r, m);
  return c;
}

inline double max_component_radius(const std::vector<Spectrum>& parts) {
  if (parts.empty()) throw std::domain_error("max_component_radius: no components");
  double best = 0;
  for (const auto& p : parts)
    if (p.n > 0) best = std::max(best, spectral_radius(p).value);
  return best;
}

inline nlohmann::json spectrum_to_json(const Spectrum& s) {
  nlohmann::json exact = nlohmann::json::array();
  for (auto it = s.exact.roots().rbegin(); it != s.exact.roots().rend(); ++it)
    exact.push_back({it->first, it->second});
  return {{"n", s.n},
          {"exact", exact},
          {"numeric", s.numeric},
          {"is_laplacian_integral", s.is_laplacian_integral()}};
}

inline Spectrum spectrum_from_json(const nlohmann::json& j) {
  Spectrum s;
  s.n = j.at("n").get<std::size_t>();
  for (const auto& pair : j.at("exact"))
    s.exact.add_root(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::size_t>());
  s.numeric = j.at("numeric").get<std::vector<double>>();
  return s;
}

/// Two-row layout: eigenvalues (descending) over multiplicities.
inline std::string spectrum_table(const Spectrum& s) {
  std::vector<std::string> top, bottom;
  for (auto it = s.exact.roots().rbegin(); it != s.exact.roots().rend(); ++it) {
    top.push_back(std::to_string(it->first));
    bottom.push_back(std::to_string(it->second));
  }
  std::size_t width = 1;
  for (const auto& t : top) width = std::max(width, t.size());
  for (const auto& b : bottom) width = std::max(width, b.size());
  std::ostringstream out;
  auto row = [&](const std::vector<std::string>& cells) {
    out << '(';
    for (const auto& c : cells) out << ' ' << std::setw(static_cast<int>(width)) << c;
    out << " )\n";
  };
  row(top);
  row(bottom);
  if (!s.numeric.empty()) {
    out << "non-integer:";
    out << std::setprecision(12);
    for (double x : s.numeric) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

}  // namespace powerspec
