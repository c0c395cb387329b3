#pragma once

#include <cmath>
#include <vector>

#include "liecontact/contact.hpp"

namespace liecontact {

struct NoRealization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact hyperbolic splitting witness for an element of the Cartan
/// subspace: every root sign is nonzero, S and U collect the negative
/// and positive root spaces.
struct AnosovCertificate {
  Vec element;  // Cartan coordinates
  Subspace stable;
  Subspace unstable;
  ChamberId chamber;
};

struct AnosovResult {
  bool anosov = false;
  AnosovCertificate certificate;  // valid when anosov
  Vec witness_root;               // vanishing root functional otherwise
};

inline AnosovResult is_anosov(const RootDecomposition& d, const Vec& x) {
  AnosovResult out;
  if (x.size() != d.rank()) throw std::invalid_argument("element has wrong Cartan dimension");
  std::vector<Vec> stable, unstable;
  for (const auto& r : d.roots) {
    Rational v = dot(r.functional, x);
    if (v == 0) {
      out.witness_root = r.functional;
      return out;
    }
    auto& side = (v < 0 ? stable : unstable);
    for (const auto& b : r.space.basis) side.push_back(b);
  }
  if (d.roots.empty()) {
    // no roots at all: nothing is hyperbolic unless the algebra has no
    // root directions; treat x = 0 as the degenerate rejection
    if (is_zero(x)) {
      out.witness_root = zero_vec(d.rank());
      return out;
    }
  }
  if (is_zero(x)) {
    out.witness_root = zero_vec(d.rank());
    return out;
  }
  out.anosov = true;
  out.certificate.element = x;
  out.certificate.stable = Subspace(d.algebra->dim(), std::move(stable));
  out.certificate.unstable = Subspace(d.algebra->dim(), std::move(unstable));
  out.certificate.chamber = chamber_of(d, x);
  return out;
}

/// A linear change of the acting frame placing every Reeb element in a
/// single Weyl chamber with all forms still non-degenerate.
struct AdaptedParameterization {
  Mat b;
  ChamberId chamber;
};

namespace detail {

/// Lexicographically least interior integer point over growing boxes.
inline Vec least_interior_integer_point(const RootDecomposition& d) {
  const std::size_t k = d.rank();
  for (long n = 1; n <= 16; ++n) {
    std::vector<long> c(k, -n);
    while (true) {
      Vec x(k);
      for (std::size_t i = 0; i < k; ++i) x[i] = Rational(c[i]);
      bool interior = true;
      for (auto idx : d.positive)
        if (dot(d.roots[idx].functional, x) == 0) {
          interior = false;
          break;
        }
      if (interior && !is_zero(x)) return x;
      std::size_t pos = k;
      bool done = true;
      while (pos-- > 0) {
        if (c[pos] < n) {
          ++c[pos];
          for (std::size_t q = pos + 1; q < k; ++q) c[q] = -n;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  throw SearchExhausted("no interior integer point in boxes up to 16");
}

}  // namespace detail

/// Deterministic search: pick the chamber of the least interior integer
/// point p, aim the new Reeb elements at p + eps_j e_j and halve eps
/// until every element stays in the chamber and all P_j(B) != 0.
inline AdaptedParameterization adapt_parameterization(const ContactStructure& s,
                                                      const RootDecomposition& d) {
  const std::size_t k = s.k();
  if (s.I.dim() != k) throw std::invalid_argument("adapted parameterization needs dim I = k");
  Vec p = detail::least_interior_integer_point(d);
  ChamberId target = chamber_of(d, p);

  Rational eps(1);
  for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
    // candidate Reeb elements in I coordinates
    std::vector<Vec> elems;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      Vec e = p;
      e[j] += eps;
      try {
        if (chamber_of(d, e) != target) ok = false;
      } catch (const OnWall&) {
        ok = false;
      }
      elems.push_back(std::move(e));
    }
    if (!ok) continue;
    // B = M^{-1} with M[i][j] = alpha_i(R'_j) makes the new forms dual
    // to the chosen elements
    Mat m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Vec ambient = zero_vec(s.algebra->dim());
        for (std::size_t l = 0; l < k; ++l) ambient = ambient + elems[j][l] * s.I.basis[l];
        m(i, j) = dot(s.forms[i], ambient);
      }
    if (det(m) == 0) continue;
    Mat b = inverse(m);
    auto rep = reparameterize(s, b);
    if (!rep.valid) continue;
    return {b, target};
  }
  throw SearchExhausted("adapted parameterization: eps halving exhausted");
}

// ---------------------------------------------------------------------
// Floating-point growth spot-check. The only non-exact computation in
// the library: redundancy over the exact fact that Ad(exp tx) acts on
// each root space by e^{t mu(x)}.

namespace detail {

using DMat = std::vector<std::vector<double>>;

inline DMat dmat(std::size_t n) { return DMat(n, std::vector<double>(n, 0.0)); }

inline DMat dmul(const DMat& a, const DMat& b) {
  std::size_t n = a.size();
  DMat c = dmat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double v = a[i][k];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += v * b[k][j];
    }
  return c;
}

inline DMat dsolve(DMat a, DMat b) {  // a^{-1} b by Gaussian elimination
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    double inv = 1.0 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] *= inv;
      b[c][j] *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0.0) continue;
      double f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        b[i][j] -= f * b[c][j];
      }
    }
  }
  return b;
}

/// Matrix exponential by scaling-and-squaring with a [6/6] Pade
/// approximant.
inline DMat expm(DMat a) {
  const std::size_t n = a.size();
  double norm = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += std::fabs(v);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  if (norm > 0.5) {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.5))));
    double scale = std::ldexp(1.0, -squarings);
    for (auto& row : a)
      for (double& v : row) v *= scale;
  }
  static const double c[7] = {1.0, 0.5, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0,
                              1.0 / 665280.0};
  DMat a2 = dmul(a, a);
  DMat even = dmat(n), odd_coeff = dmat(n);
  for (std::size_t i = 0; i < n; ++i) {
    even[i][i] = c[0];
    odd_coeff[i][i] = c[1];
  }
  DMat pow = a2;
  for (int t = 1; t <= 3; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        even[i][j] += c[2 * t] * pow[i][j];
        if (2 * t + 1 <= 6) odd_coeff[i][j] += c[2 * t + 1] * pow[i][j];
      }
    if (t < 3) pow = dmul(pow, a2);
  }
  DMat odd = dmul(a, odd_coeff);
  DMat num = dmat(n), den = dmat(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      num[i][j] = even[i][j] + odd[i][j];
      den[i][j] = even[i][j] - odd[i][j];
    }
  DMat r = dsolve(den, num);
  for (int s = 0; s < squarings; ++s) r = dmul(r, r);
  return r;
}

inline DMat to_double(const Mat& m) {
  DMat d = dmat(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d[i][j] = static_cast<double>(m(i, j).convert_to<double>());
  return d;
}

}  // namespace detail

struct GrowthEntry {
  Vec root;        // functional
  double t;
  double deviation;  // relative Frobenius deviation
};

struct GrowthReport {
  std::vector<GrowthEntry> entries;
  double max_deviation = 0.0;
  double tolerance = 1e-6;
  bool pass = true;
};

/// Checks the conjugation growth law in floating point: for u in g_mu,
/// exp(tx) u exp(-tx) should equal e^{t mu(x)} u up to rounding.
inline GrowthReport growth_spotcheck(const RootDecomposition& d, const Vec& x,
                                     const std::vector<double>& t_grid, double tolerance = 1e-6) {
  const LieAlgebra& g = *d.algebra;
  if (!g.has_realization()) throw NoRealization("growth spot-check needs a matrix realization");
  Vec ambient = zero_vec(g.dim());
  for (std::size_t i = 0; i < d.rank(); ++i) ambient = ambient + x[i] * d.cartan.basis[i];
  detail::DMat xmat = detail::to_double(g.realize(ambient));

  GrowthReport report;
  report.tolerance = tolerance;
  for (const auto& r : d.roots) {
    double mu = dot(r.functional, x).convert_to<double>();
    for (const auto& u : r.space.basis) {
      detail::DMat umat = detail::to_double(g.realize(u));
      double unorm = 0.0;
      for (const auto& row : umat)
        for (double v : row) unorm += v * v;
      unorm = std::sqrt(unorm);
      for (double t : t_grid) {
        detail::DMat scaled = xmat;
        for (auto& row : scaled)
          for (double& v : row) v *= t;
        detail::DMat neg = scaled;
        for (auto& row : neg)
          for (double& v : row) v = -v;
        detail::DMat conj = detail::dmul(detail::dmul(detail::expm(scaled), umat), detail::expm(neg));
        double factor = std::exp(t * mu);
        double err = 0.0;
        for (std::size_t i = 0; i < conj.size(); ++i)
          for (std::size_t j = 0; j < conj.size(); ++j) {
            double diff = conj[i][j] - factor * umat[i][j];
            err += diff * diff;
          }
        double deviation = std::sqrt(err) / (unorm * factor);
        report.entries.push_back({r.functional, t, deviation});
        report.max_deviation = std::max(report.max_deviation, deviation);
      }
    }
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

}  // namespace liecontact
