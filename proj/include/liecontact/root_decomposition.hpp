#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "liecontact/lie_algebra.hpp"

namespace liecontact {

struct NonDiagonalizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OnWall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Restricted root: exact functional on the Cartan basis together with
/// its root space.
struct RootDatum {
  Vec functional;   // values on the Cartan basis, length = rank
  Subspace space;
  std::size_t multiplicity = 0;  // = dim(space)
};

/// Complete restricted root-space decomposition of an algebra relative
/// to a Cartan subspace, with a frozen choice of positivity.
struct RootDecomposition {
  const LieAlgebra* algebra = nullptr;
  Subspace cartan;        // a
  Subspace g0;            // centralizer of a
  Subspace compact_part;  // k, with g0 = a (+) k
  std::vector<RootDatum> roots;          // positive roots first, then their negatives
  std::vector<std::size_t> positive;     // indices into roots, frozen order
  Vec generic_element;                   // regular element in a-coordinates used for positivity
  Mat to_adapted;  // inverse of [a | k | root spaces]; rows 0..rank-1 project onto a

  std::size_t rank() const { return cartan.dim(); }

  /// Coordinates in the Cartan basis of the a-component of v.
  Vec project_to_cartan(const Vec& v) const {
    Vec out(rank());
    Vec c = to_adapted * v;
    for (std::size_t i = 0; i < rank(); ++i) out[i] = c[i];
    return out;
  }

  /// Value of the root functional at x (x in a-coordinates).
  Rational root_value(const RootDatum& r, const Vec& x) const { return dot(r.functional, x); }
};

/// Exact kernel of the stacked ad-operators of s's basis.
inline Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  if (s.dim() == 0) {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < n; ++i) {
      Vec v = zero_vec(n);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    return Subspace(n, std::move(full));
  }
  Mat stacked(n * s.dim(), n);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    Mat ad = g.ad(s.basis[b]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = ad(i, j);
  }
  return Subspace(n, kernel(stacked));
}

namespace detail {

/// Exact characteristic polynomial by the Faddeev-LeVerrier recursion,
/// coefficients returned lowest degree first (monic).
inline std::vector<Rational> char_poly(const Mat& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat m = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    c[n - k] = -tr / Rational(k);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return c;
}

inline std::vector<Integer> positive_divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> divs;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Candidate rational eigenvalues of a monic rational-coefficient
/// polynomial via the rational-root theorem after clearing denominators.
inline std::vector<Rational> rational_root_candidates(const std::vector<Rational>& coeffs) {
  // strip the power of lambda dividing the polynomial
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  std::vector<Rational> candidates = {Rational(0)};
  if (low == coeffs.size()) return candidates;
  Integer lcm(1);
  for (std::size_t i = low; i < coeffs.size(); ++i) {
    Integer den = denominator(coeffs[i]);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  Integer a0 = numerator(coeffs[low] * Rational(lcm));
  Integer lead = numerator(coeffs.back() * Rational(lcm));
  for (const auto& p : positive_divisors(a0))
    for (const auto& q : positive_divisors(lead)) {
      Rational r(p, q);
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

}  // namespace detail

/// Computes the restricted root-space decomposition. Eigenvalues of the
/// generic Cartan combination are discovered exactly via the
/// rational-root theorem and confirmed by exact kernels; failure to
/// split rationally raises NonDiagonalizable.
inline RootDecomposition restricted_roots(const LieAlgebra& g, const Subspace& cartan) {
  const std::size_t n = g.dim();
  const std::size_t k = cartan.dim();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!is_zero(g.bracket(cartan.basis[i], cartan.basis[j])))
        throw std::invalid_argument("Cartan subspace is not abelian");

  std::vector<Mat> ad_h;
  for (std::size_t i = 0; i < k; ++i) ad_h.push_back(g.ad(cartan.basis[i]));

  const Integer scales[] = {2, 3, 5, 7, 11, 13};
  for (const Integer& M : scales) {
    // generic element h = sum M^{i-1} h_i
    Vec hcoord = zero_vec(k);
    Integer w(1);
    Mat adh(n, n);
    for (std::size_t i = 0; i < k; ++i) {
      hcoord[i] = Rational(w);
      adh = adh + ad_h[i] * Rational(w);
      w *= M;
    }

    auto poly = detail::char_poly(adh);
    std::vector<std::pair<Rational, Subspace>> eigenspaces;
    std::size_t total = 0;
    for (const auto& lambda : detail::rational_root_candidates(poly)) {
      Mat shifted = adh;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
      auto ker = kernel(shifted);
      if (ker.empty()) continue;
      total += ker.size();
      eigenspaces.emplace_back(lambda, Subspace(n, std::move(ker)));
    }
    if (total != n)
      throw NonDiagonalizable("ad of the generic Cartan element does not split rationally");

    // read off the functional of each eigenspace; retry with a larger
    // scale when two roots collide at the generic element
    bool collision = false;
    RootDecomposition out;
    out.algebra = &g;
    out.cartan = cartan;
    out.generic_element = hcoord;
    std::vector<RootDatum> all;
    for (auto& [lambda, space] : eigenspaces) {
      Vec functional(k);
      bool scalar = true;
      for (std::size_t i = 0; i < k && scalar; ++i) {
        const Vec& v0 = space.basis[0];
        Vec img = ad_h[i] * v0;
        // find mu_i from the first nonzero coordinate of v0
        Rational mu(0);
        for (std::size_t c = 0; c < n; ++c)
          if (v0[c] != 0) {
            mu = img[c] / v0[c];
            break;
          }
        for (const auto& v : space.basis)
          if (ad_h[i] * v != mu * v) {
            scalar = false;
            break;
          }
        functional[i] = mu;
      }
      if (!scalar) {
        collision = true;
        break;
      }
      if (lambda == 0) {
        out.g0 = space;
      } else {
        all.push_back(RootDatum{functional, space, space.dim()});
      }
    }
    if (collision) continue;
    if (out.g0.ambient_dim == 0) out.g0 = Subspace(n, {});

    // positive roots: positive value at the generic element, sorted
    // lexicographically by functional; negatives follow in matching order
    std::vector<RootDatum> pos, neg;
    for (auto& r : all)
      (dot(r.functional, hcoord) > 0 ? pos : neg).push_back(r);
    std::sort(pos.begin(), pos.end(),
              [](const RootDatum& a, const RootDatum& b) { return a.functional < b.functional; });
    out.roots = pos;
    for (const auto& p : pos) {
      Vec minus(k);
      for (std::size_t i = 0; i < k; ++i) minus[i] = -p.functional[i];
      auto it = std::find_if(neg.begin(), neg.end(),
                             [&](const RootDatum& r) { return r.functional == minus; });
      if (it == neg.end())
        throw NonDiagonalizable("restricted roots do not come in opposite pairs");
      out.roots.push_back(*it);
    }
    if (out.roots.size() != all.size())
      throw NonDiagonalizable("restricted roots do not come in opposite pairs");
    for (std::size_t i = 0; i < pos.size(); ++i) out.positive.push_back(i);

    // compact complement of a inside g0, by greedy column reduction
    std::vector<Vec> acc = cartan.basis;
    std::vector<Vec> kbasis;
    for (const auto& v : out.g0.basis) {
      auto trial = acc;
      trial.push_back(v);
      if (rank(Mat::from_rows(trial)) == acc.size() + 1) {
        acc.push_back(v);
        kbasis.push_back(v);
      }
    }
    if (acc.size() != out.g0.dim())
      throw NonDiagonalizable("Cartan subspace is not contained in its centralizer");
    out.compact_part = Subspace(n, std::move(kbasis));

    std::size_t dims = out.g0.dim();
    for (const auto& r : out.roots) dims += r.space.dim();
    if (dims != n) throw NonDiagonalizable("eigenspace dimensions do not fill the algebra");

    // adapted basis [a | k | root spaces] and its inverse for projections
    std::vector<Vec> cols = cartan.basis;
    for (const auto& v : out.compact_part.basis) cols.push_back(v);
    for (const auto& r : out.roots)
      for (const auto& v : r.space.basis) cols.push_back(v);
    out.to_adapted = inverse(Mat::from_columns(cols));
    return out;
  }
  throw NonDiagonalizable("could not separate restricted roots at any generic scale");
}

/// Exact check of the grading [g_mu, g_nu] c= g_{mu+nu} (with g_0 the
/// centralizer and absent sums mapping to zero).
inline bool verify_grading(const RootDecomposition& d) {
  const LieAlgebra& g = *d.algebra;
  auto space_of = [&](const Vec& functional) -> const Subspace* {
    if (is_zero(functional)) return &d.g0;
    for (const auto& r : d.roots)
      if (r.functional == functional) return &r.space;
    return nullptr;
  };
  std::vector<const RootDatum*> items;
  RootDatum zero{zero_vec(d.rank()), d.g0, d.g0.dim()};
  items.push_back(&zero);
  for (const auto& r : d.roots) items.push_back(&r);
  for (const auto* a : items)
    for (const auto* b : items) {
      Vec sum = a->functional + b->functional;
      const Subspace* target = space_of(sum);
      for (const auto& u : a->space.basis)
        for (const auto& v : b->space.basis) {
          Vec w = g.bracket(u, v);
          if (target ? !target->contains(w) : !is_zero(w)) return false;
        }
    }
  return true;
}

/// Chamber identifier: one '+'/'-' per positive root, frozen order.
using ChamberId = std::string;

namespace detail {

/// Strict homogeneous feasibility of {c . x > 0} by Fourier-Motzkin.
inline bool strictly_feasible(std::vector<Vec> constraints, std::size_t nvars) {
  for (std::size_t var = nvars; var-- > 0;) {
    std::vector<Vec> pos, neg, next;
    for (auto& c : constraints) {
      if (c[var] > 0)
        pos.push_back(c);
      else if (c[var] < 0)
        neg.push_back(c);
      else
        next.push_back(c);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // eliminate var: p[var] > 0, q[var] < 0
        Vec combined = p[var] * q + (-q[var]) * p;
        next.push_back(std::move(combined));
      }
    constraints = std::move(next);
    for (const auto& c : constraints) {
      bool allzero = true;
      for (std::size_t i = 0; i < var; ++i)
        if (c[i] != 0) {
          allzero = false;
          break;
        }
      if (allzero) return false;  // constraint 0 > 0
    }
  }
  return true;
}

}  // namespace detail

/// Worker count for the sign-vector sweep: explicit argument, else the
/// WEYLCONTACT_THREADS environment variable, else 1.
inline std::size_t worker_count(std::size_t requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WEYLCONTACT_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 1;
}

/// Enumerates all realizable sign vectors over the positive roots by
/// exact linear feasibility. The mask range is split across workers;
/// results are merged in mask order, so the output is independent of
/// the thread count.
inline std::vector<ChamberId> weyl_chambers(const RootDecomposition& d, std::size_t threads = 0) {
  const std::size_t m = d.positive.size();
  const std::size_t k = d.rank();
  const std::size_t total = std::size_t(1) << m;
  auto feasible = [&](std::size_t mask, ChamberId& id) {
    std::vector<Vec> constraints;
    id.assign(m, '+');
    for (std::size_t i = 0; i < m; ++i) {
      Vec c = d.roots[d.positive[i]].functional;
      if (mask & (std::size_t(1) << i)) {
        id[i] = '-';
        for (auto& x : c) x = -x;
      }
      constraints.push_back(std::move(c));
    }
    return detail::strictly_feasible(std::move(constraints), k);
  };
  const std::size_t workers = std::min(worker_count(threads), total);
  std::vector<std::vector<std::size_t>> hits(workers);
  auto sweep = [&](std::size_t w) {
    ChamberId id;
    for (std::size_t mask = w; mask < total; mask += workers)
      if (feasible(mask, id)) hits[w].push_back(mask);
  };
  if (workers <= 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
    for (auto& th : pool) th.join();
  }
  std::vector<std::size_t> masks;
  for (const auto& h : hits) masks.insert(masks.end(), h.begin(), h.end());
  std::sort(masks.begin(), masks.end());
  std::vector<ChamberId> out;
  for (std::size_t mask : masks) {
    ChamberId id(m, '+');
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) id[i] = '-';
    out.push_back(std::move(id));
  }
  return out;
}

/// Chamber of a point x in Cartan coordinates; throws OnWall when some
/// positive root vanishes at x.
inline ChamberId chamber_of(const RootDecomposition& d, const Vec& x) {
  ChamberId id;
  for (auto idx : d.positive) {
    Rational v = dot(d.roots[idx].functional, x);
    if (v == 0)
      throw OnWall("element lies on the wall of root #" + std::to_string(idx));
    id += (v > 0 ? '+' : '-');
  }
  return id;
}

/// Condition (A): for every positive root mu and basis pair
/// u in g_mu, v in g_{-mu}, lambda does not vanish on the nonzero
/// a-projections of [u, v].
inline bool check_condition_A(const RootDecomposition& d, const Vec& lambda) {
  const LieAlgebra& g = *d.algebra;
  const std::size_t m = d.positive.size();
  for (std::size_t i = 0; i < m; ++i) {
    const RootDatum& plus = d.roots[i];
    const RootDatum& minus = d.roots[m + i];
    for (const auto& u : plus.space.basis)
      for (const auto& v : minus.space.basis) {
        Vec h = d.project_to_cartan(g.bracket(u, v));
        if (!is_zero(h) && dot(lambda, h) == 0) return false;
      }
  }
  return true;
}

}  // namespace liecontact
