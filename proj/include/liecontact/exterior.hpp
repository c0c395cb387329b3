#pragma once

#include <functional>
#include <vector>

#include "liecontact/root_decomposition.hpp"

namespace liecontact {

/// Left-invariant 1-form: a covector on the algebra in canonical basis
/// coordinates, evaluated by the pairing dot(alpha, v).
using OneForm = Vec;

struct OddDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAntisymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Extends a covector on the Cartan basis to the whole algebra: agrees
/// with lambda on a, vanishes on the compact part and every root space.
inline OneForm extend_form(const Vec& lambda, const RootDecomposition& d) {
  if (lambda.size() != d.rank()) throw std::invalid_argument("extend_form: wrong covector length");
  const std::size_t n = d.algebra->dim();
  OneForm alpha = zero_vec(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d.rank(); ++i) alpha[j] += lambda[i] * d.to_adapted(i, j);
  return alpha;
}

/// Gram matrix of the 2-form d(alpha)(A,B) = -alpha([A,B]) restricted to
/// a subspace.
struct TwoFormGram {
  Subspace subspace;
  Mat matrix;  // exactly antisymmetric
};

inline TwoFormGram dform_gram(const LieAlgebra& g, const OneForm& alpha, const Subspace& f) {
  Mat m(f.dim(), f.dim());
  for (std::size_t p = 0; p < f.dim(); ++p)
    for (std::size_t q = p + 1; q < f.dim(); ++q) {
      Rational v = -dot(alpha, g.bracket(f.basis[p], f.basis[q]));
      m(p, q) = v;
      m(q, p) = -v;
    }
  return {f, m};
}

/// Exact Pfaffian by elimination on the antisymmetric matrix.
/// Pf of the 0x0 matrix is 1 (empty product).
inline Rational pfaffian(Mat a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0)
    throw OddDimension("pfaffian requires an even-dimensional square matrix");
  if (!a.is_antisymmetric()) throw NotAntisymmetric("pfaffian requires an antisymmetric matrix");
  const std::size_t n = a.rows();
  Rational pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
      pf = -pf;
    }
    Rational pivot = a(k, k + 1);
    pf *= pivot;
    // clear row k beyond k+1 with paired row/column operations
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i) == 0) continue;
      Rational c = -a(k, i) / pivot;
      for (std::size_t j = 0; j < n; ++j) a(i, j) += c * a(k + 1, j);
      for (std::size_t j = 0; j < n; ++j) a(j, i) += c * a(j, k + 1);
    }
  }
  return pf;
}

/// Permutation-sum Pfaffian (sum over perfect matchings), the
/// independent cross-check for small dimensions.
inline Rational pfaffian_oracle(const Mat& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0)
    throw OddDimension("pfaffian requires an even-dimensional square matrix");
  if (!a.is_antisymmetric()) throw NotAntisymmetric("pfaffian requires an antisymmetric matrix");
  std::function<Rational(std::vector<std::size_t>)> expand =
      [&](std::vector<std::size_t> idx) -> Rational {
    if (idx.empty()) return Rational(1);
    Rational sum(0);
    std::size_t i = idx[0];
    for (std::size_t pos = 1; pos < idx.size(); ++pos) {
      if (a(i, idx[pos]) == 0) continue;
      std::vector<std::size_t> rest;
      for (std::size_t t = 1; t < idx.size(); ++t)
        if (t != pos) rest.push_back(idx[t]);
      Rational term = a(i, idx[pos]) * expand(std::move(rest));
      if (pos % 2 == 0) term = -term;  // expansion sign along the first row
      sum += term;
    }
    return sum;
  };
  std::vector<std::size_t> idx(a.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return expand(std::move(idx));
}

/// One factor of a wedge product: either a 1-form or the 2-form
/// d(alpha) of a 1-form (evaluated through the algebra bracket).
struct WedgeFactor {
  OneForm form;
  int degree;  // 1 or 2
};

/// Brute-force wedge evaluation by the alternating shuffle sum, with no
/// 1/m! normalization: each factor consumes an ascending block of
/// arguments and contributes the merge sign. The frozen convention for
/// powers: d(alpha)^p is p successive degree-2 factors.
inline Rational wedge_eval_oracle(const LieAlgebra& g, const std::vector<OneForm>& one_forms,
                                  const std::vector<std::pair<OneForm, std::size_t>>& dform_powers,
                                  const std::vector<Vec>& vectors) {
  std::vector<WedgeFactor> factors;
  for (const auto& f : one_forms) factors.push_back({f, 1});
  for (const auto& [alpha, p] : dform_powers)
    for (std::size_t t = 0; t < p; ++t) factors.push_back({alpha, 2});
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree;
  if (degree != vectors.size())
    throw DegreeMismatch("total form degree does not match the number of vectors");

  std::function<Rational(std::size_t, const std::vector<std::size_t>&)> eval =
      [&](std::size_t t, const std::vector<std::size_t>& remaining) -> Rational {
    if (t == factors.size()) return Rational(1);
    const WedgeFactor& f = factors[t];
    Rational sum(0);
    if (f.degree == 1) {
      for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
        Rational v = dot(f.form, vectors[remaining[pos]]);
        if (v == 0) continue;
        std::vector<std::size_t> rest;
        for (std::size_t r = 0; r < remaining.size(); ++r)
          if (r != pos) rest.push_back(remaining[r]);
        Rational term = v * eval(t + 1, rest);
        if (pos % 2 == 1) term = -term;
        sum += term;
      }
    } else {
      for (std::size_t p1 = 0; p1 < remaining.size(); ++p1)
        for (std::size_t p2 = p1 + 1; p2 < remaining.size(); ++p2) {
          Rational v = -dot(f.form, g.bracket(vectors[remaining[p1]], vectors[remaining[p2]]));
          if (v == 0) continue;
          std::vector<std::size_t> rest;
          for (std::size_t r = 0; r < remaining.size(); ++r)
            if (r != p1 && r != p2) rest.push_back(remaining[r]);
          // merge sign: p1 inversions for the first pick, p2-1 for the second
          Rational term = v * eval(t + 1, rest);
          if ((p1 + p2 - 1) % 2 == 1) term = -term;
          sum += term;
        }
    }
    return sum;
  };
  std::vector<std::size_t> all(vectors.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return eval(0, all);
}

}  // namespace liecontact
