#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecontact/linalg.hpp"

namespace liecontact {

/// Sparse bracket table entry: [e_i, e_j] = sum of coeff * e_k terms.
using BracketTerms = std::vector<std::pair<std::size_t, Rational>>;

struct JacobiWitness {
  std::size_t i, j, k;
};

/// Finite-dimensional real Lie algebra given by a named basis and sparse
/// structure constants, optionally with a matrix realization. Only pairs
/// i < j are stored; antisymmetry is implied.
class LieAlgebra {
 public:
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::map<std::pair<std::size_t, std::size_t>, BracketTerms>& table() const { return table_; }
  bool has_realization() const { return !realization_.empty(); }
  const std::vector<Mat>& realization() const { return realization_; }

  /// Index of a named basis element; throws if absent.
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("no basis element named " + name);
  }

  Vec basis_vector(const std::string& name) const {
    Vec v = zero_vec(dim());
    v[index_of(name)] = 1;
    return v;
  }

  /// [e_i, e_j] as sparse terms, for any i, j.
  BracketTerms bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return {};
    if (!flip) return it->second;
    BracketTerms neg = it->second;
    for (auto& [k, c] : neg) c = -c;
    return neg;
  }

  Vec bracket(const Vec& a, const Vec& b) const {
    if (a.size() != dim() || b.size() != dim())
      throw std::invalid_argument("bracket operand of wrong dimension");
    Vec out = zero_vec(dim());
    for (const auto& [ij, terms] : table_) {
      Rational c = a[ij.first] * b[ij.second] - a[ij.second] * b[ij.first];
      if (c == 0) continue;
      for (const auto& [k, coeff] : terms) out[k] += c * coeff;
    }
    return out;
  }

  /// Dense matrix of ad(v): column j is [v, e_j].
  Mat ad(const Vec& v) const {
    Mat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec ej = zero_vec(dim());
      ej[j] = 1;
      Vec col = bracket(v, ej);
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  Mat realize(const Vec& v) const {
    if (!has_realization()) throw std::invalid_argument("algebra has no realization");
    Mat m(realization_[0].rows(), realization_[0].cols());
    for (std::size_t i = 0; i < dim(); ++i)
      if (v[i] != 0) m = m + realization_[i] * v[i];
    return m;
  }

  /// First failing Jacobi triple, or nullopt when the identity holds.
  std::optional<JacobiWitness> jacobi_witness() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      Vec ei = zero_vec(n);
      ei[i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec ej = zero_vec(n);
        ej[j] = 1;
        Vec bij = bracket(ei, ej);
        for (std::size_t k = j + 1; k < n; ++k) {
          Vec ek = zero_vec(n);
          ek[k] = 1;
          Vec s = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) + bracket(ek, bij);
          if (!is_zero(s)) return JacobiWitness{i, j, k};
        }
      }
    }
    return std::nullopt;
  }

  /// Checks that matrix commutators of the realization reproduce the
  /// structure constants exactly.
  bool realization_consistent() const {
    if (!has_realization()) return true;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) {
        Mat c = commutator(realization_[i], realization_[j]);
        Mat expect(c.rows(), c.cols());
        for (const auto& [k, coeff] : bracket_basis(i, j)) expect = expect + realization_[k] * coeff;
        if (c != expect) return false;
      }
    return true;
  }

  /// Builds from an explicit table; rejects Jacobi violations so invalid
  /// tables never circulate.
  static LieAlgebra from_table(std::vector<std::string> names,
                               std::map<std::pair<std::size_t, std::size_t>, BracketTerms> table,
                               std::vector<Mat> realization = {}) {
    LieAlgebra g;
    g.names_ = std::move(names);
    for (auto& [ij, terms] : table) {
      if (ij.first >= ij.second || ij.second >= g.dim())
        throw std::invalid_argument("bracket table indices out of range or not i<j");
      BracketTerms cleaned;
      for (auto& [k, c] : terms) {
        if (k >= g.dim()) throw std::invalid_argument("bracket output index out of range");
        if (c != 0) cleaned.emplace_back(k, c);
      }
      if (!cleaned.empty()) g.table_[ij] = std::move(cleaned);
    }
    g.realization_ = std::move(realization);
    if (auto w = g.jacobi_witness())
      throw std::invalid_argument("Jacobi identity fails on triple (" + std::to_string(w->i) + "," +
                                  std::to_string(w->j) + "," + std::to_string(w->k) + ")");
    if (!g.realization_consistent())
      throw std::invalid_argument("realization does not match structure constants");
    return g;
  }

  /// Builds from basis matrices; structure constants are computed by
  /// expanding each commutator in the basis.
  static LieAlgebra from_realization(std::vector<std::string> names, std::vector<Mat> mats) {
    if (names.size() != mats.size()) throw std::invalid_argument("names/matrices size mismatch");
    const std::size_t n = names.size();
    const std::size_t sq = mats.empty() ? 0 : mats[0].rows() * mats[0].cols();
    Mat span(sq, n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < mats[b].rows(); ++i)
        for (std::size_t j = 0; j < mats[b].cols(); ++j)
          span(i * mats[b].cols() + j, b) = mats[b](i, j);

    std::map<std::pair<std::size_t, std::size_t>, BracketTerms> table;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Mat c = commutator(mats[i], mats[j]);
        Vec rhs(sq);
        for (std::size_t r = 0; r < c.rows(); ++r)
          for (std::size_t s = 0; s < c.cols(); ++s) rhs[r * c.cols() + s] = c(r, s);
        auto x = solve(span, rhs);
        if (!x) throw std::invalid_argument("commutator leaves the span of the basis");
        BracketTerms terms;
        for (std::size_t k = 0; k < n; ++k)
          if ((*x)[k] != 0) terms.emplace_back(k, (*x)[k]);
        if (!terms.empty()) table[{i, j}] = std::move(terms);
      }
    return from_table(std::move(names), std::move(table), std::move(mats));
  }

 private:
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, BracketTerms> table_;
  std::vector<Mat> realization_;
};

/// Killing form B(x,y) = tr(ad x . ad y) on the basis, with the exact
/// semisimplicity flag det(B) != 0.
struct KillingForm {
  Mat matrix;
  bool semisimple;
};

inline KillingForm killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = zero_vec(n);
    ei[i] = 1;
    ads.push_back(g.ad(ei));
  }
  Mat b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr(0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) tr += ads[i](r, s) * ads[j](s, r);
      b(i, j) = tr;
      b(j, i) = tr;
    }
  return {b, n > 0 && det(b) != 0};
}

namespace builtin {

/// so(k,k+n) in the block presentation adapted to the split Cartan
/// subspace of diagonal off-blocks. Canonical basis order:
/// H_11..H_kk, F_ij (i<j), G_ij (i<j), H_ij (i != j, lexicographic),
/// X_st (s=1..n, t=1..k), Z_st, D_ij (i<j).
inline LieAlgebra build_so_kkn(std::size_t k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("build_so_kkn requires k >= 1");
  if (2 * k + n < 2) throw std::invalid_argument("build_so_kkn requires 2k+n >= 2");
  const std::size_t N = 2 * k + n;
  std::vector<std::string> names;
  std::vector<Mat> mats;
  auto sub = [](std::size_t a, std::size_t b) {
    return "_" + std::to_string(a) + std::to_string(b);
  };
  // H_ij: C_ij in the (1,2) block, C_ji in the (2,1) block.
  auto h_mat = [&](std::size_t i, std::size_t j) {
    Mat m(N, N);
    m(i - 1, k + j - 1) = 1;
    m(k + j - 1, i - 1) = 1;
    return m;
  };
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back("H" + sub(i, i));
    mats.push_back(h_mat(i, i));
  }
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) {
      names.push_back("F" + sub(i, j));
      Mat m(N, N);
      m(i - 1, j - 1) = 1;
      m(j - 1, i - 1) = -1;
      mats.push_back(m);
    }
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) {
      names.push_back("G" + sub(i, j));
      Mat m(N, N);
      m(k + i - 1, k + j - 1) = 1;
      m(k + j - 1, k + i - 1) = -1;
      mats.push_back(m);
    }
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j) {
      if (i == j) continue;
      names.push_back("H" + sub(i, j));
      mats.push_back(h_mat(i, j));
    }
  for (std::size_t s = 1; s <= n; ++s)
    for (std::size_t t = 1; t <= k; ++t) {
      names.push_back("X" + sub(s, t));
      Mat m(N, N);
      m(t - 1, 2 * k + s - 1) = 1;
      m(2 * k + s - 1, t - 1) = 1;
      mats.push_back(m);
    }
  for (std::size_t s = 1; s <= n; ++s)
    for (std::size_t t = 1; t <= k; ++t) {
      // Sign chosen so the a-projection of [X_st, Z_st] is +H_tt.
      names.push_back("Z" + sub(s, t));
      Mat m(N, N);
      m(k + t - 1, 2 * k + s - 1) = -1;
      m(2 * k + s - 1, k + t - 1) = 1;
      mats.push_back(m);
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      names.push_back("D" + sub(i, j));
      Mat m(N, N);
      m(2 * k + i - 1, 2 * k + j - 1) = 1;
      m(2 * k + j - 1, 2 * k + i - 1) = -1;
      mats.push_back(m);
    }
  return LieAlgebra::from_realization(std::move(names), std::move(mats));
}

/// sl(n,R): traceless diagonals T_i = E_ii - E_{i+1,i+1} as the Cartan
/// basis, then the elementary matrices E_ij (i != j, lexicographic).
inline LieAlgebra build_sl_n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_sl_n requires n >= 2");
  std::vector<std::string> names;
  std::vector<Mat> mats;
  for (std::size_t i = 1; i < n; ++i) {
    names.push_back("T_" + std::to_string(i));
    Mat m(n, n);
    m(i - 1, i - 1) = 1;
    m(i, i) = -1;
    mats.push_back(m);
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      names.push_back("E_" + std::to_string(i) + std::to_string(j));
      Mat m(n, n);
      m(i - 1, j - 1) = 1;
      mats.push_back(m);
    }
  return LieAlgebra::from_realization(std::move(names), std::move(mats));
}

/// Canonical Cartan subspace of the builtins: the leading block of the
/// basis (H_11..H_kk for so(k,k+n), T_1..T_{n-1} for sl(n)).
inline Subspace canonical_cartan(const LieAlgebra& g, std::size_t rank) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec v = zero_vec(g.dim());
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  return Subspace(g.dim(), std::move(basis));
}

}  // namespace builtin
}  // namespace liecontact
