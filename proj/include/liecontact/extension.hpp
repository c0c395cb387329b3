#pragma once

#include <memory>
#include <vector>

#include "liecontact/anosov.hpp"

namespace liecontact {

struct NotCentralizing : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Result of an extension construction. The extended algebra is owned
/// here; the structure's pointers refer to it.
struct ExtensionResult {
  std::shared_ptr<LieAlgebra> algebra;
  ContactStructure structure;
  ContactCertificate certificate;
};

namespace detail {

inline Vec pad(const Vec& v, std::size_t dim) {
  Vec out = zero_vec(dim);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace detail

/// Central extension g (+) R^l with central generators W_1..W_l:
/// I' = I (+) R^l, F' = F, eta_j = alpha_j, eta_{k+i} = xi_i + alpha_{j_i}.
/// Since the extension is central, d(xi_i) = 0 identically and every
/// Gram matrix on F is preserved entrywise.
inline ExtensionResult central_extension(const ContactStructure& base, std::size_t l,
                                         std::vector<std::size_t> assignment = {}) {
  const LieAlgebra& g = *base.algebra;
  const std::size_t n = g.dim();
  const std::size_t k = base.k();
  if (assignment.empty()) assignment.assign(l, 0);  // default companion: the first form
  if (assignment.size() != l) throw std::invalid_argument("assignment must have length l");
  for (auto j : assignment)
    if (j >= k) throw std::invalid_argument("assignment index out of range");

  auto names = g.basis_names();
  for (std::size_t i = 1; i <= l; ++i) names.push_back("W_" + std::to_string(i));
  auto table = g.table();  // central generators bracket to zero with everything
  auto extended = std::make_shared<LieAlgebra>(LieAlgebra::from_table(std::move(names), std::move(table)));

  ExtensionResult out;
  out.algebra = extended;
  out.structure.algebra = extended.get();
  {
    std::vector<Vec> ibasis;
    for (const auto& v : base.I.basis) ibasis.push_back(detail::pad(v, n + l));
    for (std::size_t i = 0; i < l; ++i) {
      Vec w = zero_vec(n + l);
      w[n + i] = 1;
      ibasis.push_back(std::move(w));
    }
    out.structure.I = Subspace(n + l, std::move(ibasis));
    std::vector<Vec> fbasis;
    for (const auto& v : base.F.basis) fbasis.push_back(detail::pad(v, n + l));
    out.structure.F = Subspace(n + l, std::move(fbasis));
  }
  for (const auto& alpha : base.forms) out.structure.forms.push_back(detail::pad(alpha, n + l));
  for (std::size_t i = 0; i < l; ++i) {
    OneForm eta = detail::pad(base.forms[assignment[i]], n + l);
    eta[n + i] += 1;  // xi_i, dual to W_i
    out.structure.forms.push_back(std::move(eta));
  }
  out.certificate = verify_contact(out.structure);
  return out;
}

/// Modified Weyl chamber structure: the acting subspace grows by an
/// abelian piece a_star of the compact part, I' = a (+) a_star, F' = F.
/// Forms: the base forms (zero on a_star by construction), then
/// eta_{k+i} = xi_i + alpha_companion with xi_i dual to the i-th a_star
/// basis vector in the adapted basis. Attempts direct certification and
/// falls back to the pre-contact completion.
inline ExtensionResult modified_weyl(const ContactStructure& base, const RootDecomposition& d,
                                     const Subspace& a_star, std::size_t companion = 0) {
  const LieAlgebra& g = *base.algebra;
  const std::size_t n = g.dim();
  const std::size_t k = base.k();
  const std::size_t l = a_star.dim();
  if (companion >= k) throw std::invalid_argument("companion form index out of range");

  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      if (!is_zero(g.bracket(a_star.basis[i], a_star.basis[j])))
        throw NotCentralizing("a_star is not abelian");
  for (const auto& y : a_star.basis) {
    for (const auto& h : d.cartan.basis)
      if (!is_zero(g.bracket(y, h))) throw NotCentralizing("a_star does not commute with a");
    for (const auto& r : d.roots)
      for (const auto& v : r.space.basis)
        if (!r.space.contains(g.bracket(y, v)))
          throw NotCentralizing("[a_star, g_mu] is not contained in g_mu");
    if (d.cartan.contains(y) && !is_zero(y))
      throw NotCentralizing("a_star meets the Cartan subspace");
    if (!d.compact_part.contains(y))
      throw NotCentralizing("a_star is not contained in the compact part");
  }

  // adapted basis [a | a_star | rest of k | root spaces] for the duals xi_i
  std::vector<Vec> cols = d.cartan.basis;
  for (const auto& v : a_star.basis) cols.push_back(v);
  for (const auto& v : d.compact_part.basis) {
    auto trial = cols;
    trial.push_back(v);
    if (rank(Mat::from_rows(trial)) == cols.size() + 1) cols.push_back(v);
  }
  for (const auto& r : d.roots)
    for (const auto& v : r.space.basis) cols.push_back(v);
  if (cols.size() != n) throw NotCentralizing("a_star does not extend to an adapted basis");
  Mat dual = inverse(Mat::from_columns(cols));

  ExtensionResult out;
  out.algebra = nullptr;  // same underlying algebra as the base
  out.structure.algebra = base.algebra;
  {
    std::vector<Vec> ibasis = d.cartan.basis;
    for (const auto& v : a_star.basis) ibasis.push_back(v);
    out.structure.I = Subspace(n, std::move(ibasis));
    out.structure.F = base.F;
  }
  out.structure.forms = base.forms;
  for (std::size_t i = 0; i < l; ++i) {
    OneForm eta = dual.row(d.rank() + i);  // xi_i
    eta = eta + base.forms[companion];
    out.structure.forms.push_back(std::move(eta));
  }

  out.certificate = verify_contact(out.structure);
  if (out.certificate.verdict) return out;

  // completion path: rotate so the distinguished non-degenerate base
  // form is last, fix the others, rotate back
  ContactStructure rotated = out.structure;
  const std::size_t total = rotated.forms.size();
  std::vector<std::size_t> order;  // rotated position -> original index
  for (std::size_t i = 0; i < total; ++i)
    if (i != companion) order.push_back(i);
  order.push_back(companion);
  for (std::size_t i = 0; i < total; ++i) rotated.forms[i] = out.structure.forms[order[i]];
  auto completed = complete_precontact(rotated);
  for (std::size_t i = 0; i < total; ++i) out.structure.forms[order[i]] = completed.structure.forms[i];
  out.certificate = verify_contact(out.structure);
  return out;
}

}  // namespace liecontact
