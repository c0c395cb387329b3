#pragma once

#include <cstdlib>
#include <vector>

#include "liecontact/exterior.hpp"

namespace liecontact {

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularFrame : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularB : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Algebra-level candidate for a generalized k-contact structure:
/// k covectors and the splitting I (+) F, with the compact part (when
/// any) implicit as the complement.
struct ContactStructure {
  const LieAlgebra* algebra = nullptr;
  Subspace I;
  Subspace F;
  std::vector<OneForm> forms;

  std::size_t k() const { return forms.size(); }
};

/// Machine-checkable evidence for the contact axioms, with exact
/// witnesses. Re-running the verifier reproduces identical fields.
struct ContactCertificate {
  struct FormCheck {
    bool i_in_kernel = false;   // d(alpha_j)(I, .) = 0 on the whole algebra
    Rational pfaffian;          // Pf of the Gram of d(alpha_j) on F
    bool oracle_checked = false;
    bool oracle_ok = true;      // factored volume vs. permutation-sum oracle
  };
  bool forms_independent = false;  // rank k as covectors
  bool splitting_direct = false;   // I (+) F is a direct sum
  bool f_in_form_kernels = false;  // alpha_i(F) = 0
  Rational i_block_det;            // det[alpha_i(I_j)]
  std::vector<FormCheck> per_form;
  bool verdict = false;
};

/// Certifies Definition-style contact axioms with exact witnesses:
/// (a) F is the common kernel of the forms inside I (+) F,
/// (b) every d(alpha_j) is non-degenerate on F,
/// (c) I lies in ker d(alpha_j) on the whole algebra,
/// (d) the volume condition in factored form (I-block det x Pfaffian),
///     cross-checked against the permutation-sum oracle in small dim.
inline ContactCertificate verify_contact(const ContactStructure& s) {
  const LieAlgebra& g = *s.algebra;
  const std::size_t k = s.k();
  ContactCertificate cert;

  cert.forms_independent = !s.forms.empty() && rank(Mat::from_rows(s.forms)) == k;

  {
    std::vector<Vec> both = s.I.basis;
    for (const auto& v : s.F.basis) both.push_back(v);
    cert.splitting_direct =
        both.empty() || rank(Mat::from_rows(both)) == s.I.dim() + s.F.dim();
  }

  cert.f_in_form_kernels = true;
  for (const auto& alpha : s.forms)
    for (const auto& f : s.F.basis)
      if (dot(alpha, f) != 0) cert.f_in_form_kernels = false;

  Mat iblock(k, s.I.dim());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s.I.dim(); ++j) iblock(i, j) = dot(s.forms[i], s.I.basis[j]);
  cert.i_block_det = (k == s.I.dim() && k > 0) ? det(iblock) : Rational(0);
  if (k == 0 && s.I.dim() == 0) cert.i_block_det = 1;  // empty product

  const bool small = s.I.dim() + s.F.dim() <= 12;
  for (std::size_t j = 0; j < k; ++j) {
    ContactCertificate::FormCheck fc;
    fc.i_in_kernel = true;
    for (const auto& u : s.I.basis)
      for (std::size_t b = 0; b < g.dim(); ++b) {
        Vec eb = zero_vec(g.dim());
        eb[b] = 1;
        if (dot(s.forms[j], g.bracket(u, eb)) != 0) fc.i_in_kernel = false;
      }
    // an odd-dimensional F carries no non-degenerate alternating form
    fc.pfaffian =
        (s.F.dim() % 2 == 0) ? pfaffian(dform_gram(g, s.forms[j], s.F).matrix) : Rational(0);
    if (small && s.F.dim() % 2 == 0) {
      fc.oracle_checked = true;
      std::vector<Vec> args = s.I.basis;
      for (const auto& v : s.F.basis) args.push_back(v);
      Rational oracle =
          wedge_eval_oracle(g, s.forms, {{s.forms[j], s.F.dim() / 2}}, args);
      Rational fact(1);
      for (std::size_t t = 2; t <= s.F.dim() / 2; ++t) fact *= Rational(t);
      fc.oracle_ok = (oracle == cert.i_block_det * fact * fc.pfaffian);
    }
    cert.per_form.push_back(fc);
  }

  cert.verdict = cert.forms_independent && cert.splitting_direct && cert.f_in_form_kernels &&
                 cert.i_block_det != 0;
  for (const auto& fc : cert.per_form)
    cert.verdict = cert.verdict && fc.i_in_kernel && fc.pfaffian != 0 &&
                   (!fc.oracle_checked || fc.oracle_ok);
  return cert;
}

/// The exact non-degeneracy criterion for so(k,k+n) Cartan covectors:
/// all values nonzero and pairwise distinct in absolute value.
inline bool sokkn_admissible(const Vec& alpha) {
  for (const auto& v : alpha)
    if (v == 0) return false;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if (alpha[i] == alpha[j] || alpha[i] == -alpha[j]) return false;
  return true;
}

/// The contact splitting canonically attached to a decomposition:
/// I = a, F = the sum of all root spaces.
inline Subspace root_span(const RootDecomposition& d) {
  std::vector<Vec> basis;
  for (const auto& r : d.roots)
    for (const auto& v : r.space.basis) basis.push_back(v);
  return Subspace(d.algebra->dim(), std::move(basis));
}

inline ContactStructure make_cartan_structure(const RootDecomposition& d,
                                              const std::vector<Vec>& rows) {
  ContactStructure s;
  s.algebra = d.algebra;
  s.I = d.cartan;
  s.F = root_span(d);
  for (const auto& row : rows) s.forms.push_back(extend_form(row, d));
  return s;
}

/// Deterministic bounded search for k independent covectors on a, each
/// passing condition (A) and the exact Gram confirmation. Candidates
/// are drawn from the integer grid {1..4k^2}^k in lexicographic order.
inline std::vector<Vec> find_form_basis(const RootDecomposition& d) {
  const std::size_t k = d.rank();
  const long bound = static_cast<long>(4 * k * k);
  const Subspace f = root_span(d);
  std::vector<Vec> chosen;
  std::vector<long> counter(k, 1);
  while (true) {
    Vec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = Rational(counter[i]);
    if (check_condition_A(d, row)) {
      bool extends_rank = true;
      if (!chosen.empty()) {
        auto trial = chosen;
        trial.push_back(row);
        extends_rank = rank(Mat::from_rows(trial)) == trial.size();
      }
      if (extends_rank && pfaffian(dform_gram(*d.algebra, extend_form(row, d), f).matrix) != 0) {
        chosen.push_back(row);
        if (chosen.size() == k) return chosen;
      }
    }
    // lexicographic successor over {1..bound}^k
    std::size_t pos = k;
    while (pos-- > 0) {
      if (counter[pos] < bound) {
        ++counter[pos];
        break;
      }
      counter[pos] = 1;
      if (pos == 0)
        throw SearchExhausted("form basis search exhausted grid {1.." + std::to_string(bound) +
                              "}^" + std::to_string(k));
    }
  }
}

/// Reeb frame: the k vectors in I dual to the forms, with exact duality
/// and vanishing pairwise brackets asserted.
struct ReebFrame {
  std::vector<Vec> vectors;      // ambient coordinates
  std::vector<Vec> i_coordinates;  // coordinates in the I basis
};

inline ReebFrame reeb_frame(const ContactStructure& s) {
  const std::size_t k = s.k();
  if (s.I.dim() != k) throw SingularFrame("I dimension does not match the number of forms");
  Mat m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = dot(s.forms[i], s.I.basis[j]);
  if (det(m) == 0) throw SingularFrame("det[alpha_i(I_j)] = 0");
  Mat minv = inverse(m);
  ReebFrame frame;
  for (std::size_t j = 0; j < k; ++j) {
    Vec coords = minv.column(j);
    Vec r = zero_vec(s.algebra->dim());
    for (std::size_t l = 0; l < k; ++l) r = r + coords[l] * s.I.basis[l];
    frame.i_coordinates.push_back(std::move(coords));
    frame.vectors.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (dot(s.forms[i], frame.vectors[j]) != Rational(i == j ? 1 : 0))
        throw SingularFrame("Reeb duality failed after solve");
    for (std::size_t j = i + 1; j < k; ++j)
      if (!is_zero(s.algebra->bracket(frame.vectors[i], frame.vectors[j])))
        throw SingularFrame("Reeb vectors do not commute");
  }
  return frame;
}

/// Linear change of forms eta = B alpha, with the per-form Pfaffian
/// ratios P_j normalized so that P_j(Id) = 1.
struct Reparameterization {
  ContactStructure structure;
  std::vector<Rational> p;  // P_j(B)
  bool valid = false;       // det B != 0 and all P_j != 0
};

inline Reparameterization reparameterize(const ContactStructure& s, const Mat& b) {
  const std::size_t k = s.k();
  if (b.rows() != k || b.cols() != k) throw SingularB("B has wrong shape");
  if (det(b) == 0) throw SingularB("B is singular");
  Reparameterization out;
  out.structure = s;
  out.valid = true;
  for (std::size_t i = 0; i < k; ++i) {
    OneForm eta = zero_vec(s.algebra->dim());
    for (std::size_t j = 0; j < k; ++j) eta = eta + b(i, j) * s.forms[j];
    out.structure.forms[i] = std::move(eta);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Rational base = pfaffian(dform_gram(*s.algebra, s.forms[j], s.F).matrix);
    Rational perturbed = pfaffian(dform_gram(*s.algebra, out.structure.forms[j], s.F).matrix);
    if (base == 0) throw SingularB("base structure has degenerate form " + std::to_string(j));
    Rational pj = perturbed / base;
    if (pj == 0) out.valid = false;
    out.p.push_back(pj);
  }
  return out;
}

/// Completion of a pre-contact structure where only the last form is
/// non-degenerate: eta_j = alpha_j + c_j alpha_k for deterministically
/// searched small rationals c_j.
struct PrecontactCompletion {
  Mat b;
  ContactStructure structure;
  ContactCertificate certificate;
};

inline PrecontactCompletion complete_precontact(const ContactStructure& s) {
  const LieAlgebra& g = *s.algebra;
  const std::size_t k = s.k();
  if (k == 0) throw std::invalid_argument("empty structure");
  const std::size_t last = k - 1;
  if (pfaffian(dform_gram(g, s.forms[last], s.F).matrix) == 0)
    throw std::invalid_argument("the distinguished form is degenerate on F");

  // deterministic candidate order: 0, then +-p/q by growing height
  std::vector<Rational> candidates = {Rational(0)};
  for (int height = 1; height <= 6; ++height)
    for (int num = 1; num <= height; ++num) {
      int den = height + 1 - num;
      if (boost::multiprecision::gcd(Integer(num), Integer(den)) != 1) continue;
      candidates.push_back(Rational(num, den));
      candidates.push_back(Rational(-num, den));
    }

  PrecontactCompletion out;
  out.b = Mat::identity(k);
  out.structure = s;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    bool found = false;
    for (const auto& c : candidates) {
      OneForm eta = s.forms[j] + c * s.forms[last];
      if (pfaffian(dform_gram(g, eta, s.F).matrix) != 0) {
        out.b(j, last) = c;
        out.structure.forms[j] = std::move(eta);
        found = true;
        break;
      }
    }
    if (!found)
      throw SearchExhausted("no completion coefficient for form " + std::to_string(j) +
                            " within the candidate list");
  }
  out.certificate = verify_contact(out.structure);
  if (!out.certificate.verdict)
    throw SearchExhausted("per-form completion found but the joint certificate fails");
  return out;
}

}  // namespace liecontact
