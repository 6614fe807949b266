#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/field.hpp"
#include "axial/fusion.hpp"
#include "axial/linalg.hpp"

namespace axial {

/// Commutative algebra on a named basis given by structure constants.  Only
/// the products e_i e_j with i <= j are stored.
template <Field F>
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<std::string> names) : names_(std::move(names)) {
    const std::size_t n = names_.size();
    table_.assign(n * (n + 1) / 2, zero_vect<F>(n));
  }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  Vect<F> basis(std::size_t i) const { return unit_vect<F>(dim(), i); }

  void set_product(std::size_t i, std::size_t j, Vect<F> v) {
    if (v.size() != dim()) throw Error(ErrorKind::DimMismatch, "structure constant vector");
    table_.at(slot(i, j)) = std::move(v);
  }

  const Vect<F>& basis_product(std::size_t i, std::size_t j) const { return table_.at(slot(i, j)); }

  Vect<F> product(const Vect<F>& u, const Vect<F>& v) const {
    if (u.size() != dim() || v.size() != dim()) throw Error(ErrorKind::DimMismatch, "product operands");
    Vect<F> r = zero_vect<F>(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i].is_zero() && v[i].is_zero()) continue;
      for (std::size_t j = i; j < dim(); ++j) {
        F c = u[i].is_zero() || v[j].is_zero() ? F(0) : u[i] * v[j];
        if (j != i && !u[j].is_zero() && !v[i].is_zero()) c += u[j] * v[i];
        axpy(r, c, basis_product(i, j));
      }
    }
    return r;
  }

  /// Matrix of multiplication by a; column j is a * e_j.
  Matrix<F> adjoint(const Vect<F>& a) const {
    std::vector<Vect<F>> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(product(a, basis(j)));
    return Matrix<F>::from_columns(dim(), cols);
  }

  template <class Fn>
  Algebra map_scalars(Fn&& fn) const {
    Algebra out = *this;
    for (auto& v : out.table_) {
      for (auto& c : v) c = fn(c);
    }
    return out;
  }

  Algebra specialize(const ParamAssignment& at) const {
    return map_scalars([&](const F& c) { return c.specialize(at); });
  }

  Algebra permuted(const ParamPermutation& perm) const {
    return map_scalars([&](const F& c) { return c.permuted(perm); });
  }

  /// Union of the parameter supports of all structure constants.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& v : table_) {
      for (const auto& c : v) {
        if constexpr (has_omega<F>) {
          s |= c.re().support() | c.im().support();
        } else {
          s |= c.support();
        }
      }
    }
    return s;
  }

  /// Human-readable combination of basis names, e.g. "a0 + (a - 1)*a0a1".
  std::string format(const Vect<F>& v) const {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      std::string c = v[i].to_string();
      bool negative = false;
      if (c.front() == '-' && c.find_first_of("+-", 1) == std::string::npos) {
        negative = true;
        c.erase(0, 1);
      } else if (c.find_first_of("+-", 1) != std::string::npos || c.front() == '-') {
        c = "(" + c + ")";
      }
      std::string term = c == "1" ? names_[i] : c + "*" + names_[i];
      if (s.empty()) {
        s = negative ? "-" + term : term;
      } else {
        s += negative ? " - " + term : " + " + term;
      }
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (j >= dim()) throw Error(ErrorKind::DimMismatch, "basis index out of range");
    return j * (j + 1) / 2 + i;
  }

  std::vector<std::string> names_;
  std::vector<Vect<F>> table_;
};

/// Same algebra with coefficients in Q(params)(omega).
inline Algebra<OmegaScalar> lift(const Algebra<Scalar>& alg) {
  Algebra<OmegaScalar> out(alg.names());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i; j < alg.dim(); ++j) {
      Vect<OmegaScalar> v;
      for (const auto& c : alg.basis_product(i, j)) v.push_back(OmegaScalar(c));
      out.set_product(i, j, std::move(v));
    }
  }
  return out;
}

inline Vect<OmegaScalar> lift(const Vect<Scalar>& v) {
  Vect<OmegaScalar> out;
  for (const auto& c : v) out.push_back(OmegaScalar(c));
  return out;
}

/// Kernels of ad_a - lambda for each listed eigenvalue.
template <Field F>
struct EigenDecomposition {
  Vect<F> axis;
  std::vector<Scalar> eigenvalues;
  std::vector<Subspace<F>> spaces;
  Certificate certificate;
  bool complete = false;
  // Columns are the eigenspace bases in order; set only when complete.
  Matrix<F> eigenbasis;
  Matrix<F> eigenbasis_inverse;
  std::vector<std::size_t> owner;  // eigenvalue index of each eigenbasis column

  std::optional<std::size_t> index_of(const Scalar& lambda) const {
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
      if (eigenvalues[i] == lambda) return i;
    }
    return std::nullopt;
  }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dim());
    return d;
  }

  /// Eigenbasis coordinates of v.
  Vect<F> coefficients(const Vect<F>& v) const {
    if (!complete) throw Error(ErrorKind::IncompleteDecomposition, "eigenvectors do not span");
    return eigenbasis_inverse.apply(v);
  }

  /// v split as a sum of one vector per eigenspace.
  std::vector<Vect<F>> components(const Vect<F>& v) const {
    const Vect<F> c = coefficients(v);
    std::vector<Vect<F>> out(spaces.size(), zero_vect<F>(v.size()));
    for (std::size_t k = 0; k < c.size(); ++k) axpy(out[owner[k]], c[k], eigenbasis.column(k));
    return out;
  }
};

template <Field F>
EigenDecomposition<F> eigendecompose(const Algebra<F>& alg, const Vect<F>& a, const std::vector<Scalar>& eigenvalues) {
  EigenDecomposition<F> d;
  d.axis = a;
  d.eigenvalues = eigenvalues;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar diff = eigenvalues[i] - eigenvalues[j];
      if (diff.is_zero()) {
        throw Error(ErrorKind::DuplicateEigenvalue, "eigenvalue " + eigenvalues[i].to_string() + " repeated");
      }
      add_condition(d.certificate, certificate_poly(diff));
    }
  }
  const Matrix<F> ad = alg.adjoint(a);
  std::vector<Vect<F>> cols;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    d.spaces.push_back(kernel(ad.shifted(from_scalar<F>(eigenvalues[i]))));
    merge_into(d.certificate, d.spaces.back().certificate());
    for (const auto& v : d.spaces.back().basis()) {
      cols.push_back(v);
      d.owner.push_back(i);
    }
  }
  if (cols.size() == alg.dim()) {
    d.eigenbasis = Matrix<F>::from_columns(alg.dim(), cols);
    try {
      d.eigenbasis_inverse = inverse(d.eigenbasis, &d.certificate);
      d.complete = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
    }
  }
  return d;
}

template <Field F>
struct FusionViolation {
  Scalar lambda;
  Scalar mu;
  Scalar nu;
  Vect<F> component;
};

template <Field F>
struct AxisReport {
  bool idempotent = false;
  bool complete = false;
  bool primitive = false;
  bool primitive_required = true;
  std::vector<std::size_t> dims;
  std::vector<FusionViolation<F>> violations;
  Certificate certificate;

  bool ok() const {
    return idempotent && complete && (primitive || !primitive_required) && violations.empty();
  }
};

namespace detail {

template <Field F>
bool is_primitive(const EigenDecomposition<F>& d) {
  const auto one = d.index_of(Scalar(1));
  return one && d.spaces[*one].dim() == 1 && d.spaces[*one].contains(d.axis);
}

/// Which eigencomponents of u*v are nonzero, for every pair of eigenbasis
/// vectors u in V_i and v in V_j.  Returns the sum of components per
/// eigenvalue as witnesses.
template <Field F>
std::vector<std::vector<std::vector<Vect<F>>>> product_components(const Algebra<F>& alg,
                                                                  const EigenDecomposition<F>& d) {
  const std::size_t n = d.eigenvalues.size();
  std::vector<std::vector<std::vector<Vect<F>>>> out(n, std::vector<std::vector<Vect<F>>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::vector<Vect<F>> witness(n, zero_vect<F>(alg.dim()));
      for (const auto& u : d.spaces[i].basis()) {
        for (const auto& v : d.spaces[j].basis()) {
          const auto comps = d.components(alg.product(u, v));
          for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(witness[k]) && !is_zero(comps[k])) witness[k] = comps[k];
          }
        }
      }
      out[i][j] = witness;
      out[j][i] = witness;
    }
  }
  return out;
}

}  // namespace detail

/// Idempotency, completeness, primitivity and the fusion rule
/// V_lambda V_mu in V_{lambda * mu} for the axis a.  An incomplete
/// decomposition is reported with the fusion check skipped.
template <Field F>
AxisReport<F> check_axis(const Algebra<F>& alg, const Vect<F>& a, const FusionLaw& law, bool primitive = true) {
  AxisReport<F> r;
  r.primitive_required = primitive;
  r.idempotent = alg.product(a, a) == a;
  const auto d = eigendecompose(alg, a, law.labels());
  r.certificate = d.certificate;
  r.dims = d.dims();
  r.complete = d.complete;
  r.primitive = detail::is_primitive(d);
  if (!d.complete) return r;
  const auto comps = detail::product_components(alg, d);
  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t j = 0; j < law.size(); ++j) {
      for (std::size_t k = 0; k < law.size(); ++k) {
        if (law(i, j).count(k) || is_zero(comps[i][j][k])) continue;
        r.violations.push_back({law.label(i), law.label(j), law.label(k), comps[i][j][k]});
      }
    }
  }
  return r;
}

/// The coefficient of a in the 1-eigencomponent of v.
template <Field F>
F phi(const EigenDecomposition<F>& d, const Vect<F>& v) {
  if (!d.complete) throw Error(ErrorKind::IncompleteDecomposition, "eigenvectors do not span");
  if (!detail::is_primitive(d)) throw Error(ErrorKind::NotPrimitive, "1-eigenspace is not spanned by the axis");
  const auto one = *d.index_of(Scalar(1));
  const auto comp = d.components(v)[one];
  for (std::size_t k = 0; k < comp.size(); ++k) {
    if (!d.axis[k].is_zero()) return comp[k] / d.axis[k];
  }
  throw Error(ErrorKind::NotPrimitive, "zero axis");
}

/// prod_{lambda in lambdas} (ad_a - lambda), applied to v.
template <Field F>
Vect<F> f_poly_adjoint(const Matrix<F>& ad, const std::vector<Scalar>& lambdas, Vect<F> v) {
  for (const auto& l : lambdas) {
    Vect<F> w = ad.apply(v);
    axpy(w, -from_scalar<F>(l), v);
    v = std::move(w);
  }
  return v;
}

template <Field F>
Vect<F> f_poly_adjoint(const Algebra<F>& alg, const Vect<F>& a, const std::vector<Scalar>& lambdas, const Vect<F>& v) {
  return f_poly_adjoint(alg.adjoint(a), lambdas, v);
}

/// The smallest law the axis obeys: lambda * mu lists exactly the
/// eigenvalues met by products of eigenvectors.
template <Field F>
FusionLaw minimal_fusion_law(const Algebra<F>& alg, const Vect<F>& a, const std::vector<Scalar>& eigenvalues) {
  const auto d = eigendecompose(alg, a, eigenvalues);
  if (!d.complete) throw Error(ErrorKind::IncompleteDecomposition, "eigenvectors do not span");
  FusionLaw law(eigenvalues, {});
  const auto comps = detail::product_components(alg, d);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        if (!is_zero(comps[i][j][k])) law.at(i, j).insert(k);
      }
    }
  }
  return law;
}

/// Smallest subspace containing gens and closed under multiplication by the
/// algebra.
template <Field F>
Subspace<F> ideal_closure(const Algebra<F>& alg, const std::vector<Vect<F>>& gens) {
  auto s = Subspace<F>::span(alg.dim(), gens);
  while (true) {
    std::vector<Vect<F>> vecs = s.basis();
    for (const auto& v : s.basis()) {
      for (std::size_t i = 0; i < alg.dim(); ++i) vecs.push_back(alg.product(alg.basis(i), v));
    }
    auto next = Subspace<F>::span(alg.dim(), vecs, s.certificate());
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

/// Smallest product-closed subspace containing gens.
template <Field F>
Subspace<F> subalgebra_closure(const Algebra<F>& alg, const std::vector<Vect<F>>& gens) {
  auto s = Subspace<F>::span(alg.dim(), gens);
  while (true) {
    std::vector<Vect<F>> vecs = s.basis();
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i; j < b.size(); ++j) vecs.push_back(alg.product(b[i], b[j]));
    }
    auto next = Subspace<F>::span(alg.dim(), vecs, s.certificate());
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

/// Linear map with an optional parameter substitution twisting the scalars.
template <Field F>
struct AlgebraMap {
  Matrix<F> matrix;
  std::optional<ParamPermutation> param_subst;

  Vect<F> operator()(const Vect<F>& v) const { return matrix.apply(v); }
};

struct MapReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// M(e_i e_j) = M(e_i) M(e_j) for a map M from a to b.  With a parameter
/// substitution, the structure constants of a are twisted first.
template <Field F>
MapReport check_hom(const Algebra<F>& a, const Algebra<F>& b, const Matrix<F>& m,
                    const std::optional<ParamPermutation>& subst = std::nullopt) {
  MapReport r;
  if (m.rows() != b.dim() || m.cols() != a.dim()) {
    r.ok = false;
    r.violations.push_back("matrix shape does not match the algebras");
    return r;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vect<F> c = a.basis_product(i, j);
      if (subst) {
        for (auto& s : c) s = s.permuted(*subst);
      }
      const Vect<F> lhs = m.apply(c);
      const Vect<F> rhs = b.product(m.column(i), m.column(j));
      if (lhs != rhs) {
        r.ok = false;
        r.violations.push_back(a.name(i) + " * " + a.name(j) + ": image of product " + b.format(lhs) +
                               ", product of images " + b.format(rhs));
      }
    }
  }
  return r;
}

template <Field F>
MapReport check_map(const Algebra<F>& alg, const AlgebraMap<F>& m) {
  return check_hom(alg, alg, m.matrix, m.param_subst);
}

template <Field F>
struct Quotient {
  Algebra<F> algebra;
  AlgebraMap<F> projection;
  std::vector<std::size_t> kept;  // basis indices of the original algebra kept in the quotient
};

/// Quotient by an ideal, on the standard basis vectors outside the ideal's
/// pivot columns.
template <Field F>
Quotient<F> quotient(const Algebra<F>& alg, const Subspace<F>& ideal) {
  if (ideal.ambient() != alg.dim()) throw Error(ErrorKind::AmbientMismatch, "ideal lives in another space");
  for (const auto& v : ideal.basis()) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      if (!ideal.contains(alg.product(alg.basis(i), v))) {
        throw Error(ErrorKind::NotAnIdeal, alg.name(i) + " * " + alg.format(v) + " leaves the subspace");
      }
    }
  }
  Quotient<F> q;
  const auto& piv = ideal.pivots();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (std::find(piv.begin(), piv.end(), i) == piv.end()) q.kept.push_back(i);
  }
  const auto project = [&](const Vect<F>& v) {
    const Vect<F> r = ideal.reduce(v);
    Vect<F> out;
    for (auto k : q.kept) out.push_back(r[k]);
    return out;
  };
  std::vector<Vect<F>> cols;
  for (std::size_t j = 0; j < alg.dim(); ++j) cols.push_back(project(alg.basis(j)));
  q.projection.matrix = Matrix<F>::from_columns(q.kept.size(), cols);
  std::vector<std::string> names;
  for (auto k : q.kept) names.push_back(alg.name(k));
  q.algebra = Algebra<F>(names);
  for (std::size_t i = 0; i < q.kept.size(); ++i) {
    for (std::size_t j = i; j < q.kept.size(); ++j) {
      q.algebra.set_product(i, j, project(alg.basis_product(q.kept[i], q.kept[j])));
    }
  }
  const auto rep = check_hom(alg, q.algebra, q.projection.matrix);
  if (!rep.ok) throw Error(ErrorKind::NotAnIdeal, "projection is not multiplicative: " + rep.violations.front());
  return q;
}

/// The isomorphism from a to b sending the marked generators of a to those
/// of b (in order, or swapped when allowed), if there is one.
template <Field F>
std::optional<AlgebraMap<F>> marked_iso(const Algebra<F>& a, const std::vector<Vect<F>>& gens_a,
                                        const Algebra<F>& b, const std::vector<Vect<F>>& gens_b,
                                        bool allow_swap = false) {
  if (a.dim() != b.dim() || gens_a.size() != gens_b.size()) return std::nullopt;
  const auto attempt = [&](const std::vector<Vect<F>>& targets) -> std::optional<AlgebraMap<F>> {
    // Grow a basis of a from products of generators, tracking the images in b.
    std::vector<std::pair<Vect<F>, Vect<F>>> pairs;
    Subspace<F> span_a(a.dim());
    const auto offer = [&](const Vect<F>& u, const Vect<F>& v) {
      auto next = sum(span_a, Subspace<F>::span(a.dim(), {u}));
      if (next.dim() == span_a.dim()) return false;
      span_a = std::move(next);
      pairs.emplace_back(u, v);
      return true;
    };
    for (std::size_t i = 0; i < gens_a.size(); ++i) offer(gens_a[i], targets[i]);
    for (std::size_t i = 0; i < pairs.size() && span_a.dim() < a.dim(); ++i) {
      for (std::size_t j = 0; j <= i && span_a.dim() < a.dim(); ++j) {
        offer(a.product(pairs[i].first, pairs[j].first), b.product(pairs[i].second, pairs[j].second));
      }
    }
    if (span_a.dim() < a.dim()) return std::nullopt;
    std::vector<Vect<F>> words_a, words_b;
    for (const auto& [u, v] : pairs) {
      words_a.push_back(u);
      words_b.push_back(v);
    }
    AlgebraMap<F> m;
    m.matrix = Matrix<F>::from_columns(b.dim(), words_b) * inverse(Matrix<F>::from_columns(a.dim(), words_a));
    if (rank(m.matrix) != a.dim()) return std::nullopt;
    for (std::size_t i = 0; i < gens_a.size(); ++i) {
      if (m.matrix.apply(gens_a[i]) != targets[i]) return std::nullopt;
    }
    if (!check_hom(a, b, m.matrix).ok) return std::nullopt;
    return m;
  };
  if (auto m = attempt(gens_b)) return m;
  if (allow_swap && gens_b.size() == 2) return attempt({gens_b[1], gens_b[0]});
  return std::nullopt;
}

/// The map acting on each eigenspace V_lambda by chi(gamma_lambda).
template <Field F>
AlgebraMap<F> miyamoto(const EigenDecomposition<F>& d, const GradingGroup& g, const Character& chi) {
  if (!d.complete) throw Error(ErrorKind::IncompleteDecomposition, "eigenvectors do not span");
  const std::size_t n = d.axis.size();
  Matrix<F> diag(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& lambda = d.eigenvalues[d.owner[k]];
    const auto it = std::find(g.labels.begin(), g.labels.end(), lambda);
    if (it == g.labels.end()) {
      throw Error(ErrorKind::BadParameter, "eigenvalue " + lambda.to_string() + " has no grading label");
    }
    diag(k, k) = character_value<F>(g, chi, static_cast<std::size_t>(it - g.labels.begin()));
  }
  return AlgebraMap<F>{d.eigenbasis * diag * d.eigenbasis_inverse, std::nullopt};
}

/// Smallest k >= 1 with M^k = I, or nullopt past the bound.
template <Field F>
std::optional<std::size_t> map_order(const Matrix<F>& m, std::size_t bound) {
  const auto id = Matrix<F>::identity(m.rows());
  Matrix<F> p = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

/// Order of the group generated by numeric matrices, by breadth-first
/// closure; nullopt once more than `bound` elements are found.
template <Field F>
std::optional<std::size_t> group_order(const std::vector<Matrix<F>>& gens, std::size_t bound) {
  if (gens.empty()) return 1;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (!g(i, j).is_constant()) throw Error(ErrorKind::NotSpecialized, "matrix entry " + g(i, j).to_string());
      }
    }
  }
  const auto id = Matrix<F>::identity(gens.front().rows());
  std::set<std::string> seen{id.to_string()};
  std::deque<Matrix<F>> queue{id};
  while (!queue.empty()) {
    const Matrix<F> m = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix<F> next = m * g;
      if (seen.insert(next.to_string()).second) {
        if (seen.size() > bound) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

}  // namespace axial
