#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/field.hpp"

namespace axial {

/// A finite set of eigenvalue labels with a product table into subsets.
class FusionLaw {
 public:
  using Entry = std::set<std::size_t>;

  FusionLaw() = default;

  /// Builds a law from explicit entries; pairs not listed map to the empty
  /// set.  With `complete_symmetric`, each entry (x, y) also defines (y, x).
  FusionLaw(std::vector<Scalar> labels,
            const std::vector<std::tuple<Scalar, Scalar, std::vector<Scalar>>>& entries,
            bool complete_symmetric = true)
      : labels_(std::move(labels)), table_(labels_.size(), std::vector<Entry>(labels_.size())) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[i] == labels_[j]) {
          throw Error(ErrorKind::DuplicateEigenvalue, "label " + labels_[i].to_string() + " repeated");
        }
      }
    }
    for (const auto& [x, y, zs] : entries) {
      const std::size_t i = require(x);
      const std::size_t j = require(y);
      Entry e;
      for (const auto& z : zs) e.insert(require(z));
      table_[i][j] = e;
      if (complete_symmetric) table_[j][i] = e;
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<Scalar>& labels() const { return labels_; }
  const Scalar& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index_of(const Scalar& s) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == s) return i;
    }
    return std::nullopt;
  }

  const Entry& operator()(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  Entry& at(std::size_t i, std::size_t j) { return table_.at(i).at(j); }

  std::vector<Scalar> product(const Scalar& x, const Scalar& y) const {
    std::vector<Scalar> out;
    for (auto k : (*this)(require(x), require(y))) out.push_back(labels_[k]);
    return out;
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (table_[i][j] != table_[j][i]) return false;
      }
    }
    return true;
  }

  /// Applies a parameter substitution to the labels (e.g. b -> 1/2).
  FusionLaw specialize(const ParamAssignment& at) const {
    FusionLaw out = *this;
    for (auto& l : out.labels_) l = l.specialize(at);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (out.labels_[i] == out.labels_[j]) {
          throw Error(ErrorKind::DuplicateEigenvalue, "labels merge to " + out.labels_[i].to_string());
        }
      }
    }
    return out;
  }

  FusionLaw permuted(const ParamPermutation& perm) const {
    FusionLaw out = *this;
    for (auto& l : out.labels_) l = l.permuted(perm);
    return out;
  }

  std::string entry_string(std::size_t i, std::size_t j) const {
    const auto& e = (*this)(i, j);
    if (e.empty()) return "{}";
    std::string s = "{";
    bool first = true;
    for (auto k : e) {
      if (!first) s += ", ";
      s += labels_[k].to_string();
      first = false;
    }
    return s + "}";
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        s += labels_[i].to_string() + " * " + labels_[j].to_string() + " = " + entry_string(i, j) + "\n";
      }
    }
    return s;
  }

  friend bool operator==(const FusionLaw& a, const FusionLaw& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::size_t require(const Scalar& s) const {
    const auto i = index_of(s);
    if (!i) throw Error(ErrorKind::BadParameter, "label " + s.to_string() + " is not in the law");
    return *i;
  }

  std::vector<Scalar> labels_;
  std::vector<std::vector<Entry>> table_;
};

struct LawReport {
  bool symmetric = false;
  std::vector<Scalar> units;
  bool one_is_unit = false;
  std::vector<std::string> violations;
};

/// Symmetry and units: e is a unit when e*x and x*e lie in {x} for all x.
inline LawReport law_checks(const FusionLaw& f) {
  LawReport r;
  r.symmetric = f.symmetric();
  if (!r.symmetric) r.violations.push_back("table is not symmetric");
  for (std::size_t e = 0; e < f.size(); ++e) {
    bool unit = true;
    for (std::size_t x = 0; x < f.size(); ++x) {
      const auto ok = [&](const FusionLaw::Entry& s) { return s.empty() || (s.size() == 1 && *s.begin() == x); };
      if (!ok(f(e, x)) || !ok(f(x, e))) {
        unit = false;
        if (f.label(e) == Scalar(1)) {
          r.violations.push_back("1 * " + f.label(x).to_string() + " = " + f.entry_string(e, x));
        }
      }
    }
    if (unit) r.units.push_back(f.label(e));
  }
  const auto one = f.index_of(Scalar(1));
  r.one_is_unit = one && std::find(r.units.begin(), r.units.end(), Scalar(1)) != r.units.end();
  if (!one) r.violations.push_back("1 is not a label");
  return r;
}

struct SublawResult {
  bool holds = true;
  std::string witness;  // first violation, empty when holds
};

/// h is a sublaw of f: labels(h) within labels(f) and x *h y within x *f y.
inline SublawResult is_sublaw(const FusionLaw& h, const FusionLaw& f) {
  std::vector<std::size_t> embed;
  for (const auto& l : h.labels()) {
    const auto i = f.index_of(l);
    if (!i) return {false, "label " + l.to_string() + " missing"};
    embed.push_back(*i);
  }
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t y = 0; y < h.size(); ++y) {
      for (auto z : h(x, y)) {
        if (!f(embed[x], embed[y]).count(embed[z])) {
          return {false, h.label(x).to_string() + " * " + h.label(y).to_string() + ": " + h.entry_string(x, y) +
                             " not within " + f.entry_string(embed[x], embed[y])};
        }
      }
    }
  }
  return {};
}

/// A label bijection xi with xi(x*y) = xi(x)*xi(y), by exhaustive search.
/// The result maps label indices of f to label indices of h.
inline std::optional<std::vector<std::size_t>> law_isomorphism(const FusionLaw& f, const FusionLaw& h,
                                                               bool fix_unit) {
  if (f.size() != h.size()) return std::nullopt;
  const std::size_t n = f.size();
  std::vector<std::size_t> xi(n);
  std::iota(xi.begin(), xi.end(), 0);
  const auto f1 = f.index_of(Scalar(1));
  const auto h1 = h.index_of(Scalar(1));
  do {
    if (fix_unit && (!f1 || !h1 || xi[*f1] != *h1)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        FusionLaw::Entry image;
        for (auto z : f(x, y)) image.insert(xi[z]);
        ok = image == h(xi[x], xi[y]);
      }
    }
    if (ok) return xi;
  } while (std::next_permutation(xi.begin(), xi.end()));
  return std::nullopt;
}

/// Finitely generated abelian group Z/d_1 + ... + Z/d_k + Z^r with the image
/// of each label.  Coordinates of torsion factors are reduced mod d_t.
struct GradingGroup {
  std::vector<std::int64_t> divisors;  // each >= 2, d_1 | d_2 | ...
  std::size_t free_rank = 0;
  std::vector<Scalar> labels;
  std::vector<std::vector<std::int64_t>> label_map;  // per label: divisors.size() + free_rank coords
  bool abelian_certified = true;

  std::size_t factors() const { return divisors.size() + free_rank; }
  bool trivial() const { return factors() == 0; }
  bool is_cyclic_of_order(std::int64_t n) const {
    return free_rank == 0 && divisors.size() == 1 && divisors[0] == n;
  }

  /// Whether the group maps onto the cyclic group of order n.
  bool admits_quotient(std::int64_t n) const {
    if (free_rank > 0) return true;
    return std::any_of(divisors.begin(), divisors.end(), [n](std::int64_t d) { return d % n == 0; });
  }

  std::int64_t modulus(std::size_t t) const { return t < divisors.size() ? divisors[t] : 0; }

  std::string describe() const {
    if (trivial()) return "trivial";
    std::string s;
    for (std::size_t t = 0; t < factors(); ++t) {
      if (t) s += " x ";
      s += t < divisors.size() ? "C" + std::to_string(divisors[t]) : std::string("Z");
    }
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto& c = label_map[i];
      if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) continue;
      std::string img;
      if (c.size() == 1) {
        img = std::to_string(c[0]);
      } else {
        img = "(";
        for (std::size_t t = 0; t < c.size(); ++t) img += (t ? ", " : "") + std::to_string(c[t]);
        img += ")";
      }
      parts.push_back("γ_" + labels[i].to_string() + " ↦ " + img);
    }
    if (!parts.empty()) {
      s += "; ";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
      if (free_rank == 0) {
        s += " (mod ";
        for (std::size_t t = 0; t < divisors.size(); ++t) s += (t ? ", " : "") + std::to_string(divisors[t]);
        s += ")";
      }
    }
    return s;
  }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Smith normal form D = U R V of an integer matrix; only V is tracked.
struct Smith {
  std::vector<std::vector<std::int64_t>> d;
  std::vector<std::vector<std::int64_t>> v;
};

inline Smith smith_normal_form(std::vector<std::vector<std::int64_t>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::vector<std::int64_t>> v(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  const auto swap_cols = [&](std::size_t p, std::size_t q) {
    for (auto& row : a) std::swap(row[p], row[q]);
    for (auto& row : v) std::swap(row[p], row[q]);
  };
  // column q -= k * column p
  const auto sub_col = [&](std::size_t q, std::size_t p, std::int64_t k) {
    for (auto& row : a) row[q] -= k * row[p];
    for (auto& row : v) row[q] -= k * row[p];
  };
  const auto sub_row = [&](std::size_t q, std::size_t p, std::int64_t k) {
    for (std::size_t j = 0; j < cols; ++j) a[q][j] -= k * a[p][j];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (!best || std::llabs(a[i][j]) < std::llabs(a[best->first][best->second]))) {
            best = {i, j};
          }
        }
      }
      if (!best) return {a, v};
      std::swap(a[t], a[best->first]);
      if (best->second != t) swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0) {
          sub_row(i, t, floor_div(a[i][t], a[t][t]));
          if (a[i][t] != 0) clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0) {
          sub_col(j, t, floor_div(a[t][j], a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the rest of the block by the pivot.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (!bad) break;
      for (std::size_t j = 0; j < cols; ++j) a[t][j] += a[*bad][j];
    }
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
    }
  }
  return {a, v};
}

inline std::int64_t inverse_mod(std::int64_t u, std::int64_t m) {
  for (std::int64_t k = 1; k < m; ++k) {
    if (mod(u * k, m) == 1) return k;
  }
  return 0;
}

}  // namespace detail

/// The universal abelian grading: the free abelian group on the labels
/// modulo g_x + g_y = g_z for every z in x*y, via Smith normal form.
inline GradingGroup grading_group(const FusionLaw& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::int64_t>> rel;
  GradingGroup g;
  g.labels = f.labels();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      if (x != y && f(x, y).empty() && f(y, x).empty()) g.abelian_certified = false;
      std::set<std::size_t> zs = f(x, y);
      zs.insert(f(y, x).begin(), f(y, x).end());
      for (auto z : zs) {
        std::vector<std::int64_t> row(n, 0);
        row[x] += 1;
        row[y] += 1;
        row[z] -= 1;
        rel.push_back(std::move(row));
      }
    }
  }
  const auto snf = detail::smith_normal_form(rel, n);

  // Factor t of the quotient has order |d_t| (0 = infinite); label x maps
  // to row x of V.
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> orders;
  for (std::size_t t = 0; t < n; ++t) {
    const std::int64_t d = t < snf.d.size() ? std::llabs(snf.d[t][t]) : 0;
    if (d == 1) continue;
    keep.push_back(t);
    orders.push_back(d);
  }
  std::vector<std::size_t> torsion;
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < keep.size(); ++k) (orders[k] == 0 ? free : torsion).push_back(k);
  for (auto k : torsion) g.divisors.push_back(orders[k]);
  g.free_rank = free.size();

  g.label_map.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (auto k : torsion) g.label_map[x].push_back(detail::mod(snf.v[x][keep[k]], orders[k]));
    for (auto k : free) g.label_map[x].push_back(snf.v[x][keep[k]]);
  }

  // Normalize each factor so the first label with a unit coordinate maps to
  // 1 (torsion) or the first nonzero free coordinate is positive.
  for (std::size_t t = 0; t < g.factors(); ++t) {
    const std::int64_t m = g.modulus(t);
    for (std::size_t x = 0; x < n; ++x) {
      const std::int64_t c = g.label_map[x][t];
      if (c == 0) continue;
      if (m == 0) {
        if (c < 0) {
          for (auto& row : g.label_map) row[t] = -row[t];
        }
        break;
      }
      if (std::gcd(c, m) != 1) continue;
      const std::int64_t u = detail::inverse_mod(c, m);
      for (auto& row : g.label_map) row[t] = detail::mod(row[t] * u, m);
      break;
    }
  }

  // Every relation must hold for the computed images.
  for (const auto& row : rel) {
    for (std::size_t t = 0; t < g.factors(); ++t) {
      std::int64_t s = 0;
      for (std::size_t x = 0; x < n; ++x) s += row[x] * g.label_map[x][t];
      const std::int64_t m = g.modulus(t);
      if ((m == 0 && s != 0) || (m != 0 && detail::mod(s, m) != 0)) {
        throw Error(ErrorKind::ConstraintUnsatisfied, "grading relation violated after Smith reduction");
      }
    }
  }
  return g;
}

enum class FieldMode { Rational, Omega };

/// A homomorphism to the roots of unity: generator t of order d_t goes to
/// exp(2 pi i k_t / d_t).
struct Character {
  std::vector<std::int64_t> exponents;

  bool trivial() const {
    return std::all_of(exponents.begin(), exponents.end(), [](std::int64_t k) { return k == 0; });
  }
};

/// All characters realizable over Q (values +-1) or Q(omega) (cube roots of
/// unity as well).
inline std::vector<Character> characters(const GradingGroup& g, FieldMode mode) {
  if (g.free_rank > 0) throw Error(ErrorKind::UnsupportedDivisor, "grading group has a free part");
  std::vector<std::vector<std::int64_t>> choices;
  for (auto d : g.divisors) {
    if (d > 3) throw Error(ErrorKind::UnsupportedDivisor, "cyclic factor of order " + std::to_string(d));
    std::vector<std::int64_t> ks{0};
    if (d == 2) ks.push_back(1);
    if (d == 3 && mode == FieldMode::Omega) ks.insert(ks.end(), {1, 2});
    choices.push_back(ks);
  }
  std::vector<Character> out{Character{}};
  for (const auto& ks : choices) {
    std::vector<Character> next;
    for (const auto& c : out) {
      for (auto k : ks) {
        Character e = c;
        e.exponents.push_back(k);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// chi(g_label) in the field F.
template <Field F>
F character_value(const GradingGroup& g, const Character& chi, std::size_t label) {
  // Exponent of a primitive 6th root of unity: -1 = z^3, omega = z^2.
  std::int64_t e = 0;
  for (std::size_t t = 0; t < g.divisors.size(); ++t) {
    const std::int64_t k = chi.exponents.at(t) * g.label_map.at(label).at(t);
    e += g.divisors[t] == 2 ? 3 * k : 2 * k;
  }
  e = detail::mod(e, 6);
  switch (e) {
    case 0: return F(1);
    case 3: return F(-1);
    default: break;
  }
  if constexpr (has_omega<F>) {
    // z = -omega^2 = 1 + omega
    const OmegaScalar w = OmegaScalar::omega();
    OmegaScalar r(1);
    for (std::int64_t i = 0; i < e; ++i) r = r * (OmegaScalar(1) + w);
    return r;
  } else {
    throw Error(ErrorKind::UnsupportedDivisor, "character value needs omega");
  }
}

}  // namespace axial
