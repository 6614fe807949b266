#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/error.hpp"
#include "axial/field.hpp"
#include "axial/fusion.hpp"
#include "axial/linalg.hpp"

namespace axial {

/// Element of the free commutative non-associative magma on generators
/// a0, a1, ...; products keep the smaller child on the left.
class MagmaWord {
 public:
  static MagmaWord gen(std::size_t i) {
    MagmaWord w;
    w.node_ = std::make_shared<Node>(Node{i, {}, {}, 1});
    return w;
  }

  static MagmaWord product(const MagmaWord& u, const MagmaWord& v) {
    MagmaWord w;
    const bool swap = compare(v, u) < 0;
    const MagmaWord& l = swap ? v : u;
    const MagmaWord& r = swap ? u : v;
    w.node_ = std::make_shared<Node>(Node{0, l.node_, r.node_, l.length() + r.length()});
    return w;
  }

  std::size_t length() const { return node_->length; }
  bool is_gen() const { return node_->left == nullptr; }
  std::size_t generator() const { return node_->gen; }
  MagmaWord left() const { return MagmaWord(node_->left); }
  MagmaWord right() const { return MagmaWord(node_->right); }

  std::string to_string() const {
    if (is_gen()) return "a" + std::to_string(generator());
    const auto wrap = [](const MagmaWord& w) { return w.is_gen() ? w.to_string() : "(" + w.to_string() + ")"; };
    if (left().is_gen() && right().is_gen()) return left().to_string() + right().to_string();
    return wrap(left()) + wrap(right());
  }

  /// Total order: by length, then generators by index, then left child, then
  /// right child.
  static int compare(const MagmaWord& u, const MagmaWord& v) {
    if (u.node_ == v.node_) return 0;
    if (u.length() != v.length()) return u.length() < v.length() ? -1 : 1;
    if (u.is_gen()) return u.generator() == v.generator() ? 0 : (u.generator() < v.generator() ? -1 : 1);
    if (const int c = compare(u.left(), v.left()); c != 0) return c;
    return compare(u.right(), v.right());
  }

  friend bool operator==(const MagmaWord& u, const MagmaWord& v) { return compare(u, v) == 0; }
  friend bool operator<(const MagmaWord& u, const MagmaWord& v) { return compare(u, v) < 0; }

 private:
  struct Node {
    std::size_t gen;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t length;
  };

  MagmaWord() = default;
  explicit MagmaWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// All words of length at most max_len, sorted by the word order. Each
/// product's children appear earlier in the list.
inline std::vector<MagmaWord> enumerate_words(std::size_t n_gens, std::size_t max_len) {
  std::vector<MagmaWord> all;
  std::vector<std::vector<std::size_t>> by_len(max_len + 1);
  for (std::size_t i = 0; i < n_gens && max_len >= 1; ++i) {
    by_len[1].push_back(all.size());
    all.push_back(MagmaWord::gen(i));
  }
  for (std::size_t n = 2; n <= max_len; ++n) {
    std::vector<MagmaWord> fresh;
    for (std::size_t i = 1; 2 * i <= n; ++i) {
      const auto& ls = by_len[i];
      const auto& rs = by_len[n - i];
      for (std::size_t p = 0; p < ls.size(); ++p) {
        for (std::size_t r = (i == n - i ? p : 0); r < rs.size(); ++r) {
          fresh.push_back(MagmaWord::product(all[ls[p]], all[rs[r]]));
        }
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (auto& w : fresh) {
      by_len[n].push_back(all.size());
      all.push_back(std::move(w));
    }
  }
  return all;
}

template <Field F>
Vect<F> eval_word(const Algebra<F>& alg, const MagmaWord& w, const std::vector<Vect<F>>& gens) {
  if (w.is_gen()) {
    if (w.generator() >= gens.size()) throw Error(ErrorKind::DimMismatch, "no value for " + w.to_string());
    return gens[w.generator()];
  }
  return alg.product(eval_word(alg, w.left(), gens), eval_word(alg, w.right(), gens));
}

enum class RelatorKind { Idempotent, Primitivity, Fusion };

inline std::string_view to_string(RelatorKind k) {
  switch (k) {
    case RelatorKind::Idempotent: return "idempotent";
    case RelatorKind::Primitivity: return "primitivity";
    case RelatorKind::Fusion: return "fusion";
  }
  return "?";
}

struct RelatorInstance {
  RelatorKind kind = RelatorKind::Idempotent;
  std::size_t axis = 0;
  std::vector<MagmaWord> words;  // none, one or two depending on kind
  std::optional<Scalar> lambda;
  std::optional<Scalar> mu;

  std::string to_string() const {
    std::string s = std::string(axial::to_string(kind)) + " at axis a" + std::to_string(axis);
    if (!words.empty()) {
      s += ", words";
      for (const auto& w : words) s += " " + w.to_string();
    }
    if (lambda) s += ", lambda = " + lambda->to_string() + ", mu = " + mu->to_string();
    return s;
  }
};

namespace detail {

inline std::vector<Scalar> labels_except(const FusionLaw& law, const Scalar& skip) {
  std::vector<Scalar> out;
  for (const auto& l : law.labels()) {
    if (l != skip) out.push_back(l);
  }
  return out;
}

inline std::vector<Scalar> labels_of(const FusionLaw& law, const FusionLaw::Entry& e) {
  std::vector<Scalar> out;
  for (auto k : e) out.push_back(law.label(k));
  return out;
}

}  // namespace detail

/// Value of one relator in a concrete algebra whose generators are the axes.
template <Field F>
Vect<F> eval_relator(const Algebra<F>& alg, const RelatorInstance& r, const FusionLaw& law,
                     const std::vector<Vect<F>>& axes) {
  const Vect<F>& a = axes.at(r.axis);
  switch (r.kind) {
    case RelatorKind::Idempotent: return alg.product(a, a) - a;
    case RelatorKind::Primitivity: {
      const auto d = eigendecompose(alg, a, law.labels());
      const Vect<F> w = eval_word(alg, r.words.at(0), axes);
      Vect<F> v = w;
      axpy(v, -phi(d, w), a);
      return f_poly_adjoint(alg, a, detail::labels_except(law, Scalar(1)), v);
    }
    case RelatorKind::Fusion: {
      const auto ad = alg.adjoint(a);
      const Vect<F> u = f_poly_adjoint(ad, detail::labels_except(law, *r.lambda), eval_word(alg, r.words.at(0), axes));
      const Vect<F> v = f_poly_adjoint(ad, detail::labels_except(law, *r.mu), eval_word(alg, r.words.at(1), axes));
      const auto entry = law(*law.index_of(*r.lambda), *law.index_of(*r.mu));
      return f_poly_adjoint(ad, detail::labels_of(law, entry), alg.product(u, v));
    }
  }
  return {};
}

struct RelatorFailure {
  RelatorInstance instance;
  std::string value;
};

struct RelatorReport {
  std::size_t words = 0;
  std::size_t total = 0;
  std::map<RelatorKind, std::size_t> counts;
  std::map<RelatorKind, std::size_t> failed_counts;
  std::size_t failed = 0;
  std::vector<RelatorFailure> failures;  // at most max_failures kept
  std::vector<std::string> errors;       // axes whose relators could not be evaluated

  bool ok() const { return failed == 0 && errors.empty(); }
};

/// Instances per axis: the idempotent relator, one primitivity relator per
/// word and one fusion relator per ordered (lambda, mu, w1, w2).
inline std::size_t relator_count(std::size_t n_words, std::size_t n_labels) {
  return 1 + n_words + n_labels * n_labels * n_words * n_words;
}

/// Evaluates every relator instance over words of length <= max_len. Word
/// values and f-images are shared between instances; an instance and its
/// mirror (mu, lambda, w2, w1) have the same value and are evaluated once.
template <Field F>
RelatorReport check_all(const Algebra<F>& alg, const std::vector<Vect<F>>& axes, const FusionLaw& law,
                        std::size_t max_len, std::size_t max_failures = 50) {
  RelatorReport rep;
  const auto words = enumerate_words(axes.size(), max_len);
  rep.words = words.size();
  const std::size_t nl = law.size();
  const bool mirror = law_checks(law).symmetric;

  std::vector<Vect<F>> values;
  values.reserve(words.size());
  {
    std::map<std::string, std::size_t> index;
    for (const auto& w : words) {
      if (w.is_gen()) {
        values.push_back(axes.at(w.generator()));
      } else {
        values.push_back(alg.product(values[index.at(w.left().to_string())], values[index.at(w.right().to_string())]));
      }
      index[w.to_string()] = values.size() - 1;
    }
  }

  const auto fail = [&](RelatorInstance inst, const Vect<F>& v, std::size_t multiplicity) {
    rep.failed += multiplicity;
    rep.failed_counts[inst.kind] += multiplicity;
    if (rep.failures.size() < max_failures) rep.failures.push_back({std::move(inst), alg.format(v)});
  };

  for (std::size_t ax = 0; ax < axes.size(); ++ax) {
    const Vect<F>& a = axes[ax];
    rep.counts[RelatorKind::Idempotent] += 1;
    rep.counts[RelatorKind::Primitivity] += words.size();
    rep.counts[RelatorKind::Fusion] += nl * nl * words.size() * words.size();
    rep.total += relator_count(words.size(), nl);

    const Vect<F> idem = alg.product(a, a) - a;
    if (!is_zero(idem)) fail({RelatorKind::Idempotent, ax, {}, {}, {}}, idem, 1);

    const auto ad = alg.adjoint(a);
    try {
      const auto d = eigendecompose(alg, a, law.labels());
      const auto not_one = detail::labels_except(law, Scalar(1));
      for (std::size_t k = 0; k < words.size(); ++k) {
        Vect<F> v = values[k];
        axpy(v, -phi(d, values[k]), a);
        const Vect<F> r = f_poly_adjoint(ad, not_one, v);
        if (!is_zero(r)) fail({RelatorKind::Primitivity, ax, {words[k]}, {}, {}}, r, 1);
      }
    } catch (const Error& e) {
      rep.errors.push_back("axis a" + std::to_string(ax) + ": " + e.what());
      rep.failed += words.size();
      rep.failed_counts[RelatorKind::Primitivity] += words.size();
    }

    // f_{F \ {lambda}}(ad_a)(w) for every label and word.
    std::vector<std::vector<Vect<F>>> image(nl);
    for (std::size_t l = 0; l < nl; ++l) {
      const auto others = detail::labels_except(law, law.label(l));
      for (const auto& v : values) image[l].push_back(f_poly_adjoint(ad, others, v));
    }
    for (std::size_t l = 0; l < nl; ++l) {
      for (std::size_t m = 0; m < nl; ++m) {
        const auto target = detail::labels_of(law, law(l, m));
        for (std::size_t i = 0; i < words.size(); ++i) {
          for (std::size_t j = 0; j < words.size(); ++j) {
            // Keep (l, i) <= (m, j); the mirror is counted with it.
            if (mirror && std::pair(l, i) > std::pair(m, j)) continue;
            const std::size_t mult = !mirror || std::pair(l, i) == std::pair(m, j) ? 1 : 2;
            const Vect<F>& u = image[l][i];
            const Vect<F>& v = image[m][j];
            if (is_zero(u) || is_zero(v)) continue;
            const Vect<F> r = f_poly_adjoint(ad, target, alg.product(u, v));
            if (!is_zero(r)) {
              fail({RelatorKind::Fusion, ax, {words[i], words[j]}, law.label(l), law.label(m)}, r, mult);
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace axial
