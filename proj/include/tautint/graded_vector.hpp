#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tautint/class_kind.hpp"
#include "tautint/power_series.hpp"
#include "tautint/rational.hpp"

namespace tautint {

/// Characteristic classes of one bundle, graded by degree 0..cap, with
/// entries in an arbitrary commutative ring (rationals, cohomology
/// classes, symbolic class expressions).  kind records which family the
/// entries are: total Chern, total Segre, or Chern character.
template <class R>
struct GradedClassVector {
  ClassKind kind;
  int cap = 0;
  std::vector<R> entries;

  static GradedClassVector make(ClassKind kind, int cap) {
    GradedClassVector v{kind, cap, {}};
    v.entries.assign(static_cast<size_t>(cap) + 1, RingTraits<R>::zero());
    return v;
  }

  const R& at(int i) const { return entries.at(static_cast<size_t>(i)); }
  void set(int i, R value) { entries.at(static_cast<size_t>(i)) = std::move(value); }

  bool operator==(const GradedClassVector& o) const {
    return kind == o.kind && cap == o.cap && entries == o.entries;
  }
};

namespace detail {
template <class R>
void require_kind(const GradedClassVector<R>& v, ClassKind want, const char* op) {
  if (v.kind != want) throw std::invalid_argument(std::string(op) + ": wrong vector kind");
}
}  // namespace detail

/// Segre classes of the same bundle, from the defining identity
/// c_t(F) s_t(F) = 1: s_l = -(c_1 s_{l-1} + ... + c_l s_0).
template <class R>
GradedClassVector<R> chern_to_segre(const GradedClassVector<R>& c) {
  detail::require_kind(c, ClassKind::chern, "chern_to_segre");
  auto s = GradedClassVector<R>::make(ClassKind::segre, c.cap);
  s.set(0, RingTraits<R>::one());
  for (int l = 1; l <= c.cap; ++l) {
    R acc = RingTraits<R>::zero();
    for (int j = 1; j <= l; ++j) acc = acc + c.at(j) * s.at(l - j);
    s.set(l, RingTraits<R>::scale(acc, Rational(-1)));
  }
  return s;
}

/// Inverse of chern_to_segre; the defining identity is symmetric.
template <class R>
GradedClassVector<R> segre_to_chern(const GradedClassVector<R>& s) {
  detail::require_kind(s, ClassKind::segre, "segre_to_chern");
  auto c = GradedClassVector<R>::make(ClassKind::chern, s.cap);
  c.set(0, RingTraits<R>::one());
  for (int l = 1; l <= s.cap; ++l) {
    R acc = RingTraits<R>::zero();
    for (int j = 1; j <= l; ++j) acc = acc + s.at(j) * c.at(l - j);
    c.set(l, RingTraits<R>::scale(acc, Rational(-1)));
  }
  return c;
}

/// Classes of the dual bundle: degree-i entry scaled by (-1)^i.  Applies
/// uniformly to Chern, Segre and ch vectors.
template <class R>
GradedClassVector<R> dualize(const GradedClassVector<R>& v) {
  GradedClassVector<R> r = v;
  for (int i = 1; i <= v.cap; i += 2) {
    r.set(i, RingTraits<R>::scale(v.at(i), Rational(-1)));
  }
  return r;
}

/// Chern character from Chern classes via Newton's identities
/// p_l = e_1 p_{l-1} - e_2 p_{l-2} + ... + (-1)^l l e_l, ch_l = p_l / l!.
/// ch_0 is the rank, supplied by the caller.
template <class R>
GradedClassVector<R> chern_to_ch(const GradedClassVector<R>& c, const Rational& rank) {
  detail::require_kind(c, ClassKind::chern, "chern_to_ch");
  auto ch = GradedClassVector<R>::make(ClassKind::ch, c.cap);
  ch.set(0, RingTraits<R>::scale(RingTraits<R>::one(), rank));
  std::vector<R> p(static_cast<size_t>(c.cap) + 1, RingTraits<R>::zero());
  for (int l = 1; l <= c.cap; ++l) {
    R acc = RingTraits<R>::scale(c.at(l), Rational(l % 2 == 0 ? -l : l));
    for (int j = 1; j < l; ++j) {
      const Rational sign(j % 2 == 0 ? -1 : 1);
      acc = acc + RingTraits<R>::scale(c.at(j) * p[l - j], sign);
    }
    p[l] = acc;
    ch.set(l, RingTraits<R>::scale(p[l], Rational(1) / factorial(l)));
  }
  return ch;
}

/// Chern classes from the Chern character: p_j = j! ch_j, then
/// e_l = (1/l) sum_j (-1)^{j-1} e_{l-j} p_j.
template <class R>
GradedClassVector<R> ch_to_chern(const GradedClassVector<R>& ch) {
  detail::require_kind(ch, ClassKind::ch, "ch_to_chern");
  auto c = GradedClassVector<R>::make(ClassKind::chern, ch.cap);
  c.set(0, RingTraits<R>::one());
  std::vector<R> p(static_cast<size_t>(ch.cap) + 1, RingTraits<R>::zero());
  for (int j = 1; j <= ch.cap; ++j) p[j] = RingTraits<R>::scale(ch.at(j), factorial(j));
  for (int l = 1; l <= ch.cap; ++l) {
    R acc = RingTraits<R>::zero();
    for (int j = 1; j <= l; ++j) {
      const Rational sign(j % 2 == 0 ? -1 : 1);
      acc = acc + RingTraits<R>::scale(c.at(l - j) * p[j], sign);
    }
    c.set(l, RingTraits<R>::scale(acc, Rational(1, l)));
  }
  return c;
}

/// Thom-Porteous determinant: det of the p x p matrix with entry
/// (i, j) = v[q + j - i], where v[m] = 0 for m < 0.
template <class R>
R delta_determinant(int p, int q, const GradedClassVector<R>& v) {
  if (p < 1 || q < 0) throw std::invalid_argument("delta_determinant: need p >= 1, q >= 0");
  if (q + p - 1 > v.cap) {
    throw std::invalid_argument("delta_determinant: vector cap " + std::to_string(v.cap) +
                                " insufficient for p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  std::vector<std::vector<R>> m(static_cast<size_t>(p), std::vector<R>(static_cast<size_t>(p), RingTraits<R>::zero()));
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      const int idx = q + j - i;
      m[i - 1][j - 1] = idx < 0 ? RingTraits<R>::zero() : v.at(idx);
    }
  }
  // Laplace expansion; the matrices here are at most 6x6.
  struct Det {
    static R run(const std::vector<std::vector<R>>& a) {
      const size_t n = a.size();
      if (n == 1) return a[0][0];
      R acc = RingTraits<R>::zero();
      for (size_t r = 0; r < n; ++r) {
        if (RingTraits<R>::is_zero(a[r][0])) continue;
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
          if (i == r) continue;
          minor.emplace_back(a[i].begin() + 1, a[i].end());
        }
        R term = a[r][0] * run(minor);
        acc = acc + RingTraits<R>::scale(term, Rational(r % 2 == 0 ? 1 : -1));
      }
      return acc;
    }
  };
  return Det::run(m);
}

}  // namespace tautint
