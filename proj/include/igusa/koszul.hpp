#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "igusa/errors.hpp"

// Generic (dual) Koszul complexes K^p = M (x) Wedge^p(R^n) for an abstract
// module M, presented through opaque endomorphism handles.  Components are
// indexed by strictly increasing multi-indices over {1..n}; an absent
// component is zero.  V must provide +, unary -, == and a free is_zero.

namespace igusa {

using MultiIndex = std::vector<int>;  // strictly increasing, entries in 1..n

/// k^i (sorted insertion; nullopt when k already occurs), eps_i(k) and i_k
/// (removal; nullopt when k does not occur).
struct MultiIndexOps {
  std::optional<MultiIndex> insert;  // k ^ i
  int eps = 0;                       // eps_i(k) = #{j in i : j < k}
  std::optional<MultiIndex> remove;  // i_k
};

inline MultiIndexOps multiindex_ops(int k, const MultiIndex& i) {
  MultiIndexOps out;
  out.eps = 0;
  bool present = false;
  for (int x : i) {
    if (x < k) ++out.eps;
    if (x == k) present = true;
  }
  if (present) {
    MultiIndex r;
    for (int x : i)
      if (x != k) r.push_back(x);
    out.remove = std::move(r);
  } else {
    MultiIndex s(i);
    s.insert(std::lower_bound(s.begin(), s.end(), k), k);
    out.insert = std::move(s);
  }
  return out;
}

template <class V>
struct KoszulElement {
  int n = 0;
  int degree = 0;
  std::map<MultiIndex, V> comps;

  void accumulate(const MultiIndex& j, V v) {
    auto it = comps.find(j);
    if (it == comps.end())
      comps.emplace(j, std::move(v));
    else
      it->second = V(it->second + v);
  }
  void prune() {
    for (auto it = comps.begin(); it != comps.end();)
      it = is_zero(it->second) ? comps.erase(it) : std::next(it);
  }
  bool empty_up_to_prune() const {
    for (const auto& [j, v] : comps)
      if (!is_zero(v)) return false;
    return true;
  }
  friend KoszulElement operator+(const KoszulElement& x, const KoszulElement& y) {
    KoszulElement r(x);
    for (const auto& [j, v] : y.comps) r.accumulate(j, v);
    r.prune();
    return r;
  }
  friend KoszulElement operator-(const KoszulElement& x) {
    KoszulElement r(x);
    for (auto& [j, v] : r.comps) v = V(-v);
    return r;
  }
  friend KoszulElement operator-(const KoszulElement& x, const KoszulElement& y) {
    return x + (-y);
  }
  friend bool operator==(const KoszulElement& x, const KoszulElement& y) {
    KoszulElement d = x - y;
    return d.comps.empty();
  }
};

/// Ordered family of commuting endomorphism handles phi_1..phi_n.
/// Commutativity is the caller's contract; commutes_on provides the
/// sample-vector self-test.
template <class V>
struct OperatorFamily {
  int n = 0;
  std::vector<std::function<V(const V&)>> ops;  // 0-based storage for phi_1..phi_n

  const std::function<V(const V&)>& op(int k) const { return ops[k - 1]; }

  bool commutes_on(const std::vector<V>& samples) const {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (const auto& v : samples) {
          V a = op(i)(op(j)(v));
          V b = op(j)(op(i)(v));
          if (!is_zero(V(a - b))) return false;
        }
    return true;
  }
};

/// Degree +1 differential: component at j picks up
/// (-1)^{k+1} phi_{j_k} (m_{j minus j_k}).
template <class V>
KoszulElement<V> dK(const OperatorFamily<V>& phi, const KoszulElement<V>& m) {
  KoszulElement<V> out{m.n, m.degree + 1, {}};
  if (m.degree >= m.n) return out;  // K^{n+1} = 0
  for (const auto& [i, v] : m.comps)
    for (int k = 1; k <= m.n; ++k) {
      auto mio = multiindex_ops(k, i);
      if (!mio.insert) continue;
      V w = phi.op(k)(v);
      out.accumulate(*mio.insert, mio.eps % 2 == 0 ? std::move(w) : V(-w));
    }
  out.prune();
  return out;
}

/// Degree -1 differential: component at j is
/// sum_{k not in j} (-1)^{eps_{k^j}(k)} psi_k (m_{k^j}).
template <class V>
KoszulElement<V> delK(const OperatorFamily<V>& psi, const KoszulElement<V>& m) {
  KoszulElement<V> out{m.n, m.degree - 1, {}};
  if (m.degree <= 0) {
    out.degree = 0;
    return out;  // K^{-1} = 0
  }
  for (const auto& [i, v] : m.comps)
    for (int k : i) {
      auto mio = multiindex_ops(k, i);
      V w = psi.op(k)(v);
      out.accumulate(*mio.remove, mio.eps % 2 == 0 ? std::move(w) : V(-w));
    }
  out.prune();
  return out;
}

/// Degree 0: component at i gets sum_{k not in i} psi_k phi_k + sum_{k in i}
/// phi_k psi_k.
template <class V>
KoszulElement<V> delta_dot(const OperatorFamily<V>& psi, const OperatorFamily<V>& phi,
                           const KoszulElement<V>& m) {
  KoszulElement<V> out{m.n, m.degree, {}};
  for (const auto& [i, v] : m.comps) {
    size_t pos = 0;
    for (int k = 1; k <= m.n; ++k) {
      bool inside = pos < i.size() && i[pos] == k;
      if (inside) ++pos;
      V w = inside ? phi.op(k)(psi.op(k)(v)) : psi.op(k)(phi.op(k)(v));
      out.accumulate(i, std::move(w));
    }
  }
  out.prune();
  return out;
}

/// Degree 0 bracket correction.  Scattering from the source index i: for
/// k in i and l not in i the target is j = l ^ (i_k) and the contribution is
/// -(-1)^{eps_i(k) + eps_j(l)} [psi_k, phi_l](m_i).  This is the convention
/// under which delK(dK) + dK(delK) = delta_dot + delta_bracket holds in
/// every degree; the printed form of the bracket term in the source has its
/// index roles swapped and does not satisfy the identity.
template <class V>
KoszulElement<V> delta_bracket(const OperatorFamily<V>& psi, const OperatorFamily<V>& phi,
                               const KoszulElement<V>& m) {
  KoszulElement<V> out{m.n, m.degree, {}};
  for (const auto& [i, v] : m.comps)
    for (int k : i) {
      auto rem = multiindex_ops(k, i);
      for (int l = 1; l <= m.n; ++l) {
        auto lo = multiindex_ops(l, i);
        if (!lo.insert) continue;  // l already in i
        auto tgt = multiindex_ops(l, *rem.remove);
        const MultiIndex& j = *tgt.insert;
        int eps_jl = tgt.eps;
        V w = V(psi.op(k)(phi.op(l)(v)) - phi.op(l)(psi.op(k)(v)));
        bool negate = ((rem.eps + eps_jl) % 2 == 0);
        out.accumulate(j, negate ? V(-w) : std::move(w));
      }
    }
  out.prune();
  return out;
}

/// Contraction s^p = delK(psi) after (or before) the caller-supplied inverse
/// of Delta_{psi.phi}; on dK-cocycles, dK(s^p(m)) = m.
enum class ContractionVariant { PreInverse, PostInverse };

template <class V>
KoszulElement<V> contraction_section(const OperatorFamily<V>& psi,
                                     const std::function<V(const V&)>& delta_inverse,
                                     ContractionVariant variant, const KoszulElement<V>& m) {
  auto map_inv = [&](const KoszulElement<V>& x) {
    KoszulElement<V> r{x.n, x.degree, {}};
    for (const auto& [j, v] : x.comps) r.accumulate(j, delta_inverse(v));
    r.prune();
    return r;
  };
  if (variant == ContractionVariant::PreInverse) return delK(psi, map_inv(m));
  return map_inv(delK(psi, m));
}

}  // namespace igusa
