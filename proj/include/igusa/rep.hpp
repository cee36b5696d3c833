#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "igusa/rings.hpp"

namespace igusa {

struct RepExpr;
using RepPtr = std::shared_ptr<const RepExpr>;

/// Construction tree for a finite free GL_g x G_m module: the standard
/// representation and anything reachable from it by duals, symmetric and
/// exterior powers, tensor products, determinant powers and similitude
/// twists.
struct RepExpr {
  enum class Kind { Std, Dual, Sym, Wedge, Tensor, DetPower, SimTwist, Trivial };
  Kind kind = Kind::Trivial;
  int k = 0;  // Sym/Wedge order, or DetPower/SimTwist exponent
  RepPtr lhs, rhs;
};

RepPtr rep_std();
RepPtr rep_trivial();
RepPtr rep_dual(RepPtr r);
RepPtr rep_sym(int k, RepPtr r);
RepPtr rep_wedge(int k, RepPtr r);
RepPtr rep_tensor(RepPtr a, RepPtr b);
RepPtr rep_det(int m);
RepPtr rep_sim(int m);

bool rep_equal(const RepPtr& a, const RepPtr& b);
std::string rep_key(const RepPtr& r);  // canonical text form

long rep_rank(const RepPtr& r, int g);
std::vector<std::string> rep_labels(const RepPtr& r, int g);

struct Representation {
  RepPtr expr;
  int g = 1;
  long rank = 1;
  std::vector<std::string> labels;

  Representation() = default;
  Representation(RepPtr e, int g_)
      : expr(std::move(e)), g(g_), rank(rep_rank(expr, g_)), labels(rep_labels(expr, g_)) {}

  friend bool operator==(const Representation& x, const Representation& y) {
    return x.g == y.g && rep_equal(x.expr, y.expr);
  }
};

// deterministic basis enumerations (shared by the action matrices and labels)
std::vector<std::vector<int>> sym_basis(int r, int k);    // sorted multisets, lex
std::vector<std::vector<int>> wedge_basis(int r, int k);  // increasing subsets, lex

namespace detail {

template <class R>
Mat<R> sym_power_matrix(const Mat<R>& M, int k) {
  const int r = M.rows;
  auto basis = sym_basis(r, k);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);
  const R zero = ring_zero_like(M(0, 0));
  Mat<R> out(static_cast<int>(basis.size()), static_cast<int>(basis.size()), zero);
  for (size_t j = 0; j < basis.size(); ++j) {
    // expand prod_t (sum_i M(i, J[t]) x_i) over sorted monomials
    std::map<std::vector<int>, R> acc;
    acc.emplace(std::vector<int>{}, ring_one_like(M(0, 0)));
    for (int jt : basis[j]) {
      std::map<std::vector<int>, R> nxt;
      for (const auto& [mono, c] : acc)
        for (int i = 0; i < r; ++i) {
          if (ring_is_zero(M(i, jt))) continue;
          std::vector<int> m2(mono);
          m2.insert(std::lower_bound(m2.begin(), m2.end(), i), i);
          R t = R(c * M(i, jt));
          auto it = nxt.find(m2);
          if (it == nxt.end())
            nxt.emplace(std::move(m2), std::move(t));
          else
            it->second = R(it->second + t);
        }
      acc = std::move(nxt);
    }
    for (const auto& [mono, c] : acc) out(pos.at(mono), static_cast<int>(j)) = c;
  }
  return out;
}

template <class R>
Mat<R> wedge_power_matrix(const Mat<R>& M, int k) {
  const int r = M.rows;
  auto basis = wedge_basis(r, k);
  const R zero = ring_zero_like(M(0, 0));
  Mat<R> out(static_cast<int>(basis.size()), static_cast<int>(basis.size()), zero);
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < basis.size(); ++i) {
      Mat<R> sub(k, k, zero);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub(a, b) = M(basis[i][a], basis[j][b]);
      out(static_cast<int>(i), static_cast<int>(j)) = mat_det(sub);
    }
  return out;
}

template <class R>
Mat<R> kron(const Mat<R>& A, const Mat<R>& B) {
  const R zero = ring_zero_like(A(0, 0));
  Mat<R> out(A.rows * B.rows, A.cols * B.cols, zero);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      if (ring_is_zero(A(i, j))) continue;
      for (int p = 0; p < B.rows; ++p)
        for (int q = 0; q < B.cols; ++q)
          out(i * B.rows + p, j * B.cols + q) = R(A(i, j) * B(p, q));
    }
  return out;
}

template <class R>
Mat<R> action_matrix_node(const RepPtr& e, int g, const Mat<R>& a, const R& nu) {
  using Kind = RepExpr::Kind;
  const R one = ring_one_like(a(0, 0));
  switch (e->kind) {
    case Kind::Std:
      return a;
    case Kind::Trivial: {
      Mat<R> m(1, 1, one);
      return m;
    }
    case Kind::DetPower: {
      Mat<R> m(1, 1, ring_pow(mat_det(a), e->k, a(0, 0)));
      return m;
    }
    case Kind::SimTwist: {
      Mat<R> m(1, 1, ring_pow(nu, e->k, a(0, 0)));
      return m;
    }
    case Kind::Dual: {
      Mat<R> M = action_matrix_node(e->lhs, g, a, nu);
      auto inv = mat_inverse(M);
      if (!inv) throw NotInvertible("Dual node needs an invertible action matrix");
      return inv->transpose();
    }
    case Kind::Sym:
      return sym_power_matrix(action_matrix_node(e->lhs, g, a, nu), e->k);
    case Kind::Wedge:
      return wedge_power_matrix(action_matrix_node(e->lhs, g, a, nu), e->k);
    case Kind::Tensor:
      return kron(action_matrix_node(e->lhs, g, a, nu), action_matrix_node(e->rhs, g, a, nu));
  }
  throw DomainError("BadRep", "unknown node kind");
}

}  // namespace detail

/// Matrix of rho(a, nu) on the canonical ordered basis, over any
/// commutative ring R.
template <class R>
Mat<R> group_action_matrix(const Representation& rho, const Mat<R>& a, const R& nu) {
  return detail::action_matrix_node(rho.expr, rho.g, a, nu);
}

template <class R>
std::vector<R> group_action(const Representation& rho, const Mat<R>& a, const R& nu,
                            const std::vector<R>& w) {
  Mat<R> M = group_action_matrix(rho, a, nu);
  std::vector<R> out(w.size(), ring_zero_like(a(0, 0)));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      if (ring_is_zero(M(i, j)) || ring_is_zero(w[j])) continue;
      out[i] = R(out[i] + M(i, j) * w[j]);
    }
  return out;
}

/// d rho(X) computed over the dual numbers R[eps]/(eps^2) at a = 1 + eps X,
/// nu = 1; no hand-coded differential rules.
template <class R>
Mat<R> lie_action_matrix(const Representation& rho, const Mat<R>& X) {
  const R zero = ring_zero_like(X(0, 0));
  const R one = ring_one_like(X(0, 0));
  Mat<Dual<R>> A(X.rows, X.cols, Dual<R>{zero, zero});
  for (int i = 0; i < X.rows; ++i)
    for (int j = 0; j < X.cols; ++j) A(i, j) = Dual<R>{i == j ? one : zero, X(i, j)};
  Mat<Dual<R>> M = detail::action_matrix_node(rho.expr, rho.g, A, Dual<R>{one, zero});
  Mat<R> out(M.rows, M.cols, zero);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) out(i, j) = M(i, j).b;
  return out;
}

template <class R>
std::vector<R> lie_action(const Representation& rho, const Mat<R>& X, const std::vector<R>& w) {
  Mat<R> M = lie_action_matrix(rho, X);
  std::vector<R> out(w.size(), ring_zero_like(X(0, 0)));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      if (ring_is_zero(M(i, j)) || ring_is_zero(w[j])) continue;
      out[i] = R(out[i] + M(i, j) * w[j]);
    }
  return out;
}

/// Highest weight vector for the supported shapes (Sym/DetPower/SimTwist
/// towers over Std).  Throws Unsupported for Dual/Wedge/Tensor nodes; the
/// caller supplies the vector by hand there.
std::vector<Rat> highest_weight_vector(const Representation& rho);

}  // namespace igusa
