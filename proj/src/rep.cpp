#include "igusa/rep.hpp"

#include <algorithm>

namespace igusa {

namespace {

RepPtr make(RepExpr::Kind k, int n, RepPtr a, RepPtr b) {
  auto e = std::make_shared<RepExpr>();
  e->kind = k;
  e->k = n;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

RepPtr rep_std() { return make(RepExpr::Kind::Std, 0, nullptr, nullptr); }
RepPtr rep_trivial() { return make(RepExpr::Kind::Trivial, 0, nullptr, nullptr); }
RepPtr rep_dual(RepPtr r) { return make(RepExpr::Kind::Dual, 0, std::move(r), nullptr); }
RepPtr rep_sym(int k, RepPtr r) {
  if (k < 0) throw DomainError("BadRep", "Sym order must be >= 0");
  return make(RepExpr::Kind::Sym, k, std::move(r), nullptr);
}
RepPtr rep_wedge(int k, RepPtr r) {
  if (k < 0) throw DomainError("BadRep", "Wedge order must be >= 0");
  return make(RepExpr::Kind::Wedge, k, std::move(r), nullptr);
}
RepPtr rep_tensor(RepPtr a, RepPtr b) {
  return make(RepExpr::Kind::Tensor, 0, std::move(a), std::move(b));
}
RepPtr rep_det(int m) { return make(RepExpr::Kind::DetPower, m, nullptr, nullptr); }
RepPtr rep_sim(int m) { return make(RepExpr::Kind::SimTwist, m, nullptr, nullptr); }

bool rep_equal(const RepPtr& a, const RepPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->k != b->k) return false;
  return rep_equal(a->lhs, b->lhs) && rep_equal(a->rhs, b->rhs);
}

std::string rep_key(const RepPtr& r) {
  using Kind = RepExpr::Kind;
  switch (r->kind) {
    case Kind::Std:
      return "std";
    case Kind::Trivial:
      return "1";
    case Kind::Dual:
      return "dual(" + rep_key(r->lhs) + ")";
    case Kind::Sym:
      return "sym^" + std::to_string(r->k) + "(" + rep_key(r->lhs) + ")";
    case Kind::Wedge:
      return "wedge^" + std::to_string(r->k) + "(" + rep_key(r->lhs) + ")";
    case Kind::Tensor:
      return "(" + rep_key(r->lhs) + ")x(" + rep_key(r->rhs) + ")";
    case Kind::DetPower:
      return "det^" + std::to_string(r->k);
    case Kind::SimTwist:
      return "nu^" + std::to_string(r->k);
  }
  return "?";
}

long rep_rank(const RepPtr& r, int g) {
  using Kind = RepExpr::Kind;
  switch (r->kind) {
    case Kind::Std:
      return g;
    case Kind::Trivial:
    case Kind::DetPower:
    case Kind::SimTwist:
      return 1;
    case Kind::Dual:
      return rep_rank(r->lhs, g);
    case Kind::Sym:
      return binom(rep_rank(r->lhs, g) + r->k - 1, r->k);
    case Kind::Wedge:
      return binom(rep_rank(r->lhs, g), r->k);
    case Kind::Tensor:
      return rep_rank(r->lhs, g) * rep_rank(r->rhs, g);
  }
  return 0;
}

std::vector<std::vector<int>> sym_basis(int r, int k) {
  // sorted multisets of {0..r-1} of size k in lexicographic order
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == r - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  return out;
}

std::vector<std::vector<int>> wedge_basis(int r, int k) {
  std::vector<std::vector<int>> out;
  if (k > r) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == r - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<std::string> rep_labels(const RepPtr& r, int g) {
  using Kind = RepExpr::Kind;
  switch (r->kind) {
    case Kind::Std: {
      std::vector<std::string> out;
      for (int i = 1; i <= g; ++i) out.push_back("e" + std::to_string(i));
      return out;
    }
    case Kind::Trivial:
      return {"1"};
    case Kind::DetPower:
      return {"det^" + std::to_string(r->k)};
    case Kind::SimTwist:
      return {"nu^" + std::to_string(r->k)};
    case Kind::Dual: {
      auto in = rep_labels(r->lhs, g);
      for (auto& s : in) s += "*";
      return in;
    }
    case Kind::Sym: {
      auto in = rep_labels(r->lhs, g);
      std::vector<std::string> out;
      for (const auto& mono : sym_basis(static_cast<int>(in.size()), r->k)) {
        std::string s;
        for (size_t i = 0; i < mono.size();) {
          size_t j = i;
          while (j < mono.size() && mono[j] == mono[i]) ++j;
          if (!s.empty()) s += "*";
          s += in[mono[i]];
          if (j - i > 1) s += "^" + std::to_string(j - i);
          i = j;
        }
        out.push_back(s.empty() ? "1" : s);
      }
      return out;
    }
    case Kind::Wedge: {
      auto in = rep_labels(r->lhs, g);
      std::vector<std::string> out;
      for (const auto& sub : wedge_basis(static_cast<int>(in.size()), r->k)) {
        std::string s;
        for (size_t i = 0; i < sub.size(); ++i) {
          if (i) s += "/\\";
          s += in[sub[i]];
        }
        out.push_back(s.empty() ? "1" : s);
      }
      return out;
    }
    case Kind::Tensor: {
      auto la = rep_labels(r->lhs, g);
      auto lb = rep_labels(r->rhs, g);
      std::vector<std::string> out;
      for (const auto& x : la)
        for (const auto& y : lb) out.push_back(x + "(x)" + y);
      return out;
    }
  }
  return {};
}

namespace {

long hw_index(const RepPtr& e, int g) {
  using Kind = RepExpr::Kind;
  switch (e->kind) {
    case Kind::Std:
      return 0;  // e_1
    case Kind::Trivial:
    case Kind::DetPower:
    case Kind::SimTwist:
      return 0;
    case Kind::Sym: {
      long h = hw_index(e->lhs, g);
      long r = rep_rank(e->lhs, g);
      auto basis = sym_basis(static_cast<int>(r), e->k);
      std::vector<int> mono(e->k, static_cast<int>(h));
      auto it = std::lower_bound(basis.begin(), basis.end(), mono);
      return it - basis.begin();
    }
    default:
      throw Unsupported("highest_weight_vector: tree contains Dual/Wedge/Tensor");
  }
}

}  // namespace

std::vector<Rat> highest_weight_vector(const Representation& rho) {
  long idx = hw_index(rho.expr, rho.g);
  std::vector<Rat> v(rho.rank, Rat(0));
  v[idx] = Rat(1);
  return v;
}

}  // namespace igusa
