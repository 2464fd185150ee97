#include "fibwise/smap.hpp"

#include <stdexcept>

namespace fibwise {

SMap SMap::trusted(SSetPtr src, SSetPtr tgt,
                   std::vector<std::vector<Value>> assign) {
  SMap m;
  m.src_ = std::move(src);
  m.tgt_ = std::move(tgt);
  m.assign_ = std::move(assign);
  return m;
}

SMap SMap::build(SSetPtr src, SSetPtr tgt,
                 std::vector<std::vector<Value>> assign) {
  SMap m = trusted(std::move(src), std::move(tgt), std::move(assign));
  m.validate();
  return m;
}

void SMap::validate() const {
  const SSet& X = *src_;
  int top = X.dim();
  if (X.truncated()) top = std::min(top, X.trunc());
  // maps into a truncation are partial: defined up to the target bound
  if (tgt_->truncated()) top = std::min(top, tgt_->trunc());
  if (static_cast<int>(assign_.size()) < top + 1 && top >= 0)
    throw std::invalid_argument("smap: assignment missing levels");
  for (int d = 0; d <= top; ++d) {
    if (static_cast<int>(assign_[d].size()) != X.level_size(d))
      throw std::invalid_argument("smap: assignment level size mismatch");
    for (int j = 0; j < X.level_size(d); ++j) {
      const Value& img = assign_[d][j];
      if (img.dim() != d)
        throw std::invalid_argument("smap: image dimension mismatch");
      // face compatibility
      for (int i = 0; i <= d && d > 0; ++i) {
        Value lhs = tgt_->face(img, i);
        Value rhs = apply(X.face(SSet::pure(SimplexRef{d, j}), i));
        if (lhs != rhs)
          throw std::invalid_argument("smap: does not commute with d_" +
                                      std::to_string(i) + " on " +
                                      X.name(SimplexRef{d, j}));
      }
    }
  }
}

SMap SMap::identity(SSetPtr X) {
  std::vector<std::vector<Value>> assign(X->dim() + 1);
  for (int d = 0; d <= X->dim(); ++d)
    for (int j = 0; j < X->level_size(d); ++j)
      assign[d].push_back(SSet::pure(SimplexRef{d, j}));
  return trusted(X, X, std::move(assign));
}

bool SMap::is_identity_map() const {
  if (src_.get() != tgt_.get()) return false;
  for (int d = 0; d < static_cast<int>(assign_.size()); ++d)
    for (int j = 0; j < static_cast<int>(assign_[d].size()); ++j) {
      const Value& v = assign_[d][j];
      if (!v.pure() || v.s.dim != d || v.s.idx != j) return false;
    }
  return true;
}

Value SMap::apply(const Value& v) const {
  const Value& a = assign_[v.s.dim][v.s.idx];
  if (v.op.is_identity()) return a;
  return Value{v.op.after(a.op, a.s.dim), a.s};
}

SMap SMap::compose(const SMap& g, const SMap& f) {
  if (g.src_.get() != f.tgt_.get())
    throw std::invalid_argument("compose: type mismatch");
  std::vector<std::vector<Value>> assign(f.assign_.size());
  for (size_t d = 0; d < f.assign_.size(); ++d) {
    assign[d].reserve(f.assign_[d].size());
    for (const auto& v : f.assign_[d]) assign[d].push_back(g.apply(v));
  }
  return trusted(f.src_, g.tgt_, std::move(assign));
}

SMap SMap::constant(SSetPtr src, SSetPtr tgt, SimplexRef vertex) {
  if (vertex.dim != 0) throw std::invalid_argument("constant: need a vertex");
  std::vector<std::vector<Value>> assign(src->dim() + 1);
  for (int d = 0; d <= src->dim(); ++d) {
    DegOp op = d == 0 ? DegOp() : [&] {
      std::vector<int> idx;
      for (int i = d - 1; i >= 0; --i) idx.push_back(i);
      return DegOp(idx);
    }();
    for (int j = 0; j < src->level_size(d); ++j)
      assign[d].push_back(Value{op, vertex});
  }
  return trusted(std::move(src), std::move(tgt), std::move(assign));
}

bool SMap::is_mono() const {
  // a map of simplicial sets is a monomorphism iff no two distinct
  // nondegenerate simplices have images with the same nondegenerate part
  std::unordered_map<std::string, int> seen;
  for (int d = 0; d < static_cast<int>(assign_.size()); ++d)
    for (const auto& v : assign_[d]) {
      std::string key =
          std::to_string(v.s.dim) + ":" + std::to_string(v.s.idx);
      if (seen.count(key)) return false;
      seen[key] = 1;
    }
  return true;
}

std::optional<SMap> SMap::inverse() const {
  const SSet& X = *src_;
  const SSet& Y = *tgt_;
  int top = std::max(X.dim(), Y.dim());
  std::vector<std::vector<Value>> inv(Y.dim() + 1);
  for (int d = 0; d <= Y.dim(); ++d)
    inv[d].assign(Y.level_size(d), Value{});
  std::vector<std::vector<bool>> hit(Y.dim() + 1);
  for (int d = 0; d <= Y.dim(); ++d) hit[d].assign(Y.level_size(d), false);
  for (int d = 0; d <= top; ++d) {
    if (X.level_size(d) != Y.level_size(d)) return std::nullopt;
    for (int j = 0; j < X.level_size(d); ++j) {
      const Value& v = assign_[d][j];
      if (!v.pure() || v.s.dim != d) return std::nullopt;
      if (hit[d][v.s.idx]) return std::nullopt;
      hit[d][v.s.idx] = true;
      inv[d][v.s.idx] = SSet::pure(SimplexRef{d, j});
    }
  }
  try {
    return SMap::build(tgt_, src_, std::move(inv));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SMap classifying_map(SSetPtr simplex_n, SSetPtr X, const Value& v) {
  // simplex_n must be standard(n) with subset-named simplices
  int n = v.dim();
  const SSet& D = *simplex_n;
  if (D.dim() != n) throw std::invalid_argument("classifying: dim mismatch");
  std::vector<std::vector<Value>> assign(n + 1);
  for (int d = 0; d <= n; ++d) {
    assign[d].reserve(D.level_size(d));
    for (int j = 0; j < D.level_size(d); ++j) {
      const std::string& nm = D.name(SimplexRef{d, j});
      // strip the missing vertices off v, largest face index first
      std::vector<bool> present(n + 1, false);
      for (char c : nm) present[c - '0'] = true;
      Value cur = v;
      for (int m = n; m >= 0; --m)
        if (!present[m]) cur = X->face(cur, m);
      assign[d].push_back(cur);
    }
  }
  return SMap::build(std::move(simplex_n), std::move(X), std::move(assign));
}

namespace {
// value of standard(n) corresponding to a monotone vertex map [d] -> [n]
Value standard_value(const SSet& target, const std::vector<int>& g) {
  std::vector<int> img;
  for (int x : g)
    if (img.empty() || img.back() != x) img.push_back(x);
  std::string nm;
  for (int x : img) nm += static_cast<char>('0' + x);
  std::vector<int> f(g.size());
  for (size_t j = 0; j < g.size(); ++j) {
    int p = 0;
    while (img[p] != g[j]) ++p;
    f[j] = p;
  }
  return Value{DegOp::from_surjection(f), target.by_name(nm)};
}

SMap simplex_operator_map(SSetPtr from, SSetPtr to,
                          const std::function<int(int)>& vertex_map) {
  const SSet& D = *from;
  std::vector<std::vector<Value>> assign(D.dim() + 1);
  for (int d = 0; d <= D.dim(); ++d)
    for (int j = 0; j < D.level_size(d); ++j) {
      const std::string& nm = D.name(SimplexRef{d, j});
      std::vector<int> g;
      for (char c : nm) g.push_back(vertex_map(c - '0'));
      assign[d].push_back(standard_value(*to, g));
    }
  return SMap::build(std::move(from), std::move(to), std::move(assign));
}
}  // namespace

SMap coface_map(SSetPtr from, SSetPtr to, int i) {
  return simplex_operator_map(std::move(from), std::move(to),
                              [i](int v) { return v < i ? v : v + 1; });
}

SMap codegeneracy_map(SSetPtr from, SSetPtr to, int i) {
  return simplex_operator_map(std::move(from), std::move(to),
                              [i](int v) { return v <= i ? v : v - 1; });
}

}  // namespace fibwise
