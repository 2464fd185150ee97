#include "fibwise/limits.hpp"

#include <stdexcept>

#include "fibwise/sset_std.hpp"

namespace fibwise {

namespace {
std::string pair_key(const Value& a, const Value& b) {
  return value_key(a) + "|" + value_key(b);
}

// strip common degeneracies off a pair of equal-dimensional values
struct NormPair {
  DegOp op;
  Value a, b;  // jointly nondegenerate
};
NormPair normalize_pair(const SSet& A, const SSet& B, Value va, Value vb) {
  int d = va.dim();
  for (int i = 0; i < d; ++i) {
    if (A.deg_at(va, i) && B.deg_at(vb, i)) {
      NormPair inner = normalize_pair(A, B, A.strip(va, i), B.strip(vb, i));
      int base = inner.a.dim();
      return NormPair{DegOp::single(i).after(inner.op, base), inner.a,
                      inner.b};
    }
  }
  return NormPair{DegOp(), va, vb};
}
}  // namespace

Pullback::Pullback(const SMap& f, const SMap& g, const std::string& prefix) {
  A_ = f.src();
  B_ = g.src();
  if (f.tgt().get() != g.tgt().get())
    throw std::invalid_argument("pullback: shared codomain required");
  int bound = A_->dim() + B_->dim();
  int trunc = -1;
  if (A_->truncated()) trunc = A_->trunc();
  if (B_->truncated())
    trunc = trunc < 0 ? B_->trunc() : std::min(trunc, B_->trunc());
  if (trunc >= 0) bound = std::min(bound, trunc);
  if (A_->empty() || B_->empty()) bound = -1;

  SSetBuilder bld;
  pair_idx_.assign(std::max(bound + 1, 0), {});
  std::vector<std::vector<std::pair<Value, Value>>> pairs(
      std::max(bound + 1, 0));
  // jointly nondegenerate pairs: degeneracy position sets are disjoint, so
  // enumerate (nondeg a, nondeg b, interleaving) instead of value pairs
  for (int d = 0; d <= bound; ++d) {
    int count = 0;
    for (int k1 = 0; k1 <= std::min(d, A_->dim()); ++k1)
      for (int k2 = std::max(0, d - k1); k2 <= std::min(d, B_->dim()); ++k2)
        for (int ja = 0; ja < A_->level_size(k1); ++ja)
          for (int jb = 0; jb < B_->level_size(k2); ++jb) {
            // assign each position in [0, d-1] to: duplicate-in-a (need
            // d-k1), duplicate-in-b (need d-k2), or neither
            std::vector<int> sa, sb;
            std::function<void(int)> walk = [&](int pos) {
              if (static_cast<int>(sa.size()) > d - k1 ||
                  static_cast<int>(sb.size()) > d - k2)
                return;
              if (pos == d) {
                if (static_cast<int>(sa.size()) != d - k1 ||
                    static_cast<int>(sb.size()) != d - k2)
                  return;
                std::vector<int> ra(sa.rbegin(), sa.rend());
                std::vector<int> rb(sb.rbegin(), sb.rend());
                Value va{DegOp(ra), SimplexRef{k1, ja}};
                Value vb{DegOp(rb), SimplexRef{k2, jb}};
                if (!(f.apply(va) == g.apply(vb))) return;
                bld.add(d, prefix + std::to_string(d) + "_" +
                               std::to_string(count++));
                pair_idx_[d][pair_key(va, vb)] =
                    static_cast<int>(pairs[d].size());
                pairs[d].emplace_back(va, vb);
                return;
              }
              walk(pos + 1);  // neither
              sa.push_back(pos);
              walk(pos + 1);
              sa.pop_back();
              sb.push_back(pos);
              walk(pos + 1);
              sb.pop_back();
            };
            walk(0);
          }
  }
  // faces
  for (int d = 1; d <= bound; ++d)
    for (int j = 0; j < static_cast<int>(pairs[d].size()); ++j)
      for (int i = 0; i <= d; ++i) {
        Value fa = A_->face(pairs[d][j].first, i);
        Value fb = B_->face(pairs[d][j].second, i);
        NormPair np = normalize_pair(*A_, *B_, fa, fb);
        auto it = pair_idx_[d - 1 - np.op.rank()].find(pair_key(np.a, np.b));
        if (it == pair_idx_[d - 1 - np.op.rank()].end())
          throw std::logic_error("pullback: face pair missing");
        bld.set_face(SimplexRef{d, j}, i,
                     Value{np.op, SimplexRef{d - 1 - np.op.rank(), it->second}});
      }
  space_ = bld.build(trunc);

  // projections
  std::vector<std::vector<Value>> as1(space_->dim() + 1),
      as2(space_->dim() + 1);
  for (int d = 0; d <= space_->dim(); ++d)
    for (int j = 0; j < static_cast<int>(pairs[d].size()); ++j) {
      as1[d].push_back(pairs[d][j].first);
      as2[d].push_back(pairs[d][j].second);
    }
  pr1_ = SMap::build(space_, A_, std::move(as1));
  pr2_ = SMap::build(space_, B_, std::move(as2));
}

Value Pullback::pair_value(const Value& va, const Value& vb) const {
  if (va.dim() != vb.dim())
    throw std::invalid_argument("pair_value: dimension mismatch");
  NormPair np = normalize_pair(*A_, *B_, va, vb);
  int d = np.a.dim();
  auto it = pair_idx_[d].find(pair_key(np.a, np.b));
  if (it == pair_idx_[d].end())
    throw std::invalid_argument("pair_value: not a matching pair");
  return Value{np.op, SimplexRef{d, it->second}};
}

SMap Pullback::factor(const SMap& to_a, const SMap& to_b) const {
  const SSet& W = *to_a.src();
  std::vector<std::vector<Value>> assign(W.dim() + 1);
  for (int d = 0; d <= W.dim(); ++d)
    for (int j = 0; j < W.level_size(d); ++j)
      assign[d].push_back(
          pair_value(to_a.apply(SimplexRef{d, j}), to_b.apply(SimplexRef{d, j})));
  return SMap::build(to_a.src(), space_, std::move(assign));
}

Pullback product(SSetPtr A, SSetPtr B, const std::string& prefix) {
  SSetPtr pt = point();
  SMap ta = SMap::constant(std::move(A), pt, SimplexRef{0, 0});
  SMap tb = SMap::constant(std::move(B), pt, SimplexRef{0, 0});
  return Pullback(ta, tb, prefix);
}

SMap pullback_map(const Pullback& P, const Pullback& Q, const SMap& f,
                  const SMap& g) {
  return Q.factor(SMap::compose(f, P.pr1()), SMap::compose(g, P.pr2()));
}

}  // namespace fibwise
