#include "fibwise/enumerate.hpp"

#include <stdexcept>

namespace fibwise {

namespace {

struct Searcher {
  const SSet& A;
  const SSet& B;
  SSetPtr Aptr, Bptr;
  const EnumOptions& opts;
  std::vector<std::vector<Value>> assign;
  std::vector<std::vector<char>> pinned;
  std::vector<SMap> out;
  bool existence_only = false;
  bool found = false;

  Searcher(SSetPtr a, SSetPtr b, const EnumOptions& o)
      : A(*a), B(*b), Aptr(a), Bptr(b), opts(o) {
    assign.resize(A.dim() + 1);
    pinned.resize(A.dim() + 1);
    for (int d = 0; d <= A.dim(); ++d) {
      assign[d].assign(A.level_size(d), Value{});
      pinned[d].assign(A.level_size(d), 0);
    }
    for (const auto& [r, v] : opts.pins) {
      pinned[r.dim][r.idx] = 1;
      assign[r.dim][r.idx] = v;
    }
  }

  Value apply_partial(const Value& v) const {
    const Value& a = assign[v.s.dim][v.s.idx];
    if (v.op.is_identity()) return a;
    return Value{v.op.after(a.op, a.s.dim), a.s};
  }

  bool faces_ok(SimplexRef r, const Value& cand) const {
    for (int i = 0; i <= r.dim && r.dim > 0; ++i) {
      Value want = apply_partial(A.face(SSet::pure(r), i));
      if (!(B.face(cand, i) == want)) return false;
    }
    return true;
  }

  bool constraints_ok_at(int d) const {
    for (const auto& c : opts.constraints) {
      const SSet& K = c.pre ? *c.pre->src() : A;
      if (d > K.dim()) continue;
      for (int j = 0; j < K.level_size(d); ++j) {
        SimplexRef k{d, j};
        Value va = c.pre ? c.pre->apply(k) : SSet::pure(k);
        Value hb = apply_partial(va);
        Value lhs = c.post ? c.post->apply(hb) : hb;
        Value rhs = c.rhs.apply(k);
        if (!(lhs == rhs)) return false;
      }
    }
    return true;
  }

  void emit() {
    if (existence_only) {
      found = true;
      return;
    }
    out.push_back(SMap::trusted(Aptr, Bptr, assign));
    if (opts.limit && out.size() >= opts.limit) found = true;
  }

  void run(int d, int j) {
    if (found) return;
    if (d > A.dim()) {
      emit();
      return;
    }
    if (j >= A.level_size(d)) {
      if (!constraints_ok_at(d)) return;
      run(d + 1, 0);
      return;
    }
    SimplexRef r{d, j};
    if (pinned[d][j]) {
      if (!faces_ok(r, assign[d][j])) return;
      run(d, j + 1);
      return;
    }
    for (const auto& cand : B.values(d)) {
      if (!faces_ok(r, cand)) continue;
      assign[d][j] = cand;
      run(d, j + 1);
      if (found) return;
    }
    assign[d][j] = Value{};
  }
};

}  // namespace

std::vector<SMap> enumerate_maps(SSetPtr A, SSetPtr B,
                                 const EnumOptions& opts) {
  if (A->empty()) {
    std::vector<std::vector<Value>> empty_assign;
    return {SMap::trusted(A, B, std::move(empty_assign))};
  }
  if (B->truncated() && B->trunc() < A->dim())
    throw std::invalid_argument("enumerate_maps: target truncated too low");
  Searcher s(A, B, opts);
  s.run(0, 0);
  return std::move(s.out);
}

size_t count_maps(SSetPtr A, SSetPtr B, const EnumOptions& opts) {
  return enumerate_maps(std::move(A), std::move(B), opts).size();
}

bool exists_map(SSetPtr A, SSetPtr B, const EnumOptions& opts) {
  if (A->empty()) return true;
  Searcher s(std::move(A), std::move(B), opts);
  s.existence_only = true;
  s.run(0, 0);
  return s.found;
}

namespace {
struct IsoSearcher {
  const SSet& A;
  const SSet& B;
  SSetPtr Aptr, Bptr;
  const std::vector<std::pair<SMap, SMap>>& equiv;
  std::vector<std::vector<Value>> assign;
  std::vector<std::vector<char>> used;
  bool found = false;

  IsoSearcher(SSetPtr a, SSetPtr b,
              const std::vector<std::pair<SMap, SMap>>& e)
      : A(*a), B(*b), Aptr(a), Bptr(b), equiv(e) {
    assign.resize(A.dim() + 1);
    used.resize(A.dim() + 1);
    for (int d = 0; d <= A.dim(); ++d) {
      assign[d].assign(A.level_size(d), Value{});
      used[d].assign(B.level_size(d), 0);
    }
  }

  Value apply_partial(const Value& v) const {
    const Value& a = assign[v.s.dim][v.s.idx];
    if (v.op.is_identity()) return a;
    return Value{v.op.after(a.op, a.s.dim), a.s};
  }

  bool faces_ok(SimplexRef r, SimplexRef cand) const {
    for (int i = 0; i <= r.dim && r.dim > 0; ++i) {
      Value want = apply_partial(A.face(SSet::pure(r), i));
      if (!(B.face(SSet::pure(cand), i) == want)) return false;
    }
    return true;
  }

  bool equiv_ok_at(int d) const {
    for (const auto& [ga, gb] : equiv)
      for (int j = 0; j < A.level_size(d); ++j) {
        Value lhs = apply_partial(ga.apply(SimplexRef{d, j}));
        Value rhs = gb.apply(assign[d][j]);
        if (!(lhs == rhs)) return false;
      }
    return true;
  }

  void run(int d, int j) {
    if (found) return;
    if (d > A.dim()) {
      found = true;
      return;
    }
    if (j >= A.level_size(d)) {
      if (!equiv_ok_at(d)) return;
      run(d + 1, 0);
      return;
    }
    SimplexRef r{d, j};
    for (int m = 0; m < B.level_size(d); ++m) {
      if (used[d][m]) continue;
      if (!faces_ok(r, SimplexRef{d, m})) continue;
      used[d][m] = 1;
      assign[d][j] = SSet::pure(SimplexRef{d, m});
      run(d, j + 1);
      if (found) return;
      used[d][m] = 0;
    }
    assign[d][j] = Value{};
  }
};
}  // namespace

std::optional<SMap> find_iso(
    SSetPtr A, SSetPtr B,
    const std::vector<std::pair<SMap, SMap>>& equivariance) {
  if (A->dim() != B->dim() && !(A->empty() && B->empty())) return std::nullopt;
  for (int d = 0; d <= std::max(A->dim(), B->dim()); ++d)
    if (A->level_size(d) != B->level_size(d)) return std::nullopt;
  if (A->empty()) return SMap::trusted(A, B, {});
  IsoSearcher s(A, B, equivariance);
  s.run(0, 0);
  if (!s.found) return std::nullopt;
  return SMap::trusted(std::move(A), std::move(B), std::move(s.assign));
}

}  // namespace fibwise
