#include "fibwise/colimit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fibwise/sset_std.hpp"

namespace fibwise {

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};
}  // namespace

Colimit::Colimit(Diagram d, const std::string& prefix) : dia_(std::move(d)) {
  const auto& objs = dia_.objects;
  int bound = 0;
  int trunc = -1;
  for (const auto& o : objs) {
    bound = std::max(bound, o->dim());
    if (o->truncated()) {
      if (trunc >= 0 && trunc != o->trunc())
        throw std::invalid_argument("colimit: mixed truncation bounds");
      trunc = o->trunc();
    }
  }
  if (trunc >= 0) bound = std::min(bound, trunc);

  // global ids for (object, level, value-index)
  std::vector<std::vector<int>> base(objs.size());  // per object, per level
  std::vector<int> level_total(bound + 1, 0);
  std::vector<std::vector<std::vector<Value>>> vals(objs.size());
  for (size_t o = 0; o < objs.size(); ++o) {
    base[o].resize(bound + 1);
    vals[o].resize(bound + 1);
    for (int l = 0; l <= bound; ++l) {
      base[o][l] = level_total[l];
      vals[o][l] = objs[o]->values(l);
      level_total[l] += static_cast<int>(vals[o][l].size());
    }
  }
  auto gid = [&](size_t o, int l, const Value& v) {
    return base[o][l] + objs[o]->value_index(v);
  };

  std::vector<UnionFind> uf;
  uf.reserve(bound + 1);
  for (int l = 0; l <= bound; ++l) uf.emplace_back(level_total[l]);
  for (const auto& a : dia_.arrows) {
    for (int l = 0; l <= bound; ++l)
      for (const auto& v : vals[a.src][l])
        uf[l].merge(gid(a.src, l, v), gid(a.tgt, l, a.f.apply(v)));
  }

  // classes per level: representative id -> class index; record a pure
  // member (if any) and a degenerate member (if any) per class
  struct ClassInfo {
    int rep = -1;
    std::pair<size_t, Value> pure{SIZE_MAX, Value{}};    // (object, value)
    std::pair<size_t, Value> degen{SIZE_MAX, Value{}};
  };
  std::vector<std::vector<ClassInfo>> classes(bound + 1);
  std::vector<std::unordered_map<int, int>> class_of(bound + 1);
  for (int l = 0; l <= bound; ++l) {
    for (size_t o = 0; o < objs.size(); ++o)
      for (const auto& v : vals[o][l]) {
        int r = uf[l].find(gid(o, l, v));
        auto it = class_of[l].find(r);
        int ci;
        if (it == class_of[l].end()) {
          ci = static_cast<int>(classes[l].size());
          class_of[l][r] = ci;
          classes[l].push_back(ClassInfo{r, {SIZE_MAX, Value{}}, {SIZE_MAX, Value{}}});
        } else {
          ci = it->second;
        }
        auto& info = classes[l][ci];
        if (v.pure()) {
          if (info.pure.first == SIZE_MAX) info.pure = {o, v};
        } else if (info.degen.first == SIZE_MAX) {
          info.degen = {o, v};
        }
      }
  }

  // nondegenerate classes become simplices
  SSetBuilder b;
  std::vector<std::vector<int>> newidx(bound + 1);  // class -> simplex idx or -1
  for (int l = 0; l <= bound; ++l) {
    newidx[l].assign(classes[l].size(), -1);
    int count = 0;
    for (size_t c = 0; c < classes[l].size(); ++c) {
      if (classes[l][c].degen.first != SIZE_MAX) continue;  // degenerate class
      if (classes[l][c].pure.first == SIZE_MAX)
        throw std::logic_error("class without members");
      SimplexRef r =
          b.add(l, prefix + std::to_string(l) + "_" + std::to_string(count++));
      newidx[l][static_cast<int>(c)] = r.idx;
    }
  }

  // normal form of a class, memoized
  std::vector<std::vector<char>> done(bound + 1);
  std::vector<std::vector<Value>> nf(bound + 1);
  for (int l = 0; l <= bound; ++l) {
    done[l].assign(classes[l].size(), 0);
    nf[l].assign(classes[l].size(), Value{});
  }
  std::function<Value(int, int)> normal = [&](int l, int c) -> Value {
    if (done[l][c]) return nf[l][c];
    Value out;
    if (classes[l][c].degen.first == SIZE_MAX) {
      out = SSet::pure(SimplexRef{l, newidx[l][c]});
    } else {
      auto [o, v] = classes[l][c].degen;
      int i = v.op.top();
      Value w = objs[o]->strip(v, i);
      int cw = class_of[l - 1].at(uf[l - 1].find(gid(o, l - 1, w)));
      Value wn = normal(l - 1, cw);
      out = Value{DegOp::single(i).after(wn.op, wn.s.dim), wn.s};
    }
    done[l][c] = 1;
    nf[l][c] = out;
    return out;
  };

  auto class_at = [&](size_t o, int l, const Value& v) {
    return class_of[l].at(uf[l].find(gid(o, l, v)));
  };

  // faces of the new nondegenerate simplices
  for (int l = 1; l <= bound; ++l)
    for (size_t c = 0; c < classes[l].size(); ++c) {
      if (newidx[l][c] < 0) continue;
      auto [o, v] = classes[l][c].pure;
      for (int i = 0; i <= l; ++i) {
        Value fv = objs[o]->face(v, i);
        b.set_face(SimplexRef{l, newidx[l][c]}, i,
                   normal(l - 1, class_at(o, l - 1, fv)));
      }
    }

  space_ = b.build(trunc);

  for (size_t o = 0; o < objs.size(); ++o) {
    std::vector<std::vector<Value>> assign(objs[o]->dim() + 1);
    for (int l = 0; l <= objs[o]->dim(); ++l)
      for (int j = 0; j < objs[o]->level_size(l); ++j)
        assign[l].push_back(normal(l, class_at(o, l, SSet::pure(SimplexRef{l, j}))));
    legs_.push_back(SMap::build(objs[o], space_, std::move(assign)));
  }
}

SMap Colimit::factor(const std::vector<SMap>& cocone) const {
  if (cocone.size() != dia_.objects.size())
    throw std::invalid_argument("factor: wrong cocone size");
  SSetPtr W = cocone.front().tgt();
  const SSet& Q = *space_;
  std::vector<std::vector<Value>> assign(Q.dim() + 1);
  for (int l = 0; l <= Q.dim(); ++l) assign[l].assign(Q.level_size(l), Value{});
  std::vector<std::vector<bool>> got(Q.dim() + 1);
  for (int l = 0; l <= Q.dim(); ++l) got[l].assign(Q.level_size(l), false);
  for (size_t o = 0; o < dia_.objects.size(); ++o) {
    const SSet& X = *dia_.objects[o];
    for (int l = 0; l <= X.dim(); ++l)
      for (int j = 0; j < X.level_size(l); ++j) {
        Value img = legs_[o].apply(SimplexRef{l, j});
        if (!img.pure()) continue;
        Value w = cocone[o].apply(SimplexRef{l, j});
        if (got[img.s.dim][img.s.idx]) {
          if (!(assign[img.s.dim][img.s.idx] == w))
            throw std::invalid_argument("factor: cocone does not commute");
        } else {
          got[img.s.dim][img.s.idx] = true;
          assign[img.s.dim][img.s.idx] = w;
        }
      }
  }
  for (int l = 0; l <= Q.dim(); ++l)
    for (int j = 0; j < Q.level_size(l); ++j)
      if (!got[l][j]) throw std::logic_error("factor: uncovered simplex");
  return SMap::build(space_, std::move(W), std::move(assign));
}

Colimit coproduct(std::vector<SSetPtr> objects) {
  Diagram d;
  for (auto& o : objects) d.add(std::move(o));
  return Colimit(std::move(d));
}

Colimit pushout(const SMap& f, const SMap& g) {
  if (f.src().get() != g.src().get())
    throw std::invalid_argument("pushout: shared domain required");
  Diagram d;
  int a = d.add(f.src());
  int b_ = d.add(f.tgt());
  int c = d.add(g.tgt());
  d.arrow(a, b_, f);
  d.arrow(a, c, g);
  return Colimit(std::move(d));
}

Colimit coequalizer(const SMap& f, const SMap& g) {
  if (f.src().get() != g.src().get() || f.tgt().get() != g.tgt().get())
    throw std::invalid_argument("coequalizer: parallel pair required");
  Diagram d;
  int a = d.add(f.src());
  int b_ = d.add(f.tgt());
  d.arrow(a, b_, f);
  d.arrow(a, b_, g);
  return Colimit(std::move(d));
}

QuotientResult quotient(SSetPtr X, const SMap& incl) {
  SSetPtr pt = point();
  if (incl.src()->empty()) {
    Colimit co = coproduct({X, pt});
    Value bp = co.leg(1).apply(SimplexRef{0, 0});
    return QuotientResult{co.space(), co.leg(0), bp.s};
  }
  if (incl.tgt().get() != X.get())
    throw std::invalid_argument("quotient: inclusion target mismatch");
  SMap collapse = SMap::constant(incl.src(), pt, SimplexRef{0, 0});
  Diagram d;
  int a = d.add(incl.src());
  int x = d.add(X);
  int p = d.add(pt);
  d.arrow(a, x, incl);
  d.arrow(a, p, collapse);
  Colimit co(std::move(d));
  Value bp = co.leg(2).apply(SimplexRef{0, 0});
  return QuotientResult{co.space(), co.leg(1), bp.s};
}

SubcomplexResult subcomplex(SSetPtr X,
                            const std::function<bool(SimplexRef)>& keep) {
  SSetBuilder b;
  const SSet& S = *X;
  std::vector<std::vector<int>> idx(S.dim() + 1);
  for (int l = 0; l <= S.dim(); ++l) {
    idx[l].assign(S.level_size(l), -1);
    for (int j = 0; j < S.level_size(l); ++j)
      if (keep(SimplexRef{l, j}))
        idx[l][j] = b.add(l, S.name(SimplexRef{l, j})).idx;
  }
  for (int l = 1; l <= S.dim(); ++l)
    for (int j = 0; j < S.level_size(l); ++j) {
      if (idx[l][j] < 0) continue;
      for (int i = 0; i <= l; ++i) {
        Value f = S.face(SSet::pure(SimplexRef{l, j}), i);
        if (idx[f.s.dim][f.s.idx] < 0)
          throw std::invalid_argument("subcomplex: not face-closed");
        b.set_face(SimplexRef{l, idx[l][j]}, i,
                   Value{f.op, SimplexRef{f.s.dim, idx[f.s.dim][f.s.idx]}});
      }
    }
  SSetPtr sub = b.build(X->trunc());
  std::vector<std::vector<Value>> assign(sub->dim() + 1);
  for (int l = 0; l <= S.dim(); ++l)
    for (int j = 0; j < S.level_size(l); ++j)
      if (idx[l][j] >= 0) {
        if (static_cast<int>(assign.size()) <= l) assign.resize(l + 1);
        assign[l].push_back(SSet::pure(SimplexRef{l, j}));
      }
  return SubcomplexResult{sub, SMap::build(sub, X, std::move(assign))};
}

}  // namespace fibwise
