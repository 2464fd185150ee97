#include "fibwise/rawsset.hpp"

#include <functional>
#include <stdexcept>

namespace fibwise {

int RawSSet::add(int level, const std::string& key) {
  if (level < 0 || level > bound_)
    throw std::invalid_argument("rawsset: level out of range");
  auto it = index_[level].find(key);
  if (it != index_[level].end()) return it->second;
  int idx = static_cast<int>(levels_[level].size());
  levels_[level].push_back(
      Elem{key, std::vector<int>(level + 1, -1),
           std::vector<int>(level < bound_ ? level + 1 : 0, -1)});
  index_[level][key] = idx;
  return idx;
}

int RawSSet::index_of(int level, const std::string& key) const {
  auto it = index_[level].find(key);
  if (it == index_[level].end())
    throw std::invalid_argument("rawsset: unknown key " + key);
  return it->second;
}

bool RawSSet::has(int level, const std::string& key) const {
  return index_[level].count(key) > 0;
}

void RawSSet::set_face(int level, int idx, int i, int target_idx) {
  levels_[level][idx].faces[i] = target_idx;
}

void RawSSet::set_degeneracy(int level, int idx, int i, int target_idx) {
  levels_[level][idx].degs[i] = target_idx;
}

RawSSet::Normal RawSSet::normalize(const std::string& prefix) const {
  // detect degenerate elements: images of the recorded degeneracies
  // degen[l][e] = (i, parent) for some e = s_i(parent), or (-1, -1)
  std::vector<std::vector<std::pair<int, int>>> degen(bound_ + 1);
  for (int l = 0; l <= bound_; ++l)
    degen[l].assign(levels_[l].size(), {-1, -1});
  for (int l = 0; l + 1 <= bound_; ++l)
    for (int e = 0; e < size(l); ++e)
      for (int i = 0; i <= l; ++i) {
        int t = levels_[l][e].degs[i];
        if (t < 0) throw std::logic_error("rawsset: degeneracy unset");
        if (degen[l + 1][t].first < 0) degen[l + 1][t] = {i, e};
      }

  SSetBuilder b;
  std::vector<std::vector<int>> nondeg_idx(bound_ + 1);
  std::vector<std::vector<int>> raw_of(bound_ + 1);
  for (int l = 0; l <= bound_; ++l) {
    nondeg_idx[l].assign(levels_[l].size(), -1);
    int count = 0;
    for (int e = 0; e < size(l); ++e)
      if (degen[l][e].first < 0) {
        b.add(l, prefix + std::to_string(l) + "_" + std::to_string(count++));
        nondeg_idx[l][e] = count - 1;
        raw_of[l].push_back(e);
      }
  }

  std::vector<std::vector<Value>> value_of(bound_ + 1);
  std::vector<std::vector<char>> done(bound_ + 1);
  for (int l = 0; l <= bound_; ++l) {
    value_of[l].assign(levels_[l].size(), Value{});
    done[l].assign(levels_[l].size(), 0);
  }
  std::function<Value(int, int)> nf = [&](int l, int e) -> Value {
    if (done[l][e]) return value_of[l][e];
    Value out;
    if (degen[l][e].first < 0) {
      out = SSet::pure(SimplexRef{l, nondeg_idx[l][e]});
    } else {
      auto [i, parent] = degen[l][e];
      Value w = nf(l - 1, parent);
      out = Value{DegOp::single(i).after(w.op, w.s.dim), w.s};
    }
    done[l][e] = 1;
    value_of[l][e] = out;
    return out;
  };

  for (int l = 1; l <= bound_; ++l)
    for (int e = 0; e < size(l); ++e) {
      if (nondeg_idx[l][e] < 0) continue;
      for (int i = 0; i <= l; ++i) {
        int t = levels_[l][e].faces[i];
        if (t < 0) throw std::logic_error("rawsset: face unset");
        b.set_face(SimplexRef{l, nondeg_idx[l][e]}, i, nf(l - 1, t));
      }
    }

  Normal out;
  out.space = b.build(bound_);
  out.value_of.resize(bound_ + 1);
  for (int l = 0; l <= bound_; ++l)
    for (int e = 0; e < size(l); ++e) out.value_of[l].push_back(nf(l, e));
  out.raw_of = std::move(raw_of);
  return out;
}

}  // namespace fibwise
