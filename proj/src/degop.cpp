#include "fibwise/degop.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fibwise {

DegOp::DegOp(std::vector<int> indices) : idx_(std::move(indices)) {
  for (size_t i = 0; i + 1 < idx_.size(); ++i)
    if (idx_[i] <= idx_[i + 1])
      throw std::invalid_argument("DegOp indices must be strictly decreasing");
  for (int i : idx_)
    if (i < 0) throw std::invalid_argument("DegOp index negative");
}

std::vector<int> DegOp::surjection(int base_dim) const {
  // start from the identity of [base_dim] and apply s_{i_r}, ..., s_{i_1}
  std::vector<int> f(base_dim + 1);
  for (int j = 0; j <= base_dim; ++j) f[j] = j;
  for (auto it = idx_.rbegin(); it != idx_.rend(); ++it) {
    int i = *it;
    if (i >= static_cast<int>(f.size()))
      throw std::invalid_argument("DegOp index out of range for base dim");
    // s_i corresponds to sigma_i: [m+1] -> [m]; precompose the running map
    std::vector<int> g(f.size() + 1);
    for (size_t j = 0; j < g.size(); ++j) {
      int k = static_cast<int>(j) <= i ? static_cast<int>(j)
                                       : static_cast<int>(j) - 1;
      g[j] = f[k];
    }
    f = std::move(g);
  }
  return f;
}

DegOp DegOp::from_surjection(const std::vector<int>& f) {
  std::vector<int> idx;
  for (int j = static_cast<int>(f.size()) - 2; j >= 0; --j)
    if (f[j] == f[j + 1]) idx.push_back(j);
  for (size_t j = 0; j + 1 < f.size(); ++j)
    if (f[j + 1] - f[j] > 1 || f[j + 1] < f[j])
      throw std::invalid_argument("not a monotone surjection");
  if (!f.empty() && f.front() != 0)
    throw std::invalid_argument("not a monotone surjection");
  return DegOp(std::move(idx));
}

DegOp DegOp::after(const DegOp& other, int base_dim) const {
  if (other.is_identity()) return *this;
  if (is_identity()) return other;
  std::vector<int> g = other.surjection(base_dim);
  std::vector<int> f = surjection(base_dim + other.rank());
  // composite operator value: x ∘ surj(other) ∘ surj(this)
  std::vector<int> h(f.size());
  for (size_t j = 0; j < f.size(); ++j) h[j] = g[f[j]];
  return from_surjection(h);
}

bool DegOp::deg_at(int i, int base_dim) const {
  if (is_identity()) return false;
  std::vector<int> f = surjection(base_dim);
  if (i < 0 || i + 1 >= static_cast<int>(f.size())) return false;
  return f[i] == f[i + 1];
}

DegOp::FacePast DegOp::face_past(int i, const DegOp& op, int base_dim) {
  if (op.is_identity()) return {DegOp(), i};
  std::vector<int> f = op.surjection(base_dim);
  // compose with the coface delta_i : [m-1] -> [m]
  std::vector<int> g(f.size() - 1);
  for (size_t j = 0; j < g.size(); ++j)
    g[j] = f[static_cast<int>(j) < i ? j : j + 1];
  // factor g as (injection) ∘ (surjection)
  std::vector<bool> hit(base_dim + 1, false);
  for (int v : g) hit[v] = true;
  int missing = -1;
  for (int v = 0; v <= base_dim; ++v)
    if (!hit[v]) {
      missing = v;
      break;
    }
  if (missing < 0) return {from_surjection(g), std::nullopt};
  std::vector<int> h(g.size());
  for (size_t j = 0; j < g.size(); ++j) h[j] = g[j] < missing ? g[j] : g[j] - 1;
  return {from_surjection(h), missing};
}

std::string DegOp::str() const {
  if (is_identity()) return "-";
  std::ostringstream os;
  for (size_t j = 0; j < idx_.size(); ++j) {
    if (j) os << ',';
    os << idx_[j];
  }
  return os.str();
}

namespace {
void gen_surjections(int to, int from, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  int pos = static_cast<int>(cur.size());
  if (pos == to + 1) {
    if (cur.back() == from) out.push_back(cur);
    return;
  }
  int prev = pos == 0 ? 0 : cur.back();
  for (int v = prev; v <= prev + 1 && v <= from; ++v) {
    if (pos == 0 && v != 0) continue;
    // remaining steps must still be able to reach `from`
    if (from - v > to - pos) continue;
    cur.push_back(v);
    gen_surjections(to, from, cur, out);
    cur.pop_back();
  }
}
}  // namespace

const std::vector<DegOp>& DegOp::all(int from, int to) {
  static std::map<std::pair<int, int>, std::vector<DegOp>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(from, to);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> surs;
  if (to >= from && from >= 0) {
    std::vector<int> cur;
    gen_surjections(to, from, cur, surs);
  }
  std::vector<DegOp> ops;
  ops.reserve(surs.size());
  for (auto& f : surs) ops.push_back(from_surjection(f));
  return cache.emplace(key, std::move(ops)).first->second;
}

}  // namespace fibwise
