#include "fibwise/sset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fibwise {

std::string value_key(const Value& v) {
  std::ostringstream os;
  os << v.s.dim << ':' << v.s.idx << ':' << v.op.str();
  return os.str();
}

int SSet::total_size() const {
  int n = 0;
  for (auto& lv : levels_) n += static_cast<int>(lv.size());
  return n;
}

std::vector<int> SSet::census() const {
  std::vector<int> c;
  for (auto& lv : levels_) c.push_back(static_cast<int>(lv.size()));
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

SimplexRef SSet::by_name(const std::string& n) const {
  auto it = names_.find(n);
  if (it == names_.end())
    throw std::invalid_argument("no simplex named " + n);
  return it->second;
}

Value SSet::face(const Value& v, int i) const {
  if (v.dim() == 0) throw std::invalid_argument("face of a vertex");
  auto fp = DegOp::face_past(i, v.op, v.s.dim);
  if (!fp.face) return Value{fp.op, v.s};
  const Value& stored = simplex(v.s).faces[*fp.face];
  return Value{fp.op.after(stored.op, stored.s.dim), stored.s};
}

Value SSet::degeneracy(const Value& v, int i) const {
  return Value{DegOp::single(i).after(v.op, v.s.dim), v.s};
}

void SSet::ensure_values(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (value_cache_.count(d)) return;
  std::vector<Value> vals;
  for (int k = 0; k <= d && k < static_cast<int>(levels_.size()); ++k) {
    const auto& ops = DegOp::all(k, d);
    for (int j = 0; j < static_cast<int>(levels_[k].size()); ++j)
      for (const auto& op : ops)
        vals.push_back(Value{op, SimplexRef{k, j}});
  }
  std::unordered_map<std::string, int> index;
  for (int j = 0; j < static_cast<int>(vals.size()); ++j)
    index[value_key(vals[j])] = j;
  value_cache_.emplace(d, std::move(vals));
  value_index_.emplace(d, std::move(index));
}

const std::vector<Value>& SSet::values(int d) const {
  if (truncated() && d > trunc_)
    throw std::invalid_argument("values beyond truncation bound");
  ensure_values(d);
  std::lock_guard<std::mutex> lock(mu_);
  return value_cache_.at(d);
}

int SSet::value_index(const Value& v) const {
  int d = v.dim();
  ensure_values(d);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = value_index_.at(d).find(value_key(v));
  if (it == value_index_.at(d).end())
    throw std::invalid_argument("foreign value");
  return it->second;
}

SimplexRef SSetBuilder::add(int dim, const std::string& name) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (names_.count(name))
    throw std::invalid_argument("duplicate simplex name " + name);
  if (dim >= static_cast<int>(levels_.size())) levels_.resize(dim + 1);
  SimplexRef r{dim, static_cast<int>(levels_[dim].size())};
  levels_[dim].push_back(SSet::Simplex{name, std::vector<Value>(dim + 1)});
  for (auto& f : levels_[dim].back().faces) f.s = SimplexRef{};
  names_[name] = r;
  return r;
}

void SSetBuilder::set_face(SimplexRef s, int i, Value v) {
  if (i < 0 || i > s.dim) throw std::invalid_argument("face index range");
  levels_[s.dim][s.idx].faces[i] = v;
}

SSetPtr SSetBuilder::build(int trunc) {
  auto out = std::make_shared<SSet>();
  out->levels_ = std::move(levels_);
  out->names_ = std::move(names_);
  while (!out->levels_.empty() && out->levels_.back().empty())
    out->levels_.pop_back();
  out->trunc_ = trunc;
  const SSet& X = *out;
  int top = X.dim();
  // every face assignment present, in normal form, of the right dimension
  for (int d = 1; d <= top; ++d) {
    for (int j = 0; j < X.level_size(d); ++j) {
      const auto& sx = X.levels_[d][j];
      if (static_cast<int>(sx.faces.size()) != d + 1)
        throw std::invalid_argument("missing face data on " + sx.name);
      for (int i = 0; i <= d; ++i) {
        const Value& f = sx.faces[i];
        if (f.s.dim < 0 || f.s.dim > X.dim() ||
            f.s.idx >= X.level_size(f.s.dim))
          throw std::invalid_argument("face target missing on " + sx.name);
        if (f.dim() != d - 1)
          throw std::invalid_argument("face dimension mismatch on " + sx.name);
      }
    }
  }
  // simplicial identities d_i d_j = d_{j-1} d_i for i < j, exhaustively
  for (int d = 2; d <= top; ++d) {
    for (int j = 0; j < X.level_size(d); ++j) {
      Value v = SSet::pure(SimplexRef{d, j});
      for (int b = 1; b <= d; ++b)
        for (int a = 0; a < b; ++a) {
          Value lhs = X.face(X.face(v, b), a);
          Value rhs = X.face(X.face(v, a), b - 1);
          if (lhs != rhs)
            throw std::invalid_argument("simplicial identity fails on " +
                                        X.levels_[d][j].name);
        }
    }
  }
  return out;
}

}  // namespace fibwise
