#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fibwise/degop.hpp"

namespace fibwise {

class SSet;
using SSetPtr = std::shared_ptr<const SSet>;

/// Reference to a nondegenerate simplex of a fixed SSet.
struct SimplexRef {
  int dim = -1;
  int idx = -1;
  bool operator==(const SimplexRef& o) const {
    return dim == o.dim && idx == o.idx;
  }
  bool operator!=(const SimplexRef& o) const { return !(*this == o); }
  bool operator<(const SimplexRef& o) const {
    return dim != o.dim ? dim < o.dim : idx < o.idx;
  }
};

/// A simplex value in Eilenberg-Zilber normal form: a degeneracy operator
/// applied to a nondegenerate simplex.
struct Value {
  DegOp op;
  SimplexRef s;
  int dim() const { return s.dim + op.rank(); }
  bool pure() const { return op.is_identity(); }
  bool operator==(const Value& o) const { return op == o.op && s == o.s; }
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const {
    return s != o.s ? s < o.s : op < o.op;
  }
};

/// Finite simplicial set storing only nondegenerate simplices; every face is
/// a Value.  Immutable after construction.  When trunc >= 0 the object is a
/// truncation: face data is only meaningful up to that dimension.
class SSet {
 public:
  struct Simplex {
    std::string name;
    std::vector<Value> faces;  // d_0 .. d_dim
  };

  int dim() const { return static_cast<int>(levels_.size()) - 1; }
  bool truncated() const { return trunc_ >= 0; }
  int trunc() const { return trunc_; }
  /// Largest dimension at which level data is definitive.
  int reach() const { return truncated() ? trunc_ : dim(); }
  bool empty() const { return levels_.empty(); }

  int level_size(int d) const {
    return d >= 0 && d < static_cast<int>(levels_.size())
               ? static_cast<int>(levels_[d].size())
               : 0;
  }
  int total_size() const;
  std::vector<int> census() const;

  const Simplex& simplex(const SimplexRef& r) const {
    return levels_[r.dim][r.idx];
  }
  const std::string& name(const SimplexRef& r) const {
    return simplex(r).name;
  }
  SimplexRef by_name(const std::string& n) const;

  /// d_i of a value, in normal form.
  Value face(const Value& v, int i) const;
  /// s_i of a value.
  Value degeneracy(const Value& v, int i) const;
  bool deg_at(const Value& v, int i) const { return v.op.deg_at(i, v.s.dim); }
  /// For v in the image of s_i, the unique w with s_i w = v.
  Value strip(const Value& v, int i) const { return face(v, i); }

  /// All d-dimensional simplex values (degenerate ones included).
  const std::vector<Value>& values(int d) const;
  /// Index of a value within values(d), for fast lookups.
  int value_index(const Value& v) const;

  static Value pure(SimplexRef r) { return Value{DegOp(), r}; }

 private:
  friend class SSetBuilder;
  std::vector<std::vector<Simplex>> levels_;
  std::unordered_map<std::string, SimplexRef> names_;
  int trunc_ = -1;
  // per level: value enumeration + index, built lazily (node-based maps keep
  // references stable under concurrent growth; guarded by mu_)
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Value>> value_cache_;
  mutable std::map<int, std::unordered_map<std::string, int>> value_index_;
  void ensure_values(int d) const;
};

std::string value_key(const Value& v);

/// Incremental construction; build() validates normal form and all simplicial
/// identities below the truncation bound.
class SSetBuilder {
 public:
  SimplexRef add(int dim, const std::string& name);
  void set_face(SimplexRef s, int i, Value v);
  /// Convenience: face by pure target.
  void set_face(SimplexRef s, int i, SimplexRef target) {
    set_face(s, i, Value{DegOp(), target});
  }
  SSetPtr build(int trunc = -1);

 private:
  std::vector<std::vector<SSet::Simplex>> levels_;
  std::unordered_map<std::string, SimplexRef> names_;
};

}  // namespace fibwise
