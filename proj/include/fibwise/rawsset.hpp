#pragma once

#include "fibwise/smap.hpp"

namespace fibwise {

/// A simplicial set presented levelwise up to a bound: elements are opaque
/// keys, faces and degeneracies are explicit tables.  normalize() extracts
/// the nondegenerate simplices and Eilenberg-Zilber normal form.
class RawSSet {
 public:
  explicit RawSSet(int bound)
      : bound_(bound), levels_(bound + 1), index_(bound + 1) {}

  int bound() const { return bound_; }
  int add(int level, const std::string& key);  // returns element index
  int index_of(int level, const std::string& key) const;
  bool has(int level, const std::string& key) const;
  int size(int level) const { return static_cast<int>(levels_[level].size()); }
  const std::string& key(int level, int idx) const {
    return levels_[level][idx].key;
  }

  void set_face(int level, int idx, int i, int target_idx);
  void set_degeneracy(int level, int idx, int i, int target_idx);
  int face(int level, int idx, int i) const {
    return levels_[level][idx].faces[i];
  }
  int degeneracy(int level, int idx, int i) const {
    return levels_[level][idx].degs[i];
  }

  struct Normal {
    SSetPtr space;
    // raw element (level, idx) -> normal-form value of `space`
    std::vector<std::vector<Value>> value_of;
    // nondegenerate simplex idx per level -> raw element idx
    std::vector<std::vector<int>> raw_of;
  };
  /// Checks the simplicial identities involving faces below the bound and
  /// extracts the normal form.  Names simplices `prefix<level>_<k>`.
  Normal normalize(const std::string& prefix = "n") const;

 private:
  struct Elem {
    std::string key;
    std::vector<int> faces;  // level-1 indices
    std::vector<int> degs;   // level+1 indices; unset = -1
  };
  int bound_;
  std::vector<std::vector<Elem>> levels_;
  std::vector<std::unordered_map<std::string, int>> index_;
};

}  // namespace fibwise
