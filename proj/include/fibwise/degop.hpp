#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fibwise {

/// A composite degeneracy operator s_{i_1} s_{i_2} ... s_{i_r} in normal form:
/// indices strictly decreasing, the empty list is the identity.  Acting on a
/// k-simplex raises the dimension by r.
class DegOp {
 public:
  DegOp() = default;
  explicit DegOp(std::vector<int> indices);

  static DegOp identity() { return DegOp(); }
  static DegOp single(int i) { return DegOp(std::vector<int>{i}); }

  bool is_identity() const { return idx_.empty(); }
  int rank() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  int top() const { return idx_.front(); }

  bool operator==(const DegOp& o) const { return idx_ == o.idx_; }
  bool operator!=(const DegOp& o) const { return !(*this == o); }
  bool operator<(const DegOp& o) const { return idx_ < o.idx_; }

  /// Monotone surjection [base_dim+rank] -> [base_dim] realised by this
  /// operator on a base_dim-dimensional simplex.
  std::vector<int> surjection(int base_dim) const;
  static DegOp from_surjection(const std::vector<int>& f);

  /// Normal form of (this ∘ other); `other` is applied first, to a simplex of
  /// dimension base_dim.
  DegOp after(const DegOp& other, int base_dim) const;

  /// Is a value with this operator in the image of s_i?
  bool deg_at(int i, int base_dim) const;

  std::string str() const;

  struct FacePast;
  /// d_i ∘ op on a base_dim-simplex: either the face cancels into a pure
  /// degeneracy operator, or it passes through as op' ∘ d_k.
  static FacePast face_past(int i, const DegOp& op, int base_dim);

  /// All degeneracy operators from dimension `from` up to dimension `to`
  /// (monotone surjections [to] -> [from]); cached.
  static const std::vector<DegOp>& all(int from, int to);

 private:
  std::vector<int> idx_;
};

struct DegOp::FacePast {
  DegOp op;
  std::optional<int> face;  // the k of the residual d_k, if any
};

}  // namespace fibwise
