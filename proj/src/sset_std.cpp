#include "fibwise/sset_std.hpp"

#include <map>
#include <stdexcept>

namespace fibwise {

namespace {

std::string subset_name(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += static_cast<char>('0' + v);
  return s;
}

// all nonempty subsets of {0..n} passing `keep`, as a built complex
SSetPtr simplex_like(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  SSetBuilder b;
  std::map<std::string, SimplexRef> refs;
  std::vector<std::vector<std::vector<int>>> by_dim(n + 1);
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v <= n; ++v)
      if (mask & (1 << v)) vs.push_back(v);
    if (!keep(vs)) continue;
    by_dim[vs.size() - 1].push_back(vs);
  }
  for (int d = 0; d <= n; ++d)
    for (auto& vs : by_dim[d]) refs[subset_name(vs)] = b.add(d, subset_name(vs));
  for (int d = 1; d <= n; ++d)
    for (auto& vs : by_dim[d]) {
      SimplexRef s = refs.at(subset_name(vs));
      for (int i = 0; i <= d; ++i) {
        std::vector<int> f = vs;
        f.erase(f.begin() + i);
        b.set_face(s, i, refs.at(subset_name(f)));
      }
    }
  return b.build();
}

}  // namespace

SSetPtr standard(int n) {
  if (n < 0) throw std::invalid_argument("standard(n) needs n >= 0");
  return simplex_like(n, [](const std::vector<int>&) { return true; });
}

SSetPtr boundary(int n) {
  if (n < 0) throw std::invalid_argument("boundary(n) needs n >= 0");
  return simplex_like(n, [n](const std::vector<int>& vs) {
    return static_cast<int>(vs.size()) != n + 1;
  });
}

SSetPtr horn(int n, int k) {
  if (n < 1) throw std::invalid_argument("no horns of Delta^0");
  if (k < 0 || k > n) throw std::invalid_argument("horn index out of range");
  return simplex_like(n, [n, k](const std::vector<int>& vs) {
    if (static_cast<int>(vs.size()) == n + 1) return false;
    if (static_cast<int>(vs.size()) == n) {
      // drop the face opposite vertex k
      for (int v = 0; v <= n; ++v)
        if (v != k) {
          bool found = false;
          for (int w : vs)
            if (w == v) found = true;
          if (!found) return true;
        }
      return false;
    }
    return true;
  });
}

SSetPtr empty_sset() { return SSetBuilder().build(); }

SSetPtr point() { return standard(0); }

SSetPtr circle() {
  SSetBuilder b;
  SimplexRef pt = b.add(0, "pt");
  SimplexRef e = b.add(1, "e");
  b.set_face(e, 0, pt);
  b.set_face(e, 1, pt);
  return b.build();
}

}  // namespace fibwise
