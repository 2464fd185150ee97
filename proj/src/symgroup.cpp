#include "fibwise/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fibwise {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

Perm adjacent_transposition(int n, int i) {
  Perm p = perm_identity(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> perm_factor_adjacent(const Perm& p) {
  // bubble sort; record swaps so that composing them right-to-left gives p
  std::vector<int> out;
  Perm cur = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        out.push_back(static_cast<int>(i));
        changed = true;
      }
  }
  // cur is now the identity and p = t_{out[0]} ∘ t_{out[1]} ∘ ...
  return out;
}

Perm block_perm(const Perm& a, const Perm& b) {
  Perm out(a.size() + b.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i)
    out[a.size() + i] = static_cast<int>(a.size()) + b[i];
  return out;
}

std::vector<Perm> all_perms(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> shuffles(int p, int q) {
  // choose the image positions of the first block
  std::vector<Perm> out;
  std::vector<int> pick(p + q, 0);
  std::fill(pick.begin(), pick.begin() + p, 1);
  std::sort(pick.begin(), pick.end());
  // iterate over all subsets of size p in lex order
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    Perm g(p + q);
    std::vector<bool> used(p + q, false);
    for (int i = 0; i < p; ++i) {
      g[i] = idx[i];
      used[idx[i]] = true;
    }
    int pos = p;
    for (int v = 0; v < p + q; ++v)
      if (!used[v]) g[pos++] = v;
    out.push_back(g);
    // next combination
    int i = p - 1;
    while (i >= 0 && idx[i] == q + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (p == 0) return {perm_identity(q)};
  return out;
}

ShuffleCoset shuffle_decompose(const Perm& g, int p, int q) {
  // rep: sort g within each block; left/right: the sorting permutations
  std::vector<std::pair<int, int>> first, second;
  for (int i = 0; i < p; ++i) first.emplace_back(g[i], i);
  for (int i = 0; i < q; ++i) second.emplace_back(g[p + i], i);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  Perm rep(p + q), left(p), right(q);
  for (int i = 0; i < p; ++i) {
    rep[i] = first[i].first;
    left[first[i].second] = i;
  }
  for (int i = 0; i < q; ++i) {
    rep[p + i] = second[i].first;
    right[second[i].second] = i;
  }
  return ShuffleCoset{std::move(rep), std::move(left), std::move(right)};
}

int shuffle_index(const std::vector<Perm>& reps, const Perm& rep) {
  for (size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == rep) return static_cast<int>(i);
  throw std::invalid_argument("shuffle_index: not a representative");
}

std::vector<Perm> injection_cosets(int n, int k) {
  std::vector<Perm> out;
  std::vector<int> word(k, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == k) {
      Perm g(n);
      for (int i = 0; i < k; ++i) g[i] = word[i];
      int at = k;
      for (int v = 0; v < n; ++v)
        if (!used[v]) g[at++] = v;
      out.push_back(g);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      word[pos] = v;
      walk(pos + 1);
      used[v] = false;
    }
  };
  walk(0);
  return out;
}

InjCoset injection_decompose(const Perm& g, int k) {
  int n = static_cast<int>(g.size());
  Perm rep(n);
  std::vector<bool> used(n, false);
  for (int i = 0; i < k; ++i) {
    rep[i] = g[i];
    used[g[i]] = true;
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!used[v]) rest.push_back(v);
  for (int i = k; i < n; ++i) rep[i] = rest[i - k];
  // g = rep ∘ (1^k x h)  =>  h = shift of rep^{-1} ∘ g on the tail
  Perm comp = perm_compose(perm_inverse(rep), g);
  Perm tail(n - k);
  for (int i = k; i < n; ++i) tail[i - k] = comp[i] - k;
  return InjCoset{std::move(rep), std::move(tail)};
}

int injection_index(const std::vector<Perm>& reps, const Perm& rep) {
  for (size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == rep) return static_cast<int>(i);
  throw std::invalid_argument("injection_index: not a representative");
}

std::vector<Perm> shuffles3(int p, int s, int q) {
  // increasing on each of the three blocks
  std::vector<Perm> out;
  int n = p + s + q;
  std::vector<int> assign(n);  // block of each position value
  // choose block assignment for values 0..n-1? instead permute positions:
  // enumerate all ways to pick image sets
  std::vector<int> sel(n, 2);
  std::function<void(int, int, int)> walk = [&](int v, int cp, int cs) {
    if (v == n) {
      if (cp != p || cs != s) return;
      Perm g(n);
      int ip = 0, is = 0, iq = 0;
      for (int val = 0; val < n; ++val) {
        if (sel[val] == 0)
          g[ip++] = val;
        else if (sel[val] == 1)
          g[p + is++] = val;
        else
          g[p + s + iq++] = val;
      }
      out.push_back(g);
      return;
    }
    for (int b = 0; b < 3; ++b) {
      if (b == 0 && cp == p) continue;
      if (b == 1 && cs == s) continue;
      sel[v] = b;
      walk(v + 1, cp + (b == 0 ? 1 : 0), cs + (b == 1 ? 1 : 0));
    }
  };
  walk(0, 0, 0);
  return out;
}

Shuffle3Coset shuffle3_decompose(const Perm& g, int p, int s, int q) {
  std::vector<std::pair<int, int>> bp, bs, bq;
  for (int i = 0; i < p; ++i) bp.emplace_back(g[i], i);
  for (int i = 0; i < s; ++i) bs.emplace_back(g[p + i], i);
  for (int i = 0; i < q; ++i) bq.emplace_back(g[p + s + i], i);
  std::sort(bp.begin(), bp.end());
  std::sort(bs.begin(), bs.end());
  std::sort(bq.begin(), bq.end());
  Perm rep(p + s + q), a(p), b(s), c(q);
  for (int i = 0; i < p; ++i) {
    rep[i] = bp[i].first;
    a[bp[i].second] = i;
  }
  for (int i = 0; i < s; ++i) {
    rep[p + i] = bs[i].first;
    b[bs[i].second] = i;
  }
  for (int i = 0; i < q; ++i) {
    rep[p + s + i] = bq[i].first;
    c[bq[i].second] = i;
  }
  return Shuffle3Coset{std::move(rep), std::move(a), std::move(b),
                       std::move(c)};
}

}  // namespace fibwise
