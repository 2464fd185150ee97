#include "fibwise/homology.hpp"

#include <gmpxx.h>

#include <stdexcept>

#include "fibwise/colimit.hpp"

namespace fibwise {

Field Field::Fp(int prime) {
  if (prime < 2 || prime > 97) throw std::invalid_argument("field: bad prime");
  for (int d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("field: not prime");
  return Field{prime};
}

namespace {

// boundary matrices of the normalized chain complex: entry contributions
// from faces that stay nondegenerate
std::vector<std::vector<std::vector<long>>> boundaries(const SSet& X) {
  int top = X.dim();
  std::vector<std::vector<std::vector<long>>> d(top + 1);
  for (int n = 1; n <= top; ++n) {
    d[n].assign(X.level_size(n - 1),
                std::vector<long>(X.level_size(n), 0));
    for (int j = 0; j < X.level_size(n); ++j)
      for (int i = 0; i <= n; ++i) {
        Value f = X.face(SSet::pure(SimplexRef{n, j}), i);
        if (!f.pure()) continue;  // degenerate faces vanish in normalized chains
        d[n][f.s.idx][j] += (i % 2 == 0) ? 1 : -1;
      }
  }
  return d;
}

int rank_q(std::vector<std::vector<long>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
  int rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = pr;
    while (piv < rows && a[piv][pc] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[pr]);
    mpq_class inv = 1 / a[pr][pc];
    for (size_t c = pc; c < cols; ++c) a[pr][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc] == 0) continue;
      mpq_class factor = a[r][pc];
      for (size_t c = pc; c < cols; ++c) a[r][c] -= factor * a[pr][c];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

int rank_fp(std::vector<std::vector<long>> m, int p) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      a[r][c] = static_cast<int>(((m[r][c] % p) + p) % p);
  auto inv_mod = [p](int x) {
    int r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = pr;
    while (piv < rows && a[piv][pc] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[pr]);
    int iv = inv_mod(a[pr][pc]);
    for (size_t c = pc; c < cols; ++c) a[pr][c] = a[pr][c] * iv % p;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc] == 0) continue;
      int factor = a[r][pc];
      for (size_t c = pc; c < cols; ++c)
        a[r][c] = ((a[r][c] - factor * a[pr][c]) % p + p) % p;
    }
    ++pr;
    ++rank;
  }
  return rank;
}

int rank_of(const std::vector<std::vector<long>>& m, Field k) {
  return k.p == 0 ? rank_q(m) : rank_fp(m, k.p);
}

}  // namespace

std::vector<int> homology(const SSetPtr& X, Field k) {
  if (X->truncated())
    throw std::invalid_argument("homology: input must be a genuine complex");
  if (X->empty()) return {};
  auto d = boundaries(*X);
  int top = X->dim();
  std::vector<int> ranks(top + 2, 0);  // rank d_n for 1..top
  for (int n = 1; n <= top; ++n) ranks[n] = rank_of(d[n], k);
  std::vector<int> h(top + 1);
  for (int n = 0; n <= top; ++n) {
    int dim_n = X->level_size(n);
    int ker = n == 0 ? dim_n : dim_n - ranks[n];
    int im = n + 1 <= top ? ranks[n + 1] : 0;
    h[n] = ker - im;
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<int> reduced_homology(const SSetPtr& X, Field k) {
  auto h = homology(X, k);
  if (h.empty()) throw std::invalid_argument("reduced homology of empty");
  h[0] -= 1;
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<int> rel_quotient_homology(const RetSpace& Y, Field k) {
  SubcomplexResult img = subcomplex(Y.total, [&](SimplexRef r) {
    // simplices in the image of the section
    Value v = Y.section.apply(Y.retraction.apply(SSet::pure(r)));
    return v.pure() && v.s == r;
  });
  QuotientResult q = quotient(Y.total, img.incl);
  return reduced_homology(q.space, k);
}

bool split_sequence_holds(const RetSpace& Y, Field k) {
  auto hy = homology(Y.total, k);
  auto hx = homology(Y.base, k);
  auto hq = rel_quotient_homology(Y, k);
  size_t top = std::max({hy.size(), hx.size(), hq.size()});
  for (size_t n = 0; n < top; ++n) {
    int a = n < hy.size() ? hy[n] : 0;
    int b = n < hx.size() ? hx[n] : 0;
    int c = n < hq.size() ? hq[n] : 0;
    if (a != b + c) return false;
  }
  return true;
}

bool boundary_squares_to_zero(const SSetPtr& X, Field k) {
  (void)k;
  auto d = boundaries(*X);
  for (int n = 2; n <= X->dim(); ++n) {
    if (d[n].empty() || d[n - 1].empty()) continue;
    // compose d_{n-1} ∘ d_n over the integers
    for (size_t c = 0; c < d[n][0].size(); ++c)
      for (size_t r = 0; r < d[n - 1].size(); ++r) {
        long acc = 0;
        for (size_t m = 0; m < d[n].size(); ++m)
          acc += d[n - 1][r][m] * d[n][m][c];
        if (acc != 0) return false;
      }
  }
  return true;
}

}  // namespace fibwise
