#include "herm/pg.hpp"

#include <algorithm>

namespace herm {

namespace {

Vec4 scale_leading_one(const Field& f, Vec4 v, int n) {
  for (int i = 0; i <= n; ++i) {
    if (v[i] != 0) {
      Fe s = f.inv(v[i]);
      for (int j = i; j <= n; ++j) v[j] = f.mul(s, v[j]);
      return v;
    }
  }
  throw UsageError("projective object must be nonzero");
}

// In-place RREF of a small row list over F_q; returns rank.
int rref(const Field& f, std::vector<Vec4>& rows, int m) {
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Fe s = f.inv(rows[rank][col]);
    for (int j = 0; j < m; ++j) rows[rank][j] = f.mul(s, rows[rank][j]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Fe c = rows[r][col];
      for (int j = 0; j < m; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ProjPoint make_point(const Field& f, int n, const Vec4& raw) {
  if (n < 1 || n > 3) throw UsageError("ProjPoint: n must be in {1,2,3}");
  ProjPoint P;
  P.n = n;
  P.x = scale_leading_one(f, raw, n);
  for (int i = n + 1; i < 4; ++i)
    if (P.x[i] != 0) throw UsageError("ProjPoint: coordinate beyond ambient dimension");
  return P;
}

ProjPlane make_plane(const Field& f, const Vec4& raw) {
  ProjPlane H;
  H.h = scale_leading_one(f, raw, 3);
  return H;
}

long long point_count(int q, int n) {
  long long total = 0, pw = 1;
  for (int i = 0; i <= n; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

long long line_count_p3(int q) {
  return (static_cast<long long>(q) * q + 1) * (static_cast<long long>(q) * q + q + 1);
}

ProjPoint point_at(const Field& f, int n, long long index) {
  const int q = f.q();
  long long block = 1;
  for (int i = 0; i < n; ++i) block *= q;  // q^n entries with leading position 0
  ProjPoint P;
  P.n = n;
  for (int lead = 0; lead <= n; ++lead) {
    if (index < block) {
      P.x[lead] = 1;
      for (int pos = n; pos > lead; --pos) {
        P.x[pos] = static_cast<Fe>(index % q);
        index /= q;
      }
      return P;
    }
    index -= block;
    block /= q;
  }
  throw UsageError("point_at: index out of range");
}

long long index_of(const Field& f, const ProjPoint& P) {
  const int q = f.q();
  int lead = 0;
  while (P.x[lead] == 0) ++lead;
  long long base = 0, block = 1;
  for (int i = 0; i < P.n; ++i) block *= q;
  for (int i = 0; i < lead; ++i) {
    base += block;
    block /= q;
  }
  long long tail = 0;
  for (int pos = lead + 1; pos <= P.n; ++pos) tail = tail * q + P.x[pos];
  return base + tail;
}

void for_points(const Field& f, int n, const std::function<void(const ProjPoint&)>& fn,
                long long start, long long stride) {
  const long long total = point_count(f.q(), n);
  for (long long i = start; i < total; i += stride) fn(point_at(f, n, i));
}

ProjLine line_through(const Field& f, const ProjPoint& P, const ProjPoint& Q) {
  if (P.n != Q.n) throw UsageError("line_through: mixed ambient dimensions");
  if (P == Q) throw UsageError("line_through: points coincide");
  std::vector<Vec4> rows = {P.x, Q.x};
  int rank = rref(f, rows, P.n + 1);
  if (rank != 2) throw UsageError("line_through: degenerate input");
  ProjLine l;
  l.n = P.n;
  l.b[0] = rows[0];
  l.b[1] = rows[1];
  return l;
}

std::vector<ProjPoint> points_on_line(const Field& f, const ProjLine& l) {
  std::vector<ProjPoint> out;
  out.reserve(f.q() + 1);
  for (int mu = 0; mu < f.q(); ++mu) {
    Vec4 v{};
    for (int j = 0; j <= l.n; ++j)
      v[j] = f.add(l.b[0][j], f.mul(static_cast<Fe>(mu), l.b[1][j]));
    out.push_back(make_point(f, l.n, v));
  }
  out.push_back(make_point(f, l.n, l.b[1]));
  return out;
}

bool line_contains(const Field& f, const ProjLine& l, const ProjPoint& P) {
  // P is in the row space iff eliminating both basis rows leaves zero.
  Vec4 v = P.x;
  for (int r = 0; r < 2; ++r) {
    int pivot = -1;
    for (int j = 0; j <= l.n; ++j)
      if (l.b[r][j] != 0) {
        pivot = j;
        break;
      }
    Fe c = v[pivot];
    if (c == 0) continue;
    for (int j = 0; j <= l.n; ++j) v[j] = f.sub(v[j], f.mul(c, l.b[r][j]));
  }
  return std::all_of(v.begin(), v.end(), [](Fe c) { return c == 0; });
}

void for_lines_p3(const Field& f, const std::function<void(const ProjLine&)>& fn) {
  const int q = f.q();
  // Pivot column pairs in lexicographic order; free entries count matches
  // the Gaussian binomial [4 choose 2]_q.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> free0, free1;
      for (int c = i + 1; c < 4; ++c)
        if (c != j) free0.push_back(c);
      for (int c = j + 1; c < 4; ++c) free1.push_back(c);
      long long total = 1;
      for (std::size_t k = 0; k < free0.size() + free1.size(); ++k) total *= q;
      for (long long idx = 0; idx < total; ++idx) {
        ProjLine l;
        l.n = 3;
        l.b[0][i] = 1;
        l.b[1][j] = 1;
        long long t = idx;
        for (int c : free0) {
          l.b[0][c] = static_cast<Fe>(t % q);
          t /= q;
        }
        for (int c : free1) {
          l.b[1][c] = static_cast<Fe>(t % q);
          t /= q;
        }
        fn(l);
      }
    }
  }
}

std::vector<Vec4> kernel_basis(const Field& f, const std::vector<Vec4>& rows_in, int m) {
  std::vector<Vec4> rows = rows_in;
  int rank = rref(f, rows, m);
  rows.resize(rank);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(m, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < m; ++c)
      if (rows[r][c] != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<Vec4> basis;
  for (int c = 0; c < m; ++c) {
    if (is_pivot[c]) continue;
    Vec4 v{};
    v[c] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = f.neg(rows[r][c]);
    basis.push_back(v);
  }
  return basis;
}

std::vector<ProjPlane> planes_through_line(const Field& f, const ProjLine& l) {
  if (l.n != 3) throw UsageError("planes_through_line: ambient must be P^3");
  std::vector<Vec4> rows = {l.b[0], l.b[1]};
  auto basis = kernel_basis(f, rows, 4);
  if (basis.size() != 2) throw UsageError("planes_through_line: degenerate line");
  std::vector<ProjPlane> out;
  out.reserve(f.q() + 1);
  for (int mu = 0; mu < f.q(); ++mu) {
    Vec4 v{};
    for (int j = 0; j < 4; ++j)
      v[j] = f.add(basis[0][j], f.mul(static_cast<Fe>(mu), basis[1][j]));
    out.push_back(make_plane(f, v));
  }
  out.push_back(make_plane(f, basis[1]));
  return out;
}

bool plane_contains(const Field& f, const ProjPlane& H, const ProjPoint& P) {
  Fe acc = 0;
  for (int j = 0; j < 4; ++j) acc = f.add(acc, f.mul(H.h[j], P.x[j]));
  return acc == 0;
}

std::array<ProjPoint, 3> plane_frame(const Field& f, const ProjPlane& H) {
  int k = 0;
  while (H.h[k] == 0) ++k;
  std::array<ProjPoint, 3> frame;
  int out = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == k) continue;
    Vec4 v{};
    v[j] = 1;
    v[k] = f.neg(H.h[j]);
    frame[out++] = make_point(f, 3, v);
  }
  return frame;
}

ProjTransform identity_transform(int n) {
  ProjTransform t;
  t.n = n;
  for (int i = 0; i <= n; ++i) t.m[i][i] = 1;
  return t;
}

Fe det(const Field& f, int n, const Mat4& m) {
  Mat4 a = m;
  Fe d = 1;
  for (int col = 0; col <= n; ++col) {
    int pivot = -1;
    for (int r = col; r <= n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = f.neg(d);
    }
    d = f.mul(d, a[col][col]);
    Fe s = f.inv(a[col][col]);
    for (int r = col + 1; r <= n; ++r) {
      Fe c = f.mul(s, a[r][col]);
      if (c == 0) continue;
      for (int j = col; j <= n; ++j) a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
    }
  }
  return d;
}

ProjTransform make_transform(const Field& f, int n, const Mat4& raw) {
  if (det(f, n, raw) == 0) throw UsageError("ProjTransform: singular matrix");
  ProjTransform t;
  t.n = n;
  t.m = raw;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (t.m[i][j] != 0) {
        Fe s = f.inv(t.m[i][j]);
        for (int r = 0; r <= n; ++r)
          for (int c = 0; c <= n; ++c) t.m[r][c] = f.mul(s, t.m[r][c]);
        return t;
      }
    }
  }
  throw UsageError("ProjTransform: zero matrix");
}

ProjTransform compose(const Field& f, const ProjTransform& a, const ProjTransform& b) {
  if (a.n != b.n) throw UsageError("compose: mixed ambient dimensions");
  Mat4 m{};
  for (int i = 0; i <= a.n; ++i)
    for (int j = 0; j <= a.n; ++j) {
      Fe acc = 0;
      for (int k = 0; k <= a.n; ++k) acc = f.add(acc, f.mul(a.m[i][k], b.m[k][j]));
      m[i][j] = acc;
    }
  return make_transform(f, a.n, m);
}

ProjTransform inverse(const Field& f, const ProjTransform& t) {
  const int n = t.n;
  Mat4 a = t.m;
  Mat4 inv{};
  for (int i = 0; i <= n; ++i) inv[i][i] = 1;
  for (int col = 0; col <= n; ++col) {
    int pivot = -1;
    for (int r = col; r <= n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw UsageError("inverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Fe s = f.inv(a[col][col]);
    for (int j = 0; j <= n; ++j) {
      a[col][j] = f.mul(s, a[col][j]);
      inv[col][j] = f.mul(s, inv[col][j]);
    }
    for (int r = 0; r <= n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Fe c = a[r][col];
      for (int j = 0; j <= n; ++j) {
        a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(c, inv[col][j]));
      }
    }
  }
  return make_transform(f, n, inv);
}

ProjTransform random_transform(const Field& f, int n, Rng& rng) {
  for (;;) {
    Mat4 m{};
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        m[i][j] = static_cast<Fe>(rng.below(f.q()));
    if (det(f, n, m) != 0) return make_transform(f, n, m);
  }
}

ProjPoint apply(const Field& f, const ProjTransform& t, const ProjPoint& P) {
  if (t.n != P.n) throw UsageError("apply: mixed ambient dimensions");
  Vec4 v{};
  for (int i = 0; i <= t.n; ++i) {
    Fe acc = 0;
    for (int j = 0; j <= t.n; ++j) acc = f.add(acc, f.mul(t.m[i][j], P.x[j]));
    v[i] = acc;
  }
  return make_point(f, t.n, v);
}

ProjLine apply(const Field& f, const ProjTransform& t, const ProjLine& l) {
  auto p0 = apply(f, t, make_point(f, l.n, l.b[0]));
  auto p1 = apply(f, t, make_point(f, l.n, l.b[1]));
  return line_through(f, p0, p1);
}

ProjPlane apply(const Field& f, const ProjTransform& t, const ProjPlane& H) {
  // h' = h . T^{-1}, so incidence is preserved.
  ProjTransform ti = inverse(f, t);
  Vec4 v{};
  for (int j = 0; j < 4; ++j) {
    Fe acc = 0;
    for (int i = 0; i < 4; ++i) acc = f.add(acc, f.mul(H.h[i], ti.m[i][j]));
    v[j] = acc;
  }
  return make_plane(f, v);
}

}  // namespace herm
