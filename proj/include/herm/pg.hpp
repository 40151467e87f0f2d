#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "herm/gf.hpp"

namespace herm {

using Vec4 = std::array<Fe, 4>;
using Mat4 = std::array<Vec4, 4>;

// Point of P^n(F_q), n <= 3, stored canonically: leading nonzero
// coordinate is 1, unused coordinates are 0.
struct ProjPoint {
  int n = 0;
  Vec4 x{};

  bool operator==(const ProjPoint& o) const { return n == o.n && x == o.x; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const { return x < o.x; }
};

// Line of P^n as the RREF basis of its row space (rank 2).
struct ProjLine {
  int n = 0;
  std::array<Vec4, 2> b{};

  bool operator==(const ProjLine& o) const { return n == o.n && b == o.b; }
  bool operator<(const ProjLine& o) const { return b < o.b; }
};

// Plane of P^3 as a canonically scaled dual coefficient vector.
struct ProjPlane {
  Vec4 h{};

  bool operator==(const ProjPlane& o) const { return h == o.h; }
  bool operator<(const ProjPlane& o) const { return h < o.h; }
};

// Invertible projectivity of P^n, canonically scaled so the first nonzero
// entry in row-major order is 1.
struct ProjTransform {
  int n = 0;
  Mat4 m{};

  bool operator==(const ProjTransform& o) const { return n == o.n && m == o.m; }
};

ProjPoint make_point(const Field& f, int n, const Vec4& raw);
ProjPlane make_plane(const Field& f, const Vec4& raw);

long long point_count(int q, int n);
long long line_count_p3(int q);

// Enumeration visits each point exactly once in a fixed order; point_at and
// index_of realize the order arithmetically so shards can partition it.
ProjPoint point_at(const Field& f, int n, long long index);
long long index_of(const Field& f, const ProjPoint& P);
void for_points(const Field& f, int n, const std::function<void(const ProjPoint&)>& fn,
                long long start = 0, long long stride = 1);

ProjLine line_through(const Field& f, const ProjPoint& P, const ProjPoint& Q);
std::vector<ProjPoint> points_on_line(const Field& f, const ProjLine& l);
void for_lines_p3(const Field& f, const std::function<void(const ProjLine&)>& fn);
bool line_contains(const Field& f, const ProjLine& l, const ProjPoint& P);

std::vector<ProjPlane> planes_through_line(const Field& f, const ProjLine& l);
bool plane_contains(const Field& f, const ProjPlane& H, const ProjPoint& P);
// Deterministic frame of H: canonical points of the column-reduced kernel
// basis of H's coefficient row, in fixed order.
std::array<ProjPoint, 3> plane_frame(const Field& f, const ProjPlane& H);

ProjTransform make_transform(const Field& f, int n, const Mat4& raw);
ProjTransform identity_transform(int n);
Fe det(const Field& f, int n, const Mat4& m);
ProjTransform compose(const Field& f, const ProjTransform& a, const ProjTransform& b);
ProjTransform inverse(const Field& f, const ProjTransform& t);
ProjTransform random_transform(const Field& f, int n, Rng& rng);

ProjPoint apply(const Field& f, const ProjTransform& t, const ProjPoint& P);
ProjLine apply(const Field& f, const ProjTransform& t, const ProjLine& l);
ProjPlane apply(const Field& f, const ProjTransform& t, const ProjPlane& H);

// Kernel basis of a k x m coefficient matrix, deterministic free-column
// construction (used for plane frames, pencils of planes, line duals).
std::vector<Vec4> kernel_basis(const Field& f, const std::vector<Vec4>& rows, int m);

}  // namespace herm
