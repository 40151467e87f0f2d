#include "herm/bounds.hpp"

#include <cmath>

namespace herm {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > (1LL << 62)) throw UsageError("bounds: value out of 64-bit range");
  }
  return r;
}

long long isqrt_exact(int q) {
  int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(q))));
  if (s * s != q) throw UsageError("bounds: q is not a perfect square");
  return s;
}

BoundStatus status_of(long long observed, long long value) {
  if (observed < value) return BoundStatus::Below;
  if (observed == value) return BoundStatus::Equal;
  return BoundStatus::Violation;
}

}  // namespace

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Below: return "below";
    case BoundStatus::Equal: return "equal";
    case BoundStatus::AboveException: return "above-exception";
    case BoundStatus::Violation: return "violation";
  }
  return "?";
}

long long weil_deligne(int n, int d, int q) {
  if (n < 1 || d < 1 || q < 2) throw UsageError("weil_deligne: bad parameters");
  // sqrt(q)^{n-1}: integral either because n-1 is even or q is a square
  long long sq_pow;
  if ((n - 1) % 2 == 0) {
    sq_pow = ipow(q, (n - 1) / 2);
  } else {
    sq_pow = ipow(isqrt_exact(q), n - 1);
  }
  long long lead = (ipow(q, n) - 1) / (q - 1);
  long long sign = (n % 2 == 0) ? 1 : -1;
  long long mid = ipow(d - 1, n) - sign;
  if (mid % d != 0) throw UsageError("weil_deligne: divisibility assertion failed");
  return lead + (d - 1) * (mid / d) * sq_pow;
}

SziklaiBound sziklai(int d, int q) {
  if (d < 2 || d > q + 2) throw UsageError("sziklai: need 2 <= d <= q+2");
  SziklaiBound b;
  b.value = static_cast<long long>(d - 1) * q + 1;
  if (d == 4 && q == 4) {
    b.has_exception = true;
    b.exception_value = 14;
  }
  return b;
}

long long segre(int d, int q) {
  if (d < 1 || d > q + 1) throw UsageError("segre: need 1 <= d <= q+1");
  return static_cast<long long>(d) * q + 1;
}

long long elementary(int d, int q) {
  return static_cast<long long>(d - 1) * q * q + static_cast<long long>(d) * q + 1;
}

long long s_degree_bound(long long delta, int q) {
  if (delta < 1) throw UsageError("s_degree_bound: need delta >= 1");
  return (delta - 1) * q + 1 + (delta - 1) / (q + 1);
}

HomPoly exceptional_quartic_f4() {
  const Field& f = Registry::field(4);
  HomPoly l = parse_poly(f, "X0+X1+X2");
  HomPoly m = parse_poly(f, "X0*X1+X1*X2+X2*X0");
  HomPoly xyz = parse_poly(f, "X0*X1*X2");
  return add(add(pow(l, 4), pow(m, 2)), mul(xyz, l));
}

std::vector<Vec4> plane_components(const HomPoly& F) {
  if (F.nvars() != 4) throw UsageError("plane_components: need a 4-variable form");
  const Field& f = F.field();
  std::vector<Vec4> out;
  const long long nplanes = point_count(f.q(), 3);
  for (long long i = 0; i < nplanes; ++i) {
    ProjPoint dual = point_at(f, 3, i);
    if (linear_divides(F, dual.x)) out.push_back(dual.x);
  }
  return out;
}

std::vector<BoundReport> check_bounds(const HomPoly& F) {
  const Field& f = F.field();
  const int q = f.q();
  const int d = F.degree();
  std::vector<BoundReport> out;
  if (F.is_zero()) throw UsageError("check_bounds: zero polynomial");
  long long observed = count_points(F);

  if (F.nvars() == 3) {
    bool line_free = fq_linear_components(F, 1).empty();
    if (d >= 1 && d <= q + 1) {
      BoundReport r{"segre", 2, d, q, segre(d, q), observed, BoundStatus::Below, ""};
      r.status = status_of(observed, r.value);
      out.push_back(r);
    }
    if (line_free && d >= 2 && d <= q + 2) {
      auto b = sziklai(d, q);
      BoundReport r{"sziklai", 2, d, q, b.value, observed, BoundStatus::Below, ""};
      if (observed <= b.value) {
        r.status = status_of(observed, b.value);
      } else if (b.has_exception && observed <= b.exception_value) {
        r.status = BoundStatus::AboveException;
        r.note = "exceptional quartic over F_4 attains 14";
      } else {
        r.status = BoundStatus::Violation;
      }
      out.push_back(r);
    }
  } else if (F.nvars() == 4) {
    bool plane_free = plane_components(F).empty();
    if (plane_free) {
      BoundReport r{"elementary", 3, d, q, elementary(d, q), observed, BoundStatus::Below, ""};
      r.status = status_of(observed, r.value);
      out.push_back(r);
      BoundReport w{"weil_deligne", 3, d, q, weil_deligne(3, d, q), observed,
                    BoundStatus::Below, "assumes a nonsingular hypersurface (not verified)"};
      w.status = status_of(observed, w.value);
      out.push_back(w);
    }
  } else {
    throw UsageError("check_bounds: expected a ternary or quaternary form");
  }
  return out;
}

}  // namespace herm
