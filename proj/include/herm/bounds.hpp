#pragma once

#include <string>
#include <vector>

#include "herm/poly.hpp"

namespace herm {

enum class BoundStatus { Below, Equal, AboveException, Violation };

struct BoundReport {
  std::string bound;
  int n = 0;
  int d = 0;
  int q = 0;
  long long value = 0;
  long long observed = 0;
  BoundStatus status = BoundStatus::Below;
  std::string note;
};

const char* to_string(BoundStatus s);

// (q^n-1)/(q-1) + ((d-1)/d)((d-1)^n - (-1)^n) sqrt(q)^{n-1}, exact; the
// divisibility of the middle factor by d is asserted. For even n the field
// must have an integral sqrt(q).
long long weil_deligne(int n, int d, int q);

struct SziklaiBound {
  long long value = 0;
  bool has_exception = false;   // true exactly for (d, q) = (4, 4)
  long long exception_value = 0;  // 14, attained by the exceptional quartic
};
SziklaiBound sziklai(int d, int q);

long long segre(int d, int q);
long long elementary(int d, int q);
long long s_degree_bound(long long delta, int q);

// The exceptional plane quartic over F_4 attaining 14 points.
HomPoly exceptional_quartic_f4();

// Evaluates the applicable bounds against the exact point count; linear or
// plane components are detected first since the curve/surface bounds assume
// their absence.
std::vector<BoundReport> check_bounds(const HomPoly& F);

// Canonical linear forms in 4 variables dividing F (plane components).
std::vector<Vec4> plane_components(const HomPoly& F);

}  // namespace herm
