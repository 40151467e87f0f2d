#pragma once

#include <vector>

#include "herm/poly.hpp"

namespace herm {

// Rational zeta function of all-denominator shape prod (1 - c_i t)^{-m_i},
// with positive integer reciprocal roots c_i (powers of q). Factors with
// equal c are merged and kept sorted by c.
struct ZetaRational {
  std::vector<std::pair<long long, int>> factors;  // (c, multiplicity)

  bool operator==(const ZetaRational& o) const { return factors == o.factors; }
};

ZetaRational make_zeta(std::vector<std::pair<long long, int>> factors);

// 1/((1-t)(1-qt)(1-q^2 t))
ZetaRational zeta_p2(int q);

// Blowing up at a rational point multiplies the zeta by 1/(1-qt):
// N_m gains q^m for every m.
ZetaRational blowup(const ZetaRational& z, int q);

// 1/((1-t)(1-qt)^{b2}(1-q^2 t)) with b2 = q*sqrt(q) - q + sqrt(q) + 1.
ZetaRational hermitian_surface_zeta(int q);
long long hermitian_b2(int q);

// N_m = sum m_i c_i^m.
long long point_counts_from_zeta(const ZetaRational& z, int m);

struct ZetaCheckRow {
  int m = 0;
  long long from_zeta = 0;
  long long direct = 0;
  bool agree = false;
};

// Direct point counts over F_{q^m} vs the zeta prediction, for m <= m_max.
// A mismatch is a reported outcome, not an error.
std::vector<ZetaCheckRow> zeta_cross_check(const HomPoly& S, const ZetaRational& z, int m_max);

}  // namespace herm
