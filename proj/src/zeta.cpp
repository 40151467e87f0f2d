#include "herm/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace herm {

ZetaRational make_zeta(std::vector<std::pair<long long, int>> factors) {
  std::sort(factors.begin(), factors.end());
  ZetaRational z;
  for (const auto& [c, m] : factors) {
    if (c < 1 || m < 1) throw UsageError("ZetaRational: factors need c >= 1, m >= 1");
    if (!z.factors.empty() && z.factors.back().first == c) {
      z.factors.back().second += m;
    } else {
      z.factors.emplace_back(c, m);
    }
  }
  return z;
}

ZetaRational zeta_p2(int q) {
  return make_zeta({{1, 1}, {q, 1}, {static_cast<long long>(q) * q, 1}});
}

ZetaRational blowup(const ZetaRational& z, int q) {
  auto factors = z.factors;
  factors.emplace_back(q, 1);
  return make_zeta(std::move(factors));
}

long long hermitian_b2(int q) {
  long long s = static_cast<long long>(std::lround(std::sqrt(static_cast<double>(q))));
  if (s * s != q) throw UsageError("hermitian_b2: q must be a square");
  return q * s - q + s + 1;
}

ZetaRational hermitian_surface_zeta(int q) {
  return make_zeta({{1, 1},
                    {q, static_cast<int>(hermitian_b2(q))},
                    {static_cast<long long>(q) * q, 1}});
}

long long point_counts_from_zeta(const ZetaRational& z, int m) {
  if (m < 1) throw UsageError("point_counts_from_zeta: m >= 1");
  unsigned long long acc = 0;
  for (const auto& [c, mult] : z.factors) {
    unsigned long long p = 1;
    for (int i = 0; i < m; ++i) {
      p *= static_cast<unsigned long long>(c);
      if (p > (1ULL << 62)) throw UsageError("point_counts_from_zeta: out of 64-bit range");
    }
    acc += static_cast<unsigned long long>(mult) * p;
  }
  return static_cast<long long>(acc);
}

std::vector<ZetaCheckRow> zeta_cross_check(const HomPoly& S, const ZetaRational& z, int m_max) {
  const Field& base = S.field();
  std::vector<ZetaCheckRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= base.q();
    const Field& ext = Registry::field(static_cast<int>(qm));  // CapabilityError if absent
    ZetaCheckRow row;
    row.m = m;
    row.from_zeta = point_counts_from_zeta(z, m);
    row.direct = count_points(S, ext);
    row.agree = (row.from_zeta == row.direct);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace herm
