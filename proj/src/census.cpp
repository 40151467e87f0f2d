#include "herm/census.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "herm/bounds.hpp"

namespace herm {

HomPoly fermat_form(const Field& f, int nvars) {
  const int d = f.sqrt_q() + 1;
  std::vector<HomPoly::Term> terms;
  for (int i = 0; i < nvars; ++i) {
    Expo e{};
    e[i] = static_cast<std::uint8_t>(d);
    terms.push_back({e, 1});
  }
  return HomPoly(f, nvars, d, std::move(terms));
}

namespace {

std::string coeff_str(const std::vector<Fe>& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

// Evaluation tables of the ten cubic monomials over one field, split into
// two half-coefficient blocks of 4^5 combinations each so a curve evaluates
// with one add per point.
struct CubicScan {
  const Field* fld = nullptr;
  long long npts = 0;
  std::vector<std::vector<std::uint32_t>> line_pts;
  std::vector<Fe> hi, lo;  // [1024][npts], flattened

  void build(const Field& base, const Field& ext) {
    fld = &ext;
    const TowerEmbedding* emb = (&base == &ext) ? nullptr : &Registry::embedding(base.q(), ext.q());
    const auto& mons = monomials(3, 3);
    npts = point_count(ext.q(), 2);
    std::vector<std::array<Fe, 10>> monval(npts);
    for (long long i = 0; i < npts; ++i) {
      ProjPoint P = point_at(ext, 2, i);
      for (int k = 0; k < 10; ++k) {
        Fe v = 1;
        for (int j = 0; j < 3; ++j)
          if (mons[k][j]) v = ext.mul(v, ext.pow(P.x[j], mons[k][j]));
        monval[i][k] = v;
      }
    }
    const auto& tab = p2_lines(ext);
    line_pts = tab.point_idx;

    std::array<Fe, 4> embed{};
    for (int c = 0; c < 4; ++c) embed[c] = emb ? emb->map(static_cast<Fe>(c)) : static_cast<Fe>(c);
    hi.assign(1024 * npts, 0);
    lo.assign(1024 * npts, 0);
    for (int block = 0; block < 1024; ++block) {
      std::array<Fe, 5> digs{};
      int b = block;
      for (int k = 4; k >= 0; --k) {
        digs[k] = embed[b & 3];
        b >>= 2;
      }
      Fe* h = &hi[static_cast<std::size_t>(block) * npts];
      Fe* l = &lo[static_cast<std::size_t>(block) * npts];
      for (long long i = 0; i < npts; ++i) {
        Fe ah = 0, al = 0;
        for (int k = 0; k < 5; ++k) {
          if (digs[k] != 0) {
            ah = ext.add(ah, ext.mul(digs[k], monval[i][k]));
            al = ext.add(al, ext.mul(digs[k], monval[i][k + 5]));
          }
        }
        h[i] = ah;
        l[i] = al;
      }
    }
  }

  void values(int hi_block, int lo_block, std::vector<Fe>& out) const {
    out.resize(npts);
    const Fe* h = &hi[static_cast<std::size_t>(hi_block) * npts];
    const Fe* l = &lo[static_cast<std::size_t>(lo_block) * npts];
    for (long long i = 0; i < npts; ++i) out[i] = fld->add(h[i], l[i]);
  }

  // true iff some line of P^2(ext) lies inside the zero set
  bool has_full_line(const std::vector<Fe>& vals) const {
    for (const auto& idx : line_pts) {
      bool all = true;
      for (std::uint32_t pi : idx) {
        if (vals[pi] != 0) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }
};

std::optional<Mat4> frame_matrix(const Field& f, const ProjPoint& p0, const ProjPoint& p1,
                                 const ProjPoint& p2, const ProjPoint& p3) {
  Mat4 m{};
  for (int i = 0; i < 3; ++i) {
    m[i][0] = p0.x[i];
    m[i][1] = p1.x[i];
    m[i][2] = p2.x[i];
  }
  if (det(f, 2, m) == 0) return std::nullopt;
  // solve m w = p3; all weights must be nonzero (general position)
  Mat4 a = m;
  Vec4 rhs = p3.x;
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int r = col; r < 3; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    Fe s = f.inv(a[col][col]);
    for (int j = 0; j < 3; ++j) a[col][j] = f.mul(s, a[col][j]);
    rhs[col] = f.mul(s, rhs[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Fe c = a[r][col];
      for (int j = 0; j < 3; ++j) a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
      rhs[r] = f.sub(rhs[r], f.mul(c, rhs[col]));
    }
  }
  if (rhs[0] == 0 || rhs[1] == 0 || rhs[2] == 0) return std::nullopt;
  Mat4 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = f.mul(m[i][j], rhs[j]);
  return out;
}

}  // namespace

bool absolutely_irreducible_cubic(const HomPoly& C) {
  if (C.degree() != 3 || C.nvars() != 3)
    throw UsageError("absolutely_irreducible_cubic: need a ternary cubic");
  for (int m = 1; m <= 3; ++m) {
    if (!fq_linear_components(C, m).empty()) return false;
  }
  return true;
}

std::optional<HomPoly> conic_factor(const HomPoly& F) {
  if (F.nvars() != 3 || F.degree() < 2) throw UsageError("conic_factor: bad input");
  const Field& f = F.field();
  const auto& mons = monomials(3, 2);
  const long long total = [&] {
    long long t = 1;
    for (std::size_t i = 0; i < mons.size(); ++i) t *= f.q();
    return t;
  }();
  // canonical conics: first nonzero dense coefficient equal to 1
  std::vector<Fe> c(mons.size(), 0);
  for (long long raw = 1; raw < total; ++raw) {
    long long t = raw;
    for (std::size_t k = mons.size(); k-- > 0;) {
      c[k] = static_cast<Fe>(t % f.q());
      t /= f.q();
    }
    std::size_t lead = 0;
    while (c[lead] == 0) ++lead;
    if (c[lead] != 1) continue;
    HomPoly Q = from_dense(f, 3, 2, c);
    if (exact_cofactor(F, Q)) return Q;
  }
  return std::nullopt;
}

std::optional<ProjTransform> projectively_equivalent(const HomPoly& C1, const HomPoly& C2) {
  if (&C1.field() != &C2.field()) throw UsageError("projectively_equivalent: field mismatch");
  if (C1.nvars() != 3 || C2.nvars() != 3 || C1.degree() != C2.degree())
    throw UsageError("projectively_equivalent: need ternary forms of equal degree");
  const Field& f = C1.field();
  if (f.q() != 4 && f.q() != 9)
    throw CapabilityError("projectively_equivalent: supported for q in {4, 9}");
  if (C1.scalar_equal(C2)) return identity_transform(2);

  std::vector<ProjPoint> z1, z2;
  std::vector<bool> in_z1(point_count(f.q(), 2), false);
  for_points(f, 2, [&](const ProjPoint& P) {
    if (C1.evaluate(P) == 0) {
      in_z1[index_of(f, P)] = true;
      z1.push_back(P);
    }
    if (C2.evaluate(P) == 0) z2.push_back(P);
  });
  if (z1.size() != z2.size()) return std::nullopt;

  // fixed source frame inside C2's point set
  std::optional<Mat4> m2;
  std::array<ProjPoint, 4> frame2;
  const std::size_t nz = z2.size();
  for (std::size_t a = 0; a < nz && !m2; ++a)
    for (std::size_t b = 0; b < nz && !m2; ++b)
      for (std::size_t c = 0; c < nz && !m2; ++c)
        for (std::size_t d = 0; d < nz && !m2; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          m2 = frame_matrix(f, z2[a], z2[b], z2[c], z2[d]);
          if (m2) frame2 = {z2[a], z2[b], z2[c], z2[d]};
        }
  if (!m2) {
    // degenerate point configuration; fall back to full PGL enumeration at q=4
    if (f.q() != 4)
      throw CapabilityError("projectively_equivalent: degenerate configuration at q=9");
    const long long total = 1LL << 18;  // 4^9 raw matrices
    for (long long raw = 0; raw < total; ++raw) {
      Mat4 m{};
      long long t = raw;
      bool canonical_seen = false, ok = true;
      for (int i = 0; i < 3 && ok; ++i)
        for (int j = 0; j < 3 && ok; ++j) {
          Fe v = static_cast<Fe>(t % 4);
          t /= 4;
          m[i][j] = v;
          if (!canonical_seen && v != 0) {
            if (v != 1) ok = false;
            canonical_seen = true;
          }
        }
      if (!ok || det(f, 2, m) == 0) continue;
      ProjTransform T{2, m};
      if (linear_substitute(C1, T).scalar_equal(C2)) return T;
    }
    return std::nullopt;
  }
  ProjTransform m2t = make_transform(f, 2, *m2);
  ProjTransform m2inv = inverse(f, m2t);

  // candidate images of the frame among C1's points, frame test first
  for (std::size_t a = 0; a < z1.size(); ++a)
    for (std::size_t b = 0; b < z1.size(); ++b)
      for (std::size_t c = 0; c < z1.size(); ++c)
        for (std::size_t d = 0; d < z1.size(); ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          auto m1 = frame_matrix(f, z1[a], z1[b], z1[c], z1[d]);
          if (!m1) continue;
          ProjTransform T = compose(f, ProjTransform{2, *m1}, m2inv);
          // prune: T must map C2's point set into C1's
          bool ok = true;
          for (const auto& P : z2) {
            if (!in_z1[index_of(f, apply(f, T, P))]) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          if (linear_substitute(C1, T).scalar_equal(C2)) return T;
        }
  return std::nullopt;
}

CensusResult cubic_census_f4(int shard_index, int shard_count) {
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    throw UsageError("cubic_census_f4: bad shard spec");
  const Field& f4 = Registry::field(4);
  const Field& f16 = Registry::field(16);
  const Field& f64 = Registry::field(64);

  CensusResult res;
  res.shard_index = shard_index;
  res.shard_count = shard_count;

  CubicScan scan4, scan16, scan64;
  scan4.build(f4, f4);
  scan16.build(f4, f16);
  scan64.build(f4, f64);

  // F_4 line masks over the 21 points
  std::vector<std::uint32_t> line_mask;
  for (const auto& idx : scan4.line_pts) {
    std::uint32_t m = 0;
    for (std::uint32_t pi : idx) m |= (1u << pi);
    line_mask.push_back(m);
  }

  const HomPoly fermat = fermat_form(f4, 3);
  std::vector<Fe> vals4, vals16, vals64;
  std::vector<Fe> coeffs(10);

  std::uint32_t index = 0;
  for (int lead = 0; lead < 10; ++lead) {
    const long long tails = 1LL << (2 * (9 - lead));
    for (long long tail = 0; tail < tails; ++tail, ++index) {
      if (static_cast<int>(index % shard_count) != shard_index) continue;
      std::fill(coeffs.begin(), coeffs.end(), 0);
      coeffs[lead] = 1;
      long long t = tail;
      for (int pos = 9; pos > lead; --pos) {
        coeffs[pos] = static_cast<Fe>(t & 3);
        t >>= 2;
      }
      const int hi_block = coeffs[0] * 256 + coeffs[1] * 64 + coeffs[2] * 16 + coeffs[3] * 4 + coeffs[4];
      const int lo_block = coeffs[5] * 256 + coeffs[6] * 64 + coeffs[7] * 16 + coeffs[8] * 4 + coeffs[9];

      ++res.visited;
      scan4.values(hi_block, lo_block, vals4);
      std::uint32_t zero_mask = 0;
      for (int i = 0; i < 21; ++i)
        if (vals4[i] == 0) zero_mask |= (1u << i);
      const int n = std::popcount(zero_mask);
      ++res.hist_all[n];

      bool has_line = false;
      for (std::uint32_t m : line_mask)
        if ((m & ~zero_mask) == 0) {
          has_line = true;
          break;
        }
      if (has_line) {
        ++res.with_linear_component;
        continue;
      }
      ++res.hist_line_free[n];

      if (n > 9) {
        res.structural_failures.push_back("Sziklai violation: line-free cubic " +
                                          coeff_str(coeffs) + " has N=" + std::to_string(n));
        continue;
      }

      // Irreducibility threshold (d-2)q+3 = 7: line-free curves at or above
      // it must pass the absolute-irreducibility oracle. A conic factor of a
      // cubic forces an F_4-linear cofactor, already excluded above.
      if (n >= 7) {
        ++res.irreducibility_checked;
        scan16.values(hi_block, lo_block, vals16);
        scan64.values(hi_block, lo_block, vals64);
        if (scan16.has_full_line(vals16) || scan64.has_full_line(vals64)) {
          res.structural_failures.push_back("irreducibility failure: line-free cubic " +
                                            coeff_str(coeffs) + " with N=" + std::to_string(n) +
                                            " has an extension-field linear factor");
          continue;
        }
      }

      if (n != 9) continue;

      ++res.line_free_n9;
      CurveRecord rec;
      rec.index = index;
      rec.coeffs = coeffs;
      rec.n4 = n;
      HomPoly C = from_dense(f4, 3, 3, coeffs);

      auto sing = singular_fq_points(C);
      for (const auto& P : sing) rec.singular_points.push_back(index_of(f4, P));
      if (!sing.empty()) {
        res.structural_failures.push_back("nine-point line-free cubic " + coeff_str(coeffs) +
                                          " has a singular F_4-point");
        res.records.push_back(std::move(rec));
        continue;
      }

      bool all_flex = true;
      for (int i = 0; i < 21; ++i) {
        if (!(zero_mask & (1u << i))) continue;
        ProjPoint P = point_at(f4, 2, i);
        int mult = intersection_multiplicity(tangent_line(C, P), C, P);
        rec.flex_multiplicities.push_back(mult);
        if (mult < 3) all_flex = false;
      }
      rec.all_flexes = all_flex;

      if (all_flex) {
        auto T = projectively_equivalent(C, fermat);
        if (!T || !linear_substitute(C, *T).scalar_equal(fermat)) {
          res.structural_failures.push_back("all-flex nine-point cubic " + coeff_str(coeffs) +
                                            " is not equivalent to the Fermat cubic");
        } else {
          rec.hermitian_equivalent = true;
          rec.to_standard = *T;
          ++res.hermitian_equivalent_count;
        }
        ++res.all_flex_count;
      }
      res.records.push_back(std::move(rec));
    }
  }
  return res;
}

KCurveReport k_curve_check() {
  const Field& f4 = Registry::field(4);
  HomPoly K = exceptional_quartic_f4();
  KCurveReport rep;
  rep.n4 = count_points(K);
  bool complement = true;
  long long subplane = 0;
  for_points(f4, 2, [&](const ProjPoint& P) {
    bool in_f2 = true;
    for (int i = 0; i < 3; ++i)
      if (P.x[i] > 1) in_f2 = false;
    if (in_f2) ++subplane;
    bool on_curve = (K.evaluate(P) == 0);
    if (on_curve == in_f2) complement = false;
  });
  rep.complement_of_subplane = complement;
  rep.consistent = (rep.n4 == point_count(4, 2) - subplane);
  return rep;
}

ProbeSummary random_surface_probe(int q, long long trials, std::uint64_t seed,
                                  int shard_index, int shard_count) {
  if (q != 4 && q != 9) throw CapabilityError("random_surface_probe: q must be 4 or 9");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    throw UsageError("random_surface_probe: bad shard spec");
  const Field& f = Registry::field(q);
  const int d = f.sqrt_q() + 1;
  const auto& mons = monomials(4, d);
  const long long npts = point_count(q, 3);
  const long long extremal = predicted_count(3, f);
  const long long bound = elementary(d, q);

  // monomial values at every point of P^3 and the plane incidence masks
  std::vector<ProjPoint> pts(npts);
  for (long long i = 0; i < npts; ++i) pts[i] = point_at(f, 3, i);
  std::vector<std::vector<Fe>> monval(npts, std::vector<Fe>(mons.size()));
  for (long long i = 0; i < npts; ++i)
    for (std::size_t k = 0; k < mons.size(); ++k) {
      Fe v = 1;
      for (int j = 0; j < 4; ++j)
        if (mons[k][j]) v = f.mul(v, f.pow(pts[i].x[j], mons[k][j]));
      monval[i][k] = v;
    }
  const int words = static_cast<int>((npts + 63) / 64);
  std::vector<std::vector<std::uint64_t>> plane_mask(npts, std::vector<std::uint64_t>(words, 0));
  for (long long h = 0; h < npts; ++h) {
    const Vec4 dual = pts[h].x;
    for (long long i = 0; i < npts; ++i) {
      Fe acc = 0;
      for (int j = 0; j < 4; ++j) acc = f.add(acc, f.mul(dual[j], pts[i].x[j]));
      if (acc == 0) plane_mask[h][i / 64] |= (1ULL << (i % 64));
    }
  }

  ProbeSummary sum;
  sum.q = q;
  sum.seed = seed;
  sum.trials = trials;
  sum.shard_index = shard_index;
  sum.shard_count = shard_count;

  std::vector<Fe> coeffs(mons.size());
  std::vector<std::uint64_t> zero(words);
  for (long long trial = 0; trial < trials; ++trial) {
    if (static_cast<int>(trial % shard_count) != shard_index) continue;
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : coeffs) {
        c = static_cast<Fe>(rng.below(q));
        nonzero |= (c != 0);
      }
    }
    std::fill(zero.begin(), zero.end(), 0);
    long long n = 0;
    for (long long i = 0; i < npts; ++i) {
      Fe acc = 0;
      const auto& mv = monval[i];
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) acc = f.add(acc, f.mul(coeffs[k], mv[k]));
      if (acc == 0) {
        zero[i / 64] |= (1ULL << (i % 64));
        ++n;
      }
    }
    bool plane_component = false;
    for (long long h = 0; h < npts && !plane_component; ++h) {
      bool subset = true;
      for (int w = 0; w < words; ++w)
        if (plane_mask[h][w] & ~zero[w]) {
          subset = false;
          break;
        }
      plane_component = subset;
    }
    if (plane_component) {
      ++sum.rejected_plane_component;
      continue;
    }
    ++sum.histogram[static_cast<int>(n)];
    if (n > bound) {
      sum.structural_failures.push_back("elementary bound exceeded at trial " +
                                        std::to_string(trial) + ": N=" + std::to_string(n));
      continue;
    }
    if (n == extremal) {
      ExtremalHit hit;
      hit.trial = trial;
      hit.coeffs = coeffs;
      HomPoly S = from_dense(f, 4, d, coeffs);
      SectionReport rep = section_survey(S);
      hit.survey_ok = (rep.nu_other == 0 && rep.nu1 == extremal);
      auto rec = reconstruct_hermitian(S);
      hit.reconstructed = rec.success;
      if (!hit.survey_ok || !hit.reconstructed) {
        sum.structural_failures.push_back("extremal sample at trial " + std::to_string(trial) +
                                          " failed " + (hit.survey_ok ? "reconstruction" : "survey"));
      }
      sum.extremal.push_back(std::move(hit));
    }
  }
  return sum;
}

namespace {

HomPoly drop_x0(const HomPoly& G) {
  std::vector<HomPoly::Term> terms;
  for (const auto& t : G.terms()) {
    if (t.e[0] != 0) continue;
    Expo e{t.e[1], t.e[2], t.e[3], 0};
    terms.push_back({e, t.c});
  }
  return HomPoly(G.field(), 3, G.degree(), std::move(terms));
}

}  // namespace

ReconstructResult reconstruct_hermitian(const HomPoly& S) {
  const Field& f = S.field();
  ReconstructResult res;
  if (S.nvars() != 4) throw UsageError("reconstruct_hermitian: need a 4-variable form");
  if (S.degree() != f.sqrt_q() + 1)
    throw UsageError("reconstruct_hermitian: degree must be sqrt(q)+1");
  if (!plane_components(S).empty())
    throw UsageError("reconstruct_hermitian: surface has an F_q-plane component");
  const long long extremal = predicted_count(3, f);
  if (count_points(S) != extremal)
    throw UsageError("reconstruct_hermitian: point count is not the extremal number");

  auto fail = [&](const std::string& why) {
    res.success = false;
    res.failure = why;
    return res;
  };

  // (1) classify all planes, pick the first Hermitian section
  SectionReport rep = section_survey(S);
  if (rep.nu_other != 0)
    return fail("section survey found a plane that is neither pencil nor Hermitian");
  const PlaneSection* herm_plane = nullptr;
  for (const auto& ps : rep.planes)
    if (ps.cls.kind == SectionKind::Hermitian) {
      herm_plane = &ps;
      break;
    }
  if (!herm_plane) return fail("no Hermitian plane section found");

  // (2) move H_infinity to {X_0 = 0}; columns are an off-plane point plus the
  // deterministic frame of the plane, so the new X_0 = 0 section is exactly
  // the frame restriction.
  const ProjPlane& Hinf = herm_plane->plane;
  auto frame = plane_frame(f, Hinf);
  ProjPoint off = [&] {
    const long long total = point_count(f.q(), 3);
    for (long long i = 0; i < total; ++i) {
      ProjPoint P = point_at(f, 3, i);
      if (!plane_contains(f, Hinf, P)) return P;
    }
    throw UsageError("reconstruct_hermitian: no point off the plane");
  }();
  Mat4 t1{};
  for (int i = 0; i < 4; ++i) {
    t1[i][0] = off.x[i];
    for (int k = 0; k < 3; ++k) t1[i][k + 1] = frame[k].x[i];
  }
  ProjTransform total = make_transform(f, 3, t1);
  HomPoly G = linear_substitute(S, total);

  // bring the section to the hyperbolic form via standardization and the
  // fixed post-transform U with tU^(sq) U = B
  HomPoly section = drop_x0(G);
  auto det_sec = detect_hermitian(section);
  if (!det_sec || !is_nonsingular(f, det_sec->second))
    return fail("transported section is not a nonsingular Hermitian curve");
  ProjTransform t3 = standardize(f, det_sec->second);
  Mat4 braw{};
  braw[0][1] = 1;
  braw[1][0] = 1;
  braw[2][2] = 1;
  HermitianMatrix B = make_hermitian(f, 2, braw);
  ProjTransform U = inverse(f, standardize(f, B));
  ProjTransform v3 = compose(f, t3, U);
  Mat4 t2{};
  t2[0][0] = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t2[i + 1][j + 1] = v3.m[i][j];
  total = compose(f, total, make_transform(f, 3, t2));
  G = linear_substitute(S, total);

  // (3)+(4) the tangent lines L_alpha = {X_0 = X_alpha = 0} each lie in a
  // unique pencil plane; shears X_alpha -> X_alpha + c X_0 move it to
  // {X_alpha = 0} without touching the section at infinity.
  for (int alpha = 1; alpha <= 2; ++alpha) {
    ProjLine L;
    L.n = 3;
    int free1 = (alpha == 1) ? 2 : 1;
    int free2 = 3;
    L.b[0][free1] = 1;
    L.b[1][free2] = 1;
    auto planes = planes_through_line(f, L);
    int pencils = 0;
    Vec4 pencil_dual{};
    for (const auto& H : planes) {
      SectionClass cls = classify_section(G, H);
      if (cls.kind == SectionKind::Pencil) {
        ++pencils;
        pencil_dual = H.h;
      }
    }
    if (pencils != 1)
      return fail("expected exactly one pencil plane through the tangent line, found " +
                  std::to_string(pencils));
    if (pencil_dual[alpha] == 0)
      return fail("pencil plane through the tangent line is the section at infinity");
    // plane {h0 X0 + ha Xa = 0} = {Xa = c X0} with c = -h0/ha
    Fe c = f.neg(f.div(pencil_dual[0], pencil_dual[alpha]));
    if (c != 0) {
      Mat4 shear{};
      for (int i = 0; i < 4; ++i) shear[i][i] = 1;
      shear[alpha][0] = c;
      total = compose(f, total, make_transform(f, 3, shear));
      G = linear_substitute(S, total);
    }
  }

  // (5) the transformed equation must now be Hermitian with det != 0
  auto det_fin = detect_hermitian(G);
  if (!det_fin) return fail("normalized equation is not of Hermitian shape");
  if (!is_nonsingular(f, det_fin->second))
    return fail("normalized equation has a singular Hermitian matrix");
  if (!linear_substitute(S, total).scalar_equal(to_polynomial(f, det_fin->second)))
    return fail("round-trip verification failed");

  res.success = true;
  res.transform = total;
  res.rho = det_fin->first;
  res.matrix = det_fin->second;
  return res;
}

}  // namespace herm
