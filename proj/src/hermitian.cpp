#include "herm/hermitian.hpp"

#include <algorithm>

namespace herm {

bool is_hermitian_matrix(const Field& f, int n, const Mat4& entries) {
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (entries[j][i] != f.conj(entries[i][j])) return false;
  return true;
}

HermitianMatrix make_hermitian(const Field& f, int n, const Mat4& entries) {
  if (n < 1 || n > 3) throw UsageError("HermitianMatrix: n must be in {1,2,3}");
  if (!f.has_conjugation()) throw UsageError("HermitianMatrix: field has no conjugation");
  if (!is_hermitian_matrix(f, n, entries))
    throw UsageError("HermitianMatrix: tA != A^(sqrt q)");
  HermitianMatrix A;
  A.n = n;
  A.a = entries;
  return A;
}

HomPoly to_polynomial(const Field& f, const HermitianMatrix& A) {
  const int s = f.sqrt_q();
  std::vector<HomPoly::Term> terms;
  for (int i = 0; i <= A.n; ++i) {
    for (int j = 0; j <= A.n; ++j) {
      if (A.a[i][j] == 0) continue;
      Expo e{};
      e[i] = static_cast<std::uint8_t>(e[i] + s);
      e[j] = static_cast<std::uint8_t>(e[j] + 1);
      terms.push_back({e, A.a[i][j]});
    }
  }
  return HomPoly(f, A.n + 1, s + 1, std::move(terms));
}

std::optional<std::pair<Fe, HermitianMatrix>> detect_hermitian(const HomPoly& F) {
  const Field& f = F.field();
  const int s = f.sqrt_q();
  if (F.degree() != s + 1) throw UsageError("detect_hermitian: degree must be sqrt(q)+1");
  const int n = F.nvars() - 1;

  // Shape filter: every monomial must be X_i^{sqrt q} X_j.
  Mat4 c{};
  for (const auto& t : F.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v <= n; ++v) {
      if (t.e[v] == 0) continue;
      if (t.e[v] == s + 1 && i < 0 && j < 0) {
        i = j = v;
      } else if (t.e[v] == s && i < 0) {
        i = v;
      } else if (t.e[v] == 1 && j < 0) {
        j = v;
      } else {
        return std::nullopt;
      }
    }
    if (i < 0 || j < 0) return std::nullopt;
    c[i][j] = t.c;
  }

  for (int rho = 1; rho < f.q(); ++rho) {
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      for (int j = 0; j <= n && ok; ++j)
        if (f.conj(f.mul(static_cast<Fe>(rho), c[i][j])) !=
            f.mul(static_cast<Fe>(rho), c[j][i]))
          ok = false;
    if (!ok) continue;
    Mat4 a{};
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) a[i][j] = f.mul(static_cast<Fe>(rho), c[i][j]);
    return std::make_pair(static_cast<Fe>(rho), make_hermitian(f, n, a));
  }
  return std::nullopt;
}

bool is_nonsingular(const Field& f, const HermitianMatrix& A) {
  return det(f, A.n, A.a) != 0;
}

long long predicted_count(int n, const Field& f) {
  const long long s = f.sqrt_q();
  long long sn = 1, sn1 = 1;
  for (int i = 0; i < n; ++i) sn *= s;
  sn1 = sn * s;
  const long long sign_n = (n % 2 == 0) ? 1 : -1;
  long long num = (sn1 + sign_n) * (sn - sign_n);
  if (num % (f.q() - 1) != 0) throw UsageError("predicted_count: non-integral result");
  return num / (f.q() - 1);
}

namespace {

// Sesquilinear form phi(u, v) = sum u_i^{sqrt q} a_ij v_j on row vectors.
Fe phi(const Field& f, const HermitianMatrix& A, const Vec4& u, const Vec4& v) {
  Fe acc = 0;
  for (int i = 0; i <= A.n; ++i) {
    if (u[i] == 0) continue;
    Fe ui = f.conj(u[i]);
    for (int j = 0; j <= A.n; ++j) {
      if (A.a[i][j] == 0 || v[j] == 0) continue;
      acc = f.add(acc, f.mul(ui, f.mul(A.a[i][j], v[j])));
    }
  }
  return acc;
}

}  // namespace

ProjTransform standardize(const Field& f, const HermitianMatrix& A) {
  if (!is_nonsingular(f, A)) throw UsageError("standardize: singular matrix");
  const int n = A.n;

  std::vector<Vec4> complement;  // ambient row vectors spanning the current space
  for (int i = 0; i <= n; ++i) {
    Vec4 v{};
    v[i] = 1;
    complement.push_back(v);
  }

  std::vector<Vec4> ortho;
  while (!complement.empty()) {
    const int dim = static_cast<int>(complement.size());
    // scan projective representatives for an anisotropic vector
    Vec4 found{};
    bool have = false;
    const long long total = point_count(f.q(), dim - 1);
    for (long long idx = 0; idx < total && !have; ++idx) {
      ProjPoint coords = point_at(f, dim - 1, idx);
      Vec4 u{};
      for (int k = 0; k < dim; ++k) {
        if (coords.x[k] == 0) continue;
        for (int j = 0; j <= n; ++j)
          u[j] = f.add(u[j], f.mul(coords.x[k], complement[k][j]));
      }
      if (phi(f, A, u, u) != 0) {
        found = u;
        have = true;
      }
    }
    if (!have) throw UsageError("standardize: no anisotropic vector (degenerate form)");

    // normalize to norm 1 through the norm fiber table
    Fe nv = phi(f, A, found, found);
    Fe lambda = f.norm_solve(f.inv(nv));
    Vec4 b{};
    for (int j = 0; j <= n; ++j) b[j] = f.mul(lambda, found[j]);
    ortho.push_back(b);

    // pass to the conjugate-orthogonal complement: phi(b, w) = 0 is linear in w
    Vec4 r{};
    for (int j = 0; j <= n; ++j) {
      Fe acc = 0;
      for (int i = 0; i <= n; ++i) acc = f.add(acc, f.mul(f.conj(b[i]), A.a[i][j]));
      r[j] = acc;
    }
    // constraint on coordinates c over the current basis: sum_k c_k (r . W_k) = 0
    Vec4 constraint{};
    for (int k = 0; k < dim; ++k) {
      Fe acc = 0;
      for (int j = 0; j <= n; ++j) acc = f.add(acc, f.mul(r[j], complement[k][j]));
      constraint[k] = acc;
    }
    auto coeff_basis = kernel_basis(f, {constraint}, dim);
    std::vector<Vec4> next;
    for (const auto& cb : coeff_basis) {
      Vec4 w{};
      for (int k = 0; k < dim; ++k) {
        if (cb[k] == 0) continue;
        for (int j = 0; j <= n; ++j) w[j] = f.add(w[j], f.mul(cb[k], complement[k][j]));
      }
      next.push_back(w);
    }
    complement = std::move(next);
  }

  // rows b_i are phi-orthonormal; P = transpose(B) gives tP^(sqrt q) A P = I
  Mat4 P{};
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) P[i][j] = ortho[j][i];
  ProjTransform T;
  T.n = n;
  T.m = P;
  if (det(f, n, P) == 0) throw UsageError("standardize: produced singular transform");
  // keep the exact matrix (no canonical rescaling): the congruence identity
  // tP^(sqrt q) A P = I is scale-sensitive.
  return T;
}

bool hermitian_space_check(int n, const Field& f) {
  // Basis matrices: diagonal units and the two F_{sqrt q}-independent
  // off-diagonal pairs per (i, j).
  std::vector<Mat4> basis;
  for (int i = 0; i <= n; ++i) {
    Mat4 m{};
    m[i][i] = 1;
    basis.push_back(m);
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (Fe c : {static_cast<Fe>(1), f.gen()}) {
        Mat4 m{};
        m[i][j] = c;
        m[j][i] = f.conj(c);
        basis.push_back(m);
      }
    }
  }
  // exact closure over all basis pairs and all subfield scalars
  for (const auto& A : basis) {
    for (const auto& B : basis) {
      for (int lam = 0; lam < f.q(); ++lam) {
        if (!f.in_subfield(static_cast<Fe>(lam))) continue;
        Mat4 m{};
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j)
            m[i][j] = f.add(f.mul(static_cast<Fe>(lam), A[i][j]), B[i][j]);
        if (!is_hermitian_matrix(f, n, m)) return false;
      }
    }
  }
  // witness: scaling by a non-subfield element must break the property
  Fe w = f.gen();
  if (f.in_subfield(w)) return false;
  Mat4 m{};
  m[0][0] = w;
  if (is_hermitian_matrix(f, n, m)) return false;
  return true;
}

}  // namespace herm
