#include "herm/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace herm {

namespace {

bool expo_desc(const Expo& a, const Expo& b) { return a > b; }

int total_degree(const Expo& e) { return e[0] + e[1] + e[2] + e[3]; }

// Binomial coefficient as an exact small integer (arguments stay <= 8 here).
long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HomPoly::HomPoly(const Field& f, int nvars, int degree, std::vector<Term> terms)
    : field_(&f), nvars_(nvars), degree_(degree) {
  if (nvars < 2 || nvars > 4) throw UsageError("HomPoly: nvars must be in {2,3,4}");
  if (degree < 0) throw UsageError("HomPoly: negative degree");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return expo_desc(a.e, b.e); });
  for (const auto& t : terms) {
    if (total_degree(t.e) != degree)
      throw UsageError("HomPoly: term degree mismatch");
    for (int i = nvars; i < 4; ++i)
      if (t.e[i] != 0) throw UsageError("HomPoly: exponent beyond nvars");
  }
  // merge equal monomials, drop zeros
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().e == t.e) {
      terms_.back().c = f.add(terms_.back().c, t.c);
    } else {
      terms_.push_back(t);
    }
    if (terms_.back().c == 0) terms_.pop_back();
  }
}

HomPoly HomPoly::zero(const Field& f, int nvars, int degree) {
  return HomPoly(f, nvars, degree, {});
}

Fe HomPoly::coeff(const Expo& e) const {
  for (const auto& t : terms_)
    if (t.e == e) return t.c;
  return 0;
}

Fe HomPoly::evaluate(const Vec4& x) const {
  const Field& f = *field_;
  Fe acc = 0;
  for (const auto& t : terms_) {
    Fe v = t.c;
    for (int i = 0; i < nvars_; ++i) {
      if (t.e[i] == 0) continue;
      if (x[i] == 0) {
        v = 0;
        break;
      }
      v = f.mul(v, f.pow(x[i], t.e[i]));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

HomPoly HomPoly::scaled(Fe s) const {
  std::vector<Term> out;
  if (s != 0) {
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.e, field_->mul(s, t.c)});
  }
  return HomPoly(*field_, nvars_, degree_, std::move(out));
}

HomPoly HomPoly::canonical() const {
  if (terms_.empty()) return *this;
  // first dense-order monomial = largest exponent vector = first stored term
  return scaled(field_->inv(terms_.front().c));
}

bool HomPoly::scalar_equal(const HomPoly& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  return canonical() == other.canonical();
}

bool HomPoly::operator==(const HomPoly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

const std::vector<Expo>& monomials(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Expo>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Expo> out;
  Expo e{};
  // descending lex enumeration
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[var] = static_cast<std::uint8_t>(remaining);
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = static_cast<std::uint8_t>(k);
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<Fe> dense_coeffs(const HomPoly& F) {
  const auto& mons = monomials(F.nvars(), F.degree());
  std::vector<Fe> out(mons.size(), 0);
  for (std::size_t i = 0; i < mons.size(); ++i) out[i] = F.coeff(mons[i]);
  return out;
}

HomPoly from_dense(const Field& f, int nvars, int degree, const std::vector<Fe>& coeffs) {
  const auto& mons = monomials(nvars, degree);
  if (coeffs.size() != mons.size()) throw UsageError("from_dense: size mismatch");
  std::vector<HomPoly::Term> terms;
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({mons[i], coeffs[i]});
  return HomPoly(f, nvars, degree, std::move(terms));
}

HomPoly add(const HomPoly& a, const HomPoly& b) {
  if (&a.field() != &b.field() || a.nvars() != b.nvars() || a.degree() != b.degree())
    throw UsageError("add: incompatible polynomials");
  std::vector<HomPoly::Term> terms = a.terms();
  for (const auto& t : b.terms()) terms.push_back(t);
  return HomPoly(a.field(), a.nvars(), a.degree(), std::move(terms));
}

HomPoly mul(const HomPoly& a, const HomPoly& b) {
  if (&a.field() != &b.field() || a.nvars() != b.nvars())
    throw UsageError("mul: incompatible polynomials");
  const Field& f = a.field();
  std::map<Expo, Fe, std::greater<Expo>> acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Expo e{};
      for (int i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(s.e[i] + t.e[i]);
      Fe& slot = acc[e];
      slot = f.add(slot, f.mul(s.c, t.c));
    }
  }
  std::vector<HomPoly::Term> terms;
  for (const auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, c});
  return HomPoly(f, a.nvars(), a.degree() + b.degree(), std::move(terms));
}

HomPoly pow(const HomPoly& a, int k) {
  HomPoly r(a.field(), a.nvars(), 0, {{Expo{}, 1}});
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

HomPoly derivative(const HomPoly& F, int var) {
  const Field& f = F.field();
  std::vector<HomPoly::Term> terms;
  for (const auto& t : F.terms()) {
    if (t.e[var] == 0) continue;
    Fe c = f.mul(t.c, f.from_int(t.e[var]));
    if (c == 0) continue;
    Expo e = t.e;
    e[var] -= 1;
    terms.push_back({e, c});
  }
  return HomPoly(f, F.nvars(), std::max(F.degree() - 1, 0), std::move(terms));
}

HomPoly embed_poly(const HomPoly& F, const TowerEmbedding& emb) {
  if (&F.field() != &emb.source()) throw UsageError("embed_poly: field mismatch");
  std::vector<HomPoly::Term> terms;
  for (const auto& t : F.terms()) terms.push_back({t.e, emb.map(t.c)});
  return HomPoly(emb.target(), F.nvars(), F.degree(), std::move(terms));
}

long long count_points(const HomPoly& F) {
  const Field& f = F.field();
  const int n = F.nvars() - 1;
  long long count = 0;
  for_points(f, n, [&](const ProjPoint& P) {
    if (F.evaluate(P) == 0) ++count;
  });
  return count;
}

long long count_points(const HomPoly& F, const Field& ext) {
  if (&ext == &F.field()) return count_points(F);
  const auto& emb = Registry::embedding(F.field().q(), ext.q());
  return count_points(embed_poly(F, emb));
}

namespace {

// Substitute X_i -> linear_i and expand; linear forms given as rows of
// coefficients over the target variables.
HomPoly substitute_linear_forms(const HomPoly& F, const std::vector<Vec4>& linear,
                                int out_nvars) {
  const Field& f = F.field();
  // power cache per input variable
  std::vector<std::vector<HomPoly>> pows(F.nvars());
  for (int i = 0; i < F.nvars(); ++i) {
    std::vector<HomPoly::Term> lt;
    for (int j = 0; j < out_nvars; ++j) {
      if (linear[i][j] == 0) continue;
      Expo e{};
      e[j] = 1;
      lt.push_back({e, linear[i][j]});
    }
    pows[i].push_back(HomPoly(f, out_nvars, 0, {{Expo{}, 1}}));
    pows[i].push_back(HomPoly(f, out_nvars, 1, std::move(lt)));
  }
  auto var_pow = [&](int i, int k) -> const HomPoly& {
    while (static_cast<int>(pows[i].size()) <= k)
      pows[i].push_back(mul(pows[i].back(), pows[i][1]));
    return pows[i][k];
  };

  std::map<Expo, Fe, std::greater<Expo>> acc;
  for (const auto& t : F.terms()) {
    HomPoly prod(f, out_nvars, 0, {{Expo{}, t.c}});
    for (int i = 0; i < F.nvars(); ++i) {
      if (t.e[i] == 0) continue;
      prod = mul(prod, var_pow(i, t.e[i]));
      if (prod.is_zero()) break;
    }
    for (const auto& u : prod.terms()) {
      Fe& slot = acc[u.e];
      slot = f.add(slot, u.c);
    }
  }
  std::vector<HomPoly::Term> terms;
  for (const auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, c});
  return HomPoly(f, out_nvars, F.degree(), std::move(terms));
}

}  // namespace

HomPoly restrict_to_plane(const HomPoly& F, const ProjPlane& H) {
  if (F.nvars() != 4) throw UsageError("restrict_to_plane: need a 4-variable form");
  const Field& f = F.field();
  auto frame = plane_frame(f, H);
  std::vector<Vec4> linear(4);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k) linear[i][k] = frame[k].x[i];
  return substitute_linear_forms(F, linear, 3);
}

std::vector<Fe> restrict_to_line(const HomPoly& F, const Vec4& A, const Vec4& B) {
  const Field& f = F.field();
  const int d = F.degree();
  std::vector<Fe> out(d + 1, 0);
  std::vector<Fe> factor, next;
  for (const auto& t : F.terms()) {
    // expand prod_i (A_i s + B_i t)^{e_i} over the t-degree
    factor.assign(1, t.c);
    for (int i = 0; i < F.nvars(); ++i) {
      const int e = t.e[i];
      if (e == 0) continue;
      // (A_i s + B_i t)^e via the binomial theorem
      std::vector<Fe> bin(e + 1, 0);
      for (int k = 0; k <= e; ++k) {
        Fe c = f.from_int(binom(e, k));
        if (c == 0) continue;
        c = f.mul(c, f.pow(A[i], e - k));
        c = f.mul(c, f.pow(B[i], k));
        bin[k] = c;
      }
      next.assign(factor.size() + e, 0);
      for (std::size_t a = 0; a < factor.size(); ++a) {
        if (factor[a] == 0) continue;
        for (int k = 0; k <= e; ++k) {
          if (bin[k] == 0) continue;
          next[a + k] = f.add(next[a + k], f.mul(factor[a], bin[k]));
        }
      }
      factor.swap(next);
    }
    for (std::size_t k = 0; k < factor.size(); ++k) out[k] = f.add(out[k], factor[k]);
  }
  return out;
}

HomPoly linear_substitute(const HomPoly& F, const ProjTransform& T) {
  if (T.n + 1 != F.nvars()) throw UsageError("linear_substitute: dimension mismatch");
  std::vector<Vec4> linear(F.nvars());
  for (int i = 0; i < F.nvars(); ++i) linear[i] = T.m[i];
  return substitute_linear_forms(F, linear, F.nvars());
}

bool linear_divides(const HomPoly& F, const Vec4& dual) {
  const Field& f = F.field();
  if (F.nvars() == 3) {
    auto basis = kernel_basis(f, {dual}, 3);
    auto coeffs = restrict_to_line(F, basis[0], basis[1]);
    return std::all_of(coeffs.begin(), coeffs.end(), [](Fe c) { return c == 0; });
  }
  ProjPlane H = make_plane(f, dual);
  return restrict_to_plane(F, H).is_zero();
}

std::optional<HomPoly> divide_by_linear(const HomPoly& F, const HomPoly& L) {
  if (L.degree() != 1 || L.is_zero()) throw UsageError("divide_by_linear: L must be linear");
  if (&F.field() != &L.field() || F.nvars() != L.nvars())
    throw UsageError("divide_by_linear: incompatible polynomials");
  const Field& f = F.field();
  const int nv = F.nvars();

  Vec4 dual{};
  for (const auto& t : L.terms())
    for (int i = 0; i < nv; ++i)
      if (t.e[i] == 1) dual[i] = t.c;

  if (!linear_divides(F, dual)) return std::nullopt;
  if (F.is_zero()) return HomPoly::zero(f, nv, std::max(F.degree() - 1, 0));

  // Coordinate change S with L(S x) = X_k, then strip one power of X_k.
  int k = 0;
  while (dual[k] == 0) ++k;
  auto kern = kernel_basis(f, {dual}, nv);
  Mat4 S{};
  Vec4 vk{};
  vk[k] = f.inv(dual[k]);
  int col = 0;
  for (int j = 0; j < nv; ++j) {
    Vec4 column = (j == k) ? vk : kern[col++];
    for (int i = 0; i < nv; ++i) S[i][j] = column[i];
  }
  ProjTransform sub = make_transform(f, nv - 1, S);
  // make_transform rescales; recover the exact matrix scale for L . S = X_k
  HomPoly G = substitute_linear_forms(F, std::vector<Vec4>(sub.m.begin(), sub.m.begin() + nv), nv);
  std::vector<HomPoly::Term> stripped;
  for (const auto& t : G.terms()) {
    if (t.e[k] == 0) throw UsageError("divide_by_linear: internal divisibility failure");
    Expo e = t.e;
    e[k] -= 1;
    stripped.push_back({e, t.c});
  }
  HomPoly Qs(f, nv, F.degree() - 1, std::move(stripped));
  HomPoly Q = substitute_linear_forms(
      Qs, [&] {
        ProjTransform inv_sub = inverse(f, sub);
        return std::vector<Vec4>(inv_sub.m.begin(), inv_sub.m.begin() + nv);
      }(),
      nv);
  // rescaling by make_transform and the L(Sx) scale cancel up to a constant;
  // fix the constant so that L * Q = F holds term-for-term.
  HomPoly prod = mul(L, Q);
  if (prod.is_zero()) return std::nullopt;
  Fe ratio = f.div(F.terms().front().c, prod.coeff(F.terms().front().e));
  Q = Q.scaled(ratio);
  if (!(mul(L, Q) == F)) throw UsageError("divide_by_linear: verification failed");
  return Q;
}

std::optional<HomPoly> exact_cofactor(const HomPoly& F, const HomPoly& Q) {
  if (&F.field() != &Q.field() || F.nvars() != Q.nvars())
    throw UsageError("exact_cofactor: incompatible polynomials");
  if (Q.is_zero()) throw UsageError("exact_cofactor: zero divisor");
  const Field& f = F.field();
  const int dr = F.degree() - Q.degree();
  if (dr < 0) return std::nullopt;
  const auto& rmons = monomials(F.nvars(), dr);
  const auto& fmons = monomials(F.nvars(), F.degree());
  std::map<Expo, int, std::greater<Expo>> col_of;
  for (std::size_t i = 0; i < fmons.size(); ++i) col_of[fmons[i]] = static_cast<int>(i);

  // rows: product monomials; columns: unknown cofactor coefficients
  const int nrows = static_cast<int>(fmons.size());
  const int ncols = static_cast<int>(rmons.size());
  std::vector<std::vector<Fe>> m(nrows, std::vector<Fe>(ncols + 1, 0));
  for (int j = 0; j < ncols; ++j) {
    for (const auto& t : Q.terms()) {
      Expo e{};
      for (int i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(rmons[j][i] + t.e[i]);
      auto& row = m[col_of.at(e)];
      row[j] = f.add(row[j], t.c);
    }
  }
  for (int i = 0; i < nrows; ++i) m[i][ncols] = F.coeff(fmons[i]);

  // Gaussian elimination with the augmented column.
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Fe s = f.inv(m[rank][col]);
    for (int j = col; j <= ncols; ++j) m[rank][j] = f.mul(s, m[rank][j]);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Fe c = m[r][col];
      for (int j = col; j <= ncols; ++j) m[r][j] = f.sub(m[r][j], f.mul(c, m[rank][j]));
    }
    ++rank;
  }
  // read off a solution; inconsistent system means no exact cofactor
  std::vector<Fe> sol(ncols, 0);
  int row = 0;
  for (int col = 0; col < ncols; ++col) {
    if (row < nrows && m[row][col] != 0) {
      sol[col] = m[row][ncols];
      ++row;
    }
  }
  for (int r = row; r < nrows; ++r)
    if (m[r][ncols] != 0) return std::nullopt;
  HomPoly R = from_dense(f, F.nvars(), dr, sol);
  if (!(mul(Q, R) == F)) return std::nullopt;
  return R;
}

std::vector<std::pair<HomPoly, int>> fq_linear_components(const HomPoly& F, int ext_degree) {
  if (F.nvars() != 3) throw UsageError("fq_linear_components: ternary forms only");
  if (F.is_zero()) throw UsageError("fq_linear_components: zero polynomial");
  if (ext_degree < 1 || ext_degree > 3)
    throw UsageError("fq_linear_components: extension degree must be in {1,2,3}");
  const Field& base = F.field();
  long long qm = 1;
  for (int i = 0; i < ext_degree; ++i) qm *= base.q();
  const Field& ext = Registry::field(static_cast<int>(qm));
  HomPoly G = (ext_degree == 1) ? F : embed_poly(F, Registry::embedding(base.q(), ext.q()));

  std::vector<std::pair<HomPoly, int>> out;
  const long long nduals = point_count(ext.q(), 2);
  for (long long i = 0; i < nduals; ++i) {
    ProjPoint dual = point_at(ext, 2, i);
    if (!linear_divides(G, dual.x)) continue;
    std::vector<HomPoly::Term> lt;
    for (int j = 0; j < 3; ++j) {
      if (dual.x[j] == 0) continue;
      Expo e{};
      e[j] = 1;
      lt.push_back({e, dual.x[j]});
    }
    HomPoly L(ext, 3, 1, std::move(lt));
    int mult = 0;
    HomPoly rest = G;
    while (!rest.is_zero() && rest.degree() >= 1) {
      auto quo = divide_by_linear(rest, L);
      if (!quo) break;
      ++mult;
      rest = *quo;
      if (rest.degree() == 0) break;
    }
    out.emplace_back(std::move(L), mult);
  }
  return out;
}

std::vector<ProjPoint> singular_fq_points(const HomPoly& C) {
  if (C.nvars() != 3) throw UsageError("singular_fq_points: ternary forms only");
  const Field& f = C.field();
  HomPoly d0 = derivative(C, 0), d1 = derivative(C, 1), d2 = derivative(C, 2);
  std::vector<ProjPoint> out;
  for_points(f, 2, [&](const ProjPoint& P) {
    if (C.evaluate(P) != 0) return;
    if (d0.evaluate(P) == 0 && d1.evaluate(P) == 0 && d2.evaluate(P) == 0)
      out.push_back(P);
  });
  return out;
}

Vec4 tangent_dual(const HomPoly& C, const ProjPoint& P) {
  if (C.nvars() != 3) throw UsageError("tangent_dual: ternary forms only");
  if (C.evaluate(P) != 0) throw UsageError("tangent_dual: point not on curve");
  Vec4 grad{};
  for (int i = 0; i < 3; ++i) grad[i] = derivative(C, i).evaluate(P);
  if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0)
    throw UsageError("tangent_dual: singular point");
  return grad;
}

ProjLine tangent_line(const HomPoly& C, const ProjPoint& P) {
  const Field& f = C.field();
  Vec4 grad = tangent_dual(C, P);
  auto basis = kernel_basis(f, {grad}, 3);
  return line_through(f, make_point(f, 2, basis[0]), make_point(f, 2, basis[1]));
}

int intersection_multiplicity(const ProjLine& l, const HomPoly& C, const ProjPoint& P) {
  const Field& f = C.field();
  if (!line_contains(f, l, P)) throw UsageError("intersection_multiplicity: P not on l");
  if (C.evaluate(P) != 0) throw UsageError("intersection_multiplicity: P not on C");
  // canonical second basis vector: the first RREF row independent of P
  ProjPoint b0 = make_point(f, l.n, l.b[0]);
  Vec4 B = (b0 == P) ? l.b[1] : l.b[0];
  auto coeffs = restrict_to_line(C, P.x, B);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) return static_cast<int>(k);
  throw UsageError("intersection_multiplicity: line is a component of the curve");
}

HomPoly parse_poly(const Field& f, const std::string& text, int force_nvars) {
  struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
      skip();
      return i >= s.size();
    }
    char peek() {
      skip();
      return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
      throw UsageError("polynomial parse error at position " + std::to_string(i + 1) + ": " + msg);
    }
  } cur{text};

  struct TermAccum {
    Fe c;
    Expo e;
  };
  std::vector<TermAccum> accum;
  int degree = -1;
  int max_var = -1;

  auto parse_int = [&]() -> long long {
    cur.skip();
    if (cur.i >= text.size() || !isdigit(static_cast<unsigned char>(text[cur.i])))
      cur.fail("expected an integer");
    long long v = 0;
    while (cur.i < text.size() && isdigit(static_cast<unsigned char>(text[cur.i]))) {
      v = v * 10 + (text[cur.i] - '0');
      if (v > 1'000'000) cur.fail("integer too large");
      ++cur.i;
    }
    return v;
  };

  bool negate_first = false;
  if (cur.peek() == '-') {
    negate_first = true;
    ++cur.i;
  } else if (cur.peek() == '+') {
    ++cur.i;
  }

  bool first = true;
  while (!cur.done()) {
    bool neg = first ? negate_first : false;
    if (!first) {
      char sign = cur.peek();
      if (sign == '+') {
        ++cur.i;
      } else if (sign == '-') {
        neg = true;
        ++cur.i;
      } else {
        cur.fail("expected '+' or '-'");
      }
    }
    first = false;

    Fe c = 1;
    Expo e{};
    bool any_factor = false;
    for (;;) {
      char ch = cur.peek();
      if (ch == 'w') {
        ++cur.i;
        long long k = 1;
        if (cur.peek() == '^') {
          ++cur.i;
          k = parse_int();
        }
        c = f.mul(c, f.pow(f.gen(), k));
        any_factor = true;
      } else if (ch == 'X' || ch == 'x') {
        ++cur.i;
        long long v = parse_int();
        if (v > 3) cur.fail("variable index out of range (X0..X3)");
        long long k = 1;
        if (cur.peek() == '^') {
          ++cur.i;
          k = parse_int();
        }
        if (k > 200) cur.fail("exponent too large");
        e[v] = static_cast<std::uint8_t>(e[v] + k);
        max_var = std::max<int>(max_var, static_cast<int>(v));
        any_factor = true;
      } else if (isdigit(static_cast<unsigned char>(ch))) {
        c = f.mul(c, f.from_int(parse_int()));
        any_factor = true;
      } else {
        break;
      }
      if (cur.peek() == '*') {
        ++cur.i;
        continue;
      }
    }
    if (!any_factor) cur.fail("empty term");
    if (neg) c = f.neg(c);
    int td = total_degree(e);
    if (degree >= 0 && c != 0 && td != degree)
      cur.fail("term is not homogeneous with the preceding terms");
    if (degree < 0 && c != 0) degree = td;
    accum.push_back({c, e});
  }
  if (degree < 0) cur.fail("polynomial is zero or empty");
  int nvars = std::max(max_var + 1, 2);
  if (force_nvars > 0) {
    if (max_var + 1 > force_nvars) cur.fail("variable index exceeds the requested ambient");
    nvars = force_nvars;
  }
  std::vector<HomPoly::Term> terms;
  for (const auto& t : accum)
    if (t.c != 0) terms.push_back({t.e, t.c});
  return HomPoly(f, nvars, degree, std::move(terms));
}

std::string to_string(const HomPoly& F) {
  if (F.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : F.terms()) {
    if (!first) os << "+";
    first = false;
    bool wrote = false;
    if (t.c != 1) {
      os << "c" << t.c;
      wrote = true;
    }
    for (int i = 0; i < F.nvars(); ++i) {
      if (t.e[i] == 0) continue;
      if (wrote) os << "*";
      os << "X" << i;
      if (t.e[i] > 1) os << "^" << static_cast<int>(t.e[i]);
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

const P2Lines& p2_lines(const Field& f) {
  static std::mutex mu;
  static std::map<const Field*, std::unique_ptr<P2Lines>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&f);
  if (it != cache.end()) return *it->second;

  auto tab = std::make_unique<P2Lines>();
  const long long npts = point_count(f.q(), 2);
  tab->points.reserve(npts);
  for (long long i = 0; i < npts; ++i) tab->points.push_back(point_at(f, 2, i));
  tab->duals.reserve(npts);
  tab->point_idx.resize(npts);
  for (long long i = 0; i < npts; ++i) {
    const ProjPoint dual = point_at(f, 2, i);
    tab->duals.push_back({dual.x[0], dual.x[1], dual.x[2]});
    auto basis = kernel_basis(f, {dual.x}, 3);
    auto line = line_through(f, make_point(f, 2, basis[0]), make_point(f, 2, basis[1]));
    for (const auto& P : points_on_line(f, line)) {
      tab->point_idx[i].push_back(static_cast<std::uint32_t>(index_of(f, P)));
    }
  }
  return *cache.emplace(&f, std::move(tab)).first->second;
}

}  // namespace herm
