#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "herm/gf.hpp"

using namespace herm;

namespace {

// Independent reference arithmetic: elements as digit vectors, schoolbook
// polynomial multiplication reduced mod (p, modulus). No exp/log tables.
struct NaiveField {
  int p, e, q;
  std::vector<int> mod;

  explicit NaiveField(const FieldSpec& s) : p(s.p), e(s.e), q(s.q), mod(s.modulus) {}

  std::vector<int> digits(int a) const {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  int index(const std::vector<int>& d) const {
    int r = 0;
    for (int i = e - 1; i >= 0; --i) r = r * p + d[i];
    return r;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i) x[i] = (x[i] + y[i]) % p;
    return index(x);
  }
  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * e - 2; k >= e; --k) {
      int c = prod[k];
      prod[k] = 0;
      for (int i = 0; i < e; ++i)
        prod[k - e + i] = ((prod[k - e + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(e);
    return index(prod);
  }
  int pw(int a, long long k) const {
    int r = 1;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
};

}  // namespace

TEST_CASE("registry provides the documented fields") {
  CHECK(Registry::supported() == std::vector<int>{4, 9, 16, 25, 64, 81, 256});
  CHECK(Registry::field(4).p() == 2);
  CHECK(Registry::field(9).e() == 2);
  CHECK(Registry::field(81).p() == 3);
  CHECK_THROWS_AS(Registry::field(7), CapabilityError);
}

TEST_CASE("spec construction rejects reducible moduli") {
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {0, 1, 1}), UsageError);       // t^2+t = t(t+1)
  CHECK_THROWS_AS(FieldSpec::make(3, 4, {1, 1, 0, 0, 1}), UsageError); // root t=1
  CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 1}), UsageError);          // not degree e
  CHECK_NOTHROW(FieldSpec::make(5, 2, {1, 1, 1}));
}

TEST_CASE("tables agree with independent naive arithmetic") {
  for (int q : Registry::supported()) {
    const Field& f = Registry::field(q);
    NaiveField ref(f.spec());
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(static_cast<Fe>(a), static_cast<Fe>(b)) == ref.add(a, b));
        CHECK(f.mul(static_cast<Fe>(a), static_cast<Fe>(b)) == ref.mul(a, b));
      }
    }
  }
}

TEST_CASE("field axioms: exhaustive for q <= 16, random triples otherwise") {
  for (int q : Registry::supported()) {
    const Field& f = Registry::field(q);
    auto check_triple = [&](Fe a, Fe b, Fe c) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    };
    if (q <= 16) {
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
          for (int c = 0; c < q; ++c)
            check_triple(static_cast<Fe>(a), static_cast<Fe>(b), static_cast<Fe>(c));
    } else {
      Rng rng(20240811);
      for (int i = 0; i < 100000; ++i)
        check_triple(static_cast<Fe>(rng.below(q)), static_cast<Fe>(rng.below(q)),
                     static_cast<Fe>(rng.below(q)));
    }
  }
}

TEST_CASE("division and inverses") {
  for (int q : {4, 9, 25}) {
    const Field& f = Registry::field(q);
    for (int a = 1; a < q; ++a) {
      CHECK(f.mul(static_cast<Fe>(a), f.inv(static_cast<Fe>(a))) == 1);
      // div(a, b) = a * b^{q-2}
      for (int b = 1; b < q; ++b)
        CHECK(f.div(static_cast<Fe>(a), static_cast<Fe>(b)) ==
              f.mul(static_cast<Fe>(a), f.pow(static_cast<Fe>(b), q - 2)));
    }
    CHECK_THROWS_AS(f.div(1, 0), UsageError);
  }
}

TEST_CASE("F_4 basics: omega arithmetic") {
  const Field& f = Registry::field(4);
  Fe w = f.gen();
  CHECK(f.mul(w, f.mul(w, w)) == 1);            // w^3 = 1
  CHECK(f.mul(w, f.conj(w)) == 1);              // w * w^2 = 1
  for (int a = 0; a < 4; ++a) CHECK(f.add(static_cast<Fe>(a), static_cast<Fe>(a)) == 0);
}

TEST_CASE("F_9 basics: t^2 = 2") {
  const Field& f = Registry::field(9);
  Fe t = f.gen();
  CHECK(f.mul(t, t) == 2);
  CHECK(f.conj(t) == f.mul(2, t));  // t^3 = -t
  CHECK(f.norm(t) == 1);            // t^4 = (t^2)^2 = 4 = 1
}

TEST_CASE("conjugation is an involutory automorphism") {
  for (int q : {4, 9, 16, 25}) {
    const Field& f = Registry::field(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.conj(f.conj(static_cast<Fe>(a))) == a);
      for (int b = 0; b < q; ++b) {
        CHECK(f.conj(f.add(static_cast<Fe>(a), static_cast<Fe>(b))) ==
              f.add(f.conj(static_cast<Fe>(a)), f.conj(static_cast<Fe>(b))));
        CHECK(f.conj(f.mul(static_cast<Fe>(a), static_cast<Fe>(b))) ==
              f.mul(f.conj(static_cast<Fe>(a)), f.conj(static_cast<Fe>(b))));
      }
    }
  }
}

TEST_CASE("subfield membership counts sqrt(q) elements") {
  for (int q : {4, 9, 16, 25}) {
    const Field& f = Registry::field(q);
    int count = 0;
    for (int a = 0; a < q; ++a)
      if (f.in_subfield(static_cast<Fe>(a))) ++count;
    CHECK(count == f.sqrt_q());
  }
  const Field& f4 = Registry::field(4);
  CHECK(f4.in_subfield(0));
  CHECK(f4.in_subfield(1));
  CHECK(!f4.in_subfield(f4.gen()));
  CHECK(!f4.in_subfield(f4.conj(f4.gen())));
  const Field& f9 = Registry::field(9);
  CHECK(f9.in_subfield(2));
}

TEST_CASE("norm is onto the subfield with fibers of size sqrt(q)+1") {
  for (int q : {4, 9, 16, 25}) {
    const Field& f = Registry::field(q);
    const int s = f.sqrt_q();
    std::map<Fe, int> fibers;
    for (int a = 1; a < q; ++a) {
      Fe n = f.norm(static_cast<Fe>(a));
      CHECK(f.in_subfield(n));
      CHECK(n != 0);
      ++fibers[n];
    }
    CHECK(static_cast<int>(fibers.size()) == s - 1);
    for (const auto& [v, cnt] : fibers) CHECK(cnt == s + 1);
    CHECK(f.norm(0) == 0);
    // norm_solve returns a preimage
    for (const auto& [v, cnt] : fibers) CHECK(f.norm(f.norm_solve(v)) == v);
  }
  // F_4: every nonzero element has norm 1
  const Field& f4 = Registry::field(4);
  for (int a = 1; a < 4; ++a) CHECK(f4.norm(static_cast<Fe>(a)) == 1);
}

TEST_CASE("odd-degree extensions have no conjugation") {
  FieldSpec s = FieldSpec::make(2, 3, {1, 1, 0, 1});  // F_8: t^3+t+1
  Field f8(std::move(s));
  CHECK(!f8.has_conjugation());
  CHECK_THROWS_AS(f8.conj(1), UsageError);
  CHECK_THROWS_AS(f8.norm(1), UsageError);
}

TEST_CASE("tower embeddings are checked ring homomorphisms") {
  const auto& e16 = Registry::embedding(4, 16);
  CHECK(e16.map(1) == 1);
  // image of omega satisfies x^2 + x + 1 = 0 in F_16
  const Field& f16 = Registry::field(16);
  Fe x = e16.map(Registry::field(4).gen());
  CHECK(f16.add(f16.add(f16.mul(x, x), x), 1) == 0);

  const auto& e64 = Registry::embedding(4, 64);
  const Field& f64 = Registry::field(64);
  Fe y = e64.map(Registry::field(4).gen());
  // multiplicative order of the image of omega is 3
  CHECK(y != 1);
  CHECK(f64.mul(y, f64.mul(y, y)) == 1);

  CHECK_THROWS_AS(Registry::embedding(4, 9), CapabilityError);
  CHECK_THROWS_AS(Registry::embedding(16, 64), CapabilityError);
  CHECK_NOTHROW(Registry::embedding(9, 81));
  CHECK_NOTHROW(Registry::embedding(16, 256));
}

TEST_CASE("embedding homomorphism property on all pairs") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{4, 16}, {4, 64}, {9, 81}}) {
    const auto& emb = Registry::embedding(a, b);
    const Field& src = emb.source();
    const Field& dst = emb.target();
    std::set<Fe> image;
    for (int x = 0; x < src.q(); ++x) {
      image.insert(emb.map(static_cast<Fe>(x)));
      for (int y = 0; y < src.q(); ++y) {
        CHECK(emb.map(src.add(static_cast<Fe>(x), static_cast<Fe>(y))) ==
              dst.add(emb.map(static_cast<Fe>(x)), emb.map(static_cast<Fe>(y))));
        CHECK(emb.map(src.mul(static_cast<Fe>(x), static_cast<Fe>(y))) ==
              dst.mul(emb.map(static_cast<Fe>(x)), emb.map(static_cast<Fe>(y))));
      }
    }
    CHECK(image.size() == static_cast<std::size_t>(src.q()));
  }
}
