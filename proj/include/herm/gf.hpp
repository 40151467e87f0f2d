#pragma once

#include <vector>

#include "herm/common.hpp"

namespace herm {

// Parameters of F_{p^e}. The modulus is monic and irreducible over F_p,
// stored with ascending coefficients (length e+1, last entry 1).
struct FieldSpec {
  int p = 0;
  int e = 0;
  std::vector<int> modulus;
  int q = 0;  // p^e, derived

  // Irreducibility is checked by trial division against every monic
  // polynomial of degree <= e/2.
  static FieldSpec make(int p, int e, std::vector<int> modulus);
};

// Exact arithmetic in F_{p^e} with precomputed tables.
//
// Elements are canonical indices: the element sum c_i t^i has index
// sum c_i p^i, so 0 is the additive zero and 1 the multiplicative one.
// Tables are immutable after construction; every operation is pure.
class Field {
 public:
  // Config ceiling on the supported field order.
  static constexpr int kMaxOrder = 1 << 16;
  // Full q x q add/mul tables are built below this order; above it the
  // exp/log path serves multiplication and addition falls back to digits.
  static constexpr int kDenseTableLimit = 1 << 10;

  explicit Field(FieldSpec spec);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int q() const { return spec_.q; }
  int p() const { return spec_.p; }
  int e() const { return spec_.e; }
  const FieldSpec& spec() const { return spec_; }

  bool has_conjugation() const { return spec_.e % 2 == 0; }
  int sqrt_q() const;  // p^{e/2}; requires even e

  Fe add(Fe a, Fe b) const {
    return add_ ? add_[a * spec_.q + b] : add_slow(a, b);
  }
  Fe sub(Fe a, Fe b) const { return add(a, neg_[b]); }
  Fe neg(Fe a) const { return neg_[a]; }
  Fe mul(Fe a, Fe b) const {
    if (mul_) return mul_[a * spec_.q + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Fe inv(Fe a) const;  // throws UsageError on 0
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, long long k) const;

  // x -> x^{sqrt q}, the conjugation of Eq-style Hermitian forms.
  Fe conj(Fe a) const;
  // x -> x^{sqrt q + 1}; lands in the subfield F_{sqrt q}.
  Fe norm(Fe a) const;
  // true iff x is fixed by conjugation, i.e. x lies in F_{sqrt q}.
  bool in_subfield(Fe a) const;
  // smallest x (by index) with norm(x) = c; c must be a norm value.
  Fe norm_solve(Fe c) const;

  // Reduce an integer into the prime subfield.
  Fe from_int(long long k) const {
    long long r = k % spec_.p;
    if (r < 0) r += spec_.p;
    return static_cast<Fe>(r);
  }
  // The class of t, i.e. the canonical generator adjoined by the modulus.
  Fe gen() const { return spec_.e >= 2 ? static_cast<Fe>(spec_.p) : 1; }
  // A fixed primitive element (smallest index of multiplicative order q-1).
  Fe primitive() const { return primitive_; }

 private:
  Fe add_slow(Fe a, Fe b) const;
  Fe mul_poly(Fe a, Fe b) const;  // digit arithmetic, used to build tables

  FieldSpec spec_;
  Fe primitive_ = 0;
  std::vector<Fe> exp_;   // size 2(q-1): primitive powers, doubled
  std::vector<int> log_;  // size q; log_[0] unused
  std::vector<Fe> neg_;
  std::vector<Fe> inv_;
  std::vector<Fe> conj_;
  std::vector<Fe> norm_;
  std::vector<Fe> norm_rep_;  // smallest preimage per norm value
  const Fe* add_ = nullptr;   // dense tables when q <= kDenseTableLimit
  const Fe* mul_ = nullptr;
  std::vector<Fe> add_tab_, mul_tab_;
};

// Deterministic embedding F_{p^a} -> F_{p^ab} along the tower.
// The image of t is the root of the source modulus with smallest canonical
// index in the target; the full table is verified to be an injective ring
// homomorphism at construction.
class TowerEmbedding {
 public:
  TowerEmbedding(const Field& source, const Field& target);

  Fe map(Fe a) const {
    if (a >= table_.size()) throw UsageError("TowerEmbedding: element outside the source field");
    return table_[a];
  }
  const Field& source() const { return *src_; }
  const Field& target() const { return *dst_; }

 private:
  const Field* src_;
  const Field* dst_;
  std::vector<Fe> table_;
};

// Built-in modulus registry for the supported orders.
// Fields and embeddings are constructed once and shared; all are immutable.
class Registry {
 public:
  static const Field& field(int q);                       // CapabilityError if absent
  static const TowerEmbedding& embedding(int q, int qm);  // CapabilityError if absent
  static bool has_field(int q);
  static std::vector<int> supported();

 private:
  Registry();
  static const Registry& instance();
  struct Impl;
  Impl* impl_;
};

}  // namespace herm
