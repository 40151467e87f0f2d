#include "herm/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <utility>

namespace herm {

namespace {

// Remainder of f by monic g over F_p, both ascending coefficient vectors.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
  auto trim = [](std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(f);
  while (f.size() >= g.size()) {
    int c = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const std::vector<int>& f, int p) {
  int e = static_cast<int>(f.size()) - 1;
  std::vector<int> g;
  for (int d = 1; d <= e / 2; ++d) {
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    g.assign(d + 1, 0);
    g[d] = 1;
    for (long long tail = 0; tail < total; ++tail) {
      long long t = tail;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::make(int p, int e, std::vector<int> modulus) {
  if (p < 2 || e < 1) throw UsageError("FieldSpec: need p >= 2, e >= 1");
  if (static_cast<int>(modulus.size()) != e + 1 || modulus[e] != 1)
    throw UsageError("FieldSpec: modulus must be monic of degree e");
  for (int c : modulus)
    if (c < 0 || c >= p) throw UsageError("FieldSpec: modulus coefficients out of range");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) throw CapabilityError("FieldSpec: order exceeds ceiling");
  }
  if (!is_irreducible(modulus, p))
    throw UsageError("FieldSpec: modulus is reducible over F_p");
  FieldSpec s;
  s.p = p;
  s.e = e;
  s.modulus = std::move(modulus);
  s.q = static_cast<int>(q);
  return s;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const int q = spec_.q;
  const int p = spec_.p;
  const int e = spec_.e;

  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    int r = 0, pw = 1, x = a;
    for (int i = 0; i < e; ++i) {
      r += ((p - x % p) % p) * pw;
      x /= p;
      pw *= p;
    }
    neg_[a] = static_cast<Fe>(r);
  }

  // Find the primitive element with smallest index and fill exp/log.
  log_.assign(q, -1);
  exp_.assign(2 * (q - 1), 0);
  for (int g = 1; g < q; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = mul_poly(static_cast<Fe>(x), static_cast<Fe>(g));
      ++order;
      if (order > q) throw UsageError("Field: inconsistent tables");
    }
    if (order == q - 1) {
      primitive_ = static_cast<Fe>(g);
      break;
    }
  }
  if (primitive_ == 0) throw UsageError("Field: no primitive element found");
  Fe x = 1;
  for (int i = 0; i < q - 1; ++i) {
    exp_[i] = x;
    exp_[i + q - 1] = x;
    log_[x] = i;
    x = mul_poly(x, primitive_);
  }

  inv_.resize(q);
  inv_[0] = 0;
  for (int a = 1; a < q; ++a) inv_[a] = exp_[(q - 1) - log_[a]];

  if (q <= kDenseTableLimit) {
    add_tab_.resize(static_cast<std::size_t>(q) * q);
    mul_tab_.resize(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_tab_[static_cast<std::size_t>(a) * q + b] = add_slow(static_cast<Fe>(a), static_cast<Fe>(b));
        mul_tab_[static_cast<std::size_t>(a) * q + b] =
            (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
      }
    }
    add_ = add_tab_.data();
    mul_ = mul_tab_.data();
  }

  if (has_conjugation()) {
    const int s = sqrt_q();
    conj_.resize(q);
    norm_.resize(q);
    norm_rep_.assign(q, 0);
    std::vector<bool> seen(q, false);
    for (int a = 0; a < q; ++a) {
      conj_[a] = pow(static_cast<Fe>(a), s);
      norm_[a] = mul(conj_[a], static_cast<Fe>(a));
      if (!seen[norm_[a]]) {
        seen[norm_[a]] = true;
        norm_rep_[norm_[a]] = static_cast<Fe>(a);
      }
    }
  }
}

Fe Field::add_slow(Fe a, Fe b) const {
  int r = 0, pw = 1, x = a, y = b;
  for (int i = 0; i < spec_.e; ++i) {
    r += ((x % spec_.p) + (y % spec_.p)) % spec_.p * pw;
    x /= spec_.p;
    y /= spec_.p;
    pw *= spec_.p;
  }
  return static_cast<Fe>(r);
}

Fe Field::mul_poly(Fe a, Fe b) const {
  const int p = spec_.p, e = spec_.e;
  // schoolbook product of the digit vectors, reduced by the modulus
  std::vector<int> prod(2 * e - 1, 0);
  int x = a;
  for (int i = 0; i < e; ++i, x /= p) {
    int ai = x % p;
    if (ai == 0) continue;
    int y = b;
    for (int j = 0; j < e; ++j, y /= p) {
      prod[i + j] = (prod[i + j] + ai * (y % p)) % p;
    }
  }
  for (int k = 2 * e - 2; k >= e; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < e; ++i) {
      prod[k - e + i] = ((prod[k - e + i] - c * spec_.modulus[i]) % p + p) % p;
    }
  }
  int r = 0, pw = 1;
  for (int i = 0; i < e; ++i) {
    r += prod[i] * pw;
    pw *= p;
  }
  return static_cast<Fe>(r);
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw UsageError("Field: division by zero");
  return inv_[a];
}

Fe Field::pow(Fe a, long long k) const {
  if (a == 0) {
    if (k < 0) throw UsageError("Field: division by zero");
    return k == 0 ? 1 : 0;
  }
  long long m = k % (spec_.q - 1);
  if (m < 0) m += spec_.q - 1;
  return exp_[(static_cast<long long>(log_[a]) * m) % (spec_.q - 1)];
}

int Field::sqrt_q() const {
  if (!has_conjugation()) throw UsageError("Field: sqrt(q) needs even extension degree");
  int s = 1;
  for (int i = 0; i < spec_.e / 2; ++i) s *= spec_.p;
  return s;
}

Fe Field::conj(Fe a) const {
  if (!has_conjugation()) throw UsageError("Field: conjugation needs even extension degree");
  return conj_[a];
}

Fe Field::norm(Fe a) const {
  if (!has_conjugation()) throw UsageError("Field: norm needs even extension degree");
  return norm_[a];
}

bool Field::in_subfield(Fe a) const { return conj(a) == a; }

Fe Field::norm_solve(Fe c) const {
  if (!has_conjugation()) throw UsageError("Field: norm needs even extension degree");
  Fe x = norm_rep_[c];
  if (c != 0 && x == 0) throw UsageError("Field: value is not a norm");
  return x;
}

TowerEmbedding::TowerEmbedding(const Field& source, const Field& target)
    : src_(&source), dst_(&target) {
  if (source.p() != target.p() || target.e() % source.e() != 0)
    throw UsageError("TowerEmbedding: target is not an extension of source");

  // Root of the source modulus in the target, smallest index first.
  Fe root = 0;
  bool found = false;
  for (int x = 0; x < target.q() && !found; ++x) {
    Fe acc = 0;
    for (int i = source.e(); i >= 0; --i) {
      acc = target.add(target.mul(acc, static_cast<Fe>(x)),
                       target.from_int(source.spec().modulus[i]));
    }
    if (acc == 0) {
      root = static_cast<Fe>(x);
      found = true;
    }
  }
  if (!found) throw UsageError("TowerEmbedding: modulus has no root in target");

  table_.resize(source.q());
  for (int a = 0; a < source.q(); ++a) {
    Fe acc = 0;
    int digits = a;
    Fe rp = 1;
    for (int i = 0; i < source.e(); ++i) {
      acc = target.add(acc, target.mul(target.from_int(digits % source.p()), rp));
      digits /= source.p();
      rp = target.mul(rp, root);
    }
    table_[a] = acc;
  }

  // Exhaustive homomorphism + injectivity check.
  std::vector<bool> hit(target.q(), false);
  for (int a = 0; a < source.q(); ++a) {
    if (hit[table_[a]]) throw UsageError("TowerEmbedding: map is not injective");
    hit[table_[a]] = true;
    for (int b = 0; b < source.q(); ++b) {
      Fe fa = table_[a], fb = table_[b];
      if (table_[source.add(static_cast<Fe>(a), static_cast<Fe>(b))] != target.add(fa, fb) ||
          table_[source.mul(static_cast<Fe>(a), static_cast<Fe>(b))] != target.mul(fa, fb))
        throw UsageError("TowerEmbedding: map is not a homomorphism");
    }
  }
  if (table_[1] != 1) throw UsageError("TowerEmbedding: unit not preserved");
}

struct Registry::Impl {
  std::map<int, std::unique_ptr<Field>> fields;
  std::map<std::pair<int, int>, std::unique_ptr<TowerEmbedding>> towers;
};

Registry::Registry() : impl_(new Impl) {
  // Fixed, documented modulus per supported order (bit-exact reports).
  const struct {
    int p, e;
    std::vector<int> mod;
  } defs[] = {
      {2, 2, {1, 1, 1}},                    // F_4:   t^2+t+1
      {3, 2, {1, 0, 1}},                    // F_9:   t^2+1
      {2, 4, {1, 1, 0, 0, 1}},              // F_16:  t^4+t+1
      {5, 2, {1, 1, 1}},                    // F_25:  t^2+t+1
      {2, 6, {1, 1, 0, 0, 0, 0, 1}},        // F_64:  t^6+t+1
      {3, 4, {2, 1, 0, 0, 1}},              // F_81:  t^4+t+2
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},  // F_256: t^8+t^4+t^3+t^2+1
  };
  for (const auto& d : defs) {
    auto spec = FieldSpec::make(d.p, d.e, d.mod);
    int q = spec.q;
    impl_->fields.emplace(q, std::make_unique<Field>(std::move(spec)));
  }
  for (auto& [qs, src] : impl_->fields) {
    for (auto& [qt, dst] : impl_->fields) {
      if (qt <= qs) continue;
      if (dst->p() == src->p() && dst->e() % src->e() == 0) {
        impl_->towers.emplace(std::make_pair(qs, qt),
                              std::make_unique<TowerEmbedding>(*src, *dst));
      }
    }
  }
}

const Registry& Registry::instance() {
  static Registry r;
  return r;
}

const Field& Registry::field(int q) {
  const auto& fields = instance().impl_->fields;
  auto it = fields.find(q);
  if (it == fields.end()) {
    std::string supported;
    for (const auto& [order, f] : fields)
      supported += (supported.empty() ? "" : ", ") + std::to_string(order);
    throw CapabilityError("unsupported field order q=" + std::to_string(q) +
                          " (supported: " + supported + ")");
  }
  return *it->second;
}

bool Registry::has_field(int q) {
  return instance().impl_->fields.count(q) > 0;
}

const TowerEmbedding& Registry::embedding(int q, int qm) {
  const auto& towers = instance().impl_->towers;
  auto it = towers.find({q, qm});
  if (it == towers.end())
    throw CapabilityError("no embedding F_" + std::to_string(q) + " -> F_" + std::to_string(qm));
  return *it->second;
}

std::vector<int> Registry::supported() {
  std::vector<int> out;
  for (const auto& [q, f] : instance().impl_->fields) out.push_back(q);
  return out;
}

}  // namespace herm
