#include "stci/factor.hpp"

#include <algorithm>

namespace stci {

bool is_prime_int(const mpz_class& n) {
  mpz_class m = abs(n);
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

std::optional<mpz_class> smallest_prime_factor(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m < 2) return std::nullopt;
  for (mpz_class q = 2; q * q <= m; ++q)
    if (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) return q;
  return m;
}

// ---------------------------------------------------------------------------
// residue rings

ResidueRing::ResidueRing(RingSpec field) : ring_(field) {
  if (!field.is_field()) fail(Errc::BadArgument, "ResidueRing(field) needs a field");
}

ResidueRing::ResidueRing(RingElement modulus)
    : ring_(modulus.ring()), modulus_(std::move(modulus)) {
  if (!euclid_divmod(RingElement::zero(ring_), *modulus_))
    fail(Errc::BadArgument, "residue arithmetic needs a Euclidean base ring");
}

mpz_class ResidueRing::order() const {
  if (!modulus_) {
    if (ring_.kind() == RingKind::PrimeField) return mpz_class(ring_.param());
    fail(Errc::BadArgument, "infinite field has no order");
  }
  switch (ring_.kind()) {
    case RingKind::Integers:
      return abs(modulus_->as_int());
    case RingKind::PolyOverPrimeField: {
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ring_.param()),
                    static_cast<unsigned long>(modulus_->t_degree()));
      return q;
    }
    default:
      fail(Errc::BadArgument, "residue ring of infinite index");
  }
}

RingElement ResidueRing::reduce(const RingElement& x) const {
  if (!modulus_) return x;
  return euclid_divmod(x, *modulus_)->r;
}

RingElement ResidueRing::add(const RingElement& x, const RingElement& y) const {
  return reduce(x + y);
}
RingElement ResidueRing::sub(const RingElement& x, const RingElement& y) const {
  return reduce(x - y);
}
RingElement ResidueRing::mul(const RingElement& x, const RingElement& y) const {
  return reduce(x * y);
}
RingElement ResidueRing::neg(const RingElement& x) const {
  return reduce(-x);
}
RingElement ResidueRing::inv(const RingElement& x) const {
  if (!modulus_) return *try_divide(one(), x);
  return mod_inverse(x, *modulus_);
}

// ---------------------------------------------------------------------------
// polynomial arithmetic over a residue ring (coefficient vectors, reduced)

namespace {

using RPoly = std::vector<RingElement>;

void rp_trim(RPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

RPoly rp_from(const ResidueRing& F, const UniPoly& f) {
  RPoly r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.push_back(F.reduce(c));
  rp_trim(r);
  return r;
}

RPoly rp_sub(const ResidueRing& F, const RPoly& a, const RPoly& b) {
  RPoly r;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    RingElement x = i < a.size() ? a[i] : F.zero();
    RingElement y = i < b.size() ? b[i] : F.zero();
    r.push_back(F.sub(x, y));
  }
  rp_trim(r);
  return r;
}

RPoly rp_mul(const ResidueRing& F, const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  rp_trim(r);
  return r;
}

// remainder mod a divisor with invertible leading coefficient
RPoly rp_mod(const ResidueRing& F, RPoly r, const RPoly& f) {
  RingElement lcinv = F.inv(f.back());
  while (r.size() >= f.size()) {
    RingElement c = F.mul(r.back(), lcinv);
    std::size_t shift = r.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i)
      r[shift + i] = F.sub(r[shift + i], F.mul(c, f[i]));
    rp_trim(r);
    if (r.size() > shift + f.size() - 1) break;  // unreachable
  }
  return r;
}

RPoly rp_gcd(const ResidueRing& F, RPoly a, RPoly b) {
  while (!b.empty()) {
    RPoly r = rp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    RingElement lcinv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, lcinv);
  }
  return a;
}

// X^e mod f by square and multiply
RPoly rp_xpow_mod(const ResidueRing& F, const mpz_class& e, const RPoly& f) {
  RPoly acc{F.one()};
  RPoly base{F.zero(), F.one()};  // X
  base = rp_mod(F, base, f);
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = rp_mod(F, rp_mul(F, acc, base), f);
    n >>= 1;
    if (n > 0) base = rp_mod(F, rp_mul(F, base, base), f);
  }
  return acc;
}

bool rabin_irreducible(const ResidueRing& F, const RPoly& f) {
  int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  mpz_class q = F.order();
  RPoly x{F.zero(), F.one()};
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  if (rp_sub(F, rp_xpow_mod(F, qn, f), rp_mod(F, x, f)) != RPoly{}) return false;
  std::vector<int> prime_divs;
  for (int l = 2; l <= n; ++l)
    if (n % l == 0 && is_prime_int(l)) prime_divs.push_back(l);
  for (int l : prime_divs) {
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / l));
    RPoly diff = rp_sub(F, rp_xpow_mod(F, qk, f), rp_mod(F, x, f));
    RPoly g = rp_gcd(F, f, diff);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

PrimalityCheck base_prime_check(const RingElement& a) {
  const RingSpec& R = a.ring();
  if (a.is_zero()) return {false, "zero"};
  if (a.is_unit()) return {false, "unit"};
  switch (R.kind()) {
    case RingKind::Integers: {
      if (is_prime_int(a.as_int())) return {true, ""};
      auto f = smallest_prime_factor(a.as_int());
      mpz_class co = a.as_int() / *f;
      return {false, f->get_str() + " * " + co.get_str()};
    }
    case RingKind::PolyOverPrimeField: {
      // complete monic-divisor enumeration, degrees 1..deg/2
      int deg = a.t_degree();
      long p = R.param();
      for (int k = 1; 2 * k <= deg; ++k) {
        unsigned long long count = 1;
        for (int i = 0; i < k; ++i) count *= static_cast<unsigned long long>(p);
        for (unsigned long long idx = 0; idx < count; ++idx) {
          TPoly h;
          unsigned long long rest = idx;
          for (int i = 0; i < k; ++i) {
            h.c.push_back(mpq_class(static_cast<long>(rest % p)));
            rest /= p;
          }
          h.c.push_back(mpq_class(1));  // monic
          RingElement cand(R, h);
          if (auto q = try_divide(a, cand))
            return {false, "(" + to_string(cand) + ") * (" + to_string(*q) + ")"};
        }
      }
      return {true, ""};
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return {false, "unit"};  // nonzero field elements are units
    default:
      fail(Errc::UnsupportedIdealShape,
           "no primality test for base ring " + R.name());
  }
}

bool irreducible_mod(const UniPoly& f, const RingElement& a) {
  if (!f.is_monic()) fail(Errc::BadArgument, "irreducible_mod expects a monic polynomial");
  ResidueRing F(a);
  RPoly ff = rp_from(F, f);
  if (static_cast<int>(ff.size()) - 1 != f.degree())
    fail(Errc::BadArgument, "polynomial degenerates mod a");  // cannot happen: monic
  return rabin_irreducible(F, ff);
}

// ---------------------------------------------------------------------------
// irreducibility over the fraction field

namespace {

std::vector<mpz_class> signed_divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<mpz_class> divs;
  for (mpz_class q = 1; q * q <= m; ++q) {
    if (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
      divs.push_back(q);
      mpz_class co = m / q;
      if (co != q) divs.push_back(co);
    }
  }
  std::size_t n0 = divs.size();
  for (std::size_t i = 0; i < n0; ++i) divs.push_back(-divs[i]);
  return divs;
}

// integer polynomial through points (xs[i], ys[i]) via Lagrange over QQ;
// empty when the interpolant has a fractional coefficient
std::optional<std::vector<mpz_class>> interpolate_integer(
    const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  std::size_t n = xs.size();
  std::vector<mpq_class> acc(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis.insert(basis.begin(), mpq_class(0));
      for (std::size_t k = 0; k + 1 < basis.size(); ++k)
        basis[k] -= mpq_class(xs[j]) * basis[k + 1];
      denom *= mpq_class(xs[i] - xs[j]);
    }
    mpq_class scale = mpq_class(ys[i]) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  std::vector<mpz_class> out;
  for (auto& q : acc) {
    q.canonicalize();
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return out;
}

UniPoly unipoly_from_ints(const RingSpec& R, const std::vector<mpz_class>& cs) {
  std::vector<RingElement> coeffs;
  for (const auto& c : cs) coeffs.push_back(RingElement::from_int(R, c));
  return UniPoly(R, std::move(coeffs));
}

// complete factor search over ZZ[X] for primitive f: any factor of degree k
// interpolates divisor tuples of the values at k+1 points
FactorSearch kronecker_search(const UniPoly& f, const Config& cfg) {
  const RingSpec R = RingSpec::integers();
  int deg = f.degree();
  std::vector<long> points;
  for (long x = 0; points.size() < static_cast<std::size_t>(deg / 2 + 1); ++x) {
    points.push_back(x);
    if (x > 0 && points.size() < static_cast<std::size_t>(deg / 2 + 1))
      points.push_back(-x);
  }
  // root at a sample point gives a linear factor outright
  EvalHom id = make_eval_hom(R, RingElement::from_int(R, 0));
  std::vector<mpz_class> values;
  for (long x : points) {
    EvalHom h = make_eval_hom(R, RingElement::from_int(R, x));
    mpz_class v = eval(h, f).as_int();
    if (v == 0) {
      UniPoly lin = poly_sub(UniPoly::x(R), UniPoly::constant(RingElement::from_int(R, x)));
      return {false, lin, "root found during point evaluation"};
    }
    values.push_back(v);
  }
  (void)id;
  for (int k = 1; 2 * k <= deg; ++k) {
    std::vector<std::vector<mpz_class>> divs;
    unsigned long long tuples = 1;
    for (int i = 0; i <= k; ++i) {
      divs.push_back(signed_divisors(values[i]));
      tuples *= divs.back().size();
      if (tuples > cfg.oracle_budget)
        fail(Errc::CapTooLarge, "divisor tuple space exceeds the search budget");
    }
    std::vector<long> xs(points.begin(), points.begin() + k + 1);
    std::vector<std::size_t> odo(k + 1, 0);
    while (true) {
      std::vector<mpz_class> ys;
      for (int i = 0; i <= k; ++i) ys.push_back(divs[i][odo[i]]);
      if (auto cand = interpolate_integer(xs, ys)) {
        UniPoly h = unipoly_from_ints(R, *cand);
        if (h.degree() >= 1 && try_div_exact(f, h))
          return {false, h, "factor from divisor interpolation"};
      }
      int pos = 0;
      while (pos <= k && ++odo[pos] == divs[pos].size()) odo[pos++] = 0;
      if (pos > k) break;
    }
  }
  return {true, std::nullopt,
          "complete divisor-interpolation search, factor degrees <= " +
              std::to_string(deg / 2)};
}

// f mod p irreducible at full degree certifies irreducibility over QQ
bool irreducible_mod_prime(const UniPoly& f, long p) {
  RingElement pe = RingElement::from_int(RingSpec::integers(), p);
  ResidueRing F(pe);
  RPoly fv = rp_from(F, f);
  if (static_cast<int>(fv.size()) - 1 != f.degree()) return false;  // degenerated
  RingElement lcinv = F.inv(fv.back());
  for (auto& c : fv) c = F.mul(c, lcinv);
  return rabin_irreducible(F, fv);
}

FactorSearch irreducible_int_poly(const UniPoly& f, const Config& cfg) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (mpz_divisible_ui_p(f.leading().as_int().get_mpz_t(),
                           static_cast<unsigned long>(p)))
      continue;
    if (irreducible_mod_prime(f, p))
      return {true, std::nullopt,
              "irreducible mod " + std::to_string(p) + " at full degree"};
  }
  return kronecker_search(f, cfg);
}

// enumeration over GF(p)[t][X]: factors have t-degree bounded by the input's
FactorSearch enumerate_bivariate(const UniPoly& f, const Config& cfg) {
  const RingSpec& R = f.ring();
  int degx = f.degree();
  int degt = 0;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) degt = std::max(degt, c.t_degree());
  CoeffEnumerator en(R, static_cast<unsigned>(degt));
  for (int k = 1; 2 * k <= degx; ++k) {
    unsigned long long total = 1;
    bool overflow = false;
    for (int i = 0; i <= k; ++i) {
      if (total > cfg.oracle_budget / en.size()) { overflow = true; break; }
      total *= en.size();
    }
    if (overflow || total > cfg.oracle_budget)
      fail(Errc::CapTooLarge, "bivariate factor enumeration exceeds the budget");
    for (unsigned long long idx = 0; idx < total; ++idx) {
      unsigned long long rest = idx;
      std::vector<RingElement> cs;
      for (int i = 0; i <= k; ++i) {
        cs.push_back(en.at(rest % en.size()));
        rest /= en.size();
      }
      UniPoly h(R, std::move(cs));
      if (h.degree() != k) continue;
      if (try_div_exact(f, h))
        return {false, h, "factor from bounded enumeration"};
    }
  }
  return {true, std::nullopt,
          "complete enumeration of candidate factors with X-degree <= " +
              std::to_string(degx / 2) + ", t-degree <= " + std::to_string(degt)};
}

}  // namespace

FactorSearch irreducible_over_fractions(const UniPoly& f, const Config& cfg) {
  if (f.degree() > static_cast<int>(cfg.factor_degree_bound))
    fail(Errc::CapTooLarge, "degree exceeds the trial-factorization bound");
  if (f.degree() < 1) return {false, std::nullopt, "constants are not irreducible"};
  if (f.degree() == 1) return {true, std::nullopt, "linear"};
  switch (f.ring().kind()) {
    case RingKind::Integers:
      return irreducible_int_poly(f, cfg);
    case RingKind::Rationals: {
      // clear denominators, then the primitive integer case decides
      mpz_class denlcm(1);
      for (const auto& c : f.coeffs())
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.as_rat().get_den().get_mpz_t());
      std::vector<RingElement> zs;
      for (const auto& c : f.coeffs()) {
        mpq_class scaled = c.as_rat() * mpq_class(denlcm);
        zs.push_back(RingElement::from_int(RingSpec::integers(), scaled.get_num()));
      }
      UniPoly zf(RingSpec::integers(), std::move(zs));
      PrimitivePart pp = primitive_part(zf);
      FactorSearch fs = irreducible_int_poly(pp.primitive, cfg);
      if (fs.factor) {
        std::vector<RingElement> qs;
        for (const auto& c : fs.factor->coeffs())
          qs.push_back(RingElement(RingSpec::rationals(), mpq_class(c.as_int())));
        fs.factor = UniPoly(RingSpec::rationals(), std::move(qs));
      }
      return fs;
    }
    case RingKind::PrimeField: {
      ResidueRing F(f.ring());
      RPoly fv = rp_from(F, f);
      RingElement lcinv = F.inv(fv.back());
      for (auto& c : fv) c = F.mul(c, lcinv);
      bool irr = rabin_irreducible(F, fv);
      return {irr, std::nullopt, "Rabin irreducibility test over GF(p)"};
    }
    case RingKind::PolyOverPrimeField:
      return enumerate_bivariate(f, cfg);
    default:
      fail(Errc::UnsupportedIdealShape,
           "no irreducibility test over " + f.ring().name());
  }
}

// ---------------------------------------------------------------------------

CoeffEnumerator::CoeffEnumerator(RingSpec ring, unsigned t_degree_cap)
    : ring_(ring) {
  long p = ring.characteristic();
  if (p == 0) fail(Errc::CapTooLarge, "only characteristic-p slices are enumerable");
  switch (ring.kind()) {
    case RingKind::PrimeField:
      size_ = static_cast<unsigned long long>(p);
      return;
    case RingKind::PolyOverPrimeField:
      for (unsigned k = 0; k <= t_degree_cap; ++k) exponents_.push_back(k);
      break;
    case RingKind::MonomialSubring:
      exponents_.push_back(0);
      for (unsigned k = 2; k <= t_degree_cap; ++k) exponents_.push_back(k);
      break;
    default:
      fail(Errc::BadArgument, "not an enumerable coefficient ring");
  }
  size_ = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    size_ *= static_cast<unsigned long long>(p);
}

RingElement CoeffEnumerator::at(unsigned long long index) const {
  long p = ring_.characteristic();
  if (ring_.kind() == RingKind::PrimeField)
    return RingElement::from_int(ring_, static_cast<long>(index % p));
  TPoly f;
  unsigned long long rest = index;
  for (unsigned k : exponents_) {
    long digit = static_cast<long>(rest % p);
    rest /= p;
    if (digit != 0) {
      if (f.c.size() <= k) f.c.resize(k + 1, mpq_class(0));
      f.c[k] = digit;
    }
  }
  return RingElement(ring_, std::move(f));
}

}  // namespace stci
