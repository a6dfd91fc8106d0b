#include "stci/quadlat.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stci {

QuadIdeal QuadIdeal::zero(long d) { return QuadIdeal(d, 0, 0, 0); }

QuadIdeal QuadIdeal::whole(long d) { return QuadIdeal(d, 1, 0, 1); }

QuadIdeal QuadIdeal::principal(long d, const QuadElt& g) {
  // lattice spanned by g and sqrt(d)*g
  QuadElt wg{mpz_class(d) * g.v, g.u};
  return hnf_from_vectors(d, {g, wg});
}

QuadIdeal QuadIdeal::from_generators(long d, const std::vector<QuadElt>& gens) {
  std::vector<QuadElt> vecs;
  for (const auto& g : gens) {
    vecs.push_back(g);
    vecs.push_back(QuadElt{mpz_class(d) * g.v, g.u});
  }
  return hnf_from_vectors(d, std::move(vecs));
}

QuadIdeal QuadIdeal::hnf_from_vectors(long d, std::vector<QuadElt> vecs) {
  std::erase_if(vecs, [](const QuadElt& v) { return v.u == 0 && v.v == 0; });
  if (vecs.empty()) return zero(d);

  // gcd of the sqrt(d)-coordinates, with a combination vector achieving it
  mpz_class c = 0;
  QuadElt w{0, 0};
  for (const auto& g : vecs) {
    if (g.v == 0) continue;
    if (c == 0) {
      c = g.v;
      w = g;
    } else {
      mpz_class gg, s, t;
      mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(),
                 g.v.get_mpz_t());
      w = QuadElt{s * w.u + t * g.u, gg};
      c = gg;
    }
  }
  if (c < 0) {
    c = -c;
    w.u = -w.u;
    w.v = -w.v;
  }
  // rank 1 lattices are not ideals of the order
  if (c == 0) fail(Errc::BadArgument, "generators span a rank-1 lattice");

  mpz_class a = 0;
  for (const auto& g : vecs) {
    mpz_class k = g.v / c;  // exact: c divides every v-coordinate
    mpz_class u = g.u - k * w.u;
    mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), u.get_mpz_t());
  }
  if (a == 0) fail(Errc::BadArgument, "generators span a rank-1 lattice");
  mpz_class b;
  mpz_fdiv_r(b.get_mpz_t(), w.u.get_mpz_t(), a.get_mpz_t());
  return QuadIdeal(d, a, b, c);
}

bool QuadIdeal::contains(const QuadElt& e) const {
  if (is_zero()) return e.u == 0 && e.v == 0;
  if (!mpz_divisible_p(e.v.get_mpz_t(), c_.get_mpz_t())) return false;
  mpz_class k = e.v / c_;
  mpz_class rem = e.u - k * b_;
  return mpz_divisible_p(rem.get_mpz_t(), a_.get_mpz_t());
}

std::vector<QuadElt> QuadIdeal::lattice_basis() const {
  if (is_zero()) return {};
  return {QuadElt{a_, 0}, QuadElt{b_, c_}};
}

QuadIdeal quad_mul(const QuadIdeal& i, const QuadIdeal& j) {
  if (i.d() != j.d()) fail(Errc::MixedRings, "ideals of different quadratic orders");
  if (i.is_zero() || j.is_zero()) return QuadIdeal::zero(i.d());
  mpz_class d(i.d());
  std::vector<QuadElt> prods;
  for (const auto& x : i.lattice_basis())
    for (const auto& y : j.lattice_basis())
      prods.push_back(QuadElt{x.u * y.u + d * x.v * y.v, x.u * y.v + x.v * y.u});
  return QuadIdeal::from_generators(i.d(), prods);
}

QuadIdeal quad_pow(const QuadIdeal& i, unsigned m) {
  QuadIdeal acc = QuadIdeal::whole(i.d());
  for (unsigned k = 0; k < m; ++k) acc = quad_mul(acc, i);
  return acc;
}

mpz_class quad_norm_elt(long d, const QuadElt& e) {
  return e.u * e.u - mpz_class(d) * e.v * e.v;
}

namespace {

// candidates with u^2 - d v^2 = n, normalized (first nonzero coordinate
// positive), ordered by |v| ascending then v > 0 first
std::vector<QuadElt> norm_form_candidates(long d, const mpz_class& n) {
  std::vector<QuadElt> out;
  mpz_class dd(-d);  // positive
  mpz_class vmax;
  mpz_class q = n / dd;
  mpz_sqrt(vmax.get_mpz_t(), q.get_mpz_t());
  for (mpz_class v = 0; v <= vmax; ++v) {
    mpz_class rest = n - dd * v * v;
    if (rest < 0) break;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class u;
      mpz_sqrt(u.get_mpz_t(), rest.get_mpz_t());
      if (u == 0 && v == 0) continue;
      if (u == 0) {
        out.push_back(QuadElt{0, v});  // v > 0: normalized
      } else if (v == 0) {
        out.push_back(QuadElt{u, 0});
      } else {
        out.push_back(QuadElt{u, v});
        out.push_back(QuadElt{u, -v});
      }
    }
  }
  return out;
}

std::optional<QuadElt> principal_scan(const QuadIdeal& i, bool parallel) {
  if (i.is_zero()) fail(Errc::ZeroIdeal, "principality of the zero ideal");
  auto cands = norm_form_candidates(i.d(), i.norm());
  long n = static_cast<long>(cands.size());
  long hit = n;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : hit)
#endif
    for (long k = 0; k < n; ++k) {
      if (QuadIdeal::principal(i.d(), cands[k]) == i) hit = std::min(hit, k);
    }
  } else {
    for (long k = 0; k < n; ++k) {
      if (QuadIdeal::principal(i.d(), cands[k]) == i) {
        hit = k;
        break;
      }
    }
  }
  if (hit == n) return std::nullopt;
  return cands[hit];
}

}  // namespace

std::optional<QuadElt> is_principal(const QuadIdeal& i) {
  return principal_scan(i, false);
}

std::optional<QuadElt> is_principal_parallel(const QuadIdeal& i) {
  return principal_scan(i, true);
}

bool is_prime_quad(const QuadIdeal& i) {
  if (i.is_zero()) return false;
  mpz_class n = i.norm();
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) return true;
  // inert case: the ideal is (q) with q prime and d a non-residue mod q
  mpz_class q;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
  if (!mpz_probab_prime_p(q.get_mpz_t(), 40)) return false;
  if (!(i.a() == q && i.b() == 0 && i.c() == q)) return false;
  mpz_class d(i.d());
  if (q == 2) return false;  // d = 2,3 mod 4: 2 ramifies or splits
  if (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t())) return false;  // ramified
  return mpz_legendre(d.get_mpz_t(), q.get_mpz_t()) == -1;
}

TorsionWitness torsion_witness(const QuadIdeal& p, const Config& cfg) {
  if (p.is_zero()) fail(Errc::ZeroIdeal, "torsion witness of the zero ideal");
  if (!is_prime_quad(p))
    fail(Errc::NotPrime, "torsion witness needs a prime ideal (norm " +
                             p.norm().get_str() + " is not prime or inert-square)");
  QuadIdeal pw = QuadIdeal::whole(p.d());
  for (unsigned m = 1; m <= cfg.torsion_bound; ++m) {
    pw = quad_mul(pw, p);
    if (auto b = is_principal(pw)) {
      if (quad_norm_elt(p.d(), *b) != pw.norm())
        fail(Errc::BadArgument, "generator norm mismatch; broken enumeration");
      return {m, *b};
    }
  }
  fail(Errc::TorsionBoundExceeded,
       "no principal power within bound " + std::to_string(cfg.torsion_bound));
}

std::string to_string_quad(long d, const QuadElt& e) {
  RingSpec R = RingSpec::quadratic_order(d);
  return to_string(RingElement::quad(R, e.u, e.v));
}

}  // namespace stci
