#include "stci/json_io.hpp"

#include "stci/parse.hpp"

namespace stci {

std::string ambient_name(const PrimeIdeal& p, unsigned extension_vars) {
  std::string s = p.base().name();
  if (p.in_poly_ring()) s += "[X]";
  for (unsigned k = 1; k <= extension_vars; ++k)
    s += "[" + extension_variable_name(k) + "]";
  return s;
}

ojson prime_to_json(const PrimeIdeal& p) {
  ojson j;
  j["ring"] = p.base().name();
  j["ambient"] = ambient_name(p);
  j["shape"] = p.shape_name();
  j["height"] = p.height();
  ojson data = ojson::object();
  struct V {
    ojson& data;
    void operator()(const ZeroShape&) const {}
    void operator()(const ExtendedBase& s) const { data["generator"] = to_string(s.a); }
    void operator()(const ContractionZero& s) const { data["generator"] = to_string(s.f); }
    void operator()(const MaximalPair& s) const {
      data["base"] = to_string(s.a);
      data["poly"] = to_string(s.f);
    }
    void operator()(const KernelShape& s) const {
      data["image"] = to_string(s.h.image_of_x);
    }
    void operator()(const QuadPrimeShape& s) const {
      data["lattice"] = {s.q.a().get_str(), s.q.b().get_str(), s.q.c().get_str()};
      data["norm"] = s.q.norm().get_str();
    }
  };
  std::visit(V{data}, p.shape());
  j["data"] = data;
  return j;
}

namespace {

ojson witness_to_json(const MembershipWitness& w) {
  ojson j;
  switch (w.kind) {
    case MembershipWitness::Kind::PrimeMembership:
      j["kind"] = "prime-membership";
      break;
    case MembershipWitness::Kind::Quotient:
      j["kind"] = "quotient";
      j["quotient"] = to_string(*w.quotient);
      break;
    case MembershipWitness::Kind::Transcript: {
      j["kind"] = "transcript";
      ojson steps = ojson::array();
      for (const auto& s : w.steps) {
        ojson st;
        st["generator"] = s.gen_index;
        st["multiplier"] = to_string(s.multiplier);
        st["shift"] = s.shift;
        steps.push_back(st);
      }
      j["steps"] = steps;
      break;
    }
  }
  return j;
}

ojson direction_to_json(const DirectionRecord& rec) {
  ojson j;
  j["element"] = rec.element;
  j["n"] = rec.n;
  j["witness"] = witness_to_json(rec.witness);
  return j;
}

ojson trace_to_json(const std::vector<TraceStep>& trace) {
  ojson steps = ojson::array();
  unsigned k = 1;
  for (const auto& s : trace) {
    ojson st;
    st["step"] = k++;
    st["rule"] = s.rule;
    st["detail"] = s.detail;
    steps.push_back(st);
  }
  return steps;
}

}  // namespace

ojson proof_to_json(const RadicalProof& proof) {
  ojson j;
  j["bound_used"] = proof.bound_used;
  ojson in = ojson::array();
  for (const auto& rec : proof.inward) in.push_back(direction_to_json(rec));
  j["inward"] = in;
  ojson out = ojson::array();
  for (const auto& rec : proof.outward) out.push_back(direction_to_json(rec));
  j["outward"] = out;
  if (!proof.test_set_note.empty()) j["test_set_note"] = proof.test_set_note;
  return j;
}

ojson certificate_to_json(const Certificate& cert) {
  ojson j;
  j["ring"] = cert.target.base().name();
  j["ambient"] = ambient_name(cert.target, cert.extension_vars);
  j["target"] = prime_to_json(cert.target);
  ojson gens = ojson::array();
  for (const auto& g : cert.generators) gens.push_back(to_string(g));
  j["generators"] = gens;
  j["exponent_hints"] = cert.exponent_hints;
  j["extension_vars"] = cert.extension_vars;
  j["trace"] = trace_to_json(cert.trace);
  if (cert.verification) j["verification"] = proof_to_json(*cert.verification);
  return j;
}

ojson obstruction_to_json(const ObstructionReport& rep) {
  ojson j;
  j["ring"] = rep.ring.name();
  j["adjoined"] = to_string(rep.adjoined);
  j["forced_form"] = rep.forced_form;
  j["monic_witness"] = to_string(rep.monic_witness);
  j["n_checked"] = rep.n_checked;
  ojson fails = ojson::array();
  for (std::size_t i = 0; i < rep.failing.size(); ++i) {
    ojson f;
    f["n"] = i + 1;
    f["coefficient"] = to_string(rep.failing[i]);
    f["t1_coefficient"] = rat_string(rep.failing[i].t_coeff(1));
    f["subring_member"] = false;
    fails.push_back(f);
  }
  j["failing_coefficients"] = fails;
  j["conclusion"] = rep.conclusion;
  j["trace"] = trace_to_json(rep.trace);
  return j;
}

ojson torsion_to_json(const QuadIdeal& p, const TorsionWitness& tw) {
  ojson j;
  j["ring"] = RingSpec::quadratic_order(p.d()).name();
  j["ideal"] = {p.a().get_str(), p.b().get_str(), p.c().get_str()};
  j["norm"] = p.norm().get_str();
  j["m"] = tw.m;
  j["generator"] = to_string_quad(p.d(), tw.b);
  j["generator_norm"] = quad_norm_elt(p.d(), tw.b).get_str();
  return j;
}

ojson descend_to_json(const DescendResult& res, const PrimeIdeal& m) {
  ojson j;
  j["ring"] = m.base().name();
  j["maximal"] = prime_to_json(m);
  ojson cs = ojson::array();
  for (const auto& c : res.contents) cs.push_back(to_string(c));
  j["contents"] = cs;
  j["generator"] = to_string(res.a);
  j["trace"] = trace_to_json(res.trace);
  return j;
}

ojson constant_descent_to_json(const ConstantDescentResult& res, const PrimeIdeal& p) {
  ojson j;
  j["target"] = prime_to_json(p);
  j["constant"] = to_string(res.b);
  j["power"] = res.n;
  j["cofactor"] = to_string(res.cofactor);
  if (res.torsion) {
    const auto* qp = p.get_if<QuadPrimeShape>();
    j["torsion"] = torsion_to_json(qp->q, *res.torsion);
  }
  j["trace"] = trace_to_json(res.trace);
  return j;
}

ojson oracle_to_json(const OracleResult& res) {
  ojson j;
  j["equal"] = res.equal;
  j["candidates"] = res.candidates;
  if (res.counterexample) j["counterexample"] = to_string(*res.counterexample);
  return j;
}

Certificate certificate_from_json(const ojson& j, const Config& cfg) {
  RingSpec ring = parse_ring(j.at("ring").get<std::string>());
  const ojson& tj = j.at("target");
  std::string shape = tj.at("shape").get<std::string>();
  const ojson& data = tj.at("data");

  PrimeIdeal target = [&]() -> PrimeIdeal {
    if (shape == "zero") {
      bool in_poly = tj.at("ambient").get<std::string>().find("[X]") != std::string::npos;
      return PrimeIdeal(ring, in_poly, ZeroShape{});
    }
    if (shape == "extended-base") {
      RingElement a = parse_element(data.at("generator").get<std::string>(), ring, cfg);
      PrimalityCheck pc = base_prime_check(a);
      if (!pc.prime) fail(Errc::NotPrime, "stored base generator: " + pc.witness);
      bool in_poly = tj.at("ambient").get<std::string>().find("[X]") != std::string::npos;
      return PrimeIdeal(ring, in_poly, ExtendedBase{a});
    }
    if (shape == "contraction-zero") {
      UniPoly f = parse_poly(data.at("generator").get<std::string>(), ring, cfg);
      IdealPresentation pres{ring, true, {f}};
      return classify(pres, cfg);
    }
    if (shape == "maximal-pair") {
      RingElement a = parse_element(data.at("base").get<std::string>(), ring, cfg);
      UniPoly f = parse_poly(data.at("poly").get<std::string>(), ring, cfg);
      IdealPresentation pres{ring, true, {UniPoly::constant(a), f}};
      return classify(pres, cfg);
    }
    if (shape == "evaluation-kernel") {
      RingSpec cover = ring.kind() == RingKind::MonomialSubring
                           ? normalization_of(ring).target
                           : ring;
      RingElement image = parse_element(data.at("image").get<std::string>(), cover, cfg);
      return classify_kernel(ring, image);
    }
    if (shape == "quadratic-prime") {
      auto lat = data.at("lattice");
      mpz_class a(lat.at(0).get<std::string>());
      mpz_class b(lat.at(1).get<std::string>());
      mpz_class c(lat.at(2).get<std::string>());
      QuadIdeal q = QuadIdeal::from_generators(ring.param(),
                                               {QuadElt{a, 0}, QuadElt{b, c}});
      if (!(q.a() == a && q.b() == b && q.c() == c))
        fail(Errc::BadArgument, "stored lattice is not in normal form");
      return classify_quad(q);
    }
    fail(Errc::BadArgument, "unknown target shape: " + shape);
  }();

  Certificate cert{target, {}, {}, {}, 0, {}};
  for (const auto& g : j.at("generators"))
    cert.generators.push_back(parse_poly(g.get<std::string>(), ring, cfg));
  if (j.contains("exponent_hints"))
    cert.exponent_hints = j.at("exponent_hints").get<std::vector<unsigned>>();
  if (j.contains("extension_vars"))
    cert.extension_vars = j.at("extension_vars").get<unsigned>();
  if (j.contains("trace"))
    for (const auto& st : j.at("trace"))
      cert.trace.push_back({st.at("rule").get<std::string>(),
                            st.at("detail").get<std::string>()});
  return cert;
}

}  // namespace stci
