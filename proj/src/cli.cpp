#include "stci/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stci/certify.hpp"
#include "stci/json_io.hpp"
#include "stci/parse.hpp"

namespace stci {

int exit_status_for(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::VerificationFailed:
    case Errc::DegreeObstruction:
    case Errc::NotRadicalEqual:
    case Errc::NotInIdeal:
    case Errc::ElementActuallyInRing:
      return kExitRefuted;
    case Errc::NotProvenAtBound:
    case Errc::TorsionBoundExceeded:
      return kExitUnproven;
    default:
      return kExitUsage;
  }
}

std::vector<std::string> Command::to_argv() const {
  std::vector<std::string> v{verb};
  auto push = [&](const char* flag, const std::string& val) {
    if (!val.empty()) {
      v.push_back(flag);
      v.push_back(val);
    }
  };
  push("--ring", ring);
  push("--ideal", ideal);
  push("--gens", gens);
  push("--adjoin", adjoin);
  push("--maximal", maximal);
  push("--lhs", lhs);
  push("--rhs", rhs);
  push("--cert", cert_path);
  push("--promise", promise);
  if (format != "text") push("--format", format);
  if (bound) push("--bound", std::to_string(bound));
  if (n_check) push("--n-check", std::to_string(n_check));
  if (verb == "oracle") push("--cap", std::to_string(cap));
  if (seed) push("--seed", std::to_string(seed));
  return v;
}

namespace {

void add_common(CLI::App* sub, Command& cmd) {
  sub->add_option("--format", cmd.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--bound", cmd.bound, "radical exponent bound");
  sub->add_option("--seed", cmd.seed, "seed for randomized drivers");
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"set-theoretic complete intersection certificates"};
  app.require_subcommand(1);

  auto* certify = app.add_subcommand("certify", "construct and verify a certificate");
  certify->add_option("--ring", cmd.ring, "coefficient ring")->required();
  certify->add_option("--ideal", cmd.ideal, "prime ideal spec")->required();
  add_common(certify, cmd);

  auto* verify = app.add_subcommand("verify", "check a certificate against its target");
  verify->add_option("--cert", cmd.cert_path, "certificate JSON ('-' for stdin)");
  verify->add_option("--ring", cmd.ring, "coefficient ring");
  verify->add_option("--ideal", cmd.ideal, "target prime spec");
  verify->add_option("--gens", cmd.gens, "claimed generator list");
  add_common(verify, cmd);

  auto* classify = app.add_subcommand("classify", "normal form and height of an ideal");
  classify->add_option("--ring", cmd.ring, "coefficient ring")->required();
  classify->add_option("--ideal", cmd.ideal, "ideal spec")->required();
  add_common(classify, cmd);

  auto* witness = app.add_subcommand("witness", "torsion witness of a quadratic prime");
  witness->add_option("--ring", cmd.ring, "quadratic order")->required();
  witness->add_option("--ideal", cmd.ideal, "qideal spec")->required();
  add_common(witness, cmd);

  auto* obstruct = app.add_subcommand("obstruct", "characteristic-zero obstruction report");
  obstruct->add_option("--ring", cmd.ring, "monomial subring")->required();
  obstruct->add_option("--adjoin", cmd.adjoin, "integral element to adjoin")->required();
  obstruct->add_option("--n-check", cmd.n_check, "exhaustive exponent range");
  add_common(obstruct, cmd);

  auto* descend = app.add_subcommand("descend", "base generator from a certificate of M R[X]");
  descend->add_option("--ring", cmd.ring, "coefficient ring")->required();
  descend->add_option("--gens", cmd.gens, "generators of M R[X]")->required();
  descend->add_option("--maximal", cmd.maximal, "generator of M")->required();
  add_common(descend, cmd);

  auto* extend = app.add_subcommand("extend", "lift a certificate along a flat extension");
  extend->add_option("--cert", cmd.cert_path, "certificate JSON ('-' for stdin)")->required();
  extend->add_option("--promise", cmd.promise, "extension-prime promise note");
  add_common(extend, cmd);

  auto* oracle = app.add_subcommand("oracle", "brute-force radical-equality check");
  oracle->add_option("--ring", cmd.ring, "coefficient ring")->required();
  oracle->add_option("--lhs", cmd.lhs, "left ideal spec")->required();
  oracle->add_option("--rhs", cmd.rhs, "right ideal spec")->required();
  oracle->add_option("--cap", cmd.cap, "degree and exponent cap");
  add_common(oracle, cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
  for (auto* sub :
       {certify, verify, classify, witness, obstruct, descend, extend, oracle})
    if (sub->parsed()) cmd.verb = sub->get_name();
  if (cmd.verb.empty()) fail(Errc::UnknownVerb, "no subcommand given");
  return cmd;
}

namespace {

Config config_for(const Command& cmd) {
  Config cfg;
  if (cmd.bound) cfg.radical_bound = cmd.bound;
  if (cmd.n_check) cfg.n_check = cmd.n_check;
  cfg.seed = cmd.seed;
  if (const char* env = std::getenv("STCI_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) cfg.oracle_budget = v;
  }
  return cfg;
}

ojson load_json(const std::string& path) {
  if (path == "-") {
    ojson j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) fail(Errc::BadArgument, "cannot open " + path);
  ojson j;
  in >> j;
  return j;
}

void emit_trace(std::ostream& out, const std::vector<TraceStep>& trace) {
  unsigned k = 1;
  for (const auto& s : trace)
    out << "  " << k++ << ". [" << s.rule << "] " << s.detail << "\n";
}

void emit_certificate_text(std::ostream& out, const Certificate& cert) {
  out << "target: " << cert.target.describe() << "\n";
  out << "height: " << cert.target.height() << "\n";
  out << "generators:";
  for (const auto& g : cert.generators) out << " {" << to_string(g) << "}";
  if (cert.generators.empty()) out << " (empty)";
  out << "\n";
  out << "exponent hints:";
  for (unsigned h : cert.exponent_hints) out << " " << h;
  out << "\n";
  if (cert.extension_vars)
    out << "ambient: " << ambient_name(cert.target, cert.extension_vars) << "\n";
  if (cert.verification) {
    out << "verification: both inclusions hold at bound "
        << cert.verification->bound_used << "\n";
    if (!cert.verification->test_set_note.empty())
      out << "  note: " << cert.verification->test_set_note << "\n";
  }
  out << "trace:\n";
  emit_trace(out, cert.trace);
}

int do_certify(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  RingSpec ring = parse_ring(cmd.ring);
  ParsedIdeal pi = parse_ideal(cmd.ideal, ring, cfg);
  PrimeIdeal target = classify_parsed(pi, ring, cfg);
  Certificate cert = certify_prime(target, cfg);
  if (cmd.format == "json")
    out << certificate_to_json(cert).dump(2) << "\n";
  else
    emit_certificate_text(out, cert);
  return kExitOk;
}

int do_verify(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  if (!cmd.cert_path.empty()) {
    Certificate cert = certificate_from_json(load_json(cmd.cert_path), cfg);
    if (cert.generators.size() != cert.target.height())
      fail(Errc::VerificationFailed,
           "generator count " + std::to_string(cert.generators.size()) +
               " does not match target height " +
               std::to_string(cert.target.height()));
    RadicalProof proof =
        rad_equal_check(cert.target, cert.generators, cert.exponent_hints, cfg);
    if (cmd.format == "json")
      out << proof_to_json(proof).dump(2) << "\n";
    else
      out << "verified: rad(generators) = " << cert.target.describe()
          << " at bound " << proof.bound_used << "\n";
    return kExitOk;
  }
  if (cmd.ring.empty() || cmd.ideal.empty() || cmd.gens.empty())
    fail(Errc::BadArgument, "verify needs --cert or all of --ring/--ideal/--gens");
  RingSpec ring = parse_ring(cmd.ring);
  PrimeIdeal target = classify_parsed(parse_ideal(cmd.ideal, ring, cfg), ring, cfg);
  ParsedIdeal gens = parse_ideal(cmd.gens, ring, cfg);
  if (gens.kind != ParsedIdeal::Kind::Generators)
    fail(Errc::BadArgument, "--gens must be an ideal(...) generator list");
  if (gens.pres.gens.size() != target.height())
    fail(Errc::VerificationFailed,
         "generator count " + std::to_string(gens.pres.gens.size()) +
             " does not match target height " + std::to_string(target.height()));
  RadicalProof proof = rad_equal_check(target, gens.pres.gens, {}, cfg);
  if (cmd.format == "json")
    out << proof_to_json(proof).dump(2) << "\n";
  else
    out << "verified: rad(generators) = " << target.describe() << " at bound "
        << proof.bound_used << "\n";
  return kExitOk;
}

int do_classify(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  RingSpec ring = parse_ring(cmd.ring);
  PrimeIdeal p = classify_parsed(parse_ideal(cmd.ideal, ring, cfg), ring, cfg);
  if (cmd.format == "json")
    out << prime_to_json(p).dump(2) << "\n";
  else
    out << "prime: " << p.describe() << "\nshape: " << p.shape_name()
        << "\nheight: " << p.height() << "\n";
  return kExitOk;
}

int do_witness(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  RingSpec ring = parse_ring(cmd.ring);
  if (ring.kind() != RingKind::QuadraticOrder)
    fail(Errc::BadArgument, "witness needs a quadratic-order ring");
  ParsedIdeal pi = parse_ideal(cmd.ideal, ring, cfg);
  if (pi.kind != ParsedIdeal::Kind::Quad)
    fail(Errc::BadArgument, "witness needs a qideal(...) spec");
  TorsionWitness tw = torsion_witness(pi.quad, cfg);
  if (cmd.format == "json")
    out << torsion_to_json(pi.quad, tw).dump(2) << "\n";
  else
    out << "prime of norm " << pi.quad.norm().get_str() << ": P^" << tw.m
        << " = (" << to_string_quad(pi.quad.d(), tw.b) << ")\n";
  return kExitOk;
}

int do_obstruct(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  RingSpec ring = parse_ring(cmd.ring);
  if (ring.kind() != RingKind::MonomialSubring)
    fail(Errc::BadArgument, "obstruct runs over K[t^2,t^3] rings");
  if (ring.characteristic() != 0)
    fail(Errc::BadArgument, "characteristic p: use certify (Frobenius path)");
  NormalizationData nd = normalization_of(ring);
  RingElement a = parse_element(cmd.adjoin, nd.target, cfg);
  ObstructionReport rep = normality_obstruction(ring, a, cfg);
  if (cmd.format == "json") {
    out << obstruction_to_json(rep).dump(2) << "\n";
  } else {
    out << "ring: " << rep.ring.name() << "\nadjoined: " << to_string(rep.adjoined)
        << "\nforced form: " << rep.forced_form
        << "\nmonic witness: " << to_string(rep.monic_witness) << "\nchecked n = 1.."
        << rep.n_checked << ": the X^(n-1) coefficient -n*a always escapes the ring\n"
        << "conclusion: " << rep.conclusion << "\ntrace:\n";
    emit_trace(out, rep.trace);
  }
  return kExitOk;
}

int do_descend(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  RingSpec ring = parse_ring(cmd.ring);
  ParsedIdeal gens = parse_ideal(cmd.gens, ring, cfg);
  if (gens.kind != ParsedIdeal::Kind::Generators)
    fail(Errc::BadArgument, "--gens must be an ideal(...) generator list");
  RingElement a = parse_element(cmd.maximal, ring, cfg);
  PrimalityCheck pc = base_prime_check(a);
  if (!pc.prime) fail(Errc::NotPrime, "maximal generator: " + pc.witness);
  PrimeIdeal m(ring, false, ExtendedBase{a});
  DescendResult res = descend_certificate(gens.pres, m, cfg);
  if (cmd.format == "json")
    out << descend_to_json(res, m).dump(2) << "\n";
  else {
    out << "maximal ideal: " << m.describe() << "\nbase generator: "
        << to_string(res.a) << "\ntrace:\n";
    emit_trace(out, res.trace);
  }
  return kExitOk;
}

int do_extend(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  Certificate cert = certificate_from_json(load_json(cmd.cert_path), cfg);
  cert = seal_certificate(std::move(cert), cfg);  // re-check before extending
  Certificate ext = extend_certificate(cert, cmd.promise);
  if (cmd.format == "json")
    out << certificate_to_json(ext).dump(2) << "\n";
  else
    emit_certificate_text(out, ext);
  return kExitOk;
}

RadTarget rad_target_of(const ParsedIdeal& pi, const RingSpec& ring,
                        const Config& cfg) {
  switch (pi.kind) {
    case ParsedIdeal::Kind::Generators:
      return RadTarget{pi.pres};
    case ParsedIdeal::Kind::Kernel:
      return RadTarget{classify_kernel(ring, pi.kernel_image)};
    case ParsedIdeal::Kind::Quad:
      fail(Errc::BadArgument, "the oracle runs over polynomial rings");
  }
  fail(Errc::BadArgument, "unreachable");
}

int do_oracle(const Command& cmd, std::ostream& out) {
  Config cfg = config_for(cmd);
  RingSpec ring = parse_ring(cmd.ring);
  RadTarget lhs = rad_target_of(parse_ideal(cmd.lhs, ring, cfg), ring, cfg);
  RadTarget rhs = rad_target_of(parse_ideal(cmd.rhs, ring, cfg), ring, cfg);
  OracleResult res = oracle_small(lhs, rhs, cmd.cap, cfg);
  if (cmd.format == "json")
    out << oracle_to_json(res).dump(2) << "\n";
  else {
    out << "candidates: " << res.candidates << "\nequal: "
        << (res.equal ? "yes" : "no") << "\n";
    if (res.counterexample)
      out << "counterexample: " << to_string(*res.counterexample) << "\n";
  }
  return res.equal ? kExitOk : kExitRefuted;
}

}  // namespace

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.verb == "certify") return do_certify(cmd, out);
    if (cmd.verb == "verify") return do_verify(cmd, out);
    if (cmd.verb == "classify") return do_classify(cmd, out);
    if (cmd.verb == "witness") return do_witness(cmd, out);
    if (cmd.verb == "obstruct") return do_obstruct(cmd, out);
    if (cmd.verb == "descend") return do_descend(cmd, out);
    if (cmd.verb == "extend") return do_extend(cmd, out);
    if (cmd.verb == "oracle") return do_oracle(cmd, out);
    fail(Errc::UnknownVerb, "unknown verb: " + cmd.verb);
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_status_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "BadArgument: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    Command cmd = parse_command(args);
    return run_command(cmd, out, err);
  } catch (const CLI::CallForHelp&) {
    out << "stci - set-theoretic complete intersection certificates\n"
           "subcommands:\n"
           "  certify  --ring R --ideal SPEC          construct + verify a certificate\n"
           "  verify   --cert FILE | --ring R --ideal SPEC --gens SPEC\n"
           "  classify --ring R --ideal SPEC          normal form and height\n"
           "  witness  --ring R --ideal 'qideal(..)'  torsion witness P^m = (b)\n"
           "  obstruct --ring R --adjoin EXPR         characteristic-zero obstruction\n"
           "  descend  --ring R --gens SPEC --maximal EXPR\n"
           "  extend   --cert FILE [--promise TEXT]   flat extension lift\n"
           "  oracle   --ring R --lhs SPEC --rhs SPEC [--cap D]\n"
           "common flags: --format text|json, --bound N, --n-check N, --seed S\n"
           "rings: ZZ, QQ, GF(p), GF(p)[t], GF(p)[t^2,t^3], QQ[t^2,t^3], ZZ[sqrt(-5)]\n"
           "exit codes: 0 proved, 1 usage/input error, 2 refuted, 3 not proven at bound\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_status_for(e.code());
  }
}

}  // namespace stci
