#pragma once

#include <json.hpp>

#include "stci/certify.hpp"
#include "stci/ideals.hpp"
#include "stci/quadlat.hpp"
#include "stci/verify.hpp"

namespace stci {

using ojson = nlohmann::ordered_json;

std::string ambient_name(const PrimeIdeal& p, unsigned extension_vars = 0);

ojson prime_to_json(const PrimeIdeal& p);
ojson proof_to_json(const RadicalProof& proof);
ojson certificate_to_json(const Certificate& cert);
ojson obstruction_to_json(const ObstructionReport& rep);
ojson torsion_to_json(const QuadIdeal& p, const TorsionWitness& tw);
ojson descend_to_json(const DescendResult& res, const PrimeIdeal& m);
ojson constant_descent_to_json(const ConstantDescentResult& res, const PrimeIdeal& p);
ojson oracle_to_json(const OracleResult& res);

// Rebuilds a certificate from its JSON form, re-validating every side
// condition; the embedded proof is not trusted (callers re-verify).
Certificate certificate_from_json(const ojson& j, const Config& cfg);

}  // namespace stci
