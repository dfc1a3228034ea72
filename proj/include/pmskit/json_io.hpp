#ifndef PMSKIT_JSON_IO_HPP
#define PMSKIT_JSON_IO_HPP

#include <json.hpp>

#include "pmskit/numerics.hpp"
#include "pmskit/relations.hpp"

namespace pmskit {

using json = nlohmann::ordered_json;

// {"terms":[{"coef":"p/q","word":[k_1,...]}]} with rationals as exact strings
json to_json(const LinComb& u);
json to_json(const TensorComb& t);
json to_json(const ComplexEstimate& e); // {"re":...,"im":...,"err":...}
json to_json(const Subspace<Composition>& s);
json to_json(const RegDecomposition& reg);
json to_json(const KernelEqualityReport& rep);
json to_json(const ContainmentReport& rep);
json to_json(const DecompositionCertificate& cert);
json to_json(const std::vector<DimsRow>& rows);
json to_json(const Eq3Report& rep);
json to_json(const KyxReport& rep);
json to_json(const Theorem1Report& rep);

json word_json(const Composition& w);

// Parses "2*(1,1) + 1,2 - 1/2*(3)" style linear-combination literals.
LinComb parse_lincomb(const std::string& text);

} // namespace pmskit

#endif
