#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "m0n/certify.hpp"
#include "m0n/oracle.hpp"
#include "m0n/pairing.hpp"
#include "m0n/relations.hpp"
#include "m0n/standard.hpp"

namespace m0n {

using Json = nlohmann::ordered_json;

/// {"a": [indices], "D": [{"set": [...], "exp": k}]}.  D entries follow the
/// canonical rendering order.
Json monomial_json(const Monomial& m);
/// Inverse of monomial_json; validates against n.
Monomial monomial_from_json(const Json& j, int n);

/// {"n", "terms": [{"coeff", "a", "D"}]}, terms ascending in the monomial order.
Json polynomial_document(const Polynomial& p, int n, OrderConvention c = kDefaultConvention);
/// Throws std::invalid_argument on malformed documents.
Polynomial polynomial_from_document(const Json& doc, int* n_out = nullptr);

/// Vertices with set, exponent cap, parent and externality; edges as index pairs.
Json forest_json(const Forest& f);
/// One exponent per vertex, when the forest came from a monomial.
Json forest_json(const Forest& f, const std::vector<int>& exponents);

/// Rendering, degree, forest, S, A_v, p(v), the dual and its sign.
Json standard_json(const StandardMonomial& v);

Json check_json(const CheckResult& c);
Json pairing_json(const PairingReport& r, const PairingCertificate& cert);
Json oracle_json(const GradedOracleReport& r);
Json relation_json(const Relation& r, int n);
Json relations_json(const RelationSet& rs);
Json verify_json(const VerifyReport& r);

/// Basis renderings as a quoted header row, then the matrix row-major.
std::string pairing_csv(const PairingReport& r);

struct CsvMatrix {
    std::vector<std::string> header;
    std::vector<std::vector<Coeff>> rows;
};
/// Reads what pairing_csv writes.  Throws std::invalid_argument.
CsvMatrix parse_csv_matrix(std::string_view text);

/// Normal forms of kernel-reduced monomials of one degree.
using ReductionTable = std::vector<std::pair<Monomial, Polynomial>>;
Json reduction_table_json(int n, int d, const ReductionTable& table);
ReductionTable reduction_table_from_json(const Json& j, int n, int d);

}  // namespace m0n
