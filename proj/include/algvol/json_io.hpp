#ifndef ALGVOL_JSON_IO_HPP
#define ALGVOL_JSON_IO_HPP

#include "algvol/algebraic.hpp"
#include "algvol/number_field.hpp"
#include "algvol/quadrature.hpp"
#include "algvol/volume.hpp"

#include <json.hpp>

#include <string>

namespace algvol {

using Json = nlohmann::ordered_json;

Json json_rational(const Rational& x);
Json json_interval(const Interval& iv);
Json json_polynomial(const Polynomial& p); // {"content", "coefficients"}
Json json_algebraic(const AlgebraicNumber& a);
Json json_field(const NumberField& f, int digits);
Json json_volume_report(const VolumeReport& r);
Json json_search_stats(const SearchStats& s);
Json json_product_report(const ProductReport& r);
Json json_oracle_report(const OracleReport& r);
Json json_convergence(const ConvergenceSummary& s);

// Assemble the versioned output document; every CLI emission goes through
// this so the schema stays uniform.
Json output_document(const std::string& subcommand, Json command_args, Json result,
                     std::vector<std::string> warnings);

// Read back a volume (or product) document produced by this tool:
// result.volume plus dimension bookkeeping.
OperandSummary parse_volume_document(const Json& doc);

Polynomial polynomial_from_json(const Json& j);
AlgebraicNumber algebraic_from_json(const Json& j);

} // namespace algvol

#endif
