#include "algvol/json_io.hpp"

#include "algvol/errors.hpp"

namespace algvol {

Json json_rational(const Rational& x)
{
    return rational_str(x);
}

Json json_interval(const Interval& iv)
{
    return Json::array({rational_str(iv.lo), rational_str(iv.hi)});
}

Json json_polynomial(const Polynomial& p)
{
    Json j;
    if (p.is_zero()) {
        j["content"] = "0";
        j["coefficients"] = Json::array({"0"});
        return j;
    }
    auto [content, prim] = p.content_primitive();
    j["content"] = rational_str(content);
    Json coeffs = Json::array();
    for (int i = 0; i <= prim.degree(); ++i)
        coeffs.push_back(prim.coeff(i).get_num().get_str());
    j["coefficients"] = coeffs;
    j["text"] = p.str();
    return j;
}

Json json_algebraic(const AlgebraicNumber& a)
{
    Json j;
    Json coeffs = Json::array();
    for (int i = 0; i <= a.min_poly().degree(); ++i)
        coeffs.push_back(a.min_poly().coeff(i).get_num().get_str());
    j["min_poly"] = coeffs;
    j["isolating"] = json_interval(a.isolating());
    return j;
}

Json json_field(const NumberField& f, int digits)
{
    Json j;
    j["defining_poly"] = json_polynomial(f.defining_poly());
    j["degree"] = f.degree();
    j["totally_real"] = f.totally_real();
    j["galois_attested"] = f.galois_attested();
    j["irreducibility_proved"] = f.irreducibility_proved();
    Json roots = Json::array();
    Json decimals = Json::array();
    for (const Interval& iv : f.real_roots()) {
        AlgebraicNumber root = AlgebraicNumber::root_in(f.defining_poly(), iv);
        roots.push_back(json_interval(root.refined(pow10(-(digits + 1))).isolating()));
        decimals.push_back(root.decimal(digits));
    }
    j["real_roots"] = roots;
    j["real_root_decimals"] = decimals;
    return j;
}

namespace {

const char* normalization_name(Normalization n)
{
    return n == Normalization::raw_integral ? "raw_integral" : "geometric";
}

} // namespace

Json json_volume_report(const VolumeReport& r)
{
    Json j;
    j["field_poly"] = json_polynomial(r.field_poly);
    Json alpha = Json::array();
    for (const Rational& c : r.alpha_coords)
        alpha.push_back(rational_str(c));
    j["alpha"] = alpha;
    j["t0"] = r.t0;
    j["d0"] = r.d0;
    j["normalization"] = normalization_name(r.normalization);
    j["canonical_scale"] = json_rational(r.canonical_scale);
    j["canonical_t0"] = json_rational(r.canonical_t0);
    j["m_alpha"] = json_polynomial(r.m_alpha);
    j["M_alpha"] = json_polynomial(r.big_m_alpha);
    j["beta"] = json_algebraic(r.beta);
    j["volume"] = json_algebraic(r.volume);
    j["volume_degree"] = r.volume_degree;
    j["ambient_dimension"] = r.ambient_dimension;
    j["normalization_constant"] = json_rational(r.normalization_constant);
    j["numeric_value"] = r.numeric_value;
    j["numeric_error_bound"] = json_rational(r.numeric_error_bound);
    j["flags"] = Json{{"degree_equals_field_degree", r.degree_equals_field_degree},
                      {"galois_attested", r.galois_attested},
                      {"irreducibility_proved", r.irreducibility_proved}};
    return j;
}

Json json_search_stats(const SearchStats& s)
{
    Json j;
    j["candidates"] = s.candidates;
    j["skipped_content"] = s.skipped_content;
    j["rejected_nonprimitive"] = s.rejected_nonprimitive;
    j["rejected_zero_certificate"] = s.rejected_zero_certificate;
    return j;
}

Json json_product_report(const ProductReport& r)
{
    Json j;
    Json ops = Json::array();
    for (const OperandSummary* op : {&r.left, &r.right}) {
        Json o;
        o["volume"] = json_algebraic(op->volume);
        o["ambient_dimension"] = op->ambient_dimension;
        o["volume_degree"] = op->volume_degree;
        ops.push_back(o);
    }
    j["operands"] = ops;
    j["volume"] = json_algebraic(r.volume);
    j["volume_degree"] = r.volume_degree;
    j["ambient_dimension"] = r.ambient_dimension;
    j["numeric_value"] = r.numeric_value;
    if (r.conductor_left && r.conductor_right)
        j["conductors"] = Json::array({*r.conductor_left, *r.conductor_right});
    if (!r.operand_reports.empty()) {
        Json reports = Json::array();
        for (const VolumeReport& vr : r.operand_reports)
            reports.push_back(json_volume_report(vr));
        j["operand_reports"] = reports;
    }
    return j;
}

Json json_oracle_report(const OracleReport& r)
{
    Json j;
    Json values = Json::array();
    for (const auto& [k, v] : r.values)
        values.push_back(Json::array({k, v}));
    j["values"] = values;
    j["exact_reference"] = r.exact_reference;
    Json residuals = Json::array();
    for (double x : r.residuals)
        residuals.push_back(x);
    j["residuals"] = residuals;
    j["converged"] = r.converged;
    if (!r.pi_reference.empty()) {
        j["value_over_3N"] = r.value_over_3n;
        j["pi_reference"] = r.pi_reference;
        j["residual_vs_pi"] = r.residual_vs_pi;
    }
    return j;
}

Json json_convergence(const ConvergenceSummary& s)
{
    Json j;
    j["pass"] = s.pass;
    j["tail_start"] = s.tail_start;
    j["final_residual"] = s.final_residual;
    j["empirical_order"] = s.empirical_order;
    j["note"] = s.note;
    return j;
}

Json output_document(const std::string& subcommand, Json command_args, Json result,
                     std::vector<std::string> warnings)
{
    Json doc;
    doc["schema_version"] = "1.0";
    Json cmd;
    cmd["subcommand"] = subcommand;
    cmd["args"] = std::move(command_args);
    doc["command"] = cmd;
    doc["result"] = std::move(result);
    Json warn = Json::array();
    for (const std::string& w : warnings)
        warn.push_back(w);
    doc["warnings"] = warn;
    return doc;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coefficients"))
        throw input_error("malformed polynomial document");
    Rational content = j.contains("content")
        ? parse_rational(j["content"].get<std::string>())
        : Rational(1);
    std::vector<Rational> coeffs;
    for (const auto& c : j["coefficients"])
        coeffs.push_back(parse_rational(c.get<std::string>()) * content);
    return Polynomial(std::move(coeffs));
}

AlgebraicNumber algebraic_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("min_poly") || !j.contains("isolating"))
        throw input_error("malformed algebraic number document");
    std::vector<Rational> coeffs;
    for (const auto& c : j["min_poly"])
        coeffs.push_back(parse_rational(c.get<std::string>()));
    Polynomial p(std::move(coeffs));
    const Json& iv = j["isolating"];
    if (!iv.is_array() || iv.size() != 2)
        throw input_error("malformed isolating interval");
    Interval interval(parse_rational(iv[0].get<std::string>()),
                      parse_rational(iv[1].get<std::string>()));
    return AlgebraicNumber::root_in(p, interval);
}

OperandSummary parse_volume_document(const Json& doc)
{
    const Json* result = &doc;
    if (doc.contains("result"))
        result = &doc["result"];
    if (!result->contains("volume") || !result->contains("ambient_dimension"))
        throw input_error("document does not contain a volume result");
    OperandSummary op;
    op.volume = algebraic_from_json((*result)["volume"]);
    op.ambient_dimension = (*result)["ambient_dimension"].get<int>();
    op.volume_degree = result->contains("volume_degree")
        ? (*result)["volume_degree"].get<int>()
        : op.volume.degree();
    return op;
}

} // namespace algvol
