#include "algvol/catalog.hpp"
#include "algvol/errors.hpp"
#include "algvol/json_io.hpp"
#include "algvol/quadrature.hpp"
#include "algvol/volume.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace algvol;

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

struct FieldOptions {
    long quadratic = 0;
    long cyclotomic = 0;
    std::string minpoly;
    bool require_totally_real = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--quadratic", quadratic, "field x^2 - D, squarefree D >= 2");
        cmd->add_option("--cyclotomic", cyclotomic,
                        "maximal real subfield of the n-th cyclotomic field");
        cmd->add_option("--minpoly", minpoly,
                        "monic defining polynomial (\"x^3+x^2-2x-1\" or \"-1,-2,1,1\")");
        cmd->add_flag("--require-totally-real", require_totally_real,
                      "reject fields that are not totally real");
    }

    FieldPtr build(Json& echo) const
    {
        int given = (quadratic != 0) + (cyclotomic != 0) + (!minpoly.empty() ? 1 : 0);
        if (given != 1)
            throw input_error("give exactly one of --quadratic, --cyclotomic, --minpoly");
        if (quadratic != 0) {
            echo["quadratic"] = quadratic;
            return catalog_quadratic(quadratic);
        }
        if (cyclotomic != 0) {
            echo["cyclotomic"] = cyclotomic;
            return catalog_real_cyclotomic(cyclotomic);
        }
        echo["minpoly"] = minpoly;
        echo["require_totally_real"] = require_totally_real;
        return NumberField::make(parse_polynomial(minpoly), require_totally_real);
    }
};

std::vector<Rational> parse_coords(const std::string& text)
{
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string piece = comma == std::string::npos ? text.substr(start)
                                                       : text.substr(start, comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Normalization parse_normalization(const std::string& name)
{
    if (name == "raw_integral" || name == "raw")
        return Normalization::raw_integral;
    if (name == "geometric")
        return Normalization::geometric;
    throw input_error("normalization must be raw_integral or geometric");
}

void emit(const Json& doc, const std::string& summary)
{
    std::cout << doc.dump(2) << "\n";
    if (!summary.empty())
        std::cerr << summary << "\n";
}

std::vector<std::string> field_warnings(const NumberField& field)
{
    std::vector<std::string> w;
    if (!field.irreducibility_proved())
        w.push_back("field irreducibility unproved; degrees are relative to the given presentation");
    if (!field.galois_attested())
        w.push_back("field not attested Galois; the volume degree may fall below the field degree");
    return w;
}

struct VolumeArgs {
    FieldOptions field;
    std::string alpha_text;
    long auto_search = 0;
    long t0 = 0;
    long d0 = 1;
    std::string normalization = "raw_integral";
    int digits = 6;

    void attach(CLI::App* cmd, bool search_mode)
    {
        field.attach(cmd);
        if (!search_mode) {
            cmd->add_option("--alpha", alpha_text, "coordinates in the power basis, e.g. \"0,1\"");
            cmd->add_option("--auto-search", auto_search,
                            "search bound for a good primitive element");
        } else {
            cmd->add_option("--bound", auto_search, "search bound (max-norm of coordinates)")
                ->required();
        }
        cmd->add_option("--t0", t0, "integer slice bound (default: smallest valid)");
        cmd->add_option("--d0", d0, "polarization degree (default 1)");
        cmd->add_option("--normalization", normalization, "raw_integral (default) or geometric");
        cmd->add_option("--digits", digits, "decimal digits in numeric values")
            ->check(CLI::Range(1, 60));
    }

    struct Prepared {
        FieldPtr fieldptr;
        FieldElement alpha;
        std::optional<SearchStats> stats;
    };

    Prepared prepare(Json& echo) const
    {
        FieldPtr fieldptr = field.build(echo);
        if (alpha_text.empty() && auto_search == 0)
            throw input_error("give --alpha or --auto-search");
        if (!alpha_text.empty() && auto_search != 0)
            throw input_error("--alpha and --auto-search are mutually exclusive");
        if (!alpha_text.empty()) {
            echo["alpha"] = alpha_text;
            std::vector<Rational> coords = parse_coords(alpha_text);
            if (static_cast<int>(coords.size()) != fieldptr->degree())
                throw input_error("alpha needs exactly one coordinate per basis element");
            return Prepared{fieldptr, FieldElement(fieldptr, std::move(coords)), std::nullopt};
        }
        echo["auto_search"] = auto_search;
        SearchResult found = primitive_search(fieldptr, auto_search);
        return Prepared{fieldptr, found.alpha, found.stats};
    }

    ConstructionInput construction(const Prepared& prep) const
    {
        ConstructionInput input{prep.fieldptr, prep.alpha, std::nullopt, d0,
                                parse_normalization(normalization)};
        if (t0 != 0)
            input.t0 = t0;
        return input;
    }
};

int cmd_field(const FieldOptions& options, int digits)
{
    Json echo;
    FieldPtr field = options.build(echo);
    echo["digits"] = digits;
    Json doc = output_document("field", echo, json_field(*field, digits),
                               field_warnings(*field));
    emit(doc, "field: " + field->defining_poly().str() + ", degree "
                  + std::to_string(field->degree())
                  + (field->totally_real() ? ", totally real" : ", not totally real"));
    return 0;
}

int cmd_volume(const VolumeArgs& args, const char* name)
{
    Json echo;
    VolumeArgs::Prepared prep = args.prepare(echo);
    if (args.t0 != 0)
        echo["t0"] = args.t0;
    echo["d0"] = args.d0;
    echo["normalization"] = args.normalization;
    echo["digits"] = args.digits;

    VolumeReport report = cutkosky_volume(args.construction(prep), args.digits);
    Json result = json_volume_report(report);
    if (prep.stats) {
        result["search"] = json_search_stats(*prep.stats);
        Json alpha = Json::array();
        for (const Rational& c : prep.alpha.coords())
            alpha.push_back(rational_str(c));
        result["search"]["alpha"] = alpha;
    }
    Json doc = output_document(name, echo, result, report.warnings);
    emit(doc, std::string(name) + ": volume has minimal polynomial "
                  + report.volume.min_poly().str() + ", value " + report.numeric_value
                  + " (degree " + std::to_string(report.volume_degree) + ", dimension "
                  + std::to_string(report.ambient_dimension) + ")");
    return 0;
}

int cmd_verify(const VolumeArgs& args, long kmin, long kmax, double threshold,
               long scale_check)
{
    Json echo;
    VolumeArgs::Prepared prep = args.prepare(echo);
    echo["kmin"] = kmin;
    echo["kmax"] = kmax;
    echo["threshold"] = threshold;
    if (scale_check != 0)
        echo["scale_check"] = scale_check;
    echo["digits"] = args.digits;

    ConstructionInput input = args.construction(prep);
    input.normalization = Normalization::raw_integral; // the oracle checks the raw integral
    VolumeReport report = cutkosky_volume(input, args.digits);

    if (!is_integer(report.canonical_t0))
        throw computation_error("canonical t0 is not an integer");
    long t0 = static_cast<long>(report.canonical_t0.get_num().get_si());
    OracleReport oracle = riemann_volume_r1(report.m_alpha, report.beta, t0,
                                            RiemannSchedule{kmin, kmax}, report.volume);
    ConvergenceSummary convergence = convergence_report(oracle, threshold);

    Json result;
    result["volume"] = json_volume_report(report);
    result["oracle"] = json_oracle_report(oracle);
    result["convergence"] = json_convergence(convergence);
    bool scale_ok = true;
    if (scale_check != 0) {
        scale_ok = verify_scaling(prep.alpha, scale_check);
        result["scale_check"] = Json{{"k", scale_check}, {"equal", scale_ok}};
    }
    Json doc = output_document("verify", echo, result, report.warnings);
    emit(doc, std::string("verify: exact ") + report.numeric_value + ", final residual "
                  + std::to_string(convergence.final_residual) + ", verdict "
                  + (convergence.pass && scale_ok ? "pass" : "fail"));
    return convergence.pass && scale_ok ? 0 : kExitComputation;
}

int cmd_pi_demo(long n, const std::string& tol, int max_level)
{
    Json echo;
    echo["N"] = n;
    echo["tol"] = tol;
    echo["max_level"] = max_level;
    PiDemoInput input;
    input.n = n;
    input.quad.tolerance = parse_rational(tol);
    input.quad.max_level = max_level;
    OracleReport report = pi_demo(input);
    Json doc = output_document("pi-demo", echo, json_oracle_report(report), {});
    emit(doc, "pi-demo: value " + std::to_string(report.values.back().second)
                  + ", value/(3N) " + std::to_string(report.value_over_3n)
                  + ", residual vs pi " + std::to_string(report.residual_vs_pi));
    return report.converged ? 0 : kExitComputation;
}

int cmd_kunneth(const std::vector<long>& pq, const std::vector<std::string>& files,
                int digits)
{
    Json echo;
    echo["digits"] = digits;
    ProductReport report;
    if (!pq.empty()) {
        if (pq.size() != 2 || !files.empty())
            throw input_error("give --pq p q or two volume documents");
        echo["pq"] = Json::array({pq[0], pq[1]});
        report = pq_demo(pq[0], pq[1], digits);
    } else {
        if (files.size() != 2)
            throw input_error("give --pq p q or two volume documents");
        echo["files"] = Json::array({files[0], files[1]});
        OperandSummary ops[2];
        for (int i = 0; i < 2; ++i) {
            std::ifstream in(files[static_cast<size_t>(i)]);
            if (!in)
                throw input_error("cannot open " + files[static_cast<size_t>(i)]);
            Json doc;
            try {
                in >> doc;
            } catch (const std::exception& e) {
                throw input_error("malformed document: " + std::string(e.what()));
            }
            ops[i] = parse_volume_document(doc);
        }
        report = kunneth_product(ops[0], ops[1], digits);
    }
    Json doc = output_document("kunneth", echo, json_product_report(report), {});
    emit(doc, "kunneth: degree " + std::to_string(report.volume_degree) + ", dimension "
                  + std::to_string(report.ambient_dimension) + ", value "
                  + report.numeric_value);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact algebraic volumes of divisors on projective bundles"};
    app.require_subcommand(1);

    FieldOptions field_options;
    int field_digits = 6;
    CLI::App* field_cmd = app.add_subcommand("field", "describe a number field");
    field_options.attach(field_cmd);
    field_cmd->add_option("--digits", field_digits, "decimal digits in numeric values")
        ->check(CLI::Range(1, 60));

    VolumeArgs volume_args;
    CLI::App* volume_cmd = app.add_subcommand("volume", "exact volume of O_X(1)");
    volume_args.attach(volume_cmd, false);

    VolumeArgs search_args;
    CLI::App* search_cmd =
        app.add_subcommand("search", "volume via primitive-element search");
    search_args.attach(search_cmd, true);

    VolumeArgs verify_args;
    long kmin = 16, kmax = 4096, scale_check = 0;
    double threshold = 1e-4;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "exact pipeline vs Riemann-sum oracle");
    verify_args.attach(verify_cmd, false);
    verify_cmd->add_option("--kmin", kmin, "first step count of the doubling schedule");
    verify_cmd->add_option("--kmax", kmax, "last step count of the doubling schedule");
    verify_cmd->add_option("--threshold", threshold, "residual threshold for the verdict");
    verify_cmd->add_option("--scale-check", scale_check,
                           "also check exact invariance under alpha -> k*alpha");

    long pi_n = 1;
    std::string pi_tol = "1e-8";
    int pi_max_level = 11;
    CLI::App* pi_cmd = app.add_subcommand("pi-demo", "simplex quadrature of the disk bundle");
    pi_cmd->add_option("--N", pi_n, "intersection number N")->required();
    pi_cmd->add_option("--tol", pi_tol, "quadrature tolerance");
    pi_cmd->add_option("--max-level", pi_max_level, "refinement cap");

    std::vector<long> kunneth_pq;
    std::vector<std::string> kunneth_files;
    int kunneth_digits = 6;
    CLI::App* kunneth_cmd = app.add_subcommand("kunneth", "product of two volumes");
    kunneth_cmd->add_option("--pq", kunneth_pq, "odd primes p < q with p not dividing q-1")
        ->expected(2);
    kunneth_cmd->add_option("files", kunneth_files, "two volume documents")
        ->expected(0, 2);
    kunneth_cmd->add_option("--digits", kunneth_digits, "decimal digits in numeric values")
        ->check(CLI::Range(1, 60));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (field_cmd->parsed())
            return cmd_field(field_options, field_digits);
        if (volume_cmd->parsed())
            return cmd_volume(volume_args, "volume");
        if (search_cmd->parsed())
            return cmd_volume(search_args, "search");
        if (verify_cmd->parsed())
            return cmd_verify(verify_args, kmin, kmax, threshold, scale_check);
        if (pi_cmd->parsed())
            return cmd_pi_demo(pi_n, pi_tol, pi_max_level);
        if (kunneth_cmd->parsed())
            return cmd_kunneth(kunneth_pq, kunneth_files, kunneth_digits);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const computation_error& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitValidation;
}
