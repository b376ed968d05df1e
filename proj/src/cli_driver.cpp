#include "jetvar/cli_driver.hpp"

#include "jetvar/field_forms.hpp"
#include "jetvar/parser.hpp"
#include "jetvar/variational.hpp"

#include <json.hpp>

#include <sstream>

namespace jetvar {

namespace {

std::vector<ResidualEntry> operator_entries(const LinearDiffOp& op, const BundleSignature& sig) {
    std::vector<ResidualEntry> out;
    for (const auto& [key, coeff] : op.entries())
        out.push_back({sig.field_name(key.i), sig.field_name(key.j),
                       print_multi_index(key.b, sig), print(coeff, sig)});
    return out;
}

SourceForm parse_source_form(const CliRequest& request, const BundleSignature& sig,
                             const ParseContext& ctx) {
    if (static_cast<int>(request.expressions.size()) != sig.field_count())
        throw std::invalid_argument("expected one expression per field (" +
                                    std::to_string(sig.field_count()) + ")");
    std::vector<JetExpr> components;
    for (const auto& src : request.expressions) components.push_back(parse(src, ctx));
    return SourceForm(std::move(components), sig);
}

JetExpr parse_single(const CliRequest& request, const ParseContext& ctx) {
    if (request.expressions.size() != 1)
        throw std::invalid_argument("expected exactly one expression");
    return parse(request.expressions.front(), ctx);
}

void fill_variational_verdict(CliResponse& response, const Verdict& verdict,
                              const BundleSignature& sig) {
    response.verdict = verdict.variational ? "variational" : "not-variational";
    response.exit_status = verdict.variational ? 0 : 1;
    response.residual = operator_entries(verdict.residual, sig);
    if (verdict.witness) response.witness = print(verdict.witness->integrand(), sig);
}

CliResponse dispatch(const CliRequest& request) {
    CliResponse response;
    response.subcommand = request.subcommand;

    BundleSignature sig(request.coords, request.fields);
    bool forms = request.subcommand.starts_with("forms-");
    ParseContext ctx{sig, forms, request.max_order};

    if (request.subcommand == "el") {
        LocalFunctional functional(parse_single(request, ctx), sig);
        SourceForm el = euler_lagrange(functional, sig);
        for (const JetExpr& component : el.components())
            response.expressions.push_back(print(component, sig));
        response.verdict = "ok";
    } else if (request.subcommand == "helmholtz") {
        fill_variational_verdict(response, helmholtz_verdict(parse_source_form(request, sig, ctx), sig),
                                 sig);
    } else if (request.subcommand == "criterion") {
        fill_variational_verdict(response, criterion_theorem1(parse_source_form(request, sig, ctx), sig),
                                 sig);
    } else if (request.subcommand == "reconstruct") {
        Verdict verdict = helmholtz_verdict(parse_source_form(request, sig, ctx), sig);
        fill_variational_verdict(response, verdict, sig);
        if (verdict.variational) response.expressions.push_back(response.witness);
    } else if (request.subcommand == "adjoint") {
        SourceForm a = parse_source_form(request, sig, ctx);
        response.residual = operator_entries(formal_adjoint(frechet_operator(a, sig), sig), sig);
        response.verdict = "ok";
    } else if (request.subcommand == "dtotal") {
        int coord = sig.find_coord(request.direction);
        if (coord < 0) throw std::invalid_argument("--dir: unknown coordinate '" + request.direction + "'");
        response.expressions.push_back(print(total_derivative(parse_single(request, ctx), coord, sig), sig));
        response.verdict = "ok";
    } else if (request.subcommand == "divergence") {
        LocalFunctional functional(parse_single(request, ctx), sig);
        if (is_total_divergence(functional, sig)) {
            response.verdict = "zero";
        } else {
            response.verdict = "nonzero";
            response.exit_status = 1;
            SourceForm el = euler_lagrange(functional, sig);
            for (const JetExpr& component : el.components())
                response.expressions.push_back(print(component, sig));
        }
    } else if (request.subcommand == "forms-delta") {
        DiagonalForm form(parse_single(request, ctx), sig);
        response.expressions.push_back(print(vertical_differential(form, sig).integrand(), sig));
        response.verdict = "ok";
    } else if (request.subcommand == "forms-kmap") {
        DiagonalForm form(parse_single(request, ctx), sig);
        response.expressions.push_back(print(k_map(form, sig).integrand(), sig.extended_copy()));
        response.verdict = "ok";
    } else if (request.subcommand == "forms-sigma") {
        DiagonalForm form(parse_single(request, ctx), sig);
        try {
            DiagonalForm sigma = poincare_antiderivative(form, sig);
            response.expressions.push_back(print(sigma.integrand(), sig));
            response.verdict = "ok";
        } catch (const NotClosedError&) {
            response.verdict = "not-closed";
            response.exit_status = 1;
            FormVerdict closed = zero_test(vertical_differential(form, sig), sig);
            response.expressions.push_back(print(closed.certificate, sig));
        }
    } else if (request.subcommand == "forms-check-d2") {
        DiagonalForm form(parse_single(request, ctx), sig);
        FormVerdict verdict = check_delta_squared(form, sig);
        response.verdict = verdict.zero ? "zero" : "nonzero";
        response.exit_status = verdict.zero ? 0 : 1;
        if (!verdict.zero)
            response.expressions.push_back(print(verdict.certificate, sig.extended_copy()));
    } else if (request.subcommand == "forms-check-thm2") {
        DiagonalForm form(parse_single(request, ctx), sig);
        FormVerdict verdict = check_theorem2(form, sig);
        response.verdict = verdict.zero ? "zero" : "nonzero";
        response.exit_status = verdict.zero ? 0 : 1;
        if (!verdict.zero)
            response.expressions.push_back(print(verdict.certificate, sig.extended_copy()));
    } else {
        throw std::invalid_argument("unknown subcommand '" + request.subcommand + "'");
    }
    return response;
}

}  // namespace

CliResponse run(const CliRequest& request) {
    try {
        return dispatch(request);
    } catch (const ParseError& err) {
        return {2, request.subcommand, "error", {}, {}, "", err.what()};
    } catch (const std::invalid_argument& err) {
        return {2, request.subcommand, "error", {}, {}, "", err.what()};
    } catch (const std::logic_error& err) {
        return {2, request.subcommand, "error", {}, {}, "", std::string("internal: ") + err.what()};
    }
}

std::string render_human(const CliResponse& response) {
    std::ostringstream out;
    out << response.verdict << '\n';
    if (!response.message.empty()) out << response.message << '\n';
    if (!response.witness.empty()) out << "witness: " << response.witness << '\n';
    for (const auto& expr : response.expressions) out << expr << '\n';
    if (!response.residual.empty()) {
        out << "residual:\n";
        for (const auto& entry : response.residual)
            out << "  (" << entry.i << ", " << entry.j << ") [" << entry.multiindex
                << "]: " << entry.coefficient << '\n';
    }
    return out.str();
}

std::string render_json(const CliResponse& response) {
    nlohmann::ordered_json doc;
    doc["subcommand"] = response.subcommand;
    doc["verdict"] = response.verdict;
    doc["exit_status"] = response.exit_status;
    doc["expressions"] = response.expressions;
    nlohmann::ordered_json residual = nlohmann::ordered_json::array();
    for (const auto& entry : response.residual)
        residual.push_back({{"i", entry.i},
                            {"j", entry.j},
                            {"multiindex", entry.multiindex},
                            {"coefficient", entry.coefficient}});
    doc["residual"] = residual;
    doc["witness"] = response.witness;
    doc["message"] = response.message;
    return doc.dump(2) + "\n";
}

CliResponse response_from_json(const std::string& doc) {
    nlohmann::json parsed = nlohmann::json::parse(doc);
    CliResponse response;
    response.subcommand = parsed.at("subcommand").get<std::string>();
    response.verdict = parsed.at("verdict").get<std::string>();
    response.exit_status = parsed.at("exit_status").get<int>();
    response.expressions = parsed.at("expressions").get<std::vector<std::string>>();
    for (const auto& entry : parsed.at("residual"))
        response.residual.push_back({entry.at("i").get<std::string>(), entry.at("j").get<std::string>(),
                                     entry.at("multiindex").get<std::string>(),
                                     entry.at("coefficient").get<std::string>()});
    response.witness = parsed.at("witness").get<std::string>();
    response.message = parsed.at("message").get<std::string>();
    return response;
}

}  // namespace jetvar
