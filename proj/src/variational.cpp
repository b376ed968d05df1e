#include "jetvar/variational.hpp"

#include <stdexcept>

namespace jetvar {

namespace {

void require_source_component(const JetExpr& e, const BundleSignature& sig, const char* who) {
    check_in_signature(e, sig);
    if (!e.is_even()) throw std::invalid_argument(std::string(who) + ": odd generator present");
    if (e.contains_time()) throw std::invalid_argument(std::string(who) + ": dotted variable present");
    if (e.contains_parameter()) throw std::invalid_argument(std::string(who) + ": tau present");
}

}  // namespace

SourceForm::SourceForm(std::vector<JetExpr> components, const BundleSignature& sig)
    : components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != sig.field_count())
        throw std::invalid_argument("SourceForm: one component per field required");
    for (const auto& e : components_) require_source_component(e, sig, "SourceForm");
}

LocalFunctional::LocalFunctional(JetExpr integrand, const BundleSignature& sig)
    : integrand_(std::move(integrand)) {
    require_source_component(integrand_, sig, "LocalFunctional");
}

JetExpr euler_component(const JetExpr& integrand, int field, const BundleSignature& sig) {
    JetExpr out;
    for (const JetVariable& v : integrand.jet_variables(field)) {
        JetExpr p = partial(integrand, EvenVariable::jet(v));
        int sign = v.total_order() % 2 == 0 ? 1 : -1;
        out += Rational(sign) * total_derivative(p, v.spatial, v.time_order, sig);
    }
    return out;
}

JetExpr euler_component_odd(const JetExpr& integrand, int field, const BundleSignature& sig) {
    JetExpr out;
    for (const OddGenerator& g : integrand.odd_generators(field)) {
        JetExpr p = partial_left(integrand, g);
        int sign = g.var.total_order() % 2 == 0 ? 1 : -1;
        out += Rational(sign) * total_derivative(p, g.var.spatial, g.var.time_order, sig);
    }
    return out;
}

SourceForm euler_lagrange(const LocalFunctional& functional, const BundleSignature& sig) {
    std::vector<JetExpr> components;
    components.reserve(sig.field_count());
    for (int i = 0; i < sig.field_count(); ++i)
        components.push_back(euler_component(functional.integrand(), i, sig));
    return SourceForm(std::move(components), sig);
}

std::vector<JetExpr> euler_lagrange_extended(const JetExpr& integrand, const BundleSignature& sig) {
    if (!sig.extended())
        throw std::invalid_argument("euler_lagrange_extended: signature is not extended");
    if (integrand.contains_odd())
        throw std::invalid_argument("euler_lagrange_extended: odd generator present");
    check_in_signature(integrand, sig);
    std::vector<JetExpr> components;
    components.reserve(sig.field_count());
    for (int i = 0; i < sig.field_count(); ++i)
        components.push_back(euler_component(integrand, i, sig));
    return components;
}

LinearDiffOp frechet_operator(const SourceForm& a, const BundleSignature&) {
    LinearDiffOp out;
    for (int j = 0; j < a.size(); ++j)
        for (const JetVariable& v : a.component(j).jet_variables())
            out.add(v.field, j, v.spatial, partial(a.component(j), EvenVariable::jet(v)));
    return out;
}

LinearDiffOp helmholtz_residual(const SourceForm& a, const BundleSignature& sig) {
    LinearDiffOp frechet = frechet_operator(a, sig);
    LinearDiffOp residual = frechet - formal_adjoint(frechet, sig);

    // Independent route: expand H_ij = sum_B [ dA_j/du^i_B D_B
    // - (-1)^|B| D_B o dA_i/du^j_B ] straight from the partials.
    LinearDiffOp direct;
    for (int j = 0; j < a.size(); ++j)
        for (const JetVariable& v : a.component(j).jet_variables())
            direct.add(v.field, j, v.spatial, partial(a.component(j), EvenVariable::jet(v)));
    for (int i = 0; i < a.size(); ++i) {
        for (const JetVariable& v : a.component(i).jet_variables()) {
            JetExpr c = partial(a.component(i), EvenVariable::jet(v));
            int sign = v.spatial.order() % 2 == 0 ? -1 : 1;
            for (const auto& [s, mult] : sub_multisets(v.spatial))
                direct.add(i, v.field, v.spatial.minus(s),
                           Rational(sign * mult) * total_derivative(c, s, 0, sig));
        }
    }
    if (!(direct == residual))
        throw std::logic_error("helmholtz_residual: expansion routes disagree");
    return residual;
}

namespace {

JetExpr homotopy_integrand(const SourceForm& a) {
    JetExpr sum;
    for (int i = 0; i < a.size(); ++i) sum += JetExpr::jet(i) * scale_fields(a.component(i));
    return integrate_parameter(sum);
}

}  // namespace

Verdict helmholtz_verdict(const SourceForm& a, const BundleSignature& sig) {
    LinearDiffOp residual = helmholtz_residual(a, sig);
    Verdict verdict{residual.is_zero(), residual, std::nullopt};
    if (verdict.variational) verdict.witness = LocalFunctional(homotopy_integrand(a), sig);
    return verdict;
}

Verdict criterion_theorem1(const SourceForm& a, const BundleSignature& sig) {
    BundleSignature ext = sig.extended_copy();

    JetExpr velocity_pairing;
    for (int i = 0; i < a.size(); ++i)
        velocity_pairing += JetExpr::jet(i, {}, 1) * a.component(i);

    std::vector<JetExpr> el = euler_lagrange_extended(velocity_pairing, ext);

    // E_i(L') is linear in the dotted variables; collect their coefficients.
    LinearDiffOp collected;
    for (int i = 0; i < sig.field_count(); ++i) {
        for (const auto& [m, c] : el[i].terms()) {
            int dotted = 0;
            for (const auto& [v, exp] : m.even())
                if (v.is_jet() && v.jet_var().time_order > 0) dotted += exp;
            if (dotted != 1)
                throw std::logic_error("criterion_theorem1: expansion not linear in dotted variables");
        }
        for (const JetVariable& v : el[i].jet_variables()) {
            if (v.time_order == 0) continue;
            if (v.time_order != 1)
                throw std::logic_error("criterion_theorem1: unexpected higher dot order");
            collected.add(i, v.field, v.spatial, partial(el[i], EvenVariable::jet(v)));
        }
    }

    // The documented global sign: collected(i, j, B) = -H(j, i, B).
    LinearDiffOp residual = helmholtz_residual(a, sig);
    auto matches = [&](const LinearDiffOp::Key& key) {
        return collected.coefficient(key.i, key.j, key.b) ==
               -residual.coefficient(key.j, key.i, key.b);
    };
    for (const auto& [key, coeff] : collected.entries())
        if (!matches(key)) throw std::logic_error("criterion_theorem1: sign convention violated");
    for (const auto& [key, coeff] : residual.entries())
        if (!matches({key.j, key.i, key.b}))
            throw std::logic_error("criterion_theorem1: sign convention violated");

    Verdict verdict{collected.is_zero(), collected, std::nullopt};
    if (verdict.variational) verdict.witness = LocalFunctional(homotopy_integrand(a), sig);
    return verdict;
}

LocalFunctional reconstruct_lagrangian(const SourceForm& a, const BundleSignature& sig) {
    if (!helmholtz_residual(a, sig).is_zero())
        throw NotVariationalError("reconstruct_lagrangian: Helmholtz residual is nonzero");
    return LocalFunctional(homotopy_integrand(a), sig);
}

bool is_total_divergence(const LocalFunctional& functional, const BundleSignature& sig) {
    for (int i = 0; i < sig.field_count(); ++i)
        if (!euler_component(functional.integrand(), i, sig).is_zero()) return false;
    return true;
}

bool equivalent(const LocalFunctional& lhs, const LocalFunctional& rhs, const BundleSignature& sig) {
    return is_total_divergence(LocalFunctional(lhs.integrand() - rhs.integrand(), sig), sig);
}

}  // namespace jetvar
