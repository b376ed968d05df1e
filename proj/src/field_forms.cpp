#include "jetvar/field_forms.hpp"

#include <stdexcept>

namespace jetvar {

namespace {

JetExpr odd_contraction(const JetExpr& e, const std::function<JetExpr(const OddGenerator&)>& image) {
    return apply_derivation(
        e, DerivationParity::odd, [](const EvenVariable&) { return JetExpr(); }, image);
}

BundleSignature form_signature(const DiagonalForm& form, const BundleSignature& sig) {
    return form.extended() ? sig.extended_copy() : sig;
}

}  // namespace

DiagonalForm::DiagonalForm(JetExpr integrand, const BundleSignature& sig)
    : integrand_(std::move(integrand)), extended_(sig.extended()) {
    check_in_signature(integrand_, sig);
    if (integrand_.contains_parameter())
        throw std::invalid_argument("DiagonalForm: tau present in integrand");
    auto degree = integrand_.odd_degree();
    if (!degree) throw std::invalid_argument("DiagonalForm: integrand is not homogeneous");
    degree_ = *degree;
}

VectorFieldLocal::VectorFieldLocal(std::vector<JetExpr> components, const BundleSignature& sig)
    : components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != sig.field_count())
        throw std::invalid_argument("VectorFieldLocal: one component per field required");
    for (const auto& e : components_) {
        check_in_signature(e, sig);
        if (!e.is_even()) throw std::invalid_argument("VectorFieldLocal: odd generator present");
        if (e.contains_parameter()) throw std::invalid_argument("VectorFieldLocal: tau present");
    }
}

DiagonalForm vertical_differential(const DiagonalForm& form, const BundleSignature& sig) {
    BundleSignature fsig = form_signature(form, sig);
    JetExpr out = apply_derivation(
        form.integrand(), DerivationParity::odd,
        [](const EvenVariable& v) -> JetExpr {
            if (!v.is_jet()) return JetExpr();
            return JetExpr::odd(OddGenerator{v.jet_var()});
        },
        [](const OddGenerator&) { return JetExpr(); });
    return DiagonalForm(std::move(out), fsig);
}

DiagonalForm interior_product(const VectorFieldLocal& eta, const DiagonalForm& form,
                              const BundleSignature& sig) {
    BundleSignature fsig = form_signature(form, sig);
    JetExpr out = odd_contraction(form.integrand(), [&](const OddGenerator& g) {
        return total_derivative(eta.component(g.var.field), g.var.spatial, g.var.time_order, fsig);
    });
    return DiagonalForm(std::move(out), fsig);
}

DiagonalForm k_map(const DiagonalForm& form, const BundleSignature& sig) {
    if (form.extended())
        throw std::invalid_argument("k_map: form must live on the base signature");
    JetExpr out = odd_contraction(form.integrand(), [](const OddGenerator& g) {
        return JetExpr::jet(g.var.field, g.var.spatial, g.var.time_order + 1);
    });
    return DiagonalForm(std::move(out), sig.extended_copy());
}

FormVerdict zero_test(const DiagonalForm& form, const BundleSignature& sig) {
    BundleSignature fsig = form_signature(form, sig);
    for (int i = 0; i < fsig.field_count(); ++i) {
        JetExpr component = euler_component_odd(form.integrand(), i, fsig);
        if (!component.is_zero()) return {false, component};
    }
    for (int i = 0; i < fsig.field_count(); ++i) {
        JetExpr component = euler_component(form.integrand(), i, fsig);
        if (!component.is_zero()) return {false, component};
    }
    return {true, JetExpr()};
}

FormVerdict check_delta_squared(const DiagonalForm& form, const BundleSignature& sig) {
    return zero_test(vertical_differential(vertical_differential(form, sig), sig), sig);
}

FormVerdict check_theorem2(const DiagonalForm& form, const BundleSignature& sig) {
    if (form.extended())
        throw std::invalid_argument("check_theorem2: form must live on the base signature");
    DiagonalForm delta_k = vertical_differential(k_map(form, sig), sig);
    DiagonalForm k_delta = k_map(vertical_differential(form, sig), sig);
    DiagonalForm sum(delta_k.integrand() + k_delta.integrand(), sig.extended_copy());
    return zero_test(sum, sig);
}

DiagonalForm poincare_antiderivative(const DiagonalForm& form, const BundleSignature& sig) {
    BundleSignature fsig = form_signature(form, sig);
    FormVerdict closed = zero_test(vertical_differential(form, sig), sig);
    if (!closed.zero)
        throw NotClosedError("poincare_antiderivative: form is not closed");

    JetExpr accumulated;
    for (const OddGenerator& g : form.integrand().odd_generators()) {
        JetExpr contracted = partial_left(form.integrand(), g);
        accumulated +=
            JetExpr::jet(g.var.field, g.var.spatial, g.var.time_order) * scale_fields(contracted);
    }
    return DiagonalForm(integrate_parameter(accumulated), fsig);
}

FormVerdict closedness_is_helmholtz(const SourceForm& a, const BundleSignature& sig) {
    JetExpr integrand;
    for (int i = 0; i < a.size(); ++i) integrand += JetExpr::odd(i) * a.component(i);
    DiagonalForm one_form(std::move(integrand), sig);
    FormVerdict closed = zero_test(vertical_differential(one_form, sig), sig);
    bool helmholtz_zero = helmholtz_residual(a, sig).is_zero();
    if (closed.zero != helmholtz_zero)
        throw std::logic_error("closedness_is_helmholtz: verdicts disagree");
    return closed;
}

}  // namespace jetvar
