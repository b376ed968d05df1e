#pragma once

#include "jetvar/variational.hpp"

namespace jetvar {

/// A graded element of the field-space de Rham complex in its diagonal
/// presentation: the integrand is a single-point jet expression in u and
/// the odd variations du, homogeneous of odd degree k (the form degree),
/// read modulo total divergence. Lives either on the base bundle or on the
/// extension over M x R.
class DiagonalForm {
public:
    DiagonalForm(JetExpr integrand, const BundleSignature& sig);

    const JetExpr& integrand() const { return integrand_; }
    int degree() const { return degree_; }
    bool extended() const { return extended_; }

private:
    JetExpr integrand_;
    int degree_;
    bool extended_;
};

/// A vertical vector field on the space of sections: one even component
/// eta^i (possibly jet-dependent) per field.
class VectorFieldLocal {
public:
    VectorFieldLocal(std::vector<JetExpr> components, const BundleSignature& sig);

    const JetExpr& component(int i) const { return components_.at(i); }
    const std::vector<JetExpr>& components() const { return components_; }

private:
    std::vector<JetExpr> components_;
};

/// zero holds exactly when every Euler certificate component vanishes; on
/// failure certificate is a nonzero Euler component witnessing that the
/// integrand is not a total divergence.
struct FormVerdict {
    bool zero;
    JetExpr certificate;
};

/// The exterior variation delta: the odd left derivation with
/// delta(u^i_A) = du^i_A (matching dots) and delta(du^i_A) = 0. Raises the
/// degree by one.
DiagonalForm vertical_differential(const DiagonalForm& form, const BundleSignature& sig);

/// Interior product i_eta: the odd left derivation sending du^i_A to the
/// prolonged component D_A eta^i and killing the even variables. Lowers the
/// degree by one; zero on degree-0 forms.
DiagonalForm interior_product(const VectorFieldLocal& eta, const DiagonalForm& form,
                              const BundleSignature& sig);

/// The odd degree-lowering map K from base-signature forms to
/// extended-signature forms: contracts one du^i_A with the dotted variable
/// u^i_A-dot. K of a degree-0 form is the zero form.
DiagonalForm k_map(const DiagonalForm& form, const BundleSignature& sig);

/// Decides integrand = 0 modulo Im(D) (spatial divergences, plus D_t on the
/// extended signature): true iff every Euler-Lagrange component w.r.t. every
/// field variable, odd and even, at every occurring time order vanishes.
/// Odd components are inspected first when producing a certificate.
FormVerdict zero_test(const DiagonalForm& form, const BundleSignature& sig);

/// zero_test(delta(delta omega)) - a theorem, so always zero.
FormVerdict check_delta_squared(const DiagonalForm& form, const BundleSignature& sig);

/// zero_test(delta(K omega) + K(delta omega)) on the extended signature -
/// the anticommutation delta K + K delta = 0, machine-checked. The input
/// lives on the base signature.
FormVerdict check_theorem2(const DiagonalForm& form, const BundleSignature& sig);

/// Poincare antiderivative sigma of a closed form (NotClosedError
/// otherwise): the prolonged contraction sum_{i,A} u^i_A d/d(du^i_A) of the
/// integrand, fields scaled by tau, integrated over tau in [0,1].
/// Guarantees zero_test(delta sigma - omega).
DiagonalForm poincare_antiderivative(const DiagonalForm& form, const BundleSignature& sig);

/// Builds the diagonal 1-form omega_A = integral du^i A_i d^n x, tests
/// closedness via zero_test(delta omega_A) and asserts that the verdict
/// coincides with vanishing of the Helmholtz residual of A.
FormVerdict closedness_is_helmholtz(const SourceForm& a, const BundleSignature& sig);

}  // namespace jetvar
