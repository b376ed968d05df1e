#pragma once

#include "jetvar/exceptions.hpp"
#include "jetvar/linear_diff_op.hpp"

#include <optional>
#include <vector>

namespace jetvar {

/// Candidate variational derivatives: one even, undotted expression A_i per
/// field of the signature.
class SourceForm {
public:
    SourceForm(std::vector<JetExpr> components, const BundleSignature& sig);

    int size() const { return static_cast<int>(components_.size()); }
    const JetExpr& component(int i) const { return components_.at(i); }
    const std::vector<JetExpr>& components() const { return components_; }

    bool operator==(const SourceForm&) const = default;

private:
    std::vector<JetExpr> components_;
};

/// An action S = integral of L d^n x, represented by its integrand modulo
/// total divergence: two integrands are the same functional exactly when
/// their Euler-Lagrange components agree.
class LocalFunctional {
public:
    LocalFunctional(JetExpr integrand, const BundleSignature& sig);

    const JetExpr& integrand() const { return integrand_; }

private:
    JetExpr integrand_;
};

/// Outcome of a variationality test. variational holds exactly when the
/// residual operator is zero; positive verdicts carry the reconstructed
/// Lagrangian.
struct Verdict {
    bool variational;
    LinearDiffOp residual;
    std::optional<LocalFunctional> witness;
};

/// Generalized Euler-Lagrange component w.r.t. u^field:
/// sum over occurring (A, r) of (-1)^(|A|+r) D_A D_t^r (dL/du^field_{A,r}).
/// Handles dotted variables and odd-containing integrands alike.
JetExpr euler_component(const JetExpr& integrand, int field, const BundleSignature& sig);

/// Same w.r.t. the odd generator du^field (left partials).
JetExpr euler_component_odd(const JetExpr& integrand, int field, const BundleSignature& sig);

/// The variational derivative E_i(L) for every field.
SourceForm euler_lagrange(const LocalFunctional& functional, const BundleSignature& sig);

/// Euler-Lagrange components of an integrand on the extended bundle,
/// integrating by parts in x^a and t. Rejects odd generators and
/// non-extended signatures. The result may contain dotted variables.
std::vector<JetExpr> euler_lagrange_extended(const JetExpr& integrand, const BundleSignature& sig);

/// Linearization of A: entry (i, j, B) = dA_j / du^i_B.
LinearDiffOp frechet_operator(const SourceForm& a, const BundleSignature& sig);

/// Helmholtz defect H = F - F* with F the linearization of A. Computed both
/// by direct expansion of the partials and as frechet - adjoint(frechet);
/// the two routes must agree entrywise. A is variational iff H = 0.
LinearDiffOp helmholtz_residual(const SourceForm& a, const BundleSignature& sig);

/// Packages helmholtz_residual as a Verdict (with witness when positive).
Verdict helmholtz_verdict(const SourceForm& a, const BundleSignature& sig);

/// Extended-space test: forms L' = sum_i (du^i/dt) A_i over M x R and asks
/// for its variation to vanish identically. The residual entry (i, j, B) is
/// the coefficient of the j-th field's B-dotted variable in E_i(L').
///
/// Sign convention (fixed here, once): that coefficient equals -H[j, i, B]
/// where H = frechet - adjoint(frechet) is the Helmholtz residual; the
/// global sign is -1 and the index transposition comes from pairing du^i
/// on the left with the dotted argument on the right. The agreement is
/// asserted on every call.
Verdict criterion_theorem1(const SourceForm& a, const BundleSignature& sig);

/// Homotopy reconstruction L = integral_0^1 u^i A_i(x, tau u, tau u', ...)
/// d tau. Refuses with NotVariationalError when the Helmholtz residual is
/// nonzero; under a zero residual euler_lagrange(result) = A exactly.
LocalFunctional reconstruct_lagrangian(const SourceForm& a, const BundleSignature& sig);

/// True iff every Euler-Lagrange component of the integrand vanishes; in
/// the polynomial class this decides membership in Im(D) exactly.
bool is_total_divergence(const LocalFunctional& functional, const BundleSignature& sig);

/// Divergence-equivalence of two functionals.
bool equivalent(const LocalFunctional& lhs, const LocalFunctional& rhs, const BundleSignature& sig);

}  // namespace jetvar
