#pragma once

#include "jetvar/bundle.hpp"
#include "jetvar/jet_calculus.hpp"
#include "jetvar/jet_expr.hpp"

#include <map>
#include <span>
#include <tuple>
#include <vector>

namespace jetvar {

/// A matrix-valued linear differential operator in total derivatives,
/// P_ij = sum_B c^B_ij D_B, stored by finite support: absent entries are
/// zero and the zero operator has empty support. Coefficients are kept in
/// normal form.
class LinearDiffOp {
public:
    struct Key {
        int i;
        int j;
        MultiIndex b;
        auto operator<=>(const Key&) const = default;
    };
    using Entries = std::map<Key, JetExpr>;

    LinearDiffOp() = default;

    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    JetExpr coefficient(int i, int j, const MultiIndex& b) const;
    void add(int i, int j, const MultiIndex& b, const JetExpr& coeff);

    LinearDiffOp operator-(const LinearDiffOp& rhs) const;
    bool operator==(const LinearDiffOp&) const = default;

    /// Applies the operator to a tuple of expressions:
    /// (P phi)_j = sum_{i,B} c^B_ij D_B phi_i.
    std::vector<JetExpr> apply(std::span<const JetExpr> phi, const BundleSignature& sig) const;

private:
    Entries entries_;
};

/// Formal adjoint with matrix transposition: entry (i,j,B) contributes
/// (P*)_ji = (-1)^|B| D_B o c^B_ij, expanded by the Leibniz rule back into
/// c' D_C normal form. Satisfies (P*)* = P and the divergence identity
/// psi_j (P phi)_j - (P* psi)_i phi_i in Im(D).
LinearDiffOp formal_adjoint(const LinearDiffOp& p, const BundleSignature& sig);

}  // namespace jetvar
