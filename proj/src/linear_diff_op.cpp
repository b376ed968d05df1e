#include "jetvar/linear_diff_op.hpp"

#include <stdexcept>

namespace jetvar {

JetExpr LinearDiffOp::coefficient(int i, int j, const MultiIndex& b) const {
    auto it = entries_.find(Key{i, j, b});
    return it == entries_.end() ? JetExpr() : it->second;
}

void LinearDiffOp::add(int i, int j, const MultiIndex& b, const JetExpr& coeff) {
    if (coeff.is_zero()) return;
    Key key{i, j, b};
    auto [it, inserted] = entries_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

LinearDiffOp LinearDiffOp::operator-(const LinearDiffOp& rhs) const {
    LinearDiffOp out(*this);
    for (const auto& [key, coeff] : rhs.entries_) out.add(key.i, key.j, key.b, -coeff);
    return out;
}

std::vector<JetExpr> LinearDiffOp::apply(std::span<const JetExpr> phi,
                                         const BundleSignature& sig) const {
    std::vector<JetExpr> out(sig.field_count());
    for (const auto& [key, coeff] : entries_) {
        if (key.i >= static_cast<int>(phi.size()) || key.j >= sig.field_count())
            throw std::invalid_argument("LinearDiffOp::apply: field index out of range");
        out[key.j] += coeff * total_derivative(phi[key.i], key.b, 0, sig);
    }
    return out;
}

LinearDiffOp formal_adjoint(const LinearDiffOp& p, const BundleSignature& sig) {
    LinearDiffOp out;
    for (const auto& [key, coeff] : p.entries()) {
        int sign = key.b.order() % 2 == 0 ? 1 : -1;
        // D_B(c phi) = sum_{S subset B} mult(B,S) D_S(c) D_{B\S}(phi)
        for (const auto& [s, mult] : sub_multisets(key.b)) {
            JetExpr c = Rational(sign * mult) * total_derivative(coeff, s, 0, sig);
            out.add(key.j, key.i, key.b.minus(s), c);
        }
    }
    return out;
}

}  // namespace jetvar
