#include "jetvar/jet_calculus.hpp"

#include <stdexcept>

namespace jetvar {

JetExpr apply_derivation(const JetExpr& e, DerivationParity parity,
                         const std::function<JetExpr(const EvenVariable&)>& even_image,
                         const std::function<JetExpr(const OddGenerator&)>& odd_image) {
    JetExpr out;
    for (const auto& [m, c] : e.terms()) {
        const auto& evens = m.even();
        const auto& odds = m.odd();

        // Commuting factors can be brought to the front without signs, so
        // each contributes c * k * v^(k-1) * image * (odd block).
        for (std::size_t idx = 0; idx < evens.size(); ++idx) {
            JetExpr img = even_image(evens[idx].first);
            if (img.is_zero()) continue;
            std::vector<Monomial::EvenFactor> rest(evens);
            rest[idx].second -= 1;
            JetExpr prefix = JetExpr::term(c * evens[idx].second, Monomial(std::move(rest), {}));
            out += prefix * img * JetExpr::term(1, Monomial({}, odds));
        }

        // Odd factors: an odd derivation picks up (-1)^j passing the j
        // preceding odd factors; an even one passes freely.
        for (std::size_t j = 0; j < odds.size(); ++j) {
            JetExpr img = odd_image(odds[j]);
            if (img.is_zero()) continue;
            Rational coeff = c;
            if (parity == DerivationParity::odd && j % 2 == 1) coeff = -coeff;
            Monomial prefix(std::vector<Monomial::EvenFactor>(evens),
                            std::vector<OddGenerator>(odds.begin(), odds.begin() + j));
            Monomial suffix({}, std::vector<OddGenerator>(odds.begin() + j + 1, odds.end()));
            out += JetExpr::term(coeff, prefix) * img * JetExpr::term(1, suffix);
        }
    }
    return out;
}

JetExpr total_derivative(const JetExpr& e, int coord, const BundleSignature& sig) {
    if (coord < 0 || coord >= sig.coord_count())
        throw std::invalid_argument("total_derivative: invalid coordinate index");
    return apply_derivation(
        e, DerivationParity::even,
        [coord](const EvenVariable& v) -> JetExpr {
            switch (v.kind()) {
                case EvenVariable::Kind::coordinate:
                    return v.coord_index() == coord ? JetExpr(1) : JetExpr();
                case EvenVariable::Kind::jet: {
                    const auto& j = v.jet_var();
                    return JetExpr::jet(j.field, j.spatial.with_added(coord), j.time_order);
                }
                default:
                    return JetExpr();
            }
        },
        [coord](const OddGenerator& g) {
            return JetExpr::odd(g.var.field, g.var.spatial.with_added(coord), g.var.time_order);
        });
}

JetExpr total_derivative(const JetExpr& e, const MultiIndex& spatial, int time_order,
                         const BundleSignature& sig) {
    JetExpr out = e;
    for (int a : spatial.entries()) out = total_derivative(out, a, sig);
    for (int r = 0; r < time_order; ++r) out = time_total_derivative(out, sig);
    return out;
}

JetExpr time_total_derivative(const JetExpr& e, const BundleSignature& sig) {
    if (!sig.extended())
        throw std::invalid_argument("time_total_derivative: signature has no t coordinate");
    return apply_derivation(
        e, DerivationParity::even,
        [](const EvenVariable& v) -> JetExpr {
            switch (v.kind()) {
                case EvenVariable::Kind::time:
                    return JetExpr(1);
                case EvenVariable::Kind::jet: {
                    const auto& j = v.jet_var();
                    return JetExpr::jet(j.field, j.spatial, j.time_order + 1);
                }
                default:
                    return JetExpr();
            }
        },
        [](const OddGenerator& g) {
            return JetExpr::odd(g.var.field, g.var.spatial, g.var.time_order + 1);
        });
}

JetExpr partial(const JetExpr& e, const EvenVariable& v) {
    return apply_derivation(
        e, DerivationParity::even,
        [&v](const EvenVariable& w) { return w == v ? JetExpr(1) : JetExpr(); },
        [](const OddGenerator&) { return JetExpr(); });
}

JetExpr partial_left(const JetExpr& e, const OddGenerator& g) {
    return apply_derivation(
        e, DerivationParity::odd, [](const EvenVariable&) { return JetExpr(); },
        [&g](const OddGenerator& h) { return h == g ? JetExpr(1) : JetExpr(); });
}

namespace {

Monomial without_parameter(const Monomial& m, int& parameter_power) {
    parameter_power = 0;
    std::vector<Monomial::EvenFactor> evens;
    for (const auto& [v, e] : m.even()) {
        if (v.kind() == EvenVariable::Kind::parameter)
            parameter_power = e;
        else
            evens.emplace_back(v, e);
    }
    return Monomial(std::move(evens), std::vector<OddGenerator>(m.odd()));
}

}  // namespace

JetExpr scale_fields(const JetExpr& e) {
    if (e.contains_parameter())
        throw std::invalid_argument("scale_fields: expression already contains tau");
    JetExpr out;
    for (const auto& [m, c] : e.terms()) {
        int field_degree = m.odd_degree();
        for (const auto& [v, exp] : m.even())
            if (v.is_jet()) field_degree += exp;
        auto [sign, scaled] = Monomial::multiply(m, Monomial::of(EvenVariable::parameter(), field_degree));
        out.add_term(scaled, sign > 0 ? c : -c);
    }
    return out;
}

JetExpr integrate_parameter(const JetExpr& e) {
    JetExpr out;
    for (const auto& [m, c] : e.terms()) {
        int k = 0;
        Monomial stripped = without_parameter(m, k);
        out.add_term(stripped, c / (k + 1));
    }
    return out;
}

JetExpr substitute_parameter(const JetExpr& e, const Rational& value) {
    JetExpr out;
    for (const auto& [m, c] : e.terms()) {
        int k = 0;
        Monomial stripped = without_parameter(m, k);
        Rational factor = 1;
        for (int i = 0; i < k; ++i) factor *= value;
        out.add_term(stripped, c * factor);
    }
    return out;
}

void check_in_signature(const JetExpr& e, const BundleSignature& sig) {
    auto check_jet = [&](const JetVariable& v) {
        if (v.field < 0 || v.field >= sig.field_count())
            throw std::invalid_argument("expression: field index out of range");
        for (int a : v.spatial.entries())
            if (a < 0 || a >= sig.coord_count())
                throw std::invalid_argument("expression: coordinate index out of range");
        if (v.time_order > 0 && !sig.extended())
            throw std::invalid_argument("expression: dotted variable on a non-extended signature");
    };
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [v, exp] : m.even()) {
            switch (v.kind()) {
                case EvenVariable::Kind::coordinate:
                    if (v.coord_index() < 0 || v.coord_index() >= sig.coord_count())
                        throw std::invalid_argument("expression: coordinate index out of range");
                    break;
                case EvenVariable::Kind::time:
                    if (!sig.extended())
                        throw std::invalid_argument("expression: t on a non-extended signature");
                    break;
                case EvenVariable::Kind::jet:
                    check_jet(v.jet_var());
                    break;
                case EvenVariable::Kind::parameter:
                    break;
            }
        }
        for (const auto& g : m.odd()) check_jet(g.var);
    }
}

Rational evaluate(const JetExpr& e, const std::map<EvenVariable, Rational>& assignment) {
    Rational sum = 0;
    for (const auto& [m, c] : e.terms()) {
        if (m.odd_degree() != 0) throw std::invalid_argument("evaluate: odd generators present");
        Rational prod = c;
        for (const auto& [v, exp] : m.even()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw std::invalid_argument("evaluate: unassigned variable");
            for (int i = 0; i < exp; ++i) prod *= it->second;
        }
        sum += prod;
    }
    return sum;
}

}  // namespace jetvar
