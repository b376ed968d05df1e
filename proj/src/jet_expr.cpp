#include "jetvar/jet_expr.hpp"

#include <stdexcept>

namespace jetvar {

JetExpr::JetExpr(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::unit(), c);
}

JetExpr::JetExpr(long long c) : JetExpr(Rational(c)) {}

JetExpr JetExpr::variable(const EvenVariable& v) { return term(1, Monomial::of(v)); }

JetExpr JetExpr::jet(int field, MultiIndex spatial, int time_order) {
    return variable(EvenVariable::jet(field, std::move(spatial), time_order));
}

JetExpr JetExpr::odd(int field, MultiIndex spatial, int time_order) {
    return odd(OddGenerator{JetVariable{field, std::move(spatial), time_order}});
}

JetExpr JetExpr::odd(const OddGenerator& g) { return term(1, Monomial::of(g)); }

JetExpr JetExpr::coordinate(int index) { return variable(EvenVariable::coordinate(index)); }

JetExpr JetExpr::time() { return variable(EvenVariable::time()); }

JetExpr JetExpr::parameter() { return variable(EvenVariable::parameter()); }

JetExpr JetExpr::term(const Rational& c, const Monomial& m) {
    JetExpr e;
    e.add_term(m, c);
    return e;
}

Rational JetExpr::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> JetExpr::odd_degree() const {
    if (terms_.empty()) return 0;
    int deg = terms_.begin()->first.odd_degree();
    for (const auto& [m, c] : terms_)
        if (m.odd_degree() != deg) return std::nullopt;
    return deg;
}

bool JetExpr::is_even() const {
    for (const auto& [m, c] : terms_)
        if (m.odd_degree() != 0) return false;
    return true;
}

bool JetExpr::contains_odd() const { return !is_even(); }

bool JetExpr::contains_parameter() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.even())
            if (v.kind() == EvenVariable::Kind::parameter) return true;
    return false;
}

bool JetExpr::contains_time() const {
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.even()) {
            if (v.kind() == EvenVariable::Kind::time) return true;
            if (v.is_jet() && v.jet_var().time_order > 0) return true;
        }
        for (const auto& g : m.odd())
            if (g.var.time_order > 0) return true;
    }
    return false;
}

int JetExpr::max_jet_order() const {
    int order = 0;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.even())
            if (v.is_jet()) order = std::max(order, v.jet_var().total_order());
        for (const auto& g : m.odd()) order = std::max(order, g.var.total_order());
    }
    return order;
}

std::set<JetVariable> JetExpr::jet_variables(std::optional<int> field) const {
    std::set<JetVariable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.even())
            if (v.is_jet() && (!field || v.jet_var().field == *field)) out.insert(v.jet_var());
    return out;
}

std::set<OddGenerator> JetExpr::odd_generators(std::optional<int> field) const {
    std::set<OddGenerator> out;
    for (const auto& [m, c] : terms_)
        for (const auto& g : m.odd())
            if (!field || g.var.field == *field) out.insert(g);
    return out;
}

std::set<EvenVariable> JetExpr::even_variables() const {
    std::set<EvenVariable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.even()) out.insert(v);
    return out;
}

JetExpr JetExpr::operator-() const {
    JetExpr out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

JetExpr& JetExpr::operator+=(const JetExpr& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

JetExpr& JetExpr::operator-=(const JetExpr& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

JetExpr operator*(const JetExpr& lhs, const JetExpr& rhs) {
    JetExpr out;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            auto [sign, m] = Monomial::multiply(ma, mb);
            if (sign == 0) continue;
            Rational c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

JetExpr operator*(const Rational& c, const JetExpr& e) {
    JetExpr out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : e.terms_) out.terms_.emplace(m, c * coeff);
    return out;
}

void JetExpr::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

JetExpr pow(const JetExpr& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    JetExpr out(1);
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

}  // namespace jetvar
