#pragma once

#include "jetvar/monomial.hpp"
#include "jetvar/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace jetvar {

/// Exact polynomial over base coordinates, t, the homotopy parameter tau,
/// jet variables and odd variation generators. Kept in normal form at all
/// times: monomials sorted degree-lexicographically, no zero coefficients,
/// so zero has the unique representation of an empty term map. Immutable in
/// spirit: every operation returns a fresh value.
class JetExpr {
public:
    using Terms = std::map<Monomial, Rational>;

    JetExpr() = default;  // zero
    JetExpr(const Rational& c);
    JetExpr(long long c);

    static JetExpr variable(const EvenVariable& v);
    static JetExpr jet(int field, MultiIndex spatial = {}, int time_order = 0);
    static JetExpr odd(int field, MultiIndex spatial = {}, int time_order = 0);
    static JetExpr odd(const OddGenerator& g);
    static JetExpr coordinate(int index);
    static JetExpr time();
    static JetExpr parameter();
    static JetExpr term(const Rational& c, const Monomial& m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (zero if absent).
    Rational coefficient(const Monomial& m) const;

    /// Number of odd factors when every monomial agrees; nullopt otherwise.
    /// Zero reports degree 0.
    std::optional<int> odd_degree() const;
    bool is_even() const;

    bool contains_odd() const;
    bool contains_parameter() const;
    /// True if t occurs explicitly or any variable carries a dot.
    bool contains_time() const;
    /// Highest spatial-plus-time derivative order over all jet/odd variables.
    int max_jet_order() const;

    /// Distinct jet variables (resp. odd generators) occurring, optionally
    /// restricted to one field.
    std::set<JetVariable> jet_variables(std::optional<int> field = std::nullopt) const;
    std::set<OddGenerator> odd_generators(std::optional<int> field = std::nullopt) const;
    std::set<EvenVariable> even_variables() const;

    JetExpr operator-() const;
    JetExpr& operator+=(const JetExpr& rhs);
    JetExpr& operator-=(const JetExpr& rhs);
    friend JetExpr operator+(JetExpr lhs, const JetExpr& rhs) { return lhs += rhs; }
    friend JetExpr operator-(JetExpr lhs, const JetExpr& rhs) { return lhs -= rhs; }
    friend JetExpr operator*(const JetExpr& lhs, const JetExpr& rhs);
    friend JetExpr operator*(const Rational& c, const JetExpr& e);
    friend JetExpr operator*(const JetExpr& e, const Rational& c) { return c * e; }

    bool operator==(const JetExpr&) const = default;

    void add_term(const Monomial& m, const Rational& c);

private:
    Terms terms_;
};

JetExpr pow(const JetExpr& base, int exponent);

}  // namespace jetvar
