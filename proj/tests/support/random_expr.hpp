#pragma once

#include "jetvar/bundle.hpp"
#include "jetvar/jet_expr.hpp"

#include <random>
#include <set>
#include <vector>

namespace jetvar::testsupport {

struct GenOptions {
    int max_jet_order = 2;
    int max_time_order = 0;
    int max_degree = 3;
    int max_terms = 4;
    int odd_degree = 0;  // odd factors per monomial; keeps the result homogeneous
    bool allow_coords = true;
};

inline Rational random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

inline JetVariable random_jet_variable(std::mt19937_64& rng, const BundleSignature& sig,
                                       const GenOptions& opt) {
    std::uniform_int_distribution<int> field(0, sig.field_count() - 1);
    std::uniform_int_distribution<int> order(0, opt.max_jet_order);
    std::uniform_int_distribution<int> coord(0, sig.coord_count() - 1);
    int total = order(rng);
    int time_order = 0;
    if (opt.max_time_order > 0 && total > 0) {
        std::uniform_int_distribution<int> dots(0, std::min(total, opt.max_time_order));
        time_order = dots(rng);
    }
    MultiIndex spatial;
    for (int k = 0; k < total - time_order; ++k) spatial = spatial.with_added(coord(rng));
    return JetVariable{field(rng), spatial, time_order};
}

inline JetExpr random_expr(std::mt19937_64& rng, const BundleSignature& sig, const GenOptions& opt) {
    std::uniform_int_distribution<int> terms(1, opt.max_terms);
    std::uniform_int_distribution<int> even_degree(0, std::max(0, opt.max_degree - opt.odd_degree));
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> coord(0, sig.coord_count() - 1);

    JetExpr out;
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<Monomial::EvenFactor> evens;
        for (int d = even_degree(rng); d > 0; --d) {
            if (opt.allow_coords && pick(rng) == 0)
                evens.emplace_back(EvenVariable::coordinate(coord(rng)), 1);
            else
                evens.emplace_back(EvenVariable::jet(random_jet_variable(rng, sig, opt)), 1);
        }
        std::set<OddGenerator> odds;
        for (int guard = 0; static_cast<int>(odds.size()) < opt.odd_degree && guard < 200; ++guard)
            odds.insert(OddGenerator{random_jet_variable(rng, sig, opt)});
        if (static_cast<int>(odds.size()) != opt.odd_degree) continue;
        out += JetExpr::term(random_coeff(rng),
                             Monomial(std::move(evens), {odds.begin(), odds.end()}));
    }
    return out;
}

/// Retries until the generated expression is nonzero.
inline JetExpr random_nonzero_expr(std::mt19937_64& rng, const BundleSignature& sig,
                                   const GenOptions& opt) {
    for (;;) {
        JetExpr e = random_expr(rng, sig, opt);
        if (!e.is_zero()) return e;
    }
}

inline std::vector<JetExpr> random_tuple(std::mt19937_64& rng, const BundleSignature& sig,
                                         const GenOptions& opt) {
    std::vector<JetExpr> out;
    for (int i = 0; i < sig.field_count(); ++i) out.push_back(random_expr(rng, sig, opt));
    return out;
}

}  // namespace jetvar::testsupport
