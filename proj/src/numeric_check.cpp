#include "jetvar/numeric_check.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace jetvar {

namespace {

using Grid = std::vector<long double>;

// Compiled polynomial: per monomial a coefficient and (slot, power) pairs.
// Slot 0 is x; slot 1 + field * (order+1) + r is the r-th stencil derivative
// of field i.
struct CompiledExpr {
    struct Term {
        long double coeff;
        std::vector<std::pair<int, int>> powers;
    };
    std::vector<Term> terms;
};

CompiledExpr compile(const JetExpr& e, int max_order) {
    CompiledExpr out;
    for (const auto& [m, c] : e.terms()) {
        CompiledExpr::Term term;
        term.coeff = static_cast<long double>(to_double(c));
        for (const auto& [v, exp] : m.even()) {
            int slot;
            if (v.kind() == EvenVariable::Kind::coordinate) {
                slot = 0;
            } else if (v.is_jet()) {
                const auto& j = v.jet_var();
                if (j.spatial.order() > max_order)
                    throw std::invalid_argument("numeric_crosscheck: stencil order exceeded");
                slot = 1 + j.field * (max_order + 1) + j.spatial.order();
            } else {
                throw std::invalid_argument("numeric_crosscheck: unsupported variable");
            }
            term.powers.emplace_back(slot, exp);
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

long double evaluate_node(const CompiledExpr& e, const std::vector<long double>& slots) {
    long double sum = 0;
    for (const auto& term : e.terms) {
        long double prod = term.coeff;
        for (const auto& [slot, exp] : term.powers)
            for (int i = 0; i < exp; ++i) prod *= slots[slot];
        sum += prod;
    }
    return sum;
}

Grid centered_difference(const Grid& w, long double h) {
    int n = static_cast<int>(w.size());
    Grid out(n);
    for (int k = 0; k < n; ++k) out[k] = (w[(k + 1) % n] - w[(k + n - 1) % n]) / (2 * h);
    return out;
}

// jets[r] is the r-fold iterated centered difference of the sampled field.
std::vector<Grid> stencil_jets(const Grid& w, int max_order, long double h) {
    std::vector<Grid> jets{w};
    for (int r = 1; r <= max_order; ++r) jets.push_back(centered_difference(jets[r - 1], h));
    return jets;
}

Grid random_smooth_field(std::mt19937_64& rng, const Grid& x) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double a0 = unit(rng);
    std::vector<double> cosine(3), sine(3);
    for (int m = 0; m < 3; ++m) {
        double decay = 1.0 / ((m + 1) * (m + 1));
        cosine[m] = unit(rng) * decay;
        sine[m] = unit(rng) * decay;
    }
    Grid out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        long double v = a0;
        for (int m = 0; m < 3; ++m) {
            v += cosine[m] * std::cos((m + 1) * static_cast<double>(x[k]));
            v += sine[m] * std::sin((m + 1) * static_cast<double>(x[k]));
        }
        out[k] = v;
    }
    return out;
}

}  // namespace

double numeric_crosscheck(const LocalFunctional& functional, const BundleSignature& sig,
                          int grid_size, int probe_count, double epsilon, unsigned long seed) {
    if (sig.coord_count() != 1)
        throw std::invalid_argument("numeric_crosscheck: one base coordinate required");
    if (sig.extended()) throw std::invalid_argument("numeric_crosscheck: base signature required");
    const JetExpr& lagrangian = functional.integrand();
    if (lagrangian.max_jet_order() > 2)
        throw std::invalid_argument("numeric_crosscheck: jet order above 2 unsupported");
    if (grid_size < 8) throw std::invalid_argument("numeric_crosscheck: grid too small");

    int fields = sig.field_count();
    std::vector<JetExpr> el(fields);
    int max_order = lagrangian.max_jet_order();
    for (int i = 0; i < fields; ++i) {
        el[i] = euler_component(lagrangian, i, sig);
        max_order = std::max(max_order, el[i].max_jet_order());
    }

    CompiledExpr compiled_l = compile(lagrangian, max_order);
    std::vector<CompiledExpr> compiled_el;
    for (int i = 0; i < fields; ++i) compiled_el.push_back(compile(el[i], max_order));

    const long double h = 2 * std::numbers::pi_v<long double> / grid_size;
    Grid x(grid_size);
    for (int k = 0; k < grid_size; ++k) x[k] = k * h;

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int probe = 0; probe < probe_count; ++probe) {
        std::vector<std::vector<Grid>> jets_u(fields), jets_v(fields);
        for (int i = 0; i < fields; ++i) {
            jets_u[i] = stencil_jets(random_smooth_field(rng, x), max_order, h);
            jets_v[i] = stencil_jets(random_smooth_field(rng, x), max_order, h);
        }

        std::vector<long double> slots(1 + fields * (max_order + 1));
        auto fill_slots = [&](int k, long double direction) {
            slots[0] = x[k];
            for (int i = 0; i < fields; ++i)
                for (int r = 0; r <= max_order; ++r)
                    slots[1 + i * (max_order + 1) + r] =
                        jets_u[i][r][k] + direction * epsilon * jets_v[i][r][k];
        };

        long double numeric = 0;
        long double symbolic = 0;
        for (int k = 0; k < grid_size; ++k) {
            fill_slots(k, +1);
            long double plus = evaluate_node(compiled_l, slots);
            fill_slots(k, -1);
            long double minus = evaluate_node(compiled_l, slots);
            numeric += plus - minus;

            fill_slots(k, 0);
            for (int i = 0; i < fields; ++i)
                symbolic += evaluate_node(compiled_el[i], slots) * jets_v[i][0][k];
        }
        numeric *= h / (2 * epsilon);
        symbolic *= h;

        long double scale = std::max({1.0L, std::fabs(numeric), std::fabs(symbolic)});
        worst = std::max(worst, static_cast<double>(std::fabs(numeric - symbolic) / scale));
    }
    return worst;
}

}  // namespace jetvar
