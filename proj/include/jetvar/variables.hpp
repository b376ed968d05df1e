#pragma once

#include "jetvar/multi_index.hpp"

#include <compare>

namespace jetvar {

/// A jet coordinate u^i_A with time_order extra t-derivatives ("dots").
/// time_order > 0 only makes sense on the extended bundle over M x R.
struct JetVariable {
    int field = 0;
    MultiIndex spatial;
    int time_order = 0;

    int total_order() const { return spatial.order() + time_order; }

    std::strong_ordering operator<=>(const JetVariable& other) const {
        if (auto c = field <=> other.field; c != 0) return c;
        if (auto c = total_order() <=> other.total_order(); c != 0) return c;
        if (auto c = spatial <=> other.spatial; c != 0) return c;
        return time_order <=> other.time_order;
    }
    bool operator==(const JetVariable&) const = default;
};

/// An anticommuting variation generator du^i_A. Squares to zero; within a
/// monomial these are kept in a fixed sorted order with a Koszul sign.
struct OddGenerator {
    JetVariable var;

    std::strong_ordering operator<=>(const OddGenerator&) const = default;
    bool operator==(const OddGenerator&) const = default;
};

/// Any commuting symbol a JetExpr monomial may contain: a base coordinate
/// x^a, the extension coordinate t, the homotopy parameter tau, or a jet
/// variable.
class EvenVariable {
public:
    enum class Kind { coordinate, time, parameter, jet };

    static EvenVariable coordinate(int index) { return EvenVariable(Kind::coordinate, index, {}); }
    static EvenVariable time() { return EvenVariable(Kind::time, 0, {}); }
    static EvenVariable parameter() { return EvenVariable(Kind::parameter, 0, {}); }
    static EvenVariable jet(JetVariable v) { return EvenVariable(Kind::jet, 0, std::move(v)); }
    static EvenVariable jet(int field, MultiIndex spatial, int time_order = 0) {
        return jet(JetVariable{field, std::move(spatial), time_order});
    }

    Kind kind() const { return kind_; }
    bool is_jet() const { return kind_ == Kind::jet; }
    int coord_index() const { return coord_; }
    const JetVariable& jet_var() const { return jet_; }

    std::strong_ordering operator<=>(const EvenVariable& other) const {
        if (auto c = kind_ <=> other.kind_; c != 0) return c;
        if (auto c = coord_ <=> other.coord_; c != 0) return c;
        return jet_ <=> other.jet_;
    }
    bool operator==(const EvenVariable&) const = default;

private:
    EvenVariable(Kind kind, int coord, JetVariable jet)
        : kind_(kind), coord_(coord), jet_(std::move(jet)) {}

    Kind kind_;
    int coord_;
    JetVariable jet_;
};

}  // namespace jetvar
