#pragma once

#include "jetvar/variables.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace jetvar {

struct MonomialProduct;

/// A monomial: commuting factors with positive exponents, sorted and unique,
/// followed by a strictly increasing run of odd generators. The empty
/// monomial is 1. Reordering odd factors into canonical position is the
/// caller-visible source of Koszul signs.
class Monomial {
public:
    using EvenFactor = std::pair<EvenVariable, int>;

    Monomial() = default;
    Monomial(std::vector<EvenFactor> even, std::vector<OddGenerator> odd);

    static Monomial unit() { return Monomial(); }
    static Monomial of(const EvenVariable& v, int exponent = 1);
    static Monomial of(const OddGenerator& g);

    const std::vector<EvenFactor>& even() const { return even_; }
    const std::vector<OddGenerator>& odd() const { return odd_; }

    bool is_unit() const { return even_.empty() && odd_.empty(); }
    int odd_degree() const { return static_cast<int>(odd_.size()); }
    int total_degree() const;
    int exponent_of(const EvenVariable& v) const;
    bool contains(const OddGenerator& g) const;

    /// Product with Koszul sign from sorting the odd factors; the sign is 0
    /// when an odd generator repeats (the product vanishes).
    static MonomialProduct multiply(const Monomial& a, const Monomial& b);

    /// Degree-lexicographic: total degree first, then variables compared from
    /// the highest factor down (even block, then odd block).
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<EvenFactor> even_;
    std::vector<OddGenerator> odd_;
};

struct MonomialProduct {
    int sign;  // -1, 0, +1
    Monomial value;
};

}  // namespace jetvar
