#include "jetvar/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jetvar {

Monomial::Monomial(std::vector<EvenFactor> even, std::vector<OddGenerator> odd)
    : odd_(std::move(odd)) {
    std::map<EvenVariable, int> collected;
    for (const auto& [v, e] : even) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (e > 0) collected[v] += e;
    }
    even_.assign(collected.begin(), collected.end());
    if (!std::is_sorted(odd_.begin(), odd_.end(), std::less_equal<OddGenerator>()))
        throw std::invalid_argument("Monomial: odd factors must be strictly increasing");
}

Monomial Monomial::of(const EvenVariable& v, int exponent) {
    return Monomial({{v, exponent}}, {});
}

Monomial Monomial::of(const OddGenerator& g) { return Monomial({}, {g}); }

int Monomial::total_degree() const {
    int deg = odd_degree();
    for (const auto& [v, e] : even_) deg += e;
    return deg;
}

int Monomial::exponent_of(const EvenVariable& v) const {
    for (const auto& [w, e] : even_)
        if (w == v) return e;
    return 0;
}

bool Monomial::contains(const OddGenerator& g) const {
    return std::binary_search(odd_.begin(), odd_.end(), g);
}

MonomialProduct Monomial::multiply(const Monomial& a, const Monomial& b) {
    Monomial out;

    auto ia = a.even_.begin(), ib = b.even_.begin();
    while (ia != a.even_.end() || ib != b.even_.end()) {
        if (ib == b.even_.end() || (ia != a.even_.end() && ia->first < ib->first)) {
            out.even_.push_back(*ia++);
        } else if (ia == a.even_.end() || ib->first < ia->first) {
            out.even_.push_back(*ib++);
        } else {
            out.even_.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }

    // Merge odd factors; each b-factor passing over a remaining a-factor
    // flips the sign, a repeat kills the product.
    long long inversions = 0;
    auto ja = a.odd_.begin(), jb = b.odd_.begin();
    while (ja != a.odd_.end() || jb != b.odd_.end()) {
        if (jb == b.odd_.end()) {
            out.odd_.push_back(*ja++);
        } else if (ja == a.odd_.end()) {
            out.odd_.push_back(*jb++);
        } else if (*ja < *jb) {
            out.odd_.push_back(*ja++);
        } else if (*jb < *ja) {
            inversions += a.odd_.end() - ja;
            out.odd_.push_back(*jb++);
        } else {
            return {0, Monomial()};
        }
    }
    return {inversions % 2 == 0 ? 1 : -1, std::move(out)};
}

namespace {

// Lexicographic from the highest factor down; with equal prefixes the
// monomial with factors left over is the larger one.
template <typename It, typename Cmp>
std::strong_ordering reverse_lex(It abeg, It aend, It bbeg, It bend, Cmp cmp) {
    auto ra = std::make_reverse_iterator(aend), rae = std::make_reverse_iterator(abeg);
    auto rb = std::make_reverse_iterator(bend), rbe = std::make_reverse_iterator(bbeg);
    for (; ra != rae && rb != rbe; ++ra, ++rb) {
        if (auto c = cmp(*ra, *rb); c != 0) return c;
    }
    if (ra != rae) return std::strong_ordering::greater;
    if (rb != rbe) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
    auto c = reverse_lex(even_.begin(), even_.end(), other.even_.begin(), other.even_.end(),
                         [](const EvenFactor& a, const EvenFactor& b) {
                             if (auto cv = a.first <=> b.first; cv != 0) return cv;
                             return a.second <=> b.second;
                         });
    if (c != 0) return c;
    return reverse_lex(odd_.begin(), odd_.end(), other.odd_.begin(), other.odd_.end(),
                       [](const OddGenerator& a, const OddGenerator& b) { return a <=> b; });
}

}  // namespace jetvar
