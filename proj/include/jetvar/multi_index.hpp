#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace jetvar {

/// A sorted multiset of base-coordinate indices. Encodes a symmetric
/// derivative multi-index: u_{xy} and u_{yx} are the same variable.
/// The empty multi-index denotes the undifferentiated field.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> entries);
    explicit MultiIndex(std::vector<int> entries);

    int order() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    const std::vector<int>& entries() const { return entries_; }

    /// Multiplicity of coordinate a in this multi-index.
    int count(int a) const;

    /// A copy with one more derivative in direction a.
    MultiIndex with_added(int a) const;

    /// A copy with one occurrence of a removed; a must be present.
    MultiIndex with_removed(int a) const;

    /// Multiset union.
    MultiIndex merged(const MultiIndex& other) const;

    /// True if every multiplicity of `sub` is <= the one here.
    bool contains(const MultiIndex& sub) const;

    /// Multiset difference this \ sub (requires contains(sub)).
    MultiIndex minus(const MultiIndex& sub) const;

    /// Distinct coordinate values occurring.
    std::vector<int> distinct() const;

    // Ordered by (order, lexicographic on sorted entries).
    std::strong_ordering operator<=>(const MultiIndex& other) const;
    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<int> entries_;  // sorted ascending
};

/// All sub-multisets of B, each with its multinomial multiplicity
/// prod_a C(B.count(a), S.count(a)). Used for Leibniz expansion of D_B.
std::vector<std::pair<MultiIndex, long long>> sub_multisets(const MultiIndex& b);

}  // namespace jetvar
