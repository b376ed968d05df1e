#include "jetvar/multi_index.hpp"

#include <algorithm>
#include <map>

namespace jetvar {

MultiIndex::MultiIndex(std::initializer_list<int> entries) : entries_(entries) {
    std::sort(entries_.begin(), entries_.end());
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

int MultiIndex::count(int a) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), a));
}

MultiIndex MultiIndex::with_added(int a) const {
    MultiIndex out(*this);
    out.entries_.insert(std::lower_bound(out.entries_.begin(), out.entries_.end(), a), a);
    return out;
}

MultiIndex MultiIndex::with_removed(int a) const {
    MultiIndex out(*this);
    auto it = std::find(out.entries_.begin(), out.entries_.end(), a);
    out.entries_.erase(it);
    return out;
}

MultiIndex MultiIndex::merged(const MultiIndex& other) const {
    std::vector<int> merged_entries;
    merged_entries.reserve(entries_.size() + other.entries_.size());
    std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
               std::back_inserter(merged_entries));
    MultiIndex out;
    out.entries_ = std::move(merged_entries);
    return out;
}

bool MultiIndex::contains(const MultiIndex& sub) const {
    return std::includes(entries_.begin(), entries_.end(), sub.entries_.begin(), sub.entries_.end());
}

MultiIndex MultiIndex::minus(const MultiIndex& sub) const {
    std::vector<int> diff;
    std::set_difference(entries_.begin(), entries_.end(), sub.entries_.begin(), sub.entries_.end(),
                        std::back_inserter(diff));
    MultiIndex out;
    out.entries_ = std::move(diff);
    return out;
}

std::vector<int> MultiIndex::distinct() const {
    std::vector<int> out(entries_);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
    if (auto c = entries_.size() <=> other.entries_.size(); c != 0) return c;
    return entries_ <=> other.entries_;
}

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<std::pair<MultiIndex, long long>> sub_multisets(const MultiIndex& b) {
    std::map<int, int> counts;
    for (int a : b.entries()) ++counts[a];

    std::vector<std::pair<MultiIndex, long long>> out;
    out.emplace_back(MultiIndex{}, 1);
    for (const auto& [coord, n] : counts) {
        std::vector<std::pair<MultiIndex, long long>> next;
        for (const auto& [prefix, mult] : out) {
            for (int k = 0; k <= n; ++k) {
                MultiIndex extended = prefix;
                for (int i = 0; i < k; ++i) extended = extended.with_added(coord);
                next.emplace_back(std::move(extended), mult * binomial(n, k));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace jetvar
