#include "jetvar/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace jetvar {

namespace {

bool alphabetic(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
}

}  // namespace

BundleSignature::BundleSignature(std::vector<std::string> coord_names,
                                 std::vector<std::string> field_names, bool extended)
    : coord_names_(std::move(coord_names)), field_names_(std::move(field_names)), extended_(extended) {
    if (coord_names_.empty()) throw std::invalid_argument("signature: need at least one coordinate");
    if (field_names_.empty()) throw std::invalid_argument("signature: need at least one field");

    std::set<std::string> seen;
    for (const auto& name : coord_names_) {
        if (name.size() != 1 || !alphabetic(name))
            throw std::invalid_argument("signature: coordinate names are single letters, got '" + name + "'");
        if (name == time_name || name[0] == odd_prefix)
            throw std::invalid_argument("signature: coordinate name '" + name + "' is reserved");
        if (!seen.insert(name).second)
            throw std::invalid_argument("signature: duplicate name '" + name + "'");
    }
    for (const auto& name : field_names_) {
        if (!alphabetic(name))
            throw std::invalid_argument("signature: field names are alphabetic, got '" + name + "'");
        if (name == time_name)
            throw std::invalid_argument("signature: field name 't' is reserved");
        if (name[0] == odd_prefix)
            throw std::invalid_argument("signature: field name '" + name + "' collides with the odd prefix");
        if (!seen.insert(name).second)
            throw std::invalid_argument("signature: duplicate name '" + name + "'");
    }
}

BundleSignature BundleSignature::extended_copy() const {
    return BundleSignature(coord_names_, field_names_, true);
}

int BundleSignature::find_coord(const std::string& name) const {
    auto it = std::find(coord_names_.begin(), coord_names_.end(), name);
    return it == coord_names_.end() ? -1 : static_cast<int>(it - coord_names_.begin());
}

int BundleSignature::find_field(const std::string& name) const {
    auto it = std::find(field_names_.begin(), field_names_.end(), name);
    return it == field_names_.end() ? -1 : static_cast<int>(it - field_names_.begin());
}

}  // namespace jetvar
