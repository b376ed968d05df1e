#pragma once

#include <string>
#include <vector>

namespace jetvar {

/// Fixes the bundle E -> M (and its extension over M x R): how many base
/// coordinates and fiber fields there are and what they are called.
///
/// Naming rules, shared with the expression grammar: coordinate names are
/// single letters; "t" is reserved for the extension coordinate and "d" is
/// the odd-variable prefix, so neither may be used and no field name may
/// begin with 'd'. All names are distinct alphabetic identifiers.
class BundleSignature {
public:
    BundleSignature(std::vector<std::string> coord_names, std::vector<std::string> field_names,
                    bool extended = false);

    int coord_count() const { return static_cast<int>(coord_names_.size()); }
    int field_count() const { return static_cast<int>(field_names_.size()); }
    const std::vector<std::string>& coord_names() const { return coord_names_; }
    const std::vector<std::string>& field_names() const { return field_names_; }
    const std::string& coord_name(int a) const { return coord_names_.at(a); }
    const std::string& field_name(int i) const { return field_names_.at(i); }
    bool extended() const { return extended_; }

    static constexpr const char* time_name = "t";
    static constexpr char odd_prefix = 'd';

    /// Same bundle, induced over M x R.
    BundleSignature extended_copy() const;

    /// Index of a coordinate/field name, or -1.
    int find_coord(const std::string& name) const;
    int find_field(const std::string& name) const;

private:
    std::vector<std::string> coord_names_;
    std::vector<std::string> field_names_;
    bool extended_;
};

}  // namespace jetvar
