#pragma once

#include "jetvar/bundle.hpp"
#include "jetvar/jet_expr.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetvar {

/// Syntax error carrying the 0-based offset into the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Names and guards for the expression grammar. Odd variables ('d' prefix)
/// are only admitted where forms are expected; max_order bounds the jet
/// order of any parsed variable.
struct ParseContext {
    BundleSignature signature;
    bool allow_odd = false;
    int max_order = 12;
};

/// Grammar:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ('^' natural)?
///   atom    := rational | identifier | '(' expr ')'
///   rational:= natural ('/' natural)?
/// An identifier is a field name optionally followed by '_' and derivative
/// letters (declared coordinates, or 't' on extended signatures; letters
/// commute), a coordinate name, 't', or 'd' + a jet variable spelling.
JetExpr parse(std::string_view src, const ParseContext& ctx);

/// Canonical rendering, highest monomial first; parse(print(e)) == e.
std::string print(const JetExpr& e, const BundleSignature& sig);

/// Derivative-letter spelling of a multi-index ("" for the empty one).
std::string print_multi_index(const MultiIndex& b, const BundleSignature& sig);

}  // namespace jetvar
