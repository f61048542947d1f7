#pragma once

#include "hypercox/algnum.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hypercox {

/// Parses expressions of the grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := INT | INT '/' INT | '(' expr ')' | 'sqrt' '(' expr ')' | '-' factor
///
/// Every value produced by one parser lives in a single growing tower, so the
/// entries of a matrix parsed with a shared parser are directly comparable.
class ExprParser {
public:
    ExprParser();
    explicit ExprParser(TowerPtr context);

    AlgNum parse(std::string_view text);
    const TowerPtr& context() const noexcept { return ctx_; }

private:
    struct Cursor;
    AlgNum expr(Cursor& c);
    AlgNum term(Cursor& c);
    AlgNum factor(Cursor& c);
    AlgNum settle(const AlgNum& x);

    TowerPtr ctx_;
};

/// One-off parse in a fresh context.
AlgNum parse_algebraic(std::string_view text);

/// Canonical expression: reduced rational coefficients written
/// "p/q*monomial", radicals "sqrt(<radicand>)" with the factors of each
/// monomial and then the terms in radicand order. The output parses back to
/// the same value and does not depend on the order the tower was built in.
std::string to_expression(const AlgNum& x);

/// Order on radicand expressions: shorter first, then lexicographic.
bool radicand_less(const std::string& a, const std::string& b);

/// Expression for sign * sqrt(square), written without a new radical when the
/// square root already lies in the tower of square.
std::string signed_sqrt_expression(int sign, const AlgNum& square);

/// Radicands of the tower, lowest level first, as expressions.
std::vector<std::string> tower_radicands(const TowerPtr& tower);
/// Rebuild a tower from its radicand expressions.
TowerPtr tower_from_radicands(const std::vector<std::string>& radicands);

}  // namespace hypercox
