#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "paut/poly.hpp"

namespace paut {

std::vector<std::string> default_var_names(int nvars);

// Canonical text: descending graded-lex order, explicit '*' and '^', rationals as a/b.
std::string format_poly(const ScalarPoly& p, const std::vector<std::string>& names = {});
// Laurent coefficients are expanded into t-powers, e.g. "t^-1*x1 + x2".
std::string format_poly(const LaurentPoly& p, const std::vector<std::string>& names = {});

// Parses one polynomial in the variables listed in `vars` (name -> index) plus t.
// Throws ParseError with the offending position.
LaurentPoly parse_polynomial(std::string_view src, Field f, int nvars, const std::map<std::string, int>& vars);
LaurentPoly parse_polynomial(std::string_view src, Field f, int nvars);
// "(e1, ..., en)" over x1..xn; the tuple length fixes n.
std::vector<LaurentPoly> parse_tuple(std::string_view src, Field f);

bool involves_t(const LaurentPoly& p);
// Throws DomainError if p involves t.
ScalarPoly drop_t(const LaurentPoly& p);
LaurentPoly lift_t(const ScalarPoly& p);

}  // namespace paut
