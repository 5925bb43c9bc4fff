#ifndef SEMREG_PARSER_HPP
#define SEMREG_PARSER_HPP

#include <string>

#include "semreg/slice_fn.hpp"

namespace semreg {

/// Parses an expression over rational literals, x, J, i, j, k with operators
/// + - * / ^ and parentheses. '*' is the noncommutative product; '/' divides
/// by the *-inverse and rejects zero divisors. Errors carry the column.
SliceFn parse_slice_fn(const std::string& text, DomainMode mode);

std::string to_string(const QPoly& p);
std::string to_string(const RatFun& r);
std::string to_string(const ScalarElem& s);
std::string to_string(const SliceFn& f);

}  // namespace semreg

#endif
