#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncores {

/// Exact arbitrary-precision integer used for all counts and coefficients.
using bigint = boost::multiprecision::cpp_int;

/// binomial(n, k) computed exactly; 0 when k < 0 or k > n.
bigint binomial(long long n, long long k);

/// Quotient a/b, throwing std::logic_error if b does not divide a exactly.
bigint exact_div(const bigint& a, const bigint& b);

}  // namespace ncores
