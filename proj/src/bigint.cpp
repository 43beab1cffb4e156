#include "ncores/bigint.hpp"

#include <stdexcept>

namespace ncores {

bigint binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint result = 1;
    // (n-k+i)/i divides exactly at every step.
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

bigint exact_div(const bigint& a, const bigint& b) {
    if (b == 0) throw std::logic_error("exact_div: division by zero");
    bigint q = a / b;
    if (q * b != a) throw std::logic_error("exact_div: remainder is nonzero");
    return q;
}

}  // namespace ncores
