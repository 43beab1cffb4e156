#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "ncores/bigint.hpp"

namespace ncores {

/// Truncated formal power series with exact integer coefficients.
///
/// A series of order N retains coefficients of q^0 .. q^N. Binary operations
/// require equal orders; nothing ever rounds. Values are immutable in spirit:
/// every operation returns a fresh series.
class PowerSeries {
public:
    /// The order-0 zero series.
    PowerSeries() : coeffs_(1, 0) {}

    /// The zero series of the given order.
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, 0) {}

    /// Takes ownership of coefficients c0..cN; order is inferred as N.
    /// Throws std::invalid_argument on an empty vector.
    explicit PowerSeries(std::vector<bigint> coeffs);

    static PowerSeries one(std::size_t order);
    /// c * q^k truncated to the given order (zero series if k > order).
    static PowerSeries monomial(const bigint& c, std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const bigint& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<bigint>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    PowerSeries operator+(const PowerSeries& rhs) const;
    PowerSeries operator-(const PowerSeries& rhs) const;
    /// Cauchy product truncated to the common order.
    PowerSeries operator*(const PowerSeries& rhs) const;

    /// Coefficientwise product.
    PowerSeries hadamard(const PowerSeries& rhs) const;

    /// Formal d/dq. The order drops by one (an order-0 input yields the
    /// order-0 zero series); callers wanting order N pad inputs to N+1.
    PowerSeries derivative() const;

    /// Multiplicative inverse to the retained order. The constant term must
    /// be 1 or -1; anything else throws std::domain_error.
    PowerSeries reciprocal() const;

    /// Drops coefficients above new_order. Throws if new_order > order().
    PowerSeries truncate(std::size_t new_order) const;

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<bigint> coeffs_;
};

/// JSON form: {"order":N,"coeffs":["1","-2",...]} with decimal strings so no
/// integer width is ever lost. Plain JSON numbers are accepted on input.
void to_json(nlohmann::json& j, const PowerSeries& s);
void from_json(const nlohmann::json& j, PowerSeries& s);

}  // namespace ncores
