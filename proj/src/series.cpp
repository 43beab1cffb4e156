#include "ncores/series.hpp"

#include <stdexcept>
#include <string>

namespace ncores {

namespace {

void require_equal_orders(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient vector");
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::monomial(const bigint& c, std::size_t k, std::size_t order) {
    PowerSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

bool PowerSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
    require_equal_orders(*this, rhs, "add");
    PowerSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
    require_equal_orders(*this, rhs, "sub");
    PowerSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
    require_equal_orders(*this, rhs, "mul");
    PowerSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

PowerSeries PowerSeries::hadamard(const PowerSeries& rhs) const {
    require_equal_orders(*this, rhs, "hadamard");
    PowerSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * rhs.coeffs_[i];
    return out;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries out(order() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.coeffs_[i - 1] = coeffs_[i] * i;
    return out;
}

PowerSeries PowerSeries::reciprocal() const {
    const bigint& a0 = coeffs_[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("reciprocal: constant term must be a unit (1 or -1)");
    PowerSeries out(order());
    out.coeffs_[0] = a0;  // 1/a0 == a0 for units
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        bigint acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -a0 * acc;
    }
    return out;
}

PowerSeries PowerSeries::truncate(std::size_t new_order) const {
    if (new_order > order())
        throw std::invalid_argument("truncate: new order " + std::to_string(new_order) +
                                    " exceeds current order " + std::to_string(order()));
    PowerSeries out(new_order);
    for (std::size_t i = 0; i <= new_order; ++i) out.coeffs_[i] = coeffs_[i];
    return out;
}

void to_json(nlohmann::json& j, const PowerSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, PowerSeries& s) {
    std::vector<bigint> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else
            coeffs.emplace_back(c.get<long long>());
    }
    PowerSeries out(std::move(coeffs));
    if (j.contains("order") && j["order"].get<std::size_t>() != out.order())
        throw std::invalid_argument("PowerSeries JSON: order field disagrees with coeffs length");
    s = std::move(out);
}

}  // namespace ncores
