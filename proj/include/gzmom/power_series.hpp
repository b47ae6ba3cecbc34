#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gzmom/combinatorics.hpp"
#include "gzmom/rational.hpp"

namespace gzmom {

/// Truncated formal power series with exact rational coefficients.
/// All operations truncate at the series order.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : c_(order + 1) {}

    PowerSeries(std::size_t order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.size() != order + 1)
            throw std::invalid_argument("PowerSeries: coefficient count != order+1");
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rat& operator[](std::size_t i) const { return c_.at(i); }
    Rat& operator[](std::size_t i) { return c_.at(i); }
    const std::vector<Rat>& coeffs() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    PowerSeries& operator*=(const Rat& r) {
        for (auto& c : c_) c *= r;
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rat& r) { return a *= r; }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.c_ == b.c_;
    }

    /// Truncated Cauchy product.
    PowerSeries mul(const PowerSeries& o) const {
        require_same_order(o);
        PowerSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }

    /// Composition self(inner); inner must have zero constant term.
    PowerSeries compose(const PowerSeries& inner) const {
        require_same_order(inner);
        if (!inner.c_[0].is_zero())
            throw std::invalid_argument("PowerSeries::compose: inner constant term != 0");
        PowerSeries result(order());
        PowerSeries power(order());
        power.c_[0] = Rat(1);
        for (std::size_t p = 0; p < c_.size(); ++p) {
            if (!c_[p].is_zero()) result += power * c_[p];
            if (p + 1 < c_.size()) power = power.mul(inner);
        }
        return result;
    }

private:
    void require_same_order(const PowerSeries& o) const {
        if (o.c_.size() != c_.size())
            throw std::invalid_argument("PowerSeries: order mismatch");
    }

    std::vector<Rat> c_;
};

/// The series of 1 - e^{-t} truncated at `order`.
inline PowerSeries one_minus_exp_neg_series(std::size_t order) {
    PowerSeries g(order);
    for (std::size_t m = 1; m <= order; ++m) {
        Rat term = Rat(Int(1), factorial(m));
        g[m] = (m % 2 == 1) ? term : -term;
    }
    return g;
}

/// Expansion of t -> F_u(1 - e^{-t}) to the order of u, by exact formal
/// composition.
inline PowerSeries series_compose_one_minus_exp(const PowerSeries& u) {
    return u.compose(one_minus_exp_neg_series(u.order()));
}

}  // namespace gzmom
