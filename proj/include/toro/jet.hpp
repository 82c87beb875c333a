#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>

#include "toro/errors.hpp"

namespace toro {

/// Truncated Taylor jet of a scalar function of one real variable.
///
/// Coefficients follow the derivative-value convention: coeff(k) is the
/// k-th derivative d^k g / dt^k itself, not the Taylor coefficient
/// d^k g / dt^k / k!.  All of the curve formulas in this library are
/// written in raw derivatives, so this convention avoids factorial
/// conversions everywhere.
///
/// Supported orders are 0..4.  Arithmetic between two jets requires
/// equal orders; mixing orders is a programming error and throws.
class Jet {
public:
    static constexpr int max_order = 4;

    Jet() = default;

    /// Jet of the constant function c: [c, 0, ..., 0].
    static Jet constant(double c, int order) {
        Jet j(order);
        j.c_[0] = c;
        return j;
    }

    /// Jet of the identity function at t0: [t0, 1, 0, ..., 0].
    static Jet variable(double t0, int order) {
        Jet j(order);
        j.c_[0] = t0;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    static Jet from_coeffs(std::initializer_list<double> coeffs) {
        if (coeffs.size() < 1 || coeffs.size() > max_order + 1)
            throw InvalidArgument("jet coefficient count out of range");
        Jet j(static_cast<int>(coeffs.size()) - 1);
        int k = 0;
        for (double c : coeffs) j.c_[k++] = c;
        return j;
    }

    int order() const noexcept { return order_; }

    /// k-th derivative value, k in [0, order].
    double operator[](int k) const {
        check_index(k);
        return c_[k];
    }

    double& operator[](int k) {
        check_index(k);
        return c_[k];
    }

    double value() const noexcept { return c_[0]; }

    /// Jet of the derivative function: coefficients shift down one slot.
    Jet derivative() const {
        if (order_ == 0) throw InvalidArgument("cannot differentiate an order-0 jet");
        Jet j(order_ - 1);
        for (int k = 0; k <= j.order_; ++k) j.c_[k] = c_[k + 1];
        return j;
    }

    /// Same function, truncated to a lower order.
    Jet truncated(int order) const {
        if (order < 0 || order > order_)
            throw InvalidArgument("truncation order out of range");
        Jet j(order);
        for (int k = 0; k <= order && k <= max_order; ++k) j.c_[k] = c_[k];
        return j;
    }

    Jet operator-() const {
        Jet j(order_);
        for (int k = 0; k <= order_; ++k) j.c_[k] = -c_[k];
        return j;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        int n = matched_order(a, b);
        Jet j(n);
        for (int k = 0; k <= n; ++k) j.c_[k] = a.c_[k] + b.c_[k];
        return j;
    }

    friend Jet operator-(const Jet& a, const Jet& b) {
        int n = matched_order(a, b);
        Jet j(n);
        for (int k = 0; k <= n; ++k) j.c_[k] = a.c_[k] - b.c_[k];
        return j;
    }

    /// General Leibniz rule: (fg)^(k) = sum C(k,i) f^(i) g^(k-i).
    friend Jet operator*(const Jet& a, const Jet& b) {
        int n = matched_order(a, b);
        Jet j(n);
        for (int k = 0; k <= n; ++k) {
            double s = 0.0;
            for (int i = 0; i <= k; ++i) s += binomial(k, i) * a.c_[i] * b.c_[k - i];
            j.c_[k] = s;
        }
        return j;
    }

    /// Quotient rule, solved recursively from h*b = a.
    friend Jet operator/(const Jet& a, const Jet& b) {
        int n = matched_order(a, b);
        if (b.c_[0] == 0.0)
            throw JetDomainError("jet division by a jet with zero value part");
        Jet j(n);
        for (int k = 0; k <= n; ++k) {
            double s = a.c_[k];
            for (int i = 0; i < k; ++i) s -= binomial(k, i) * j.c_[i] * b.c_[k - i];
            j.c_[k] = s / b.c_[0];
        }
        return j;
    }

    friend Jet operator+(const Jet& a, double s) { return a + constant(s, a.order_); }
    friend Jet operator+(double s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, double s) { return a - constant(s, a.order_); }
    friend Jet operator-(double s, const Jet& a) { return constant(s, a.order_) - a; }

    friend Jet operator*(const Jet& a, double s) {
        Jet j(a.order_);
        for (int k = 0; k <= a.order_; ++k) j.c_[k] = a.c_[k] * s;
        return j;
    }
    friend Jet operator*(double s, const Jet& a) { return a * s; }
    friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
    friend Jet operator/(double s, const Jet& a) { return constant(s, a.order_) / a; }

    friend Jet sin(const Jet& a) { return a.compose_cyclic(std::sin(a.c_[0]), std::cos(a.c_[0])); }

    friend Jet cos(const Jet& a) { return a.compose_cyclic(std::cos(a.c_[0]), -std::sin(a.c_[0])); }

    friend Jet sqrt(const Jet& a) {
        if (!(a.c_[0] > 0.0))
            throw JetDomainError("jet sqrt of a non-positive value part");
        // outer derivatives of u^(1/2) at u = value part
        std::array<double, max_order + 1> d{};
        double u = a.c_[0];
        double factor = 1.0;  // falling product (1/2)(1/2-1)...(1/2-k+1)
        for (int k = 0; k <= a.order_; ++k) {
            d[k] = factor * std::pow(u, 0.5 - k);
            factor *= 0.5 - k;
        }
        return a.compose(d);
    }

    /// a^p for constant exponent p.  Requires a positive value part; use
    /// repeated multiplication for integer powers of arbitrary sign.
    friend Jet pow(const Jet& a, double p) {
        if (!(a.c_[0] > 0.0))
            throw JetDomainError("jet pow of a non-positive value part");
        std::array<double, max_order + 1> d{};
        double u = a.c_[0];
        double factor = 1.0;
        for (int k = 0; k <= a.order_; ++k) {
            d[k] = factor * std::pow(u, p - k);
            factor *= p - k;
        }
        return a.compose(d);
    }

    friend std::ostream& operator<<(std::ostream& out, const Jet& j) {
        out << "[";
        for (int k = 0; k <= j.order_; ++k) out << (k ? ", " : "") << j.c_[k];
        return out << "]";
    }

private:
    explicit Jet(int order) : order_(checked_order(order)) {}

    static int checked_order(int order) {
        if (order < 0 || order > max_order)
            throw InvalidArgument("jet order out of supported range 0..4");
        return order;
    }

    static int matched_order(const Jet& a, const Jet& b) {
        if (a.order_ != b.order_)
            throw InvalidArgument("jet arithmetic requires equal orders");
        return a.order_;
    }

    void check_index(int k) const {
        if (k < 0 || k > order_)
            throw InvalidArgument("jet coefficient index out of range");
    }

    static double binomial(int n, int k) {
        static constexpr double table[5][5] = {
            {1, 0, 0, 0, 0},
            {1, 1, 0, 0, 0},
            {1, 2, 1, 0, 0},
            {1, 3, 3, 1, 0},
            {1, 4, 6, 4, 1},
        };
        return table[n][k];
    }

    /// Composition h = phi(g) by Faa di Bruno given the outer derivatives
    /// d[k] = phi^(k) at the value part; hardcoded Bell polynomials cover
    /// the supported orders.
    Jet compose(const std::array<double, max_order + 1>& d) const {
        Jet h(order_);
        const double g1 = order_ >= 1 ? c_[1] : 0.0;
        const double g2 = order_ >= 2 ? c_[2] : 0.0;
        const double g3 = order_ >= 3 ? c_[3] : 0.0;
        const double g4 = order_ >= 4 ? c_[4] : 0.0;
        h.c_[0] = d[0];
        if (order_ >= 1) h.c_[1] = d[1] * g1;
        if (order_ >= 2) h.c_[2] = d[1] * g2 + d[2] * g1 * g1;
        if (order_ >= 3) h.c_[3] = d[1] * g3 + 3.0 * d[2] * g1 * g2 + d[3] * g1 * g1 * g1;
        if (order_ >= 4)
            h.c_[4] = d[1] * g4 + d[2] * (4.0 * g1 * g3 + 3.0 * g2 * g2) +
                      6.0 * d[3] * g1 * g1 * g2 + d[4] * g1 * g1 * g1 * g1;
        return h;
    }

    /// sin/cos share the cyclic derivative pattern (v0, v1, -v0, -v1, v0).
    Jet compose_cyclic(double v0, double v1) const {
        std::array<double, max_order + 1> d{};
        const double cycle[4] = {v0, v1, -v0, -v1};
        for (int k = 0; k <= order_; ++k) d[k] = cycle[k % 4];
        return compose(d);
    }

    int order_ = 0;
    std::array<double, max_order + 1> c_{};
};

/// Planar vector-valued jet: the x and y component jets share one order.
struct Jet2 {
    Jet x;
    Jet y;

    Jet2() = default;
    Jet2(Jet x_, Jet y_) : x(std::move(x_)), y(std::move(y_)) {
        if (x.order() != y.order())
            throw InvalidArgument("Jet2 components must share one order");
    }

    int order() const { return x.order(); }

    Jet2 derivative() const { return {x.derivative(), y.derivative()}; }
    Jet2 truncated(int order) const { return {x.truncated(order), y.truncated(order)}; }
};

/// Spatial vector-valued jet for the lifted curve (x, y, z components).
struct Jet3 {
    Jet x;
    Jet y;
    Jet z;

    Jet3() = default;
    Jet3(Jet x_, Jet y_, Jet z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
        if (x.order() != y.order() || x.order() != z.order())
            throw InvalidArgument("Jet3 components must share one order");
    }

    int order() const { return x.order(); }
};

/// Central-difference estimates of derivatives 0..order, the independent
/// oracle used to verify the analytic jets.  Standard minimal stencils:
/// 2-point for the first derivative, 3-point for the second, 5-point for
/// the third and fourth.
inline Jet fd_jet(const std::function<double(double)>& f, double t, int order, double h) {
    if (order < 0 || order > Jet::max_order)
        throw InvalidArgument("fd_jet order out of supported range 0..4");
    if (!(h > 0.0)) throw InvalidArgument("fd_jet requires a positive step");

    const double f0 = f(t);
    Jet j = Jet::constant(f0, order);
    if (order >= 1) {
        const double fp = f(t + h);
        const double fm = f(t - h);
        if (order >= 1) j[1] = (fp - fm) / (2.0 * h);
        if (order >= 2) j[2] = (fp - 2.0 * f0 + fm) / (h * h);
        if (order >= 3) {
            const double fp2 = f(t + 2.0 * h);
            const double fm2 = f(t - 2.0 * h);
            j[3] = (fp2 - 2.0 * fp + 2.0 * fm - fm2) / (2.0 * h * h * h);
            if (order >= 4) j[4] = (fp2 - 4.0 * fp + 6.0 * f0 - 4.0 * fm + fm2) / (h * h * h * h);
        }
    }
    return j;
}

} // namespace toro
