#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "lcframed/errors.hpp"
#include "lcframed/minkowski.hpp"

// Truncated bivariate Taylor data ("jets") in two variables (u, v).
//
// A Jet<N> stores the raw partial derivatives d^(i+j) f / du^i dv^j for all
// 0 <= i+j <= N -- raw, i.e. NOT divided by factorials.  Arithmetic follows
// the Leibniz rule, so every slot of a product/quotient/composition is the
// exact raw partial of the corresponding function, truncated at total
// order N.

namespace lcf {

namespace jet_detail {
// binomial(n, k) for 0 <= k <= n <= 8; enough for any order used here.
constexpr double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}
} // namespace jet_detail

template <int N> struct Jet {
    static_assert(N >= 0 && N <= 6, "unsupported jet order");
    static constexpr int order = N;
    static constexpr int slot_count = (N + 1) * (N + 2) / 2;

    // Slots grouped by total degree d = i+j, then by j ascending:
    //   (0,0) | (1,0),(0,1) | (2,0),(1,1),(0,2) | ...
    std::array<double, slot_count> slots{};

    static constexpr int index(int i, int j) {
        const int d = i + j;
        return d * (d + 1) / 2 + j;
    }

    constexpr double get(int i, int j) const { return slots[index(i, j)]; }
    constexpr void set(int i, int j, double x) { slots[index(i, j)] = x; }

    constexpr double value() const { return slots[0]; }
    constexpr double du_value() const { return N >= 1 ? slots[1] : 0.0; }
    constexpr double dv_value() const { return N >= 1 ? slots[2] : 0.0; }

    static constexpr Jet constant(double c) {
        Jet r;
        r.slots[0] = c;
        return r;
    }
    static constexpr Jet variable_u(double u0) {
        Jet r;
        r.slots[0] = u0;
        if constexpr (N >= 1) r.slots[1] = 1.0;
        return r;
    }
    static constexpr Jet variable_v(double v0) {
        Jet r;
        r.slots[0] = v0;
        if constexpr (N >= 1) r.slots[2] = 1.0;
        return r;
    }

    // Jet of df/du (one order lower).
    constexpr Jet<N - 1> du() const {
        Jet<N - 1> r;
        for (int d = 0; d <= N - 1; ++d)
            for (int j = 0; j <= d; ++j) r.set(d - j, j, get(d - j + 1, j));
        return r;
    }
    // Jet of df/dv (one order lower).
    constexpr Jet<N - 1> dv() const {
        Jet<N - 1> r;
        for (int d = 0; d <= N - 1; ++d)
            for (int j = 0; j <= d; ++j) r.set(d - j, j, get(d - j, j + 1));
        return r;
    }

    template <int M> constexpr Jet<M> truncate() const {
        static_assert(M <= N, "truncate() cannot raise the order");
        Jet<M> r;
        for (int d = 0; d <= M; ++d)
            for (int j = 0; j <= d; ++j) r.set(d - j, j, get(d - j, j));
        return r;
    }

    friend constexpr Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        for (int s = 0; s < slot_count; ++s) r.slots[s] = a.slots[s] + b.slots[s];
        return r;
    }
    friend constexpr Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        for (int s = 0; s < slot_count; ++s) r.slots[s] = a.slots[s] - b.slots[s];
        return r;
    }
    friend constexpr Jet operator-(const Jet& a) {
        Jet r;
        for (int s = 0; s < slot_count; ++s) r.slots[s] = -a.slots[s];
        return r;
    }
    friend constexpr Jet operator*(double s, const Jet& a) {
        Jet r;
        for (int k = 0; k < slot_count; ++k) r.slots[k] = s * a.slots[k];
        return r;
    }
    friend constexpr Jet operator*(const Jet& a, double s) { return s * a; }
    friend constexpr Jet operator+(const Jet& a, double c) { Jet r = a; r.slots[0] += c; return r; }
    friend constexpr Jet operator+(double c, const Jet& a) { return a + c; }
    friend constexpr Jet operator-(const Jet& a, double c) { return a + (-c); }
    friend constexpr Jet operator-(double c, const Jet& a) { return (-a) + c; }

    // Leibniz product, truncated at total order N.
    friend constexpr Jet operator*(const Jet& a, const Jet& b) {
        using jet_detail::binom;
        Jet r;
        for (int d = 0; d <= N; ++d)
            for (int j = 0; j <= d; ++j) {
                const int i = d - j;
                double acc = 0.0;
                for (int p = 0; p <= i; ++p)
                    for (int q = 0; q <= j; ++q)
                        acc += binom(i, p) * binom(j, q) * a.get(p, q) * b.get(i - p, j - q);
                r.set(i, j, acc);
            }
        return r;
    }
};

// Compose an analytic h with a jet g given h's derivatives at g's value:
// derivs[k] = h^(k)(g.value()), k = 0..N.  Horner evaluation in the
// increment delta = g - g(value), which is nilpotent at order N+1.
template <int N>
constexpr Jet<N> compose(const Jet<N>& g, const std::array<double, std::size_t(N) + 1>& derivs) {
    Jet<N> delta = g;
    delta.slots[0] = 0.0;
    double fact = 1.0;
    for (int k = 2; k <= N; ++k) fact *= double(k); // N!
    Jet<N> acc = Jet<N>::constant(derivs[std::size_t(N)] / fact);
    for (int k = N - 1; k >= 0; --k) {
        fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= double(i);
        acc = acc * delta + Jet<N>::constant(derivs[std::size_t(k)] / fact);
    }
    return acc;
}

// The value-level guard below is shared by double and jet division.
inline constexpr double kDivFloor = 1e-300;

template <int N> Jet<N> sin(const Jet<N>& g) {
    const double s = std::sin(g.value()), c = std::cos(g.value());
    std::array<double, std::size_t(N) + 1> d{};
    const double cycle[4] = {s, c, -s, -c};
    for (int k = 0; k <= N; ++k) d[std::size_t(k)] = cycle[k % 4];
    return compose(g, d);
}

template <int N> Jet<N> cos(const Jet<N>& g) {
    const double s = std::sin(g.value()), c = std::cos(g.value());
    std::array<double, std::size_t(N) + 1> d{};
    const double cycle[4] = {c, -s, -c, s};
    for (int k = 0; k <= N; ++k) d[std::size_t(k)] = cycle[k % 4];
    return compose(g, d);
}

template <int N> Jet<N> exp(const Jet<N>& g) {
    const double e = std::exp(g.value());
    std::array<double, std::size_t(N) + 1> d{};
    d.fill(e);
    return compose(g, d);
}

// Successive derivatives of tan are polynomials in t = tan(x):
//   tan' = 1+t^2, tan'' = 2t+2t^3, tan''' = 2+8t^2+6t^4,
//   tan'''' = 16t+40t^3+24t^5.
template <int N> Jet<N> tan(const Jet<N>& g) {
    static_assert(N <= 4, "tan derivatives tabulated to order 4");
    const double t = std::tan(g.value());
    const double t2 = t * t;
    std::array<double, std::size_t(N) + 1> d{};
    d[0] = t;
    if constexpr (N >= 1) d[1] = 1.0 + t2;
    if constexpr (N >= 2) d[2] = 2.0 * t * (1.0 + t2);
    if constexpr (N >= 3) d[3] = 2.0 + 8.0 * t2 + 6.0 * t2 * t2;
    if constexpr (N >= 4) d[4] = t * (16.0 + 40.0 * t2 + 24.0 * t2 * t2);
    return compose(g, d);
}

template <int N> Jet<N> log(const Jet<N>& g, std::size_t src_offset = 0) {
    const double x = g.value();
    if (!(x > 0.0)) throw DomainError(src_offset, "log of non-positive value");
    std::array<double, std::size_t(N) + 1> d{};
    d[0] = std::log(x);
    double p = 1.0 / x, sign = 1.0, fact = 1.0;
    for (int k = 1; k <= N; ++k) {
        d[std::size_t(k)] = sign * fact * p; // (-1)^(k-1) (k-1)! x^-k
        p /= x;
        sign = -sign;
        fact *= double(k);
    }
    return compose(g, d);
}

template <int N> Jet<N> sqrt(const Jet<N>& g, std::size_t src_offset = 0) {
    const double x = g.value();
    if (!(x > 0.0)) throw DomainError(src_offset, "sqrt of non-positive value");
    const double r = std::sqrt(x);
    std::array<double, std::size_t(N) + 1> d{};
    d[0] = r;
    double coef = 0.5, p = r / x; // x^(1/2 - k)
    for (int k = 1; k <= N; ++k) {
        d[std::size_t(k)] = coef * p;
        coef *= 0.5 - double(k);
        p /= x;
    }
    return compose(g, d);
}

template <int N> Jet<N> recip(const Jet<N>& g, std::size_t src_offset = 0) {
    const double x = g.value();
    if (std::fabs(x) < kDivFloor) throw DomainError(src_offset, "division by (near-)zero");
    std::array<double, std::size_t(N) + 1> d{};
    double p = 1.0 / x, sign = 1.0, fact = 1.0;
    d[0] = p;
    for (int k = 1; k <= N; ++k) {
        p /= x;
        sign = -sign;
        fact *= double(k);
        d[std::size_t(k)] = sign * fact * p; // (-1)^k k! x^-(k+1)
    }
    return compose(g, d);
}

template <int N> Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) { return a * recip(b); }

// Integer power by repeated squaring; negative exponents go through recip.
template <int N> Jet<N> ipow(const Jet<N>& g, long long e, std::size_t src_offset = 0) {
    if (e < 0) return recip(ipow(g, -e, src_offset), src_offset);
    Jet<N> acc = Jet<N>::constant(1.0);
    Jet<N> base = g;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// The public carrier: bivariate, total order 3, 10 slots.
using Jet2 = Jet<3>;

// --- jet-valued Minkowski 3-vectors -----------------------------------------

template <int N> struct JVec3 {
    Jet<N> x1, x2, x3;

    MVec3 values() const { return {x1.value(), x2.value(), x3.value()}; }

    friend JVec3 operator+(const JVec3& a, const JVec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
    friend JVec3 operator-(const JVec3& a, const JVec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
    friend JVec3 operator*(double s, const JVec3& a) { return {s * a.x1, s * a.x2, s * a.x3}; }
    friend JVec3 operator*(const Jet<N>& s, const JVec3& a) { return {s * a.x1, s * a.x2, s * a.x3}; }

    JVec3<N - 1> du() const { return {x1.du(), x2.du(), x3.du()}; }
    JVec3<N - 1> dv() const { return {x1.dv(), x2.dv(), x3.dv()}; }
    template <int M> JVec3<M> truncate() const {
        return {x1.template truncate<M>(), x2.template truncate<M>(), x3.template truncate<M>()};
    }
};

template <int N> Jet<N> pseudo_inner(const JVec3<N>& a, const JVec3<N>& b) {
    return -(a.x1 * b.x1) + a.x2 * b.x2 + a.x3 * b.x3;
}

template <int N> JVec3<N> wedge(const JVec3<N>& a, const JVec3<N>& b) {
    return {-(a.x2 * b.x3 - a.x3 * b.x2),
            -(a.x1 * b.x3 - a.x3 * b.x1),
            a.x1 * b.x2 - a.x2 * b.x1};
}

} // namespace lcf
