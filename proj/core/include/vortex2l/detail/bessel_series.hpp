// Copyright (c) 2026 the vortex2l developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VORTEX2L_DETAIL_BESSEL_SERIES_HPP
#define VORTEX2L_DETAIL_BESSEL_SERIES_HPP

#include <cmath>
#include <limits>

// Templated evaluation kernels for the modified Bessel functions K0/K1 and
// the derived interaction kernels.  Everything here is precision-generic so
// the test suite can instantiate a long-double route for finite-difference
// oracles; the public double API wraps these.
//
// Scheme: ascending series (with logarithmic term) for x <= 2, Steed's
// continued fraction (Thompson-Barnett) for x > 2.  Both branches hold
// relative error near machine epsilon over [1e-6, 50]; the divergent
// large-argument asymptotic expansion is avoided because its optimal
// truncation error ~e^{-2x} cannot reach 1e-10 until x ~ 14.

namespace vortex2l::detail {

template <class T>
inline constexpr T euler_gamma_v = T(0.577215664901532860606512090082L);

template <class T>
struct K01 {
    T k0;
    T k1;
};

// Ascending series, valid (and accurate) for 0 < x <= 2.
//   K0(x) = -(ln(x/2)+g) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
//   K1(x) = 1/x + ln(x/2) I1(x)
//           - (x/4) sum_{k>=0} (H_k + H_{k+1} - 2g) (x^2/4)^k / (k!(k+1)!)
template <class T>
K01<T> k01_series(T x) {
    const T eps = std::numeric_limits<T>::epsilon();
    const T q = T(0.25) * x * x;
    const T lh = std::log(T(0.5) * x);
    const T g = euler_gamma_v<T>;

    T term = T(1);
    T i0 = T(1);
    T s0 = T(0);
    T hk = T(0);
    for (int k = 1; k <= 200; ++k) {
        term *= q / (T(k) * T(k));
        hk += T(1) / T(k);
        i0 += term;
        s0 += term * hk;
        if (term * (hk + T(1)) < eps * (std::abs(s0) + i0)) break;
    }
    const T k0 = -(lh + g) * i0 + s0;

    term = T(1);  // q^k / (k!(k+1)!) at k=0
    T i1s = T(1);
    hk = T(0);
    T hk1 = T(1);
    T s1 = hk1 - T(2) * g;
    for (int k = 1; k <= 200; ++k) {
        term *= q / (T(k) * T(k + 1));
        hk += T(1) / T(k);
        hk1 += T(1) / T(k + 1);
        i1s += term;
        s1 += term * (hk + hk1 - T(2) * g);
        if (term * (hk + hk1 + T(1)) < eps * (std::abs(s1) + i1s)) break;
    }
    const T i1 = T(0.5) * x * i1s;
    const T k1 = T(1) / x + lh * i1 - T(0.25) * x * s1;
    return {k0, k1};
}

// Steed's continued fraction CF2 for K0, K1; converges for x >= 2.
template <class T>
K01<T> k01_cf2(T x) {
    const T eps = std::numeric_limits<T>::epsilon();
    const T a1 = T(0.25);  // 1/4 - nu^2 with nu = 0
    T b = T(2) * (T(1) + x);
    T d = T(1) / b;
    T h = d;
    T delh = d;
    T q1 = T(0);
    T q2 = T(1);
    T q = a1;
    T c = a1;
    T a = -a1;
    T s = T(1) + q * delh;
    for (int i = 2; i <= 1000; ++i) {
        a -= T(2 * (i - 1));
        c = -a * c / T(i);
        const T qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += T(2);
        d = T(1) / (b + a * d);
        delh = (b * d - T(1)) * delh;
        h += delh;
        const T dels = q * delh;
        s += dels;
        if (std::abs(dels / s) <= eps) break;
    }
    h = a1 * h;
    const T pi = T(3.141592653589793238462643383280L);
    const T k0 = std::sqrt(pi / (T(2) * x)) * std::exp(-x) / s;
    const T k1 = k0 * (x + T(0.5) - h) / x;
    return {k0, k1};
}

template <class T>
K01<T> k01(T x) {
    return x <= T(2) ? k01_series(x) : k01_cf2(x);
}

// 1/r - K1(r) without cancellation, for 0 < r < ~0.5:
//   h_cross(r) = -ln(r/2) I1(r) + (r/4) sum_k (H_k + H_{k+1} - 2g) q^k/(k!(k+1)!)
template <class T>
T h_cross_series(T r) {
    const T eps = std::numeric_limits<T>::epsilon();
    const T q = T(0.25) * r * r;
    const T lh = std::log(T(0.5) * r);
    const T g = euler_gamma_v<T>;
    T term = T(1);
    T i1s = T(1);
    T hk = T(0);
    T hk1 = T(1);
    T s1 = hk1 - T(2) * g;
    for (int k = 1; k <= 60; ++k) {
        term *= q / (T(k) * T(k + 1));
        hk += T(1) / T(k);
        hk1 += T(1) / T(k + 1);
        i1s += term;
        s1 += term * (hk + hk1 - T(2) * g);
        if (term * (hk + hk1 + T(1)) < eps * (std::abs(s1) + i1s)) break;
    }
    return -lh * (T(0.5) * r * i1s) + T(0.25) * r * s1;
}

// ln r + K0(r) without cancellation, for 0 < r <= 2:
//   ln r + K0(r) = (ln 2 - g) - (ln(r/2)+g)(I0(r)-1) + sum_{k>=1} H_k q^k/(k!)^2
template <class T>
T log_plus_k0_series(T r) {
    const T eps = std::numeric_limits<T>::epsilon();
    const T q = T(0.25) * r * r;
    const T lh = std::log(T(0.5) * r);
    const T g = euler_gamma_v<T>;
    T term = T(1);
    T i0m1 = T(0);
    T s0 = T(0);
    T hk = T(0);
    for (int k = 1; k <= 200; ++k) {
        term *= q / (T(k) * T(k));
        hk += T(1) / T(k);
        i0m1 += term;
        s0 += term * hk;
        if (term * (hk + T(1)) < eps * (std::abs(s0) + i0m1 + T(1))) break;
    }
    const T ln2 = T(0.693147180559945309417232121458L);
    return (ln2 - g) - (lh + g) * i0m1 + s0;
}

}  // namespace vortex2l::detail

#endif  // VORTEX2L_DETAIL_BESSEL_SERIES_HPP
