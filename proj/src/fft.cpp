#include "msl1/fft.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace msl1::detail {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_pow2(Eigen::VectorXcd& a, bool inverse) {
    const Eigen::Index n = a.size();
    for (Eigen::Index i = 1, j = 0; i < n; ++i) {
        Eigen::Index bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (Eigen::Index len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (Eigen::Index i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (Eigen::Index k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

Eigen::VectorXcd direct_dft(const Eigen::VectorXcd& x, bool inverse) {
    const Eigen::Index n = x.size();
    Eigen::VectorXcd out(n);
    const double sgn = inverse ? 2.0 : -2.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (Eigen::Index j = 0; j < n; ++j) {
            const double ang = sgn * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(j) / static_cast<double>(n);
            acc += x[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

Eigen::VectorXcd transform(Eigen::VectorXcd a, bool inverse) {
    if (is_power_of_two(a.size())) {
        fft_pow2(a, inverse);
        return a;
    }
    return direct_dft(a, inverse);
}

}  // namespace

Eigen::VectorXcd unitary_dft(const Eigen::VectorXd& x) {
    Eigen::VectorXcd a = x.cast<std::complex<double>>();
    a = transform(std::move(a), false);
    a /= std::sqrt(static_cast<double>(x.size()));
    return a;
}

Eigen::VectorXcd unitary_idft(const Eigen::VectorXcd& v) {
    Eigen::VectorXcd a = transform(v, true);
    a /= std::sqrt(static_cast<double>(v.size()));
    return a;
}

Eigen::VectorXd unitary_idft_real(const Eigen::VectorXcd& v) {
    return unitary_idft(v).real();
}

}  // namespace msl1::detail
