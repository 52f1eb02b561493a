#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace zara::detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform; n must be a power of two.
inline void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& value : a) value /= static_cast<double>(n);
}

// Bluestein chirp-z: DFT of arbitrary length via a power-of-two convolution.
inline std::vector<std::complex<double>> dft_bluestein(
    const std::vector<std::complex<double>>& input) {
    const std::size_t n = input.size();
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<std::complex<double>> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the chirp argument small for long inputs
        const std::size_t k2 = (k * k) % (2 * n);
        const double angle = kPi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = std::complex<double>(std::cos(angle), -std::sin(angle));
    }

    std::vector<std::complex<double>> a(m, {0.0, 0.0});
    std::vector<std::complex<double>> b(m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = input[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

    fft_radix2(a, false);
    fft_radix2(b, false);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    fft_radix2(a, true);

    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& input) {
    if (input.empty()) return {};
    if (is_power_of_two(input.size())) {
        auto copy = input;
        fft_radix2(copy, false);
        return copy;
    }
    return dft_bluestein(input);
}

// One-sided power spectrum |X[k]|^2 for k = 0..floor(T/2) of a real series.
inline std::vector<double> power_spectrum(const std::vector<double>& series) {
    std::vector<std::complex<double>> buffer(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) buffer[i] = {series[i], 0.0};
    const auto spectrum = dft(buffer);
    std::vector<double> power(series.size() / 2 + 1);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] = std::norm(spectrum[k]);
    return power;
}

}  // namespace zara::detail
