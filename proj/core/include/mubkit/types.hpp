#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace mubkit {

using Complex = std::complex<double>;
using Coeff = std::int64_t;

/// Largest supported Hilbert-space dimension. Keeps every coefficient that
/// appears in cyclotomic reductions comfortably inside 64-bit integers.
inline constexpr int kMaxDimension = 64;

enum class Mode { Exact, Float };

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

/// Nonnegative remainder of k modulo m (m > 0).
inline long long mod_pos(long long k, long long m) {
    long long r = k % m;
    return r < 0 ? r + m : r;
}

inline void require_dimension(int d) {
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    if (d > kMaxDimension) throw std::invalid_argument("dimension exceeds supported maximum 64");
}

/// Trial-division primality test, adequate for d <= 64.
inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Exact integer square root test; returns the root when n is a perfect square.
inline bool perfect_square(int n, int& root) {
    for (int r = 0; r * r <= n; ++r) {
        if (r * r == n) {
            root = r;
            return true;
        }
    }
    return false;
}

}  // namespace mubkit
