#pragma once

#include <string>
#include <vector>

#include "mubkit/matrix.hpp"
#include "mubkit/report.hpp"
#include "mubkit/types.hpp"

namespace mubkit {

/**
 * Quadratic discrete Fourier transform in dimension d with quadratic
 * parameter a: entry (n, alpha) is (1/sqrt d) q^{n(d-n)a/2 + n alpha}.
 * Entries are stored as omega exponents, so the matrix is exact by
 * construction; float views are derived.
 */
class HadamardMatrix {
public:
    HadamardMatrix(int d, int a);

    int d() const { return d_; }
    int a() const { return a_; }

    /// omega exponent of entry (n, alpha), in [0, 2d).
    int exponent(int n, int alpha) const { return exps_[static_cast<size_t>(n) * d_ + alpha]; }

    Complex entry(int n, int alpha) const;
    ExactAmplitude exact_entry(int n, int alpha) const;  // rootd_scale 1

    ComplexMatrix to_matrix() const;
    ExactMatrix to_exact_matrix() const;

private:
    int d_, a_;
    std::vector<int> exps_;
};

inline HadamardMatrix hadamard(int d, int a) { return HadamardMatrix(d, a); }

/// y(alpha) = sum_n (H_0a)_{n alpha} x(n).
std::vector<Complex> qdft_forward(const std::vector<Complex>& x, int d, int a);
/// x(n) = sum_alpha conj((H_0a)_{n alpha}) y(alpha).
std::vector<Complex> qdft_inverse(const std::vector<Complex>& y, int d, int a);

/// H_0a is unitary: H^dag H = I, exactly.
CheckReport check_hadamard_unitary_exact(int d, int a);

/// Parseval conservation: <y|y'> = <x|x'> for every a in Z/dZ, with the
/// common value independent of a.
CheckReport check_parseval(const std::vector<Complex>& x, const std::vector<Complex>& xp,
                           double tol);

/// H^dag V_0a H is diagonal and its diagonal multiset is
/// q^{(d-1)a/2} {q, q^2, ..., q^d}.
CheckReport check_diagonalization(int d, int a, Mode mode, double tol = 1e-12);

struct GaussSumParams {
    long long u = 0;
    long long v = 0;
    long long w = 1;
};

/// Empty when (u,v,w) satisfies the validity conditions of the generalized
/// quadratic Gauss sum; otherwise names the violated condition.
std::string gauss_params_error(const GaussSumParams& p);

struct GaussSum {
    Complex value;
    GroupRingElement exact;  // over the ring of 2|w|-th roots of unity
};

/// Brute-force S(u,v,w) = sum_{n<|w|} exp(i pi (u n^2 + v n)/w); only needs
/// w != 0.
GaussSum gauss_sum_raw(long long u, long long v, long long w);

/// Validated evaluation; throws std::invalid_argument naming the violated
/// condition.
GaussSum gauss_sum(const GaussSumParams& p);

struct OverlapComparison {
    Complex via_gauss;
    Complex direct;
    double discrepancy = 0.0;
    bool exact_equal = false;
};

/// <a alpha | b beta> computed both directly and as (1/d) S(a-b,
/// -(a-b)d - 2(alpha-beta), d); the two routes are compared in float and in
/// exact arithmetic. The a = b case bypasses the sum (u = 0 is outside the
/// Gauss-sum conditions) and returns the Kronecker delta.
OverlapComparison overlap_via_gauss(int d, int a, int alpha, int b, int beta);

}  // namespace mubkit
