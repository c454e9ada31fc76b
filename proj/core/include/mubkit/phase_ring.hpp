#pragma once

#include <vector>

#include "mubkit/types.hpp"

namespace mubkit {

/**
 * Exact arithmetic over 2d-th roots of unity.
 *
 * All phases of the clock algebra in dimension d are powers of
 * omega = exp(i*pi/d); the clock phase is q = omega^2.  Working with omega
 * instead of q keeps half-integer powers of q (which occur for d even)
 * integral.  Numbers are carried as integer combinations of omega^k and
 * compared exactly by reduction modulo the 2d-th cyclotomic polynomial.
 */

/// omega^k as a complex double, k reduced mod 2d first.
Complex omega_value(int d, long long k);

/// Integer exponent of omega = exp(i*pi/d), normalized to [0, 2d).
struct PhaseExponent {
    int d;
    int k;

    PhaseExponent(int dim, long long exponent);
    Complex to_complex() const { return omega_value(d, k); }
};

/// Ascending coefficients of the n-th cyclotomic polynomial Phi_n,
/// obtained by exact division of x^n - 1 by Phi_m over the proper divisors
/// m | n.  Results are cached; coefficients are exact integers.
const std::vector<Coeff>& cyclotomic_polynomial(int n);

/// Element of the group ring Z[Z_2d]: coeffs[k] is the coefficient of omega^k.
class GroupRingElement {
public:
    explicit GroupRingElement(int d);

    static GroupRingElement omega_power(int d, long long k);
    static GroupRingElement constant(int d, Coeff c);

    int d() const { return d_; }
    int order() const { return 2 * d_; }
    Coeff coeff(int k) const { return coeffs_[k]; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    /// Adds c * omega^k (k arbitrary, wrapped mod 2d).
    void add_term(long long k, Coeff c);

    GroupRingElement operator+(const GroupRingElement& other) const;
    GroupRingElement operator-(const GroupRingElement& other) const;
    GroupRingElement operator*(const GroupRingElement& other) const;
    GroupRingElement operator*(Coeff scalar) const;
    GroupRingElement operator-() const;

    /// Complex conjugate: omega^k -> omega^{2d-k}.
    GroupRingElement conj() const;

    /// True when every raw coefficient is zero (sufficient, not necessary,
    /// for the represented number to vanish; use reduce() for the real test).
    bool raw_zero() const;

    Complex to_complex() const;

private:
    void check_same_d(const GroupRingElement& other) const;

    int d_;
    std::vector<Coeff> coeffs_;  // length 2d
};

/// Canonical form of a GroupRingElement modulo Phi_{2d}.  Two group-ring
/// elements represent the same complex number iff their reductions compare
/// equal coefficientwise.
class CyclotomicReduced {
public:
    CyclotomicReduced(int d, std::vector<Coeff> coeffs);

    int d() const { return d_; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_constant(Coeff n) const;
    bool operator==(const CyclotomicReduced& other) const;
    bool operator!=(const CyclotomicReduced& other) const { return !(*this == other); }

    Complex to_complex() const;

private:
    int d_;
    std::vector<Coeff> coeffs_;  // length phi(2d)
};

CyclotomicReduced reduce(const GroupRingElement& e);

/**
 * Exact amplitude d^{-s/2} * sum_k coeffs[k] * omega^k.
 *
 * The irrational prefactor 1/sqrt(d) of the transform formulas is tracked
 * symbolically through the integer scale s; it is only turned into a float
 * by to_complex().
 */
class ExactAmplitude {
public:
    ExactAmplitude(GroupRingElement elem, int rootd_scale);

    static ExactAmplitude zero(int d);
    static ExactAmplitude one(int d);
    static ExactAmplitude integer(int d, Coeff n);
    static ExactAmplitude omega_power(int d, long long k, int rootd_scale = 0);

    int d() const { return elem_.d(); }
    int rootd_scale() const { return scale_; }
    const GroupRingElement& elem() const { return elem_; }

    ExactAmplitude operator+(const ExactAmplitude& other) const;
    ExactAmplitude operator-(const ExactAmplitude& other) const;
    ExactAmplitude operator*(const ExactAmplitude& other) const;
    ExactAmplitude operator*(Coeff scalar) const;
    ExactAmplitude operator-() const;
    ExactAmplitude conj() const;

    /// Multiplies by d^t exactly (the scale drops by 2t).
    ExactAmplitude times_d_power(int t) const;

    ExactAmplitude squared_modulus() const { return *this * conj(); }

    /// Exact test against a rational integer, resolving the root-d scale.
    bool equals_integer(Coeff n) const;
    bool is_zero() const;
    bool equals(const ExactAmplitude& other) const;

    Complex to_complex() const;

private:
    GroupRingElement elem_;
    int scale_;
};

}  // namespace mubkit
