#include "mubkit/qdft.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "mubkit/weyl_pauli.hpp"

namespace mubkit {

HadamardMatrix::HadamardMatrix(int d, int a) : d_(d), a_(static_cast<int>(mod_pos(a, d))) {
    require_dimension(d);
    exps_.resize(static_cast<size_t>(d) * d);
    for (int n = 0; n < d; ++n)
        for (int alpha = 0; alpha < d; ++alpha) {
            // q^{n(d-n)a/2 + n alpha} carried as omega^{n(d-n)a + 2 n alpha}
            const long long e = 1LL * n * (d - n) * a_ + 2LL * n * alpha;
            exps_[static_cast<size_t>(n) * d + alpha] = static_cast<int>(mod_pos(e, 2LL * d));
        }
}

Complex HadamardMatrix::entry(int n, int alpha) const {
    return omega_value(d_, exponent(n, alpha)) / std::sqrt(static_cast<double>(d_));
}

ExactAmplitude HadamardMatrix::exact_entry(int n, int alpha) const {
    return ExactAmplitude::omega_power(d_, exponent(n, alpha), 1);
}

ComplexMatrix HadamardMatrix::to_matrix() const {
    ComplexMatrix m = complex_zeros(d_, d_);
    for (int n = 0; n < d_; ++n)
        for (int alpha = 0; alpha < d_; ++alpha) m(n, alpha) = entry(n, alpha);
    return m;
}

ExactMatrix HadamardMatrix::to_exact_matrix() const {
    ExactMatrix m = exact_zeros(d_, d_, d_);
    for (int n = 0; n < d_; ++n)
        for (int alpha = 0; alpha < d_; ++alpha) m(n, alpha) = exact_entry(n, alpha);
    return m;
}

std::vector<Complex> qdft_forward(const std::vector<Complex>& x, int d, int a) {
    if (static_cast<int>(x.size()) != d) throw std::invalid_argument("qdft_forward: length mismatch");
    const HadamardMatrix h(d, a);
    std::vector<Complex> y(d, 0.0);
    for (int alpha = 0; alpha < d; ++alpha)
        for (int n = 0; n < d; ++n) y[alpha] += h.entry(n, alpha) * x[n];
    return y;
}

std::vector<Complex> qdft_inverse(const std::vector<Complex>& y, int d, int a) {
    if (static_cast<int>(y.size()) != d) throw std::invalid_argument("qdft_inverse: length mismatch");
    const HadamardMatrix h(d, a);
    std::vector<Complex> x(d, 0.0);
    for (int n = 0; n < d; ++n)
        for (int alpha = 0; alpha < d; ++alpha) x[n] += std::conj(h.entry(n, alpha)) * y[alpha];
    return x;
}

CheckReport check_hadamard_unitary_exact(int d, int a) {
    CheckReport report("hadamard unitary (exact)");
    const HadamardMatrix h(d, a);
    for (int alpha = 0; alpha < d; ++alpha)
        for (int beta = 0; beta < d; ++beta) {
            ExactAmplitude g = ExactAmplitude::zero(d);
            for (int n = 0; n < d; ++n)
                g = g + h.exact_entry(n, alpha).conj() * h.exact_entry(n, beta);
            report.require(g.equals_integer(alpha == beta ? 1 : 0),
                           "H^dag H (" + std::to_string(alpha) + "," + std::to_string(beta) +
                               ") != identity entry");
        }
    return report;
}

CheckReport check_parseval(const std::vector<Complex>& x, const std::vector<Complex>& xp,
                           double tol) {
    CheckReport report("parseval");
    const int d = static_cast<int>(x.size());
    if (x.size() != xp.size()) throw std::invalid_argument("check_parseval: length mismatch");
    Complex lhs = 0.0;
    for (int n = 0; n < d; ++n) lhs += std::conj(x[n]) * xp[n];
    for (int a = 0; a < d; ++a) {
        const std::vector<Complex> y = qdft_forward(x, d, a);
        const std::vector<Complex> yp = qdft_forward(xp, d, a);
        Complex rhs = 0.0;
        for (int alpha = 0; alpha < d; ++alpha) rhs += std::conj(y[alpha]) * yp[alpha];
        report.residual(std::abs(rhs - lhs), tol, "a=" + std::to_string(a));
    }
    return report;
}

namespace {

// Expected diagonal multiset of H^dag V_0a H: omega^{(d-1)a + 2k}, k = 1..d.
std::vector<long long> expected_diagonal_exponents(int d, int a) {
    std::vector<long long> exps;
    for (int k = 1; k <= d; ++k) exps.push_back(mod_pos(1LL * (d - 1) * a + 2LL * k, 2LL * d));
    return exps;
}

}  // namespace

CheckReport check_diagonalization(int d, int a, Mode mode, double tol) {
    CheckReport report("diagonalization of V_0a");
    require_dimension(d);
    a = static_cast<int>(mod_pos(a, d));

    if (mode == Mode::Exact) {
        const ExactMatrix h = hadamard(d, a).to_exact_matrix();
        const ExactMatrix m = h.adjoint() * (v0a_matrix_exact(d, a) * h);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (r != c)
                    report.require(m(r, c).is_zero(), "off-diagonal (" + std::to_string(r) + "," +
                                                          std::to_string(c) + ") nonzero");
        std::vector<bool> used(d, false);
        for (long long e : expected_diagonal_exponents(d, a)) {
            const ExactAmplitude expected = ExactAmplitude::omega_power(d, e);
            bool found = false;
            for (int r = 0; r < d && !found; ++r) {
                if (used[r]) continue;
                if (m(r, r).equals(expected)) {
                    used[r] = true;
                    found = true;
                }
            }
            report.require(found, "diagonal multiset lacks omega^" + std::to_string(e));
        }
        return report;
    }

    const ComplexMatrix h = hadamard(d, a).to_matrix();
    const ComplexMatrix m = h.adjoint() * (v0a_matrix(d, a) * h);
    double off = 0.0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (r != c) off = std::max(off, std::abs(m(r, c)));
    report.residual(off, tol, "off-diagonal");
    std::vector<bool> used(d, false);
    for (long long e : expected_diagonal_exponents(d, a)) {
        const Complex expected = omega_value(d, e);
        bool found = false;
        for (int r = 0; r < d && !found; ++r) {
            if (used[r]) continue;
            if (std::abs(m(r, r) - expected) <= tol) {
                used[r] = true;
                found = true;
            }
        }
        report.require(found, "diagonal multiset lacks omega^" + std::to_string(e));
    }
    return report;
}

std::string gauss_params_error(const GaussSumParams& p) {
    if (p.u == 0 || p.w == 0) return "uw must be nonzero";
    if (std::gcd(p.u, p.w) != 1) return "u and w must be mutually prime";
    // |w| = 1 leaves only the n = 0 term, where the parity condition is vacuous.
    if (std::llabs(p.w) > 1 && mod_pos(p.u * p.w + p.v, 2) != 0) return "uw + v must be even";
    return {};
}

GaussSum gauss_sum_raw(long long u, long long v, long long w) {
    if (w == 0) throw std::invalid_argument("gauss_sum: w must be nonzero");
    const long long terms = std::llabs(w);
    // Exact carrier: ring of 2|w|-th roots of unity (|w| = 1 degenerates to
    // the integers; carried in the smallest supported ring).
    const int ring_d = static_cast<int>(std::max<long long>(terms, 2));
    GroupRingElement exact(ring_d);
    Complex value = 0.0;
    for (long long n = 0; n < terms; ++n) {
        const long long e = u * n * n + v * n;  // units of pi/w
        value += std::polar(1.0, std::numbers::pi * static_cast<double>(e) / w);
        long long ring_exp = e;
        if (w < 0) ring_exp = -ring_exp;                 // pi/w = -pi/|w|
        if (terms == 1) ring_exp = 0;                    // single constant term
        exact.add_term(mod_pos(ring_exp, 2LL * ring_d), 1);
    }
    return GaussSum{value, exact};
}

GaussSum gauss_sum(const GaussSumParams& p) {
    const std::string err = gauss_params_error(p);
    if (!err.empty()) throw std::invalid_argument("gauss_sum: " + err);
    return gauss_sum_raw(p.u, p.v, p.w);
}

OverlapComparison overlap_via_gauss(int d, int a, int alpha, int b, int beta) {
    require_dimension(d);
    a = static_cast<int>(mod_pos(a, d));
    b = static_cast<int>(mod_pos(b, d));
    alpha = static_cast<int>(mod_pos(alpha, d));
    beta = static_cast<int>(mod_pos(beta, d));

    // Direct route: <a alpha| b beta> = (1/d) sum_n q^{n(d-n)(b-a)/2 + n(beta-alpha)}.
    GroupRingElement direct_elem(d);
    Complex direct = 0.0;
    for (int n = 0; n < d; ++n) {
        const long long e = 1LL * n * (d - n) * (b - a) + 2LL * n * (beta - alpha);
        direct_elem.add_term(e, 1);
        direct += omega_value(d, e) / static_cast<double>(d);
    }

    OverlapComparison out;
    out.direct = direct;
    if (a == b) {
        out.via_gauss = (alpha == beta) ? 1.0 : 0.0;
        out.discrepancy = std::abs(out.via_gauss - direct);
        out.exact_equal =
            ExactAmplitude(direct_elem, 2).equals_integer(alpha == beta ? 1 : 0);
        return out;
    }

    const long long u = a - b;
    const long long v = -(static_cast<long long>(a) - b) * d - 2LL * (alpha - beta);
    const GaussSum s = gauss_sum_raw(u, v, d);
    out.via_gauss = s.value / static_cast<double>(d);
    out.discrepancy = std::abs(out.via_gauss - direct);
    out.exact_equal = reduce(s.exact - direct_elem).is_zero();
    return out;
}

}  // namespace mubkit
