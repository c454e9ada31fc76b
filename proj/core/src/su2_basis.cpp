#include "mubkit/su2_basis.hpp"

#include <cmath>
#include <numbers>

namespace mubkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// q^x for real exponent x, q = exp(2 pi i / d).
Complex q_power(int d, double x) { return std::polar(1.0, kTwoPi * x / d); }

}  // namespace

bool RaParameters::exact_compatible() const {
    return r == 0.0 && a == std::floor(a);
}

int RaParameters::a_as_integer() const {
    if (!exact_compatible())
        throw std::domain_error("exact mode requires r = 0 and integer a");
    return static_cast<int>(a);
}

ComplexMatrix build_v(SpinLabel j, const RaParameters& p) {
    const int d = j.dimension();
    ComplexMatrix v = complex_zeros(d, d);
    for (int n = 0; n + 1 < d; ++n) v(n + 1, n) = q_power(d, (d - 1 - n) * p.a);
    v(0, d - 1) = std::polar(1.0, kTwoPi * j.j() * p.r);
    return v;
}

ExactMatrix build_v_exact(int d, int a) {
    require_dimension(d);
    ExactMatrix v = exact_zeros(d, d, d);
    for (int n = 0; n + 1 < d; ++n)
        v(n + 1, n) = ExactAmplitude::omega_power(d, 2LL * (d - 1 - n) * a);
    v(0, d - 1) = ExactAmplitude::one(d);  // r = 0
    return v;
}

ComplexMatrix build_h(SpinLabel j) {
    const int d = j.dimension();
    ComplexMatrix h = complex_zeros(d, d);
    for (int n = 0; n < d; ++n) h(n, n) = std::sqrt(static_cast<double>(n) * (d - n));
    return h;
}

PolarGenerators polar_generators(SpinLabel j, const RaParameters& p) {
    const ComplexMatrix v = build_v(j, p);
    const ComplexMatrix h = build_h(j);
    const ComplexMatrix vdag = v.adjoint();
    const ComplexMatrix h2 = h * h;
    return PolarGenerators{h * v, vdag * h, (h2 - vdag * h2 * v) * Complex(0.5)};
}

CheckReport check_su2_commutators(const ComplexMatrix& j_plus, const ComplexMatrix& j_minus,
                                  const ComplexMatrix& j_z, double tol) {
    CheckReport report("su2 commutators");
    const int d = j_z.rows();
    if (j_plus.rows() != d || j_minus.rows() != d || j_plus.cols() != d || j_minus.cols() != d)
        throw std::invalid_argument("check_su2_commutators: dimension mismatch");

    report.residual(max_abs(commutator(j_z, j_plus) - j_plus), tol, "[jz,j+] - j+");
    report.residual(max_abs(commutator(j_z, j_minus) + j_minus), tol, "[jz,j-] + j-");
    report.residual(max_abs(commutator(j_plus, j_minus) - j_z * Complex(2.0)), tol,
                    "[j+,j-] - 2jz");

    const double jj = (d - 1) / 2.0;
    const ComplexMatrix expected = complex_identity(d) * Complex(jj * (jj + 1.0));
    const ComplexMatrix eye = complex_identity(d);
    report.residual(max_abs(j_plus * j_minus + j_z * (j_z - eye) - expected), tol,
                    "j+j- + jz(jz-1) - j(j+1)I");
    report.residual(max_abs(j_minus * j_plus + j_z * (j_z + eye) - expected), tol,
                    "j-j+ + jz(jz+1) - j(j+1)I");
    return report;
}

std::vector<Complex> eigenvector(SpinLabel j, const RaParameters& p, int alpha) {
    const int d = j.dimension();
    if (alpha < 0 || alpha >= d) throw std::invalid_argument("alpha out of range");
    const double jj = j.j();
    std::vector<Complex> psi(d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        const double exponent = n * (d - n) * p.a / 2.0 - jj * (n - jj) * p.r + n * alpha;
        psi[n] = q_power(d, exponent) * norm;
    }
    return psi;
}

std::vector<ExactAmplitude> eigenvector_exact(int d, int a, int alpha) {
    require_dimension(d);
    if (alpha < 0 || alpha >= d) throw std::invalid_argument("alpha out of range");
    std::vector<ExactAmplitude> psi;
    psi.reserve(d);
    for (int n = 0; n < d; ++n)
        psi.push_back(ExactAmplitude::omega_power(d, 1LL * n * (d - n) * a + 2LL * n * alpha, 1));
    return psi;
}

CheckReport check_eigen_relation(SpinLabel j, const RaParameters& p, int alpha, double tol) {
    CheckReport report("eigen relation alpha=" + std::to_string(alpha));
    const int d = j.dimension();
    const ComplexMatrix v = build_v(j, p);
    const std::vector<Complex> psi = eigenvector(j, p, alpha);
    const std::vector<Complex> vpsi = v.apply(psi);
    const Complex eigenvalue = q_power(d, j.j() * (p.a + p.r) - alpha);
    double res = 0.0;
    for (int n = 0; n < d; ++n) res = std::max(res, std::abs(vpsi[n] - eigenvalue * psi[n]));
    report.residual(res, tol, "v|psi> - lambda|psi>");

    // Nondegeneracy at fixed a + r: the d eigenvalues differ pairwise.
    double min_gap = 2.0;
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y)
            min_gap = std::min(min_gap, std::abs(q_power(d, j.j() * (p.a + p.r) - x) -
                                                 q_power(d, j.j() * (p.a + p.r) - y)));
    report.require(min_gap > tol, "eigenvalue spectrum is degenerate");
    return report;
}

CheckReport check_eigen_relation_exact(int d, int a, int alpha) {
    CheckReport report("eigen relation (exact) alpha=" + std::to_string(alpha));
    const ExactMatrix v = build_v_exact(d, a);
    const std::vector<ExactAmplitude> psi = eigenvector_exact(d, a, alpha);
    const std::vector<ExactAmplitude> vpsi = v.apply(psi);
    // q^{ja - alpha} = omega^{(d-1)a - 2 alpha}
    const ExactAmplitude eigenvalue =
        ExactAmplitude::omega_power(d, 1LL * (d - 1) * a - 2LL * alpha);
    for (int n = 0; n < d; ++n)
        report.require((vpsi[n] - eigenvalue * psi[n]).is_zero(),
                       "exact eigen relation fails at component " + std::to_string(n));

    // Exponents (d-1)a - 2 alpha are pairwise distinct mod 2d as alpha varies.
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y)
            report.require(mod_pos(-2 * x, 2 * d) != mod_pos(-2 * y, 2 * d),
                           "exact spectrum degenerate");
    return report;
}

CheckReport check_orthonormality(SpinLabel j, const RaParameters& p, double tol) {
    CheckReport report("orthonormality");
    const int d = j.dimension();
    std::vector<std::vector<Complex>> vecs;
    for (int alpha = 0; alpha < d; ++alpha) vecs.push_back(eigenvector(j, p, alpha));
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Complex g = 0.0;
            for (int n = 0; n < d; ++n) g += std::conj(vecs[x][n]) * vecs[y][n];
            report.residual(std::abs(g - (x == y ? 1.0 : 0.0)), tol,
                            "gram(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    return report;
}

CheckReport check_orthonormality_exact(int d, int a) {
    CheckReport report("orthonormality (exact)");
    std::vector<std::vector<ExactAmplitude>> vecs;
    for (int alpha = 0; alpha < d; ++alpha) vecs.push_back(eigenvector_exact(d, a, alpha));
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            ExactAmplitude g = ExactAmplitude::zero(d);
            for (int n = 0; n < d; ++n) g = g + vecs[x][n].conj() * vecs[y][n];
            report.require(g.equals_integer(x == y ? 1 : 0),
                           "exact gram(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    return report;
}

}  // namespace mubkit
