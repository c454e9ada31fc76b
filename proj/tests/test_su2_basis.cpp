#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mubkit/su2_basis.hpp"

using namespace mubkit;

namespace {

bool matrix_close(const ComplexMatrix& m,
                  std::initializer_list<std::initializer_list<Complex>> rows,
                  double tol = 1e-14) {
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (const Complex& v : row) {
            if (std::abs(m(r, c) - v) > tol) return false;
            ++c;
        }
        ++r;
    }
    return true;
}

// Reversal-similarity P M P with P the index flip n -> d-1-n; relates the
// ascending layout used here to the descending layout of the clock-and-shift
// matrices.
ComplexMatrix reversed(const ComplexMatrix& m) {
    const int d = m.rows();
    ComplexMatrix out = complex_zeros(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out(d - 1 - r, d - 1 - c) = m(r, c);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("su2_basis");

TEST_CASE("build_v: qubit cases") {
    // a = 0 gives sigma_x
    const ComplexMatrix v00 = build_v(SpinLabel{1}, RaParameters{0.0, 0.0});
    CHECK(matrix_close(v00, {{0.0, 1.0}, {1.0, 0.0}}));

    // a = 1: raising phase q = -1 on the m -> m+1 step; the descending layout
    // of the same operator is the clock-and-shift form [[0, q], [1, 0]].
    const ComplexMatrix v01 = build_v(SpinLabel{1}, RaParameters{0.0, 1.0});
    CHECK(matrix_close(v01, {{0.0, 1.0}, {-1.0, 0.0}}));
    CHECK(matrix_close(reversed(v01), {{0.0, -1.0}, {1.0, 0.0}}));
}

TEST_CASE("build_v: d = 3 cyclic shift at a = 0") {
    const ComplexMatrix v = build_v(SpinLabel{2}, RaParameters{0.0, 0.0});
    CHECK(matrix_close(v, {{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}));
}

TEST_CASE("build_v is unitary for real r and a") {
    for (int two_j = 1; two_j <= 9; ++two_j) {
        for (auto [r, a] : {std::pair{0.0, 0.0}, {0.3, 1.7}, {0.77, 2.3}, {1.5, 0.4}}) {
            const ComplexMatrix v = build_v(SpinLabel{two_j}, RaParameters{r, a});
            CHECK(max_abs_diff(v.adjoint() * v, complex_identity(two_j + 1)) < 1e-12);
        }
    }
}

TEST_CASE("build_v_exact matches the float construction") {
    for (int d : {2, 3, 5, 8}) {
        for (int a = 0; a < d; ++a) {
            const ComplexMatrix vf =
                build_v(SpinLabel{d - 1}, RaParameters{0.0, static_cast<double>(a)});
            const ComplexMatrix ve = to_complex(build_v_exact(d, a));
            CHECK(max_abs_diff(vf, ve) < 1e-13);
        }
    }
}

TEST_CASE("build_h: diagonal ladder weights") {
    const ComplexMatrix h2 = build_h(SpinLabel{1});
    CHECK(matrix_close(h2, {{0.0, 0.0}, {0.0, 1.0}}));

    const ComplexMatrix h3 = build_h(SpinLabel{2});
    const double s2 = std::sqrt(2.0);
    CHECK(matrix_close(h3, {{0.0, 0.0, 0.0}, {0.0, s2, 0.0}, {0.0, 0.0, s2}}));

    for (int two_j = 1; two_j <= 9; ++two_j) {
        const ComplexMatrix h = build_h(SpinLabel{two_j});
        CHECK(std::abs(h(0, 0)) == 0.0);  // (j+m) vanishes at m = -j
        CHECK(max_abs_diff(h, h.adjoint()) == 0.0);
    }
}

TEST_CASE("polar generators: qubit shapes") {
    const PolarGenerators g = polar_generators(SpinLabel{1}, RaParameters{0.0, 0.0});
    CHECK(matrix_close(g.j_plus, {{0.0, 0.0}, {1.0, 0.0}}));
    CHECK(matrix_close(g.j_z, {{-0.5, 0.0}, {0.0, 0.5}}));
}

TEST_CASE("polar generators: jz is diag(m) for any r, a") {
    for (int two_j : {1, 2, 3, 5, 8}) {
        const int d = two_j + 1;
        const PolarGenerators g = polar_generators(SpinLabel{two_j}, RaParameters{0.42, 1.9});
        for (int n = 0; n < d; ++n) {
            CHECK(std::abs(g.j_z(n, n) - Complex(n - two_j / 2.0)) < 1e-12);
            for (int c = 0; c < d; ++c)
                if (c != n) CHECK(std::abs(g.j_z(n, c)) < 1e-12);
        }
    }
}

TEST_CASE("su2 commutators close across a parameter sample") {
    for (int two_j = 1; two_j <= 9; ++two_j) {
        for (auto [r, a] : {std::pair{0.0, 0.0}, {0.3, 1.7}, {0.0, 2.0}, {0.9, 0.35}}) {
            const PolarGenerators g = polar_generators(SpinLabel{two_j}, RaParameters{r, a});
            const CheckReport rep = check_su2_commutators(g.j_plus, g.j_minus, g.j_z, 1e-10);
            CHECK(rep.passed);
            CHECK(rep.max_residual < 1e-12);
        }
    }
}

TEST_CASE("su2 commutators: identity inputs fail (negative control)") {
    const ComplexMatrix eye = complex_identity(3);
    const CheckReport rep = check_su2_commutators(eye, eye, eye, 1e-10);
    CHECK_FALSE(rep.passed);
    CHECK(rep.max_residual > 0.5);
}

TEST_CASE("v commutes with j^2") {
    for (int two_j : {1, 2, 4, 7}) {
        const SpinLabel j{two_j};
        const RaParameters p{0.6, 1.3};
        const PolarGenerators g = polar_generators(j, p);
        const int d = two_j + 1;
        const ComplexMatrix j2 = g.j_plus * g.j_minus + g.j_z * (g.j_z - complex_identity(d));
        CHECK(max_abs(commutator(build_v(j, p), j2)) < 1e-10);
    }
}

TEST_CASE("eigenvectors: qubit components") {
    const SpinLabel j{1};
    const double s = 1.0 / std::sqrt(2.0);
    const auto psi0 = eigenvector(j, RaParameters{0.0, 0.0}, 0);
    CHECK(std::abs(psi0[0] - s) < 1e-14);
    CHECK(std::abs(psi0[1] - s) < 1e-14);
    const auto psi1 = eigenvector(j, RaParameters{0.0, 0.0}, 1);
    CHECK(std::abs(psi1[0] - s) < 1e-14);
    CHECK(std::abs(psi1[1] + s) < 1e-14);
    CHECK_THROWS_AS(eigenvector(j, RaParameters{}, 2), std::invalid_argument);
}

TEST_CASE("eigenvectors have unit norm for arbitrary parameters") {
    for (int two_j : {1, 3, 6, 9}) {
        const int d = two_j + 1;
        for (int alpha = 0; alpha < d; ++alpha) {
            const auto psi = eigenvector(SpinLabel{two_j}, RaParameters{1.23, -0.7}, alpha);
            double norm = 0.0;
            for (const Complex& c : psi) norm += std::norm(c);
            CHECK(std::abs(norm - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("eigen relation: frozen eigenvalues") {
    // j = 1/2, a = r = 0: eigenvalues 1 and -1
    const SpinLabel half{1};
    const ComplexMatrix v = build_v(half, RaParameters{});
    const auto psi0 = eigenvector(half, RaParameters{}, 0);
    const auto v0 = v.apply(psi0);
    CHECK(std::abs(v0[0] - psi0[0]) < 1e-14);  // eigenvalue +1
    const auto psi1 = eigenvector(half, RaParameters{}, 1);
    const auto v1 = v.apply(psi1);
    CHECK(std::abs(v1[0] + psi1[0]) < 1e-14);  // eigenvalue q^{-1} = -1

    // j = 1, a = 1, alpha = 0: eigenvalue q = e^{2 pi i / 3}
    const SpinLabel one{2};
    const RaParameters p{0.0, 1.0};
    const auto psi = eigenvector(one, p, 0);
    const auto vpsi = build_v(one, p).apply(psi);
    const Complex q3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(vpsi[n] - q3 * psi[n]) < 1e-12);
}

TEST_CASE("eigen relation holds across parameters, float and exact") {
    for (int two_j = 1; two_j <= 9; ++two_j) {
        const int d = two_j + 1;
        for (int alpha = 0; alpha < d; ++alpha) {
            const CheckReport rep =
                check_eigen_relation(SpinLabel{two_j}, RaParameters{0.3, 1.7}, alpha, 1e-12);
            CHECK(rep.passed);
        }
    }
    for (int d : {2, 3, 4, 7, 9}) {
        for (int a = 0; a < d; ++a)
            for (int alpha = 0; alpha < d; ++alpha)
                CHECK(check_eigen_relation_exact(d, a, alpha).passed);
    }
}

TEST_CASE("orthonormality of the eigenvector set") {
    CHECK(check_orthonormality(SpinLabel{1}, RaParameters{0.0, 1.0}, 1e-12).passed);
    CHECK(check_orthonormality(SpinLabel{3}, RaParameters{0.0, 2.0}, 1e-12).passed);
    CHECK(check_orthonormality(SpinLabel{6}, RaParameters{0.8, 2.6}, 1e-12).passed);
    CHECK(check_orthonormality_exact(4, 3).passed);
    CHECK(check_orthonormality_exact(7, 2).passed);
}

TEST_CASE("exact mode gate on parameters") {
    CHECK(RaParameters{0.0, 3.0}.exact_compatible());
    CHECK_FALSE(RaParameters{0.1, 3.0}.exact_compatible());
    CHECK_FALSE(RaParameters{0.0, 0.5}.exact_compatible());
    CHECK_THROWS_AS((RaParameters{0.1, 1.0}.a_as_integer()), std::domain_error);
}

TEST_SUITE_END();
