#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mubkit/weyl_pauli.hpp"

using namespace mubkit;

TEST_SUITE_BEGIN("weyl_pauli");

TEST_CASE("clock and shift matrices: small frozen cases") {
    // d = 2: X = sigma_x, Z = sigma_z, XZ = -i sigma_y
    const ComplexMatrix x = x_matrix(2);
    const ComplexMatrix z = z_matrix(2);
    CHECK(std::abs(x(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(x(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(z(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(z(1, 1) + 1.0) < 1e-15);
    const ComplexMatrix xz = x * z;
    CHECK(std::abs(xz(0, 1) + 1.0) < 1e-15);  // -i sigma_y = [[0,-1],[1,0]]
    CHECK(std::abs(xz(1, 0) - 1.0) < 1e-15);

    // d = 3: Z = diag(1, q, q^2)
    const ComplexMatrix z3 = z_matrix(3);
    CHECK(std::abs(z3(1, 1) - std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0)) < 1e-14);

    // X e_n = e_{n-1 mod d}
    for (int d : {2, 3, 5, 8}) {
        const ComplexMatrix xd = x_matrix(d);
        for (int n = 0; n < d; ++n) {
            std::vector<Complex> e(d, 0.0);
            e[n] = 1.0;
            const auto out = xd.apply(e);
            for (int r = 0; r < d; ++r)
                CHECK(std::abs(out[r] - (r == (n - 1 + d) % d ? 1.0 : 0.0)) < 1e-15);
        }
    }
}

TEST_CASE("V_0a matrix matches the clock-and-shift layout") {
    // row n-1 carries q^{na}, the lower-left corner carries 1
    for (int d : {2, 3, 4, 7}) {
        for (int a = 0; a < d; ++a) {
            const ComplexMatrix v = v0a_matrix(d, a);
            for (int n = 1; n < d; ++n)
                CHECK(std::abs(v(n - 1, n) - omega_value(d, 2LL * n * a)) < 1e-13);
            CHECK(std::abs(v(d - 1, 0) - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("weyl relations, exact and float") {
    for (int d : {2, 5, 12}) {
        CHECK(check_weyl(d, Mode::Exact).passed);
        CHECK(check_weyl(d, Mode::Float).passed);
    }
}

TEST_CASE("V_0a weyl relations and d-th powers") {
    // d = 2, a = 1: (V_01)^2 = -I
    const ComplexMatrix v01 = v0a_matrix(2, 1);
    const ComplexMatrix sq = v01 * v01;
    CHECK(std::abs(sq(0, 0) + 1.0) < 1e-14);
    CHECK(std::abs(sq(1, 1) + 1.0) < 1e-14);
    CHECK(std::abs(sq(0, 1)) < 1e-14);

    CHECK(check_v0a_weyl(2, 1, Mode::Exact).passed);
    CHECK(check_v0a_weyl(3, 2, Mode::Exact).passed);  // (V_02)^3 = e^{4 pi i} I = I
    for (int d : {2, 3, 4, 6, 12})
        for (int a = 0; a < d; ++a) {
            CHECK(check_v0a_weyl(d, a, Mode::Exact).passed);
            CHECK(check_v0a_weyl(d, a, Mode::Float).passed);
        }
}

TEST_CASE("pauli matrices: identification at d = 2") {
    // XZ = -i sigma_y; X^0 Z^0 = I
    const ComplexMatrix xz = pauli_matrix(PauliOperator{2, 1, 1});
    CHECK(std::abs(xz(0, 1) + 1.0) < 1e-15);
    CHECK(std::abs(xz(1, 0) - 1.0) < 1e-15);
    const ComplexMatrix id = pauli_matrix(PauliOperator{2, 0, 0});
    CHECK(max_abs_diff(id, complex_identity(2)) == 0.0);

    // d = 3, X Z^2: shift pattern with phases q^{2n}
    const ComplexMatrix m = pauli_matrix(PauliOperator{3, 1, 2});
    for (int n = 1; n < 3; ++n) CHECK(std::abs(m(n - 1, n) - omega_value(3, 4LL * n)) < 1e-14);
}

TEST_CASE("composition law: X^aZ^b X^cZ^e = q^{-bc} X^{a+c} Z^{b+e}") {
    std::mt19937_64 rng(23);
    for (int d = 2; d <= 7; ++d) {
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (int trial = 0; trial < 12; ++trial) {
            const int a = pick(rng), b = pick(rng), c = pick(rng), e = pick(rng);
            const ComplexMatrix lhs =
                pauli_matrix(PauliOperator{d, a, b}) * pauli_matrix(PauliOperator{d, c, e});
            const ComplexMatrix rhs =
                pauli_matrix(PauliOperator{d, (a + c) % d, (b + e) % d}) *
                omega_value(d, mod_pos(-2LL * b * c, 2LL * d));
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        }
    }
}

TEST_CASE("commutation criterion ae - bc = 0 (mod d) matches matrices") {
    for (int d = 2; d <= 5; ++d) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int e = 0; e < d; ++e) {
                        const PauliOperator p{d, a, b}, q{d, c, e};
                        const bool by_matrix =
                            max_abs(commutator(pauli_matrix(p), pauli_matrix(q))) < 1e-12;
                        CHECK(by_matrix == exponents_commute(p, q));
                    }
    }
}

TEST_CASE("partition: frozen small cases") {
    // p = 2: {Z}, {X}, {XZ}
    const auto classes2 = partition(2);
    REQUIRE(classes2.size() == 3);
    CHECK(classes2[0].members[0].a == 0);
    CHECK(classes2[0].members[0].b == 1);
    CHECK(classes2[1].members[0].a == 1);
    CHECK(classes2[1].members[0].b == 0);
    CHECK(classes2[2].members[0].a == 1);
    CHECK(classes2[2].members[0].b == 1);

    // p = 3: {Z, Z^2}, {X, X^2}, {XZ, X^2Z^2}, {XZ^2, X^2Z}
    const auto classes3 = partition(3);
    REQUIRE(classes3.size() == 4);
    CHECK(classes3[2].members[0].b == 1);   // XZ
    CHECK(classes3[2].members[1].b == 2);   // X^2 Z^2
    CHECK(classes3[3].members[0].b == 2);   // XZ^2
    CHECK(classes3[3].members[1].b == 1);   // X^2 Z^4 = X^2 Z

    // p = 5: six classes of four, disjoint cover of 24 operators
    const auto classes5 = partition(5);
    CHECK(classes5.size() == 6);
    int count = 0;
    for (const auto& cls : classes5) count += static_cast<int>(cls.members.size());
    CHECK(count == 24);

    CHECK_THROWS_AS(partition(4), std::invalid_argument);
}

TEST_CASE("partition verification") {
    CHECK(check_partition(2, Mode::Exact).passed);
    CHECK(check_partition(3, Mode::Exact).passed);
    CHECK(check_partition(5, Mode::Exact).passed);
    CHECK(check_partition(5, Mode::Float).passed);

    // p = 3 spot checks quoted in the class listing: XZ and X^2Z^2 commute,
    // XZ and XZ^2 do not
    CHECK(exponents_commute(PauliOperator{3, 1, 1}, PauliOperator{3, 2, 2}));
    CHECK_FALSE(exponents_commute(PauliOperator{3, 1, 1}, PauliOperator{3, 1, 2}));
}

TEST_CASE("cartan decomposition checks") {
    CHECK(check_cartan(2, Mode::Exact).passed);
    CHECK(check_cartan(3, Mode::Exact).passed);
    CHECK(check_cartan(3, Mode::Float).passed);
    CHECK(check_cartan(5, Mode::Float).passed);
}

TEST_CASE("trace inner product is d on the diagonal and 0 off it") {
    for (int d : {2, 3, 5}) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int e = 0; e < d; ++e) {
                        const ComplexMatrix ma = pauli_matrix(PauliOperator{d, a, b});
                        const ComplexMatrix mb = pauli_matrix(PauliOperator{d, c, e});
                        Complex tr = 0.0;
                        for (int r = 0; r < d; ++r)
                            for (int s = 0; s < d; ++s) tr += std::conj(ma(r, s)) * mb(r, s);
                        const Complex want = (a == c && b == e) ? Complex(d) : Complex(0.0);
                        CHECK(std::abs(tr - want) < 1e-12);
                    }
    }
}

TEST_CASE("class listing CSV is deterministic and ordered") {
    const std::string csv = classes_to_csv(partition(3));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "class_label,a,b");
    std::getline(in, line);
    CHECK(line == "0,0,1");
    std::getline(in, line);
    CHECK(line == "0,0,2");
    std::getline(in, line);
    CHECK(line == "1,1,0");
    // 4 classes x 2 members; three data rows were consumed above
    int rows = 3;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8);
    CHECK(csv == classes_to_csv(partition(3)));
}

TEST_SUITE_END();
