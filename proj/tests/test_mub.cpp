#include <doctest.h>

#include <cmath>
#include <random>

#include "mubkit/mub.hpp"
#include "mubkit/qdft.hpp"
#include "mubkit/su2_basis.hpp"

using namespace mubkit;

namespace {

// Seeded Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix;
// quality is irrelevant here, unitarity is what matters.
ComplexMatrix random_unitary(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m = complex_zeros(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
    for (int c = 0; c < d; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex overlap = 0.0;
            for (int r = 0; r < d; ++r) overlap += std::conj(m(r, prev)) * m(r, c);
            for (int r = 0; r < d; ++r) m(r, c) -= overlap * m(r, prev);
        }
        double norm = 0.0;
        for (int r = 0; r < d; ++r) norm += std::norm(m(r, c));
        norm = std::sqrt(norm);
        for (int r = 0; r < d; ++r) m(r, c) /= norm;
    }
    return m;
}

Basis transformed(const Basis& b, const ComplexMatrix& u) {
    std::vector<StateVector> vecs;
    for (const auto& v : b.vectors()) {
        std::vector<Complex> amps(b.d(), 0.0);
        for (int r = 0; r < b.d(); ++r)
            for (int c = 0; c < b.d(); ++c) amps[r] += u(r, c) * v.floats()[c];
        vecs.push_back(StateVector::from_floats(std::move(amps), v.label()));
    }
    return Basis(b.d(), b.kind(), b.name() + "'", std::move(vecs), b.label_a(), b.label_b());
}

}  // namespace

TEST_SUITE_BEGIN("mub");

TEST_CASE("basis_b0a: qubit bases are the sigma_x and sigma_y eigenbases") {
    const double s = 1.0 / std::sqrt(2.0);
    const Basis bx = basis_b0a(2, 0);
    CHECK(std::abs(bx.vectors()[0].floats()[0] - s) < 1e-14);
    CHECK(std::abs(bx.vectors()[0].floats()[1] - s) < 1e-14);
    CHECK(std::abs(bx.vectors()[1].floats()[1] + s) < 1e-14);

    const Basis by = basis_b0a(2, 1);
    CHECK(std::abs(by.vectors()[0].floats()[0] - s) < 1e-14);
    CHECK(std::abs(by.vectors()[0].floats()[1] - Complex(0, s)) < 1e-14);
    CHECK(std::abs(by.vectors()[1].floats()[1] - Complex(0, -s)) < 1e-14);
}

TEST_CASE("basis_b0a vectors are the columns of H_0a") {
    for (int d : {2, 3, 5, 6, 9}) {
        for (int a = 0; a < d; ++a) {
            const Basis b = basis_b0a(d, a);
            const HadamardMatrix h(d, a);
            for (int alpha = 0; alpha < d; ++alpha)
                for (int n = 0; n < d; ++n) {
                    CHECK(b.vectors()[alpha].exact()[n].equals(h.exact_entry(n, alpha)));
                    CHECK(std::abs(b.vectors()[alpha].floats()[n] - h.entry(n, alpha)) < 1e-14);
                }
        }
    }
}

TEST_CASE("basis_b0a vectors match the su2 common eigenvectors at r = 0") {
    for (int d : {2, 4, 7}) {
        for (int a = 0; a < d; ++a) {
            const Basis b = basis_b0a(d, a, Mode::Float);
            for (int alpha = 0; alpha < d; ++alpha) {
                const auto psi = eigenvector(SpinLabel::from_dimension(d),
                                             RaParameters{0.0, static_cast<double>(a)}, alpha);
                for (int n = 0; n < d; ++n)
                    CHECK(std::abs(b.vectors()[alpha].floats()[n] - psi[n]) < 1e-13);
            }
        }
    }
}

TEST_CASE("n-form and k-form produce identical vectors") {
    for (int d = 2; d <= 9; ++d)
        for (int a = 0; a < d; ++a) {
            const Basis n_form = basis_b0a(d, a);
            const Basis k_form = basis_b0a_kform(d, a);
            for (int alpha = 0; alpha < d; ++alpha)
                for (int n = 0; n < d; ++n)
                    CHECK(n_form.vectors()[alpha].exact()[n].equals(
                        k_form.vectors()[alpha].exact()[n]));
        }
    // float route as well
    const Basis nf = basis_b0a(5, 4, Mode::Float);
    const Basis kf = basis_b0a_kform(5, 4, Mode::Float);
    for (int alpha = 0; alpha < 5; ++alpha)
        for (int n = 0; n < 5; ++n)
            CHECK(std::abs(nf.vectors()[alpha].floats()[n] - kf.vectors()[alpha].floats()[n]) <
                  1e-12);
}

TEST_CASE("computational basis") {
    const Basis b = computational_basis(3);
    for (int n = 0; n < 3; ++n)
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(b.vectors()[n].floats()[k] - (n == k ? 1.0 : 0.0)) == 0.0);
    CHECK(check_gram_identity(b, Mode::Exact).passed);
    CHECK(check_gram_identity(computational_basis(2), Mode::Exact).passed);
}

TEST_CASE("every constructed basis is orthonormal, exactly") {
    for (int d : {2, 3, 4, 6, 9}) {
        for (int a = 0; a < d; ++a) CHECK(check_gram_identity(basis_b0a(d, a), Mode::Exact).passed);
    }
    for (const Basis& w : w_bases()) CHECK(check_gram_identity(w, Mode::Exact).passed);
    CHECK(check_gram_identity(tensor_basis(0, 1), Mode::Exact).passed);
}

TEST_CASE("check_unbiased: verdicts and witnesses") {
    // (B_00, B_2) at d = 2
    CHECK(check_unbiased(basis_b0a(2, 0), computational_basis(2), Mode::Exact).passed);

    // B_0a vs the computational basis, for several d and a
    for (int d : {2, 3, 4, 6, 9, 12})
        for (int a = 0; a < d; ++a)
            CHECK(check_unbiased(basis_b0a(d, a), computational_basis(d), Mode::Exact).passed);

    // d = 4: B_00 vs B_02 fails with the known witness
    const PairCheck bad = check_unbiased(basis_b0a(4, 0), basis_b0a(4, 2), Mode::Exact);
    CHECK_FALSE(bad.passed);
    CHECK(bad.verdict == PairVerdict::Failed);
    CHECK(bad.alpha == 0);
    CHECK(bad.beta == 0);
    CHECK(std::abs(bad.modulus - 1.0 / std::sqrt(2.0)) < 1e-12);

    // same basis twice reports identical-orthonormal
    const PairCheck self = check_unbiased(basis_b0a(3, 1), basis_b0a(3, 1), Mode::Exact);
    CHECK(self.verdict == PairVerdict::IdenticalOrthonormal);
    CHECK(self.passed);

    CHECK_THROWS_AS(check_unbiased(basis_b0a(2, 0), computational_basis(3), Mode::Exact),
                    std::invalid_argument);
}

TEST_CASE("complete prime sets are mutually unbiased") {
    for (int p : {2, 3, 5, 7}) {
        const auto bases = complete_set_prime(p);
        CHECK(bases.size() == static_cast<size_t>(p) + 1);
        const MubReport report = check_mutually_unbiased(bases, Mode::Exact);
        CHECK(report.all_passed());
        // C(1+p, 2) cross pairs + 1+p self checks
        CHECK(report.pairs.size() == static_cast<size_t>((p + 1) * (p + 2) / 2));
    }
    CHECK_THROWS_AS(complete_set_prime(6), std::invalid_argument);
    CHECK_THROWS_AS(complete_set_prime(1), std::invalid_argument);
}

TEST_CASE("triple sets are three MUBs for any d") {
    for (auto [d, a] : {std::pair{6, 0}, {4, 3}, {2, 0}, {10, 7}, {12, 11}}) {
        const auto bases = triple_set(d, a);
        CHECK(bases.size() == 3);
        CHECK(check_mutually_unbiased(bases, Mode::Exact).all_passed());
    }
}

TEST_CASE("odd-d pair separated by two") {
    CHECK(check_odd_pair(9, 0).passed);
    CHECK(check_odd_pair(15, 7).passed);
    CHECK(check_odd_pair(3, 1).passed);
    CHECK_THROWS_AS(check_odd_pair(8, 0), std::invalid_argument);
}

TEST_CASE("tensor bases: unbiased pairs and the no-go") {
    const Basis b0000 = tensor_basis(0, 0);
    const Basis b0101 = tensor_basis(1, 1);
    const Basis b0001 = tensor_basis(0, 1);
    const Basis b0100 = tensor_basis(1, 0);

    CHECK(check_unbiased(b0000, b0101, Mode::Exact).passed);
    CHECK(check_unbiased(b0001, b0100, Mode::Exact).passed);

    // all four together are not mutually unbiased
    const MubReport no_go = check_mutually_unbiased({b0000, b0101, b0001, b0100}, Mode::Exact);
    CHECK_FALSE(no_go.all_passed());
}

TEST_CASE("w bases: components of the recombined vectors") {
    const auto ws = w_bases();
    REQUIRE(ws.size() == 5);
    CHECK(ws[0].name() == "W_00");
    CHECK(ws[2].name() == "W_01");
    CHECK(ws[4].name() == "B_4");

    // W_01 vector (alpha=0, beta=0) = lambda |0 0> (x) |1 0> + mu |0 1> (x) |1 1>
    const Basis left = basis_b0a(2, 0, Mode::Float);
    const Basis right = basis_b0a(2, 1, Mode::Float);
    const Complex lambda(0.5, -0.5), mu(0.5, 0.5);
    const StateVector expect = [&] {
        std::vector<Complex> amps(4, 0.0);
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                amps[i * 2 + k] = lambda * left.vectors()[0].floats()[i] *
                                      right.vectors()[0].floats()[k] +
                                  mu * left.vectors()[1].floats()[i] *
                                      right.vectors()[1].floats()[k];
        return StateVector::from_floats(std::move(amps), "oracle");
    }();
    const StateVector& got = ws[2].vectors()[0];
    for (int n = 0; n < 4; ++n) CHECK(std::abs(got.floats()[n] - expect.floats()[n]) < 1e-14);

    // unit norms throughout
    for (const Basis& b : ws)
        for (const StateVector& v : b.vectors()) {
            double norm = 0.0;
            for (const Complex& c : v.floats()) norm += std::norm(c);
            CHECK(std::abs(norm - 1.0) < 1e-13);
        }
}

TEST_CASE("w bases: all ten pairs exactly unbiased with overlap 1/2") {
    const auto ws = w_bases();
    const MubReport report = check_mutually_unbiased(ws, Mode::Exact);
    CHECK(report.all_passed());
    int cross = 0;
    for (const auto& p : report.pairs)
        if (p.verdict == PairVerdict::Unbiased) ++cross;
    CHECK(cross == 10);
    // float overlap moduli equal 1/2
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t k = i + 1; k < ws.size(); ++k)
            for (const auto& x : ws[i].vectors())
                for (const auto& y : ws[k].vectors())
                    CHECK(std::abs(std::abs(inner_product(x, y)) - 0.5) < 1e-13);
}

TEST_CASE("w bases: product vs intricated vectors via the reshaped determinant") {
    const auto ws = w_bases();
    for (int i : {0, 1})  // W_00, W_11 factor
        for (const auto& v : ws[i].vectors()) CHECK(reshaped_determinant(v).is_zero());
    for (int i : {2, 3})  // W_01, W_10 do not factor
        for (const auto& v : ws[i].vectors()) CHECK_FALSE(reshaped_determinant(v).is_zero());
}

TEST_CASE("w vectors are eigenvectors of the tensored clock operators") {
    const auto ws = w_bases(Mode::Float);
    const ComplexMatrix v00 = build_v(SpinLabel{1}, RaParameters{0.0, 0.0});
    const ComplexMatrix v01 = build_v(SpinLabel{1}, RaParameters{0.0, 1.0});
    const ComplexMatrix t01 = kron(v00, v01);
    const ComplexMatrix t10 = kron(v01, v00);
    for (auto [idx, op] : {std::pair<int, const ComplexMatrix*>{2, &t01}, {3, &t10}}) {
        for (const auto& v : ws[idx].vectors()) {
            const auto w = op->apply(v.floats());
            Complex lambda = 0.0;
            for (int n = 0; n < 4; ++n) lambda += std::conj(v.floats()[n]) * w[n];
            for (int n = 0; n < 4; ++n)
                CHECK(std::abs(w[n] - lambda * v.floats()[n]) < 1e-12);
        }
    }
}

TEST_CASE("a common unitary preserves unbiasedness") {
    std::mt19937_64 rng(17);
    for (int d : {3, 4, 5}) {
        std::vector<Basis> bases;
        if (is_prime(d)) {
            for (const Basis& b : complete_set_prime(d, Mode::Float)) bases.push_back(b);
        } else {
            for (const Basis& b : w_bases(Mode::Float)) bases.push_back(b);
        }
        const ComplexMatrix u = random_unitary(d, rng);
        std::vector<Basis> rotated;
        for (const Basis& b : bases) rotated.push_back(transformed(b, u));
        for (size_t i = 0; i < bases.size(); ++i)
            for (size_t k = 0; k < bases.size(); ++k)
                for (int alpha = 0; alpha < d; ++alpha)
                    for (int beta = 0; beta < d; ++beta) {
                        const double before = std::abs(inner_product(
                            bases[i].vectors()[alpha], bases[k].vectors()[beta]));
                        const double after = std::abs(inner_product(
                            rotated[i].vectors()[alpha], rotated[k].vectors()[beta]));
                        CHECK(std::abs(before - after) < 1e-12);
                    }
    }
}

TEST_SUITE_END();
