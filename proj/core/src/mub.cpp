#include "mubkit/mub.hpp"

#include <cmath>

#include "mubkit/qdft.hpp"

namespace mubkit {

StateVector StateVector::from_exact(std::vector<ExactAmplitude> amps, std::string label) {
    StateVector v;
    v.floats_.reserve(amps.size());
    for (const auto& a : amps) v.floats_.push_back(a.to_complex());
    v.exact_ = std::move(amps);
    v.label_ = std::move(label);
    return v;
}

StateVector StateVector::from_floats(std::vector<Complex> amps, std::string label) {
    StateVector v;
    v.floats_ = std::move(amps);
    v.label_ = std::move(label);
    return v;
}

const std::vector<ExactAmplitude>& StateVector::exact() const {
    if (exact_.empty()) throw std::logic_error("state vector has no exact amplitudes");
    return exact_;
}

Complex inner_product(const StateVector& x, const StateVector& y) {
    if (x.d() != y.d()) throw std::invalid_argument("inner_product: dimension mismatch");
    Complex g = 0.0;
    for (int n = 0; n < x.d(); ++n) g += std::conj(x.floats()[n]) * y.floats()[n];
    return g;
}

ExactAmplitude inner_product_exact(const StateVector& x, const StateVector& y) {
    if (x.d() != y.d()) throw std::invalid_argument("inner_product: dimension mismatch");
    ExactAmplitude g = ExactAmplitude::zero(x.exact()[0].d());
    for (int n = 0; n < x.d(); ++n) g = g + x.exact()[n].conj() * y.exact()[n];
    return g;
}

namespace {

// Lift an amplitude from the ring of 2d-th roots into the ring of 2D-th
// roots, D = d * d (exponents scale by d, the root-d scale halves).
ExactAmplitude lift_product_amplitude(const ExactAmplitude& x, const ExactAmplitude& y) {
    const int d = x.d();
    if (y.d() != d) throw std::invalid_argument("tensor factors must share a dimension");
    const ExactAmplitude prod = x * y;
    const int scale = prod.rootd_scale();
    if (scale % 2 != 0)
        throw std::domain_error("tensor product needs an even combined rootd scale");
    const int big = d * d;
    require_dimension(big);
    GroupRingElement lifted(big);
    for (int k = 0; k < prod.elem().order(); ++k) {
        const Coeff c = prod.elem().coeff(k);
        if (c != 0) lifted.add_term(1LL * k * d, c);
    }
    return ExactAmplitude(std::move(lifted), scale / 2);
}

}  // namespace

StateVector tensor_product(const StateVector& x, const StateVector& y) {
    const std::string label = x.label() + "(x)" + y.label();
    if (x.has_exact() && y.has_exact()) {
        std::vector<ExactAmplitude> amps;
        amps.reserve(static_cast<size_t>(x.d()) * y.d());
        for (int i = 0; i < x.d(); ++i)
            for (int k = 0; k < y.d(); ++k)
                amps.push_back(lift_product_amplitude(x.exact()[i], y.exact()[k]));
        return StateVector::from_exact(std::move(amps), label);
    }
    std::vector<Complex> amps;
    amps.reserve(static_cast<size_t>(x.d()) * y.d());
    for (int i = 0; i < x.d(); ++i)
        for (int k = 0; k < y.d(); ++k) amps.push_back(x.floats()[i] * y.floats()[k]);
    return StateVector::from_floats(std::move(amps), label);
}

Basis::Basis(int d, BasisKind kind, std::string name, std::vector<StateVector> vectors,
             int label_a, int label_b)
    : d_(d), kind_(kind), name_(std::move(name)), vectors_(std::move(vectors)),
      label_a_(label_a), label_b_(label_b) {
    if (static_cast<int>(vectors_.size()) != d)
        throw std::invalid_argument("basis must contain exactly d vectors");
    for (const auto& v : vectors_)
        if (v.d() != d) throw std::invalid_argument("basis vector dimension mismatch");
}

bool Basis::exact() const {
    for (const auto& v : vectors_)
        if (!v.has_exact()) return false;
    return true;
}

Basis basis_b0a(int d, int a, Mode mode) {
    require_dimension(d);
    a = static_cast<int>(mod_pos(a, d));
    const HadamardMatrix h(d, a);
    std::vector<StateVector> vectors;
    vectors.reserve(d);
    for (int alpha = 0; alpha < d; ++alpha) {
        const std::string label = "alpha=" + std::to_string(alpha);
        if (mode == Mode::Exact) {
            std::vector<ExactAmplitude> amps;
            amps.reserve(d);
            for (int n = 0; n < d; ++n) amps.push_back(h.exact_entry(n, alpha));
            vectors.push_back(StateVector::from_exact(std::move(amps), label));
        } else {
            std::vector<Complex> amps;
            amps.reserve(d);
            for (int n = 0; n < d; ++n) amps.push_back(h.entry(n, alpha));
            vectors.push_back(StateVector::from_floats(std::move(amps), label));
        }
    }
    return Basis(d, BasisKind::B0a, "B_0" + std::to_string(a), std::move(vectors), a);
}

Basis basis_b0a_kform(int d, int a, Mode mode) {
    require_dimension(d);
    a = static_cast<int>(mod_pos(a, d));
    std::vector<StateVector> vectors;
    vectors.reserve(d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int alpha = 0; alpha < d; ++alpha) {
        const std::string label = "alpha=" + std::to_string(alpha);
        std::vector<ExactAmplitude> exact;
        std::vector<Complex> floats(d);
        if (mode == Mode::Exact) exact.assign(d, ExactAmplitude::zero(d));
        for (int k = 0; k < d; ++k) {
            // q^{(k+1)(d-k-1)a/2 - (k+1)alpha} attached to |n = d-1-k>
            const long long e = 1LL * (k + 1) * (d - k - 1) * a - 2LL * (k + 1) * alpha;
            const int n = d - 1 - k;
            floats[n] = omega_value(d, e) * norm;
            if (mode == Mode::Exact) exact[n] = ExactAmplitude::omega_power(d, e, 1);
        }
        if (mode == Mode::Exact)
            vectors.push_back(StateVector::from_exact(std::move(exact), label));
        else
            vectors.push_back(StateVector::from_floats(std::move(floats), label));
    }
    return Basis(d, BasisKind::B0a, "B_0" + std::to_string(a) + "(k-form)", std::move(vectors),
                 a);
}

Basis computational_basis(int d, Mode mode) {
    if (d < 1) throw std::invalid_argument("computational_basis: d must be >= 1");
    std::vector<StateVector> vectors;
    vectors.reserve(d);
    for (int n = 0; n < d; ++n) {
        const std::string label = "n=" + std::to_string(n);
        if (mode == Mode::Exact && d >= 2) {
            std::vector<ExactAmplitude> amps(d, ExactAmplitude::zero(d));
            amps[n] = ExactAmplitude::one(d);
            vectors.push_back(StateVector::from_exact(std::move(amps), label));
        } else {
            std::vector<Complex> amps(d, 0.0);
            amps[n] = 1.0;
            vectors.push_back(StateVector::from_floats(std::move(amps), label));
        }
    }
    return Basis(d, BasisKind::Computational, "B_" + std::to_string(d), std::move(vectors));
}

Basis tensor_basis(int a, int b, Mode mode) {
    if (a < 0 || a > 1 || b < 0 || b > 1)
        throw std::invalid_argument("tensor_basis: a and b must be 0 or 1");
    const Basis left = basis_b0a(2, a, mode);
    const Basis right = basis_b0a(2, b, mode);
    std::vector<StateVector> vectors;
    vectors.reserve(4);
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int beta = 0; beta < 2; ++beta)
            vectors.push_back(tensor_product(left.vectors()[alpha], right.vectors()[beta]));
    return Basis(4, BasisKind::Tensor,
                 "B_0" + std::to_string(a) + "0" + std::to_string(b), std::move(vectors), a, b);
}

namespace {

// lambda = (1-i)/2 and mu = (1+i)/2 as exact d = 4 amplitudes:
// (1 -+ omega^2) / sqrt(4) with omega = exp(i pi / 4).
ExactAmplitude w_coefficient(bool plus) {
    GroupRingElement e(4);
    e.add_term(0, 1);
    e.add_term(2, plus ? 1 : -1);
    return ExactAmplitude(std::move(e), 1);
}

StateVector w_mixed_vector(int a, int alpha, int beta, Mode mode) {
    const int b = (a + 1) % 2;
    const Basis left = basis_b0a(2, a, mode);
    const Basis right = basis_b0a(2, b, mode);
    const StateVector t1 = tensor_product(left.vectors()[alpha], right.vectors()[beta]);
    const StateVector t2 =
        tensor_product(left.vectors()[(alpha + 1) % 2], right.vectors()[(beta + 1) % 2]);
    const std::string label =
        "alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta);
    if (mode == Mode::Exact) {
        const ExactAmplitude lambda = w_coefficient(false);
        const ExactAmplitude mu = w_coefficient(true);
        std::vector<ExactAmplitude> amps;
        amps.reserve(4);
        for (int n = 0; n < 4; ++n)
            amps.push_back(lambda * t1.exact()[n] + mu * t2.exact()[n]);
        return StateVector::from_exact(std::move(amps), label);
    }
    const Complex lambda(0.5, -0.5);
    const Complex mu(0.5, 0.5);
    std::vector<Complex> amps;
    amps.reserve(4);
    for (int n = 0; n < 4; ++n) amps.push_back(lambda * t1.floats()[n] + mu * t2.floats()[n]);
    return StateVector::from_floats(std::move(amps), label);
}

}  // namespace

std::vector<Basis> w_bases(Mode mode) {
    std::vector<Basis> bases;
    bases.reserve(5);
    for (int a = 0; a < 2; ++a) {
        const Basis diag = tensor_basis(a, a, mode);
        bases.emplace_back(4, BasisKind::W, "W_" + std::to_string(a) + std::to_string(a),
                           diag.vectors(), a, a);
    }
    for (int a = 0; a < 2; ++a) {
        std::vector<StateVector> vectors;
        vectors.reserve(4);
        for (int alpha = 0; alpha < 2; ++alpha)
            for (int beta = 0; beta < 2; ++beta)
                vectors.push_back(w_mixed_vector(a, alpha, beta, mode));
        bases.emplace_back(4, BasisKind::W, "W_" + std::to_string(a) + std::to_string((a + 1) % 2),
                           std::move(vectors), a, (a + 1) % 2);
    }
    bases.push_back(computational_basis(4, mode));
    return bases;
}

namespace {

bool same_basis(const Basis& b1, const Basis& b2) {
    return b1.kind() == b2.kind() && b1.name() == b2.name() && b1.d() == b2.d();
}

}  // namespace

PairCheck check_unbiased(const Basis& b1, const Basis& b2, Mode mode, double tol) {
    if (b1.d() != b2.d()) throw std::invalid_argument("check_unbiased: dimension mismatch");
    const int d = b1.d();
    PairCheck result;
    result.left = b1.name();
    result.right = b2.name();

    if (same_basis(b1, b2)) {
        const CheckReport gram = check_gram_identity(b1, mode, tol);
        result.verdict = gram.passed ? PairVerdict::IdenticalOrthonormal : PairVerdict::Failed;
        result.passed = gram.passed;
        return result;
    }

    const bool exact = mode == Mode::Exact;
    if (exact && (!b1.exact() || !b2.exact()))
        throw std::invalid_argument("exact unbiasedness check needs exact-mode bases");
    for (int alpha = 0; alpha < d; ++alpha)
        for (int beta = 0; beta < d; ++beta) {
            const StateVector& x = b1.vectors()[alpha];
            const StateVector& y = b2.vectors()[beta];
            bool ok;
            double modulus;
            if (exact) {
                // |<x|y>|^2 * d reduces to the constant 1
                const ExactAmplitude overlap = inner_product_exact(x, y);
                ok = overlap.squared_modulus().times_d_power(1).equals_integer(1);
                modulus = std::abs(inner_product(x, y));
            } else {
                modulus = std::abs(inner_product(x, y));
                ok = std::abs(modulus - 1.0 / std::sqrt(static_cast<double>(d))) <= tol;
            }
            if (!ok) {
                result.verdict = PairVerdict::Failed;
                result.passed = false;
                result.alpha = alpha;
                result.beta = beta;
                result.modulus = modulus;
                return result;
            }
        }
    result.verdict = PairVerdict::Unbiased;
    result.passed = true;
    return result;
}

MubReport check_mutually_unbiased(const std::vector<Basis>& bases, Mode mode, double tol) {
    MubReport report;
    if (!bases.empty()) report.d = bases.front().d();
    report.mode = mode;
    for (size_t i = 0; i < bases.size(); ++i) {
        for (size_t k = i; k < bases.size(); ++k) {
            if (i == k) {
                PairCheck self;
                self.left = self.right = bases[i].name();
                const CheckReport gram = check_gram_identity(bases[i], mode, tol);
                self.verdict =
                    gram.passed ? PairVerdict::IdenticalOrthonormal : PairVerdict::Failed;
                self.passed = gram.passed;
                report.pairs.push_back(self);
            } else {
                report.pairs.push_back(check_unbiased(bases[i], bases[k], mode, tol));
            }
        }
    }
    return report;
}

CheckReport check_gram_identity(const Basis& basis, Mode mode, double tol) {
    CheckReport report("gram identity: " + basis.name());
    const int d = basis.d();
    const bool exact = mode == Mode::Exact && basis.exact();
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            if (exact) {
                const ExactAmplitude g =
                    inner_product_exact(basis.vectors()[x], basis.vectors()[y]);
                report.require(g.equals_integer(x == y ? 1 : 0),
                               "gram(" + std::to_string(x) + "," + std::to_string(y) +
                                   ") != identity entry");
            } else {
                const Complex g = inner_product(basis.vectors()[x], basis.vectors()[y]);
                report.residual(std::abs(g - (x == y ? 1.0 : 0.0)), tol,
                                "gram(" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    return report;
}

std::vector<Basis> complete_set_prime(int p, Mode mode) {
    if (!is_prime(p)) throw std::invalid_argument("complete_set_prime: p must be prime");
    require_dimension(p);
    std::vector<Basis> bases;
    bases.reserve(static_cast<size_t>(p) + 1);
    for (int a = 0; a < p; ++a) bases.push_back(basis_b0a(p, a, mode));
    bases.push_back(computational_basis(p, mode));
    return bases;
}

std::vector<Basis> triple_set(int d, int a, Mode mode) {
    require_dimension(d);
    a = static_cast<int>(mod_pos(a, d));
    std::vector<Basis> bases;
    bases.push_back(basis_b0a(d, a, mode));
    bases.push_back(basis_b0a(d, (a + 1) % d, mode));
    bases.push_back(computational_basis(d, mode));
    return bases;
}

CheckReport check_odd_pair(int d, int a, Mode mode) {
    if (d % 2 == 0) throw std::invalid_argument("check_odd_pair: d must be odd");
    require_dimension(d);
    if (d < 3) throw std::invalid_argument("check_odd_pair: d must be >= 3");
    a = static_cast<int>(mod_pos(a, d));
    CheckReport report("odd-d pair B_0a vs B_0(a+2)");
    const PairCheck pair =
        check_unbiased(basis_b0a(d, a, mode), basis_b0a(d, (a + 2) % d, mode), mode);
    report.require(pair.passed, "B_0" + std::to_string(a) + " vs B_0" +
                                    std::to_string((a + 2) % d) + " not unbiased, |overlap(" +
                                    std::to_string(pair.alpha) + "," + std::to_string(pair.beta) +
                                    ")| = " + std::to_string(pair.modulus));
    return report;
}

ExactAmplitude reshaped_determinant(const StateVector& v) {
    if (v.d() != 4) throw std::invalid_argument("reshaped_determinant: d must be 4");
    const auto& a = v.exact();
    return a[0] * a[3] - a[1] * a[2];
}

}  // namespace mubkit
