#include "mubkit/weyl_pauli.hpp"

#include <sstream>

namespace mubkit {

bool exponents_commute(const PauliOperator& p, const PauliOperator& q) {
    if (p.d != q.d) throw std::invalid_argument("pauli dimension mismatch");
    return mod_pos(1LL * p.a * q.b - 1LL * p.b * q.a, p.d) == 0;
}

ComplexMatrix x_matrix(int d) {
    require_dimension(d);
    ComplexMatrix x = complex_zeros(d, d);
    for (int r = 0; r < d; ++r) x(r, (r + 1) % d) = 1.0;
    return x;
}

ComplexMatrix z_matrix(int d) {
    require_dimension(d);
    ComplexMatrix z = complex_zeros(d, d);
    for (int n = 0; n < d; ++n) z(n, n) = omega_value(d, 2LL * n);
    return z;
}

ComplexMatrix v0a_matrix(int d, int a) {
    return x_matrix(d) * z_matrix(d).pow(static_cast<int>(mod_pos(a, d)));
}

ComplexMatrix pauli_matrix(const PauliOperator& p) {
    const int a = static_cast<int>(mod_pos(p.a, p.d));
    const int b = static_cast<int>(mod_pos(p.b, p.d));
    return x_matrix(p.d).pow(a) * z_matrix(p.d).pow(b);
}

ExactMatrix x_matrix_exact(int d) {
    require_dimension(d);
    ExactMatrix x = exact_zeros(d, d, d);
    for (int r = 0; r < d; ++r) x(r, (r + 1) % d) = ExactAmplitude::one(d);
    return x;
}

ExactMatrix z_matrix_exact(int d) {
    require_dimension(d);
    ExactMatrix z = exact_zeros(d, d, d);
    for (int n = 0; n < d; ++n) z(n, n) = ExactAmplitude::omega_power(d, 2LL * n);
    return z;
}

ExactMatrix v0a_matrix_exact(int d, int a) {
    return x_matrix_exact(d) * z_matrix_exact(d).pow(static_cast<int>(mod_pos(a, d)));
}

ExactMatrix pauli_matrix_exact(const PauliOperator& p) {
    const int a = static_cast<int>(mod_pos(p.a, p.d));
    const int b = static_cast<int>(mod_pos(p.b, p.d));
    return x_matrix_exact(p.d).pow(a) * z_matrix_exact(p.d).pow(b);
}

namespace {

ExactMatrix scale_exact(const ExactMatrix& m, const ExactAmplitude& s) {
    ExactMatrix out = m;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * s;
    return out;
}

}  // namespace

CheckReport check_weyl(int d, Mode mode, double tol) {
    CheckReport report("weyl pair");
    if (mode == Mode::Exact) {
        const ExactMatrix x = x_matrix_exact(d);
        const ExactMatrix z = z_matrix_exact(d);
        const ExactAmplitude q = ExactAmplitude::omega_power(d, 2);
        report.require(exact_is_zero(x * z - scale_exact(z * x, q)), "XZ - qZX != 0");
        report.require(exact_is_identity(x.pow(d)), "X^d != I");
        report.require(exact_is_identity(z.pow(d)), "Z^d != I");
        return report;
    }
    const ComplexMatrix x = x_matrix(d);
    const ComplexMatrix z = z_matrix(d);
    const Complex q = omega_value(d, 2);
    report.residual(max_abs(x * z - (z * x) * q), tol, "XZ - qZX");
    report.residual(max_abs_diff(x.pow(d), complex_identity(d)), tol, "X^d - I");
    report.residual(max_abs_diff(z.pow(d), complex_identity(d)), tol, "Z^d - I");
    return report;
}

CheckReport check_v0a_weyl(int d, int a, Mode mode, double tol) {
    CheckReport report("v0a weyl relations");
    a = static_cast<int>(mod_pos(a, d));
    // (V_0a)^d = e^{i pi (d-1) a} I = (-1)^{(d-1)a} I = omega^{d (d-1) a} I.
    const long long power_phase = mod_pos(1LL * d * (d - 1) * a, 2LL * d);
    if (mode == Mode::Exact) {
        const ExactMatrix v = v0a_matrix_exact(d, a);
        const ExactMatrix z = z_matrix_exact(d);
        const ExactAmplitude q = ExactAmplitude::omega_power(d, 2);
        report.require(exact_is_zero(v * z - scale_exact(z * v, q)), "V_0a Z - q Z V_0a != 0");
        const ExactMatrix expected =
            scale_exact(exact_identity(d, d), ExactAmplitude::omega_power(d, power_phase));
        report.require(exact_equal(v.pow(d), expected), "(V_0a)^d != e^{i pi (d-1)a} I");
        report.require(exact_is_identity(z.pow(d)), "Z^d != I");
        report.require(exact_equal(v, x_matrix_exact(d) * z.pow(a)), "V_0a != X Z^a");
        return report;
    }
    const ComplexMatrix v = v0a_matrix(d, a);
    const ComplexMatrix z = z_matrix(d);
    const Complex q = omega_value(d, 2);
    report.residual(max_abs(v * z - (z * v) * q), tol, "V_0a Z - q Z V_0a");
    report.residual(
        max_abs_diff(v.pow(d), complex_identity(d) * omega_value(d, power_phase)), tol,
        "(V_0a)^d - e^{i pi (d-1)a} I");
    report.residual(max_abs_diff(z.pow(d), complex_identity(d)), tol, "Z^d - I");
    report.residual(max_abs_diff(v, x_matrix(d) * z.pow(a)), tol, "V_0a - X Z^a");
    return report;
}

std::vector<CommutingClass> partition(int p) {
    if (!is_prime(p)) throw std::invalid_argument("partition: p must be prime");
    require_dimension(p);
    std::vector<CommutingClass> classes;
    CommutingClass v0{p, 0, {}};
    for (int a = 1; a < p; ++a) v0.members.push_back(PauliOperator{p, 0, a});
    classes.push_back(std::move(v0));
    for (int c = 0; c < p; ++c) {
        CommutingClass vc{p, c + 1, {}};
        for (int a = 1; a < p; ++a)
            vc.members.push_back(PauliOperator{p, a, static_cast<int>(mod_pos(1LL * c * a, p))});
        classes.push_back(std::move(vc));
    }
    return classes;
}

namespace {

// Matrices for every X^a Z^b, indexed a*p + b, built once per verification.
struct PauliTable {
    std::vector<ExactMatrix> exact;
    std::vector<ComplexMatrix> fl;

    PauliTable(int p, Mode mode) {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                const PauliOperator op{p, a, b};
                if (mode == Mode::Exact)
                    exact.push_back(pauli_matrix_exact(op));
                else
                    fl.push_back(pauli_matrix(op));
            }
    }

    bool commute(const PauliOperator& x, const PauliOperator& y, double tol) const {
        const size_t ix = static_cast<size_t>(x.a) * x.d + x.b;
        const size_t iy = static_cast<size_t>(y.a) * y.d + y.b;
        if (!exact.empty()) {
            const ExactMatrix& a = exact[ix];
            const ExactMatrix& b = exact[iy];
            return exact_is_zero(a * b - b * a);
        }
        return max_abs(commutator(fl[ix], fl[iy])) <= tol;
    }
};

}  // namespace

CheckReport check_partition(int p, Mode mode, double tol) {
    CheckReport report("pauli partition");
    const std::vector<CommutingClass> classes = partition(p);
    const PauliTable table(p, mode);

    report.require(static_cast<int>(classes.size()) == p + 1, "expected 1+p classes");
    std::vector<std::vector<bool>> seen(p, std::vector<bool>(p, false));
    int total = 0;
    for (const auto& cls : classes) {
        report.require(static_cast<int>(cls.members.size()) == p - 1,
                       "class " + std::to_string(cls.label) + " should have p-1 members");
        for (const auto& op : cls.members) {
            report.require(!op.is_identity(), "identity operator inside a class");
            report.require(!seen[op.a][op.b], "operator listed in two classes");
            seen[op.a][op.b] = true;
            ++total;
        }
        // within-class commutation, both at the exponent level and as matrices
        for (size_t i = 0; i < cls.members.size(); ++i)
            for (size_t k = i + 1; k < cls.members.size(); ++k) {
                report.require(exponents_commute(cls.members[i], cls.members[k]),
                               "exponent criterion fails within class " +
                                   std::to_string(cls.label));
                report.require(table.commute(cls.members[i], cls.members[k], tol),
                               "matrices fail to commute within class " +
                                   std::to_string(cls.label));
            }
    }
    report.require(total == p * p - 1, "classes do not cover the p^2 - 1 operators");

    // V_0a = X Z^a (no scalar) has exponent pair (1, a): class a+1.
    for (int a = 0; a < p; ++a) {
        const CommutingClass& cls = classes[static_cast<size_t>(a) + 1];
        bool found = false;
        for (const auto& op : cls.members) found = found || (op.a == 1 && op.b == a);
        report.require(found, "V_0" + std::to_string(a) + " missing from class " +
                                  std::to_string(a + 1));
        if (mode == Mode::Exact)
            report.require(
                exact_equal(v0a_matrix_exact(p, a), pauli_matrix_exact(PauliOperator{p, 1, a})),
                "V_0a != X Z^a as exact matrices");
    }

    // distinct classes never commute (lines through the origin meet only there)
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t k = i + 1; k < classes.size(); ++k)
            for (const auto& x : classes[i].members)
                for (const auto& y : classes[k].members) {
                    report.require(!exponents_commute(x, y), "cross-class exponent commutation");
                    report.require(!table.commute(x, y, tol), "cross-class matrices commute");
                }
    return report;
}

CheckReport check_cartan(int p, Mode mode, double tol) {
    CheckReport report("cartan decomposition");
    if (!is_prime(p)) throw std::invalid_argument("check_cartan: p must be prime");

    std::vector<PauliOperator> ops;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (a != 0 || b != 0) ops.push_back(PauliOperator{p, a, b});
    report.require(static_cast<int>(ops.size()) == p * p - 1, "operator count");

    // Tr(A^dag B) computed entrywise as sum conj(A_rc) B_rc.
    if (mode == Mode::Exact) {
        std::vector<ExactMatrix> mats;
        mats.reserve(ops.size());
        for (const auto& op : ops) mats.push_back(pauli_matrix_exact(op));
        for (size_t i = 0; i < mats.size(); ++i) {
            ExactAmplitude tr = ExactAmplitude::zero(p);
            for (int n = 0; n < p; ++n) tr = tr + mats[i](n, n);
            report.require(tr.equals_integer(0), "Tr X^aZ^b != 0");
            for (size_t k = i; k < mats.size(); ++k) {
                ExactAmplitude g = ExactAmplitude::zero(p);
                for (int r = 0; r < p; ++r)
                    for (int c = 0; c < p; ++c) g = g + mats[i](r, c).conj() * mats[k](r, c);
                report.require(g.equals_integer(i == k ? p : 0),
                               "trace gram not d I at pair (" + std::to_string(i) + "," +
                                   std::to_string(k) + ")");
            }
        }
    } else {
        std::vector<ComplexMatrix> mats;
        mats.reserve(ops.size());
        for (const auto& op : ops) mats.push_back(pauli_matrix(op));
        for (size_t i = 0; i < mats.size(); ++i) {
            Complex tr = 0.0;
            for (int n = 0; n < p; ++n) tr += mats[i](n, n);
            report.residual(std::abs(tr), tol, "trace");
            for (size_t k = i; k < mats.size(); ++k) {
                Complex g = 0.0;
                for (int r = 0; r < p; ++r)
                    for (int c = 0; c < p; ++c) g += std::conj(mats[i](r, c)) * mats[k](r, c);
                report.residual(std::abs(g - (i == k ? Complex(p) : Complex(0.0))), tol,
                                "trace gram");
            }
        }
    }

    // Trace-orthogonal nonzero matrices are linearly independent, so the 1+p
    // abelian classes of p-1 operators fill out the p^2 - 1 dimensions.
    const auto classes = partition(p);
    int dim = 0;
    for (const auto& cls : classes) dim += static_cast<int>(cls.members.size());
    report.require(dim == p * p - 1, "class dimensions do not sum to p^2 - 1");
    return report;
}

std::string classes_to_csv(const std::vector<CommutingClass>& classes) {
    std::ostringstream out;
    out << "class_label,a,b\n";
    for (const auto& cls : classes)
        for (const auto& op : cls.members) out << cls.label << ',' << op.a << ',' << op.b << '\n';
    return out.str();
}

}  // namespace mubkit
