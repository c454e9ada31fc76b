#pragma once

#include <vector>

#include "mubkit/matrix.hpp"
#include "mubkit/report.hpp"
#include "mubkit/types.hpp"

namespace mubkit {

/**
 * Nonstandard su(2) scheme: the unitary v_ra and Hermitian h, their polar
 * decomposition into ladder operators, and the common eigenvectors of
 * {j^2, v_ra}.
 *
 * Matrices are laid out in ascending n-order, n = j + m, so row/column 0 is
 * the lowest-weight state m = -j.
 */

struct SpinLabel {
    int two_j;  // 2j, a nonnegative integer

    int dimension() const { return two_j + 1; }
    double j() const { return two_j / 2.0; }

    static SpinLabel from_dimension(int d) {
        if (d < 1) throw std::invalid_argument("dimension must be >= 1");
        return SpinLabel{d - 1};
    }
};

struct RaParameters {
    double r = 0.0;
    double a = 0.0;

    /// Exact arithmetic covers r = 0 with integral a only.
    bool exact_compatible() const;
    int a_as_integer() const;  // throws unless exact_compatible()
};

/// Matrix of v_ra: raises m by one step with phase q^{(j-m)a}, closing the
/// cycle with e^{i 2 pi j r} from m = j back to m = -j.
ComplexMatrix build_v(SpinLabel j, const RaParameters& p);

/// Exact v_0a for integer a; entries are pure omega powers.
ExactMatrix build_v_exact(int d, int a);

/// Diagonal Hermitian h with entries sqrt((j+m)(j-m+1)) = sqrt(n(d-n)).
ComplexMatrix build_h(SpinLabel j);

struct PolarGenerators {
    ComplexMatrix j_plus;
    ComplexMatrix j_minus;
    ComplexMatrix j_z;
};

/// j_+ = h v, j_- = v^dag h, j_z = (h^2 - v^dag h^2 v)/2.
PolarGenerators polar_generators(SpinLabel j, const RaParameters& p);

/// Verifies the su(2) commutation relations and j^2 = j(j+1) I for the given
/// ladder triple.
CheckReport check_su2_commutators(const ComplexMatrix& j_plus, const ComplexMatrix& j_minus,
                                  const ComplexMatrix& j_z, double tol);

/// Component n of |j alpha; r a>: q^{n(d-n)a/2 - j(n-j)r + n alpha} / sqrt(d).
std::vector<Complex> eigenvector(SpinLabel j, const RaParameters& p, int alpha);

/// Exact eigenvector for r = 0, integer a (omega exponent n(d-n)a + 2n alpha).
std::vector<ExactAmplitude> eigenvector_exact(int d, int a, int alpha);

/// v |j alpha; ra> = q^{j(a+r) - alpha} |j alpha; ra>, plus nondegeneracy of
/// the d eigenvalues at fixed a + r.
CheckReport check_eigen_relation(SpinLabel j, const RaParameters& p, int alpha, double tol);
CheckReport check_eigen_relation_exact(int d, int a, int alpha);

/// Gram matrix of the d eigenvectors equals the identity.
CheckReport check_orthonormality(SpinLabel j, const RaParameters& p, double tol);
CheckReport check_orthonormality_exact(int d, int a);

}  // namespace mubkit
