#pragma once

#include <string>
#include <vector>

#include "mubkit/matrix.hpp"
#include "mubkit/report.hpp"
#include "mubkit/types.hpp"

namespace mubkit {

/**
 * Weyl pair and generalized Pauli operators.
 *
 * Matrices follow the computational-basis layout of the clock-and-shift
 * construction: X e_n = e_{n-1 mod d} (ones on the superdiagonal plus the
 * lower-left corner) and Z = diag(1, q, ..., q^{d-1}) with q = exp(2 pi i/d).
 * V_0a = X Z^a.
 */

/// X^a Z^b, exponents mod d. Scalar phases are deliberately not tracked:
/// commutation and class membership are phase-independent.
struct PauliOperator {
    int d;
    int a;
    int b;

    bool is_identity() const { return a == 0 && b == 0; }
};

/// Matrix commutation criterion at the exponent level: X^aZ^b and X^cZ^e
/// commute iff ae - bc = 0 (mod d).
bool exponents_commute(const PauliOperator& p, const PauliOperator& q);

ComplexMatrix x_matrix(int d);
ComplexMatrix z_matrix(int d);
ComplexMatrix v0a_matrix(int d, int a);
ComplexMatrix pauli_matrix(const PauliOperator& p);

ExactMatrix x_matrix_exact(int d);
ExactMatrix z_matrix_exact(int d);
ExactMatrix v0a_matrix_exact(int d, int a);
ExactMatrix pauli_matrix_exact(const PauliOperator& p);

/// XZ - qZX = 0 and X^d = Z^d = I.
CheckReport check_weyl(int d, Mode mode, double tol = 1e-12);

/// V_0a Z - q Z V_0a = 0, (V_0a)^d = e^{i pi (d-1)a} I, Z^d = I, and the
/// decomposition V_0a = X Z^a.
CheckReport check_v0a_weyl(int d, int a, Mode mode, double tol = 1e-12);

struct CommutingClass {
    int d;
    int label;  // 0..p
    std::vector<PauliOperator> members;
};

/// The 1+p classes of p-1 commuting operators for prime p: class 0 holds
/// {Z^a}, class c+1 holds {X^a Z^{ca}}.
std::vector<CommutingClass> partition(int p);

/// Within-class commutation, disjoint cover of all non-identity operators,
/// membership of V_0a in class a+1 (mod-free: label a+1 directly), and
/// cross-class non-commutation.
CheckReport check_partition(int p, Mode mode, double tol = 1e-12);

/// Operational content of the Cartan decomposition: the p^2 - 1 non-identity
/// Pauli matrices are traceless and trace-orthogonal (Gram = d I), so the
/// 1+p abelian classes span su(p) as a direct sum.
CheckReport check_cartan(int p, Mode mode, double tol = 1e-12);

/// CSV rows "class_label,a,b", ordered by (label, a).
std::string classes_to_csv(const std::vector<CommutingClass>& classes);

}  // namespace mubkit
