#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mubkit/phase_ring.hpp"
#include "mubkit/report.hpp"
#include "mubkit/types.hpp"

namespace mubkit {

/// A qudit ket in the computational basis. Exact-mode vectors carry
/// ExactAmplitudes alongside their float view; float-mode vectors carry
/// only complex components.
class StateVector {
public:
    static StateVector from_exact(std::vector<ExactAmplitude> amps, std::string label);
    static StateVector from_floats(std::vector<Complex> amps, std::string label);

    int d() const { return static_cast<int>(floats_.size()); }
    bool has_exact() const { return !exact_.empty(); }
    const std::vector<Complex>& floats() const { return floats_; }
    const std::vector<ExactAmplitude>& exact() const;
    const std::string& label() const { return label_; }

private:
    std::vector<ExactAmplitude> exact_;
    std::vector<Complex> floats_;
    std::string label_;
};

Complex inner_product(const StateVector& x, const StateVector& y);
ExactAmplitude inner_product_exact(const StateVector& x, const StateVector& y);

/// Componentwise tensor product; exact amplitudes are lifted into the ring
/// of the product dimension.
StateVector tensor_product(const StateVector& x, const StateVector& y);

enum class BasisKind { B0a, Computational, Tensor, W };

class Basis {
public:
    Basis(int d, BasisKind kind, std::string name, std::vector<StateVector> vectors,
          int label_a = -1, int label_b = -1);

    int d() const { return d_; }
    BasisKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::vector<StateVector>& vectors() const { return vectors_; }
    int label_a() const { return label_a_; }
    int label_b() const { return label_b_; }
    bool exact() const;

private:
    int d_;
    BasisKind kind_;
    std::string name_;
    std::vector<StateVector> vectors_;
    int label_a_, label_b_;
};

/// B_0a from the master formula: vector alpha has components
/// q^{n(d-n)a/2 + n alpha} / sqrt(d); identical to column alpha of H_0a.
Basis basis_b0a(int d, int a, Mode mode = Mode::Exact);

/// The same physical vectors built from the k-indexed form
/// q^{(k+1)(d-k-1)a/2 - (k+1)alpha} with |k> = |n = d-1-k>; used for the
/// equivalence check between the two writings.
Basis basis_b0a_kform(int d, int a, Mode mode = Mode::Exact);

Basis computational_basis(int d, Mode mode = Mode::Exact);

/// B_0a0b = {|a alpha> (x) |b beta>} in C^4, (alpha, beta) lexicographic.
Basis tensor_basis(int a, int b, Mode mode = Mode::Exact);

/// The five d = 4 MUBs: W_00 and W_11 as product bases, W_01 and W_10 as
/// lambda/mu recombinations with lambda = (1-i)/2, mu = (1+i)/2, plus the
/// computational basis B_4.
std::vector<Basis> w_bases(Mode mode = Mode::Exact);

enum class PairVerdict { Unbiased, IdenticalOrthonormal, Failed };

struct PairCheck {
    std::string left, right;
    PairVerdict verdict = PairVerdict::Failed;
    bool passed = false;
    // first failing overlap, when verdict == Failed
    int alpha = -1, beta = -1;
    double modulus = 0.0;
};

struct MubReport {
    int d = 0;
    Mode mode = Mode::Exact;
    std::vector<PairCheck> pairs;

    bool all_passed() const {
        for (const auto& p : pairs)
            if (!p.passed) return false;
        return true;
    }
};

/// Distinct bases: every overlap has modulus 1/sqrt(d) (exactly in exact
/// mode). The same basis given twice: Gram = identity.
PairCheck check_unbiased(const Basis& b1, const Basis& b2, Mode mode, double tol = 1e-12);

/// All pairwise checks over a set of bases.
MubReport check_mutually_unbiased(const std::vector<Basis>& bases, Mode mode,
                                  double tol = 1e-12);

/// Gram matrix of one basis equals the identity.
CheckReport check_gram_identity(const Basis& basis, Mode mode, double tol = 1e-12);

/// {B_00, ..., B_0p-1, B_p} for prime p.
std::vector<Basis> complete_set_prime(int p, Mode mode = Mode::Exact);

/// {B_0a, B_0(a+1 mod d), B_d}: three MUBs for every d.
std::vector<Basis> triple_set(int d, int a, Mode mode = Mode::Exact);

/// For odd d: B_0a and B_0(a+2 mod d) are unbiased.
CheckReport check_odd_pair(int d, int a, Mode mode = Mode::Exact);

/// Determinant of the 2x2 matrix obtained by reshaping a d = 4 vector;
/// nonzero iff the vector is intricated (not a product of two qubit kets).
ExactAmplitude reshaped_determinant(const StateVector& v);

}  // namespace mubkit
