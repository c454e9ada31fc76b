#include "mubkit/phase_ring.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace mubkit {

namespace {

using Wide = __int128;

Coeff narrow(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error("cyclotomic reduction coefficient exceeds 64 bits");
    return static_cast<Coeff>(v);
}

// Exact polynomial division (ascending coefficients, monic divisor expected
// to divide evenly). Used only to build cyclotomic polynomials.
std::vector<Coeff> divide_exact(std::vector<Coeff> num, const std::vector<Coeff>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<Coeff> quot(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
        Coeff c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (int i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    for (Coeff c : num)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

}  // namespace

Complex omega_value(int d, long long k) {
    if (d < 2) throw std::invalid_argument("omega_value: dimension must be >= 2");
    const long long r = mod_pos(k, 2LL * d);
    return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / d);
}

PhaseExponent::PhaseExponent(int dim, long long exponent) : d(dim) {
    if (d < 2) throw std::invalid_argument("PhaseExponent: dimension must be >= 2");
    k = static_cast<int>(mod_pos(exponent, 2LL * d));
}

const std::vector<Coeff>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    static std::map<int, std::vector<Coeff>> cache;
    static std::mutex lock;
    std::scoped_lock guard(lock);
    // Fill the cache bottom-up: Phi_k is x^k - 1 divided by Phi_m over the
    // proper divisors m | k, all of which are already present.
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0 || cache.contains(k)) continue;
        std::vector<Coeff> poly(k + 1, 0);
        poly[0] = -1;
        poly[k] = 1;
        for (int m = 1; m < k; ++m)
            if (k % m == 0) poly = divide_exact(std::move(poly), cache.at(m));
        cache.emplace(k, std::move(poly));
    }
    return cache.at(n);
}

GroupRingElement::GroupRingElement(int d) : d_(d), coeffs_(2 * d, 0) { require_dimension(d); }

GroupRingElement GroupRingElement::omega_power(int d, long long k) {
    GroupRingElement e(d);
    e.add_term(k, 1);
    return e;
}

GroupRingElement GroupRingElement::constant(int d, Coeff c) {
    GroupRingElement e(d);
    e.coeffs_[0] = c;
    return e;
}

void GroupRingElement::add_term(long long k, Coeff c) {
    coeffs_[static_cast<size_t>(mod_pos(k, order()))] += c;
}

void GroupRingElement::check_same_d(const GroupRingElement& other) const {
    if (d_ != other.d_) throw std::invalid_argument("group-ring dimension mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
    check_same_d(other);
    GroupRingElement out(d_);
    for (int k = 0; k < order(); ++k) out.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const {
    check_same_d(other);
    GroupRingElement out(d_);
    for (int k = 0; k < order(); ++k) out.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
    return out;
}

namespace {

// index of the only nonzero coefficient, or -1 when zero/dense
int single_term_index(const std::vector<Coeff>& c) {
    int idx = -1;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (idx >= 0) return -1;
        idx = static_cast<int>(k);
    }
    return idx;
}

}  // namespace

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
    check_same_d(other);
    const int m = order();
    if (raw_zero() || other.raw_zero()) return GroupRingElement(d_);

    // Pure phases are the common case; multiplying by one is a rotation.
    if (const int i = single_term_index(coeffs_); i >= 0) {
        GroupRingElement out(d_);
        for (int k = 0; k < m; ++k) {
            int idx = i + k;
            if (idx >= m) idx -= m;
            out.coeffs_[idx] = narrow(Wide(coeffs_[i]) * Wide(other.coeffs_[k]));
        }
        return out;
    }
    if (const int k = single_term_index(other.coeffs_); k >= 0) return other * (*this);

    std::vector<Wide> acc(m, 0);
    for (int i = 0; i < m; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int k = 0; k < m; ++k) {
            if (other.coeffs_[k] == 0) continue;
            int idx = i + k;
            if (idx >= m) idx -= m;
            acc[idx] += Wide(coeffs_[i]) * Wide(other.coeffs_[k]);
        }
    }
    GroupRingElement out(d_);
    for (int k = 0; k < m; ++k) out.coeffs_[k] = narrow(acc[k]);
    return out;
}

GroupRingElement GroupRingElement::operator*(Coeff scalar) const {
    GroupRingElement out(d_);
    for (int k = 0; k < order(); ++k) out.coeffs_[k] = narrow(Wide(coeffs_[k]) * Wide(scalar));
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(d_);
    for (int k = 0; k < order(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

GroupRingElement GroupRingElement::conj() const {
    GroupRingElement out(d_);
    out.coeffs_[0] = coeffs_[0];
    for (int k = 1; k < order(); ++k) out.coeffs_[order() - k] = coeffs_[k];
    return out;
}

bool GroupRingElement::raw_zero() const {
    for (Coeff c : coeffs_)
        if (c != 0) return false;
    return true;
}

Complex GroupRingElement::to_complex() const {
    Complex z = 0.0;
    for (int k = 0; k < order(); ++k)
        if (coeffs_[k] != 0) z += static_cast<double>(coeffs_[k]) * omega_value(d_, k);
    return z;
}

CyclotomicReduced::CyclotomicReduced(int d, std::vector<Coeff> coeffs)
    : d_(d), coeffs_(std::move(coeffs)) {}

bool CyclotomicReduced::is_zero() const {
    for (Coeff c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicReduced::is_constant(Coeff n) const {
    if (coeffs_.empty() || coeffs_[0] != n) return false;
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool CyclotomicReduced::operator==(const CyclotomicReduced& other) const {
    return d_ == other.d_ && coeffs_ == other.coeffs_;
}

Complex CyclotomicReduced::to_complex() const {
    Complex z = 0.0;
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) z += static_cast<double>(coeffs_[k]) * omega_value(d_, static_cast<long long>(k));
    return z;
}

CyclotomicReduced reduce(const GroupRingElement& e) {
    const int d = e.d();
    // omega^d = -1 folds the element to degree < d at no cost.
    std::vector<Wide> r(d, 0);
    for (int k = 0; k < d; ++k) r[k] = Wide(e.coeff(k)) - Wide(e.coeff(k + d));

    const std::vector<Coeff>& phi = cyclotomic_polynomial(2 * d);
    const int m = static_cast<int>(phi.size()) - 1;  // phi(2d), Phi_{2d} is monic
    for (int k = d - 1; k >= m; --k) {
        const Wide lead = r[k];
        if (lead == 0) continue;
        for (int i = 0; i <= m; ++i) r[k - m + i] -= lead * Wide(phi[i]);
    }
    std::vector<Coeff> out(m, 0);
    for (int k = 0; k < m && k < d; ++k) out[k] = narrow(r[k]);
    return CyclotomicReduced(d, std::move(out));
}

ExactAmplitude::ExactAmplitude(GroupRingElement elem, int rootd_scale)
    : elem_(std::move(elem)), scale_(rootd_scale) {}

ExactAmplitude ExactAmplitude::zero(int d) { return ExactAmplitude(GroupRingElement(d), 0); }

ExactAmplitude ExactAmplitude::one(int d) {
    return ExactAmplitude(GroupRingElement::constant(d, 1), 0);
}

ExactAmplitude ExactAmplitude::integer(int d, Coeff n) {
    return ExactAmplitude(GroupRingElement::constant(d, n), 0);
}

ExactAmplitude ExactAmplitude::omega_power(int d, long long k, int rootd_scale) {
    return ExactAmplitude(GroupRingElement::omega_power(d, k), rootd_scale);
}

namespace {

// Multiplier that raises an amplitude's scale from s_low to s_high, i.e. the
// integer d^{(s_high-s_low)/2}; uses sqrt(d) when d is a perfect square and
// the gap is odd. Throws when no exact integer multiplier exists.
Coeff scale_gap_multiplier(int d, int gap) {
    if (gap < 0) throw std::logic_error("scale_gap_multiplier: negative gap");
    Coeff m = 1;
    if (gap % 2 == 0) {
        for (int i = 0; i < gap / 2; ++i) m *= d;
        return m;
    }
    int root = 0;
    if (!perfect_square(d, root))
        throw std::domain_error("exact amplitudes with odd scale gap need square d");
    for (int i = 0; i < gap; ++i) m *= root;
    return m;
}

}  // namespace

ExactAmplitude ExactAmplitude::operator+(const ExactAmplitude& other) const {
    if (d() != other.d()) throw std::invalid_argument("exact amplitude dimension mismatch");
    if (scale_ == other.scale_) return ExactAmplitude(elem_ + other.elem_, scale_);
    if (elem_.raw_zero()) return other;
    if (other.elem_.raw_zero()) return *this;
    const ExactAmplitude& low = scale_ < other.scale_ ? *this : other;
    const ExactAmplitude& high = scale_ < other.scale_ ? other : *this;
    const Coeff m = scale_gap_multiplier(d(), high.scale_ - low.scale_);
    return ExactAmplitude(low.elem_ * m + high.elem_, high.scale_);
}

ExactAmplitude ExactAmplitude::operator-(const ExactAmplitude& other) const {
    return *this + (-other);
}

ExactAmplitude ExactAmplitude::operator*(const ExactAmplitude& other) const {
    if (d() != other.d()) throw std::invalid_argument("exact amplitude dimension mismatch");
    return ExactAmplitude(elem_ * other.elem_, scale_ + other.scale_);
}

ExactAmplitude ExactAmplitude::operator*(Coeff scalar) const {
    return ExactAmplitude(elem_ * scalar, scale_);
}

ExactAmplitude ExactAmplitude::operator-() const { return ExactAmplitude(-elem_, scale_); }

ExactAmplitude ExactAmplitude::conj() const { return ExactAmplitude(elem_.conj(), scale_); }

ExactAmplitude ExactAmplitude::times_d_power(int t) const {
    return ExactAmplitude(elem_, scale_ - 2 * t);
}

bool ExactAmplitude::equals_integer(Coeff n) const {
    const CyclotomicReduced red = reduce(elem_);
    if (red.is_zero()) return n == 0;
    int root = 0;
    if (mod_pos(scale_, 2) == 1 && !perfect_square(d(), root))
        throw std::domain_error("equals_integer: odd rootd_scale over non-square d; rescale first");
    // value = d^{-s/2} * elem; clear the scale onto whichever side stays integral.
    if (scale_ >= 0) return red.is_constant(n * scale_gap_multiplier(d(), scale_));
    const Coeff m = scale_gap_multiplier(d(), -scale_);
    if (!red.is_constant(red.coeffs()[0])) return false;
    return red.coeffs()[0] * m == n;
}

bool ExactAmplitude::is_zero() const { return reduce(elem_).is_zero(); }

bool ExactAmplitude::equals(const ExactAmplitude& other) const {
    return (*this - other).is_zero();
}

Complex ExactAmplitude::to_complex() const {
    return elem_.to_complex() * std::pow(static_cast<double>(d()), -scale_ / 2.0);
}

}  // namespace mubkit
