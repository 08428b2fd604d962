#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hmn {

/// Exact rational scalar. GMP-backed, always canonicalized.
using Rat = mpq_class;

/// Canonical serialization "num/den" (denominator always present, positive).
std::string rat_to_string(const Rat& r);

/// Parses "num/den" or a bare integer "num". Throws std::invalid_argument on
/// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

class Field;

/// Element of the cyclotomic field Q(xi) attached to a Field context.
///
/// Coordinates are rationals in the power basis 1, xi, ..., xi^{phi-1}
/// (little-endian), kept reduced mod the mn-th cyclotomic polynomial, so
/// representation equality is field equality.
///
/// A default-constructed Cyc is a detached zero: it compares equal to any
/// zero, acts as the neutral element in sums, and adopts the other operand's
/// field on first combination.
class Cyc {
public:
    Cyc() : f_(nullptr) {}

    bool attached() const { return f_ != nullptr; }
    const Field* field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  ///< all coordinates above degree 0 vanish
    Rat rational_part() const; ///< coordinate of 1 (the constant coordinate)

    /// Power-basis coordinates, length phi. Empty for a detached zero.
    const std::vector<Rat>& coords() const { return c_; }

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// In-place fused this -= x*y; avoids a temporary in elimination loops.
    void submul(const Cyc& x, const Cyc& y);

    Cyc inverse() const; ///< throws std::domain_error on zero

    /// Debug rendering as a polynomial in xi, e.g. "1/2 - 3*xi".
    std::string str() const;

private:
    friend class Field;
    Cyc(const Field* f, std::vector<Rat> c) : f_(f), c_(std::move(c)) {}

    const Field* f_;
    std::vector<Rat> c_; // size phi when attached
};

/// Arithmetic context for Q(xi) at fixed (m, n): xi is a primitive N-th root
/// of unity, N = mn, and q = xi^m has order n. Also owns the q-integer and
/// alpha/gamma coefficient arithmetic used throughout.
///
/// Field objects are immutable after construction and must outlive every Cyc
/// attached to them. Values from different Field instances never mix.
class Field {
public:
    /// Throws std::invalid_argument for degenerate parameters (m < 2 or n < 2).
    Field(int m, int n);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int m() const { return m_; }
    int n() const { return n_; }
    int N() const { return N_; }     ///< mn, the order of xi
    int phi() const { return phi_; } ///< degree of Q(xi) over Q

    /// Monic N-th cyclotomic polynomial, little-endian, length phi+1.
    const std::vector<Rat>& cyclotomic() const { return cyclo_; }

    Cyc zero() const;
    Cyc one() const;
    Cyc integer(long v) const;
    Cyc rational(const Rat& r) const;
    Cyc from_coords(std::vector<Rat> coords) const; ///< length must be phi

    Cyc root(long k) const;  ///< xi^k, any integer exponent
    Cyc q_pow(long k) const; ///< q^k = xi^{mk}, any integer exponent

    /// (k)_q = 1 + q + ... + q^{k-1}; (0)_q = 0. Requires k >= 0.
    Cyc q_int(long k) const;
    /// (k)!_q = (1)_q (2)_q ... (k)_q; (0)!_q = 1. Requires k >= 0.
    Cyc q_fact(long k) const;

private:
    friend class Cyc;

    std::vector<Rat> reduce(std::vector<Rat> p) const; // deg(p) arbitrary
    std::vector<Rat> inv_coords(const std::vector<Rat>& a) const;

    int m_, n_, N_, phi_;
    std::vector<Rat> cyclo_;
    std::vector<std::vector<Rat>> xpow_; // x^{phi+t} mod cyclo, t = 0..phi-2
    std::vector<Cyc> roots_;             // xi^k, k = 0..N-1
};

/// The structure-constant coefficients gamma_k(l, i) and alpha_k(l, i),
/// 1 <= k <= n, attached to a Field. The k = n values carry the 1/(n-1)!_q
/// normalization; all others are q-integer multiples of root differences.
class Coeffs {
public:
    Coeffs(const Field& f, long l, long i) : f_(&f), l_(l), i_(i) {}

    long l() const { return l_; }
    long i() const { return i_; }

    Cyc gamma(long k) const; ///< requires 1 <= k <= n
    Cyc alpha(long k) const; ///< requires 1 <= k <= n

private:
    const Field* f_;
    long l_, i_;
};

} // namespace hmn
