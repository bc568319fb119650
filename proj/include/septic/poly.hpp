#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "septic/integers.hpp"

namespace septic {

/// Dense integer polynomial, constant term first. Trailing zeros are trimmed,
/// so the zero polynomial has an empty coefficient vector.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyZ(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static PolyZ x();                      // the monomial x
    static PolyZ constant(const Int& v);
    static PolyZ monomial(int deg, const Int& v);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& coeff(int i) const;                                  // 0 outside range
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Int eval(const Int& x) const;

    PolyZ operator-() const;
    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    PolyZ operator*(const Int& k) const;
    friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

    PolyZ derivative() const;

    /// Division by a monic divisor; exact over Z. Returns quotient, sets rem.
    PolyZ divrem_monic(const PolyZ& divisor, PolyZ& rem) const;

    /// Substitute x -> x + t.
    PolyZ translate(const Int& t) const;

    /// Content (gcd of coefficients, non-negative).
    Int content() const;

    std::string str() const; // human-readable, for traces and tests

private:
    void trim();
    std::vector<Int> c_;
};

/// Resultant of two nonzero integer polynomials (Sylvester determinant,
/// computed fraction-free). Throws Error on zero input.
Int resultant(const PolyZ& f, const PolyZ& g);

/// disc(F) = (-1)^{n(n-1)/2} Res(F, F') / lc(F).
Int poly_discriminant(const PolyZ& f);

/// Characteristic polynomial of g(alpha) acting on Z[alpha] = Z[x]/(F),
/// F monic. Monic of degree deg F; equals Res_x(F(x), y - g(x)) normalized.
PolyZ charpoly_of_element(const PolyZ& g, const PolyZ& F);

/// Minimum of nu_p over the integer coefficients; +inf for the zero polynomial.
Valuation poly_valuation(const PolyZ& f, long p);

} // namespace septic
