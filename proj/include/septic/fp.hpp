#pragma once

#include <vector>

#include "septic/poly.hpp"

namespace septic {

/// Polynomial over F_p, p a small prime (p <= 100 is all this project needs;
/// a few internal helpers accept somewhat larger p). Coefficients reduced to
/// [0, p), constant term first, trailing zeros trimmed.
class PolyModP {
public:
    PolyModP() : p_(2) {}
    explicit PolyModP(long p) : p_(p) {}
    PolyModP(long p, std::vector<long> coeffs);
    static PolyModP from_int_poly(const PolyZ& f, long p);
    static PolyModP x(long p) { return PolyModP(p, {0, 1}); }
    static PolyModP constant(long p, long v) { return PolyModP(p, {v}); }

    long p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<size_t>(i)]; }
    const std::vector<long>& coeffs() const { return c_; }
    long leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    PolyModP monic() const;

    friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
    PolyModP operator*(long k) const;
    friend bool operator==(const PolyModP& a, const PolyModP& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator<(const PolyModP& a, const PolyModP& b); // lexicographic, for ordered containers

    PolyModP derivative() const;
    long eval(long x) const;

    static void divrem(const PolyModP& a, const PolyModP& b, PolyModP& q, PolyModP& r);
    friend PolyModP gcd(PolyModP a, PolyModP b); // monic gcd
    PolyModP powmod(const Int& e, const PolyModP& mod) const;

    /// Monic lift with coefficients in the balanced range (-p/2, p/2].
    PolyZ lift_balanced() const;
    PolyZ lift_nonneg() const;

    std::string str() const;

private:
    void trim();
    long p_;
    std::vector<long> c_;
};

struct FpFactor {
    PolyModP factor;   // monic irreducible
    int multiplicity;
};

/// Complete factorization over F_p into monic irreducibles (squarefree
/// decomposition, then distinct-degree and equal-degree splitting). Requires
/// p <= 100 per the project's scope; deterministic for a fixed input.
std::vector<FpFactor> factor_over_Fp(const PolyModP& f);

bool is_irreducible_mod_p(const PolyModP& f);

bool is_squarefree_mod_p(const PolyModP& f);

/// All monic irreducibles of the given degree (enumeration; test oracle).
std::vector<PolyModP> monic_irreducibles(long p, int degree);

} // namespace septic
