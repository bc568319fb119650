#pragma once

#include <memory>
#include <vector>

#include "septic/fp.hpp"

namespace septic {

class ResidualField;

/// Element of F_phi = F_p[x]/(phi-bar), represented by its reduction of
/// degree < deg(phi-bar).
class FqElem {
public:
    FqElem() = default;
    FqElem(const ResidualField* field, PolyModP rep);

    bool is_zero() const { return rep_.is_zero(); }
    const PolyModP& rep() const { return rep_; }
    const ResidualField* field() const { return field_; }

    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    FqElem inverse() const;
    FqElem pow(const Int& e) const;
    FqElem operator-() const;
    friend bool operator==(const FqElem& a, const FqElem& b) { return a.rep_ == b.rep_; }

    std::string str() const { return rep_.str(); }

private:
    const ResidualField* field_ = nullptr;
    PolyModP rep_;
};

/// F_p[x]/(phi-bar) for monic irreducible phi-bar of degree 1, 2 or 3.
/// Larger degrees are out of scope and rejected.
class ResidualField {
public:
    ResidualField(long p, PolyModP phi_bar);

    long p() const { return p_; }
    int degree() const { return phi_.degree(); }
    const PolyModP& modulus() const { return phi_; }
    Int order() const; // p^degree

    FqElem zero() const { return FqElem(this, PolyModP(p_)); }
    FqElem one() const { return FqElem(this, PolyModP::constant(p_, 1)); }
    FqElem from_int(long v) const { return FqElem(this, PolyModP::constant(p_, v)); }
    FqElem generator() const { return FqElem(this, PolyModP::x(p_)); } // class of x
    FqElem reduce(const PolyModP& f) const;
    FqElem reduce_int_poly(const PolyZ& f) const;

private:
    long p_;
    PolyModP phi_;
};

/// Polynomial over F_phi, constant term first.
class FqPoly {
public:
    FqPoly() = default;
    FqPoly(const ResidualField* field, std::vector<FqElem> coeffs);
    static FqPoly zero(const ResidualField* f) { return FqPoly(f, {}); }
    static FqPoly constant(const ResidualField* f, const FqElem& c);
    static FqPoly y(const ResidualField* f);

    const ResidualField* field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FqElem coeff(int i) const;
    const std::vector<FqElem>& coeffs() const { return c_; }
    FqElem leading() const;
    bool is_monic() const;
    FqPoly monic() const;

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly operator*(const FqElem& k) const;
    friend bool operator==(const FqPoly& a, const FqPoly& b);

    FqPoly derivative() const;
    static void divrem(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
    FqPoly powmod(const Int& e, const FqPoly& mod) const;

    std::string str() const;

private:
    void trim();
    const ResidualField* field_ = nullptr;
    std::vector<FqElem> c_;
};

FqPoly fq_gcd(FqPoly a, FqPoly b);

struct FqFactor {
    FqPoly factor; // monic irreducible
    int multiplicity;
};

/// Complete factorization over F_phi; deterministic.
std::vector<FqFactor> factor_over_Fq(const FqPoly& f);

bool fq_is_squarefree(const FqPoly& f);

} // namespace septic
