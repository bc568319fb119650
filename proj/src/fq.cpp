#include "septic/fq.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace septic {

FqElem::FqElem(const ResidualField* field, PolyModP rep) : field_(field), rep_(std::move(rep)) {}

FqElem operator+(const FqElem& a, const FqElem& b) { return FqElem(a.field_, a.rep_ + b.rep_); }
FqElem operator-(const FqElem& a, const FqElem& b) { return FqElem(a.field_, a.rep_ - b.rep_); }

FqElem operator*(const FqElem& a, const FqElem& b) {
    return a.field_->reduce(a.rep_ * b.rep_);
}

FqElem FqElem::operator-() const { return FqElem(field_, PolyModP(rep_.p()) - rep_); }

FqElem FqElem::inverse() const {
    if (is_zero()) throw Error("FqElem: inverse of zero");
    // extended Euclid in F_p[x] against the field modulus
    const PolyModP& mod = field_->modulus();
    PolyModP r0 = mod, r1 = rep_;
    PolyModP t0(rep_.p()), t1 = PolyModP::constant(rep_.p(), 1);
    while (!r1.is_zero()) {
        PolyModP q, r;
        PolyModP::divrem(r0, r1, q, r);
        PolyModP t = t0 - q * t1;
        r0 = r1; r1 = r;
        t0 = t1; t1 = t;
    }
    if (r0.degree() != 0) throw Error("FqElem: modulus not irreducible?");
    // scale so the Bezout identity gives exactly 1
    long p = rep_.p(), a = r0.coeff(0), t = 0, newt = 1, rr = p, newr = a;
    while (newr != 0) {
        long q = rr / newr;
        std::swap(t -= q * newt, newt);
        std::swap(rr -= q * newr, newr);
    }
    if (t < 0) t += p;
    return field_->reduce(t0 * t);
}

FqElem FqElem::pow(const Int& e) const {
    FqElem acc = field_->one(), base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

ResidualField::ResidualField(long p, PolyModP phi_bar) : p_(p), phi_(std::move(phi_bar)) {
    if (phi_.degree() < 1 || phi_.degree() > 3)
        throw Unsupported("residual field degree must be 1, 2 or 3");
    if (!phi_.is_monic()) phi_ = phi_.monic();
    if (!is_irreducible_mod_p(phi_)) throw Error("residual field modulus must be irreducible");
}

Int ResidualField::order() const {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(degree()));
    return q;
}

FqElem ResidualField::reduce(const PolyModP& f) const {
    PolyModP q, r;
    PolyModP::divrem(f, phi_, q, r);
    return FqElem(this, r);
}

FqElem ResidualField::reduce_int_poly(const PolyZ& f) const {
    return reduce(PolyModP::from_int_poly(f, p_));
}

FqPoly::FqPoly(const ResidualField* field, std::vector<FqElem> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    trim();
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::constant(const ResidualField* f, const FqElem& c) { return FqPoly(f, {c}); }

FqPoly FqPoly::y(const ResidualField* f) { return FqPoly(f, {f->zero(), f->one()}); }

FqElem FqPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[static_cast<size_t>(i)];
}

FqElem FqPoly::leading() const { return c_.empty() ? field_->zero() : c_.back(); }

bool FqPoly::is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

FqPoly FqPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * leading().inverse();
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    const ResidualField* f = a.field_ ? a.field_ : b.field_;
    std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), f->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
        if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    return FqPoly(f, std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    const ResidualField* f = a.field_ ? a.field_ : b.field_;
    std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), f->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
        if (i < b.c_.size()) c[i] = c[i] - b.c_[i];
    }
    return FqPoly(f, std::move(c));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    const ResidualField* f = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return FqPoly::zero(f);
    std::vector<FqElem> c(a.c_.size() + b.c_.size() - 1, f->zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return FqPoly(f, std::move(c));
}

FqPoly FqPoly::operator*(const FqElem& k) const {
    std::vector<FqElem> c = c_;
    for (auto& v : c) v = v * k;
    return FqPoly(field_, std::move(c));
}

bool operator==(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

FqPoly FqPoly::derivative() const {
    if (c_.size() <= 1) return FqPoly::zero(field_);
    std::vector<FqElem> c;
    c.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
    return FqPoly(field_, std::move(c));
}

void FqPoly::divrem(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
    if (b.is_zero()) throw Error("FqPoly division by zero");
    const ResidualField* f = b.field_;
    FqElem lcinv = b.leading().inverse();
    std::vector<FqElem> rc = a.c_;
    int db = b.degree();
    std::vector<FqElem> qc;
    if (a.degree() >= db) qc.assign(static_cast<size_t>(a.degree() - db) + 1, f->zero());
    for (int i = a.degree(); i >= db; --i) {
        FqElem t = rc[static_cast<size_t>(i)] * lcinv;
        if (t.is_zero()) continue;
        qc[static_cast<size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j)
            rc[static_cast<size_t>(i - db + j)] = rc[static_cast<size_t>(i - db + j)] - t * b.coeff(j);
    }
    q = FqPoly(f, std::move(qc));
    r = FqPoly(f, std::move(rc));
}

FqPoly FqPoly::powmod(const Int& e, const FqPoly& mod) const {
    FqPoly q, r;
    divrem(*this, mod, q, r);
    FqPoly base = r, acc = FqPoly::constant(field_, field_->one());
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) {
            acc = acc * base;
            divrem(acc, mod, q, r);
            acc = r;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
            divrem(base, mod, q, r);
            base = r;
        }
    }
    return acc;
}

std::string FqPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FqElem v = coeff(i);
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        bool is_one = v.rep().degree() == 0 && v.rep().coeff(0) == 1;
        if (i == 0 || !is_one) os << "(" << v.str() << ")";
        if (i >= 1) os << "y";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

FqPoly fq_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly q, r;
        FqPoly::divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

bool fq_is_squarefree(const FqPoly& f) {
    if (f.degree() < 1) return true;
    FqPoly d = f.derivative();
    if (d.is_zero()) return false;
    return fq_gcd(f, d).degree() == 0;
}

namespace {

// p-th root in characteristic p over F_q, q = p^m: coefficient c -> c^{p^{m-1}}
FqPoly fq_pth_root(const FqPoly& f) {
    const ResidualField* k = f.field();
    long p = k->p();
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k->degree() - 1));
    std::vector<FqElem> c(static_cast<size_t>(f.degree() / p) + 1, k->zero());
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        if (i % p != 0) throw Error("fq_pth_root: not a p-th power");
        c[static_cast<size_t>(i / p)] = f.coeff(i).pow(e);
    }
    return FqPoly(k, std::move(c));
}

std::vector<std::pair<FqPoly, int>> fq_squarefree_decomposition(const FqPoly& f) {
    std::vector<std::pair<FqPoly, int>> out;
    long p = f.field()->p();
    FqPoly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, m] : fq_squarefree_decomposition(fq_pth_root(f).monic()))
            out.emplace_back(g, m * static_cast<int>(p));
        return out;
    }
    FqPoly c = fq_gcd(f, fp);
    FqPoly w, q, r;
    FqPoly::divrem(f, c, w, r);
    int i = 1;
    while (w.degree() > 0) {
        FqPoly y = fq_gcd(w, c);
        FqPoly z;
        FqPoly::divrem(w, y, z, r);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        FqPoly cnew;
        FqPoly::divrem(c, y, cnew, r);
        c = cnew;
        w = y;
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [g, m] : fq_squarefree_decomposition(fq_pth_root(c).monic()))
            out.emplace_back(g, m * static_cast<int>(p));
    return out;
}

std::vector<std::pair<FqPoly, int>> fq_ddf(const FqPoly& f) {
    std::vector<std::pair<FqPoly, int>> out;
    const ResidualField* k = f.field();
    Int q = k->order();
    FqPoly h = FqPoly::y(k);
    FqPoly fstar = f;
    for (int d = 1; 2 * d <= fstar.degree(); ++d) {
        h = h.powmod(q, fstar);
        FqPoly g = fq_gcd(h - FqPoly::y(k), fstar);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            FqPoly quo, r;
            FqPoly::divrem(fstar, g, quo, r);
            fstar = quo.monic();
            FqPoly::divrem(h, fstar, quo, r);
            h = r;
        }
    }
    if (fstar.degree() > 0) out.emplace_back(fstar, fstar.degree());
    return out;
}

void fq_edf(const FqPoly& f, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const ResidualField* k = f.field();
    long p = k->p();
    int m = k->degree();
    while (true) {
        std::vector<FqElem> rc;
        rc.reserve(static_cast<size_t>(f.degree()));
        for (int i = 0; i < f.degree(); ++i) {
            std::vector<long> cc(static_cast<size_t>(m), 0);
            for (auto& v : cc) v = static_cast<long>(rng() % static_cast<unsigned long>(p));
            rc.push_back(FqElem(k, PolyModP(p, std::move(cc))));
        }
        FqPoly rpoly(k, std::move(rc));
        if (rpoly.is_zero()) continue;
        FqPoly g;
        if (p == 2) {
            FqPoly t, q, r;
            FqPoly::divrem(rpoly, f, q, r);
            t = r;
            FqPoly acc = t;
            for (int i = 1; i < m * d; ++i) { // absolute trace to F_2
                t = t.powmod(Int(2), f);
                acc = acc + t;
            }
            g = fq_gcd(acc, f);
        } else {
            Int e = k->order();
            Int qd;
            mpz_pow_ui(qd.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
            qd = (qd - 1) / 2;
            FqPoly t = rpoly.powmod(qd, f);
            g = fq_gcd(t - FqPoly::constant(k, k->one()), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            FqPoly q, r;
            FqPoly::divrem(f, g, q, r);
            fq_edf(g.monic(), d, rng, out);
            fq_edf(q.monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FqFactor> factor_over_Fq(const FqPoly& f) {
    if (f.is_zero()) throw Error("factor_over_Fq: zero polynomial");
    std::vector<FqFactor> out;
    if (f.degree() < 1) return out;
    FqPoly g = f.monic();
    std::mt19937_64 rng(0x0c7a7e11ULL);
    for (auto& [sq, mult] : fq_squarefree_decomposition(g)) {
        for (auto& [block, d] : fq_ddf(sq)) {
            std::vector<FqPoly> irr;
            fq_edf(block, d, rng, irr);
            for (auto& h : irr) out.push_back({h, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FqFactor& a, const FqFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i) {
            if (a.factor.coeff(i).rep() == b.factor.coeff(i).rep()) continue;
            return a.factor.coeff(i).rep() < b.factor.coeff(i).rep();
        }
        return false;
    });
    return out;
}

} // namespace septic
