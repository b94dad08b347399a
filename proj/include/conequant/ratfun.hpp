#ifndef CONEQUANT_RATFUN_HPP
#define CONEQUANT_RATFUN_HPP

#include "conequant/poly.hpp"

namespace conequant {

/// Rational function over Q(z). Canonical form: denominator monic,
/// gcd(num, den) = 1, zero is 0/1.
class RatFun {
public:
    RatFun() : num_(), den_(Poly(1)) {}
    explicit RatFun(Poly p) : num_(std::move(p)), den_(Poly(1)) {}
    explicit RatFun(Rat c) : num_(Poly(std::move(c))), den_(Poly(1)) {}
    explicit RatFun(long c) : RatFun(Rat(c)) {}

    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw std::invalid_argument("RatFun: zero denominator");
        normalize();
    }

    static RatFun variable() { return RatFun(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b)
    {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b)
    {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a)
    {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b)
    {
        // Cross-reduce before multiplying to keep degrees down.
        Poly g1 = poly_gcd(a.num_, b.den_);
        Poly g2 = poly_gcd(b.num_, a.den_);
        RatFun r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        r.normalize_monic_only();
        return r;
    }
    friend RatFun operator*(const Rat& s, const RatFun& a)
    {
        RatFun r = a;
        r.num_ = s * r.num_;
        if (s == 0)
            r.den_ = Poly(1);
        return r;
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b)
    {
        if (b.is_zero())
            throw std::invalid_argument("RatFun: division by zero");
        return a * b.inverse();
    }

    RatFun inverse() const
    {
        if (is_zero())
            throw std::invalid_argument("RatFun::inverse: zero");
        RatFun r;
        r.num_ = den_;
        r.den_ = num_;
        Rat lc = r.den_.leading();
        r.den_ = r.den_.monic();
        r.num_ = (Rat(1) / lc) * r.num_;
        return r;
    }

    RatFun derivative() const
    {
        if (is_polynomial())
            return RatFun(num_.derivative());
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    friend bool operator==(const RatFun& a, const RatFun& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// Order of vanishing at the finite rational point p (negative for a pole).
    int order_at(const Rat& p) const
    {
        if (is_zero())
            throw std::invalid_argument("order_at: zero function");
        Poly lin = Poly::from_coeffs({-p, Rat(1)});
        return num_.multiplicity_of(lin) - den_.multiplicity_of(lin);
    }

    /// Order at the monic irreducible place q.
    int order_at_place_poly(const Poly& q) const
    {
        if (is_zero())
            throw std::invalid_argument("order_at_place_poly: zero function");
        return num_.multiplicity_of(q) - den_.multiplicity_of(q);
    }

    /// Order at infinity (in the local coordinate w = 1/z).
    int order_at_infinity() const
    {
        if (is_zero())
            throw std::invalid_argument("order_at_infinity: zero function");
        return den_.degree() - num_.degree();
    }

    Rat eval(const Rat& x) const
    {
        Rat d = den_.eval(x);
        if (d == 0)
            throw std::invalid_argument("RatFun::eval: pole at evaluation point");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "z") const
    {
        if (is_polynomial())
            return num_.str(var);
        std::string n = num_.str(var), d = den_.str(var);
        auto wrap = [](const std::string& s, const Poly& p) {
            return (p.is_constant() || (p.coeffs().size() - countz(p)) <= 1) && s.find(' ') == std::string::npos
                       ? s
                       : "(" + s + ")";
        };
        return wrap(n, num_) + "/" + wrap(d, den_);
    }

private:
    static size_t countz(const Poly& p)
    {
        size_t n = 0;
        for (const auto& c : p.coeffs())
            if (c == 0)
                ++n;
        return n;
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        normalize_monic_only();
    }

    void normalize_monic_only()
    {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Rat lc = den_.leading();
        if (lc != 1) {
            den_ = den_.monic();
            num_ = (Rat(1) / lc) * num_;
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace conequant

#endif
