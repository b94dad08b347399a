#ifndef CONEQUANT_POLY_HPP
#define CONEQUANT_POLY_HPP

#include "conequant/rational.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace conequant {

/// Univariate polynomial over Q, dense ascending-exponent storage.
/// The zero polynomial has an empty coefficient vector (degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c)
    {
        if (c != 0)
            c_.push_back(std::move(c));
    }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly from_coeffs(std::vector<Rat> ascending)
    {
        Poly p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    /// c * z^k
    static Poly monomial(Rat c, int k)
    {
        Poly p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    static Poly variable() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const Rat& operator[](int k) const
    {
        static const Rat zero{0};
        if (k < 0 || k >= static_cast<int>(c_.size()))
            return zero;
        return c_[static_cast<size_t>(k)];
    }

    const Rat& leading() const
    {
        if (is_zero())
            throw std::invalid_argument("Poly::leading: zero polynomial");
        return c_.back();
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b)
    {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a)
    {
        Poly r = a;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Rat& s, const Poly& a)
    {
        if (s == 0)
            return {};
        Poly r = a;
        for (auto& c : r.c_)
            c *= s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.c_ < b.c_; }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw std::invalid_argument("Poly divmod: division by zero");
        Poly q, r = a;
        const Rat& lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Rat c = r.leading() / lb;
            Poly t = monomial(c, k);
            q = q + t;
            r = r - t * b;
        }
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b)
    {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero())
            throw std::invalid_argument("Poly operator/: inexact division");
        return q;
    }

    Poly derivative() const
    {
        Poly r;
        if (c_.size() <= 1)
            return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        r.trim();
        return r;
    }

    Rat eval(const Rat& x) const
    {
        Rat r{0};
        for (size_t i = c_.size(); i-- > 0;)
            r = r * x + c_[i];
        return r;
    }

    /// Horner evaluation over any commutative ring element E supporting
    /// e*e, e+e and construction-from-Rat via `from`.
    template <class E, class FromRat>
    E eval_in(const E& x, FromRat&& from) const
    {
        E r = from(Rat(0));
        for (size_t i = c_.size(); i-- > 0;) {
            r = r * x;
            r = r + from(c_[i]);
        }
        return r;
    }

    Poly monic() const
    {
        if (is_zero())
            return {};
        return (Rat(1) / leading()) * (*this);
    }

    /// p(q(z))
    Poly compose(const Poly& q) const
    {
        Poly r;
        for (size_t i = c_.size(); i-- > 0;)
            r = r * q + Poly(c_[i]);
        return r;
    }

    /// p(z + c), Taylor shift.
    Poly shift(const Rat& c) const
    {
        return compose(from_coeffs({c, Rat(1)}));
    }

    /// Coefficient-reversal z^deg * p(1/z).
    Poly reversed() const
    {
        Poly r = *this;
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

    Poly pow(int n) const
    {
        if (n < 0)
            throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r{Rat(1)};
        Poly b = *this;
        while (n) {
            if (n & 1)
                r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    /// Multiplicity of the monic factor d (deg d >= 1) in *this.
    int multiplicity_of(const Poly& d) const
    {
        if (is_zero())
            throw std::invalid_argument("multiplicity_of: zero polynomial");
        int m = 0;
        Poly r = *this;
        while (true) {
            auto [q, rem] = divmod(r, d);
            if (!rem.is_zero())
                return m;
            r = q;
            ++m;
        }
    }

    std::string str(const std::string& var = "z") const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Monic gcd over Q, computed through a primitive PRS over Z to keep
/// intermediate coefficients small.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Content-free integer image: n/d such that d*p = n with n an integer-
/// coefficient primitive polynomial (positive leading coefficient).
std::vector<Int> integer_primitive(const Poly& p);

std::string poly_str(const Poly& p, const std::string& var);

inline std::string Poly::str(const std::string& var) const { return poly_str(*this, var); }

} // namespace conequant

#endif
