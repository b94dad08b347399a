#include "conequant/poly.hpp"

#include <numeric>

namespace conequant {

namespace {

Int int_gcd(Int a, Int b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int vec_content(const std::vector<Int>& v)
{
    Int g = 0;
    for (const auto& c : v) {
        g = int_gcd(g, c);
        if (g == 1)
            break;
    }
    return g;
}

void make_primitive(std::vector<Int>& v)
{
    Int g = vec_content(v);
    if (g == 0)
        return;
    if (!v.empty() && v.back() < 0)
        g = -g;
    for (auto& c : v)
        c /= g;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b)
{
    const Int& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        Int la = a.back();
        int k = static_cast<int>(a.size()) - 1 - db;
        for (auto& c : a)
            c *= lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(k + i)] -= la * b[static_cast<size_t>(i)];
        while (!a.empty() && a.back() == 0)
            a.pop_back();
        if (a.empty())
            break;
    }
    return a;
}

} // namespace

std::vector<Int> integer_primitive(const Poly& p)
{
    Int lcm_den = 1;
    for (const auto& c : p.coeffs()) {
        Int d = denominator(c);
        lcm_den = lcm_den / int_gcd(lcm_den, d) * d;
    }
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.push_back(numerator(c) * (lcm_den / denominator(c)));
    make_primitive(v);
    return v;
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    std::vector<Int> A = integer_primitive(a);
    std::vector<Int> B = integer_primitive(b);
    if (A.size() < B.size())
        std::swap(A, B);
    while (!B.empty()) {
        std::vector<Int> R = pseudo_rem(A, B);
        make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    std::vector<Rat> rc;
    rc.reserve(A.size());
    for (auto& c : A)
        rc.emplace_back(std::move(c));
    return Poly::from_coeffs(std::move(rc)).monic();
}

std::string poly_str(const Poly& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p[k];
        if (c == 0)
            continue;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = ac == 1;
        if (k == 0) {
            out += rat_str(ac);
        } else {
            if (!unit) {
                out += rat_str(ac);
                out += "*";
            }
            out += var;
            if (k != 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace conequant
