#pragma once

#include "quotcoh/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quotcoh {

/// Integer-coefficient polynomial in t supported on even exponents only
/// (all cohomology involved lives in even degree).
class TPoly {
public:
    using CoeffMap = std::map<int, Integer>;

    TPoly() = default;

    static TPoly zero() { return TPoly(); }
    static TPoly one() { return term(1, 0); }

    static TPoly term(Integer c, int exponent)
    {
        if (exponent < 0 || exponent % 2 != 0)
            throw std::invalid_argument("TPoly: exponent must be even and nonnegative");
        TPoly p;
        if (c != 0)
            p.c_.emplace(exponent, std::move(c));
        return p;
    }

    /// 1 - t^k, the building block of every denominator.
    static TPoly one_minus_tk(int k)
    {
        TPoly p = one();
        p.add_term(-1, k);
        return p;
    }

    const CoeffMap& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    int degree() const
    {
        if (is_zero())
            throw std::domain_error("TPoly: zero polynomial has no degree");
        return c_.rbegin()->first;
    }

    int low_exponent() const
    {
        if (is_zero())
            throw std::domain_error("TPoly: zero polynomial has no low exponent");
        return c_.begin()->first;
    }

    Integer coefficient(int exponent) const
    {
        auto it = c_.find(exponent);
        return it == c_.end() ? Integer(0) : it->second;
    }

    void add_term(Integer c, int exponent)
    {
        if (c == 0)
            return;
        if (exponent < 0 || exponent % 2 != 0)
            throw std::invalid_argument("TPoly: exponent must be even and nonnegative");
        auto [it, inserted] = c_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                c_.erase(it);
        }
    }

    bool operator==(const TPoly& other) const { return c_ == other.c_; }
    bool operator!=(const TPoly& other) const { return c_ != other.c_; }

    TPoly operator-() const
    {
        TPoly r = *this;
        for (auto& [e, c] : r.c_)
            c = -c;
        return r;
    }

    TPoly& operator+=(const TPoly& other)
    {
        for (const auto& [e, c] : other.c_)
            add_term(c, e);
        return *this;
    }

    TPoly& operator-=(const TPoly& other)
    {
        for (const auto& [e, c] : other.c_)
            add_term(-c, e);
        return *this;
    }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b)
    {
        TPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_)
                r.add_term(ca * cb, ea + eb);
        return r;
    }

    /// Exact quotient by (1 - t^k); nullopt when not divisible.
    std::optional<TPoly> divide_one_minus_tk(int k) const
    {
        TPoly q;
        TPoly r = *this;
        if (r.is_zero())
            return q;
        const int max_exp = degree() - k;
        while (!r.is_zero()) {
            const auto [e, c] = *r.c_.begin();
            if (e > max_exp)
                return std::nullopt;
            q.add_term(c, e);
            // subtract c*t^e*(1 - t^k)
            r.add_term(-c, e);
            r.add_term(c, e + k);
        }
        return q;
    }

private:
    CoeffMap c_; // exponent -> nonzero coefficient
};

namespace detail {

/// Rational-coefficient univariate polynomial helpers used only by series
/// division (gcd-based peeling of cyclotomic factors). Exponents here are the
/// even t-exponents divided by 2.
using UniPoly = std::map<int, Rational>;

inline void uni_trim(UniPoly& p)
{
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == 0) ? p.erase(it) : std::next(it);
}

inline int uni_degree(const UniPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

inline UniPoly uni_from_tpoly(const TPoly& p)
{
    UniPoly u;
    for (const auto& [e, c] : p.coefficients())
        u.emplace(e / 2, Rational(c));
    return u;
}

inline UniPoly uni_one_minus_um(int m)
{
    UniPoly u;
    u.emplace(0, 1);
    u[m] += -1;
    uni_trim(u);
    return u;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b)
{
    UniPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            r[ea + eb] += ca * cb;
    uni_trim(r);
    return r;
}

/// Remainder of a by b (b nonzero).
inline UniPoly uni_mod(UniPoly a, const UniPoly& b)
{
    const int db = uni_degree(b);
    const Rational lc_b = b.rbegin()->second;
    while (uni_degree(a) >= db) {
        const int da = uni_degree(a);
        const Rational f = a.rbegin()->second / lc_b;
        for (const auto& [e, c] : b)
            a[e + da - db] -= f * c;
        uni_trim(a);
    }
    return a;
}

/// Exact quotient a / b; throws if the division leaves a remainder.
inline UniPoly uni_div_exact(UniPoly a, const UniPoly& b)
{
    UniPoly q;
    const int db = uni_degree(b);
    const Rational lc_b = b.rbegin()->second;
    while (uni_degree(a) >= db) {
        const int da = uni_degree(a);
        const Rational f = a.rbegin()->second / lc_b;
        q[da - db] += f;
        for (const auto& [e, c] : b)
            a[e + da - db] -= f * c;
        uni_trim(a);
    }
    if (!a.empty())
        throw std::domain_error("series: inexact polynomial division");
    uni_trim(q);
    return q;
}

inline UniPoly uni_monic(UniPoly p)
{
    if (p.empty())
        return p;
    const Rational lc = p.rbegin()->second;
    for (auto& [e, c] : p)
        c /= lc;
    return p;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b)
{
    while (!b.empty()) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(std::move(a));
}

} // namespace detail

/// Rational function in t: integer numerator polynomial over a multiset of
/// (1 - t^k) factors. Kept canonical: common (1 - t^k) factors are cancelled
/// greedily by exact division; the zero series has an empty denominator.
/// Equality is decided by cross-multiplication, never by truncation.
class RationalSeries {
public:
    RationalSeries() = default;

    RationalSeries(TPoly numerator, std::multiset<int> denominator)
        : num_(std::move(numerator)), den_(std::move(denominator))
    {
        for (int k : den_)
            if (k <= 0 || k % 2 != 0)
                throw std::invalid_argument("RationalSeries: denominator exponents must be even positive");
        canonicalize();
    }

    static RationalSeries from_poly(TPoly p) { return RationalSeries(std::move(p), {}); }
    static RationalSeries zero() { return RationalSeries(); }
    static RationalSeries one() { return from_poly(TPoly::one()); }

    const TPoly& numerator() const { return num_; }
    const std::multiset<int>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b)
    {
        // lcm-style common denominator: max multiplicity per factor
        std::multiset<int> common = merge_max(a.den_, b.den_);
        TPoly na = a.num_ * product_of(missing(common, a.den_));
        TPoly nb = b.num_ * product_of(missing(common, b.den_));
        return RationalSeries(na + nb, std::move(common));
    }

    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b)
    {
        std::multiset<int> common = merge_max(a.den_, b.den_);
        TPoly na = a.num_ * product_of(missing(common, a.den_));
        TPoly nb = b.num_ * product_of(missing(common, b.den_));
        return RationalSeries(na - nb, std::move(common));
    }

    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b)
    {
        std::multiset<int> den = a.den_;
        den.insert(b.den_.begin(), b.den_.end());
        return RationalSeries(a.num_ * b.num_, std::move(den));
    }

    /// a / b. The divisor's numerator must be (a scalar multiple of) a product
    /// of cyclotomic factors, i.e. divide some product of (1 - t^k); every
    /// series in this library has that shape. Throws on division by zero or a
    /// non-representable quotient.
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b)
    {
        if (b.is_zero())
            throw std::domain_error("RationalSeries: division by zero series");
        if (a.is_zero())
            return RationalSeries();
        TPoly num = a.num_ * product_of(b.den_);
        std::multiset<int> den = a.den_;

        detail::UniPoly r = detail::uni_from_tpoly(b.num_);
        detail::UniPoly cofactor{{0, Rational(1)}};
        const int deg_u = detail::uni_degree(r);
        const int max_m = std::max(8, 2 * deg_u * deg_u + 2);
        while (detail::uni_degree(r) > 0) {
            bool peeled = false;
            for (int m = 1; m <= max_m && !peeled; ++m) {
                detail::UniPoly g = detail::uni_gcd(r, detail::uni_one_minus_um(m));
                if (detail::uni_degree(g) > 0) {
                    r = detail::uni_div_exact(r, g);
                    cofactor = detail::uni_mul(cofactor, detail::uni_div_exact(detail::uni_one_minus_um(m), g));
                    den.insert(2 * m);
                    peeled = true;
                }
            }
            if (!peeled)
                throw std::domain_error("RationalSeries: divisor is not a product of cyclotomic factors");
        }
        if (r.empty())
            throw std::logic_error("RationalSeries: divisor collapsed to zero during peeling");
        const Rational scale = Rational(1) / r.begin()->second;

        // num * cofactor * scale must come out with integer coefficients
        detail::UniPoly result = detail::uni_from_tpoly(num);
        result = detail::uni_mul(result, cofactor);
        TPoly out;
        for (auto& [e, c] : result) {
            Rational v = c * scale;
            if (boost::multiprecision::denominator(v) != 1)
                throw std::domain_error("RationalSeries: quotient has non-integer coefficients");
            out.add_term(boost::multiprecision::numerator(v), 2 * e);
        }
        return RationalSeries(std::move(out), std::move(den));
    }

    /// Algebraic equality as rational functions (cross-multiplication).
    bool equals(const RationalSeries& other) const
    {
        return num_ * product_of(other.den_) == other.num_ * product_of(den_);
    }

    bool operator==(const RationalSeries& other) const { return equals(other); }
    bool operator!=(const RationalSeries& other) const { return !equals(other); }

    /// Coefficients of t^0, t^2, ..., t^order as exact integers.
    std::vector<Integer> expand_to(int order) const
    {
        if (order < 0 || order % 2 != 0)
            throw std::invalid_argument("expand_to: order must be even and nonnegative");
        std::vector<Integer> c(static_cast<std::size_t>(order / 2) + 1, Integer(0));
        for (const auto& [e, v] : num_.coefficients())
            if (e <= order)
                c[static_cast<std::size_t>(e / 2)] = v;
        for (int k : den_) {
            const int step = k / 2;
            for (std::size_t i = static_cast<std::size_t>(step); i < c.size(); ++i)
                c[i] += c[i - static_cast<std::size_t>(step)];
        }
        return c;
    }

private:
    static std::multiset<int> merge_max(const std::multiset<int>& a, const std::multiset<int>& b)
    {
        std::multiset<int> out = a;
        std::set<int> keys(b.begin(), b.end());
        for (int k : keys) {
            std::size_t need = b.count(k);
            std::size_t have = out.count(k);
            for (std::size_t i = have; i < need; ++i)
                out.insert(k);
        }
        return out;
    }

    /// Factors of `full` not accounted for by `part` (multiset difference).
    static std::multiset<int> missing(const std::multiset<int>& full, const std::multiset<int>& part)
    {
        std::multiset<int> out = full;
        for (int k : part)
            out.erase(out.find(k));
        return out;
    }

    static TPoly product_of(const std::multiset<int>& factors)
    {
        TPoly p = TPoly::one();
        for (int k : factors)
            p = p * TPoly::one_minus_tk(k);
        return p;
    }

    void canonicalize()
    {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            std::set<int> keys(den_.begin(), den_.end());
            for (int k : keys) {
                if (auto q = num_.divide_one_minus_tk(k)) {
                    num_ = std::move(*q);
                    den_.erase(den_.find(k));
                    progress = true;
                    break;
                }
            }
        }
    }

    TPoly num_;
    std::multiset<int> den_; // each k stands for a factor (1 - t^k)
};

struct StructuralChecks {
    bool is_polynomial = false;
    bool nonnegative = false;
    std::optional<bool> palindromic; // set only when is_polynomial
};

/// Sanity checks applied to final Poincaré-polynomial outputs. For
/// non-polynomial input, nonnegativity is checked on a finite expansion
/// prefix (numerator degree + denominator degrees + 64).
inline StructuralChecks structural_checks(const RationalSeries& s)
{
    StructuralChecks out;
    out.is_polynomial = s.is_polynomial();
    if (out.is_polynomial) {
        const TPoly& p = s.numerator();
        out.nonnegative = true;
        for (const auto& [e, c] : p.coefficients()) {
            (void)e;
            if (c < 0)
                out.nonnegative = false;
        }
        bool palin = true;
        if (!p.is_zero()) {
            const int d = p.degree();
            for (int e = 0; e <= d; e += 2)
                if (p.coefficient(e) != p.coefficient(d - e))
                    palin = false;
        }
        out.palindromic = palin;
    } else {
        int order = s.numerator().is_zero() ? 64 : s.numerator().degree() + 64;
        for (int k : s.denominator())
            order += k;
        out.nonnegative = true;
        for (const Integer& c : s.expand_to(order))
            if (c < 0)
                out.nonnegative = false;
    }
    return out;
}

inline std::string to_text(const TPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.coefficients()) {
        Integer abs_c = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0)
            os << abs_c.str();
        else if (abs_c == 1)
            os << "t^" << e;
        else
            os << abs_c.str() << "*t^" << e;
    }
    return os.str();
}

inline std::string to_text(const RationalSeries& s)
{
    std::ostringstream os;
    os << "(" << to_text(s.numerator()) << ")";
    if (!s.denominator().empty()) {
        os << " / (";
        std::set<int> keys(s.denominator().begin(), s.denominator().end());
        bool first = true;
        for (int k : keys) {
            if (!first)
                os << "*";
            os << "(1-t^" << k << ")";
            const std::size_t mult = s.denominator().count(k);
            if (mult > 1)
                os << "^" << mult;
            first = false;
        }
        os << ")";
    }
    return os.str();
}

} // namespace quotcoh
