#pragma once

#include "quotcoh/graded_ring.hpp"
#include "quotcoh/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quotcoh {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// GradedRing. Terms are kept in ascending monomial order, so rbegin() is the
/// leading term; zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit MultiPoly(RingPtr ring)
        : ring_(check_ring(std::move(ring))), terms_(MonomialLess{ring_weights(*ring_)})
    {
    }

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }

    static MultiPoly constant(RingPtr ring, const Rational& c)
    {
        MultiPoly p(std::move(ring));
        if (c != 0)
            p.terms_.emplace(monomial_one(*p.ring_), c);
        return p;
    }

    static MultiPoly one(RingPtr ring) { return constant(std::move(ring), 1); }

    static MultiPoly generator(RingPtr ring, const std::string& name)
    {
        MultiPoly p(std::move(ring));
        Monomial m = monomial_one(*p.ring_);
        m.exp[p.ring_->index_of(name)] = 1;
        p.terms_.emplace(std::move(m), 1);
        return p;
    }

    static MultiPoly term(RingPtr ring, Monomial m, const Rational& c)
    {
        MultiPoly p(std::move(ring));
        if (m.exp.size() != p.ring_->size())
            throw std::invalid_argument("MultiPoly::term: exponent vector length mismatch");
        if (c != 0)
            p.terms_.emplace(std::move(m), c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Monomial& leading_monomial() const
    {
        if (is_zero())
            throw std::domain_error("MultiPoly: zero polynomial has no leading monomial");
        return terms_.rbegin()->first;
    }

    const Rational& leading_coefficient() const
    {
        if (is_zero())
            throw std::domain_error("MultiPoly: zero polynomial has no leading coefficient");
        return terms_.rbegin()->second;
    }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool operator==(const MultiPoly& other) const
    {
        return same_ring(ring_, other.ring_) &&
               std::equal(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end());
    }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    MultiPoly operator-() const
    {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& other)
    {
        require_same_ring(other);
        for (const auto& [m, c] : other.terms_)
            add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& other)
    {
        require_same_ring(other);
        for (const auto& [m, c] : other.terms_)
            add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        a.require_same_ring(b);
        MultiPoly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p)
    {
        MultiPoly r(p.ring_);
        if (c == 0)
            return r;
        r.terms_ = p.terms_;
        for (auto& [m, v] : r.terms_)
            v *= c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }
    friend MultiPoly operator*(int c, const MultiPoly& p) { return Rational(c) * p; }
    friend MultiPoly operator*(const MultiPoly& p, int c) { return Rational(c) * p; }

    void require_same_ring(const MultiPoly& other) const
    {
        if (!same_ring(ring_, other.ring_))
            throw std::invalid_argument("MultiPoly: ring mismatch");
    }

private:
    static RingPtr check_ring(RingPtr r)
    {
        if (!r)
            throw std::invalid_argument("MultiPoly: null ring");
        return r;
    }

    RingPtr ring_;
    TermMap terms_;
};

inline MultiPoly pow(const MultiPoly& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    MultiPoly r = MultiPoly::one(f.ring());
    MultiPoly base = f;
    while (k > 0) {
        if (k & 1)
            r = r * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return r;
}

struct DegreeInfo {
    bool is_homogeneous = true;
    std::optional<int> weighted_degree; // empty for 0 and for inhomogeneous input
};

inline DegreeInfo degree_info(const MultiPoly& f)
{
    DegreeInfo info;
    const GradedRing& ring = *f.ring();
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        int d = weighted_degree(ring, m);
        if (!info.weighted_degree)
            info.weighted_degree = d;
        else if (*info.weighted_degree != d) {
            info.is_homogeneous = false;
            info.weighted_degree.reset();
            break;
        }
    }
    return info;
}

inline bool is_homogeneous(const MultiPoly& f) { return degree_info(f).is_homogeneous; }

/// Exact division f / g. Throws if g is zero or does not divide f.
inline MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g)
{
    f.require_same_ring(g);
    if (g.is_zero())
        throw std::domain_error("exact_divide: division by zero polynomial");
    MultiPoly q(f.ring());
    MultiPoly r = f;
    const Monomial& lm_g = g.leading_monomial();
    const Rational& lc_g = g.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lm_r = r.leading_monomial();
        if (!divides(lm_g, lm_r))
            throw std::domain_error("exact_divide: nonzero remainder");
        Monomial m = quotient(lm_r, lm_g);
        Rational c = r.leading_coefficient() / lc_g;
        MultiPoly t = MultiPoly::term(f.ring(), m, c);
        q += t;
        r -= t * g;
    }
    return q;
}

/// Splits f = even + var * odd, where both parts contain only even powers of
/// var. For f built from a symmetric construction this realizes
/// even = (f(v)+f(-v))/2 and odd = (f(v)-f(-v))/(2v).
inline std::pair<MultiPoly, MultiPoly> sym_pair(const MultiPoly& f, const std::string& var)
{
    const std::size_t idx = f.ring()->index_of(var);
    MultiPoly even(f.ring());
    MultiPoly odd(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m.exp[idx] % 2 == 0) {
            even.add_term(m, c);
        } else {
            Monomial reduced = m;
            reduced.exp[idx] -= 1;
            odd.add_term(reduced, c);
        }
    }
    return {std::move(even), std::move(odd)};
}

/// Rewrites var^{2k} as target^k. The result lives in the ring obtained from
/// f's ring by replacing var (weight w) with target (weight 2w) in place.
/// Throws if f carries an odd power of var.
inline MultiPoly collapse_even(const MultiPoly& f, const std::string& var, const std::string& target)
{
    const GradedRing& src = *f.ring();
    const std::size_t idx = src.index_of(var);
    if (src.find(target))
        throw std::invalid_argument("collapse_even: target name '" + target + "' already in ring");
    std::vector<std::pair<std::string, int>> gens = src.generators();
    gens[idx] = {target, 2 * src.weight(idx)};
    RingPtr out_ring = make_ring(std::move(gens));

    MultiPoly out(out_ring);
    for (const auto& [m, c] : f.terms()) {
        if (m.exp[idx] % 2 != 0)
            throw std::domain_error("collapse_even: odd power of '" + var + "' present");
        Monomial t = m;
        t.exp[idx] /= 2;
        out.add_term(t, c);
    }
    return out;
}

/// Applies the graded ring homomorphism determined by `images` into
/// `target`. Source generators missing from the map must exist in the target
/// ring with the same name and weight and are sent to themselves. Every image
/// must be homogeneous of the source generator's weight (zero is allowed).
inline MultiPoly substitute(const MultiPoly& f,
                            const std::map<std::string, MultiPoly>& images,
                            const RingPtr& target)
{
    const GradedRing& src = *f.ring();
    // image polynomials are resolved lazily, so partial maps are fine as long
    // as every generator actually occurring in f has an image or a same-named
    // counterpart in the target ring
    std::vector<std::optional<MultiPoly>> image_of(src.size());
    auto image = [&](std::size_t i) -> const MultiPoly& {
        if (!image_of[i]) {
            auto it = images.find(src.name(i));
            if (it != images.end()) {
                const MultiPoly& img = it->second;
                if (!same_ring(img.ring(), target))
                    throw std::invalid_argument("substitute: image not in target ring");
                DegreeInfo di = degree_info(img);
                if (!di.is_homogeneous ||
                    (di.weighted_degree && *di.weighted_degree != src.weight(i)))
                    throw std::invalid_argument("substitute: weight mismatch for generator '" +
                                                src.name(i) + "'");
                image_of[i] = img;
            } else {
                auto j = target->find(src.name(i));
                if (!j || target->weight(*j) != src.weight(i))
                    throw std::invalid_argument("substitute: generator '" + src.name(i) +
                                                "' has no image and no counterpart in target ring");
                image_of[i] = MultiPoly::generator(target, src.name(i));
            }
        }
        return *image_of[i];
    };

    MultiPoly out(target);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly term_val = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < src.size(); ++i)
            if (m.exp[i] > 0)
                term_val = term_val * pow(image(i), m.exp[i]);
        out += term_val;
    }
    return out;
}

/// Re-expresses f in `target`, which must contain every generator of f's ring
/// with the same name and weight (used to lift relations into enlarged rings).
inline MultiPoly lift_to_ring(const MultiPoly& f, const RingPtr& target)
{
    return substitute(f, {}, target);
}

inline std::string monomial_text(const GradedRing& ring, const Monomial& m)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0)
            continue;
        if (!first)
            os << "*";
        os << ring.name(i);
        if (m.exp[i] > 1)
            os << "^" << m.exp[i];
        first = false;
    }
    return os.str();
}

/// Canonical text form: terms in descending monomial order, exact
/// coefficients, byte-stable across runs.
inline std::string to_text(const MultiPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono = monomial_text(*f.ring(), m);
        if (mono.empty())
            os << rational_text(abs_c);
        else if (abs_c == 1)
            os << mono;
        else
            os << rational_text(abs_c) << "*" << mono;
    }
    return os.str();
}

} // namespace quotcoh
