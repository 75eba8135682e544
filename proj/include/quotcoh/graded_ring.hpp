#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quotcoh {

/// A polynomial ring with named generators carrying even positive weights
/// (cohomological degrees). Immutable after construction; pass around as
/// RingPtr and compare structurally.
class GradedRing {
public:
    explicit GradedRing(std::vector<std::pair<std::string, int>> generators)
        : gens_(std::move(generators))
    {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& [name, weight] = gens_[i];
            if (name.empty())
                throw std::invalid_argument("GradedRing: empty generator name");
            if (weight < 2 || weight % 2 != 0)
                throw std::invalid_argument("GradedRing: generator '" + name +
                                            "' must have even weight >= 2");
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].first == name)
                    throw std::invalid_argument("GradedRing: duplicate generator '" + name + "'");
        }
    }

    std::size_t size() const { return gens_.size(); }
    const std::string& name(std::size_t i) const { return gens_[i].first; }
    int weight(std::size_t i) const { return gens_[i].second; }
    const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }

    std::optional<std::size_t> find(const std::string& generator_name) const
    {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].first == generator_name)
                return i;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& generator_name) const
    {
        if (auto i = find(generator_name))
            return *i;
        throw std::invalid_argument("GradedRing: no generator named '" + generator_name + "'");
    }

    bool operator==(const GradedRing& other) const { return gens_ == other.gens_; }
    bool operator!=(const GradedRing& other) const { return !(*this == other); }

private:
    std::vector<std::pair<std::string, int>> gens_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline RingPtr make_ring(std::vector<std::pair<std::string, int>> generators)
{
    return std::make_shared<const GradedRing>(std::move(generators));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

/// Exponent vector aligned with a ring's generator list.
struct Monomial {
    std::vector<int> exp;

    bool operator==(const Monomial& other) const { return exp == other.exp; }
    bool operator!=(const Monomial& other) const { return exp != other.exp; }

    bool is_one() const
    {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }
};

inline Monomial monomial_one(const GradedRing& ring)
{
    return Monomial{std::vector<int>(ring.size(), 0)};
}

inline Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m = a;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        m.exp[i] += b.exp[i];
    return m;
}

inline bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i])
            return false;
    return true;
}

/// b / a, caller guarantees divisibility.
inline Monomial quotient(const Monomial& b, const Monomial& a)
{
    Monomial m = b;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        m.exp[i] -= a.exp[i];
    return m;
}

inline Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial m = a;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        m.exp[i] = std::max(m.exp[i], b.exp[i]);
    return m;
}

inline bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0)
            return false;
    return true;
}

inline int weighted_degree(const GradedRing& ring, const Monomial& m)
{
    int d = 0;
    for (std::size_t i = 0; i < m.exp.size(); ++i)
        d += m.exp[i] * ring.weight(i);
    return d;
}

/// The library's one monomial order: weighted degree first; ties broken
/// lexicographically with the *smaller* exponent vector counting as the
/// larger monomial. Total, multiplicative, and graded.
inline bool monomial_less(const std::vector<int>& weights, const Monomial& a, const Monomial& b)
{
    int da = 0, db = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        da += a.exp[i] * weights[i];
        db += b.exp[i] * weights[i];
    }
    if (da != db)
        return da < db;
    return std::lexicographical_compare(b.exp.begin(), b.exp.end(), a.exp.begin(), a.exp.end());
}

/// Map comparator for term storage; keeps its own copy of the weights so it
/// never dangles.
struct MonomialLess {
    std::vector<int> weights;

    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return monomial_less(weights, a, b);
    }
};

inline std::vector<int> ring_weights(const GradedRing& ring)
{
    std::vector<int> w(ring.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = ring.weight(i);
    return w;
}

} // namespace quotcoh
