#ifndef SINCOV_RELATION_HPP
#define SINCOV_RELATION_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "sincov/errors.hpp"
#include "sincov/ids.hpp"

namespace sincov
{

// Ordered pair (first, second). Inside a Sincov system the convention is
// (b, a) in Phi(alpha, beta) iff a is the value at alpha of the trajectory
// passing through b at beta.
struct Pair
{
    ElementId first;
    ElementId second;

    friend bool operator==(Pair const&, Pair const&) = default;
    friend auto operator<=>(Pair const&, Pair const&) = default;
};

using ElementSet = std::set<ElementId>;

// Finite binary relation with set semantics. Pairs are kept ordered by their
// serialized components, so iteration is canonical.
class Relation
{
public:
    using container_type = std::set<Pair>;
    using const_iterator = container_type::const_iterator;

    Relation() = default;
    Relation(std::initializer_list<Pair> pairs) : pairs_(pairs) {}
    explicit Relation(container_type pairs) : pairs_(std::move(pairs)) {}

    // Convenience for tests and literals: {{"1","2"},{"3","4"}}.
    static Relation of(std::initializer_list<std::pair<char const*, char const*>> pairs);

    bool insert(ElementId first, ElementId second)
    {
        return pairs_.insert(Pair{std::move(first), std::move(second)}).second;
    }
    bool insert(Pair pair) { return pairs_.insert(std::move(pair)).second; }
    bool erase(Pair const& pair) { return pairs_.erase(pair) != 0; }

    bool contains(Pair const& pair) const { return pairs_.count(pair) != 0; }
    bool contains(ElementId const& first, ElementId const& second) const
    {
        return contains(Pair{first, second});
    }

    bool empty() const noexcept { return pairs_.empty(); }
    std::size_t size() const noexcept { return pairs_.size(); }

    const_iterator begin() const noexcept { return pairs_.begin(); }
    const_iterator end() const noexcept { return pairs_.end(); }

    container_type const& pairs() const noexcept { return pairs_; }

    friend bool operator==(Relation const&, Relation const&) = default;

private:
    container_type pairs_;
};

// Thrown by apply() when the relation maps one point to two values.
class CoinjectivityViolated : public Error
{
public:
    CoinjectivityViolated(ElementId point, ElementId value1, ElementId value2);

    ElementId const& point() const noexcept { return point_; }
    std::pair<ElementId, ElementId> const& values() const noexcept { return values_; }

private:
    ElementId point_;
    std::pair<ElementId, ElementId> values_;
};

// rho o sigma = {(a, b) | exists c: (c, b) in rho and (a, c) in sigma};
// sigma is applied first.
Relation compose(Relation const& rho, Relation const& sigma);

Relation inverse(Relation const& rho);

ElementSet domain(Relation const& rho);
ElementSet range(Relation const& rho);

Relation identity_on(ElementSet const& points);

// No second component is shared by two distinct first components.
bool is_injective(Relation const& rho);
// No first component is shared by two distinct second components.
bool is_coinjective(Relation const& rho);

inline bool is_partial_bijection(Relation const& rho)
{
    return is_injective(rho) && is_coinjective(rho);
}

bool is_subrelation(Relation const& rho, Relation const& sigma);

// A pair of rho sharing its second component with another pair (for
// injectivity) or its first component (for co-injectivity). Used to build
// witnesses; absent when the predicate holds.
std::optional<std::pair<Pair, Pair>> injectivity_witness(Relation const& rho);
std::optional<std::pair<Pair, Pair>> coinjectivity_witness(Relation const& rho);

// The unique a with (b, a) in rho. Throws CoinjectivityViolated if b has two
// images; returns nullopt when b is outside the domain.
std::optional<ElementId> apply(Relation const& rho, ElementId const& b);

// Image of a set of points: {a | (b, a) in rho, b in points}.
ElementSet image(Relation const& rho, ElementSet const& points);

} // namespace sincov

#endif // SINCOV_RELATION_HPP
