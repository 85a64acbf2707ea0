#include "sincov/relation.hpp"

#include <map>
#include <vector>

namespace sincov
{

Relation Relation::of(std::initializer_list<std::pair<char const*, char const*>> pairs)
{
    Relation result;
    for (auto const& [first, second] : pairs)
        result.insert(ElementId(first), ElementId(second));
    return result;
}

CoinjectivityViolated::CoinjectivityViolated(ElementId point, ElementId value1, ElementId value2)
    : Error("relation is not co-injective at '" + point.str() + "' ('" + value1.str() +
            "' and '" + value2.str() + "')"),
      point_(std::move(point)),
      values_(std::move(value1), std::move(value2))
{
}

Relation compose(Relation const& rho, Relation const& sigma)
{
    // index rho by its first component, then chain every (a, c) in sigma
    std::map<ElementId, std::vector<ElementId const*>> rho_by_first;
    for (auto const& [c, b] : rho)
        rho_by_first[c].push_back(&b);

    Relation result;
    for (auto const& [a, c] : sigma) {
        auto it = rho_by_first.find(c);
        if (it == rho_by_first.end())
            continue;
        for (ElementId const* b : it->second)
            result.insert(a, *b);
    }
    return result;
}

Relation inverse(Relation const& rho)
{
    Relation result;
    for (auto const& [b, a] : rho)
        result.insert(a, b);
    return result;
}

ElementSet domain(Relation const& rho)
{
    ElementSet result;
    for (auto const& pair : rho)
        result.insert(result.end(), pair.first);
    return result;
}

ElementSet range(Relation const& rho)
{
    ElementSet result;
    for (auto const& pair : rho)
        result.insert(pair.second);
    return result;
}

Relation identity_on(ElementSet const& points)
{
    Relation result;
    for (auto const& x : points)
        result.insert(x, x);
    return result;
}

std::optional<std::pair<Pair, Pair>> injectivity_witness(Relation const& rho)
{
    std::map<ElementId, Pair const*> seen;
    for (auto const& pair : rho) {
        auto [it, fresh] = seen.emplace(pair.second, &pair);
        if (!fresh)
            return std::pair{*it->second, pair};
    }
    return std::nullopt;
}

std::optional<std::pair<Pair, Pair>> coinjectivity_witness(Relation const& rho)
{
    // pairs are sorted by first component, so a repeat is always adjacent
    Pair const* previous = nullptr;
    for (auto const& pair : rho) {
        if (previous && previous->first == pair.first)
            return std::pair{*previous, pair};
        previous = &pair;
    }
    return std::nullopt;
}

bool is_injective(Relation const& rho)
{
    return !injectivity_witness(rho);
}

bool is_coinjective(Relation const& rho)
{
    return !coinjectivity_witness(rho);
}

bool is_subrelation(Relation const& rho, Relation const& sigma)
{
    if (rho.size() > sigma.size())
        return false;
    for (auto const& pair : rho)
        if (!sigma.contains(pair))
            return false;
    return true;
}

std::optional<ElementId> apply(Relation const& rho, ElementId const& b)
{
    auto it = rho.pairs().lower_bound(Pair{b, ElementId{}});
    if (it == rho.end() || it->first != b)
        return std::nullopt;
    auto next = std::next(it);
    if (next != rho.end() && next->first == b)
        throw CoinjectivityViolated(b, it->second, next->second);
    return it->second;
}

ElementSet image(Relation const& rho, ElementSet const& points)
{
    ElementSet result;
    for (auto const& [b, a] : rho)
        if (points.count(b))
            result.insert(a);
    return result;
}

} // namespace sincov
