#include "sincov/sincov.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sincov
{

namespace
{

Relation const empty_relation{};

std::string describe(std::vector<IndexId> const& indices)
{
    std::string out = "(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            out += ",";
        out += indices[i].str();
    }
    return out + ")";
}

std::string describe(Pair const& pair)
{
    return "(" + pair.first.str() + "," + pair.second.str() + ")";
}

// Union-find that keeps the smallest node id as root, so the root of every
// class is its lexicographically least node.
class DisjointSets
{
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        std::size_t root = x;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[x] != root)
            x = std::exchange(parent_[x], root);
        return root;
    }

    void unite(std::size_t x, std::size_t y)
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return;
        if (y < x)
            std::swap(x, y);
        parent_[y] = x;
    }

private:
    std::vector<std::size_t> parent_;
};

// First pair of lhs outside rhs, if any.
std::optional<Pair> first_difference(Relation const& lhs, Relation const& rhs)
{
    for (auto const& pair : lhs)
        if (!rhs.contains(pair))
            return pair;
    return std::nullopt;
}

std::optional<Pair> symmetric_difference_witness(Relation const& lhs, Relation const& rhs)
{
    if (auto p = first_difference(lhs, rhs))
        return p;
    return first_difference(rhs, lhs);
}

} // namespace

Relation const& SincovSystem::at(IndexId const& alpha, IndexId const& beta) const
{
    auto it = entries_.find(key_type{alpha, beta});
    return it == entries_.end() ? empty_relation : it->second;
}

void SincovSystem::require(IndexId const& alpha) const
{
    if (!has_index(alpha))
        throw UnknownIndex(alpha);
}

void SincovSystem::set(IndexId const& alpha, IndexId const& beta, Relation relation)
{
    require(alpha);
    require(beta);
    if (relation.empty())
        entries_.erase(key_type{alpha, beta});
    else
        entries_[key_type{alpha, beta}] = std::move(relation);
}

void SincovSystem::insert(IndexId const& alpha, IndexId const& beta, Pair pair)
{
    require(alpha);
    require(beta);
    entries_[key_type{alpha, beta}].insert(std::move(pair));
}

ElementSet SincovSystem::elements() const
{
    ElementSet result;
    for (auto const& [key, relation] : entries_) {
        for (auto const& [b, a] : relation) {
            result.insert(b);
            result.insert(a);
        }
    }
    return result;
}

bool LawFilter::enabled(Law law) const noexcept
{
    switch (law) {
    case Law::Transitivity:
        return transitivity;
    case Law::Symmetry:
        return symmetry;
    case Law::IdentityContainment:
        return identity;
    }
    return false;
}

std::vector<ViolationReport> check_sincov(SincovSystem const& system, LawFilter laws)
{
    std::vector<ViolationReport> reports;
    auto const& indices = system.indices();

    if (laws.transitivity) {
        for (auto const& alpha : indices) {
            for (auto const& beta : indices) {
                auto const& ab = system.at(alpha, beta);
                if (ab.empty())
                    continue;
                for (auto const& gamma : indices) {
                    auto const& bc = system.at(beta, gamma);
                    if (bc.empty())
                        continue;
                    auto const& ac = system.at(alpha, gamma);
                    for (auto const& pair : compose(ab, bc))
                        if (!ac.contains(pair))
                            reports.push_back({Law::Transitivity, {alpha, beta, gamma}, pair});
                }
            }
        }
    }

    if (laws.symmetry) {
        for (auto const& alpha : indices) {
            for (auto const& beta : indices) {
                auto const& ba = system.at(beta, alpha);
                for (auto const& pair : inverse(system.at(alpha, beta)))
                    if (!ba.contains(pair))
                        reports.push_back({Law::Symmetry, {alpha, beta}, pair});
            }
        }
    }

    if (laws.identity) {
        for (auto const& alpha : indices)
            for (auto const& pair : system.at(alpha, alpha))
                if (pair.first != pair.second)
                    reports.push_back({Law::IdentityContainment, {alpha}, pair});
    }

    std::sort(reports.begin(), reports.end());
    return reports;
}

PreconditionViolated::PreconditionViolated(std::vector<ViolationReport> violations)
    : Error("system violates Sincov's inequality: " +
            (violations.empty() ? std::string("?")
                                : std::string(to_string(violations.front().law)) + " at " +
                                      describe(violations.front().indices) + " on " +
                                      describe(violations.front().pair))),
      violations_(std::move(violations))
{
}

InvalidAtlas::InvalidAtlas(ChartViolation violation)
    : Error("chart '" + violation.index.str() + "' fails " + to_string(violation.predicate)),
      violation_(std::move(violation))
{
}

EqualityCaseViolated::EqualityCaseViolated(Law law, std::vector<IndexId> indices,
                                           std::optional<Pair> pair)
    : Error(std::string("equality case fails for ") + to_string(law) + " at " +
            describe(indices) + (pair ? " on " + describe(*pair) : std::string())),
      law_(law),
      indices_(std::move(indices)),
      pair_(std::move(pair))
{
}

ElementId class_id(IndexId const& alpha, ElementId const& a)
{
    return ElementId("cls:" + alpha.str() + ":" + a.str());
}

Atlas solve_atlas(SincovSystem const& system)
{
    if (auto violations = check_sincov(system); !violations.empty())
        throw PreconditionViolated(std::move(violations));

    using Node = std::pair<IndexId, ElementId>;
    std::map<Node, std::size_t> node_ids;
    for (auto const& [key, relation] : system.entries()) {
        auto const& [alpha, beta] = key;
        for (auto const& [b, a] : relation) {
            node_ids.emplace(Node{alpha, a}, 0);
            node_ids.emplace(Node{beta, b}, 0);
        }
    }

    std::vector<Node const*> nodes;
    nodes.reserve(node_ids.size());
    for (auto& [node, id] : node_ids) {
        id = nodes.size();
        nodes.push_back(&node);
    }

    DisjointSets classes(nodes.size());
    for (auto const& [key, relation] : system.entries()) {
        auto const& [alpha, beta] = key;
        for (auto const& [b, a] : relation)
            classes.unite(node_ids.at(Node{alpha, a}), node_ids.at(Node{beta, b}));
    }

    Atlas atlas;
    for (auto const& alpha : system.indices())
        atlas.charts[alpha];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto const& [alpha, a] = *nodes[i];
        auto const& root = *nodes[classes.find(i)];
        atlas.charts[alpha].insert(class_id(root.first, root.second), a);
    }
    return atlas;
}

SincovSystem reconstruct(Atlas const& atlas)
{
    if (auto violations = validate_atlas(atlas); !violations.empty())
        throw InvalidAtlas(violations.front());

    SincovSystem system(atlas.indices());
    for (auto const& [alpha, chart_a] : atlas.charts)
        for (auto const& [beta, chart_b] : atlas.charts)
            system.set(alpha, beta, compose(chart_a, inverse(chart_b)));
    return system;
}

Atlas solve_via_fixed_index(SincovSystem const& system, IndexId const& gamma)
{
    if (!system.has_index(gamma))
        throw UnknownIndex(gamma);

    auto const& indices = system.indices();

    for (auto const& alpha : indices)
        for (auto const& pair : system.at(alpha, alpha))
            if (pair.first != pair.second)
                throw EqualityCaseViolated(Law::IdentityContainment, {alpha}, pair);

    for (auto const& alpha : indices)
        for (auto const& beta : indices)
            if (auto p = symmetric_difference_witness(inverse(system.at(alpha, beta)),
                                                      system.at(beta, alpha)))
                throw EqualityCaseViolated(Law::Symmetry, {alpha, beta}, p);

    for (auto const& alpha : indices)
        for (auto const& beta : indices)
            for (auto const& delta : indices)
                if (auto p = symmetric_difference_witness(
                        compose(system.at(alpha, beta), system.at(beta, delta)),
                        system.at(alpha, delta)))
                    throw EqualityCaseViolated(Law::Transitivity, {alpha, beta, delta}, p);

    Atlas atlas;
    for (auto const& alpha : indices)
        atlas.charts[alpha] = system.at(alpha, gamma);
    return atlas;
}

char const* to_string(Law law) noexcept
{
    switch (law) {
    case Law::Transitivity:
        return "transitivity";
    case Law::Symmetry:
        return "symmetry";
    case Law::IdentityContainment:
        return "identity";
    }
    return "?";
}

} // namespace sincov
