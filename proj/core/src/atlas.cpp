#include "sincov/atlas.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace sincov
{

namespace
{

std::string join(std::set<IndexId> const& ids)
{
    std::string out;
    for (auto const& id : ids) {
        if (!out.empty())
            out += ", ";
        out += id.str();
    }
    return out;
}

// (z, a) in chart -> z, for co-injective lookups keyed by a.
std::map<ElementId, ElementId> preimages(Relation const& chart)
{
    std::map<ElementId, ElementId> result;
    for (auto const& [z, a] : chart)
        result.emplace(a, z);
    return result;
}

ElementSet intersect(ElementSet const& lhs, ElementSet const& rhs)
{
    ElementSet result;
    std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                          std::inserter(result, result.end()));
    return result;
}

std::string describe(ElementSet const& points)
{
    std::string out = "{";
    for (auto const& p : points) {
        if (out.size() > 1)
            out += ",";
        out += p.str();
    }
    return out + "}";
}

} // namespace

std::set<IndexId> Atlas::indices() const
{
    std::set<IndexId> result;
    for (auto const& entry : charts)
        result.insert(result.end(), entry.first);
    return result;
}

Relation const& Atlas::chart(IndexId const& alpha) const
{
    auto it = charts.find(alpha);
    if (it == charts.end())
        throw UnknownIndex(alpha);
    return it->second;
}

NotIsomorphic::NotIsomorphic(NonIsomorphismWitness witness)
    : Error(std::string("atlases are not isomorphic (") + to_string(witness.kind) +
            "): " + witness.detail),
      witness_(std::move(witness))
{
}

IndexMismatch::IndexMismatch(std::set<IndexId> only_first, std::set<IndexId> only_second)
    : Error("index sets differ; only in first: [" + join(only_first) + "], only in second: [" +
            join(only_second) + "]"),
      only_first_(std::move(only_first)),
      only_second_(std::move(only_second))
{
}

std::vector<ChartViolation> validate_atlas(Atlas const& atlas)
{
    std::vector<ChartViolation> result;
    for (auto const& [alpha, chart] : atlas.charts) {
        if (auto w = injectivity_witness(chart))
            result.push_back({alpha, ChartPredicate::Injectivity, *w});
        if (auto w = coinjectivity_witness(chart))
            result.push_back({alpha, ChartPredicate::Coinjectivity, *w});
    }
    return result;
}

ElementSet carrier(Atlas const& atlas)
{
    ElementSet result;
    for (auto const& [alpha, chart] : atlas.charts)
        for (auto const& pair : chart)
            result.insert(pair.first);
    return result;
}

Relation transition(Atlas const& atlas, IndexId const& alpha, IndexId const& beta)
{
    return compose(atlas.chart(alpha), inverse(atlas.chart(beta)));
}

Isomorphism find_isomorphism(Atlas const& a1, Atlas const& a2)
{
    auto const i1 = a1.indices();
    auto const i2 = a2.indices();
    if (i1 != i2) {
        std::set<IndexId> only_first, only_second;
        std::set_difference(i1.begin(), i1.end(), i2.begin(), i2.end(),
                            std::inserter(only_first, only_first.end()));
        std::set_difference(i2.begin(), i2.end(), i1.begin(), i1.end(),
                            std::inserter(only_second, only_second.end()));
        throw IndexMismatch(std::move(only_first), std::move(only_second));
    }

    // Where each omega constraint came from, so conflicts can name a
    // distinguishing transition pair.
    struct Origin
    {
        IndexId alpha;
        ElementId value;
    };
    std::map<ElementId, std::pair<ElementId, Origin>> forward; // z -> (zbar, origin)
    std::map<ElementId, std::pair<ElementId, Origin>> backward; // zbar -> (z, origin)

    for (auto const& [alpha, chart] : a1.charts) {
        auto const lookup = preimages(a2.chart(alpha));
        for (auto const& [z, a] : chart) {
            auto hit = lookup.find(a);
            if (hit == lookup.end())
                throw NotIsomorphic({MismatchKind::MissingCounterpart, alpha, alpha, Pair{a, a},
                                     true,
                                     "element '" + a.str() + "' is charted at '" + alpha.str() +
                                         "' only in the first atlas"});
            ElementId const& zbar = hit->second;

            auto [fit, fresh] = forward.emplace(z, std::pair{zbar, Origin{alpha, a}});
            if (!fresh && fit->second.first != zbar) {
                // (c, a) in transition1(alpha, beta) through z; in the second
                // atlas a and c have different preimages.
                auto const& [beta, c] = fit->second.second;
                throw NotIsomorphic({MismatchKind::Conflict, alpha, beta, Pair{c, a}, true,
                                     "point '" + z.str() + "' is forced onto both '" +
                                         fit->second.first.str() + "' and '" + zbar.str() + "'"});
            }

            auto [bit, bfresh] = backward.emplace(zbar, std::pair{z, Origin{alpha, a}});
            if (!bfresh && bit->second.first != z) {
                auto const& [beta, c] = bit->second.second;
                throw NotIsomorphic({MismatchKind::Conflict, alpha, beta, Pair{c, a}, false,
                                     "points '" + bit->second.first.str() + "' and '" + z.str() +
                                         "' are both forced onto '" + zbar.str() + "'"});
            }
        }
    }

    for (auto const& [alpha, chart] : a2.charts) {
        auto const lookup = preimages(a1.chart(alpha));
        for (auto const& [zbar, a] : chart) {
            if (lookup.count(a))
                continue;
            bool const covered = backward.count(zbar) != 0;
            throw NotIsomorphic(
                {covered ? MismatchKind::MissingCounterpart : MismatchKind::CoverageGap, alpha,
                 alpha, Pair{a, a}, false,
                 covered ? "element '" + a.str() + "' is charted at '" + alpha.str() +
                               "' only in the second atlas"
                         : "point '" + zbar.str() + "' of the second carrier has no preimage"});
        }
    }

    Isomorphism iso;
    for (auto const& [z, target] : forward)
        iso.omega.insert(z, target.first);

    if (!verify_isomorphism(a1, a2, iso))
        throw std::logic_error("find_isomorphism: constructed omega fails verification");
    return iso;
}

bool verify_isomorphism(Atlas const& a1, Atlas const& a2, Isomorphism const& iso)
{
    if (a1.indices() != a2.indices())
        return false;
    if (!is_partial_bijection(iso.omega))
        return false;
    if (domain(iso.omega) != carrier(a1) || range(iso.omega) != carrier(a2))
        return false;
    for (auto const& [alpha, chart] : a1.charts)
        if (compose(a2.chart(alpha), iso.omega) != chart)
            return false;
    return true;
}

AxiomReport check_at_axioms(Atlas const& atlas)
{
    AxiomReport report;
    auto const points = carrier(atlas);

    ElementSet covered;
    for (auto const& [alpha, chart] : atlas.charts) {
        for (auto const& z : domain(chart)) {
            if (!points.count(z)) {
                report.at1.pass = false;
                report.at1.witnesses.push_back(
                    {alpha, std::nullopt, "chart domain point '" + z.str() + "' outside X"});
            }
            covered.insert(z);
        }
    }
    for (auto const& z : points) {
        if (!covered.count(z)) {
            report.at1.pass = false;
            report.at1.witnesses.push_back(
                {std::nullopt, std::nullopt, "point '" + z.str() + "' of X is not covered"});
        }
    }

    for (auto const& v : validate_atlas(atlas)) {
        report.at2.pass = false;
        auto const& [p, q] = v.witness;
        std::string what = v.predicate == ChartPredicate::Injectivity
                               ? "'" + p.first.str() + "' and '" + q.first.str() +
                                     "' share the value '" + p.second.str() + "'"
                               : "'" + p.first.str() + "' has two values '" + p.second.str() +
                                     "' and '" + q.second.str() + "'";
        report.at2.witnesses.push_back(
            {v.index, std::nullopt, std::string("chart is not a bijection onto its image: ") + what});
    }

    for (auto const& [alpha, chart_a] : atlas.charts) {
        auto const dom_a = domain(chart_a);
        for (auto const& [beta, chart_b] : atlas.charts) {
            auto const overlap = intersect(dom_a, domain(chart_b));
            auto const source = image(chart_b, overlap);
            auto const target = image(chart_a, overlap);
            auto const t = compose(chart_a, inverse(chart_b));
            auto fail = [&](std::string issue) {
                report.at3.pass = false;
                report.at3.witnesses.push_back({alpha, beta, std::move(issue)});
            };
            if (domain(t) != source)
                fail("transition domain " + describe(domain(t)) + " differs from overlap image " +
                     describe(source));
            if (range(t) != target)
                fail("transition range " + describe(range(t)) + " differs from overlap image " +
                     describe(target));
            if (!is_partial_bijection(t))
                fail("transition is not a bijection");
        }
    }
    return report;
}

char const* to_string(ChartPredicate predicate) noexcept
{
    switch (predicate) {
    case ChartPredicate::Injectivity:
        return "injectivity";
    case ChartPredicate::Coinjectivity:
        return "co-injectivity";
    }
    return "?";
}

char const* to_string(MismatchKind kind) noexcept
{
    switch (kind) {
    case MismatchKind::Conflict:
        return "conflict";
    case MismatchKind::MissingCounterpart:
        return "missing-counterpart";
    case MismatchKind::CoverageGap:
        return "coverage-gap";
    }
    return "?";
}

} // namespace sincov
