#include "sincov/flows.hpp"

#include <limits>

namespace sincov
{

namespace
{

// tau - alpha for discrete kinds, as a machine integer.
long long integer_steps(FlowSpec const& spec, Rational const& tau, Rational const& alpha)
{
    if (!tau.is_integer() || !alpha.is_integer())
        throw KindMismatch(std::string(to_string(spec.kind())) +
                           " flow needs integer times, got " + tau.str() + " and " +
                           alpha.str());
    Integer const steps = tau.numerator() - alpha.numerator();
    if (steps > std::numeric_limits<long long>::max() ||
        steps < std::numeric_limits<long long>::min() + 1)
        throw DomainExceeded("time difference " + steps.str() + " out of range");
    return steps.convert_to<long long>();
}

Rational power_of_two(long long exponent)
{
    Integer p = 1;
    p <<= static_cast<unsigned long long>(exponent < 0 ? -exponent : exponent);
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p, Integer(1));
}

} // namespace

FlowSpec FlowSpec::permutation(std::map<ElementId, ElementId> table)
{
    FlowSpec spec(FlowKind::Permutation);
    for (auto const& [from, to] : table) {
        if (!table.count(to))
            throw InvalidFlow("permutation maps '" + from.str() + "' outside its carrier to '" +
                              to.str() + "'");
        auto [it, fresh] = spec.inverse_table_.emplace(to, from);
        if (!fresh)
            throw InvalidFlow("permutation maps both '" + it->second.str() + "' and '" +
                              from.str() + "' to '" + to.str() + "'");
    }
    spec.table_ = std::move(table);
    return spec;
}

std::optional<ElementId> flow_eval(FlowSpec const& spec, Rational const& tau,
                                   Rational const& alpha, ElementId const& a)
{
    if (spec.kind() != FlowKind::Permutation) {
        auto value = flow_eval(spec, tau, alpha, Rational::parse(a.str()));
        if (!value)
            return std::nullopt;
        return ElementId(value->str());
    }

    long long steps = integer_steps(spec, tau, alpha);
    if (!spec.table_.count(a))
        return std::nullopt;

    long long cycle = 1;
    for (auto x = spec.table_.at(a); x != a; x = spec.table_.at(x))
        ++cycle;
    steps %= cycle;
    if (steps < 0)
        steps += cycle;

    ElementId x = a;
    for (long long i = 0; i < steps; ++i)
        x = spec.table_.at(x);
    return x;
}

std::optional<Rational> flow_eval(FlowSpec const& spec, Rational const& tau,
                                  Rational const& alpha, Rational const& a)
{
    switch (spec.kind()) {
    case FlowKind::Translation:
        return a + (tau - alpha);
    case FlowKind::BlowUp: {
        Rational const denominator = Rational(1) - a * (tau - alpha);
        if (denominator.sign() <= 0)
            return std::nullopt;
        return a / denominator;
    }
    case FlowKind::DiscreteDoubling:
        return power_of_two(integer_steps(spec, tau, alpha)) * a;
    case FlowKind::Permutation: {
        auto value = flow_eval(spec, tau, alpha, ElementId(a.str()));
        if (!value)
            return std::nullopt;
        try {
            return Rational::parse(value->str());
        } catch (ParseError const&) {
            throw KindMismatch("permutation label '" + value->str() + "' is not a rational");
        }
    }
    }
    return std::nullopt;
}

std::map<Rational, ElementId> trajectory(FlowSpec const& spec, std::set<Rational> const& grid,
                                         Seed const& seed)
{
    std::map<Rational, ElementId> result;
    for (auto const& t : grid)
        if (auto x = flow_eval(spec, t, seed.time, seed.value))
            result.emplace(t, std::move(*x));
    return result;
}

SincovSystem build_system(FlowSpec const& spec, std::set<Rational> const& grid,
                          std::vector<Seed> const& seeds)
{
    if (spec.is_discrete())
        for (auto const& t : grid)
            if (!t.is_integer())
                throw KindMismatch(std::string(to_string(spec.kind())) +
                                   " flow needs integer grid times, got " + t.str());

    SincovSystem system;
    for (auto const& t : grid)
        system.add_index(time_index(t));

    for (auto const& seed : seeds) {
        if (!grid.count(seed.time))
            throw InvalidFlow("seed time " + seed.time.str() + " is not on the grid");
        auto const path = trajectory(spec, grid, seed);
        for (auto const& [alpha, x_alpha] : path)
            for (auto const& [beta, x_beta] : path)
                system.insert(time_index(alpha), time_index(beta), Pair{x_beta, x_alpha});
    }
    return system;
}

Rational vector_field(FlowSpec const& spec, Rational const&, Rational const& x)
{
    switch (spec.kind()) {
    case FlowKind::Translation:
        return 1;
    case FlowKind::BlowUp:
        return x * x;
    default:
        throw KindMismatch(std::string(to_string(spec.kind())) + " flow has no vector field");
    }
}

Rational vector_field_residual(FlowSpec const& spec, Rational const& tau, Rational const& x,
                               Rational const& h)
{
    Rational const f = vector_field(spec, tau, x);
    if (h.sign() == 0)
        throw InvalidFlow("difference step must be nonzero");
    auto const next = flow_eval(spec, tau + h, tau, x);
    if (!next)
        throw DomainExceeded("F(" + (tau + h).str() + ", " + tau.str() + ", " + x.str() +
                             ") is undefined");
    return abs((*next - x) / h - f);
}

char const* to_string(FlowKind kind) noexcept
{
    switch (kind) {
    case FlowKind::Translation:
        return "translation";
    case FlowKind::BlowUp:
        return "blowup";
    case FlowKind::DiscreteDoubling:
        return "doubling";
    case FlowKind::Permutation:
        return "permutation";
    }
    return "?";
}

} // namespace sincov
