#ifndef SINCOV_FLOWS_HPP
#define SINCOV_FLOWS_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sincov/errors.hpp"
#include "sincov/ids.hpp"
#include "sincov/rational.hpp"
#include "sincov/sincov.hpp"

namespace sincov
{

// Closed-form partial flows F(tau, alpha, a): the state at time tau of the
// solution passing through a at time alpha.
//
//   Translation       x' = 1     F = a + (tau - alpha)                  total
//   BlowUp            x' = x^2   F = a / (1 - a (tau - alpha))   iff 1 - a (tau - alpha) > 0
//   DiscreteDoubling  x+ = 2x    F = 2^(tau - alpha) a           integer times
//   Permutation       x+ = g(x)  F = g^(tau - alpha)(a)          integer times, finite carrier
//
// The BlowUp predicate is the maximal interval of existence for either sign
// of a: the pole 1/a lies ahead of alpha for a > 0, behind it for a < 0.
enum class FlowKind
{
    Translation,
    BlowUp,
    DiscreteDoubling,
    Permutation,
};

class KindMismatch : public Error
{
public:
    using Error::Error;
};

class DomainExceeded : public Error
{
public:
    using Error::Error;
};

// Ill-formed flow data: a permutation table that is not a bijection, a seed
// off the time grid, a zero step.
class InvalidFlow : public Error
{
public:
    using Error::Error;
};

class FlowSpec
{
public:
    static FlowSpec translation() { return FlowSpec(FlowKind::Translation); }
    static FlowSpec blow_up() { return FlowSpec(FlowKind::BlowUp); }
    static FlowSpec doubling() { return FlowSpec(FlowKind::DiscreteDoubling); }
    // Throws InvalidFlow unless the table is a bijection of its key set.
    static FlowSpec permutation(std::map<ElementId, ElementId> table);

    FlowKind kind() const noexcept { return kind_; }
    bool is_discrete() const noexcept
    {
        return kind_ == FlowKind::DiscreteDoubling || kind_ == FlowKind::Permutation;
    }
    std::map<ElementId, ElementId> const& table() const noexcept { return table_; }

private:
    explicit FlowSpec(FlowKind kind) : kind_(kind) {}

    FlowKind kind_;
    std::map<ElementId, ElementId> table_;
    std::map<ElementId, ElementId> inverse_table_;

    friend std::optional<ElementId> flow_eval(FlowSpec const&, Rational const&, Rational const&,
                                              ElementId const&);
};

struct Seed
{
    Rational time;
    ElementId value;
};

// State-level evaluation; element ids of numeric kinds are canonical
// rationals. Returns nullopt outside the flow's domain. Throws KindMismatch
// for non-integer times on discrete kinds, ParseError for a non-rational
// state of a numeric kind.
std::optional<ElementId> flow_eval(FlowSpec const& spec, Rational const& tau,
                                   Rational const& alpha, ElementId const& a);

// Rational-valued evaluation. For Permutation the carrier labels must be
// rational literals, else KindMismatch.
std::optional<Rational> flow_eval(FlowSpec const& spec, Rational const& tau,
                                  Rational const& alpha, Rational const& a);

// Values of the seed's solution on the grid, wherever it is defined.
std::map<Rational, ElementId> trajectory(FlowSpec const& spec, std::set<Rational> const& grid,
                                         Seed const& seed);

// Indices are the grid times; Phi(alpha, beta) collects (x(beta), x(alpha))
// over every seed trajectory x defined at both times. Throws KindMismatch,
// InvalidFlow.
SincovSystem build_system(FlowSpec const& spec, std::set<Rational> const& grid,
                          std::vector<Seed> const& seeds);

// Right-hand side f(tau, x) of a continuous kind: 1 for Translation, x^2 for
// BlowUp.
Rational vector_field(FlowSpec const& spec, Rational const& tau, Rational const& x);

// |(F(tau + h, tau, x) - x) / h - f(tau, x)|. Throws KindMismatch for
// discrete kinds, InvalidFlow for h = 0, DomainExceeded when F(tau + h, tau, x)
// is undefined.
Rational vector_field_residual(FlowSpec const& spec, Rational const& tau, Rational const& x,
                               Rational const& h);

// Index id of a grid time.
inline IndexId time_index(Rational const& t)
{
    return IndexId(t.str());
}

char const* to_string(FlowKind kind) noexcept;

} // namespace sincov

#endif // SINCOV_FLOWS_HPP
