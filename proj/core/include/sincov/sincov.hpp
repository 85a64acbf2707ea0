#ifndef SINCOV_SINCOV_HPP
#define SINCOV_SINCOV_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sincov/atlas.hpp"
#include "sincov/errors.hpp"
#include "sincov/ids.hpp"
#include "sincov/relation.hpp"

namespace sincov
{

// Map (alpha, beta) -> Phi(alpha, beta) over a finite index set. Entries that
// were never set read as the empty relation; empty relations are not stored,
// so two systems compare equal iff they agree on every entry.
class SincovSystem
{
public:
    using key_type = std::pair<IndexId, IndexId>;
    using entry_map = std::map<key_type, Relation>;

    SincovSystem() = default;
    explicit SincovSystem(std::set<IndexId> indices) : indices_(std::move(indices)) {}

    void add_index(IndexId alpha) { indices_.insert(std::move(alpha)); }
    bool has_index(IndexId const& alpha) const { return indices_.count(alpha) != 0; }
    std::set<IndexId> const& indices() const noexcept { return indices_; }

    Relation const& at(IndexId const& alpha, IndexId const& beta) const;

    // Both setters throw UnknownIndex for indices outside the index set.
    void set(IndexId const& alpha, IndexId const& beta, Relation relation);
    void insert(IndexId const& alpha, IndexId const& beta, Pair pair);

    entry_map const& entries() const noexcept { return entries_; }

    // Every element mentioned by any entry; the implicit ambient set M.
    ElementSet elements() const;

    friend bool operator==(SincovSystem const&, SincovSystem const&) = default;

private:
    void require(IndexId const& alpha) const;

    std::set<IndexId> indices_;
    entry_map entries_;
};

enum class Law
{
    Transitivity,        // Phi(a,b) o Phi(b,c) within Phi(a,c)
    Symmetry,            // Phi(a,b)^-1 within Phi(b,a)
    IdentityContainment, // Phi(a,a) within id
};

struct LawFilter
{
    bool transitivity = true;
    bool symmetry = true;
    bool identity = true;

    bool enabled(Law law) const noexcept;
};

struct ViolationReport
{
    Law law;
    std::vector<IndexId> indices; // (alpha,beta,gamma), (alpha,beta) or (alpha)
    Pair pair;                    // in the left side, absent from the right

    friend bool operator==(ViolationReport const&, ViolationReport const&) = default;
    friend auto operator<=>(ViolationReport const&, ViolationReport const&) = default;
};

// One report per failing (law, indices, pair), sorted.
std::vector<ViolationReport> check_sincov(SincovSystem const& system, LawFilter laws = {});

class PreconditionViolated : public Error
{
public:
    explicit PreconditionViolated(std::vector<ViolationReport> violations);

    // Never empty; front() is the first report in canonical order.
    std::vector<ViolationReport> const& violations() const noexcept { return violations_; }

private:
    std::vector<ViolationReport> violations_;
};

class InvalidAtlas : public Error
{
public:
    explicit InvalidAtlas(ChartViolation violation);

    ChartViolation const& violation() const noexcept { return violation_; }

private:
    ChartViolation violation_;
};

class EqualityCaseViolated : public Error
{
public:
    EqualityCaseViolated(Law law, std::vector<IndexId> indices, std::optional<Pair> pair);

    Law law() const noexcept { return law_; }
    std::vector<IndexId> const& indices() const noexcept { return indices_; }
    // A pair on exactly one side of the failed equality.
    std::optional<Pair> const& pair() const noexcept { return pair_; }

private:
    Law law_;
    std::vector<IndexId> indices_;
    std::optional<Pair> pair_;
};

// Quotient construction: nodes (alpha, a) are joined for every (b, a) in
// Phi(alpha, beta); each class z becomes a carrier point, and
// phi(alpha) = {(z, a) | (alpha, a) in z}. Class ids are "cls:<alpha>:<a>"
// for the least member node. Throws PreconditionViolated.
Atlas solve_atlas(SincovSystem const& system);

// Phi(alpha, beta) = phi(alpha) o phi(beta)^-1. Throws InvalidAtlas.
SincovSystem reconstruct(Atlas const& atlas);

// Equality case: requires Phi(a,b) o Phi(b,c) = Phi(a,c) and
// Phi(a,b)^-1 = Phi(b,a) for all indices, with Phi(a,a) diagonal. Every
// Phi(a,b) is then a total bijection from the points charted at b onto those
// charted at a. Returns phi(alpha) = Phi(alpha, gamma). Throws UnknownIndex or
// EqualityCaseViolated.
Atlas solve_via_fixed_index(SincovSystem const& system, IndexId const& gamma);

// Serialized class id used by solve_atlas.
ElementId class_id(IndexId const& alpha, ElementId const& a);

char const* to_string(Law law) noexcept;

} // namespace sincov

#endif // SINCOV_SINCOV_HPP
