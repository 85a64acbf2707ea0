#ifndef SINCOV_ATLAS_HPP
#define SINCOV_ATLAS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sincov/errors.hpp"
#include "sincov/ids.hpp"
#include "sincov/relation.hpp"

namespace sincov
{

// Indexed family of charts phi(alpha). Each chart relates carrier points
// (quotient classes) to elements of M and must be a partial bijection.
struct Atlas
{
    std::map<IndexId, Relation> charts;

    std::set<IndexId> indices() const;
    Relation const& chart(IndexId const& alpha) const;

    friend bool operator==(Atlas const&, Atlas const&) = default;
};

enum class ChartPredicate
{
    Injectivity,
    Coinjectivity,
};

struct ChartViolation
{
    IndexId index;
    ChartPredicate predicate;
    std::pair<Pair, Pair> witness;

    friend bool operator==(ChartViolation const&, ChartViolation const&) = default;
};

std::vector<ChartViolation> validate_atlas(Atlas const& atlas);

// X = union of chart domains.
ElementSet carrier(Atlas const& atlas);

// phi(alpha) o phi(beta)^-1. Throws UnknownIndex.
Relation transition(Atlas const& atlas, IndexId const& alpha, IndexId const& beta);

// omega relates carrier(a1) to carrier(a2); oriented so that
// compose(a2.chart(alpha), omega) == a1.chart(alpha).
struct Isomorphism
{
    Relation omega;

    friend bool operator==(Isomorphism const&, Isomorphism const&) = default;
};

enum class MismatchKind
{
    Conflict,           // a carrier point forced onto two counterparts, or two onto one
    MissingCounterpart, // an element charted in one atlas only
    CoverageGap,        // a carrier point of the second atlas with no preimage
};

// Certificate that the two atlases induce different transition relations:
// `pair` lies in transition(first, alpha, beta) but not in
// transition(second, alpha, beta) when in_first is true, and the other way
// round otherwise.
struct NonIsomorphismWitness
{
    MismatchKind kind;
    IndexId alpha;
    IndexId beta;
    Pair pair;
    bool in_first;
    std::string detail;
};

class NotIsomorphic : public Error
{
public:
    explicit NotIsomorphic(NonIsomorphismWitness witness);

    NonIsomorphismWitness const& witness() const noexcept { return witness_; }

private:
    NonIsomorphismWitness witness_;
};

class IndexMismatch : public Error
{
public:
    IndexMismatch(std::set<IndexId> only_first, std::set<IndexId> only_second);

    std::set<IndexId> const& only_first() const noexcept { return only_first_; }
    std::set<IndexId> const& only_second() const noexcept { return only_second_; }

private:
    std::set<IndexId> only_first_;
    std::set<IndexId> only_second_;
};

// Builds omega by pushing every chart pair (z, a) of a1 to the unique z' with
// (z', a) in the matching chart of a2, merging across indices. Both atlases
// must be valid. Throws IndexMismatch or NotIsomorphic.
Isomorphism find_isomorphism(Atlas const& a1, Atlas const& a2);

bool verify_isomorphism(Atlas const& a1, Atlas const& a2, Isomorphism const& iso);

struct AxiomWitness
{
    std::optional<IndexId> alpha;
    std::optional<IndexId> beta;
    std::string issue;
};

struct AxiomResult
{
    bool pass = true;
    std::vector<AxiomWitness> witnesses;
};

// Set-level fragment of the atlas axioms: coverage (at1), charts are
// bijections onto their images (at2), and transitions are bijections between
// the images of chart overlaps (at3). Openness and smoothness are not checked.
struct AxiomReport
{
    AxiomResult at1;
    AxiomResult at2;
    AxiomResult at3;

    bool pass() const noexcept { return at1.pass && at2.pass && at3.pass; }
};

AxiomReport check_at_axioms(Atlas const& atlas);

char const* to_string(ChartPredicate predicate) noexcept;
char const* to_string(MismatchKind kind) noexcept;

} // namespace sincov

#endif // SINCOV_ATLAS_HPP
