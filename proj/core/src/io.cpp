#include "sincov/io.hpp"

namespace sincov::io
{

namespace
{

std::string const& expect_string(json const& value, std::string_view what)
{
    if (!value.is_string())
        throw ParseError(std::string(what) + " must be a string, got " + value.dump());
    return value.get_ref<std::string const&>();
}

json const& expect_field(json const& doc, char const* key, std::string_view what)
{
    if (!doc.is_object())
        throw ParseError(std::string(what) + " must be a JSON object");
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

FlowKind kind_from_string(std::string const& name)
{
    for (auto kind : {FlowKind::Translation, FlowKind::BlowUp, FlowKind::DiscreteDoubling,
                      FlowKind::Permutation})
        if (name == to_string(kind))
            return kind;
    throw ParseError("unknown flow kind '" + name + "'");
}

} // namespace

json to_json(Relation const& relation)
{
    json out = json::array();
    for (auto const& [first, second] : relation)
        out.push_back(json::array({first.str(), second.str()}));
    return out;
}

Relation relation_from_json(json const& doc)
{
    if (!doc.is_array())
        throw ParseError("relation must be an array of pairs, got " + doc.dump());
    Relation relation;
    for (auto const& item : doc) {
        if (!item.is_array() || item.size() != 2)
            throw ParseError("relation pair must be a 2-array, got " + item.dump());
        relation.insert(ElementId(expect_string(item[0], "element id")),
                        ElementId(expect_string(item[1], "element id")));
    }
    return relation;
}

json to_json(SincovSystem const& system)
{
    json indices = json::array();
    for (auto const& alpha : system.indices())
        indices.push_back(alpha.str());
    json relations = json::object();
    for (auto const& [key, relation] : system.entries())
        relations[key.first.str() + key_separator + key.second.str()] = to_json(relation);
    return json{{"indices", std::move(indices)}, {"relations", std::move(relations)}};
}

SincovSystem system_from_json(json const& doc)
{
    auto const& indices = expect_field(doc, "indices", "system");
    if (!indices.is_array())
        throw ParseError("system \"indices\" must be an array");

    SincovSystem system;
    for (auto const& item : indices) {
        auto const& id = expect_string(item, "index id");
        if (id.find(key_separator) != std::string::npos)
            throw ParseError("index id '" + id + "' contains the key separator '|'");
        system.add_index(IndexId(id));
    }

    auto it = doc.find("relations");
    if (it == doc.end())
        return system;
    if (!it->is_object())
        throw ParseError("system \"relations\" must be an object");
    for (auto const& [key, value] : it->items()) {
        auto const sep = key.find(key_separator);
        if (sep == std::string::npos || key.find(key_separator, sep + 1) != std::string::npos)
            throw ParseError("relation key '" + key + "' is not of the form alpha|beta");
        IndexId alpha(key.substr(0, sep));
        IndexId beta(key.substr(sep + 1));
        for (auto const* id : {&alpha, &beta})
            if (!system.has_index(*id))
                throw ParseError("relation key '" + key + "' names undeclared index '" +
                                 id->str() + "'");
        system.set(alpha, beta, relation_from_json(value));
    }
    return system;
}

json to_json(Atlas const& atlas)
{
    json charts = json::object();
    for (auto const& [alpha, chart] : atlas.charts)
        charts[alpha.str()] = to_json(chart);
    return json{{"charts", std::move(charts)}};
}

Atlas atlas_from_json(json const& doc)
{
    auto const& charts = expect_field(doc, "charts", "atlas");
    if (!charts.is_object())
        throw ParseError("atlas \"charts\" must be an object");
    Atlas atlas;
    for (auto const& [alpha, value] : charts.items())
        atlas.charts[IndexId(alpha)] = relation_from_json(value);
    return atlas;
}

json to_json(Isomorphism const& iso)
{
    return json{{"omega", to_json(iso.omega)}};
}

Isomorphism isomorphism_from_json(json const& doc)
{
    return Isomorphism{relation_from_json(expect_field(doc, "omega", "isomorphism"))};
}

json to_json(ViolationReport const& report)
{
    json indices = json::array();
    for (auto const& alpha : report.indices)
        indices.push_back(alpha.str());
    return json{{"law", to_string(report.law)},
                {"indices", std::move(indices)},
                {"pair", json::array({report.pair.first.str(), report.pair.second.str()})}};
}

json to_json(std::vector<ViolationReport> const& reports)
{
    json out = json::array();
    for (auto const& report : reports)
        out.push_back(to_json(report));
    return out;
}

json to_json(ChartViolation const& violation)
{
    auto const& [p, q] = violation.witness;
    return json{{"index", violation.index.str()},
                {"predicate", to_string(violation.predicate)},
                {"witness", json::array({json::array({p.first.str(), p.second.str()}),
                                         json::array({q.first.str(), q.second.str()})})}};
}

json to_json(NonIsomorphismWitness const& witness)
{
    return json{{"kind", to_string(witness.kind)},
                {"alpha", witness.alpha.str()},
                {"beta", witness.beta.str()},
                {"pair", json::array({witness.pair.first.str(), witness.pair.second.str()})},
                {"in", witness.in_first ? "first" : "second"},
                {"detail", witness.detail}};
}

json to_json(AxiomReport const& report)
{
    auto result = [](AxiomResult const& r) {
        json witnesses = json::array();
        for (auto const& w : r.witnesses) {
            json item{{"issue", w.issue}};
            if (w.alpha)
                item["alpha"] = w.alpha->str();
            if (w.beta)
                item["beta"] = w.beta->str();
            witnesses.push_back(std::move(item));
        }
        return json{{"pass", r.pass}, {"witnesses", std::move(witnesses)}};
    };
    return json{{"at1", result(report.at1)}, {"at2", result(report.at2)}, {"at3", result(report.at3)}};
}

json to_json(FlowDescriptor const& descriptor)
{
    json out{{"kind", to_string(descriptor.spec.kind())}};
    if (descriptor.spec.kind() == FlowKind::Permutation) {
        json table = json::object();
        for (auto const& [from, to] : descriptor.spec.table())
            table[from.str()] = to.str();
        out["permutation"] = std::move(table);
    }
    json grid = json::array();
    for (auto const& t : descriptor.grid)
        grid.push_back(t.str());
    out["grid"] = std::move(grid);
    json seeds = json::array();
    for (auto const& seed : descriptor.seeds)
        seeds.push_back(json{{"t", seed.time.str()}, {"x", seed.value.str()}});
    out["seeds"] = std::move(seeds);
    return out;
}

FlowDescriptor flow_from_json(json const& doc)
{
    auto const kind = kind_from_string(expect_string(expect_field(doc, "kind", "flow"), "flow kind"));

    auto spec = [&] {
        switch (kind) {
        case FlowKind::Translation:
            return FlowSpec::translation();
        case FlowKind::BlowUp:
            return FlowSpec::blow_up();
        case FlowKind::DiscreteDoubling:
            return FlowSpec::doubling();
        case FlowKind::Permutation:
            break;
        }
        auto const& table = expect_field(doc, "permutation", "permutation flow");
        if (!table.is_object())
            throw ParseError("\"permutation\" must be an object");
        std::map<ElementId, ElementId> entries;
        for (auto const& [from, to] : table.items())
            entries.emplace(ElementId(from), ElementId(expect_string(to, "permutation image")));
        try {
            return FlowSpec::permutation(std::move(entries));
        } catch (InvalidFlow const& e) {
            throw ParseError(e.what());
        }
    }();

    FlowDescriptor descriptor{std::move(spec), {}, {}};

    auto const& grid = expect_field(doc, "grid", "flow");
    if (!grid.is_array())
        throw ParseError("flow \"grid\" must be an array");
    for (auto const& t : grid)
        descriptor.grid.insert(Rational::parse(expect_string(t, "grid time")));

    auto const& seeds = expect_field(doc, "seeds", "flow");
    if (!seeds.is_array())
        throw ParseError("flow \"seeds\" must be an array");
    for (auto const& seed : seeds) {
        auto time = Rational::parse(expect_string(expect_field(seed, "t", "seed"), "seed time"));
        auto const& x = expect_string(expect_field(seed, "x", "seed"), "seed value");
        ElementId value = kind == FlowKind::Permutation ? ElementId(x)
                                                        : ElementId(Rational::parse(x).str());
        descriptor.seeds.push_back(Seed{std::move(time), std::move(value)});
    }
    return descriptor;
}

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (json::parse_error const& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string canonical(json const& doc)
{
    return doc.dump();
}

} // namespace sincov::io
