#include "semicong/json_io.hpp"

#include <fstream>
#include <sstream>

namespace semicong {

namespace {

template <class T>
T get_as(const Json& value, const char* what) {
    try {
        return value.get<T>();
    } catch (const Json::exception&) {
        throw InvalidInput(std::string("malformed field \"") + what + "\"");
    }
}

Json partitions_json(const std::vector<Partition>& ps) {
    Json out = Json::array();
    for (const auto& p : ps)
        out.push_back(to_json(p));
    return out;
}

} // namespace

Semilattice semilattice_from_json(const Json& doc) {
    if (!doc.is_object())
        throw InvalidInput("semilattice document must be a JSON object");
    const bool has_join = doc.contains("join");
    const bool has_sets = doc.contains("sets");
    if (has_join == has_sets)
        throw InvalidInput("semilattice document needs exactly one of \"join\" and \"sets\"");

    std::vector<std::string> labels;
    if (doc.contains("labels"))
        labels = get_as<std::vector<std::string>>(doc["labels"], "labels");

    if (has_sets) {
        if (!doc.contains("ground"))
            throw InvalidInput("union-closed document needs \"ground\"");
        const auto ground = get_as<std::int64_t>(doc["ground"], "ground");
        if (ground < 0 || ground > 64)
            throw InvalidInput("\"ground\" must be in [0, 64]");
        const auto sets = get_as<std::vector<std::vector<std::int64_t>>>(doc["sets"], "sets");
        std::vector<std::uint64_t> family;
        for (const auto& set : sets) {
            std::uint64_t mask = 0;
            for (auto x : set) {
                if (x < 0 || x >= ground)
                    throw InvalidInput("set member " + std::to_string(x) + " outside ground set");
                mask |= std::uint64_t{1} << x;
            }
            family.push_back(mask);
        }
        return from_union_closed(family, std::move(labels));
    }

    auto table = get_as<std::vector<std::vector<std::int64_t>>>(doc["join"], "join");
    if (doc.contains("n")) {
        const auto n = get_as<std::int64_t>(doc["n"], "n");
        if (n < 0 || static_cast<std::size_t>(n) != table.size())
            throw InvalidInput("\"n\" = " + std::to_string(n) + " does not match the table size " +
                               std::to_string(table.size()));
    }
    std::vector<std::vector<Element>> entries(table.size());
    for (std::size_t x = 0; x < table.size(); ++x)
        for (std::size_t y = 0; y < table[x].size(); ++y) {
            // Negative entries are out of range; map them past any valid index.
            const auto v = table[x][y];
            entries[x].push_back(v < 0 ? kMaxElements + table.size() : static_cast<Element>(v));
        }
    Orientation orientation = Orientation::Join;
    if (doc.contains("orientation")) {
        const auto o = get_as<std::string>(doc["orientation"], "orientation");
        if (o == "meet")
            orientation = Orientation::Meet;
        else if (o != "join")
            throw InvalidInput("\"orientation\" must be \"join\" or \"meet\"");
    }
    return Semilattice::validate(entries, std::move(labels), orientation);
}

Json to_json(const Semilattice& s) {
    Json doc;
    doc["n"] = s.size();
    doc["join"] = s.table();
    if (!s.labels().empty())
        doc["labels"] = s.labels();
    if (s.orientation() == Orientation::Meet)
        doc["orientation"] = "meet";
    return doc;
}

Semilattice load_semilattice(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return semilattice_from_json(doc);
}

Json to_json(const Partition& p) {
    return p.blocks();
}

Json to_json(const IdentityReport& report) {
    Json doc;
    doc["identity"] = to_string(report.identity);
    doc["holds"] = report.holds;
    doc["lhs"] = to_json(report.lhs.partition());
    doc["rhs"] = to_json(report.rhs.partition());
    if (report.witness)
        doc["witness"] = {report.witness->first, report.witness->second};
    if (report.diagonal_changes_rhs)
        doc["diagonal_changes_rhs"] = *report.diagonal_changes_rhs;
    Json in;
    std::ostringstream fp;
    fp << std::hex << report.input.fingerprint;
    in["fingerprint"] = fp.str();
    if (report.input.t)
        in["t"] = *report.input.t;
    if (report.input.s)
        in["s"] = *report.input.s;
    if (!report.input.phis.empty())
        in["phis"] = partitions_json(report.input.phis);
    if (!report.input.psis.empty())
        in["psis"] = partitions_json(report.input.psis);
    if (!report.input.omegas.empty())
        in["omegas"] = partitions_json(report.input.omegas);
    if (report.input.theta)
        in["theta"] = to_json(*report.input.theta);
    doc["input"] = std::move(in);
    return doc;
}

Json to_json(const NaiveInstance& instance, const Semilattice& s) {
    Json doc;
    doc["pool_index"] = instance.pool_index;
    doc["semilattice"] = to_json(s);
    Json omegas = Json::array();
    for (const auto& c : instance.omegas)
        omegas.push_back(to_json(c.partition()));
    doc["omegas"] = std::move(omegas);
    doc["theta"] = to_json(instance.theta.partition());
    doc["lhs"] = to_json(instance.lhs.partition());
    doc["rhs"] = to_json(instance.rhs.partition());
    return doc;
}

GenSpec genspec_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("kind"))
        throw InvalidInput("generator spec needs \"kind\"");
    GenSpec spec;
    spec.kind = parse_gen_kind(get_as<std::string>(doc["kind"], "kind"));
    if (doc.contains("params"))
        spec.params = get_as<std::map<std::string, std::int64_t>>(doc["params"], "params");
    if (doc.contains("seed"))
        spec.seed = get_as<std::uint64_t>(doc["seed"], "seed");
    return spec;
}

Json to_json(const GenSpec& spec) {
    Json doc;
    doc["kind"] = to_string(spec.kind);
    doc["params"] = spec.params;
    if (spec.kind == GenKind::RandomUnionClosed)
        doc["seed"] = spec.seed;
    return doc;
}

} // namespace semicong
