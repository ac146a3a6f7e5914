#pragma once

#include <string>

#include <json.hpp>

#include "semicong/congruence.hpp"
#include "semicong/generators.hpp"
#include "semicong/identities.hpp"

namespace semicong {

using Json = nlohmann::json;

/// Semilattice document, either
///   {"n": N, "join": [[...], ...], "labels": [...]?, "orientation": "join"|"meet"?}
/// or
///   {"ground": G, "sets": [[...], ...]}
/// with exactly one of "join" and "sets".
Semilattice semilattice_from_json(const Json& doc);
Json to_json(const Semilattice& s);

Semilattice load_semilattice(const std::string& path);

/// Blocks as sorted index lists, ordered by minimum element.
Json to_json(const Partition& p);
Json to_json(const IdentityReport& report);
Json to_json(const NaiveInstance& instance, const Semilattice& s);

/// {"kind": "...", "params": {...}, "seed": N?}
GenSpec genspec_from_json(const Json& doc);
Json to_json(const GenSpec& spec);

} // namespace semicong
