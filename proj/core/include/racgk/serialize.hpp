#pragma once

#include <nlohmann/json.hpp>

#include "racgk/cochain.hpp"
#include "racgk/completion.hpp"
#include "racgk/graph.hpp"
#include "racgk/ktheory.hpp"
#include "racgk/rep_ring.hpp"

namespace racgk {

using Json = nlohmann::ordered_json;

// Canonical form: vertices in declaration order, edges as sorted label pairs.
Json graph_to_json(const Graph& g);

// {"ambient": [labels], "terms": [{"monomial": [labels], "coeff": "decimal"}]}
Json to_json(const RepRingElement& e, const Graph& g);
RepRingElement rep_element_from_json(const Json& j, const Graph& g);

// The rep-ring layout plus "basis": "star" | "bar"; the ambient is the vertex set.
Json to_json(const KRingElement& e);
KRingElement kring_element_from_json(const Json& j, const GraphPtr& graph);

Json to_json(const CompletedElement& e);

// One {"degree", "free_rank", "torsion"} object per degree.
Json to_json(const CohomologyResult& h);

Json labels_json(const Graph& g, VertexMask m);
// Decimal string for arbitrary precision values.
inline std::string decimal(const BigInt& v) { return v.get_str(); }

}  // namespace racgk
