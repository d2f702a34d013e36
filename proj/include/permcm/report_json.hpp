#pragma once

#include "json.hpp"
#include "permcm/classifier.hpp"
#include "permcm/complex.hpp"
#include "permcm/ideal.hpp"
#include "permcm/sweep.hpp"

namespace permcm {

using Json = nlohmann::ordered_json;

// Vertex sets and monomials serialize as sorted index lists.
Json set_to_json(VertexSet s);
Json graph_json(const Graph& g);
Json complex_json(const SimplicialComplex& c);
Json hilbert_json(const HilbertData& h);
Json betti_json(const BettiTable& b);
Json ideal_json(const MonomialIdeal& ideal);
Json split_tree_json(const SplitTree& tree);
Json shedding_json(const SheddingCertificate& cert);
Json report_json(const ClassificationReport& report);
Json sweep_json(const SweepResult& result);

}  // namespace permcm
