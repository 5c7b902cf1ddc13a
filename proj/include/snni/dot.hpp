#pragma once

#include <string>

#include "snni/basis_graphs.hpp"
#include "snni/oracle.hpp"
#include "snni/petri.hpp"
#include "snni/verifier.hpp"

namespace snni {

// Graphviz renderings. Output depends only on the inputs, so repeated runs
// are byte-identical.

std::string export_dot(const LabeledPetriNet& lpn, const Brg& brg);
/// Tagged leaves show their alpha/beta tag; duplicated nodes are dashed.
std::string export_dot(const LabeledPetriNet& lpn, const UbrgResult& ubrg);
/// Nodes in M'_dup get a double border.
std::string export_dot(const LabeledPetriNet& lpn, const UbrgResult& ubrg, const SvResult& sv);
std::string export_dot(const LabeledPetriNet& lpn, const ReachGraph& graph);

}  // namespace snni
