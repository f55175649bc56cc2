#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zsr/complexes.hpp"
#include "zsr/fractional.hpp"
#include "zsr/groups.hpp"
#include "zsr/hypergraphs.hpp"
#include "zsr/rational.hpp"
#include "zsr/set_system.hpp"
#include "zsr/topology.hpp"
#include "zsr/zerosum.hpp"

namespace zsr::io {

using Json = nlohmann::ordered_json;

/// Parse failures carry the JSON path of the offending value, e.g.
/// "$.facets[2]: facet is contained in facet ...".
Json read_file(const std::string& path);

/// "Z/n", "S3", "S_3", "Sk", or products joined by 'x' such as "Z/2xZ/2".
FiniteGroup parse_group_name(const std::string& name);

/// A group name string or {"order": n, "table": [[...]]}.
FiniteGroup parse_group(const Json& j, const std::string& path = "$");
Json emit_group(const FiniteGroup& g);

/// {"vertices": [labels], "facets": [[indices or labels]]}. Facets must be
/// inclusion-maximal.
SimplicialComplex parse_complex(const Json& j, const std::string& path = "$");
Json emit_complex(const SimplicialComplex& k);

/// {"ground": m, "sets": [[1-based elements]]}.
SetFamily parse_set_family(const Json& j, const std::string& path = "$");
Json emit_set_family(const SetFamily& f);

/// {"vertices": count or [labels], "uniformity": n, "edges": [[0-based]]}.
UniformHypergraph parse_hypergraph(const Json& j, const std::string& path = "$");
Json emit_hypergraph(const UniformHypergraph& h);

Rational parse_rational_value(const Json& j, const std::string& path, bool normalize);

/// {"p": p, "weights": ["a/b", ...]}.
RationalMeasure parse_measure(const Json& j, const std::string& path = "$", bool normalize = false);
Json emit_measure(const RationalMeasure& m);

/// A list of measure objects, or {"p": p, "measures": [[weights], ...]}.
std::vector<RationalMeasure> parse_measures(const Json& j, const std::string& path = "$",
                                            bool normalize = false);

/// {"p": p, "sets": [[elements of Z/p], ...]}.
std::pair<std::size_t, std::vector<std::vector<Element>>> parse_residue_sets(const Json& j,
                                                                            const std::string& path = "$");

/// A square array of rationals, bare or under "matrix".
std::vector<std::vector<Rational>> parse_matrix(const Json& j, const std::string& path = "$",
                                                bool normalize = false);

/// {"source": complex, "target": complex, "vertex_map": [...]}.
SimplicialMap parse_map(const Json& j, const std::string& path = "$");
Json emit_map(const SimplicialMap& m);

/// {"complex": complex, "group": group, "perms": [[...]]}.
ComplexAction parse_action(const Json& j, const std::string& path = "$");
Json emit_action(const ComplexAction& a);

std::vector<Element> parse_elements(const Json& j, std::size_t modulus, const std::string& path);

Json emit_homology(const HomologyProfile& h);
Json emit_witness(const ZeroSumWitness& w);  // positions 1-based
Json emit_fractional(const FractionalWitness& w);
Json emit_balanced(const BalancedWitness& w);

}  // namespace zsr::io
