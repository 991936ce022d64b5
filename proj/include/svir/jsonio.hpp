#pragma once

#include "svir/checks.hpp"
#include "svir/chiral.hpp"
#include "svir/classification.hpp"
#include "svir/fusion.hpp"
#include "svir/module.hpp"
#include "svir/superalgebra.hpp"
#include "svir/unitarity.hpp"

#include <json.hpp>

namespace svir {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Phase& p);
Json to_json(const Scalar& s);
Json to_json(const GeneratorId& g);
Json to_json(const AlgebraElement& x);
Json to_json(const CosetSector& x);
Json to_json(const NSFermiSector& x);
Json to_json(const FusionVector& v);
Json to_json(const NSFusionVector& v);
Json to_json(const DiscreteLabel& lab);
Json to_json(const SimpleCurrentGroup& g);
Json to_json(const Dim1Group& g);
Json to_json(const CasePrediction& pred);
Json to_json(const ExtensionRecord& rec);
Json to_json(const CheckResult& r);

// The `module` subcommand payload: weights, cutoff and per-level dimensions.
Json module_summary_json(const ModuleHandle& mod);

// Deterministic output envelope shared by all subcommands.
Json envelope(const std::string& command, Json input, Json result);

std::string version_string();

} // namespace svir
