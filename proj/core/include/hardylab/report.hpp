#pragma once

#include <nlohmann/json.hpp>

#include "hardylab/classifier.hpp"
#include "hardylab/disk_geometry.hpp"
#include "hardylab/orbit_lab.hpp"
#include "hardylab/symbols.hpp"

namespace hardylab {

/// Complex numbers are written as [re, im]; non-finite doubles become null.
nlohmann::json to_json(cplx z);
nlohmann::json to_json(const CoefficientFunction& f);
nlohmann::json to_json(const LambdaSpec& l);
nlohmann::json to_json(const SymbolSpec& s);
nlohmann::json to_json(const RotationClass& r);
nlohmann::json to_json(const ZeroCount& z);
nlohmann::json to_json(const ModulusExtrema& e);
nlohmann::json to_json(const PowerBoundReport& p);
nlohmann::json to_json(const WitnessThresholds& t);
nlohmann::json to_json(const WitnessReport& w);
nlohmann::json to_json(const OrbitBound& b);
nlohmann::json to_json(const ClassifierConfig& c);
nlohmann::json to_json(const SufficientReport& s);

/// Full verdict report: lambda, phi, rotation class, dynamics, grade, rule,
/// evidence and the effective configuration.
nlohmann::json verdict_report(const LambdaSpec& lambda, const SymbolSpec& phi, const Verdict& v,
                              const ClassifierConfig& config);

}  // namespace hardylab
