#ifndef TORICFLOER_JSON_IO_HPP
#define TORICFLOER_JSON_IO_HPP

#include <json.hpp>

#include "toricfloer/certificate.hpp"
#include "toricfloer/floer.hpp"
#include "toricfloer/mirror.hpp"
#include "toricfloer/polytope.hpp"

namespace toricfloer {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const GaussianRational& g);
nlohmann::json to_json(const VectorXq& v);
nlohmann::json to_json(const ValidationReport& rep);
nlohmann::json to_json(const Polytope& p);
nlohmann::json to_json(const NovikovExact& s);
nlohmann::json to_json(const NovikovNumeric& s);
nlohmann::json to_json(const DiscClassSet& d);
nlohmann::json to_json(const EnergyLevels& l);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CriticalPoint& cp);
nlohmann::json to_json(const Superpotential& w);

/// Reads a serialized certificate back; used to re-verify emitted output.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace toricfloer

#endif
