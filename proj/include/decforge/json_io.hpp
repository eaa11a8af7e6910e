#pragma once

#include "decforge/henselian.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace decforge {

// Malformed input (bad JSON shape, unparseable strings, unknown keys where
// they matter).  Distinct from DomainError: the CLI maps ParseError to the
// usage exit code, DomainError to the domain one.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json group_to_json(const FinAbGroup& g); // {"factors":[4,2]}

nlohmann::json place_to_json(const Place& q);
Place place_from_json(BaseField base, const nlohmann::json& j);

// {"base":"Qi","gens":[["5",2],["14",4]]}
nlohmann::json extension_to_json(const KummerExtension& k);
KummerExtension extension_from_json(const nlohmann::json& j);

// inline form: base=Qi gens=5^2,14^4
KummerExtension extension_from_inline(const std::vector<std::string>& tokens);

// {"base":"Qi","inv":[{"place":{"p":5,"pi":"2+i"},"val":"1/4"}, ...]}
nlohmann::json class_to_json(const BrauerClass& c);
BrauerClass class_from_json(const nlohmann::json& j);

// {"base":"Qi","a":"13","b":"5","n":4}; base defaults to Q(i) when n = 4
// and Q otherwise
nlohmann::json symbol_to_json(const SymbolAlgebra& s);
SymbolAlgebra symbol_from_json(const nlohmann::json& j);

// {"n":2,"a":{"u":"5","x":0,"y":0},"b":{"u":"1","x":1,"y":0}}
nlohmann::json laurent_to_json(const LaurentSymbol& s);
LaurentSymbol laurent_from_json(const nlohmann::json& j);

} // namespace decforge
