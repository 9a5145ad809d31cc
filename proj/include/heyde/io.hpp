// Parsing and serialization for the CLI surfaces: group spec strings,
// element strings, endomorphism matrices, distributions and characteristic
// functions as JSON, characteristic-function tables as CSV.

#ifndef HEYDE_IO_HPP_
#define HEYDE_IO_HPP_

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "heyde/dist.hpp"
#include "heyde/morphism.hpp"
#include "heyde/rg.hpp"

namespace heyde {

// Grammar: "Z3", "Z3xZ9", "Z5xZ5xZ25"; case-insensitive, 'x' separator,
// every order >= 2. Errors name the offending token.
FinGroup parse_group_spec(const std::string& text);
std::string format_group_spec(const FinGroup& g);

// Comma-joined coordinates: "1,3". The empty string is the trivial group's
// only element.
Elem parse_elem(const FinGroup& g, const std::string& text);
std::string format_elem(const Elem& x);

// Scalar shorthand "c" (multiplication by c) or a row-major JSON array of
// arrays "[[1,0],[3,1]]".
GroupMap parse_map_spec(const FinGroup& g, const std::string& text);
nlohmann::json map_to_json(const GroupMap& a);

// JSON object mapping element strings to rationals: {"0": "1/2", "1": "1/4"}.
nlohmann::json dist_to_json(const Dist& mu);
Dist dist_from_json(const FinGroup& g, const nlohmann::json& j);

// {"h": {"kappa": ["re", "im"], "quad": "p/q", "lin": "p/q"}} per character.
nlohmann::json rg_charfn_to_json(const RGCharFn& f);
RGCharFn rg_charfn_from_json(const FinGroup& g, const nlohmann::json& j);

// Lines "y,re,im" with the element string quoted.
std::string charfn_to_csv(const CharFn& phi);

}  // namespace heyde

#endif  // HEYDE_IO_HPP_
