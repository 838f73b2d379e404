#pragma once

// JSON encodings of the library's values.
//
// Integers are JSON numbers when they fit in int64 and decimal strings
// otherwise; the readers accept both. Every reader throws DomainError on a
// malformed document.

#include <json.hpp>

#include "antiflip/embeddings.hpp"
#include "antiflip/mori.hpp"

namespace antiflip::json {

using nlohmann::json;

json encode(const Integer& x);
Integer decode_integer(const json& j);

json encode(const WahlPair& w);  // [m,a]
WahlPair decode_wahl(const json& j);

json encode(const Fraction& f);  // [n,a]
Fraction decode_fraction(const json& j);

json encode(const CFrac& c);  // [e1,..]
CFrac decode_cfrac(const json& j);

/// {"pairs":[[m1,a1],[m2,a2]],"delta":d,"kind":..,"display":..}
json encode(const ExtremalNbhd& e);
ExtremalNbhd decode_nbhd(const json& j);

/// {"w1p":[m,a],"w2p":[m,a],"c":c,"delta":d,"display":..}
json encode(const PResolution& p);
PResolution decode_presolution(const json& j);

/// {"i":..,"family":..,"pair1":..,"pair2":..,"canonical1":..,"canonical2":..,"display":..}
json encode(const EmbeddingStep& s);
EmbeddingStep decode_step(const json& j);

json encode(const Target& t);
Target decode_target(const json& j);

/// {"target":..,"delta":d|null,"infinite":..,"simplicity":..,"steps":[..]}
/// plus "reason" for empty reports and "q_type" for Milnor fibers.
json encode(const EmbeddingReport& r);
EmbeddingReport decode_report(const json& j);

}  // namespace antiflip::json
