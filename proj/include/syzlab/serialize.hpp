#ifndef SYZLAB_SERIALIZE_HPP
#define SYZLAB_SERIALIZE_HPP

#include <json.hpp>

#include "syzlab/betti.hpp"
#include "syzlab/curve.hpp"
#include "syzlab/divclass.hpp"

// JSON forms of the wire-facing values.  Key order is fixed (ordered_json)
// so reports are byte-stable for a fixed seed.

namespace syzlab {

using Json = nlohmann::ordered_json;

// {g, p, ell, r, nodes: [[p_j, q_j], ...], bundles: {name: {degree, multipliers}}}
Json curve_to_json(const NodalRationalCurve& curve,
                   const std::vector<std::pair<std::string, LineBundleData>>& bundles = {});
NodalRationalCurve curve_from_json(const Json& j);

// {rows: [[...]], totals: [...]}
Json table_to_json(const BettiTable& t);

// {basis: ["lambda","d0p","d0pp","d0a1",...], coeffs: ["27","-4",...]},
// rationals as "num/den" strings.
Json class_to_json(const DivisorClass& c);

}  // namespace syzlab

#endif
