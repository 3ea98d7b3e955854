#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "twochar/character.hpp"
#include "twochar/tworep.hpp"

namespace twochar::io {

using nlohmann::json;

// {"named": "symmetric:3"} or {"degree": d, "generators": [[images], "(0 1)", ...]}
GroupPtr group_from_json(const json &j, std::size_t order_cap = kDefaultOrderCap);
json group_to_json(const PermGroup &g);

// Subgroup from generator cycles separated by ';', e.g. "(012)" or
// "(0,1);(2,3)". "()" or "" gives the trivial subgroup.
Subgroup parse_subgroup(const GroupPtr &g, std::string_view text);

// Accepted G-set forms:
//   {"action": [[...] per element]}           full table
//   {"generator_images": [[...] per generator]}
//   {"trivial": n}, {"regular": true}, {"natural": true}
//   {"cosets": "<subgroup generators>"}
//   {"sum": [gset, ...]}
GSetPtr gset_from_json(const GroupPtr &g, const json &j);
json gset_to_json(const GSet &s);

// {"values": {"g,h": ["p/q", ...]}}; missing pairs are zero.
Cochain2 cochain2_from_json(const GSetPtr &s, const json &j);
json cochain2_to_json(const Cochain2 &c);
json cochain1_to_json(const Cochain1 &b);

// {"group": ..., "gset": ..., "cocycle": ...}. Without "group" the
// representation is read over `default_group`.
TwoRep rep_from_json(const json &j, const GroupPtr &default_group = nullptr);
json rep_to_json(const TwoRep &r);

json cyclo_to_json(const Cyclo &c);
json table_to_json(const PermGroup &g, const CharacterTable &t);
std::string table_to_text(const PermGroup &g, const CharacterTable &t);

json read_json_file(const std::string &path);

} // namespace twochar::io
