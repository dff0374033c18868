#pragma once

#include <json.hpp>

#include "opal/h_category.hpp"
#include "opal/operad_y.hpp"

namespace opal {

using json = nlohmann::json;

void to_json(json& j, const Permutation& p);
void to_json(json& j, const Paren& p);
void to_json(json& j, const ZObject& z);
void to_json(json& j, const YObject& y);
void to_json(json& j, const HMorphism& f);

Permutation permutation_from_json(const json& j);
Paren paren_from_json(const json& j);
/// Accepts {"tree":…, "marks":[…]} (an optional "width" must agree).
ZObject zobject_from_json(const json& j);
YObject yobject_from_json(const json& j);

}  // namespace opal
