#pragma once

#include "quadbraid/cocycle.hpp"
#include "quadbraid/presentation.hpp"
#include "quadbraid/skeletal.hpp"

#include <json.hpp>

namespace quadbraid {

// Insertion-ordered documents so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json group_to_json(const Group& g);
Group group_from_json(const Json& j);

TargetGroup target_from_label(const std::string& label);

/// Parses "num/den" (or a bare integer string) into the given target,
/// rejecting values that are not elements of it.
Coeff coeff_from_string(const TargetGroup& target, const std::string& s);

Json form_to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

/// Reads the optional "form" block of a presentation file, interpreted over
/// the file's own group and target.
std::optional<QuadraticForm> embedded_form_from_json(const Json& j);

/// Dense lex-ordered tables; tabulates first, so finite groups only.
Json cocycle_to_json(const Cocycle& w);
Cocycle cocycle_from_json(const Json& j);

/// Two blocks in one stream: "x,y,z,value" rows for h, then "x,y,value" rows
/// for c. Element coordinates are semicolon-joined.
std::string cocycle_to_csv(const Cocycle& w);

Json report_to_json(const CheckReport& r);
Json normal_form_to_json(const NormalFormReport& r);
Json decision_to_json(const StrictifyDecision& d);

Json load_json_file(const std::string& path);

}  // namespace quadbraid
