#pragma once

#include <json.hpp>
#include <string>

#include "grasstrans/common.hpp"
#include "grasstrans/jacobi.hpp"
#include "grasstrans/root_system.hpp"

namespace grasstrans {

// Rationals travel as "num/den" strings (plain integers when den = 1);
// floating values are printed with 17 significant digits so round trips are
// bit exact.

std::string double17(double x);
Rat rat_from_string(const std::string& s);

nlohmann::json root_system_to_json(const RootSystemBC& rs);
RootSystemBC root_system_from_json(const nlohmann::json& j);

nlohmann::json sym_trig_to_json(const SymTrigPoly& p);
SymTrigPoly sym_trig_from_json(const nlohmann::json& j);

}  // namespace grasstrans
