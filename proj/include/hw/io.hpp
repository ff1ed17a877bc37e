#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hw/characters.hpp"
#include "hw/cyclotomic.hpp"
#include "hw/fourier.hpp"
#include "hw/fusion.hpp"
#include "hw/group.hpp"
#include "hw/irrep.hpp"

namespace hw::io {

using nlohmann::json;

json to_json(const GroupElement& g);
json to_json(const IrrepLabel& label);
/// {"modulus": M, "coeffs": [...]} over the reduced basis (length M/2).
json to_json(const CycInt& value);
json to_json(const ConjugacyClass& cls);
/// {"dim", "entries": [{"row","col","exp"}], "root_modulus"}
json to_json(const MonomialMatrix& matrix);
/// {"dim", "entries": [[[re, im], ...], ...]}
json to_json(const ComplexMatrix& matrix);
json to_json(const FusionRow& row);
json to_json(const CharacterTable& table);
json to_json(const FourierReport& report);

std::string irreps_csv(const std::vector<IrrepLabel>& irreps);
std::string classes_csv(const std::vector<ConjugacyClass>& classes);
/// Row 1: class representatives, row 2: class sizes, then one row per irrep.
std::string character_table_csv(const CharacterTable& table);
std::string fusion_rows_csv(const std::vector<FusionRow>& rows);

/// "[p1,q1,r1] x [p2,q2,r2] = 2[p,q,r] + [p',q',r']"
std::string format_fusion_rule(const FusionRow& row);

/// "Orb(p,q) = {a,b,...}"
std::string format_orbit(const Orbit& orbit);

/// Quotes a CSV field when it contains a comma or quote.
std::string csv_field(const std::string& text);

} // namespace hw::io
