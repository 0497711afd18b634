#pragma once

#include <anick/freealg.hpp>
#include <anick/hochschild.hpp>
#include <anick/resolution.hpp>

#include <string>

namespace anick::json_io {

// {"generators": [...], "relations": [{"lhs": ..., "rhs": [{"coef": ..., "word": ...}]}],
//  "idempotent": ...?}; generator order = list order, greatest first; coefficients
// are decimal strings of rationals ("3/2" allowed). Throws InputError.
Presentation parse_presentation_text(const std::string& text);
Presentation load_presentation(const std::string& path);

// {"dim": d, "left": {"gen": [[...]]}, "right": {...}}; absent generators act by
// zero; entry [i][j] is the i-th coordinate of the image of basis vector j.
FiniteBimodule parse_bimodule_text(const std::string& text, const Presentation& pres);
FiniteBimodule load_bimodule(const std::string& path, const Presentation& pres);

// Slices as per-chain lists of {coef, left, chain, right} records, with the
// presentation hash embedded; loading rejects artifacts whose hash disagrees.
std::string resolution_to_text(const Resolution& res);
void export_resolution(const Resolution& res, const std::string& path);
Resolution parse_resolution_text(const std::string& text, const Presentation& pres);
Resolution load_resolution(const std::string& path, const Presentation& pres);

}  // namespace anick::json_io
