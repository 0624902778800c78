// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "maform/normal_form.hpp"

namespace maform {

// Parsers for the canonical text formats. Printing is the str() method of
// each type; parsing accepts arbitrary whitespace between tokens and
// round-trips every printed value. All throw ParseError on bad input.
ZRoot2 parse_zroot2(std::string_view text);
ZOmega parse_zomega(std::string_view text);
DRoot2 parse_droot2(std::string_view text);   // (a,b)/s2^k
DOmega parse_domega(std::string_view text);   // (a,b,c,d)/s2^k
Mat2 parse_mat2(std::string_view text);       // rows ';', entries ','
Mat3 parse_mat3(std::string_view text);

MAForm parse_maform(std::string_view text);   // T.HT.SHT.[C:a,b,c,d]
ETForm parse_etform(std::string_view text);
XYZForm parse_xyzform(std::string_view text);
BSForm parse_bsform(std::string_view text);

}  // namespace maform
