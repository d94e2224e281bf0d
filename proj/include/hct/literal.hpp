#pragma once

#include <string>
#include <vector>

#include "hct/cdnumber.hpp"

namespace hct {

// Parses "1.5 + 2i1 - 0.25i7". A bare number is the i0 term and "i3" means 1*i3.
// forced_level > 0 pins the level (index overflow is an input error);
// otherwise the smallest level >= min_level holding every index is used.
CDNumber parse_cd_literal(const std::string& text, int forced_level = 0, int min_level = 2);

// Whitespace or comma separated list of reals, e.g. "0 1 0 0 1".
std::vector<double> parse_real_list(const std::string& text);

// Literals separated by , or ;  (or by whitespace when neither appears).
std::vector<CDNumber> parse_cd_list(const std::string& text, int forced_level = 0, int min_level = 2);

// Shortest form accepted by parse_cd_literal; round-trips exactly.
std::string format_cd_literal(const CDNumber& a);

}  // namespace hct
