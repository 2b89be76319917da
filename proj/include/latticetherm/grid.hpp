#pragma once

#include <string>
#include <vector>

namespace ltherm {

// Grid syntax: "start:stop:count" for count points linearly spaced over
// [start, stop] inclusive, or a comma list "a,b,c", or a single value.
std::vector<double> parse_grid(const std::string& text);

// Same syntax restricted to integers; the range form must land on
// integers exactly.
std::vector<int> parse_int_grid(const std::string& text);

}
