#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace erp {

// Shortest round-trip representation of a double ("%.17g" fallback).
// All on-disk text formats use this so outputs are byte-deterministic.
std::string fmt_double(double v);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

double parse_double(const std::string& s, const std::string& what);
long long parse_int(const std::string& s, const std::string& what);

}  // namespace erp
