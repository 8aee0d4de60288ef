#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ldnc/capacity.hpp"
#include "ldnc/gf2.hpp"
#include "ldnc/network.hpp"
#include "ldnc/oracle.hpp"

namespace ldnc {

/// Matrix text format: first line "R C", then R lines of exactly C
/// characters from {0,1}. Bit-exact; throws std::runtime_error on any
/// deviation.
Gf2Matrix read_matrix(std::istream& in);
Gf2Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Gf2Matrix& m);
void write_matrix_file(const std::string& path, const Gf2Matrix& m);

nlohmann::json to_json(const NetworkParams& p);
nlohmann::json to_json(const CapacityReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace ldnc
