// Canonical JSON form of a fan:
//
//   {"lattice": {"ambient_rank": n, "basis": [[...], ...]},
//    "rays": [[...], ...], "ray_types": ["B", ...], "max_cones": [[i, j, ...], ...]}
//
// Writing always uses the canonical ordering, so dump -> load -> dump is
// byte-identical.

#ifndef BURNIAT_FAN_IO_HPP
#define BURNIAT_FAN_IO_HPP

#include <stdexcept>
#include <string>

#include "burniat/fans.hpp"

namespace burniat {

class FanIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fan_to_json(const Fan& f);
// Throws FanIoError on malformed input and FanError if the fan is invalid.
Fan fan_from_json(const std::string& text);

void write_fan_file(const std::string& path, const Fan& f);
Fan read_fan_file(const std::string& path);

}  // namespace burniat

#endif  // BURNIAT_FAN_IO_HPP
