#pragma once

#include <stdexcept>
#include <string>

namespace blockcheck {

// Bad user input: malformed files, degree mismatches, non-subgroups.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource limit exceeded (group order cap, quotient index cap, ...).
// The message names the failing stage.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An invariant the theory guarantees failed to hold: always a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

namespace config {
// Global cap on the order of groups whose elements get enumerated.
// The CLI seeds this from BLOCKCHECK_MAX_ORDER (default 20000).
unsigned long max_group_order();
void set_max_group_order(unsigned long cap);
}  // namespace config

}  // namespace blockcheck
