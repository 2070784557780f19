#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linkhom {

// Exit-code contract shared with the CLI: 1 = malformed input,
// 2 = degenerate geometry or inapplicable move, 3 = cross-check mismatch.

struct input_error : std::runtime_error {
  std::string path;  // field path such as "comp1.vertices[3][0]" when known

  explicit input_error(const std::string& msg, std::string field_path = {})
      : std::runtime_error(field_path.empty() ? msg : msg + " (at " + field_path + ")"),
        path(std::move(field_path)) {}
};

struct group_mismatch : input_error {
  explicit group_mismatch(const std::string& context = {})
      : input_error(context.empty() ? "group mismatch" : "group mismatch: " + context) {}
};

struct move_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct oracle_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linkhom
