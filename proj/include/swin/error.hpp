#pragma once

#include <stdexcept>
#include <string>

namespace swin {

// Stable error codes. The numeric values double as CLI exit codes and as the
// nonzero status byte in wire replies, so they must not be renumbered.
enum class Errc : int {
  ok = 0,
  malformed_value = 2,
  missing_filename = 3,
  invalid_combination = 4,
  file_create_failed = 5,
  file_resize_failed = 6,
  map_failed = 7,
  flush_failed = 8,
  unlink_failed = 9,
  out_of_bounds = 10,
  no_epoch = 11,
  misaligned_element = 12,
  transport_failed = 13,
  collective_mismatch = 14,
  not_co_located = 15,
  overlap = 16,
  not_attached = 17,
  open_epoch = 18,
  config_invalid = 19,
  connect_failed = 20,
  rank_collision = 21,
  bad_magic = 22,
  bad_version = 23,
  truncated = 24,
  unsupported = 25,
  table_full = 26,
  short_file = 27,
  unknown_window = 28,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int os_errno = 0);

  Errc code() const noexcept { return code_; }
  int os_errno() const noexcept { return errno_; }

 private:
  Errc code_;
  int errno_;
};

[[noreturn]] void raise(Errc code, const std::string& what, int os_errno = 0);

}  // namespace swin
