#include "swin/error.hpp"

#include <cstring>

namespace swin {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::malformed_value: return "MalformedValue";
    case Errc::missing_filename: return "MissingFilename";
    case Errc::invalid_combination: return "InvalidCombination";
    case Errc::file_create_failed: return "FileCreateFailed";
    case Errc::file_resize_failed: return "FileResizeFailed";
    case Errc::map_failed: return "MapFailed";
    case Errc::flush_failed: return "FlushFailed";
    case Errc::unlink_failed: return "UnlinkFailed";
    case Errc::out_of_bounds: return "OutOfBounds";
    case Errc::no_epoch: return "NoEpoch";
    case Errc::misaligned_element: return "MisalignedElement";
    case Errc::transport_failed: return "TransportFailed";
    case Errc::collective_mismatch: return "CollectiveMismatch";
    case Errc::not_co_located: return "NotCoLocated";
    case Errc::overlap: return "Overlap";
    case Errc::not_attached: return "NotAttached";
    case Errc::open_epoch: return "OpenEpoch";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::connect_failed: return "ConnectFailed";
    case Errc::rank_collision: return "RankCollision";
    case Errc::bad_magic: return "BadMagic";
    case Errc::bad_version: return "BadVersion";
    case Errc::truncated: return "Truncated";
    case Errc::unsupported: return "Unsupported";
    case Errc::table_full: return "TableFull";
    case Errc::short_file: return "ShortFile";
    case Errc::unknown_window: return "UnknownWindow";
  }
  return "unknown";
}

static std::string format_what(Errc code, const std::string& what, int os_errno) {
  std::string s = errc_name(code);
  s += ": ";
  s += what;
  if (os_errno != 0) {
    s += " (";
    s += std::strerror(os_errno);
    s += ")";
  }
  return s;
}

Error::Error(Errc code, const std::string& what, int os_errno)
    : std::runtime_error(format_what(code, what, os_errno)),
      code_(code),
      errno_(os_errno) {}

void raise(Errc code, const std::string& what, int os_errno) {
  throw Error(code, what, os_errno);
}

}  // namespace swin
