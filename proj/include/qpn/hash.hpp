#pragma once

#include <string>

namespace qpn {

// SHA-1 hex digest of a byte string; used for git-style content hashes of
// configs in output provenance headers.
std::string sha1_hex(const std::string& data);

// Hash of a config payload framed the way git hashes blobs.
std::string content_hash(const std::string& payload);

}  // namespace qpn
