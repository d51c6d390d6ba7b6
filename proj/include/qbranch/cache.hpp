#pragma once

#include <optional>
#include <string>

#include "qbranch/character.hpp"

namespace qbranch {

// On-disk character cache. Directory comes from QBRANCH_CACHE, falling back
// to $XDG_CACHE_HOME/qbranch or $HOME/.cache/qbranch. Entries are
// content-addressed by (type, rank, lambda, format version) and carry a
// checksum; unusable directories degrade to no caching with a single
// warning, corrupt entries are deleted and recomputed.
std::string cache_directory();

std::string character_cache_key(const RootSystem& rs, const IVec& lambda);

std::optional<Character> cache_get(const std::string& key, int rank);
bool cache_put(const std::string& key, const Character& ch);

// freudenthal with the disk cache in front.
Character cached_freudenthal(const RootSystem& rs, const IVec& lambda,
                             Int dim_cap = kDefaultDimCap);

}  // namespace qbranch
