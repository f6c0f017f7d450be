#ifndef KLOC_CLI_CACHE_HPP
#define KLOC_CLI_CACHE_HPP

#include <filesystem>
#include <map>
#include <string>

#include "kloc/classgrp/class_group.hpp"

namespace kloc {

std::string sha256_hex(std::string const & data);

/* One JSON file per (defining polynomial, focus prime). Entries only carry
 * relation elements; they are fed back as hints and the class group is
 * certified again from them, so a bad entry costs time, not correctness.
 * Results are also kept in memory for the lifetime of the cache. */
class ClassGroupCache {
  public:
    static constexpr int format_version = 1;

    /* empty directory: memory only */
    explicit ClassGroupCache(std::filesystem::path dir = {});

    std::filesystem::path const & directory() const { return dir_; }
    std::filesystem::path entry_path(FieldPtr const & field, Integer const & focus) const;
    ClassGroupPtr get(FieldPtr const & field, ClassGroupConfig const & config);

    unsigned hits() const { return hits_; }
    unsigned misses() const { return misses_; }

  private:
    std::filesystem::path dir_;
    std::map<std::string, ClassGroupPtr> memory_;
    unsigned hits_ = 0, misses_ = 0;
};

} // namespace kloc

#endif
