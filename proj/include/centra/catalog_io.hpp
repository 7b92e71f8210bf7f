#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centra/group.hpp"

namespace centra {

/// GRP v1:
///   %grp 1
///   [name <label>]
///   order <n>
///   table
///   <n rows of n whitespace-separated indices>
/// Lines starting with '#' are comments. Throws ParseError, or NotAGroup for
/// a well-formed table that fails validation.
Group read_grp(std::string_view text, std::size_t order_cap = default_order_cap());

/// Canonical GRP v1 text; read_grp(write_grp(g)) reproduces g's table and name.
std::string write_grp(const Group& g);

/// PERMGRP v1:
///   %permgrp 1
///   [name <label>]
///   degree <d>
///   gen <d 0-based images>      (one or more)
/// The group is closed breadth first from the identity, applying generators in
/// file order; element indices follow discovery order. A product σ·τ applies σ
/// first. Throws ParseError, NotAPermutation or OrderCapExceeded.
Group read_permgrp(std::string_view text, std::size_t order_cap = default_order_cap());

/// Reads a file in either format, chosen by its header line.
Group read_group_file(const std::filesystem::path& path, std::size_t order_cap = default_order_cap());

/// Group name to use when a file carries none: the file stem.
std::string default_group_name(const std::filesystem::path& path);

using Assertion = std::pair<std::string, std::string>;

struct ManifestEntry {
  enum class Kind { File, Construct };
  Kind kind;
  /// Path (resolved against the manifest directory) or constructor spec.
  std::string target;
  std::vector<Assertion> assertions;
  std::size_t line = 0;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
};

/// Line-oriented manifest: `file <path>` or `construct <spec>` per entry, each
/// optionally followed by indented `assert <key> <value>` lines. Relative
/// paths resolve against `base_dir`.
CorpusManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
CorpusManifest read_manifest(const std::filesystem::path& path);

struct CorpusEntry {
  std::string source;
  std::optional<Group> group;
  std::vector<Assertion> assertions;
  /// Non-empty iff loading failed.
  std::string error;
};

/// Materializes every entry in manifest order. Failures are recorded on the
/// entry and do not stop the remaining entries from loading.
std::vector<CorpusEntry> load_corpus(const CorpusManifest& manifest, std::size_t order_cap = default_order_cap());

/// The committed manifest behind the `builtin` corpus keyword. The
/// `CENTRA_FIXTURE_DIR` environment variable overrides the compiled-in directory.
std::filesystem::path builtin_manifest_path();

}  // namespace centra
