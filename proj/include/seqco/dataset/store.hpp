#pragma once

#include <map>
#include <string>
#include <vector>

#include "seqco/dataset/record.hpp"

namespace seqco::data {

/// Shard files hold a JSON header line followed by fixed-layout binary
/// records (little-endian 16-bit ids plus per-step feasibility bitsets);
/// grammar-derived fields are rebuilt on load. A manifest JSON ties the
/// shards of one store directory together.
struct StoreManifest {
  int L = 0;
  int vocab_size = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::int64_t> counts_per_kind;
  std::vector<std::string> shards;  // relative file names
};

void write_shard(const std::string& path,
                 const std::vector<TrajectoryRecord>& records);
std::vector<TrajectoryRecord> read_shard(const std::string& path);

void write_manifest(const std::string& dir, const StoreManifest& manifest);
StoreManifest read_manifest(const std::string& dir);

/// Loads every shard listed in the directory's manifest.
std::vector<TrajectoryRecord> load_store(const std::string& dir);

}  // namespace seqco::data
