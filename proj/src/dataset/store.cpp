#include "seqco/dataset/store.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

#include "seqco/problems/mdp.hpp"

namespace seqco::data {

namespace {

using nlohmann::json;

constexpr char kMagic[8] = {'S', 'Q', 'T', 'R', 'J', '0', '1', '\n'};

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

/// Rebuilds pad/loss masks and positions from the token grammar. Only the
/// ids, window geometry and feasibility bitsets are stored on disk.
void rebuild_derived(TrajectoryRecord& rec) {
  const int L = rec.L;
  const int step_len = step_token_len(rec.kind, rec.n);
  const int state_len = problems::state_value_count(rec.kind, rec.n);
  rec.pad_mask.assign(L, 1);
  rec.loss_mask_stage1.assign(L, 0);
  rec.loss_mask_stage2.assign(L, 0);
  rec.local_pos.assign(L, 0);
  rec.global_pos.resize(L);
  for (int p = 0; p < L; ++p) rec.global_pos[p] = p;
  for (int p = 0; p <= rec.prefix_len; ++p) {
    rec.pad_mask[p] = 0;
    rec.local_pos[p] = p;
  }
  int pos = rec.prefix_len + 1;
  for (int s = 0; s < rec.window_len; ++s) {
    for (int k = 0; k < step_len; ++k) {
      rec.pad_mask[pos + k] = 0;
      rec.local_pos[pos + k] = k;
      if (k < state_len && s >= 1) rec.loss_mask_stage1[pos + k] = 1;
      if (k == step_len - 1) rec.loss_mask_stage2[pos + k] = 1;
    }
    pos += step_len;
  }
}

}  // namespace

void write_shard(const std::string& path,
                 const std::vector<TrajectoryRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::file, "cannot open for writing: " + path);
  out.write(kMagic, sizeof(kMagic));
  json header;
  header["count"] = records.size();
  header["L"] = records.empty() ? 0 : records.front().L;
  header["vocab_size"] = tok::VocabSpec::kVocabSize;
  out << header.dump() << '\n';
  for (const auto& rec : records) {
    put<std::uint8_t>(out, static_cast<std::uint8_t>(rec.kind));
    put<std::int32_t>(out, rec.n);
    put<std::int32_t>(out, rec.L);
    put<std::int32_t>(out, rec.prefix_len);
    put<std::int32_t>(out, rec.window_start);
    put<std::int32_t>(out, rec.window_len);
    for (std::uint16_t id : rec.ids) put<std::uint16_t>(out, id);
    const int space = problems::action_space_size(rec.kind, rec.n);
    for (const auto& mask : rec.step_feasibility) {
      for (int base = 0; base < space; base += 8) {
        std::uint8_t byte = 0;
        for (int b = 0; b < 8 && base + b < space; ++b) {
          if (mask.test(base + b)) byte |= static_cast<std::uint8_t>(1u << b);
        }
        put<std::uint8_t>(out, byte);
      }
    }
  }
  if (!out) throw Error(errc::file, "short write: " + path);
}

std::vector<TrajectoryRecord> read_shard(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::file, "cannot open for reading: " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error(errc::file, "not a trajectory shard: " + path);
  }
  std::string header_line;
  std::getline(in, header_line);
  const json header = json::parse(header_line);
  if (header.at("vocab_size").get<int>() != tok::VocabSpec::kVocabSize) {
    throw Error(errc::compatibility, "shard vocab mismatch: " + path);
  }
  const std::size_t count = header.at("count").get<std::size_t>();
  std::vector<TrajectoryRecord> records;
  records.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    TrajectoryRecord rec;
    rec.kind = static_cast<problems::ProblemKind>(get<std::uint8_t>(in));
    rec.n = get<std::int32_t>(in);
    rec.L = get<std::int32_t>(in);
    rec.prefix_len = get<std::int32_t>(in);
    rec.window_start = get<std::int32_t>(in);
    rec.window_len = get<std::int32_t>(in);
    rec.ids.resize(rec.L);
    for (auto& id : rec.ids) id = get<std::uint16_t>(in);
    const int space = problems::action_space_size(rec.kind, rec.n);
    rec.step_feasibility.assign(rec.window_len, problems::ActionMask(space));
    for (auto& mask : rec.step_feasibility) {
      for (int base = 0; base < space; base += 8) {
        const auto byte = get<std::uint8_t>(in);
        for (int b = 0; b < 8 && base + b < space; ++b) {
          if (byte & (1u << b)) mask.set(base + b);
        }
      }
    }
    if (!in) throw Error(errc::file, "truncated shard: " + path);
    rebuild_derived(rec);
    records.push_back(std::move(rec));
  }
  return records;
}

void write_manifest(const std::string& dir, const StoreManifest& m) {
  json j;
  j["L"] = m.L;
  j["vocab_size"] = m.vocab_size;
  j["seed"] = m.seed;
  j["counts"] = m.counts_per_kind;
  j["shards"] = m.shards;
  std::ofstream out(dir + "/manifest.json", std::ios::binary);
  if (!out) throw Error(errc::file, "cannot write manifest in " + dir);
  out << j.dump(2) << '\n';
}

StoreManifest read_manifest(const std::string& dir) {
  std::ifstream in(dir + "/manifest.json", std::ios::binary);
  if (!in) throw Error(errc::file, "missing manifest in " + dir);
  json j = json::parse(in);
  StoreManifest m;
  m.L = j.at("L").get<int>();
  m.vocab_size = j.at("vocab_size").get<int>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.counts_per_kind =
      j.at("counts").get<std::map<std::string, std::int64_t>>();
  m.shards = j.at("shards").get<std::vector<std::string>>();
  return m;
}

std::vector<TrajectoryRecord> load_store(const std::string& dir) {
  const StoreManifest m = read_manifest(dir);
  std::vector<TrajectoryRecord> all;
  for (const auto& shard : m.shards) {
    auto records = read_shard(dir + "/" + shard);
    for (auto& r : records) all.push_back(std::move(r));
  }
  return all;
}

}  // namespace seqco::data
