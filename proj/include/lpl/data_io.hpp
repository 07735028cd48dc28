#pragma once

// Skeleton sequences on disk, part maps, segment run-length encoding and
// the deterministic synthetic dataset generator.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpl::data {

/// Frame-major joint features: value(t, v, c) = data[(t * V + v) * C + c].
struct SkeletonSequence {
  std::vector<float> data;
  int num_frames = 0;
  int num_joints = 0;
  int num_channels = 0;
  std::vector<int> frame_labels;
  std::string sequence_id;
  double fps = 0.0;

  float at(int t, int v, int c) const {
    return data[(static_cast<std::size_t>(t) * num_joints + v) * num_channels + c];
  }

  /// Throws DataError when the layout or labels are inconsistent.
  void validate(int num_classes) const;
};

struct Part {
  std::string name;
  std::vector<int> joints;
};

struct PartMap {
  std::vector<Part> parts;
  /// Undirected skeleton edges, used to build the multi-hop graph.
  std::vector<std::pair<int, int>> edges;

  int num_parts() const { return static_cast<int>(parts.size()); }
  std::vector<std::string> names() const;
  void validate(int num_joints) const;
};

struct Segment {
  int class_id = 0;
  int start = 0;  // inclusive
  int end = 0;    // inclusive

  int length() const { return end - start + 1; }
  bool operator==(const Segment&) const = default;
};

using SegmentList = std::vector<Segment>;

/// Maximal-run encoding of a non-empty label array.
SegmentList segments_from_frames(const std::vector<int>& frame_labels);
/// Expands segments back to per-frame labels. Throws on gaps or overlaps.
std::vector<int> frames_from_segments(const SegmentList& segments);

struct SyntheticSpec {
  int num_classes = 3;
  int num_joints = 8;
  int num_channels = 3;
  PartMap parts;
  int min_segment = 20;
  int max_segment = 60;
  int frames = 200;
  int sequences = 8;
  std::uint64_t seed = 0;
  double noise = 0.05;

  void validate() const;
};

/// Part driven by class k in the synthetic generator, or nullopt when the
/// spec has no parts (then every joint carries the class signature).
std::optional<int> designated_part(const SyntheticSpec& spec, int class_id);

std::vector<SkeletonSequence> gen_synthetic(const SyntheticSpec& spec);

// On-disk formats.

struct Manifest {
  std::vector<std::string> classes;
  std::vector<std::filesystem::path> sequences;
  std::filesystem::path part_map;
  std::filesystem::path root;  // directory that relative paths resolve against

  int num_classes() const { return static_cast<int>(classes.size()); }
};

/// Reads meta.json, data.f32 and labels.txt. When num_classes is given,
/// labels outside [0, num_classes) are rejected.
SkeletonSequence load_sequence(const std::filesystem::path& dir,
                               std::optional<int> num_classes = std::nullopt);
void save_sequence(const SkeletonSequence& seq, const std::filesystem::path& dir);

PartMap load_part_map(const std::filesystem::path& path);
void save_part_map(const PartMap& parts, const std::filesystem::path& path);

Manifest load_manifest(const std::filesystem::path& path);
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

std::vector<int> load_labels(const std::filesystem::path& path,
                             std::optional<int> num_classes = std::nullopt);
void save_labels(const std::vector<int>& labels, const std::filesystem::path& path);

SyntheticSpec load_synthetic_spec(const std::filesystem::path& path);

/// Writes every sequence plus dataset.json and part_map.json under `out`.
Manifest write_dataset(const std::vector<SkeletonSequence>& sequences, const PartMap& parts,
                       const std::vector<std::string>& class_names,
                       const std::filesystem::path& out);

}  // namespace lpl::data
