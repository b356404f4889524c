#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ksplit {

/// Bit i stands for the i-th element of a Ground.
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 64;

/// Ordered, duplicate-free set of element ids.
///
/// Ids are sorted in natural order (purely numeric ids compare by value, all
/// others lexicographically, numbers first). Ids may not be empty or contain
/// '|', ',' or whitespace. When every id is a single character the ground is
/// "compact" and partitions render as `12l|3`; otherwise block members are
/// comma separated (`x1,x2l|x3`).
class Ground {
 public:
  explicit Ground(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  bool compact() const { return compact_; }
  ElementMask full_mask() const;

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t require_index(std::string_view id) const;
  ElementMask mask_of(std::span<const std::string> ids) const;

  friend bool operator==(const Ground& a, const Ground& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<std::string> ids_;
  bool compact_ = true;
};

using GroundPtr = std::shared_ptr<const Ground>;

GroundPtr make_ground(std::vector<std::string> ids);

/// Natural ordering used for grounds and vertex lists.
bool natural_less(std::string_view a, std::string_view b);

struct Block {
  ElementMask members = 0;
  bool labelled = false;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A set partition of a ground set whose blocks optionally carry the label.
///
/// Always held in canonical form: blocks ordered by their smallest member.
/// The label is a per-block flag and never a ground element.
class LabelledPartition {
 public:
  LabelledPartition(GroundPtr ground, std::vector<Block> blocks);

  /// Parses bar notation. Without a ground, the ground is the set of
  /// elements mentioned in the text.
  static LabelledPartition parse(std::string_view text);
  static LabelledPartition parse(std::string_view text, GroundPtr ground);

  /// All-singleton partition; element i is labelled iff bit i of `labelled`.
  static LabelledPartition finest(GroundPtr ground, ElementMask labelled);
  /// Single block spanning the ground.
  static LabelledPartition coarsest(GroundPtr ground, bool labelled);

  const Ground& ground() const { return *ground_; }
  const GroundPtr& ground_ptr() const { return ground_; }
  std::span<const Block> blocks() const { return blocks_; }

  std::size_t block_count() const { return blocks_.size(); }
  std::size_t labelled_count() const;
  std::size_t unlabelled_count() const { return block_count() - labelled_count(); }
  ElementMask labelled_members() const;

  /// Index of the block containing ground element `element`.
  std::size_t block_of(std::size_t element) const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const LabelledPartition& a, const LabelledPartition& b);

 private:
  GroundPtr ground_;
  std::vector<Block> blocks_;
};

std::ostream& operator<<(std::ostream& os, const LabelledPartition& pi);

/// sigma <= pi: every block of sigma sits inside a block of pi, and a labelled
/// block of sigma only inside a labelled block of pi.
bool refines(const LabelledPartition& sigma, const LabelledPartition& pi);

/// Least upper bound. Blocks sharing an element are merged; a merged block is
/// labelled iff one of its constituents is.
LabelledPartition join(const LabelledPartition& sigma, const LabelledPartition& pi);

/// Intersects every block with `subset`, dropping empty intersections and
/// keeping labels. The result lives on the ground `subset`.
LabelledPartition restrict_to(const LabelledPartition& pi, std::span<const std::string> subset);

/// 1 iff exactly one block is labelled.
int m_indicator(const LabelledPartition& pi);

/// Merges all labelled blocks into one.
LabelledPartition star(const LabelledPartition& pi);

/// Möbius function of the labelled partition lattice on [sigma, pi], evaluated
/// by factoring the interval over the blocks of pi.
std::int64_t moebius(const LabelledPartition& sigma, const LabelledPartition& pi);

/// Same value, by explicit recursion mu(s,s)=1, mu(s,t) = -sum_{s<=r<t} mu(s,r)
/// over the enumerated interval.
std::int64_t moebius_bruteforce(const LabelledPartition& sigma, const LabelledPartition& pi);

/// Diagonal weight of the transfer-matrix factorization: 0 with two or more
/// unlabelled blocks, otherwise (-1)^(a-1) (a-1)! for a labelled blocks.
std::int64_t lambda_value(const LabelledPartition& pi);

/// Every labelled partition tau >= base (including base itself).
std::vector<LabelledPartition> coarsenings(const LabelledPartition& base);

/// Every labelled partition of the ground.
std::vector<LabelledPartition> all_labelled_partitions(const GroundPtr& ground);

}  // namespace ksplit

template <>
struct std::hash<ksplit::LabelledPartition> {
  std::size_t operator()(const ksplit::LabelledPartition& pi) const noexcept { return pi.hash(); }
};
