#include "ksplit/labelled_partition.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"

namespace ksplit {

namespace {

bool is_number(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view strip_leading_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct ParsedBlock {
  std::vector<std::string> members;
  bool labelled = false;
};

// Splits one block token into member ids and the label flag.
ParsedBlock parse_block(std::string_view token, bool comma_mode, const Ground* ground) {
  if (token.empty()) throw std::invalid_argument("empty block in labelled partition");
  ParsedBlock block;
  if (!comma_mode) {
    if (token.size() >= 2 && token.back() == 'l') {
      block.labelled = true;
      token.remove_suffix(1);
    }
    for (char c : token) block.members.emplace_back(1, c);
    return block;
  }
  auto parts = split(token, ',');
  for (auto part : parts) {
    if (part.empty()) throw std::invalid_argument("empty element in block '" + std::string(token) + "'");
  }
  std::string_view last = parts.back();
  if (ground != nullptr) {
    if (!ground->index_of(last) && last.size() >= 2 && last.back() == 'l' &&
        ground->index_of(last.substr(0, last.size() - 1))) {
      block.labelled = true;
      parts.back().remove_suffix(1);
    }
  } else if (last.size() >= 2 && last.back() == 'l') {
    block.labelled = true;
    parts.back().remove_suffix(1);
  }
  for (auto part : parts) block.members.emplace_back(part);
  return block;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  bool na = is_number(a);
  bool nb = is_number(b);
  if (na != nb) return na;
  if (na) {
    auto sa = strip_leading_zeros(a);
    auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

Ground::Ground(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.size() > kMaxGroundSize) {
    throw std::invalid_argument("ground set exceeds " + std::to_string(kMaxGroundSize) + " elements");
  }
  for (const auto& id : ids_) {
    if (id.empty()) throw std::invalid_argument("empty element id");
    for (char c : id) {
      if (c == '|' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("element id '" + id + "' contains a reserved character");
      }
    }
  }
  std::sort(ids_.begin(), ids_.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw std::invalid_argument("duplicate element id in ground set");
  }
  compact_ = std::all_of(ids_.begin(), ids_.end(), [](const auto& id) { return id.size() == 1 && id != "l"; });
  if (!compact_) {
    std::set<std::string_view> known(ids_.begin(), ids_.end());
    for (const auto& id : ids_) {
      if (known.count(id + "l") != 0) {
        throw std::invalid_argument("element ids '" + id + "' and '" + id + "l' cannot be told apart in bar notation");
      }
    }
  }
}

ElementMask Ground::full_mask() const {
  return ids_.size() == 64 ? ~ElementMask{0} : ((ElementMask{1} << ids_.size()) - 1);
}

std::optional<std::size_t> Ground::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const std::string& a, std::string_view b) { return natural_less(a, b); });
  if (it != ids_.end() && *it == id) return static_cast<std::size_t>(it - ids_.begin());
  return std::nullopt;
}

std::size_t Ground::require_index(std::string_view id) const {
  auto idx = index_of(id);
  if (!idx) throw std::invalid_argument("element '" + std::string(id) + "' is not in the ground set");
  return *idx;
}

ElementMask Ground::mask_of(std::span<const std::string> ids) const {
  ElementMask mask = 0;
  for (const auto& id : ids) mask |= ElementMask{1} << require_index(id);
  return mask;
}

GroundPtr make_ground(std::vector<std::string> ids) { return std::make_shared<const Ground>(std::move(ids)); }

LabelledPartition::LabelledPartition(GroundPtr ground, std::vector<Block> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  if (!ground_) throw std::invalid_argument("null ground set");
  ElementMask seen = 0;
  for (const auto& b : blocks_) {
    if (b.members == 0) throw std::invalid_argument("labelled partition has an empty block");
    if ((b.members & ~ground_->full_mask()) != 0) throw std::invalid_argument("block member outside the ground set");
    if ((seen & b.members) != 0) throw std::invalid_argument("blocks of a labelled partition overlap");
    seen |= b.members;
  }
  if (seen != ground_->full_mask()) throw std::invalid_argument("blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return detail::lowest(a.members) < detail::lowest(b.members); });
}

LabelledPartition LabelledPartition::parse(std::string_view text) {
  bool comma_mode = text.find(',') != std::string_view::npos;
  std::vector<ParsedBlock> parsed;
  std::vector<std::string> ids;
  for (auto token : split(text, '|')) {
    parsed.push_back(parse_block(token, comma_mode, nullptr));
    ids.insert(ids.end(), parsed.back().members.begin(), parsed.back().members.end());
  }
  auto ground = make_ground(std::move(ids));
  std::vector<Block> blocks;
  for (const auto& pb : parsed) blocks.push_back({ground->mask_of(pb.members), pb.labelled});
  return LabelledPartition(std::move(ground), std::move(blocks));
}

LabelledPartition LabelledPartition::parse(std::string_view text, GroundPtr ground) {
  bool comma_mode = !ground->compact() || text.find(',') != std::string_view::npos;
  std::vector<Block> blocks;
  for (auto token : split(text, '|')) {
    auto pb = parse_block(token, comma_mode, ground.get());
    ElementMask mask = 0;
    for (const auto& id : pb.members) {
      ElementMask bit = ElementMask{1} << ground->require_index(id);
      if ((mask & bit) != 0) throw std::invalid_argument("element '" + id + "' repeated in a block");
      mask |= bit;
    }
    blocks.push_back({mask, pb.labelled});
  }
  return LabelledPartition(std::move(ground), std::move(blocks));
}

LabelledPartition LabelledPartition::finest(GroundPtr ground, ElementMask labelled) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < ground->size(); ++i) {
    ElementMask bit = ElementMask{1} << i;
    blocks.push_back({bit, (labelled & bit) != 0});
  }
  return LabelledPartition(std::move(ground), std::move(blocks));
}

LabelledPartition LabelledPartition::coarsest(GroundPtr ground, bool labelled) {
  ElementMask all = ground->full_mask();
  return LabelledPartition(std::move(ground), {{all, labelled}});
}

std::size_t LabelledPartition::labelled_count() const {
  return static_cast<std::size_t>(std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.labelled; }));
}

ElementMask LabelledPartition::labelled_members() const {
  ElementMask mask = 0;
  for (const auto& b : blocks_) {
    if (b.labelled) mask |= b.members;
  }
  return mask;
}

std::size_t LabelledPartition::block_of(std::size_t element) const {
  ElementMask bit = ElementMask{1} << element;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i].members & bit) != 0) return i;
  }
  throw std::out_of_range("element index outside the ground set");
}

std::string LabelledPartition::to_string() const {
  std::string out;
  const bool compact = ground_->compact();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += '|';
    bool first = true;
    for (ElementMask m = blocks_[i].members; m != 0; m &= m - 1) {
      if (!first && !compact) out += ',';
      out += (*ground_)[detail::lowest(m)];
      first = false;
    }
    if (blocks_[i].labelled) out += 'l';
  }
  return out;
}

std::size_t LabelledPartition::hash() const {
  std::size_t h = std::hash<std::size_t>{}(ground_->size());
  for (const auto& b : blocks_) {
    std::size_t v = std::hash<ElementMask>{}(b.members * 2 + (b.labelled ? 1 : 0));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator==(const LabelledPartition& a, const LabelledPartition& b) {
  if (a.blocks_ != b.blocks_) return false;
  return a.ground_ == b.ground_ || *a.ground_ == *b.ground_;
}

std::ostream& operator<<(std::ostream& os, const LabelledPartition& pi) { return os << pi.to_string(); }

bool refines(const LabelledPartition& sigma, const LabelledPartition& pi) {
  detail::require_same_ground(sigma, pi);
  for (const auto& b : sigma.blocks()) {
    const Block& host = pi.blocks()[pi.block_of(detail::lowest(b.members))];
    if ((b.members & ~host.members) != 0) return false;
    if (b.labelled && !host.labelled) return false;
  }
  return true;
}

LabelledPartition join(const LabelledPartition& sigma, const LabelledPartition& pi) {
  detail::require_same_ground(sigma, pi);
  std::vector<Block> merged(sigma.blocks().begin(), sigma.blocks().end());
  for (const auto& b : pi.blocks()) {
    Block acc = b;
    std::vector<Block> rest;
    rest.reserve(merged.size());
    for (const auto& m : merged) {
      if ((m.members & acc.members) != 0) {
        acc.members |= m.members;
        acc.labelled = acc.labelled || m.labelled;
      } else {
        rest.push_back(m);
      }
    }
    rest.push_back(acc);
    merged = std::move(rest);
  }
  return LabelledPartition(sigma.ground_ptr(), std::move(merged));
}

LabelledPartition restrict_to(const LabelledPartition& pi, std::span<const std::string> subset) {
  if (subset.empty()) throw std::invalid_argument("restriction to an empty set");
  auto sub = make_ground(std::vector<std::string>(subset.begin(), subset.end()));
  std::vector<std::size_t> old_index(sub->size());
  for (std::size_t i = 0; i < sub->size(); ++i) {
    auto idx = pi.ground().index_of((*sub)[i]);
    if (!idx) throw std::invalid_argument("restriction set is not a subset of the ground: '" + (*sub)[i] + "'");
    old_index[i] = *idx;
  }
  std::vector<Block> blocks;
  for (const auto& b : pi.blocks()) {
    ElementMask mask = 0;
    for (std::size_t i = 0; i < sub->size(); ++i) {
      if ((b.members >> old_index[i]) & 1U) mask |= ElementMask{1} << i;
    }
    if (mask != 0) blocks.push_back({mask, b.labelled});
  }
  return LabelledPartition(std::move(sub), std::move(blocks));
}

int m_indicator(const LabelledPartition& pi) { return pi.labelled_count() == 1 ? 1 : 0; }

LabelledPartition star(const LabelledPartition& pi) {
  if (pi.labelled_count() == 0) throw std::invalid_argument("star of a partition without labelled blocks");
  std::vector<Block> blocks;
  Block labelled{0, true};
  for (const auto& b : pi.blocks()) {
    if (b.labelled) {
      labelled.members |= b.members;
    } else {
      blocks.push_back(b);
    }
  }
  blocks.push_back(labelled);
  return LabelledPartition(pi.ground_ptr(), std::move(blocks));
}

std::vector<LabelledPartition> coarsenings(const LabelledPartition& base) {
  const auto base_blocks = base.blocks();
  const std::size_t k = base_blocks.size();
  std::vector<LabelledPartition> out;
  std::vector<Block> groups;
  std::vector<std::size_t> free_groups;
  detail::for_each_set_partition(k, [&](const std::vector<std::size_t>& assign, std::size_t count) {
    groups.assign(count, Block{});
    for (std::size_t i = 0; i < k; ++i) {
      groups[assign[i]].members |= base_blocks[i].members;
      groups[assign[i]].labelled = groups[assign[i]].labelled || base_blocks[i].labelled;
    }
    free_groups.clear();
    for (std::size_t g = 0; g < count; ++g) {
      if (!groups[g].labelled) free_groups.push_back(g);
    }
    const std::size_t choices = std::size_t{1} << free_groups.size();
    for (std::size_t bits = 0; bits < choices; ++bits) {
      std::vector<Block> blocks = groups;
      for (std::size_t j = 0; j < free_groups.size(); ++j) {
        if ((bits >> j) & 1U) blocks[free_groups[j]].labelled = true;
      }
      out.emplace_back(base.ground_ptr(), std::move(blocks));
    }
  });
  return out;
}

std::vector<LabelledPartition> all_labelled_partitions(const GroundPtr& ground) {
  return coarsenings(LabelledPartition::finest(ground, 0));
}

}  // namespace ksplit
