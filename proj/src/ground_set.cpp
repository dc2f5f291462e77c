#include "hopfcm/ground_set.hpp"

#include <algorithm>
#include <cstdlib>

#include "hopfcm/errors.hpp"

namespace hopfcm {

const char* to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::DuplicateElement: return "duplicate-element";
    case ValidationErrorKind::UnknownVertex: return "unknown-vertex";
    case ValidationErrorKind::SelfLoop: return "self-loop";
    case ValidationErrorKind::DuplicateEdge: return "duplicate-edge";
    case ValidationErrorKind::DirectedCycle: return "directed-cycle";
    case ValidationErrorKind::OrderCycle: return "order-cycle";
    case ValidationErrorKind::Malformed: return "malformed";
  }
  return "unknown";
}

namespace {

template <typename T>
void read_env(const char* name, T& target) {
  if (const char* value = std::getenv(name)) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end != value && *end == '\0') target = static_cast<T>(parsed);
  }
}

}  // namespace

Limits limits_from_environment() {
  Limits limits;
  read_env("HOPFCM_MAX_VERTICES", limits.max_vertices);
  read_env("HOPFCM_MAX_FACES", limits.max_faces);
  read_env("HOPFCM_MAX_ENUMERATION", limits.max_enumeration);
  return limits;
}

Mask compress(Mask value, Mask within) {
  Mask out = 0;
  int bit = 0;
  for (Mask rest = within; rest != 0; rest &= rest - 1, ++bit) {
    const Mask low = rest & (~rest + 1);
    if (value & low) out |= Mask{1} << bit;
  }
  return out;
}

Mask expand(Mask value, Mask within) {
  Mask out = 0;
  int bit = 0;
  for (Mask rest = within; rest != 0; rest &= rest - 1, ++bit) {
    const Mask low = rest & (~rest + 1);
    if (value & (Mask{1} << bit)) out |= low;
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  const auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) {
    throw ValidationError(ValidationErrorKind::DuplicateElement, "duplicate element '" + *dup + "'");
  }
  if (size() > kMaxGroundSize) {
    throw InvalidInput("ground set has " + std::to_string(size()) + " elements; at most " +
                       std::to_string(kMaxGroundSize) + " are supported");
  }
}

std::optional<int> GroundSet::find(std::string_view label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw ValidationError(ValidationErrorKind::UnknownVertex,
                        "unknown element '" + std::string(label) + "'");
}

Mask GroundSet::mask_of(std::span<const std::string> labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Mask{1} << index_of(l);
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (m & (Mask{1} << i)) out.push_back(labels_[static_cast<std::size_t>(i)]);
  }
  return out;
}

GroundSet GroundSet::restricted(Mask m) const { return GroundSet(labels_of(m)); }

std::string GroundSet::render(Mask m) const {
  std::string out;
  for (const auto& l : labels_of(m)) {
    if (!out.empty()) out += '|';
    out += l;
  }
  return out;
}

GroundSet disjoint_union(const GroundSet& a, const GroundSet& b) {
  std::vector<std::string> all = a.labels();
  for (const auto& l : b.labels()) {
    if (a.find(l)) throw InvalidInput("ground sets overlap in '" + l + "'");
    all.push_back(l);
  }
  return GroundSet(std::move(all));
}

}  // namespace hopfcm
