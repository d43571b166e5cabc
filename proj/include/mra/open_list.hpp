#pragma once

#include <cassert>
#include <cstddef>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mra/cell.hpp"

namespace mra {

struct OpenEntry
{
  double key = 0.0;
  double g = 0.0;
  StateId id = 0;
};

/// Entry a is served before b: smaller key, then larger g, then smaller id.
inline bool served_before(const OpenEntry& a, const OpenEntry& b) noexcept
{
  if (a.key != b.key) return a.key < b.key;
  if (a.g != b.g) return a.g > b.g;
  return a.id < b.id;
}

/// Indexed binary min-heap with at most one entry per state and in-place key
/// updates.
class OpenList
{
public:
  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(StateId id) const { return position_.count(id) != 0; }

  /// Smallest stored key, or infinity when empty.
  double min_key() const noexcept
  {
    return heap_.empty() ? std::numeric_limits<double>::infinity() : heap_.front().key;
  }

  const OpenEntry& top() const
  {
    assert(!heap_.empty());
    return heap_.front();
  }

  /// Inserts id, or replaces its key/g if already present.
  void push_or_update(StateId id, double key, double g)
  {
    const OpenEntry entry{key, g, id};
    if (auto it = position_.find(id); it != position_.end()) {
      const std::size_t at = it->second;
      const bool up = served_before(entry, heap_[at]);
      heap_[at] = entry;
      if (up)
        sift_up(at);
      else
        sift_down(at);
      return;
    }
    heap_.push_back(entry);
    position_[id] = heap_.size() - 1;
    sift_up(heap_.size() - 1);
  }

  OpenEntry pop()
  {
    assert(!heap_.empty());
    const OpenEntry out = heap_.front();
    position_.erase(out.id);
    if (heap_.size() > 1) {
      heap_.front() = heap_.back();
      heap_.pop_back();
      position_[heap_.front().id] = 0;
      sift_down(0);
    } else {
      heap_.pop_back();
    }
    return out;
  }

  void clear()
  {
    heap_.clear();
    position_.clear();
  }

private:
  void place(std::size_t at, const OpenEntry& e)
  {
    heap_[at] = e;
    position_[e.id] = at;
  }

  void sift_up(std::size_t at)
  {
    const OpenEntry e = heap_[at];
    while (at > 0) {
      const std::size_t parent = (at - 1) / 2;
      if (!served_before(e, heap_[parent])) break;
      place(at, heap_[parent]);
      at = parent;
    }
    place(at, e);
  }

  void sift_down(std::size_t at)
  {
    const OpenEntry e = heap_[at];
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t child = 2 * at + 1;
      if (child >= n) break;
      if (child + 1 < n && served_before(heap_[child + 1], heap_[child])) ++child;
      if (!served_before(heap_[child], e)) break;
      place(at, heap_[child]);
      at = child;
    }
    place(at, e);
  }

  std::vector<OpenEntry> heap_;
  std::unordered_map<StateId, std::size_t> position_;
};

} // namespace mra
