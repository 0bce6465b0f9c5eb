// treepath/heaps.hpp - Addressable min-priority queues with decrease-key:
// an array-backed binary heap and a Fibonacci heap. Handles are caller
// supplied nonnegative ints; a handle may be reused after extraction.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treepath {

enum class HeapKind { Binary, Fibonacci };

class BinaryMinHeap {
 public:
  void insert(int id, double key) {
    ensure_slot(id);
    if (slot_[id] >= 0)
      throw std::invalid_argument("heap: insert of live id " +
                                  std::to_string(id));
    entries_.push_back({key, id});
    slot_[id] = static_cast<int>(entries_.size()) - 1;
    sift_up(slot_[id]);
  }

  void decrease_key(int id, double key) {
    if (id < 0 || id >= static_cast<int>(slot_.size()) || slot_[id] < 0)
      throw std::invalid_argument("heap: decrease_key of dead id " +
                                  std::to_string(id));
    int at = slot_[id];
    if (key > entries_[at].key)
      throw std::invalid_argument("heap: decrease_key would raise key");
    entries_[at].key = key;
    sift_up(at);
  }

  std::pair<int, double> extract_min() {
    if (entries_.empty()) throw std::logic_error("heap: extract on empty");
    Entry top = entries_[0];
    slot_[top.id] = kDead;
    entries_[0] = entries_.back();
    entries_.pop_back();
    if (!entries_.empty()) {
      slot_[entries_[0].id] = 0;
      sift_down(0);
    }
    return {top.id, top.key};
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool contains(int id) const {
    return id >= 0 && id < static_cast<int>(slot_.size()) && slot_[id] >= 0;
  }
  double key_of(int id) const {
    if (!contains(id)) throw std::invalid_argument("heap: key_of dead id");
    return entries_[slot_[id]].key;
  }

 private:
  struct Entry {
    double key;
    int id;
  };
  static constexpr int kDead = -2;

  void ensure_slot(int id) {
    if (id < 0) throw std::invalid_argument("heap: negative id");
    if (id >= static_cast<int>(slot_.size())) slot_.resize(id + 1, -1);
  }

  void sift_up(int at) {
    Entry e = entries_[at];
    while (at > 0) {
      int up = (at - 1) / 2;
      if (entries_[up].key <= e.key) break;
      entries_[at] = entries_[up];
      slot_[entries_[at].id] = at;
      at = up;
    }
    entries_[at] = e;
    slot_[e.id] = at;
  }

  void sift_down(int at) {
    int count = static_cast<int>(entries_.size());
    Entry e = entries_[at];
    while (true) {
      int child = 2 * at + 1;
      if (child >= count) break;
      if (child + 1 < count && entries_[child + 1].key < entries_[child].key)
        ++child;
      if (entries_[child].key >= e.key) break;
      entries_[at] = entries_[child];
      slot_[entries_[at].id] = at;
      at = child;
    }
    entries_[at] = e;
    slot_[e.id] = at;
  }

  std::vector<Entry> entries_;
  std::vector<int> slot_;  // id -> index, -1 unknown, kDead extracted
};

// Cascading-cut Fibonacci heap. Consolidation snapshots the root list before
// linking; mutating the circular list while walking it is the classic bug in
// widely copied pseudocode.
class FibonacciMinHeap {
 public:
  void insert(int id, double key) {
    ensure_slot(id);
    if (slot_[id] >= 0)
      throw std::invalid_argument("heap: insert of live id " +
                                  std::to_string(id));
    int x = new_node(id, key);
    add_root(x);
    if (min_ < 0 || key < nodes_[min_].key) min_ = x;
    ++size_;
  }

  void decrease_key(int id, double key) {
    if (id < 0 || id >= static_cast<int>(slot_.size()) || slot_[id] < 0)
      throw std::invalid_argument("heap: decrease_key of dead id " +
                                  std::to_string(id));
    int x = slot_[id];
    if (key > nodes_[x].key)
      throw std::invalid_argument("heap: decrease_key would raise key");
    nodes_[x].key = key;
    int p = nodes_[x].parent;
    if (p >= 0 && nodes_[x].key < nodes_[p].key) {
      cut(x, p);
      cascading_cut(p);
    }
    if (nodes_[x].key < nodes_[min_].key) min_ = x;
  }

  std::pair<int, double> extract_min() {
    if (size_ == 0) throw std::logic_error("heap: extract on empty");
    int z = min_;
    // Promote the children of the minimum to the root list.
    int child = nodes_[z].child;
    if (child >= 0) {
      int c = child;
      do {
        int next = nodes_[c].right;
        nodes_[c].parent = -1;
        nodes_[c].marked = false;
        add_root(c);
        c = next;
      } while (c != child);
    }
    int replacement = (nodes_[z].right == z) ? -1 : nodes_[z].right;
    remove_from_siblings(z);
    --size_;
    std::pair<int, double> out{nodes_[z].id, nodes_[z].key};
    slot_[nodes_[z].id] = -2;
    if (z == roots_entry_) roots_entry_ = replacement;
    if (size_ == 0) {
      min_ = -1;
      roots_entry_ = -1;
    } else {
      consolidate();
    }
    free_node(z);
    return out;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(int id) const {
    return id >= 0 && id < static_cast<int>(slot_.size()) && slot_[id] >= 0;
  }
  double key_of(int id) const {
    if (!contains(id)) throw std::invalid_argument("heap: key_of dead id");
    return nodes_[slot_[id]].key;
  }

  /// Structural self-check for tests: sibling-ring integrity, heap order,
  /// degree counts, node count, and the golden-ratio degree bound.
  void validate() const {
    if (size_ == 0) {
      if (min_ >= 0 || roots_entry_ >= 0)
        throw std::logic_error("fib: dangling pointers in empty heap");
      return;
    }
    std::size_t counted = 0;
    double best = nodes_[min_].key;
    int max_degree = 0;
    std::vector<int> stack;
    int r = roots_entry_;
    do {
      if (nodes_[r].parent >= 0)
        throw std::logic_error("fib: root with parent");
      stack.push_back(r);
      r = nodes_[r].right;
    } while (r != roots_entry_);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++counted;
      if (nodes_[x].key < best)
        throw std::logic_error("fib: min pointer is not minimal");
      max_degree = std::max(max_degree, nodes_[x].degree);
      int child = nodes_[x].child, seen = 0;
      if (child >= 0) {
        int c = child;
        do {
          if (nodes_[c].parent != x)
            throw std::logic_error("fib: child with wrong parent");
          if (nodes_[c].key < nodes_[x].key)
            throw std::logic_error("fib: heap order violated");
          if (nodes_[nodes_[c].right].left != c)
            throw std::logic_error("fib: sibling ring broken");
          stack.push_back(c);
          ++seen;
          c = nodes_[c].right;
        } while (c != child);
      }
      if (seen != nodes_[x].degree)
        throw std::logic_error("fib: degree does not match child count");
    }
    if (counted != size_) throw std::logic_error("fib: node count mismatch");
    double bound = std::log(static_cast<double>(size_)) /
                       std::log((1.0 + std::sqrt(5.0)) / 2.0) +
                   1e-9;
    if (max_degree > bound)
      throw std::logic_error("fib: degree bound exceeded");
  }

 private:
  struct Node {
    double key = 0.0;
    int id = -1;
    int parent = -1;
    int child = -1;
    int left = -1;
    int right = -1;
    int degree = 0;
    bool marked = false;
  };

  void ensure_slot(int id) {
    if (id < 0) throw std::invalid_argument("heap: negative id");
    if (id >= static_cast<int>(slot_.size())) slot_.resize(id + 1, -1);
  }

  int new_node(int id, double key) {
    int x;
    if (free_ >= 0) {
      x = free_;
      free_ = nodes_[x].right;
      nodes_[x] = Node{};
    } else {
      nodes_.push_back(Node{});
      x = static_cast<int>(nodes_.size()) - 1;
    }
    nodes_[x].key = key;
    nodes_[x].id = id;
    nodes_[x].left = nodes_[x].right = x;
    slot_[id] = x;
    return x;
  }

  void free_node(int x) {
    nodes_[x].right = free_;
    free_ = x;
  }

  void remove_from_siblings(int x) {
    nodes_[nodes_[x].left].right = nodes_[x].right;
    nodes_[nodes_[x].right].left = nodes_[x].left;
    nodes_[x].left = nodes_[x].right = x;
  }

  void add_root(int x) {
    nodes_[x].left = nodes_[x].right = x;
    if (roots_entry_ < 0) {
      roots_entry_ = x;
    } else {
      int r = roots_entry_;
      nodes_[x].right = nodes_[r].right;
      nodes_[x].left = r;
      nodes_[nodes_[r].right].left = x;
      nodes_[r].right = x;
    }
  }

  // Makes y a child of x; both must be roots and key(x) <= key(y).
  void link(int y, int x) {
    remove_from_siblings(y);
    nodes_[y].parent = x;
    nodes_[y].marked = false;
    if (nodes_[x].child < 0) {
      nodes_[x].child = y;
    } else {
      int c = nodes_[x].child;
      nodes_[y].right = nodes_[c].right;
      nodes_[y].left = c;
      nodes_[nodes_[c].right].left = y;
      nodes_[c].right = y;
    }
    ++nodes_[x].degree;
  }

  void consolidate() {
    std::vector<int> roots;
    int r = roots_entry_;
    do {
      roots.push_back(r);
      r = nodes_[r].right;
    } while (r != roots_entry_);

    std::vector<int> by_degree(96, -1);
    for (int x : roots) {
      int d = nodes_[x].degree;
      while (by_degree[d] >= 0) {
        int y = by_degree[d];
        if (nodes_[y].key < nodes_[x].key) std::swap(x, y);
        link(y, x);
        by_degree[d] = -1;
        ++d;
      }
      by_degree[d] = x;
    }

    roots_entry_ = -1;
    min_ = -1;
    for (int x : by_degree) {
      if (x < 0) continue;
      add_root(x);
      if (min_ < 0 || nodes_[x].key < nodes_[min_].key) min_ = x;
    }
  }

  void cut(int x, int parent) {
    if (nodes_[parent].child == x)
      nodes_[parent].child = (nodes_[x].right == x) ? -1 : nodes_[x].right;
    remove_from_siblings(x);
    --nodes_[parent].degree;
    nodes_[x].parent = -1;
    nodes_[x].marked = false;
    add_root(x);
  }

  void cascading_cut(int x) {
    int p = nodes_[x].parent;
    while (p >= 0) {
      if (!nodes_[x].marked) {
        nodes_[x].marked = true;
        break;
      }
      cut(x, p);
      x = p;
      p = nodes_[x].parent;
    }
  }

  std::vector<Node> nodes_;
  std::vector<int> slot_;  // id -> node index, -1 unknown, -2 extracted
  int min_ = -1;
  int roots_entry_ = -1;  // any root, entry point into the circular list
  int free_ = -1;
  std::size_t size_ = 0;
};

struct HeapCommand {
  enum class Kind { Insert, Decrease, Extract };
  Kind kind = Kind::Insert;
  int id = 0;
  double key = 0.0;

  static HeapCommand insert(int id, double key) {
    return {Kind::Insert, id, key};
  }
  static HeapCommand decrease(int id, double key) {
    return {Kind::Decrease, id, key};
  }
  static HeapCommand extract() { return {Kind::Extract, 0, 0.0}; }
};

template <typename Heap>
std::vector<std::pair<int, double>> run_heap_trace(
    const std::vector<HeapCommand>& commands) {
  Heap heap;
  std::vector<std::pair<int, double>> extracted;
  for (const HeapCommand& c : commands) {
    switch (c.kind) {
      case HeapCommand::Kind::Insert:
        heap.insert(c.id, c.key);
        break;
      case HeapCommand::Kind::Decrease:
        heap.decrease_key(c.id, c.key);
        break;
      case HeapCommand::Kind::Extract:
        extracted.push_back(heap.extract_min());
        break;
    }
  }
  return extracted;
}

/// Runs a command trace against the chosen heap kind and returns the
/// extraction sequence. Key sequences are deterministic; extraction order
/// among equal keys is not part of the contract.
inline std::vector<std::pair<int, double>> heap_trace(
    HeapKind kind, const std::vector<HeapCommand>& commands) {
  return kind == HeapKind::Binary ? run_heap_trace<BinaryMinHeap>(commands)
                                  : run_heap_trace<FibonacciMinHeap>(commands);
}

}  // namespace treepath
