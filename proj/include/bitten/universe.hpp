#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bitten {

// Bad user input (unknown element names, malformed files, non-covering
// granulations). The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured bound was exceeded (power-set sweeps, up-set enumeration,
// subfamily enumeration). Also exit code 2 at the CLI.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mask = std::uint64_t;

// Finite carrier set. Element order is input order and fixes all
// deterministic iteration downstream.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("universe must be nonempty");
    if (names_.size() > 64) throw InputError("universe too large (max 64 elements)");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw InputError("duplicate element name: " + names_[i]);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("unknown element name: " + name);
    return it->second;
  }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  Mask full_mask() const {
    return size() == 64 ? ~0ull : ((1ull << size()) - 1);
  }

  Mask mask_of(const std::vector<std::string>& elems) const {
    Mask m = 0;
    for (const auto& e : elems) m |= Mask{1} << index(e);
    return m;
  }

  std::vector<std::string> elements_of(Mask m) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (m >> i & 1) out.push_back(names_[i]);
    return out;
  }

  // Renders a subset as {a,b,c} in universe order; {} when empty.
  std::string render(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!(m >> i & 1)) continue;
      if (!first) s += ',';
      s += names_[i];
      first = false;
    }
    s += '}';
    return s;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Subset of a universe, a typed wrapper over a bit mask. Set algebra is
// only defined between subsets of the same universe.
struct Subset {
  const Universe* universe = nullptr;
  Mask mask = 0;

  Subset() = default;
  Subset(const Universe& u, Mask m) : universe(&u), mask(m & u.full_mask()) {}

  bool contains(std::size_t i) const { return mask >> i & 1; }
  std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(mask)); }
  std::string render() const { return universe->render(mask); }

  friend bool same_universe(const Subset& a, const Subset& b) {
    return a.universe == b.universe;
  }
};

inline void require_same_universe(const Subset& a, const Subset& b) {
  if (a.universe != b.universe)
    throw InputError("subsets belong to different universes");
}

}  // namespace bitten
