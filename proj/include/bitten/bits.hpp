#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bitten {

// Fixed-size dynamic bit vector. Used wherever the ambient set is larger
// than a machine word (families of isotone maps, carriers of bitten
// algebras); plain uint64_t masks are used for subsets of a universe.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool fill = false)
      : n_(n), w_((n + 63) / 64, fill ? ~0ull : 0ull) {
    trim();
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  Bits complement() const {
    Bits r(n_, true);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~w_[i];
    return r;
  }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Lexicographic on words; gives a stable total order for deterministic
  // output, nothing more.
  bool operator<(const Bits& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        std::size_t b = static_cast<std::size_t>(__builtin_ctzll(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull ^ n_;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (~0ull) >> (64 - n_ % 64);
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace bitten
