#include "bitten/poset.hpp"

#include <algorithm>
#include <random>

namespace bitten {

Poset::Poset(const std::vector<std::vector<bool>>& leq) : n_(leq.size()) {
  up_.assign(n_, Bits(n_));
  down_.assign(n_, Bits(n_));
  for (std::size_t p = 0; p < n_; ++p) {
    if (!leq[p][p]) throw InputError("poset order must be reflexive");
    for (std::size_t q = 0; q < n_; ++q) {
      if (leq[p][q]) {
        up_[p].set(q);
        down_[q].set(p);
      }
      if (p != q && leq[p][q] && leq[q][p])
        throw InputError("poset order must be antisymmetric");
    }
  }
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      if (leq[p][q] && !up_[q].is_subset_of(up_[p]))
        throw InputError("poset order must be transitive");
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n_ && cover; ++m)
        if (m != a && m != b && leq(a, m) && leq(m, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  return Poset(leq);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  return Poset(leq);
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng) < density) leq[i][j] = true;
  // transitive closure
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (leq[a][m] && leq[m][b]) leq[a][b] = true;
  return Poset(leq);
}

namespace {

bool extend_isomorphism(const Poset& a, const Poset& b, std::vector<int>& img,
                        std::vector<bool>& used, std::size_t p) {
  const std::size_t n = a.size();
  if (p == n) return true;
  for (std::size_t q = 0; q < n; ++q) {
    if (used[q]) continue;
    if (a.up_row(p).count() != b.up_row(q).count() ||
        a.down_row(p).count() != b.down_row(q).count())
      continue;
    bool ok = true;
    for (std::size_t r = 0; r < p && ok; ++r) {
      if (a.leq(p, r) != b.leq(q, static_cast<std::size_t>(img[r]))) ok = false;
      if (a.leq(r, p) != b.leq(static_cast<std::size_t>(img[r]), q)) ok = false;
    }
    if (!ok) continue;
    img[p] = static_cast<int>(q);
    used[q] = true;
    if (extend_isomorphism(a, b, img, used, p + 1)) return true;
    used[q] = false;
  }
  return false;
}

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> da, db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da.push_back(a.up_row(i).count() * 1000 + a.down_row(i).count());
    db.push_back(b.up_row(i).count() * 1000 + b.down_row(i).count());
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> img(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return extend_isomorphism(a, b, img, used, 0);
}

std::vector<Bits> enumerate_upsets(const Poset& k, std::size_t cap) {
  const std::size_t n = k.size();
  // Linear extension, maximal elements first, so that every strict
  // successor of an element is decided before the element itself.
  std::vector<std::size_t> order;
  {
    std::vector<bool> placed(n, false);
    for (std::size_t round = 0; round < n; ++round) {
      for (std::size_t p = 0; p < n; ++p) {
        if (placed[p]) continue;
        bool maximal = true;
        for (std::size_t q = 0; q < n && maximal; ++q)
          if (q != p && !placed[q] && k.leq(p, q)) maximal = false;
        if (maximal) {
          order.push_back(p);
          placed[p] = true;
          break;
        }
      }
    }
  }
  std::vector<Bits> out;
  Bits current(n);
  // Iterative DFS over in/out decisions.
  struct Frame {
    std::size_t depth;
    int state;  // 0: try in (if allowed), 1: try out, 2: done
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.depth == n) {
      out.push_back(current);
      if (out.size() > cap) throw CapError("up-set enumeration cap exceeded");
      stack.pop_back();
      continue;
    }
    std::size_t p = order[f.depth];
    if (f.state == 0) {
      f.state = 1;
      bool allowed = true;
      k.up_row(p).for_each([&](std::size_t q) {
        if (q != p && !current.test(q)) allowed = false;
      });
      if (allowed) {
        current.set(p);
        stack.push_back({f.depth + 1, 0});
        continue;
      }
    }
    if (f.state == 1) {
      f.state = 2;
      current.reset(p);
      stack.push_back({f.depth + 1, 0});
      continue;
    }
    current.reset(p);
    stack.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bitten
