#include "bitten/bite.hpp"

#include <algorithm>

namespace bitten {

Poset quotient_order_poset(const QuotientPoset& q) {
  const std::size_t c = q.class_count();
  std::vector<std::vector<bool>> leq(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) leq[a][b] = q.leq(a, b);
  return Poset(leq);
}

BiteModel::BiteModel(const QuotientPoset& q, const BiteOptions& opt)
    : q_(&q), k_(quotient_order_poset(q)), ks_(k_, opt.max_kstar) {
  const std::size_t c = k_.size();

  bot_ = intern(Bits(ks_.size()));
  top_ = intern(Bits(ks_.size(), true));
  sigma_.resize(c);
  for (std::size_t p = 0; p < c; ++p) {
    sigma_[p] = intern(ks_.up(p));
    c1o2_class_[sigma_[p]] = static_cast<int>(p);
  }
  one_ = sigma_[q.top()];
  zero_class_ = sigma_[q.bottom()];

  // Carrier: constants and the C1O2 sets, then Boolean combinations up to
  // the generation depth, deduplicated, capped deterministically.
  std::vector<Value> pool;
  auto add = [&](Value v) {
    if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
  };
  add(bot_);
  add(top_);
  add(one_);
  for (std::size_t p = 0; p < c; ++p) add(sigma_[p]);
  std::size_t layer_begin = 0;
  for (int depth = 0; depth < opt.generation_depth; ++depth) {
    std::size_t layer_end = pool.size();
    for (std::size_t i = layer_begin; i < layer_end && pool.size() < opt.carrier_cap; ++i) {
      add(*op1(Sym::Compl, pool[i]));
      for (std::size_t j = 0; j <= i && pool.size() < opt.carrier_cap; ++j) {
        add(*op2(Sym::Union, pool[i], pool[j]));
        if (pool.size() >= opt.carrier_cap) break;
        add(*op2(Sym::Inter, pool[i], pool[j]));
      }
    }
    layer_begin = 0;
    if (pool.size() >= opt.carrier_cap) break;
  }
  if (pool.size() > opt.carrier_cap) pool.resize(opt.carrier_cap);
  carrier_ = std::move(pool);
}

BiteModel::Value BiteModel::intern(const Bits& mask) const {
  auto it = intern_idx_.find(mask);
  if (it != intern_idx_.end()) return it->second;
  Value v = static_cast<Value>(interned_.size());
  interned_.push_back(mask);
  intern_idx_.emplace(mask, v);
  return v;
}

int BiteModel::class_of_value(Value v) const {
  auto it = c1o2_class_.find(v);
  return it == c1o2_class_.end() ? -1 : it->second;
}

BiteModel::Value BiteModel::cl1_value(Value v) const {
  auto it = memo_cl1_.find(v);
  if (it != memo_cl1_.end()) return it->second;
  Value r = intern(cl1(ks_, mask_of(v), mask_of(top_)));
  memo_cl1_.emplace(v, r);
  return r;
}

BiteModel::Value BiteModel::cl2_value(Value v) const {
  auto it = memo_cl2_.find(v);
  if (it != memo_cl2_.end()) return it->second;
  Value r = intern(cl2(ks_, mask_of(v), mask_of(top_)));
  memo_cl2_.emplace(v, r);
  return r;
}

bool BiteModel::c2_open(Value v) const {
  auto it = memo_c2open_.find(v);
  if (it != memo_c2open_.end()) return it->second != 0;
  Value comp = intern(mask_of(v).complement());
  bool open = cl2_value(comp) == comp;
  memo_c2open_.emplace(v, open ? 1 : 0);
  return open;
}

bool BiteModel::xi(Value v) const { return cl1_value(v) == v && c2_open(v); }

std::optional<BiteModel::Value> BiteModel::op0(Sym s) const {
  switch (s) {
    case Sym::Bot: return bot_;
    case Sym::Top: return top_;
    case Sym::One: return one_;
    default: return std::nullopt;
  }
}

std::optional<BiteModel::Value> BiteModel::op1(Sym s, Value a) const {
  switch (s) {
    case Sym::Compl:
      return intern(mask_of(a).complement());
    case Sym::Cl1:
      return cl1_value(a);
    case Sym::Cl2:
      return cl2_value(a);
    case Sym::QLower: {
      if (a == bot_) return bot_;  // installed directly; bottom is not C1O2
      int cls = xi(a) ? class_of_value(a) : -1;
      if (cls < 0) return std::nullopt;
      return sigma_[q_->l_class(static_cast<std::size_t>(cls))];
    }
    case Sym::QDiamond: {
      int cls = xi(a) ? class_of_value(a) : -1;
      if (cls < 0) return std::nullopt;
      return sigma_[q_->diamond_class(static_cast<std::size_t>(cls))];
    }
    case Sym::QNeg: {
      int cls = xi(a) ? class_of_value(a) : -1;
      if (cls < 0) return std::nullopt;
      auto n = q_->neg_class(static_cast<std::size_t>(cls));
      if (!n) return std::nullopt;
      return sigma_[*n];
    }
    default:
      return std::nullopt;
  }
}

std::optional<BiteModel::Value> BiteModel::op2(Sym s, Value a, Value b) const {
  auto key = [&](Value x, Value y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
           static_cast<std::uint32_t>(y);
  };
  switch (s) {
    case Sym::Union: {
      auto it = memo_union_.find(key(a, b));
      if (it != memo_union_.end()) return it->second;
      Value r = intern(mask_of(a) | mask_of(b));
      memo_union_.emplace(key(a, b), r);
      return r;
    }
    case Sym::Inter: {
      auto it = memo_inter_.find(key(a, b));
      if (it != memo_inter_.end()) return it->second;
      Value r = intern(mask_of(a) & mask_of(b));
      memo_inter_.emplace(key(a, b), r);
      return r;
    }
    case Sym::Join: {
      if (!c2_open(a) || !c2_open(b)) return std::nullopt;
      Value u = *op2(Sym::Union, a, b);
      Value r = cl1_value(u);
      if (!c2_open(r)) return std::nullopt;
      return r;
    }
    case Sym::Meet: {
      if (!c2_open(a) || !c2_open(b)) return std::nullopt;
      Value u = *op2(Sym::Inter, a, b);
      Value r = cl1_value(u);
      if (!c2_open(r)) return std::nullopt;
      return r;
    }
    case Sym::QMeet: {
      int ca = xi(a) ? class_of_value(a) : -1;
      int cb = xi(b) ? class_of_value(b) : -1;
      if (ca < 0 || cb < 0) return std::nullopt;
      auto mres = q_->meet(static_cast<std::size_t>(ca), static_cast<std::size_t>(cb));
      if (!mres) return std::nullopt;
      return sigma_[*mres];
    }
    case Sym::QJoin: {
      int ca = xi(a) ? class_of_value(a) : -1;
      int cb = xi(b) ? class_of_value(b) : -1;
      if (ca < 0 || cb < 0) return std::nullopt;
      auto jres = q_->join(static_cast<std::size_t>(ca), static_cast<std::size_t>(cb));
      if (!jres) return std::nullopt;
      return sigma_[*jres];
    }
    default:
      return std::nullopt;
  }
}

std::string BiteModel::render(Value v) const {
  int cls = class_of_value(v);
  if (v == bot_) return "bot";
  if (v == top_) return "top";
  if (cls >= 0) return "sigma(" + std::to_string(cls) + ")";
  return "family[" + std::to_string(mask_of(v).count()) + "]";
}

BiteModel build_bite(const QuotientPoset& q, const BiteOptions& opt) {
  return BiteModel(q, opt);
}

TableModel::TableModel(std::size_t n) : n_(n), xi_(n, false) {
  for (std::size_t i = 0; i < n; ++i) carrier_.push_back(static_cast<Value>(i));
}

namespace {
std::uint64_t ukey(Sym s, int a) {
  return (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint32_t>(a);
}
std::uint64_t bkey(Sym s, int a, int b) {
  return (static_cast<std::uint64_t>(s) << 48) |
         (static_cast<std::uint64_t>(static_cast<std::uint16_t>(a)) << 16) |
         static_cast<std::uint16_t>(b);
}
}  // namespace

void TableModel::set_constant(Sym s, Value v) { constants_[static_cast<int>(s)] = v; }
void TableModel::set_unary(Sym s, Value a, std::optional<Value> r) { unary_[ukey(s, a)] = r; }
void TableModel::set_binary(Sym s, Value a, Value b, std::optional<Value> r) {
  binary_[bkey(s, a, b)] = r;
}
void TableModel::set_xi(Value v, bool flag) { xi_[static_cast<std::size_t>(v)] = flag; }

std::optional<TableModel::Value> TableModel::op0(Sym s) const {
  auto it = constants_.find(static_cast<int>(s));
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

std::optional<TableModel::Value> TableModel::op1(Sym s, Value a) const {
  auto it = unary_.find(ukey(s, a));
  if (it == unary_.end()) return std::nullopt;
  return it->second;
}

std::optional<TableModel::Value> TableModel::op2(Sym s, Value a, Value b) const {
  auto it = binary_.find(bkey(s, a, b));
  if (it == binary_.end()) return std::nullopt;
  return it->second;
}

}  // namespace bitten
