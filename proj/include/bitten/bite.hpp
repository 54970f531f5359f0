#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitten/kstar.hpp"
#include "bitten/laws.hpp"
#include "bitten/quotient.hpp"

namespace bitten {

struct BiteOptions {
  std::size_t max_kstar = std::size_t{1} << 20;
  std::size_t carrier_cap = 48;   // quantification domain for law sweeps
  int generation_depth = 2;       // Boolean combinations over the generators
};

// The concrete bitten algebra of a quotient: subsets of K* with Boolean
// operations, the two closure operators, and the quotient operations
// transported along sigma. Elements are interned family masks; all
// operation evaluation is memoized. Single-threaded use.
class BiteModel {
 public:
  using Value = int;  // interned family-mask id

  BiteModel(const QuotientPoset& q, const BiteOptions& opt = {});

  const std::vector<Value>& carrier() const { return carrier_; }
  const Poset& class_poset() const { return k_; }
  const KStar& kstar() const { return ks_; }

  Value intern(const Bits& mask) const;
  const Bits& mask_of(Value v) const { return interned_[static_cast<std::size_t>(v)]; }

  Value sigma_value(std::size_t cls) const { return sigma_[cls]; }
  // Class of a C1O2 value, -1 otherwise.
  int class_of_value(Value v) const;

  bool xi(Value v) const;
  std::optional<Value> op0(Sym s) const;
  std::optional<Value> op1(Sym s, Value a) const;
  std::optional<Value> op2(Sym s, Value a, Value b) const;
  std::string render(Value v) const;

  Value bot() const { return bot_; }
  Value top() const { return top_; }
  Value one() const { return one_; }
  // sigma image of the class of the empty set; the zero of the transported
  // quotient structure (distinct from the Boolean bottom).
  Value zero_class() const { return zero_class_; }

 private:
  Value cl1_value(Value v) const;
  Value cl2_value(Value v) const;
  bool c2_open(Value v) const;

  const QuotientPoset* q_;
  Poset k_;
  KStar ks_;
  std::vector<Value> sigma_;
  std::vector<Value> carrier_;
  Value bot_ = 0, top_ = 0, one_ = 0, zero_class_ = 0;

  mutable std::vector<Bits> interned_;
  mutable std::unordered_map<Bits, Value, BitsHash> intern_idx_;
  mutable std::unordered_map<Value, int> c1o2_class_;  // value id -> class, memo
  mutable std::unordered_map<Value, Value> memo_cl1_, memo_cl2_;
  mutable std::unordered_map<Value, int> memo_c2open_;
  mutable std::unordered_map<std::uint64_t, Value> memo_union_, memo_inter_;
};

Poset quotient_order_poset(const QuotientPoset& q);

BiteModel build_bite(const QuotientPoset& q, const BiteOptions& opt = {});

// Finite partial algebra given by explicit tables; same interface as
// BiteModel for the law evaluator. Used for abstract-pack checks on
// hand-built models.
class TableModel {
 public:
  using Value = int;

  explicit TableModel(std::size_t n);

  void set_constant(Sym s, Value v);
  void set_unary(Sym s, Value a, std::optional<Value> r);
  void set_binary(Sym s, Value a, Value b, std::optional<Value> r);
  void set_xi(Value v, bool flag);

  const std::vector<Value>& carrier() const { return carrier_; }
  bool xi(Value v) const { return xi_[static_cast<std::size_t>(v)]; }
  std::optional<Value> op0(Sym s) const;
  std::optional<Value> op1(Sym s, Value a) const;
  std::optional<Value> op2(Sym s, Value a, Value b) const;
  std::string render(Value v) const { return "#" + std::to_string(v); }

 private:
  std::size_t n_;
  std::vector<Value> carrier_;
  std::vector<bool> xi_;
  std::unordered_map<int, Value> constants_;
  std::unordered_map<std::uint64_t, std::optional<Value>> unary_, binary_;
};

}  // namespace bitten
