#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tidal {

/// Supported Cartan types. Each may be taken finite or affine.
enum class CartanType { A1, A2, A3, B2, G2 };

CartanType parse_cartan_type(std::string_view label);
std::string to_string(CartanType t);

using Generator = std::uint8_t;
using Word = std::vector<Generator>;

/// Renders a word as hyphen-joined generator indices; identity is "".
std::string format_word(const Word& w);
/// Inverse of format_word. Accepts "e" as the identity as well.
Word parse_word(std::string_view text);

/// Element of a Coxeter group, held as its ShortLex normal form (the
/// lexicographically smallest reduced word). Only a CoxeterSystem creates
/// these, so two elements compare equal iff they are the same group element.
namespace detail {
class ElementCache;
}

class CoxElt {
 public:
  CoxElt() = default;  // identity

  const Word& word() const { return word_; }
  unsigned length() const { return static_cast<unsigned>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  std::string str() const { return format_word(word_); }

  friend bool operator==(const CoxElt&, const CoxElt&) = default;
  /// (length, lexicographic) order, the deterministic output order.
  friend std::strong_ordering operator<=>(const CoxElt& a, const CoxElt& b);

 private:
  friend class CoxeterSystem;
  friend class detail::ElementCache;
  explicit CoxElt(Word w) : word_(std::move(w)) {}
  Word word_;
};

/// Interned element handle, valid for the CoxeterSystem that produced it.
enum class ElemId : std::uint32_t {};
constexpr std::uint32_t index(ElemId e) { return static_cast<std::uint32_t>(e); }

enum class Side { Left, Right };

/// Finite or affine Coxeter system of one of the built-in Cartan types.
/// The generator set is {1..r} for finite systems and {0..r} for affine ones;
/// `finite_subset()` is always {1..r}. Copies share one element cache, and
/// all members are safe to call concurrently.
class CoxeterSystem {
 public:
  static CoxeterSystem build(CartanType type, bool affine);
  static CoxeterSystem build(std::string_view label, bool affine) {
    return build(parse_cartan_type(label), affine);
  }

  CartanType type() const { return type_; }
  bool affine() const { return affine_; }
  std::string label() const;
  /// Number of generators (r+1 when affine).
  unsigned rank() const { return static_cast<unsigned>(gens_.size()); }
  unsigned finite_rank() const { return finite_rank_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::vector<Generator> finite_subset() const;
  bool is_finite_generator(Generator s) const { return s != 0; }
  /// Coxeter matrix entry m(s,t); 0 encodes infinity.
  unsigned coxeter_order(Generator s, Generator t) const;
  /// Generalized Cartan matrix entry <alpha_s^vee, alpha_t>.
  int cartan(Generator s, Generator t) const;
  /// Length of the longest element of the finite Weyl group W_f.
  unsigned longest_finite_length() const { return w0_length_; }

  // --- value-level interface -------------------------------------------
  CoxElt identity() const { return {}; }
  CoxElt generator(Generator s) const;
  /// Normal form of an arbitrary (not necessarily reduced) word.
  CoxElt element(const Word& w) const;
  CoxElt element(std::string_view w) const { return element(parse_word(w)); }
  CoxElt multiply(const CoxElt& x, const CoxElt& y) const;
  CoxElt inverse(const CoxElt& x) const;
  unsigned length(const CoxElt& x) const { return x.length(); }
  std::vector<Generator> descents(const CoxElt& x, Side side) const;
  bool is_descent(const CoxElt& x, Generator s, Side side) const;
  bool bruhat_leq(const CoxElt& y, const CoxElt& x) const;
  Word reduced_word(const CoxElt& x) const { return x.word(); }

  /// All elements of length <= max_length, sorted by (length, ShortLex).
  std::vector<CoxElt> enumerate_ball(unsigned max_length) const;
  /// Minimal length representatives of W_f\W (no left descent in the
  /// finite subset) with length <= max_length, sorted.
  std::vector<CoxElt> min_coset_reps(unsigned max_length) const;
  bool in_min_coset_reps(const CoxElt& x) const;
  /// Minimal in W_f\W/W_f: no left or right descent in the finite subset.
  bool is_min_double_coset(const CoxElt& x) const;

  // --- interned interface (hot paths) ------------------------------------
  ElemId intern(const CoxElt& x) const;
  ElemId identity_id() const;
  const CoxElt& elt(ElemId id) const;
  unsigned length(ElemId id) const;
  ElemId mul_right(ElemId id, Generator s) const;
  ElemId mul_left(Generator s, ElemId id) const;
  bool is_descent(ElemId id, Generator s, Side side) const;
  bool in_min_coset_reps(ElemId id) const;
  ElemId inverse(ElemId id) const;
  bool bruhat_leq(ElemId y, ElemId x) const;
  std::vector<ElemId> ball_ids(unsigned max_length) const;
  std::vector<ElemId> min_coset_rep_ids(unsigned max_length) const;
  /// Elements interned so far (monotone).
  std::size_t interned_count() const;

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.type_ == b.type_ && a.affine_ == b.affine_;
  }

 private:
  CoxeterSystem() = default;
  unsigned slot(Generator s) const { return affine_ ? s : s - 1u; }

  CartanType type_ = CartanType::A1;
  bool affine_ = false;
  unsigned finite_rank_ = 0;
  unsigned w0_length_ = 0;
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> cartan_;  // indexed by slot
  std::shared_ptr<detail::ElementCache> cache_;

  friend class detail::ElementCache;
};

}  // namespace tidal
