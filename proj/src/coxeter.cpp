#include "tidal/coxeter.hpp"

#include "tidal/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace tidal {

CartanType parse_cartan_type(std::string_view label) {
  std::string up;
  for (char c : label) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "A1") return CartanType::A1;
  if (up == "A2") return CartanType::A2;
  if (up == "A3") return CartanType::A3;
  if (up == "B2" || up == "C2") return CartanType::B2;
  if (up == "G2") return CartanType::G2;
  throw InvalidArgument("unsupported Cartan type '" + std::string(label) +
                        "' (expected A1, A2, A3, B2 or G2)");
}

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A1: return "A1";
    case CartanType::A2: return "A2";
    case CartanType::A3: return "A3";
    case CartanType::B2: return "B2";
    case CartanType::G2: return "G2";
  }
  return "?";
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back('-');
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find_first_of("-, ", i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view tok = text.substr(i, j - i);
    if (tok.empty() || tok.size() > 2 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InvalidArgument("malformed word '" + std::string(text) + "'");
    w.push_back(static_cast<Generator>(std::stoi(std::string(tok))));
    i = j + 1;
  }
  return w;
}

std::strong_ordering operator<=>(const CoxElt& a, const CoxElt& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(),
                                                b.word_.begin(), b.word_.end());
}

namespace {

struct FiniteData {
  unsigned rank;
  std::vector<std::vector<int>> cartan;  // <alpha_i^vee, alpha_j>
  std::vector<int> theta;                // highest short root, simple-root coords
  std::vector<int> theta_vee;            // its coroot, simple-coroot coords
  unsigned w0_length;
};

// B2: alpha_1 long, alpha_2 short. G2: alpha_1 short, alpha_2 long.
FiniteData finite_data(CartanType t) {
  switch (t) {
    case CartanType::A1: return {1, {{2}}, {1}, {1}, 1};
    case CartanType::A2: return {2, {{2, -1}, {-1, 2}}, {1, 1}, {1, 1}, 3};
    case CartanType::A3:
      return {3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {1, 1, 1}, 6};
    case CartanType::B2: return {2, {{2, -1}, {-2, 2}}, {1, 1}, {2, 1}, 4};
    case CartanType::G2: return {2, {{2, -3}, {-1, 2}}, {2, 1}, {2, 3}, 6};
  }
  throw InvalidArgument("unsupported Cartan type");
}

}  // namespace

namespace detail {

/// Interning table shared by all copies of a CoxeterSystem. Elements are
/// identified by their ShortLex normal form; each entry also carries the
/// matrices of w and w^{-1} on the root lattice, which decide descents.
class ElementCache {
 public:
  explicit ElementCache(std::vector<std::vector<int>> cartan, std::vector<Generator> gens)
      : n_(static_cast<unsigned>(cartan.size())), cartan_(std::move(cartan)), gens_(std::move(gens)) {
    Entry e;
    e.mat = identity_matrix();
    e.inv = e.mat;
    insert_locked(std::move(e));
  }

  std::mutex mu;

  struct Entry {
    CoxElt elt;
    std::vector<int> mat;  // columns w(alpha_j), row-major n x n
    std::vector<int> inv;  // same for w^{-1}
    std::vector<std::int64_t> right, left;
    std::int64_t inverse = -1;
  };

  const Entry& at_locked(ElemId id) const { return entries_[index(id)]; }
  std::size_t size_locked() const { return entries_.size(); }

  ElemId intern_word_locked(const Word& w) {
    std::vector<int> mat = identity_matrix();
    std::vector<int> inv = mat;
    for (Generator s : w) {
      check_generator(s);
      right_apply(mat, slot_of(s));
      left_apply(inv, slot_of(s));
    }
    return intern_matrices_locked(std::move(mat), std::move(inv));
  }

  ElemId mul_right_locked(ElemId id, Generator s) {
    check_generator(s);
    const unsigned k = slot_of(s);
    if (entries_[index(id)].right[k] >= 0) return ElemId(entries_[index(id)].right[k]);
    std::vector<int> mat = entries_[index(id)].mat;
    std::vector<int> inv = entries_[index(id)].inv;
    right_apply(mat, k);
    left_apply(inv, k);
    ElemId r = intern_matrices_locked(std::move(mat), std::move(inv));
    entries_[index(id)].right[k] = index(r);
    entries_[index(r)].right[k] = index(id);
    return r;
  }

  ElemId mul_left_locked(Generator s, ElemId id) {
    check_generator(s);
    const unsigned k = slot_of(s);
    if (entries_[index(id)].left[k] >= 0) return ElemId(entries_[index(id)].left[k]);
    std::vector<int> mat = entries_[index(id)].mat;
    std::vector<int> inv = entries_[index(id)].inv;
    left_apply(mat, k);
    right_apply(inv, k);
    ElemId r = intern_matrices_locked(std::move(mat), std::move(inv));
    entries_[index(id)].left[k] = index(r);
    entries_[index(r)].left[k] = index(id);
    return r;
  }

  ElemId inverse_locked(ElemId id) {
    Entry& e = entries_[index(id)];
    if (e.inverse >= 0) return ElemId(e.inverse);
    std::vector<int> mat = e.inv;
    std::vector<int> inv = e.mat;
    ElemId r = intern_matrices_locked(std::move(mat), std::move(inv));
    entries_[index(id)].inverse = index(r);
    entries_[index(r)].inverse = index(id);
    return r;
  }

  // s is a right descent of w iff w(alpha_s) < 0; left iff w^{-1}(alpha_s) < 0.
  bool right_descent_locked(ElemId id, Generator s) const {
    return column_negative(entries_[index(id)].mat, slot_of(s));
  }
  bool left_descent_locked(ElemId id, Generator s) const {
    return column_negative(entries_[index(id)].inv, slot_of(s));
  }

  bool bruhat_leq_locked(ElemId y, ElemId x) {
    if (y == x || index(y) == 0) return true;
    const unsigned ly = entries_[index(y)].elt.length();
    const unsigned lx = entries_[index(x)].elt.length();
    if (ly >= lx) return false;
    const std::uint64_t key = (std::uint64_t(index(y)) << 32) | index(x);
    if (auto it = bruhat_memo_.find(key); it != bruhat_memo_.end()) return it->second;
    // Lift along the first letter s of x, a left descent.
    const Generator s = entries_[index(x)].elt.word().front();
    const ElemId sx = mul_left_locked(s, x);
    bool result;
    if (left_descent_locked(y, s)) {
      result = bruhat_leq_locked(mul_left_locked(s, y), sx);
    } else {
      result = bruhat_leq_locked(y, sx);
    }
    bruhat_memo_.emplace(key, result);
    return result;
  }

 private:
  unsigned slot_of(Generator s) const {
    for (unsigned k = 0; k < gens_.size(); ++k)
      if (gens_[k] == s) return k;
    throw InvalidArgument("generator " + std::to_string(int(s)) + " not in this system");
  }
  void check_generator(Generator s) const { (void)slot_of(s); }

  std::vector<int> identity_matrix() const {
    std::vector<int> m(n_ * n_, 0);
    for (unsigned i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

  // s_k(beta) = beta - <alpha_k^vee, beta> alpha_k, so
  // M <- M * S_k sends col_j to col_j - a_kj col_k.
  void right_apply(std::vector<int>& m, unsigned k) const {
    std::vector<int> col(n_);
    for (unsigned i = 0; i < n_; ++i) col[i] = m[i * n_ + k];
    for (unsigned j = 0; j < n_; ++j) {
      const int a = cartan_[k][j];
      if (a == 0) continue;
      for (unsigned i = 0; i < n_; ++i) m[i * n_ + j] -= a * col[i];
    }
  }
  // M <- S_k * M : row k <- row k - sum_j a_kj row_j.
  void left_apply(std::vector<int>& m, unsigned k) const {
    std::vector<int> delta(n_, 0);
    for (unsigned j = 0; j < n_; ++j) {
      const int a = cartan_[k][j];
      if (a == 0) continue;
      for (unsigned c = 0; c < n_; ++c) delta[c] += a * m[j * n_ + c];
    }
    for (unsigned c = 0; c < n_; ++c) m[k * n_ + c] -= delta[c];
  }

  bool column_negative(const std::vector<int>& m, unsigned k) const {
    for (unsigned i = 0; i < n_; ++i) {
      if (m[i * n_ + k] < 0) return true;
      if (m[i * n_ + k] > 0) return false;
    }
    return false;
  }

  Word normal_form(std::vector<int> mat, std::vector<int> inv) const {
    Word w;
    for (;;) {
      unsigned k = 0;
      while (k < n_ && !column_negative(inv, k)) ++k;
      if (k == n_) break;
      w.push_back(gens_[k]);
      left_apply(mat, k);
      right_apply(inv, k);
    }
    return w;
  }

  ElemId intern_matrices_locked(std::vector<int> mat, std::vector<int> inv) {
    if (auto it = by_matrix_.find(key_of(mat)); it != by_matrix_.end()) return ElemId(it->second);
    Entry e;
    e.elt = CoxElt(normal_form(mat, inv));
    e.mat = std::move(mat);
    e.inv = std::move(inv);
    return insert_locked(std::move(e));
  }

  ElemId insert_locked(Entry e) {
    e.right.assign(n_, -1);
    e.left.assign(n_, -1);
    const auto id = static_cast<std::uint32_t>(entries_.size());
    by_matrix_.emplace(key_of(e.mat), id);
    entries_.push_back(std::move(e));
    return ElemId(id);
  }

  static std::string key_of(const std::vector<int>& m) {
    return std::string(reinterpret_cast<const char*>(m.data()), m.size() * sizeof(int));
  }

  unsigned n_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Generator> gens_;
  std::deque<Entry> entries_;
  std::unordered_map<std::string, std::uint32_t> by_matrix_;
  std::unordered_map<std::uint64_t, bool> bruhat_memo_;
};

}  // namespace detail

CoxeterSystem CoxeterSystem::build(CartanType type, bool affine) {
  const FiniteData fd = finite_data(type);
  CoxeterSystem sys;
  sys.type_ = type;
  sys.affine_ = affine;
  sys.finite_rank_ = fd.rank;
  sys.w0_length_ = fd.w0_length;
  const unsigned r = fd.rank;
  if (affine) {
    const unsigned n = r + 1;
    sys.cartan_.assign(n, std::vector<int>(n, 0));
    sys.cartan_[0][0] = 2;
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) sys.cartan_[i + 1][j + 1] = fd.cartan[i][j];
    // alpha_0 = delta - theta and alpha_0^vee = K - theta^vee.
    for (unsigned j = 0; j < r; ++j) {
      int a0j = 0, aj0 = 0;
      for (unsigned i = 0; i < r; ++i) {
        a0j += fd.theta_vee[i] * fd.cartan[i][j];
        aj0 += fd.cartan[j][i] * fd.theta[i];
      }
      sys.cartan_[0][j + 1] = -a0j;
      sys.cartan_[j + 1][0] = -aj0;
    }
    for (unsigned g = 0; g <= r; ++g) sys.gens_.push_back(static_cast<Generator>(g));
  } else {
    sys.cartan_ = fd.cartan;
    for (unsigned g = 1; g <= r; ++g) sys.gens_.push_back(static_cast<Generator>(g));
  }
  sys.cache_ = std::make_shared<detail::ElementCache>(sys.cartan_, sys.gens_);
  return sys;
}

std::string CoxeterSystem::label() const {
  return (affine_ ? "affine " : "") + to_string(type_);
}

std::vector<Generator> CoxeterSystem::finite_subset() const {
  std::vector<Generator> f;
  for (Generator g : gens_)
    if (g != 0) f.push_back(g);
  return f;
}

int CoxeterSystem::cartan(Generator s, Generator t) const {
  return cartan_.at(slot(s)).at(slot(t));
}

unsigned CoxeterSystem::coxeter_order(Generator s, Generator t) const {
  if (s == t) return 1;
  switch (cartan(s, t) * cartan(t, s)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

CoxElt CoxeterSystem::generator(Generator s) const { return element(Word{s}); }

CoxElt CoxeterSystem::element(const Word& w) const {
  std::lock_guard lock(cache_->mu);
  return cache_->at_locked(cache_->intern_word_locked(w)).elt;
}

ElemId CoxeterSystem::intern(const CoxElt& x) const {
  std::lock_guard lock(cache_->mu);
  return cache_->intern_word_locked(x.word());
}

ElemId CoxeterSystem::identity_id() const { return ElemId(0); }

const CoxElt& CoxeterSystem::elt(ElemId id) const {
  std::lock_guard lock(cache_->mu);
  return cache_->at_locked(id).elt;
}

unsigned CoxeterSystem::length(ElemId id) const { return elt(id).length(); }

ElemId CoxeterSystem::mul_right(ElemId id, Generator s) const {
  std::lock_guard lock(cache_->mu);
  return cache_->mul_right_locked(id, s);
}

ElemId CoxeterSystem::mul_left(Generator s, ElemId id) const {
  std::lock_guard lock(cache_->mu);
  return cache_->mul_left_locked(s, id);
}

bool CoxeterSystem::is_descent(ElemId id, Generator s, Side side) const {
  std::lock_guard lock(cache_->mu);
  return side == Side::Left ? cache_->left_descent_locked(id, s)
                            : cache_->right_descent_locked(id, s);
}

ElemId CoxeterSystem::inverse(ElemId id) const {
  std::lock_guard lock(cache_->mu);
  return cache_->inverse_locked(id);
}

bool CoxeterSystem::bruhat_leq(ElemId y, ElemId x) const {
  std::lock_guard lock(cache_->mu);
  return cache_->bruhat_leq_locked(y, x);
}

std::size_t CoxeterSystem::interned_count() const {
  std::lock_guard lock(cache_->mu);
  return cache_->size_locked();
}

bool CoxeterSystem::in_min_coset_reps(ElemId id) const {
  for (Generator s : gens_)
    if (s != 0 && is_descent(id, s, Side::Left)) return false;
  return true;
}

CoxElt CoxeterSystem::multiply(const CoxElt& x, const CoxElt& y) const {
  ElemId id = intern(x);
  for (Generator s : y.word()) id = mul_right(id, s);
  return elt(id);
}

CoxElt CoxeterSystem::inverse(const CoxElt& x) const { return elt(inverse(intern(x))); }

std::vector<Generator> CoxeterSystem::descents(const CoxElt& x, Side side) const {
  const ElemId id = intern(x);
  std::vector<Generator> out;
  for (Generator s : gens_)
    if (is_descent(id, s, side)) out.push_back(s);
  return out;
}

bool CoxeterSystem::is_descent(const CoxElt& x, Generator s, Side side) const {
  return is_descent(intern(x), s, side);
}

bool CoxeterSystem::bruhat_leq(const CoxElt& y, const CoxElt& x) const {
  return bruhat_leq(intern(y), intern(x));
}

std::vector<ElemId> CoxeterSystem::ball_ids(unsigned max_length) const {
  std::vector<ElemId> out{identity_id()};
  std::vector<ElemId> frontier{identity_id()};
  for (unsigned len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<ElemId> next;
    for (ElemId x : frontier)
      for (Generator s : gens_) {
        if (is_descent(x, s, Side::Right)) continue;
        next.push_back(mul_right(x, s));
      }
    std::sort(next.begin(), next.end(), [this](ElemId a, ElemId b) { return elt(a) < elt(b); });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<ElemId> CoxeterSystem::min_coset_rep_ids(unsigned max_length) const {
  // W^+ is closed under taking prefixes, so grow it directly.
  std::vector<ElemId> out{identity_id()};
  std::vector<ElemId> frontier{identity_id()};
  for (unsigned len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<ElemId> next;
    for (ElemId x : frontier)
      for (Generator s : gens_) {
        if (is_descent(x, s, Side::Right)) continue;
        const ElemId xs = mul_right(x, s);
        if (in_min_coset_reps(xs)) next.push_back(xs);
      }
    std::sort(next.begin(), next.end(), [this](ElemId a, ElemId b) { return elt(a) < elt(b); });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<CoxElt> CoxeterSystem::enumerate_ball(unsigned max_length) const {
  std::vector<CoxElt> out;
  for (ElemId id : ball_ids(max_length)) out.push_back(elt(id));
  return out;
}

std::vector<CoxElt> CoxeterSystem::min_coset_reps(unsigned max_length) const {
  std::vector<CoxElt> out;
  for (ElemId id : min_coset_rep_ids(max_length)) out.push_back(elt(id));
  return out;
}

bool CoxeterSystem::in_min_coset_reps(const CoxElt& x) const {
  return in_min_coset_reps(intern(x));
}

bool CoxeterSystem::is_min_double_coset(const CoxElt& x) const {
  const ElemId id = intern(x);
  for (Generator s : gens_) {
    if (s == 0) continue;
    if (is_descent(id, s, Side::Left) || is_descent(id, s, Side::Right)) return false;
  }
  return true;
}

}  // namespace tidal
