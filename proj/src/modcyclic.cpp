#include "tidal/modcyclic.hpp"

#include "fp_linalg.hpp"
#include "tidal/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <thread>

namespace tidal {

struct FGLAlgebra::Cache {
  std::mutex mutex;
  std::map<std::pair<unsigned, unsigned>, JordanType> tensors;
};

const std::shared_ptr<FGLAlgebra::Cache>& cache_of(const FGLAlgebra& alg) { return alg.cache_; }

std::string to_string(FGLKind k) {
  switch (k) {
    case FGLKind::Multiplicative: return "multiplicative";
    case FGLKind::Additive: return "additive";
    case FGLKind::Custom: return "custom";
  }
  return "?";
}

namespace {

// Largest algebra order accepted; tensor products are brute-forced on
// spaces of dimension up to order^2.
constexpr unsigned kMaxOrder = 32;

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned checked_order(unsigned p, unsigned n) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgument("level n must be at least 1");
  unsigned long long order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > kMaxOrder) throw InvalidArgument("p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                                                 " exceeds the supported order " + std::to_string(kMaxOrder));
  }
  return static_cast<unsigned>(order);
}

std::uint32_t mod(long long c, unsigned p) {
  const long long r = c % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Dense polynomial in two variables truncated at degree N in each.
struct Poly2 {
  unsigned n;
  std::vector<std::uint32_t> c;  // c[i * n + j] for u^i v^j
  explicit Poly2(unsigned size) : n(size), c(std::size_t(size) * size, 0) {}
  std::uint32_t& at(unsigned i, unsigned j) { return c[std::size_t(i) * n + j]; }
  std::uint32_t at(unsigned i, unsigned j) const { return c[std::size_t(i) * n + j]; }
};

Poly2 mul(const Poly2& a, const Poly2& b, unsigned p) {
  Poly2 out(a.n);
  for (unsigned i = 0; i < a.n; ++i)
    for (unsigned j = 0; j < a.n; ++j) {
      const std::uint64_t x = a.at(i, j);
      if (!x) continue;
      for (unsigned k = 0; i + k < a.n; ++k)
        for (unsigned l = 0; j + l < a.n; ++l)
          if (b.at(k, l)) out.at(i + k, j + l) = static_cast<std::uint32_t>((out.at(i + k, j + l) + x * b.at(k, l)) % p);
    }
  return out;
}

void validate_fgl(unsigned p, unsigned order, const std::vector<std::tuple<unsigned, unsigned, std::uint32_t>>& terms) {
  Poly2 f(order);
  for (auto [i, j, c] : terms) f.at(i, j) = c;
  for (unsigned i = 0; i < order; ++i) {
    if (f.at(i, 0) != (i == 1 ? 1u : 0u)) throw InvalidArgument("formal group law must satisfy F(u,0) = u");
    if (f.at(0, i) != (i == 1 ? 1u : 0u)) throw InvalidArgument("formal group law must satisfy F(0,v) = v");
    for (unsigned j = 0; j < order; ++j)
      if (f.at(i, j) != f.at(j, i)) throw InvalidArgument("formal group law must be symmetric");
  }
  // F(F(u,v), w) = F(u, F(v,w)) mod (u^N, v^N, w^N). Powers of F(u,v) give
  // the left side as sum_j c_ij F^i(u,v) w^j; the right side is the same
  // with F^j(v,w). Compare coefficient of u^a v^b w^d.
  std::vector<Poly2> powers;
  Poly2 one(order);
  one.at(0, 0) = 1;
  powers.push_back(one);
  for (unsigned i = 1; i < order; ++i) powers.push_back(mul(powers.back(), f, p));
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b)
      for (unsigned d = 0; d < order; ++d) {
        std::uint64_t lhs = 0, rhs = 0;
        for (unsigned i = 0; i < order; ++i) lhs += std::uint64_t(f.at(i, d)) * powers[i].at(a, b) % p;
        for (unsigned j = 0; j < order; ++j) rhs += std::uint64_t(f.at(a, j)) * powers[j].at(b, d) % p;
        if (lhs % p != rhs % p) throw InvalidArgument("formal group law is not associative to the working degree");
      }
}

// Delta(x) acting on J_a (x) J_b; x^i (x) x^j has index i * b + j.
fp::SparseOp tensor_operator(const FGLAlgebra& alg, unsigned a, unsigned b) {
  fp::SparseOp op;
  op.dim = std::size_t(a) * b;
  op.cols.resize(op.dim);
  for (unsigned i = 0; i < a; ++i)
    for (unsigned j = 0; j < b; ++j)
      for (auto [s, t, c] : alg.terms())
        if (i + s < a && j + t < b) op.cols[std::size_t(i) * b + j].emplace_back((i + s) * b + j + t, c);
  return op;
}

std::vector<std::size_t> ranks_of(const fp::SparseOp& op, unsigned p) {
  std::vector<std::size_t> ranks{op.dim};
  for (const auto& e : fp::image_chain(op, p, op.dim + 1)) ranks.push_back(e.rank());
  if (ranks.back() != 0) ranks.push_back(0);
  return ranks;
}

void check_block(const FGLAlgebra& alg, unsigned k, const char* what) {
  if (k < 1 || k > alg.order())
    throw InvalidArgument(std::string(what) + " = " + std::to_string(k) + " outside [1, " +
                          std::to_string(alg.order()) + "]");
}

std::vector<unsigned> multiples_of(unsigned step, unsigned order) {
  std::vector<unsigned> out;
  for (unsigned k = step; k <= order; k += step) out.push_back(k);
  return out;
}

unsigned power(unsigned p, unsigned e) {
  unsigned r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

FGLAlgebra FGLAlgebra::make(unsigned p, unsigned n, FGLKind kind,
                            const std::map<std::pair<unsigned, unsigned>, long long>& coeffs) {
  FGLAlgebra alg;
  alg.p_ = p;
  alg.n_ = n;
  alg.order_ = checked_order(p, n);
  alg.kind_ = kind;
  for (const auto& [ij, c] : coeffs) {
    const std::uint32_t r = mod(c, p);
    if (r && ij.first < alg.order_ && ij.second < alg.order_) alg.terms_.emplace_back(ij.first, ij.second, r);
  }
  std::sort(alg.terms_.begin(), alg.terms_.end(), [](const auto& x, const auto& y) {
    const unsigned dx = std::get<0>(x) + std::get<1>(x), dy = std::get<0>(y) + std::get<1>(y);
    return dx != dy ? dx < dy : std::get<1>(x) < std::get<1>(y);
  });
  if (kind == FGLKind::Custom) validate_fgl(p, alg.order_, alg.terms_);
  alg.cache_ = std::make_shared<Cache>();
  return alg;
}

FGLAlgebra FGLAlgebra::multiplicative(unsigned p, unsigned n) {
  return make(p, n, FGLKind::Multiplicative, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}});
}

FGLAlgebra FGLAlgebra::additive(unsigned p, unsigned n) {
  return make(p, n, FGLKind::Additive, {{{1, 0}, 1}, {{0, 1}, 1}});
}

FGLAlgebra FGLAlgebra::custom(unsigned p, unsigned n, const std::map<std::pair<unsigned, unsigned>, long long>& coeffs) {
  return make(p, n, FGLKind::Custom, coeffs);
}

FGLAlgebra FGLAlgebra::parse(unsigned p, unsigned n, std::string_view fgl) {
  std::string s;
  for (char ch : fgl)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "mult" || s == "multiplicative") return multiplicative(p, n);
  if (s == "add" || s == "additive") return additive(p, n);
  if (s.empty()) throw InvalidArgument("empty formal group law");

  std::map<std::pair<unsigned, unsigned>, long long> coeffs;
  std::size_t pos = 0;
  auto fail = [&]() { throw InvalidArgument("cannot parse formal group law '" + std::string(fgl) + "'"); };
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail();
    return std::stoll(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    long long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    long long c = 1;
    bool any = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = number();
      any = true;
    }
    unsigned eu = 0, ev = 0;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      const char var = s[pos++];
      if (var != 'u' && var != 'v') fail();
      unsigned e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = static_cast<unsigned>(number());
      }
      (var == 'u' ? eu : ev) += e;
      any = true;
    }
    if (!any) fail();
    coeffs[{eu, ev}] += sign * c;
  }
  return custom(p, n, coeffs);
}

std::string FGLAlgebra::name() const {
  if (kind_ != FGLKind::Custom) return to_string(kind_);
  std::string s;
  for (auto [i, j, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    if (i) mono += i == 1 ? "u" : "u^" + std::to_string(i);
    if (j) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("v") : "v^" + std::to_string(j));
    s += c == 1 ? mono : std::to_string(c) + "*" + mono;
  }
  return s;
}

unsigned JordanType::dimension() const {
  unsigned d = 0;
  for (unsigned b : blocks) d += b;
  return d;
}

std::string JordanType::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blocks[i]);
  }
  return s + "]";
}

JordanType tensor_decompose(const FGLAlgebra& alg, unsigned a, unsigned b) {
  check_block(alg, a, "a");
  check_block(alg, b, "b");
  const auto& cache = cache_of(alg);
  {
    std::lock_guard lock(cache->mutex);
    auto it = cache->tensors.find({a, b});
    if (it != cache->tensors.end()) return it->second;
  }
  JordanType t{fp::jordan_from_ranks(ranks_of(tensor_operator(alg, a, b), alg.p()))};
  if (t.dimension() != a * b) throw ConsistencyError("tensor decomposition lost dimension");
  std::lock_guard lock(cache->mutex);
  cache->tensors.emplace(std::pair{a, b}, t);
  return t;
}

JordanType restriction_type(const FGLAlgebra& alg, unsigned k, unsigned m) {
  check_block(alg, k, "k");
  if (m >= alg.n()) throw InvalidArgument("restriction level m must satisfy 0 <= m < n");
  const unsigned step = power(alg.p(), m);
  fp::SparseOp op;
  op.dim = k;
  op.cols.resize(k);
  for (unsigned i = 0; i + step < k; ++i) op.cols[i].emplace_back(i + step, 1);
  return {fp::jordan_from_ranks(ranks_of(op, alg.p()))};
}

bool negligible_after_restriction(const FGLAlgebra& alg, unsigned k, unsigned m) {
  const JordanType t = restriction_type(alg, k, m);
  return std::all_of(t.blocks.begin(), t.blocks.end(), [&](unsigned b) { return b % alg.p() == 0; });
}

std::set<unsigned> thick_closure(const FGLAlgebra& alg, const std::set<unsigned>& seed) {
  for (unsigned s : seed) check_block(alg, s, "seed block");
  std::set<unsigned> out = seed;
  std::vector<unsigned> todo(seed.begin(), seed.end());
  while (!todo.empty()) {
    const unsigned s = todo.back();
    todo.pop_back();
    for (unsigned i = 1; i <= alg.order(); ++i)
      for (unsigned blk : tensor_decompose(alg, s, i).blocks)
        if (out.insert(blk).second) todo.push_back(blk);
  }
  return out;
}

bool id_membership(const FGLAlgebra& alg, unsigned k, unsigned j) {
  check_block(alg, k, "k");
  if (j >= alg.order()) throw InvalidArgument("j must satisfy 0 <= j < p^n");
  // The cyclic submodule generated by g = 1 (x) x^j is a copy of J_k; it is
  // a summand iff N^{k-1} g has height exactly k-1.
  const fp::SparseOp op = tensor_operator(alg, k, j + 1);
  const auto chain = fp::image_chain(op, alg.p(), k);
  fp::Vec g(op.dim, 0);
  g[j] = 1;
  for (unsigned i = 0; i + 1 < k; ++i) g = op.apply(g, alg.p());
  if (std::all_of(g.begin(), g.end(), [](std::uint32_t x) { return x == 0; })) return false;
  if (chain.size() < k) return true;  // N^k vanishes
  return !chain[k - 1].contains(g);
}

bool id_membership_by_retraction(const FGLAlgebra& alg, unsigned k, unsigned j) {
  check_block(alg, k, "k");
  if (j >= alg.order()) throw InvalidArgument("j must satisfy 0 <= j < p^n");
  const unsigned p = alg.p();
  const fp::SparseOp op = tensor_operator(alg, k, j + 1);
  const std::size_t d = op.dim;
  // Unknown R: J_k (x) J_{j+1} -> J_k, entry R[r][t] at index r * d + t.
  auto var = [&](std::size_t r, std::size_t t) { return r * d + t; };
  fp::Matrix eqs;
  fp::Vec rhs;
  // R N = X R, with X the shift on J_k.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      fp::Vec row(k * d, 0);
      for (auto [t, x] : op.cols[c]) row[var(r, t)] = (row[var(r, t)] + x) % p;
      if (r > 0) row[var(r - 1, c)] = (row[var(r - 1, c)] + p - 1) % p;
      eqs.push_back(std::move(row));
      rhs.push_back(0);
    }
  // R(x^i (x) x^j) = x^i.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < k; ++i) {
      fp::Vec row(k * d, 0);
      row[var(r, i * (j + 1) + j)] = 1;
      eqs.push_back(std::move(row));
      rhs.push_back(r == i ? 1 : 0);
    }
  return fp::solve(eqs, rhs, p).has_value();
}

std::vector<unsigned> ob(const FGLAlgebra& alg, unsigned j) {
  std::vector<unsigned> out;
  for (unsigned k = 1; k <= alg.order(); ++k)
    if (id_membership(alg, k, j)) out.push_back(k);
  return out;
}

PrimeTest prime_test(unsigned p, unsigned n, unsigned j) {
  const unsigned order = checked_order(p, n);
  if (j < 1 || j >= order) throw InvalidArgument("j must satisfy 1 <= j < p^n");
  PrimeTest t;
  t.j = j;
  // Lucas: binom(j, a) is nonzero mod p iff every base-p digit of a is at
  // most the matching digit of j.
  for (unsigned a = 1; a < j && !t.witness; ++a) {
    bool nonzero = true;
    for (unsigned x = j, y = a; y && nonzero; x /= p, y /= p)
      if (y % p > x % p) nonzero = false;
    if (nonzero) t.witness = std::pair{a, j - a};
  }
  t.prime = !t.witness;
  return t;
}

bool SocleWitness::verified() const { return binomial_nonzero && summand >= a + b + 1 && summand_split; }

SocleWitness socle_witness(const FGLAlgebra& alg, unsigned a, unsigned b) {
  check_block(alg, a + 1, "a + 1");
  check_block(alg, b + 1, "b + 1");
  const unsigned p = alg.p();
  SocleWitness w;
  w.a = a;
  w.b = b;
  {
    bool nonzero = true;
    for (unsigned x = a + b, y = a; y && nonzero; x /= p, y /= p)
      if (y % p > x % p) nonzero = false;
    w.binomial_nonzero = nonzero;
  }
  const fp::SparseOp op = tensor_operator(alg, a + 1, b + 1);
  const auto chain = fp::image_chain(op, p, op.dim + 1);
  fp::Vec s(op.dim, 0);
  s[std::size_t(a) * (b + 1) + b] = 1;
  auto is_zero = [](const fp::Vec& v) { return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; }); };
  if (!is_zero(op.apply(s, p))) throw ConsistencyError("x^a (x) x^b is not in the socle");
  while (w.height < chain.size() && chain[w.height].contains(s)) ++w.height;

  // Solve N^h w = s for an explicit generator of the summand.
  fp::Matrix power_cols;  // columns of N^h
  for (std::size_t c = 0; c < op.dim; ++c) {
    fp::Vec col = op.column(c);
    if (w.height == 0) {
      col.assign(op.dim, 0);
      col[c] = 1;
    }
    for (unsigned i = 1; i < w.height; ++i) col = op.apply(col, p);
    power_cols.push_back(std::move(col));
  }
  fp::Matrix rows(op.dim, fp::Vec(op.dim, 0));
  for (std::size_t c = 0; c < op.dim; ++c)
    for (std::size_t r = 0; r < op.dim; ++r) rows[r][c] = power_cols[c][r];
  const auto gen = fp::solve(rows, s, p);
  if (!gen) throw ConsistencyError("socle vector has no preimage at its height");
  // <gen> has dimension h + 1; it splits iff N^h gen = s is not in N^{h+1} M.
  fp::Vec top = *gen;
  for (unsigned i = 0; i < w.height; ++i) top = op.apply(top, p);
  const bool next_vanishes = is_zero(op.apply(top, p));
  w.summand = w.height + 1;
  w.summand_split = top == s && next_vanishes && !(w.height < chain.size() && chain[w.height].contains(top));
  return w;
}

TensorTable tensor_table(const FGLAlgebra& alg) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned a = 1; a <= alg.order(); ++a)
    for (unsigned b = a; b <= alg.order(); ++b) pairs.emplace_back(a, b);
  // Largest first for better load balance.
  std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) { return x.first * x.second > y.first * y.second; });
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&]() {
      for (std::size_t i; (i = next++) < pairs.size();) {
        try {
          tensor_decompose(alg, pairs[i].first, pairs[i].second);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
  TensorTable table;
  for (auto [a, b] : pairs) table[{a, b}] = tensor_decompose(alg, a, b);
  return table;
}

GreenComparison green_independence(const FGLAlgebra& first, const FGLAlgebra& second) {
  if (first.p() != second.p() || first.n() != second.n())
    throw InvalidArgument("formal group laws must share p and n");
  const TensorTable x = tensor_table(first), y = tensor_table(second);
  GreenComparison out;
  for (const auto& [ab, t] : x) {
    ++out.pairs;
    if (y.at(ab) != t) out.mismatches.push_back(ab);
  }
  out.equal = out.mismatches.empty();
  return out;
}

Classification classify(const FGLAlgebra& alg) {
  const unsigned p = alg.p(), n = alg.n(), order = alg.order();
  Classification c;
  c.p = p;
  c.n = n;
  c.fgl = alg.name();
  tensor_table(alg);

  std::map<std::set<unsigned>, std::vector<unsigned>> closures;
  for (unsigned k = 1; k <= order; ++k) {
    const auto cl = thick_closure(alg, {k});
    if (cl.size() < order) closures[cl].push_back(k);  // proper
  }
  for (const auto& [members, seeds] : closures) {
    Classification::ChainIdeal ideal;
    ideal.indecomposables.assign(members.begin(), members.end());
    ideal.seeds = seeds;
    for (unsigned m = 0; m < n; ++m)
      if (ideal.indecomposables == multiples_of(power(p, m + 1), order)) ideal.level = m;
    c.chain.push_back(std::move(ideal));
  }
  std::sort(c.chain.begin(), c.chain.end(),
            [](const auto& x, const auto& y) { return x.indecomposables.size() > y.indecomposables.size(); });
  c.chain_ok = c.chain.size() == n;
  for (std::size_t m = 0; m < c.chain.size(); ++m)
    if (c.chain[m].level != m) c.chain_ok = false;

  c.ob_ok = true;
  for (unsigned j = 0; j < order; ++j) {
    Classification::ObEntry e;
    e.j = j;
    e.members = ob(alg, j);
    std::vector<unsigned> expected = multiples_of(1, order);
    if (j > 0) {
      unsigned level = 0;
      while (power(p, level + 1) <= j) ++level;
      e.level = level;
      expected = multiples_of(power(p, level + 1), order);
    }
    e.ok = e.members == expected;
    c.ob_ok = c.ob_ok && e.ok;
    c.ob.push_back(std::move(e));
  }

  c.primes_ok = true;
  for (unsigned j = 1; j < order; ++j) {
    PrimeTest t = prime_test(p, n, j);
    unsigned q = j;
    while (q % p == 0) q /= p;
    c.primes_ok = c.primes_ok && t.prime == (q == 1);
    c.primes.push_back(std::move(t));
  }

  c.restrictions_ok = true;
  for (unsigned m = 0; m < n; ++m) {
    const unsigned pm = power(p, m);
    Classification::RestrictionCheck ones{m, pm, restriction_type(alg, pm, m), {std::vector<unsigned>(pm, 1)}};
    std::vector<unsigned> two_ones{2};
    two_ones.insert(two_ones.end(), pm - 1, 1);
    Classification::RestrictionCheck two{m, pm + 1, restriction_type(alg, pm + 1, m), {two_ones}};
    c.restrictions_ok = c.restrictions_ok && ones.type == ones.expected && two.type == two.expected;
    c.restrictions.push_back(std::move(ones));
    c.restrictions.push_back(std::move(two));
  }
  return c;
}

}  // namespace tidal
