#include "mzv/products.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cache_util.hpp"

namespace mzv {

namespace {

using detail::WordCache;
using detail::cached;

// ---- compact word ids ------------------------------------------------------
// Words of degree <= 28 are packed as id = (1 << len) | bits (bit i = letter
// i, y = 1); the empty word is id 1. Degree and products of the sizes used by
// the symbolic suites stay far below the cap; larger words take the generic
// path.
constexpr unsigned kIdDegreeCap = 28;

using Id = std::uint32_t;

constexpr unsigned id_len(Id id) {
  return static_cast<unsigned>(std::bit_width(id)) - 1;
}
constexpr Id id_bits(Id id) { return id ^ (Id{1} << id_len(id)); }

Id word_to_id(Word w) {
  return (Id{1} << w.degree()) | static_cast<Id>(w.y_mask());
}
Word id_to_word(Id id) {
  return Word::from_key(std::uint64_t{id_bits(id)} |
                        (std::uint64_t{id_len(id)} << Word::kMaxDegree));
}

// The id of y x^{k-1} w.
constexpr Id prepend_block(Id id, unsigned k) { return (id << k) | 1u; }

// ---- dense integer accumulator ---------------------------------------------
// Indexed directly by id; touched-list reset keeps reuse O(support). Usage
// intervals nest strictly (callers finish sub-computations before
// accumulating), so one scratch per thread suffices.
struct DenseAcc {
  std::vector<long long> slot;
  std::vector<Id> touched;

  void ensure(std::size_t n) {
    if (slot.size() < n) slot.resize(n, 0);
  }
  void add(Id idx, long long v) {
    if (v == 0) return;
    if (slot[idx] == 0) touched.push_back(idx);
    slot[idx] += v;
  }
  // Drains into a sorted (id, value) list, zeroing the used slots.
  void extract(std::vector<std::pair<Id, long long>>& out) {
    out.clear();
    for (Id idx : touched) {
      if (slot[idx] != 0) out.emplace_back(idx, slot[idx]);
      slot[idx] = 0;
    }
    touched.clear();
    std::sort(out.begin(), out.end());
  }
};

thread_local DenseAcc t_acc1, t_acc2;

// ---- integer stuffle on word ids -------------------------------------------
// All harmonic-product multiplicities are nonnegative integers; the word-pair
// results are cached in id space.
using IVec = std::vector<std::pair<Id, long long>>;

std::mutex g_istuffle_mu;
std::unordered_map<std::uint64_t, IVec> g_istuffle_cache;

const IVec& istuffle(Id a, Id b);

IVec istuffle_uncached(Id a, Id b) {
  // x-pullout on either side; otherwise recurse on leading y x^{k-1} blocks.
  if ((a & 1u) == 0) {  // a starts with x (a > 1 guaranteed by caller)
    IVec r = istuffle(a >> 1, b);
    for (auto& [id, v] : r) id <<= 1;  // prepend x
    return r;
  }
  if ((b & 1u) == 0) {
    IVec r = istuffle(a, b >> 1);
    for (auto& [id, v] : r) id <<= 1;
    return r;
  }
  const Id abits = id_bits(a), bbits = id_bits(b);
  const unsigned k =
      abits > 1 ? std::countr_zero(static_cast<Id>(abits >> 1)) + 1
                : id_len(a);
  const unsigned l =
      bbits > 1 ? std::countr_zero(static_cast<Id>(bbits >> 1)) + 1
                : id_len(b);
  const Id u = (Id{1} << (id_len(a) - k)) | (abits >> k);
  const Id v = (Id{1} << (id_len(b) - l)) | (bbits >> l);
  // Cached results live in a node-stable map, so references stay valid
  // across the later calls; all scratch use below happens after they return.
  const IVec& r1 = istuffle(u, b);
  const IVec& r2 = istuffle(a, v);
  const IVec& r3 = istuffle(u, v);
  DenseAcc& acc = t_acc1;
  acc.ensure(std::size_t{2} << (id_len(a) + id_len(b)));
  for (const auto& [id, c] : r1) acc.add(prepend_block(id, k), c);
  for (const auto& [id, c] : r2) acc.add(prepend_block(id, l), c);
  for (const auto& [id, c] : r3) acc.add(prepend_block(id, k + l), c);
  IVec out;
  acc.extract(out);
  return out;
}

const IVec& istuffle(Id a, Id b) {
  const std::uint64_t key = (std::uint64_t{a} << 32) | b;
  {
    std::lock_guard lock(g_istuffle_mu);
    auto it = g_istuffle_cache.find(key);
    if (it != g_istuffle_cache.end()) return it->second;
  }
  IVec value;
  if (a == 1)
    value.emplace_back(b, 1);
  else if (b == 1)
    value.emplace_back(a, 1);
  else
    value = istuffle_uncached(a, b);
  std::lock_guard lock(g_istuffle_mu);
  return g_istuffle_cache.emplace(key, std::move(value)).first->second;
}

// ---- phi --------------------------------------------------------------------
// phi(w) = (-1)^{#y(w)} sum over subsets S of x-positions of w[S -> y]: one
// uniform sign, one term per subset.

std::mutex g_phi_mu;
WordCache g_phi_cache;

NcPoly phi_word(Word w) {
  return cached(g_phi_cache, g_phi_mu, w.key(), [&] {
    NcPoly r;
    const ParamPoly sign =
        ParamPoly::constant(w.count_y() % 2 ? mpq_class(-1) : mpq_class(1));
    const std::uint64_t xmask = w.x_mask();
    std::uint64_t s = xmask;
    for (;;) {
      r.add_term(Word::from_key(w.key() | s), sign);
      if (s == 0) break;
      s = (s - 1) & xmask;
    }
    return r;
  });
}

// ---- diamond ----------------------------------------------------------------

std::mutex g_diamond_mu;
detail::PairCache g_diamond_cache;

NcPoly diamond_words_fast(Word wa, Word wb) {
  // phi expansions in id space; the sign of each is uniform.
  const Id a = word_to_id(wa), b = word_to_id(wb);
  const long long sign =
      (wa.count_y() + wb.count_y()) % 2 ? -1 : 1;
  std::vector<Id> phia, phib;
  const Id amask = static_cast<Id>(wa.x_mask());
  const Id bmask = static_cast<Id>(wb.x_mask());
  for (Id s = amask;;) {
    phia.push_back(a | s);
    if (s == 0) break;
    s = (s - 1) & amask;
  }
  for (Id s = bmask;;) {
    phib.push_back(b | s);
    if (s == 0) break;
    s = (s - 1) & bmask;
  }
  const unsigned total = wa.degree() + wb.degree();
  DenseAcc& acc1 = t_acc1;
  DenseAcc& acc2 = t_acc2;
  // Stage 1 must not share scratch with the istuffle recursion it triggers:
  // warm every needed pair first, then accumulate.
  for (Id ia : phia)
    for (Id ib : phib) istuffle(ia, ib);
  acc1.ensure(std::size_t{2} << total);
  acc2.ensure(std::size_t{2} << total);
  for (Id ia : phia)
    for (Id ib : phib)
      for (const auto& [id, c] : istuffle(ia, ib)) acc1.add(id, sign * c);
  // Stage 2: apply phi to the accumulated integer combination.
  IVec mid;
  acc1.extract(mid);
  for (const auto& [id, v] : mid) {
    const unsigned len = id_len(id);
    const Id bits = id_bits(id);
    const long long sv = std::popcount(bits) % 2 ? -v : v;
    const Id xmask = static_cast<Id>(~bits) & ((Id{1} << len) - 1u);
    for (Id s = xmask;;) {
      acc2.add(id | s, sv);
      if (s == 0) break;
      s = (s - 1) & xmask;
    }
  }
  IVec res;
  acc2.extract(res);
  NcPoly out;
  for (const auto& [id, v] : res)
    out.add_term(id_to_word(id), ParamPoly::constant(mpq_class(static_cast<long>(v))));
  return out;
}

// Generic fallback for degrees past the id cap.
NcPoly diamond_words_generic(Word a, Word b) {
  return phi(harmonic(phi_word(a), phi_word(b)));
}

NcPoly diamond_words(Word a, Word b) {
  return cached(g_diamond_cache, g_diamond_mu,
                std::make_pair(a.key(), b.key()), [&] {
                  if (a.degree() + b.degree() <= kIdDegreeCap)
                    return diamond_words_fast(a, b);
                  return diamond_words_generic(a, b);
                });
}

// Generic stuffle recursion for degrees past the id cap.
NcPoly harmonic_generic(Word a, Word b) {
  if (a.empty()) return NcPoly::monomial(b);
  if (b.empty()) return NcPoly::monomial(a);
  if (a.first() == Letter::X)
    return harmonic(a.drop_front(1), b).left_mul(Word::x());
  if (b.first() == Letter::X)
    return harmonic(a, b.drop_front(1)).left_mul(Word::x());
  unsigned k = 1;
  while (k < a.degree() && a.letter(k) == Letter::X) ++k;
  unsigned l = 1;
  while (l < b.degree() && b.letter(l) == Letter::X) ++l;
  Word zkl = Word::y();
  for (unsigned i = 1; i < k + l; ++i) zkl = zkl.append(Letter::X);
  NcPoly r = harmonic(a.drop_front(k), b).left_mul(a.prefix(k));
  r += harmonic(a, b.drop_front(l)).left_mul(b.prefix(l));
  r += harmonic(a.drop_front(k), b.drop_front(l)).left_mul(zkl);
  return r;
}

}  // namespace

NcPoly phi(Word w) { return phi_word(w); }

NcPoly phi(const NcPoly& p) {
  NcPoly r;
  for (const auto& [w, c] : p.sorted_terms()) r += phi_word(w).scaled(c);
  return r;
}

NcPoly harmonic(Word a, Word b) {
  if (a.degree() + b.degree() > kIdDegreeCap) return harmonic_generic(a, b);
  NcPoly r;
  for (const auto& [id, c] : istuffle(word_to_id(a), word_to_id(b)))
    r.add_term(id_to_word(id), ParamPoly::constant(mpq_class(static_cast<long>(c))));
  return r;
}

NcPoly harmonic(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.sorted_terms())
    for (const auto& [wb, cb] : b.sorted_terms())
      r += harmonic(wa, wb).scaled(ca * cb);
  return r;
}

NcPoly diamond(Word a, Word b) { return diamond_words(a, b); }

NcPoly diamond(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.sorted_terms())
    for (const auto& [wb, cb] : b.sorted_terms())
      r += diamond_words(wa, wb).scaled(ca * cb);
  return r;
}

void clear_product_caches() {
  std::scoped_lock lock(g_phi_mu, g_istuffle_mu, g_diamond_mu);
  g_phi_cache.clear();
  g_istuffle_cache.clear();
  g_diamond_cache.clear();
}

}  // namespace mzv
