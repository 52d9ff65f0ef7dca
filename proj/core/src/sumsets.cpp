#include "addcomb/sumsets.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "addcomb/errors.hpp"

namespace addcomb {
namespace {

void require_nonempty(const IntSet& a, const char* who) {
  if (a.empty()) throw PreconditionError(std::string(who) + ": empty operand");
}

// Offsets of a set from its own minimum. Only valid when the diameter fits
// an unsigned 64-bit integer (callers check against kBitsetWindowBits).
std::vector<std::uint64_t> offsets(const IntSet& a) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size());
  const Int& lo = a.min();
  for (const Int& x : a) {
    Int d = x - lo;
    out.push_back(mpz_get_ui(d.get_mpz_t()));
  }
  return out;
}

IntSet from_bits(const std::vector<std::uint64_t>& bits, std::uint64_t nbits,
                 const Int& base) {
  std::vector<Int> out;
  for (std::uint64_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
      std::uint64_t pos = w * 64 + bit;
      if (pos < nbits) out.push_back(base + Int(static_cast<unsigned long>(pos)));
      word &= word - 1;
    }
  }
  return IntSet::from_sorted_unique(std::move(out));
}

// Boolean convolution by per-element shift-or.
IntSet sumset_shift_or(const IntSet& a, const IntSet& b) {
  const auto offs_a = offsets(a);
  const auto offs_b = offsets(b);
  const std::uint64_t range_b = offs_b.back();
  const std::uint64_t nbits = offs_a.back() + range_b + 1;
  const std::uint64_t words_b = range_b / 64 + 1;
  const std::uint64_t words_r = nbits / 64 + 1;

  std::vector<std::uint64_t> bset(words_b, 0), result(words_r, 0);
  for (std::uint64_t o : offs_b) bset[o / 64] |= std::uint64_t{1} << (o % 64);

  for (std::uint64_t o : offs_a) {
    const std::uint64_t ws = o / 64, bs = o % 64;
    if (bs == 0) {
      for (std::uint64_t i = 0; i < words_b; ++i) result[ws + i] |= bset[i];
    } else {
      std::uint64_t carry = 0;
      for (std::uint64_t i = 0; i < words_b; ++i) {
        result[ws + i] |= (bset[i] << bs) | carry;
        carry = bset[i] >> (64 - bs);
      }
      if (carry) result[ws + words_b] |= carry;
    }
  }
  return from_bits(result, nbits, a.min() + b.min());
}

// Boolean convolution through a real FFT. Output counts are bounded by
// min(|A|, |B|) <= 2^26, well inside double precision for these sizes, so a
// 0.5 threshold recovers the exact indicator.
IntSet sumset_fft(const IntSet& a, const IntSet& b) {
  const auto offs_a = offsets(a);
  const auto offs_b = offsets(b);
  const std::uint64_t nbits = offs_a.back() + offs_b.back() + 1;
  std::uint64_t n = 1;
  while (n < nbits) n <<= 1;

  std::vector<double> fa(n, 0.0), fb(n, 0.0);
  for (std::uint64_t o : offs_a) fa[o] = 1.0;
  for (std::uint64_t o : offs_b) fb[o] = 1.0;

  const std::uint64_t nc = n / 2 + 1;
  std::vector<fftw_complex> ca(nc), cb(nc);
  fftw_plan pa = fftw_plan_dft_r2c_1d(static_cast<int>(n), fa.data(),
                                      ca.data(), FFTW_ESTIMATE);
  fftw_execute(pa);
  fftw_plan pb = fftw_plan_dft_r2c_1d(static_cast<int>(n), fb.data(),
                                      cb.data(), FFTW_ESTIMATE);
  fftw_execute(pb);
  for (std::uint64_t i = 0; i < nc; ++i) {
    const double re = ca[i][0] * cb[i][0] - ca[i][1] * cb[i][1];
    const double im = ca[i][0] * cb[i][1] + ca[i][1] * cb[i][0];
    ca[i][0] = re;
    ca[i][1] = im;
  }
  fftw_plan pc = fftw_plan_dft_c2r_1d(static_cast<int>(n), ca.data(),
                                      fa.data(), FFTW_ESTIMATE);
  fftw_execute(pc);
  fftw_destroy_plan(pa);
  fftw_destroy_plan(pb);
  fftw_destroy_plan(pc);

  const double scale = 1.0 / static_cast<double>(n);
  std::vector<Int> out;
  const Int base = a.min() + b.min();
  for (std::uint64_t i = 0; i < nbits; ++i) {
    if (fa[i] * scale >= 0.5) out.push_back(base + Int(static_cast<unsigned long>(i)));
  }
  return IntSet::from_sorted_unique(std::move(out));
}

}  // namespace

namespace detail {

IntSet sumset_naive(const IntSet& a, const IntSet& b) {
  std::vector<Int> sums;
  sums.reserve(a.size() * b.size());
  for (const Int& x : a)
    for (const Int& y : b) sums.push_back(x + y);
  return IntSet::from_vector(std::move(sums));
}

bool bitset_path_applicable(const IntSet& a, const IntSet& b) {
  Int range = (a.max() - a.min()) + (b.max() - b.min()) + 1;
  return range <= Int(static_cast<unsigned long>(kBitsetWindowBits));
}

IntSet sumset_bitset(const IntSet& a, const IntSet& b) {
  if (!bitset_path_applicable(a, b))
    throw PreconditionError("sumset_bitset: range exceeds window");
  // Shift-or cost grows with |A| * result words; the FFT wins once the
  // operands are both large relative to the range.
  const std::uint64_t range =
      mpz_get_ui(Int((a.max() - a.min()) + (b.max() - b.min()) + 1).get_mpz_t());
  const std::uint64_t words = range / 64 + 1;
  const IntSet& small = a.size() <= b.size() ? a : b;
  const IntSet& large = a.size() <= b.size() ? b : a;
  const double shift_cost = static_cast<double>(small.size()) * words;
  const double fft_cost = 6.0 * range * (std::log2(static_cast<double>(range)) + 1);
  if (shift_cost <= fft_cost) return sumset_shift_or(small, large);
  return sumset_fft(small, large);
}

}  // namespace detail

IntSet sumset(const IntSet& a, const IntSet& b) {
  require_nonempty(a, "sumset");
  require_nonempty(b, "sumset");
  if (detail::bitset_path_applicable(a, b)) return detail::sumset_bitset(a, b);
  return detail::sumset_naive(a, b);
}

IntSet difference_set(const IntSet& a, const IntSet& b) {
  require_nonempty(a, "difference_set");
  require_nonempty(b, "difference_set");
  return sumset(a, b.negated());
}

IntSet iterated_sumset(const IntSet& a, unsigned h) {
  require_nonempty(a, "iterated_sumset");
  if (h == 0) throw PreconditionError("iterated_sumset: h must be >= 1");
  // Binary powering: hA from O(log h) pairwise sumsets.
  IntSet base = a;
  IntSet result;
  bool have = false;
  while (h > 0) {
    if (h & 1u) {
      result = have ? sumset(result, base) : base;
      have = true;
    }
    h >>= 1u;
    if (h > 0) base = sumset(base, base);
  }
  return result;
}

IntSet signed_combination(const IntSet& a, unsigned l, unsigned m) {
  require_nonempty(a, "signed_combination");
  if (l + m == 0)
    throw PreconditionError("signed_combination: l + m must be >= 1");
  IntSet zero{0};
  IntSet left = l > 0 ? iterated_sumset(a, l) : zero;
  IntSet right = m > 0 ? iterated_sumset(a, m) : zero;
  return difference_set(left, right);
}

IntSet restricted_sumset(const IntSet& a, const PairRelation& gamma) {
  if (gamma.empty())
    throw PreconditionError("restricted_sumset: empty relation");
  std::vector<Int> sums;
  sums.reserve(gamma.size());
  for (const auto& [i, j] : gamma.pairs()) {
    if (i >= a.size() || j >= a.size())
      throw StructuralError("restricted_sumset: index out of range");
    sums.push_back(a[i] + a[j]);
  }
  return IntSet::from_vector(std::move(sums));
}

Rat doubling(const IntSet& a, DoublingMode mode) {
  require_nonempty(a, "doubling");
  IntSet s = mode == DoublingMode::kPlus ? sumset(a, a) : difference_set(a, a);
  Rat q(static_cast<unsigned long>(s.size()),
        static_cast<unsigned long>(a.size()));
  q.canonicalize();
  return q;
}

Int additive_energy(const IntSet& a) {
  require_nonempty(a, "additive_energy");
  // E(A) = sum over s of r(s)^2 where r(s) = #{(x, y) : x + y = s}.
  std::vector<Int> sums;
  sums.reserve(a.size() * a.size());
  for (const Int& x : a)
    for (const Int& y : a) sums.push_back(x + y);
  std::sort(sums.begin(), sums.end());
  Int energy = 0;
  std::size_t i = 0;
  while (i < sums.size()) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    Int r(static_cast<unsigned long>(j - i));
    energy += r * r;
    i = j;
  }
  return energy;
}

}  // namespace addcomb
