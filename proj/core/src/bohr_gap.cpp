#include "addcomb/bohr_gap.hpp"

#include <algorithm>
#include <cmath>

#include "addcomb/errors.hpp"

namespace addcomb {
namespace {

constexpr long kBohrEnumGuard = 100'000'000;
constexpr long kMinimaIterGuard = 50'000'000;

Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

long to_long(const Int& x) { return mpz_get_si(x.get_mpz_t()); }

// Scaled sup-norm of a lattice vector w.r.t. the box (N, H).
Rat box_norm(const Int& x, const Int& y, long n, const Rat& h) {
  Rat nx = rat(abs(x), Int(n));
  Rat ny = abs_rat(Rat(y) / h);
  return std::max(nx, ny);
}

bool independent(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
  return a.first * b.second - a.second * b.first != 0;
}

}  // namespace

BohrSpec BohrSpec::from_rational(const Rat& alpha, const Rat& sigma, long n) {
  BohrSpec s{alpha, {}, sigma, n};
  s.validate();
  return s;
}

BohrSpec BohrSpec::from_cf(const std::vector<Int>& terms, const Rat& sigma,
                           long n) {
  BohrSpec s{cf_value(terms), terms, sigma, n};
  s.validate();
  return s;
}

void BohrSpec::validate() const {
  if (!(alpha > 0 && alpha < 1))
    throw PreconditionError("BohrSpec: alpha must lie in (0, 1)");
  if (!(sigma > 0 && sigma < Rat(1, 100)))
    throw PreconditionError("BohrSpec: sigma must lie in (0, 1/100)");
  if (N < 1 || sigma * N < 1)
    throw PreconditionError("BohrSpec: need sigma*N >= 1");
}

bool BohrSpec::contains(const Int& n) const {
  if (abs(n) > N) return false;
  return torus_norm(Rat(n) * alpha) < sigma;
}

IntSet bohr_set(const BohrSpec& spec) {
  if (spec.N > kBohrEnumGuard)
    throw ResourceError("bohr_set: N exceeds the enumeration guard");
  const Int u = spec.alpha.get_num();
  const Int v = spec.alpha.get_den();
  const Int sn = spec.sigma.get_num();
  const Int sd = spec.sigma.get_den();
  // ||n*alpha|| < sigma  <=>  min(r, v-r) * sd < sn * v  with r = n*u mod v.
  const Int rhs = sn * v;
  std::vector<Int> nonneg;
  Int r = 0;
  for (long n = 0; n <= spec.N; ++n) {
    Int folded = std::min(r, Int(v - r));
    if (folded * sd < rhs) nonneg.emplace_back(n);
    r += u;
    if (r >= v) r -= v;
  }
  std::vector<Int> out;
  out.reserve(2 * nonneg.size());
  for (auto it = nonneg.rbegin(); it != nonneg.rend(); ++it)
    if (*it != 0) out.push_back(-*it);
  for (const Int& n : nonneg) out.push_back(n);
  return IntSet::from_sorted_unique(std::move(out));
}

Rat cf_value(const std::vector<Int>& terms) {
  if (terms.empty()) throw PreconditionError("cf_value: empty expansion");
  Rat value(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (value == 0) throw PreconditionError("cf_value: zero partial quotient tail");
    value = Rat(*it) + 1 / value;
  }
  return value;
}

std::vector<Int> cf_expansion(const Rat& alpha) {
  std::vector<Int> terms;
  Rat x = alpha;
  while (true) {
    Int a = floor_rat(x);
    terms.push_back(a);
    Rat frac = x - Rat(a);
    if (frac == 0) break;
    x = 1 / frac;
  }
  // Canonical form: avoid a trailing 1 (e.g. [0;2,1] -> [0;3]).
  if (terms.size() >= 2 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  return terms;
}

std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& terms,
                                             std::size_t depth) {
  if (depth < 1) throw PreconditionError("convergents: depth >= 1");
  std::vector<std::pair<Int, Int>> out;
  Int p_prev = 1, q_prev = 0;  // h_{-1} / k_{-1}
  Int p = terms[0], q = 1;
  out.emplace_back(p, q);
  for (std::size_t i = 1; i < terms.size() && out.size() < depth; ++i) {
    Int p_next = terms[i] * p + p_prev;
    Int q_next = terms[i] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.emplace_back(p, q);
  }
  return out;
}

std::vector<std::pair<Int, Int>> convergents(const Rat& alpha,
                                             std::size_t depth) {
  return convergents(cf_expansion(alpha), depth);
}

Int Lattice2::det() const {
  return b1.first * b2.second - b1.second * b2.first;
}

MinimaResult successive_minima_2d(const Lattice2& lattice, long n,
                                  const Rat& halfheight) {
  if (n < 1 || halfheight <= 0)
    throw PreconditionError("successive_minima_2d: degenerate box");
  Int det = lattice.det();
  if (det == 0)
    throw StructuralError("successive_minima_2d: degenerate lattice");
  Int abs_det = abs(det);

  // Bring the lattice to the form Z*(g, s) + Z*(0, t): g = gcd of the
  // x-coordinates, t = |det| / g, and s from the Bezout combination.
  Int g, c1, c2;
  mpz_gcdext(g.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t(),
             lattice.b1.first.get_mpz_t(), lattice.b2.first.get_mpz_t());
  Int t = abs_det / g;
  Int s = c1 * lattice.b1.second + c2 * lattice.b2.second;
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());  // s in [0, t)

  // x-residue classes of y repeat with period t / gcd(s, t); beyond one
  // period every candidate is dominated by (g*period, 0) or (0, t).
  Int gcd_st;
  mpz_gcd(gcd_st.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  Int period = t / gcd_st;

  std::pair<Int, Int> v1, v2;
  Rat l1, l2;
  bool have1 = false, have2 = false;

  auto offer = [&](const Int& x, const Int& y) {
    if (x == 0 && y == 0) return;
    Rat norm = box_norm(x, y, n, halfheight);
    std::pair<Int, Int> w{x, y};
    if (!have1) {
      v1 = w;
      l1 = norm;
      have1 = true;
      return;
    }
    if (norm < l1) {
      if (independent(w, v1)) {
        v2 = v1;
        l2 = l1;
        have2 = true;
      }
      v1 = w;
      l1 = norm;
      return;
    }
    if (independent(w, v1) && (!have2 || norm < l2)) {
      v2 = w;
      l2 = norm;
      have2 = true;
    }
  };

  offer(Int(0), t);
  Int r = 0;  // s*n mod t
  long iters = 0;
  for (Int k = 1; k <= period; ++k) {
    if (++iters > kMinimaIterGuard)
      throw ResourceError("successive_minima_2d: enumeration budget exceeded");
    r += s;
    if (r >= t) r -= t;
    Int x = g * k;
    offer(x, r);
    if (r != 0) offer(x, Int(r - t));
    else offer(x, Int(0));
    // Once two independent vectors are in hand, no later column can improve.
    if (have1 && have2 && rat(x, Int(n)) > l2) break;
  }
  if (!have1 || !have2)
    throw InternalInvariantError("successive_minima_2d: failed to find two minima");

  MinimaResult res{l1, l2, v1, v2};
  // Minkowski's second theorem for the box: lambda1*lambda2 <= det/(N*H).
  if (res.lambda1 * res.lambda2 > Rat(abs_det) / (Rat(Int(n)) * halfheight))
    throw InternalInvariantError("successive_minima_2d: Minkowski bound violated");
  return res;
}

namespace {

struct Candidate {
  AnyProgression prog;
  MinimaResult minima;
  bool used_cf;
};

// The Minkowski construction of the rational case: always applicable since
// alpha is exact.
Candidate lattice_construction(const BohrSpec& spec) {
  const Int u = spec.alpha.get_num();
  const Int v = spec.alpha.get_den();
  Lattice2 lambda{{Int(1), u}, {Int(0), v}};
  Rat halfheight = spec.sigma * Rat(v);
  MinimaResult mins = successive_minima_2d(lambda, spec.N, halfheight);

  Int cap1 = floor_rat(1 / (10 * mins.lambda1));
  long big_l1 = to_long(cap1);

  if (mins.lambda2 >= Rat(1, 10)) {
    // One-dimensional branch: multiples of x1.
    Int x1 = abs(mins.v1.first);
    long len = 2 * big_l1 + 1;
    Progression1D p{-(Int(big_l1) + 1) * x1, x1, len};
    return {p, mins, false};
  }
  Int cap2 = floor_rat(1 / (10 * mins.lambda2));
  long big_l2 = to_long(cap2);
  Int x1 = mins.v1.first, x2 = mins.v2.first;
  GAP2 q{-(Int(big_l1) + 1) * x1 - (Int(big_l2) + 1) * x2, x1, x2,
         2 * big_l1 + 1, 2 * big_l2 + 1};
  return {q, mins, false};
}

// The convergent construction for continued-fraction input: q1 the largest
// denominator <= sqrt(sigma*N), q2 its successor, box |m_i| < M_i clamped so
// every element certifies. Returns nullopt when the expansion is too short
// or the clamped box degenerates; callers fall back to the lattice route.
std::optional<Candidate> cf_construction(const BohrSpec& spec) {
  auto convs = convergents(spec.cf, 64);
  if (convs.size() < 2) return std::nullopt;

  const Rat sigma_n = spec.sigma * spec.N;
  std::size_t k = convs.size();  // index of q1 candidate, 1 past the end
  for (std::size_t i = 0; i + 1 < convs.size(); ++i) {
    const Int& q = convs[i].second;
    if (Rat(q * q) <= sigma_n) k = i;
  }
  if (k + 1 >= convs.size()) return std::nullopt;

  const Int q1 = convs[k].second;
  const Int q2 = convs[k + 1].second;
  const Rat err1 = torus_norm(Rat(q1) * spec.alpha);
  const Rat err2 = torus_norm(Rat(q2) * spec.alpha);

  auto clamp = [&](const Int& q, const Rat& err, const Int& extra_cap) -> Int {
    Int m = floor_rat(Rat(Int(spec.N)) / (2 * Rat(q)));  // keep q*m <= N/2
    if (err > 0) m = std::min(m, floor_rat(spec.sigma / (2 * err)));
    m = std::min(m, extra_cap);
    return m;
  };
  // Properness needs M1 < q2/100.
  Int m1 = clamp(q1, err1, Int((q2 - 1) / 100));
  Int m2 = clamp(q2, err2, Int(spec.N));
  if (m1 < 1 || m2 < 1) return std::nullopt;

  long l1 = 2 * to_long(m1) - 1;
  long l2 = 2 * to_long(m2) - 1;
  MinimaResult dummy{};
  if (l2 == 1 || l1 == 1) {
    // Degenerate direction: emit the 1-dimensional progression instead.
    const Int& q = l1 > l2 ? q1 : q2;
    long len = std::max(l1, l2);
    Int m = l1 > l2 ? m1 : m2;
    return Candidate{Progression1D{-(m)*q, q, len}, dummy, true};
  }
  GAP2 gap{-m1 * q1 - m2 * q2, q1, q2, l1, l2};
  return Candidate{gap, dummy, true};
}

// Certification: direct membership of every element, properness for GAP2,
// and the pinned size floor sigma*N/400.
std::optional<ExtractCertificate> certify(const BohrSpec& spec,
                                          const AnyProgression& prog) {
  ExtractCertificate cert{};
  cert.size_floor = spec.sigma * Rat(Int(spec.N)) / 400;

  cert.proper = true;
  if (const GAP2* gap = std::get_if<GAP2>(&prog))
    cert.proper = is_proper(*gap).proper;

  IntSet pts = elements_of(prog);
  cert.size = static_cast<long>(pts.size());
  cert.size_ok = Rat(Int(cert.size)) >= cert.size_floor;
  cert.all_members = true;
  for (const Int& x : pts) {
    if (!spec.contains(x)) {
      cert.all_members = false;
      break;
    }
  }
  if (cert.all_members && cert.proper && cert.size_ok) return cert;
  return std::nullopt;
}

}  // namespace

ExtractResult extract_gap(const BohrSpec& spec) {
  spec.validate();
  if (spec.sigma * spec.N < 400)
    throw PreconditionError("extract_gap: need sigma*N >= 400");

  if (spec.has_cf()) {
    if (auto cand = cf_construction(spec)) {
      if (auto cert = certify(spec, cand->prog))
        return {cand->prog, *cert, cand->minima, true};
      // Heuristic parameter choice fell short; the lattice route below is
      // certified unconditionally.
    }
  }

  Candidate cand = lattice_construction(spec);
  auto cert = certify(spec, cand.prog);
  if (!cert)
    throw InternalInvariantError("extract_gap: lattice construction failed certification");
  return {cand.prog, *cert, cand.minima, false};
}

InhomExtractResult extract_gap_inhomogeneous(const Rat& theta,
                                             const Rat& center,
                                             const Rat& halfwidth,
                                             const Progression1D& window) {
  if (!(halfwidth > 0) || halfwidth >= Rat(1, 4))
    throw PreconditionError("extract_gap_inhomogeneous: halfwidth in (0, 1/4)");
  if (window.L > kBohrEnumGuard)
    throw ResourceError("extract_gap_inhomogeneous: window too large");

  auto in_interval = [&](const Int& n, const Rat& c, const Rat& h) {
    return torus_norm(Rat(n) * theta - c) <= h;
  };

  const Rat h_small = halfwidth / 100;

  // B and B' by direct enumeration over the window.
  long bohr_size = 0;
  std::optional<long> best_slot;  // index l in [1, L], most central member of B'
  for (long l = 1; l <= window.L; ++l) {
    Int n = window.a0 + window.v * l;
    if (in_interval(n, center, halfwidth)) ++bohr_size;
    if (in_interval(n, center, h_small)) {
      long margin = std::min(l - 1, window.L - l);
      if (!best_slot ||
          margin > std::min(*best_slot - 1, window.L - *best_slot))
        best_slot = l;
    }
  }
  InhomExtractResult res{};
  res.bohr_size = bohr_size;
  if (!best_slot) return res;  // empty B': no witness at this scale

  const Int b = window.a0 + window.v * (*best_slot);
  res.shift = b;
  const long n_prime = std::min(*best_slot - 1, window.L - *best_slot);
  if (n_prime < 1) return res;

  // Homogeneous sub-problem in slot coordinates: n = b + v*m, so membership
  // in the symmetric copy I'' needs ||m * (v*theta)|| <= h/100.
  Rat alpha0 = Rat(window.v) * theta;
  alpha0 -= Rat(floor_rat(alpha0));  // fractional part in [0, 1)

  AnyProgression local;
  if (alpha0 == 0) {
    // v*theta is an integer: every slot works.
    local = Progression1D{Int(-(n_prime + 1)), Int(1), 2 * n_prime + 1};
  } else {
    Rat sigma = h_small;
    if (!(sigma < Rat(1, 100)) || sigma * n_prime < 400) return res;
    BohrSpec sub = BohrSpec::from_rational(alpha0, sigma, n_prime);
    local = extract_gap(sub).prog;
  }

  // Map back: multiply steps by the window step and shift by b.
  AnyProgression shifted = std::visit(
      [&](const auto& p) -> AnyProgression {
        auto q = p;
        q.a0 = b + window.v * p.a0;
        if constexpr (requires { q.a2; }) {
          q.a1 = window.v * p.a1;
          q.a2 = window.v * p.a2;
        } else {
          q.v = window.v * p.v;
        }
        return q;
      },
      local);

  IntSet pts = elements_of(shifted);
  bool certified = true;
  for (const Int& x : pts)
    if (!in_interval(x, center, halfwidth)) {
      certified = false;
      break;
    }
  if (!certified)
    throw InternalInvariantError("extract_gap_inhomogeneous: shifted progression escaped I");

  res.found = true;
  res.prog = shifted;
  res.certified = certified;
  res.size_ratio = bohr_size > 0
                       ? static_cast<double>(pts.size()) / bohr_size
                       : 0.0;
  return res;
}

IrrationalityCheck certify_irrational(const std::vector<Rat>& theta,
                                      const Rat& a, long n) {
  if (theta.empty()) throw PreconditionError("certify_irrational: empty theta");
  if (a <= 0 || n < 1)
    throw PreconditionError("certify_irrational: need A > 0 and N >= 1");
  const long amax = to_long(floor_rat(a));
  const std::size_t d = theta.size();
  double budget = std::pow(2.0 * amax + 1.0, static_cast<double>(d));
  if (budget > 1e8)
    throw ResourceError("certify_irrational: l1 ball exceeds budget");
  const Rat floor_dist = a / n;

  std::vector<Int> m(d, Int(-amax));
  auto l1 = [&] {
    Int s = 0;
    for (const Int& c : m) s += abs(c);
    return s;
  };
  while (true) {
    bool zero = std::all_of(m.begin(), m.end(),
                            [](const Int& c) { return c == 0; });
    if (!zero && l1() <= amax) {
      Rat dot = 0;
      for (std::size_t i = 0; i < d; ++i) dot += Rat(m[i]) * theta[i];
      if (torus_norm(dot) < floor_dist) return {false, m};
    }
    std::size_t pos = d;
    while (pos > 0 && m[pos - 1] == amax) m[--pos] = -amax;
    if (pos == 0) break;
    m[pos - 1] += 1;
  }
  return {true, std::nullopt};
}

}  // namespace addcomb
