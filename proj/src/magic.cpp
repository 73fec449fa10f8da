#include "compalg/magic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "compalg/hurwitz.hpp"
#include "compalg/symcomp.hpp"

namespace compalg {

// ------------------------------------------------------------ LieAlgebra

LieAlgebra LieAlgebra::make(FieldPtr f, std::vector<std::string> labels,
                            std::vector<std::pair<std::string, std::size_t>> sectors,
                            const std::vector<TensorEntry>& entries) {
  LieAlgebra l;
  l.field_ = std::move(f);
  l.dim_ = labels.size();
  if (l.dim_ == 0) fail(errc::bad_dimension, "Lie algebras must have dimension >= 1");
  l.labels_ = std::move(labels);
  std::size_t sector_sum = 0;
  for (const auto& [name, len] : sectors) sector_sum += len;
  if (!sectors.empty() && sector_sum != l.dim_)
    fail(errc::bad_dimension, "sector sizes do not sum to the dimension");
  l.sectors_ = std::move(sectors);
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> acc;
  for (const auto& e : entries) {
    if (e.i >= l.dim_ || e.j >= l.dim_ || e.k >= l.dim_)
      fail(errc::bad_dimension, "bracket index out of range");
    if (e.i >= e.j)
      fail(errc::bad_dimension, "anticommutative storage requires i < j entries");
    auto& cell = acc[{e.i, e.j}];
    auto it = cell.find(e.k);
    if (it == cell.end())
      cell.emplace(e.k, e.c);
    else
      it->second += e.c;
  }
  l.rows_.assign(l.dim_ * l.dim_, {});
  for (auto& [ij, cell] : acc) {
    SparseVec row;
    for (auto& [k, c] : cell)
      if (!c.is_zero()) row.emplace_back(k, c);
    l.rows_[ij.first * l.dim_ + ij.second] = std::move(row);
  }
  return l;
}

std::vector<TensorEntry> LieAlgebra::tensor_entries() const {
  std::vector<TensorEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& [k, c] : upper(i, j)) out.push_back({i, j, k, c});
  return out;
}

Scalar LieAlgebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return field_->zero();
  const SparseVec& row = i < j ? upper(i, j) : upper(j, i);
  for (const auto& [kk, c] : row)
    if (kk == k) return i < j ? c : -c;
  return field_->zero();
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const SparseVec& row = i < j ? upper(i, j) : upper(j, i);
      if (row.empty()) continue;
      Scalar c = x[i] * y[j];
      if (i > j) c = -c;
      for (const auto& [k, coefv] : row) out[k] += coefv * c;
    }
  }
  return out;
}

// ------------------------------------------------------------- Jacobi

namespace {

// J(i,j,k) accumulated into a dense scratch vector with a touched list
struct JacobiScratch {
  Vec acc;
  std::vector<std::size_t> touched;
  explicit JacobiScratch(const FieldPtr& f, std::size_t n) : acc(zero_vec(f, n)) {}
};

bool jacobi_triple_ok(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k,
                      JacobiScratch& scratch) {
  auto add_double = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [[a,b], c]
    if (a == b) return;
    const auto& row = a < b ? l.upper(a, b) : l.upper(b, a);
    bool neg = a > b;
    for (const auto& [m, coef] : row) {
      if (m == c) continue;
      const auto& row2 = m < c ? l.upper(m, c) : l.upper(c, m);
      bool neg2 = (m > c) != neg;
      for (const auto& [t, coef2] : row2) {
        Scalar add = coef * coef2;
        if (scratch.acc[t].is_zero()) scratch.touched.push_back(t);
        if (neg2)
          scratch.acc[t] -= add;
        else
          scratch.acc[t] += add;
      }
    }
  };
  add_double(i, j, k);
  add_double(j, k, i);
  add_double(k, i, j);
  bool ok = true;
  for (std::size_t t : scratch.touched)
    if (!scratch.acc[t].is_zero()) {
      ok = false;
      break;
    }
  for (std::size_t t : scratch.touched) scratch.acc[t] = l.field()->zero();
  scratch.touched.clear();
  return ok;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

}  // namespace

JacobiReport jacobi_check(const LieAlgebra& l, JacobiMode mode, std::uint64_t sample_count,
                          std::uint64_t seed, unsigned jobs) {
  JacobiReport rep;
  rep.mode = mode;
  std::size_t n = l.dim();
  unsigned workers = resolve_jobs(jobs);

  if (mode == JacobiMode::sample) {
    if (n < 3) return rep;  // no triples to test
    // one deterministic triple list, independent of the worker count
    std::vector<std::array<std::uint32_t, 3>> triples;
    triples.reserve(sample_count);
    Rng rng(seed);
    while (triples.size() < sample_count) {
      std::uint32_t a = static_cast<std::uint32_t>(rng.below(n));
      std::uint32_t b = static_cast<std::uint32_t>(rng.below(n));
      std::uint32_t c = static_cast<std::uint32_t>(rng.below(n));
      if (a == b || b == c || a == c) continue;
      std::array<std::uint32_t, 3> t{a, b, c};
      std::sort(t.begin(), t.end());
      triples.push_back(t);
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::array<std::size_t, 3>> worker_witness(workers, {n, n, n});
    auto work = [&](unsigned w) {
      JacobiScratch scratch(l.field(), n);
      constexpr std::uint64_t chunk = 1024;
      for (;;) {
        std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= triples.size()) return;
        std::uint64_t end = std::min<std::uint64_t>(begin + chunk, triples.size());
        for (std::uint64_t t = begin; t < end; ++t) {
          const auto& tr = triples[t];
          if (!jacobi_triple_ok(l, tr[0], tr[1], tr[2], scratch)) {
            failed = true;
            std::array<std::size_t, 3> w3{tr[0], tr[1], tr[2]};
            if (w3 < worker_witness[w]) worker_witness[w] = w3;
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    rep.tested = triples.size();
    rep.pass = !failed;
    if (failed) {
      rep.has_witness = true;
      rep.witness = *std::min_element(worker_witness.begin(), worker_witness.end());
    }
    return rep;
  }

  // full mode: workers pull first indices i and scan all j < k above them
  std::atomic<std::size_t> next_i{0};
  std::atomic<std::uint64_t> tested{0};
  std::atomic<bool> failed{false};
  std::vector<std::array<std::size_t, 3>> worker_witness(workers, {n, n, n});
  auto work = [&](unsigned w) {
    JacobiScratch scratch(l.field(), n);
    std::uint64_t local = 0;
    for (;;) {
      std::size_t i = next_i.fetch_add(1);
      if (i >= n) break;
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          ++local;
          if (!jacobi_triple_ok(l, i, j, k, scratch)) {
            failed = true;
            std::array<std::size_t, 3> w3{i, j, k};
            if (w3 < worker_witness[w]) worker_witness[w] = w3;
          }
        }
    }
    tested += local;
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  rep.tested = tested;
  rep.pass = !failed;
  if (failed) {
    rep.has_witness = true;
    rep.witness = *std::min_element(worker_witness.begin(), worker_witness.end());
  }
  return rep;
}

// ----------------------------------------------------------- invariants

namespace {

// Lie bracket tables reduced mod p (p = the field characteristic for
// prime fields, a large auxiliary prime for the rationals). Rank results
// are exact over GF(p); over Q a full rank / zero kernel certifies the
// same over Q, anything else falls back to exact arithmetic.
struct U64Lie {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows;  // i*n+j, i<j

  std::uint64_t coeff(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return 0;
    const auto& row = i < j ? rows[i * n + j] : rows[j * n + i];
    for (const auto& [kk, c] : row)
      if (kk == k) return i < j ? c : (c ? p - c : 0);
    return 0;
  }
};

std::uint64_t u64_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t u64_inv(std::uint64_t a, std::uint64_t p) { return u64_pow(a, p - 2, p); }

std::optional<std::uint64_t> scalar_mod(const Scalar& s, std::uint64_t p) {
  if (s.field()->kind() == FieldKind::prime) {
    return std::get<Scalar::ModRep>(s.rep()).r % p;
  }
  if (s.field()->kind() == FieldKind::rationals) {
    const mpq_class& q = std::get<Scalar::RatRep>(s.rep()).v;
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(num) * u64_inv(den, p) % p);
  }
  return std::nullopt;
}

std::optional<U64Lie> lie_mod(const LieAlgebra& l) {
  static const std::uint64_t primes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};
  std::vector<std::uint64_t> candidates;
  if (l.field()->kind() == FieldKind::prime) {
    candidates.push_back(l.field()->modulus());
  } else if (l.field()->kind() == FieldKind::rationals) {
    candidates.assign(std::begin(primes), std::end(primes));
  } else {
    return std::nullopt;
  }
  for (std::uint64_t p : candidates) {
    U64Lie out;
    out.p = p;
    out.n = l.dim();
    out.rows.assign(out.n * out.n, {});
    bool ok = true;
    for (std::size_t i = 0; i < out.n && ok; ++i)
      for (std::size_t j = i + 1; j < out.n && ok; ++j) {
        for (const auto& [k, c] : l.upper(i, j)) {
          auto m = scalar_mod(c, p);
          if (!m) {
            ok = false;
            break;
          }
          if (*m) out.rows[i * out.n + j].emplace_back(static_cast<std::uint32_t>(k), *m);
        }
      }
    if (ok) return out;
  }
  return std::nullopt;
}

// dense row reduction over GF(p); returns the rank
std::size_t u64_rank(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = u64_inv(m[rank][col], p);
    for (std::size_t j = col; j < cols; ++j)
      m[rank][j] = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(m[rank][j]) * inv % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      std::uint64_t f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        std::uint64_t sub = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(m[rank][j]) * f % p);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

// kernel dimension of the stacked adjoint: z -> ([z, e_j])_j, intersected
// incrementally
std::size_t u64_center_dim(const U64Lie& l) {
  std::size_t n = l.n;
  // current space = column span of basis B (n x k), start with identity
  std::vector<std::vector<std::uint64_t>> b(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  std::size_t k = n;
  for (std::size_t j = 0; j < n && k > 0; ++j) {
    // rows of M: for each output coordinate t, sum_i B[i][c] coeff(i,j,t)
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const auto& row = i < j ? l.rows[i * n + j] : l.rows[j * n + i];
      bool neg = i > j;
      for (const auto& [t, craw] : row) {
        std::uint64_t c = neg ? (craw ? l.p - craw : 0) : craw;
        if (!c) continue;
        for (std::size_t col = 0; col < k; ++col) {
          if (!b[i][col]) continue;
          m[t][col] = (m[t][col] +
                       static_cast<std::uint64_t>(
                           static_cast<unsigned __int128>(c) * b[i][col] % l.p)) %
                      l.p;
        }
      }
    }
    // kernel of m (n x k) -> new basis combinations
    std::vector<std::vector<std::uint64_t>> red = m;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < k && r < red.size(); ++col) {
      std::size_t piv = r;
      while (piv < red.size() && red[piv][col] == 0) ++piv;
      if (piv == red.size()) continue;
      std::swap(red[piv], red[r]);
      std::uint64_t inv = u64_inv(red[r][col], l.p);
      for (std::size_t jj = col; jj < k; ++jj)
        red[r][jj] = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(red[r][jj]) * inv % l.p);
      for (std::size_t ii = 0; ii < red.size(); ++ii) {
        if (ii == r || red[ii][col] == 0) continue;
        std::uint64_t fct = red[ii][col];
        for (std::size_t jj = col; jj < k; ++jj) {
          std::uint64_t sub = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(red[r][jj]) * fct % l.p);
          red[ii][jj] = red[ii][jj] >= sub ? red[ii][jj] - sub : red[ii][jj] + l.p - sub;
        }
      }
      pivots.push_back(col);
      ++r;
    }
    // free columns give the kernel combinations
    std::vector<bool> is_pivot(k, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> nb;  // n x k'
    std::size_t kprime = k - pivots.size();
    nb.assign(n, std::vector<std::uint64_t>(kprime, 0));
    std::size_t out_col = 0;
    for (std::size_t free = 0; free < k; ++free) {
      if (is_pivot[free]) continue;
      // kernel vector: x[free] = 1, x[pivots[i]] = -red[i][free]
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t acc = b[i][free];
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
          std::uint64_t c = red[pi][free];
          if (!c || !b[i][pivots[pi]]) continue;
          std::uint64_t sub = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(c) * b[i][pivots[pi]] % l.p);
          acc = acc >= sub ? acc - sub : acc + l.p - sub;
        }
        nb[i][out_col] = acc;
      }
      ++out_col;
    }
    b = std::move(nb);
    k = kprime;
  }
  return k;
}

std::size_t u64_derived_dim(const U64Lie& l) {
  std::size_t n = l.n;
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& row = l.rows[i * n + j];
      if (row.empty()) continue;
      std::vector<std::uint64_t> v(n, 0);
      for (const auto& [k, c] : row) v[k] = c;
      rows.push_back(std::move(v));
      if (rows.size() >= 4 * n) {  // reduce in batches to cap memory
        std::size_t r = u64_rank(rows, l.p);
        rows.resize(r);
        if (r == n) return n;
      }
    }
  std::size_t r = u64_rank(rows, l.p);
  return r;
}

std::size_t u64_killing_rank(const U64Lie& l) {
  std::size_t n = l.n;
  std::vector<std::vector<std::uint64_t>> k(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // tr(ad_i ad_j) = sum_a coeff_a([e_i, [e_j, e_a]])
      unsigned __int128 acc = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == j) continue;
        const auto& row = j < a ? l.rows[j * n + a] : l.rows[a * n + j];
        bool neg = j > a;
        for (const auto& [b, craw] : row) {
          std::uint64_t c1 = neg ? (craw ? l.p - craw : 0) : craw;
          if (!c1) continue;
          std::uint64_t c2 = l.coeff(i, b, a);
          if (!c2) continue;
          acc += static_cast<unsigned __int128>(c1) * c2 % l.p;
        }
      }
      k[i][j] = k[j][i] = static_cast<std::uint64_t>(acc % l.p);
    }
  return u64_rank(k, l.p);
}

// exact fallbacks over the scalar field
std::size_t exact_center_dim(const LieAlgebra& l) {
  std::size_t n = l.dim();
  Mat sys(l.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& row = i < j ? l.upper(i, j) : l.upper(j, i);
      for (const auto& [k, c] : row) sys.at(j * n + k, i) += (i < j ? c : -c);
    }
  return kernel_basis(sys).size();
}

std::size_t exact_derived_dim(const LieAlgebra& l) {
  RowReducer red(l.field(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const auto& row = l.upper(i, j);
      if (row.empty()) continue;
      Vec v = zero_vec(l.field(), l.dim());
      for (const auto& [k, c] : row) v[k] = c;
      if (red.add(v) && red.rank() == l.dim()) return l.dim();
    }
  return red.rank();
}

std::size_t exact_killing_rank(const LieAlgebra& l) {
  std::size_t n = l.dim();
  Mat k(l.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar acc = l.field()->zero();
      for (std::size_t a = 0; a < n; ++a) {
        if (a == j) continue;
        const auto& row = j < a ? l.upper(j, a) : l.upper(a, j);
        for (const auto& [b, craw] : row) {
          Scalar c1 = j < a ? craw : -craw;
          Scalar c2 = l.coeff(i, b, a);
          if (!c2.is_zero()) acc += c1 * c2;
        }
      }
      k.at(i, j) = acc;
      k.at(j, i) = acc;
    }
  return rank(std::move(k));
}

}  // namespace

LieInvariants lie_invariants(const LieAlgebra& l) {
  LieInvariants out;
  std::size_t n = l.dim();
  bool exact_over_field = l.field()->kind() == FieldKind::prime;
  auto mod = lie_mod(l);
  if (mod) {
    std::size_t c = u64_center_dim(*mod);
    std::size_t d = u64_derived_dim(*mod);
    std::size_t k = u64_killing_rank(*mod);
    if (exact_over_field) return {c, d, k};  // computed in the actual field
    // over Q the mod-p results certify only extreme answers
    out.center_dim = c == 0 ? 0 : exact_center_dim(l);
    out.derived_dim = d == n ? n : exact_derived_dim(l);
    out.killing_rank = k == n ? n : exact_killing_rank(l);
    return out;
  }
  out.center_dim = exact_center_dim(l);
  out.derived_dim = exact_derived_dim(l);
  out.killing_rank = exact_killing_rank(l);
  return out;
}

// -------------------------------------------------------------- build_g

PreparedSymComp prepare_symcomp(const AlgebraPtr& s) {
  const FieldPtr& f = s->field();
  if (f->characteristic() == 2 || f->characteristic() == 3)
    fail(errc::bad_characteristic, "the magic square needs characteristic not in {2,3}");
  std::size_t d = s->dim();
  if (d != 1 && d != 2 && d != 4 && d != 8)
    fail(errc::not_symmetric_composition, "symmetric composition algebras have dim 1,2,4,8");
  if (!s->norm()) fail(errc::no_norm, "symmetric composition needs a norm");
  if (!verify_symmetric(*s).pass())
    fail(errc::not_symmetric_composition, "algebra fails the symmetric composition checks");

  PreparedSymComp out;
  out.s = s;
  out.tri = tri_basis_constraints(s);

  RowReducer red(f, 3 * d * d);
  for (const auto& t : out.tri) red.add(t.flattened());
  auto coords_of = [&](const Vec& flat) {
    Vec c = red.coords_in_basis(flat);
    // defensive: confirm flat really lies in the span
    Vec residual = flat;
    for (std::size_t b = 0; b < out.tri.size(); ++b) {
      if (c[b].is_zero()) continue;
      const Vec& row = red.rows()[b];
      for (std::size_t t = 0; t < row.size(); ++t)
        if (!row[t].is_zero()) residual[t] -= c[b] * row[t];
    }
    if (!is_zero_vec(residual)) fail(errc::internal, "t_{x,y} escaped the tri span");
    return c;
  };
  for (auto& per_shift : out.t_coords) per_shift.assign(d * d, Vec{});
  RowReducer span(f, 3 * d * d);  // second route: span of the t_{x,y}
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x + 1; y < d; ++y) {
      TrialityTriple t = t_triple(s, s->basis_vec(x), s->basis_vec(y));
      TrialityTriple t1 = theta(s, t);
      TrialityTriple t2 = theta(s, t1);
      span.add(t.flattened());
      out.t_coords[0][x * d + y] = coords_of(t.flattened());
      out.t_coords[1][x * d + y] = coords_of(t1.flattened());
      out.t_coords[2][x * d + y] = coords_of(t2.flattened());
    }
  // in dimension 8 the t_{x,y} span all of tri (local triality); in lower
  // dimensions the span may be strictly smaller and tri comes from the
  // constraint route alone
  if (d == 8 && span.rank() != out.tri.size())
    fail(errc::internal, "t_{x,y} span disagrees with the constraint solution space");
  return out;
}

LieAlgebra build_g(const PreparedSymComp& a, const PreparedSymComp& b) {
  const FieldPtr& f = a.s->field();
  if (!f->same(*b.s->field())) fail(errc::mixed_fields, "algebras over different fields");
  std::size_t da = a.s->dim(), db = b.s->dim();
  std::size_t ma = a.tri.size(), mb = b.tri.size();
  std::size_t dd = da * db;

  auto iota = [&](unsigned i, std::size_t x, std::size_t y) {
    return ma + mb + i * dd + x * db + y;
  };

  std::vector<std::string> labels;
  for (std::size_t p = 0; p < ma; ++p) labels.push_back("t" + std::to_string(p));
  for (std::size_t p = 0; p < mb; ++p) labels.push_back("t'" + std::to_string(p));
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t y = 0; y < db; ++y)
        labels.push_back("i" + std::to_string(i) + "[" + a.s->labels()[x] + "," +
                         b.s->labels()[y] + "]");
  std::vector<std::pair<std::string, std::size_t>> sectors = {
      {"tri", ma}, {"tri'", mb}, {"iota0", dd}, {"iota1", dd}, {"iota2", dd}};

  std::vector<TensorEntry> entries;

  // solver for coordinates in each tri basis
  RowReducer red_a(f, 3 * da * da), red_b(f, 3 * db * db);
  for (const auto& t : a.tri) red_a.add(t.flattened());
  for (const auto& t : b.tri) red_b.add(t.flattened());

  auto tri_bracket = [&](const std::vector<TrialityTriple>& basis, const RowReducer& red,
                         std::size_t p, std::size_t q) {
    TrialityTriple br;
    br.d0 = basis[p].d0 * basis[q].d0 - basis[q].d0 * basis[p].d0;
    br.d1 = basis[p].d1 * basis[q].d1 - basis[q].d1 * basis[p].d1;
    br.d2 = basis[p].d2 * basis[q].d2 - basis[q].d2 * basis[p].d2;
    Vec flat = br.flattened();
    if (!red.contains(flat)) fail(errc::internal, "tri is not closed under the bracket");
    return red.coords_in_basis(flat);
  };

  for (std::size_t p = 0; p < ma; ++p)
    for (std::size_t q = p + 1; q < ma; ++q) {
      Vec c = tri_bracket(a.tri, red_a, p, q);
      for (std::size_t r = 0; r < ma; ++r)
        if (!c[r].is_zero()) entries.push_back({p, q, r, c[r]});
    }
  for (std::size_t p = 0; p < mb; ++p)
    for (std::size_t q = p + 1; q < mb; ++q) {
      Vec c = tri_bracket(b.tri, red_b, p, q);
      for (std::size_t r = 0; r < mb; ++r)
        if (!c[r].is_zero()) entries.push_back({ma + p, ma + q, ma + r, c[r]});
    }

  // [tri, iota_i] acts through component i on the first factor
  for (std::size_t p = 0; p < ma; ++p) {
    const Mat* comps[3] = {&a.tri[p].d0, &a.tri[p].d1, &a.tri[p].d2};
    for (unsigned i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y)
          for (std::size_t z = 0; z < da; ++z) {
            const Scalar& c = comps[i]->at(z, x);
            if (!c.is_zero()) entries.push_back({p, iota(i, x, y), iota(i, z, y), c});
          }
  }
  for (std::size_t p = 0; p < mb; ++p) {
    const Mat* comps[3] = {&b.tri[p].d0, &b.tri[p].d1, &b.tri[p].d2};
    for (unsigned i = 0; i < 3; ++i)
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y)
          for (std::size_t z = 0; z < db; ++z) {
            const Scalar& c = comps[i]->at(z, y);
            if (!c.is_zero()) entries.push_back({ma + p, iota(i, x, y), iota(i, x, z), c});
          }
  }

  // [iota_i, iota_{i+1}] -> iota_{i+2} via the products
  for (unsigned si = 0; si < 3; ++si)
    for (unsigned sj = si + 1; sj < 3; ++sj) {
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t xp = 0; xp < db; ++xp)
          for (std::size_t y = 0; y < da; ++y)
            for (std::size_t yp = 0; yp < db; ++yp) {
              std::size_t gi = iota(si, x, xp), gj = iota(sj, y, yp);
              Vec pa, pb;
              unsigned target;
              bool negate = false;
              if (sj == si + 1) {
                pa = a.s->mul(a.s->basis_vec(x), a.s->basis_vec(y));
                pb = b.s->mul(b.s->basis_vec(xp), b.s->basis_vec(yp));
                target = (si + 2) % 3;
              } else {  // (si, sj) = (0, 2): [i0, i2] = -i1((y*x) (x) (y'*x'))
                pa = a.s->mul(a.s->basis_vec(y), a.s->basis_vec(x));
                pb = b.s->mul(b.s->basis_vec(yp), b.s->basis_vec(xp));
                target = 1;
                negate = true;
              }
              for (std::size_t z = 0; z < da; ++z) {
                if (pa[z].is_zero()) continue;
                for (std::size_t zp = 0; zp < db; ++zp) {
                  if (pb[zp].is_zero()) continue;
                  Scalar c = pa[z] * pb[zp];
                  entries.push_back({gi, gj, iota(target, z, zp), negate ? -c : c});
                }
              }
            }
    }

  // same-sector brackets: [iota_i(x@x'), iota_i(y@y')] =
  //   n'(x',y') theta^i(t_{x,y}) + n(x,y) theta'^i(t'_{x',y'})
  auto tcoord = [&](const PreparedSymComp& pc, unsigned shift, std::size_t x, std::size_t y,
                    bool* neg) -> const Vec* {
    std::size_t d = pc.s->dim();
    if (x == y) return nullptr;
    if (x < y) {
      *neg = false;
      return &pc.t_coords[shift][x * d + y];
    }
    *neg = true;
    return &pc.t_coords[shift][y * d + x];
  };
  for (unsigned i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < da; ++x)
      for (std::size_t xp = 0; xp < db; ++xp)
        for (std::size_t y = 0; y < da; ++y)
          for (std::size_t yp = 0; yp < db; ++yp) {
            std::size_t gi = iota(i, x, xp), gj = iota(i, y, yp);
            if (gi >= gj) continue;
            Scalar nb_val = b.s->polar_of(b.s->basis_vec(xp), b.s->basis_vec(yp));
            if (!nb_val.is_zero()) {
              bool neg = false;
              if (const Vec* c = tcoord(a, i, x, y, &neg)) {
                for (std::size_t r = 0; r < ma; ++r) {
                  if ((*c)[r].is_zero()) continue;
                  Scalar v = nb_val * (*c)[r];
                  entries.push_back({gi, gj, r, neg ? -v : v});
                }
              }
            }
            Scalar na_val = a.s->polar_of(a.s->basis_vec(x), a.s->basis_vec(y));
            if (!na_val.is_zero()) {
              bool neg = false;
              if (const Vec* c = tcoord(b, i, xp, yp, &neg)) {
                for (std::size_t r = 0; r < mb; ++r) {
                  if ((*c)[r].is_zero()) continue;
                  Scalar v = na_val * (*c)[r];
                  entries.push_back({gi, gj, ma + r, neg ? -v : v});
                }
              }
            }
          }

  return LieAlgebra::make(f, std::move(labels), std::move(sectors), entries);
}

LieAlgebra build_g(const AlgebraPtr& a, const AlgebraPtr& b) {
  return build_g(prepare_symcomp(a), prepare_symcomp(b));
}

AlgebraPtr magic_slot_algebra(const FieldPtr& f, MagicSlot slot) {
  switch (slot) {
    case MagicSlot::s1: return para(ground(f));
    case MagicSlot::s2: return para(quadratic_etale(f, f->zero()));
    case MagicSlot::s4: return para(cayley_dickson(quadratic_etale(f, f->zero()), f->one()));
    case MagicSlot::s8_para: return para(split_cayley(f));
    case MagicSlot::s8_okubo: return split_okubo(f);
  }
  fail(errc::internal, "bad slot");
}

MagicSquare magic_table(const FieldPtr& f, MagicFlavor flavor) {
  if (f->characteristic() == 2 || f->characteristic() == 3)
    fail(errc::bad_characteristic, "the magic square needs characteristic not in {2,3}");
  MagicSlot slots[4] = {MagicSlot::s1, MagicSlot::s2, MagicSlot::s4,
                        flavor == MagicFlavor::para ? MagicSlot::s8_para : MagicSlot::s8_okubo};
  std::array<PreparedSymComp, 4> prepared;
  for (int i = 0; i < 4; ++i) prepared[i] = prepare_symcomp(magic_slot_algebra(f, slots[i]));
  MagicSquare out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.dims[r][c] = build_g(prepared[r], prepared[c]).dim();
  return out;
}

}  // namespace compalg
