#include "ncpb/integer_matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace ncpb {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("integer matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(IntMatrix m)
      : a_(std::move(m)), q_(IntMatrix::identity(a_.cols())), qinv_(IntMatrix::identity(a_.cols())) {}

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      if (!move_smallest_to(t)) break;
      for (;;) {
        bool dirty = clear_column(t);
        dirty = clear_row(t) || dirty;
        if (dirty) continue;
        // Divisibility: every remaining entry must be a multiple of the pivot.
        auto bad = find_non_multiple(t);
        if (!bad) break;
        add_row(*bad, t, 1);
      }
      ++t;
    }
    SmithForm out;
    const std::size_t n = std::min(rows, cols);
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a_(i, i) < 0) negate_col(i);
      out.diagonal[i] = a_(i, i);
      if (a_(i, i) != 0) ++out.rank;
    }
    out.right = std::move(q_);
    out.right_inverse = std::move(qinv_);
    return out;
  }

 private:
  bool move_smallest_to(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Integer& x = a_(r, c);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!found || ax < best) {
          best = ax;
          br = r;
          bc = c;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    if (br != t) swap_rows(br, t);
    if (bc != t) swap_cols(bc, t);
    return true;
  }

  // Reduce entries below the pivot; returns true if the pivot changed.
  bool clear_column(std::size_t t) {
    bool changed = false;
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      while (a_(r, t) != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row(t, r, -q);
        if (a_(r, t) != 0) {
          swap_rows(r, t);
          changed = true;
        }
      }
    }
    return changed;
  }

  bool clear_row(std::size_t t) {
    bool changed = false;
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      while (a_(t, c) != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col(t, c, -q);
        if (a_(t, c) != 0) {
          swap_cols(c, t);
          changed = true;
        }
      }
    }
    return changed;
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    const Integer& p = a_(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(r, c) != 0 && !mpz_divisible_p(a_(r, c).get_mpz_t(), p.get_mpz_t())) return r;
      }
    return std::nullopt;
  }

  // row dst += k * row src
  void add_row(std::size_t src, std::size_t dst, const Integer& k) {
    for (std::size_t c = 0; c < a_.cols(); ++c) {
      if (a_(src, c) != 0) a_(dst, c) += k * a_(src, c);
    }
  }

  // col dst += k * col src; Q gets the same column op, Q^{-1} the inverse row op.
  void add_col(std::size_t src, std::size_t dst, const Integer& k) {
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      if (a_(r, src) != 0) a_(r, dst) += k * a_(r, src);
    }
    for (std::size_t r = 0; r < q_.rows(); ++r) {
      if (q_(r, src) != 0) q_(r, dst) += k * q_(r, src);
    }
    for (std::size_t c = 0; c < qinv_.cols(); ++c) {
      if (qinv_(dst, c) != 0) qinv_(src, c) -= k * qinv_(dst, c);
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < q_.rows(); ++r) std::swap(q_(r, i), q_(r, j));
    for (std::size_t c = 0; c < qinv_.cols(); ++c) std::swap(qinv_(i, c), qinv_(j, c));
  }

  void negate_col(std::size_t i) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, i) = -a_(r, i);
    for (std::size_t r = 0; r < q_.rows(); ++r) q_(r, i) = -q_(r, i);
    for (std::size_t c = 0; c < qinv_.cols(); ++c) qinv_(i, c) = -qinv_(i, c);
  }

  IntMatrix a_;
  IntMatrix q_;
  IntMatrix qinv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t c = s.rank; c < m.cols(); ++c) {
    std::vector<Integer> v(m.cols());
    for (std::size_t r = 0; r < m.cols(); ++r) v[r] = s.right(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<long long> cokernel_invariants(const IntMatrix& relations) {
  std::vector<long long> out;
  std::size_t free = relations.cols();
  if (relations.rows() > 0 && relations.cols() > 0) {
    SmithForm s = smith_normal_form(relations);
    free -= s.rank;
    for (const auto& d : s.diagonal) {
      if (d > 1) {
        if (!d.fits_slong_p()) throw Error("invariant factor too large");
        out.push_back(d.get_si());
      }
    }
  }
  out = normalize_invariant_factors(out);
  out.insert(out.end(), free, 0);
  return out;
}

std::vector<long long> normalize_invariant_factors(const std::vector<long long>& cyclic_orders) {
  // prime -> exponents of the primary parts
  std::map<long long, std::vector<int>> primary;
  for (long long c : cyclic_orders) {
    if (c <= 0) throw DomainError("cyclic orders must be positive");
    long long n = c;
    for (long long p = 2; p * p <= n; ++p) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) primary[p].push_back(e);
    }
    if (n > 1) primary[n].push_back(1);
  }
  std::size_t k = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<>());
    k = std::max(k, es.size());
  }
  // Largest invariant factor collects the largest power of each prime.
  std::vector<long long> out(k, 1);
  for (auto& [p, es] : primary) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (int j = 0; j < es[i]; ++j) out[k - 1 - i] *= p;
    }
  }
  return out;
}

}  // namespace ncpb
