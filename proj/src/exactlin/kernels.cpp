#include "tannakit/exactlin/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tannakit::exactlin {

namespace {

std::atomic<int> g_max_threads{0};

// Below this many scalar updates per elimination step the team start-up
// cost dominates.
constexpr std::size_t kParallelWork = 4096;

int team_size() {
  int cap = g_max_threads.load();
#ifdef _OPENMP
  int n = omp_get_max_threads();
  return cap > 0 && cap < n ? cap : n;
#else
  (void)cap;
  return 1;
#endif
}

}  // namespace

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

void set_max_threads_from_env() {
  if (const char* env = std::getenv("TANNAKIT_THREADS")) {
    try {
      set_max_threads(std::stoi(env));
    } catch (const std::exception&) {
      set_max_threads(0);
    }
  }
}

int max_threads() { return team_size(); }

RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  const int threads = team_size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    const Scalar inv = m(r, c).inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    const bool parallel = threads > 1 && rows * support.size() >= kParallelWork;
    const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t ii = 0; ii < n_rows; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j : support) m(i, j).sub_mul(factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field f = a.field() == b.field() ? a.field() : (a.field().is_rational() ? b.field() : a.field());
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), f);
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  const bool parallel = out.rows() * out.cols() >= kParallelWork;
#pragma omp parallel for num_threads(team_size()) schedule(static) if (parallel)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          out(i * b.rows() + k, j * b.cols() + l) = (x * b(k, l)).in(f);
        }
      }
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const Field f = a.field() == b.field() ? a.field() : (a.field().is_rational() ? b.field() : a.field());
  Matrix out(a.rows(), b.cols(), f);
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  const bool parallel = a.rows() * a.cols() * b.cols() >= kParallelWork;
#pragma omp parallel for num_threads(team_size()) schedule(dynamic, 8) if (parallel)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

namespace reference {

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Scalar factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field f = a.field() == b.field() ? a.field() : (a.field().is_rational() ? b.field() : a.field());
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
        }
      }
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const Field f = a.field() == b.field() ? a.field() : (a.field().is_rational() ? b.field() : a.field());
  Matrix out(a.rows(), b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

}  // namespace reference

}  // namespace tannakit::exactlin
