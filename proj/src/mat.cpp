#include "hexinv/mat.hpp"

#include <cstdint>
#include <stdexcept>

namespace hexinv {

Mat Mat::from_ints(GfPtr field, std::size_t rows, std::size_t cols,
                   const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
  Mat m(field, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = field->from_int(entries[i]);
  return m;
}

Mat Mat::identity(GfPtr field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::mul(const Mat& other) const {
  if (!f_->same(*other.f_)) throw std::invalid_argument("field mismatch");
  if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch");
  Mat out(f_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      fe v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.set(i, j, f_->add(out.at(i, j), f_->mul(v, other.at(k, j))));
    }
  return out;
}

std::vector<fe> Mat::apply(const std::vector<fe>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
  std::vector<fe> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    fe acc = 0;
    const fe* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (r[j] != 0 && v[j] != 0) acc = f_->add(acc, f_->mul(r[j], v[j]));
    out[i] = acc;
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

namespace detail {

Rref rref_generic(const Mat& m) {
  const Gf& f = *m.field();
  Mat w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t pr = r;
    while (pr < w.rows() && w.at(pr, c) == 0) ++pr;
    if (pr == w.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < w.cols(); ++j) {
        fe tmp = w.at(r, j);
        w.set(r, j, w.at(pr, j));
        w.set(pr, j, tmp);
      }
    fe s = f.inv(w.at(r, c));
    if (s != 1)
      for (std::size_t j = c; j < w.cols(); ++j) w.set(r, j, f.mul(s, w.at(r, j)));
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == r) continue;
      fe v = w.at(i, c);
      if (v == 0) continue;
      for (std::size_t j = c; j < w.cols(); ++j)
        w.set(i, j, f.sub(w.at(i, j), f.mul(v, w.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(w), std::move(pivots)};
}

namespace {

// Rows of a characteristic-2 matrix as k bit planes: plane j, bit c holds
// coefficient j of entry c.  A scalar s acts plane-wise through the k x k
// GF(2) matrix of multiplication by s, kept as per-output-plane masks.
struct Bitsliced {
  std::size_t rows, cols, k, words;
  std::vector<std::uint64_t> data;  // rows * k planes, each `words` long

  std::uint64_t* plane(std::size_t r, std::size_t j) {
    return data.data() + (r * k + j) * words;
  }
  const std::uint64_t* plane(std::size_t r, std::size_t j) const {
    return data.data() + (r * k + j) * words;
  }
};

}  // namespace

Rref rref_bitsliced(const Mat& m) {
  const Gf& f = *m.field();
  if (f.p() != 2) throw std::logic_error("bitsliced elimination needs characteristic 2");
  const std::size_t k = std::size_t(f.k());
  const std::size_t q = std::size_t(f.q());

  Bitsliced b;
  b.rows = m.rows();
  b.cols = m.cols();
  b.k = k;
  b.words = (m.cols() + 63) / 64;
  b.data.assign(b.rows * k * b.words, 0);
  for (std::size_t r = 0; r < b.rows; ++r) {
    const fe* src = m.row(r);
    for (std::size_t c = 0; c < b.cols; ++c) {
      fe v = src[c];
      if (v == 0) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (v & (fe(1) << j)) b.plane(r, j)[c >> 6] |= std::uint64_t(1) << (c & 63);
    }
  }

  // mulmask[s][j]: which input planes feed output plane j under scaling by s.
  std::vector<std::uint32_t> mulmask(q * k, 0);
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t mcol = 0; mcol < k; ++mcol) {
      fe prod = f.mul(fe(s), fe(fe(1) << mcol));  // s * t^mcol
      for (std::size_t j = 0; j < k; ++j)
        if (prod & (fe(1) << j)) mulmask[s * k + j] |= std::uint32_t(1) << mcol;
    }

  auto entry = [&](std::size_t r, std::size_t c) {
    fe v = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (b.plane(r, j)[c >> 6] >> (c & 63) & 1) v |= fe(1) << j;
    return v;
  };
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t* a = b.plane(r1, j);
      std::uint64_t* c = b.plane(r2, j);
      for (std::size_t w = 0; w < b.words; ++w) std::swap(a[w], c[w]);
    }
  };
  std::vector<std::uint64_t> tmp(k * b.words);
  // row r *= s
  auto scale_row = [&](std::size_t r, fe s) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t* out = tmp.data() + j * b.words;
      std::fill(out, out + b.words, 0);
      std::uint32_t mask = mulmask[std::size_t(s) * k + j];
      for (std::size_t mcol = 0; mcol < k; ++mcol)
        if (mask & (std::uint32_t(1) << mcol)) {
          const std::uint64_t* src = b.plane(r, mcol);
          for (std::size_t w = 0; w < b.words; ++w) out[w] ^= src[w];
        }
    }
    std::copy(tmp.begin(), tmp.end(), b.data.begin() + r * k * b.words);
  };
  // row r += s * row piv
  auto axpy_row = [&](std::size_t r, fe s, std::size_t piv) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t* out = b.plane(r, j);
      std::uint32_t mask = mulmask[std::size_t(s) * k + j];
      for (std::size_t mcol = 0; mcol < k; ++mcol)
        if (mask & (std::uint32_t(1) << mcol)) {
          const std::uint64_t* src = b.plane(piv, mcol);
          for (std::size_t w = 0; w < b.words; ++w) out[w] ^= src[w];
        }
    }
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < b.cols && r < b.rows; ++c) {
    std::size_t pr = r;
    while (pr < b.rows && entry(pr, c) == 0) ++pr;
    if (pr == b.rows) continue;
    if (pr != r) swap_rows(r, pr);
    fe v = entry(r, c);
    if (v != 1) scale_row(r, f.inv(v));
    for (std::size_t i = 0; i < b.rows; ++i) {
      if (i == r) continue;
      fe w = entry(i, c);
      if (w != 0) axpy_row(i, w, r);  // char 2: subtracting is adding
    }
    pivots.push_back(c);
    ++r;
  }

  Mat out(m.field(), m.rows(), m.cols());
  for (std::size_t rr = 0; rr < b.rows; ++rr)
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t* pl = b.plane(rr, j);
      for (std::size_t w = 0; w < b.words; ++w) {
        std::uint64_t bits = pl[w];
        while (bits) {
          std::size_t c = (w << 6) + std::size_t(__builtin_ctzll(bits));
          out.set(rr, c, out.at(rr, c) | (fe(1) << j));
          bits &= bits - 1;
        }
      }
    }
  return Rref{std::move(out), std::move(pivots)};
}

}  // namespace detail

Rref rref(const Mat& m) {
  if (m.field()->p() == 2) return detail::rref_bitsliced(m);
  return detail::rref_generic(m);
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat row_space(const Mat& m) {
  Rref r = rref(m);
  Mat out(m.field(), r.rank(), m.cols());
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, r.m.at(i, j));
  return out;
}

Mat nullspace(const Mat& m) {
  Rref r = rref(m);
  const Gf& f = *m.field();
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Mat basis(m.field(), free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    basis.set(i, fc, 1);
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
      basis.set(i, r.pivots[pi], f.neg(r.m.at(pi, fc)));
  }
  return basis;
}

std::optional<std::vector<fe>> solve(const Mat& m, const std::vector<fe>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("shape mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), rhs[i]);
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  std::vector<fe> x(m.cols(), 0);
  for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
    x[r.pivots[pi]] = r.m.at(pi, m.cols());
  return x;
}

}  // namespace hexinv
