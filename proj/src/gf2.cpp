// Copyright 2026 The ainerve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ainerve/gf2.hpp"

#include <algorithm>

#include "ainerve/error.hpp"

namespace ainerve {

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      fail(Errc::invalid_input, "bit string may only contain 0 and 1");
    }
  }
  return v;
}

Gf2Vector Gf2Vector::unit(std::size_t length, std::size_t index) {
  Gf2Vector v(length);
  v.set(index);
  return v;
}

bool Gf2Vector::get(std::size_t i) const {
  if (i >= length_) fail(Errc::invalid_argument, "Gf2Vector index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Gf2Vector::set(std::size_t i, bool value) {
  if (i >= length_) fail(Errc::invalid_argument, "Gf2Vector index out of range");
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void Gf2Vector::flip(std::size_t i) {
  if (i >= length_) fail(Errc::invalid_argument, "Gf2Vector index out of range");
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::size_t Gf2Vector::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.length_ != length_) fail(Errc::invalid_argument, "Gf2Vector length mismatch in dot");
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  if (other.length_ != length_) fail(Errc::invalid_argument, "Gf2Vector length mismatch in addition");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for_each_set_bit([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Gf2Vector::to_string() const {
  std::string s(length_, '0');
  for_each_set_bit([&](std::size_t i) { s[i] = '1'; });
  return s;
}

std::size_t Gf2Vector::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(length_);
  for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool operator<(const Gf2Vector& a, const Gf2Vector& b) noexcept {
  if (a.length_ != b.length_) return a.length_ < b.length_;
  return std::lexicographical_compare(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

Gf2Vector add(const Gf2Vector& v, const Gf2Vector& w) { return v + w; }

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::invalid_argument, "ragged matrix rows");
    m.data_[r] = Gf2Vector::from_string(rows[r]);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::size_t rows, const std::vector<Gf2Vector>& columns) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(Errc::invalid_argument, "column length mismatch");
    columns[c].for_each_set_bit([&](std::size_t r) { m.data_[r].set(c); });
  }
  return m;
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
  Gf2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].get(c)) v.set(r);
  }
  return v;
}

void Gf2Matrix::set_row(std::size_t r, Gf2Vector row) {
  if (row.size() != cols_) fail(Errc::invalid_argument, "row length mismatch");
  data_.at(r) = std::move(row);
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector& x) const {
  if (x.size() != cols_) fail(Errc::invalid_argument, "matrix-vector dimension mismatch");
  Gf2Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].dot(x)) y.set(r);
  }
  return y;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& other) const {
  if (other.rows_ != cols_) fail(Errc::invalid_argument, "matrix product dimension mismatch");
  Gf2Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Gf2Vector acc(other.cols_);
    data_[r].for_each_set_bit([&](std::size_t k) { acc += other.data_[k]; });
    out.data_[r] = std::move(acc);
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    data_[r].for_each_set_bit([&](std::size_t c) { t.data_[c].set(r); });
  }
  return t;
}

std::size_t Gf2Matrix::rank() const { return AffineSolver(*this).rank(); }

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Gf2Vector& r) { return r.is_zero(); });
}

// ---------------------------------------------------------------------------

AffineSolver::AffineSolver(const Gf2Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
  reduced_.reserve(rows_);
  transform_.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    reduced_.push_back(a.row(r));
    transform_.push_back(Gf2Vector::unit(rows_, r));
  }

  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
    std::size_t pivot = next;
    while (pivot < rows_ && !reduced_[pivot].get(c)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(reduced_[pivot], reduced_[next]);
    std::swap(transform_[pivot], transform_[next]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != next && reduced_[r].get(c)) {
        reduced_[r] += reduced_[next];
        transform_[r] += transform_[next];
      }
    }
    pivot_cols_.push_back(c);
    ++next;
  }

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_cols_) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) {
      image_.push_back(a.column(c));
      continue;
    }
    Gf2Vector k(cols_);
    k.set(c);
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
      if (reduced_[r].get(c)) k.set(pivot_cols_[r]);
    }
    kernel_.push_back(std::move(k));
  }
}

Gf2Vector AffineSolver::transform(const Gf2Vector& b) const {
  if (b.size() != rows_) fail(Errc::invalid_argument, "right-hand side length does not match matrix rows");
  Gf2Vector tb(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (transform_[r].dot(b)) tb.set(r);
  }
  return tb;
}

bool AffineSolver::consistent(const Gf2Vector& b) const {
  const Gf2Vector tb = transform(b);
  for (std::size_t r = rank(); r < rows_; ++r) {
    if (tb.get(r)) return false;
  }
  return true;
}

std::optional<Gf2Vector> AffineSolver::particular(const Gf2Vector& b) const {
  const Gf2Vector tb = transform(b);
  for (std::size_t r = rank(); r < rows_; ++r) {
    if (tb.get(r)) return std::nullopt;
  }
  Gf2Vector x(cols_);
  for (std::size_t r = 0; r < rank(); ++r) {
    if (tb.get(r)) x.set(pivot_cols_[r]);
  }
  return x;
}

std::optional<AffineSolution> solve_affine(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows()) fail(Errc::invalid_argument, "solve_affine: A.rows != b.length");
  AffineSolver solver(a);
  auto x = solver.particular(b);
  if (!x) return std::nullopt;
  return AffineSolution{std::move(*x), solver.kernel_basis()};
}

void for_each_in_coset(const Gf2Vector& particular, std::span<const Gf2Vector> basis,
                       const std::function<void(const Gf2Vector&)>& f) {
  if (basis.size() >= 63) fail(Errc::cap_exceeded, "coset too large to enumerate");
  Gf2Vector current = particular;
  f(current);
  // Gray code order: each step flips one basis vector.
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    current += basis[static_cast<std::size_t>(std::countr_zero(step))];
    f(current);
  }
}

// ---------------------------------------------------------------------------

Gf2Vector Gf2Echelon::reduce(Gf2Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v += rows_[i];
  }
  return v;
}

bool Gf2Echelon::insert(const Gf2Vector& v) {
  if (v.size() != length_) fail(Errc::invalid_argument, "echelon vector length mismatch");
  Gf2Vector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t pivot = r.support().front();
  // keep stored rows fully reduced with respect to the new pivot
  for (auto& row : rows_) {
    if (row.get(pivot)) row += r;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool Gf2Echelon::contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

}  // namespace ainerve
