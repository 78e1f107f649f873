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

#pragma once

// Dense bit-packed linear algebra over the two-element field.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ainerve {

class Gf2Vector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t length) : length_(length) {
    words_.resize((length + kWordBits - 1) / kWordBits);
  }

  /// Parses a string of '0'/'1' characters, coefficient 0 first.
  static Gf2Vector from_string(std::string_view bits);
  static Gf2Vector unit(std::size_t length, std::size_t index);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool is_zero() const noexcept {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  std::size_t count() const noexcept;
  bool dot(const Gf2Vector& other) const;

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) { return lhs += rhs; }

  std::vector<std::size_t> support() const;

  template <typename F>
  void for_each_set_bit(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        f(w * kWordBits + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) noexcept {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }
  friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) noexcept;

 private:
  std::size_t length_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

struct Gf2VectorHash {
  std::size_t operator()(const Gf2Vector& v) const noexcept { return v.hash(); }
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return Gf2Matrix(rows, cols); }
  /// Rows given as '0'/'1' strings of equal length.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);
  /// Builds the matrix whose j-th column is `columns[j]`.
  static Gf2Matrix from_columns(std::size_t rows, const std::vector<Gf2Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_.at(r).set(c, value); }
  const Gf2Vector& row(std::size_t r) const { return data_.at(r); }
  Gf2Vector column(std::size_t c) const;
  void set_row(std::size_t r, Gf2Vector row);

  Gf2Vector operator*(const Gf2Vector& x) const;
  Gf2Matrix operator*(const Gf2Matrix& other) const;
  Gf2Matrix transpose() const;

  std::size_t rank() const;
  bool is_zero() const noexcept;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> data_;
};

Gf2Vector add(const Gf2Vector& v, const Gf2Vector& w);

struct AffineSolution {
  Gf2Vector particular;
  std::vector<Gf2Vector> kernel_basis;
};

/// Factors A once so that many right-hand sides can be solved cheaply.
/// Elimination pivots on the leftmost column with a nonzero entry, taking the
/// lowest-index available row.
class AffineSolver {
 public:
  explicit AffineSolver(const Gf2Matrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivot_cols_.size(); }

  bool consistent(const Gf2Vector& b) const;
  std::optional<Gf2Vector> particular(const Gf2Vector& b) const;
  const std::vector<Gf2Vector>& kernel_basis() const noexcept { return kernel_; }
  /// Basis of the column space, taken from the pivot columns of A.
  const std::vector<Gf2Vector>& image_basis() const noexcept { return image_; }

 private:
  Gf2Vector transform(const Gf2Vector& b) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> reduced_;    // reduced row echelon form of A
  std::vector<Gf2Vector> transform_;  // T with T*A = reduced_
  std::vector<std::size_t> pivot_cols_;
  std::vector<Gf2Vector> kernel_;
  std::vector<Gf2Vector> image_;
};

std::optional<AffineSolution> solve_affine(const Gf2Matrix& a, const Gf2Vector& b);

/// Calls f on every vector of particular + span(basis); 2^|basis| calls.
void for_each_in_coset(const Gf2Vector& particular, std::span<const Gf2Vector> basis,
                       const std::function<void(const Gf2Vector&)>& f);

/// Incrementally maintained echelon basis, used to test independence.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t length) : length_(length) {}

  /// Adds v if it is independent of the stored vectors; returns whether it was.
  bool insert(const Gf2Vector& v);
  bool contains(const Gf2Vector& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  Gf2Vector reduce(Gf2Vector v) const;

  std::size_t length_;
  std::vector<Gf2Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace ainerve
