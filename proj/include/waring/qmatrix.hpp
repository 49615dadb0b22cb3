#ifndef WARING_QMATRIX_HPP
#define WARING_QMATRIX_HPP

// Small dense exact linear algebra over Q: rank, RREF, nullspace bases,
// linear solves, determinants.  Everything is exact rational arithmetic;
// matrix dimensions in this project stay tiny (at most a few dozen).

#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace waring {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Rat(0)) {
    if (rows < 0 || cols < 0) throw domain_error("QMatrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[idx(i, j)]; }
  const Rat& at(int i, int j) const { return data_[idx(i, j)]; }

  // in-place reduced row echelon form; returns the pivot column of each pivot row
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int p = -1;
      for (int i = row; i < rows_; ++i)
        if (at(i, col) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
      const Rat inv = at(row, col);
      for (int j = col; j < cols_; ++j) at(row, j) /= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || at(i, col) == 0) continue;
        const Rat factor = at(i, col);
        for (int j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    QMatrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // basis of the right nullspace (vectors of length cols)
  std::vector<std::vector<Rat>> nullspace() const {
    QMatrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      std::vector<Rat> v(static_cast<std::size_t>(cols_), Rat(0));
      v[static_cast<std::size_t>(free)] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Rat det() const {
    if (rows_ != cols_) throw domain_error("det: matrix not square");
    QMatrix m = *this;
    Rat d = 1;
    for (int col = 0; col < cols_; ++col) {
      int p = -1;
      for (int i = col; i < rows_; ++i)
        if (m.at(i, col) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Rat(0);
      if (p != col) {
        for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
        d = -d;
      }
      d *= m.at(col, col);
      const Rat inv = m.at(col, col);
      for (int i = col + 1; i < rows_; ++i) {
        if (m.at(i, col) == 0) continue;
        const Rat factor = m.at(i, col) / inv;
        for (int j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
      }
    }
    return d;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw domain_error("QMatrix: index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_, cols_;
  std::vector<Rat> data_;
};

// One solution of A x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(const QMatrix& a,
                                                    const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw domain_error("solve_linear: size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const auto pivots = aug.rref();
  for (int c : pivots)
    if (c == a.cols()) return std::nullopt;  // pivot in the constant column
  std::vector<Rat> x(static_cast<std::size_t>(a.cols()), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

// Unique solution of a square nonsingular system; throws otherwise.
inline std::vector<Rat> solve_unique(const QMatrix& a, const std::vector<Rat>& b) {
  if (a.rows() != a.cols()) throw domain_error("solve_unique: matrix not square");
  if (a.rank() != a.cols()) throw domain_error("solve_unique: singular matrix");
  auto x = solve_linear(a, b);
  if (!x) throw internal_error("solve_unique: inconsistent nonsingular system");
  return *x;
}

}  // namespace waring

#endif  // WARING_QMATRIX_HPP
