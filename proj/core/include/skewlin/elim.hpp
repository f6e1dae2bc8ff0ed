#pragma once

// Dense exact matrices and the elimination kernel.  Everything here is
// side-aware: over a noncommutative domain a^{-1}b != ba^{-1}, so each
// routine states which side its coefficients act on and sticks to it.

#include <optional>
#include <vector>

#include "skewlin/scalar.hpp"

namespace skewlin {

/// Which side scalars act on vectors: right spaces take x*lambda, left
/// spaces take lambda*x.  The dual of a right space is a left space.
enum class Chirality { right, left };

Chirality flip(Chirality c);

/// Row-major grid of scalars from one domain.  Knows its domain even when
/// 0 x 0 so degenerate spaces stay well formed.
class Mat {
   public:
    Mat(int rows, int cols, const Scalar& fill);
    static Mat zero(int rows, int cols, const ScalarDomain& d);
    static Mat identity(int n, const ScalarDomain& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ScalarDomain& domain() const { return dom_; }

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    std::vector<Scalar> row(int i) const;
    std::vector<Scalar> col(int j) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

   private:
    int rows_, cols_;
    ScalarDomain dom_;
    std::vector<Scalar> data_;
};

/// Entry products taken as a.at(i,k) * b.at(k,j); order matters.
Mat matmul(const Mat& a, const Mat& b);
Mat matadd(const Mat& a, const Mat& b);
Mat matsub(const Mat& a, const Mat& b);
Mat matneg(const Mat& a);

struct Echelon {
    std::vector<std::vector<Scalar>> basis;  // reduced echelon rows, zero rows dropped
    std::vector<int> pivots;                 // strictly increasing coordinate indices
};

/// Canonical reduced echelon basis of the span of `gens`, where the span is
/// { sum_i gens[i] * l_i } for side == right and { sum_i l_i * gens[i] } for
/// side == left.  The output is the unique reduced form: pivot entries are 1
/// and pivot coordinates vanish in every other basis vector, so two spans
/// are equal iff their echelons are identical.
Echelon rref_span(std::vector<std::vector<Scalar>> gens, int width, const ScalarDomain& d,
                  Chirality side);

/// Solutions x of A*x = 0 with entry-left products (sum_j A[i][j]*x[j]).
/// The solution set is closed under right combinations.
std::vector<std::vector<Scalar>> nullspace_col_action(const Mat& a);

/// Solutions x of x*A = 0 with entry-right products (sum_i x[i]*A[i][j]).
/// The solution set is closed under left combinations.
std::vector<std::vector<Scalar>> nullspace_row_action(const Mat& a);

/// One solution of A*x = b (entry-left products), free coordinates zero.
std::optional<std::vector<Scalar>> solve_col_action(const Mat& a, const std::vector<Scalar>& b);

/// One solution of x*A = b (entry-right products), free coordinates zero.
std::optional<std::vector<Scalar>> solve_row_action(const Mat& a, const std::vector<Scalar>& b);

/// Two-sided inverse in the matrix ring over the division ring, or nullopt
/// when the matrix is singular.
std::optional<Mat> inverse(const Mat& a);

/// Rank of the column span under right combinations (equals the rank of the
/// row span under left combinations).
int mat_rank(const Mat& a);

}  // namespace skewlin
