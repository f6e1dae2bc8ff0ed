#include "skewlin/elim.hpp"

#include <algorithm>
#include <utility>

namespace skewlin {

Chirality flip(Chirality c) { return c == Chirality::right ? Chirality::left : Chirality::right; }

Mat::Mat(int rows, int cols, const Scalar& fill)
    : rows_(rows), cols_(cols), dom_(fill.domain()),
      data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Mat Mat::zero(int rows, int cols, const ScalarDomain& d) {
    return Mat(rows, cols, Scalar::zero(d));
}

Mat Mat::identity(int n, const ScalarDomain& d) {
    Mat m = zero(n, n, d);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(d);
    return m;
}

std::vector<Scalar> Mat::row(int i) const {
    std::vector<Scalar> out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

std::vector<Scalar> Mat::col(int j) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && dom_ == o.dom_ && data_ == o.data_;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows() || a.domain() != b.domain())
        throw space_mismatch("matmul shape mismatch");
    Mat out = Mat::zero(a.rows(), b.cols(), a.domain());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return out;
}

Mat matadd(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.domain() != b.domain())
        throw space_mismatch("matadd shape mismatch");
    Mat out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Mat matsub(const Mat& a, const Mat& b) { return matadd(a, matneg(b)); }

Mat matneg(const Mat& a) {
    Mat out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = -a.at(i, j);
    return out;
}

Echelon rref_span(std::vector<std::vector<Scalar>> gens, int width, const ScalarDomain& d,
                  Chirality side) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != width) throw space_mismatch("generator width mismatch");
    (void)d;
    Echelon e;
    std::size_t r = 0;
    for (int col = 0; col < width && r < gens.size(); ++col) {
        std::size_t piv = gens.size();
        for (std::size_t i = r; i < gens.size(); ++i)
            if (!gens[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == gens.size()) continue;
        std::swap(gens[r], gens[piv]);
        // scale on the acting side so the pivot becomes 1
        Scalar inv = gens[r][col].inverse();
        for (int k = 0; k < width; ++k)
            gens[r][k] = side == Chirality::right ? gens[r][k] * inv : inv * gens[r][k];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == r || gens[i][col].is_zero()) continue;
            Scalar alpha = gens[i][col];
            for (int k = 0; k < width; ++k)
                gens[i][k] = gens[i][k] - (side == Chirality::right ? gens[r][k] * alpha
                                                                    : alpha * gens[r][k]);
        }
        e.pivots.push_back(col);
        ++r;
    }
    gens.resize(r);
    e.basis = std::move(gens);
    return e;
}

namespace {

// Row reduction with left-acting coefficients; pivot search limited to the
// first `limit` columns (the rest ride along, e.g. an augmented column).
// Returns pivot column indices.
std::vector<int> row_reduce_left(Mat& m, int limit) {
    std::vector<int> pivcols;
    int r = 0;
    for (int col = 0; col < limit && r < m.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        Scalar inv = m.at(r, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Scalar alpha = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - alpha * m.at(r, j);
        }
        pivcols.push_back(col);
        ++r;
    }
    return pivcols;
}

// Column reduction with right-acting coefficients; pivot search limited to
// the first `limit` rows.  Returns pivot row indices.
std::vector<int> col_reduce_right(Mat& m, int limit) {
    std::vector<int> pivrows;
    int c = 0;
    for (int row = 0; row < limit && c < m.cols(); ++row) {
        int piv = -1;
        for (int j = c; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        if (piv != c)
            for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, c), m.at(i, piv));
        Scalar inv = m.at(row, c).inverse();
        for (int i = 0; i < m.rows(); ++i) m.at(i, c) = m.at(i, c) * inv;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == c || m.at(row, j).is_zero()) continue;
            Scalar alpha = m.at(row, j);
            for (int i = 0; i < m.rows(); ++i) m.at(i, j) = m.at(i, j) - m.at(i, c) * alpha;
        }
        pivrows.push_back(row);
        ++c;
    }
    return pivrows;
}

bool contains_index(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace_col_action(const Mat& a) {
    Mat m = a;
    std::vector<int> pivcols = row_reduce_left(m, m.cols());
    std::vector<std::vector<Scalar>> out;
    Scalar z = Scalar::zero(a.domain());
    for (int f = 0; f < a.cols(); ++f) {
        if (contains_index(pivcols, f)) continue;
        std::vector<Scalar> x(static_cast<std::size_t>(a.cols()), z);
        x[f] = Scalar::one(a.domain());
        for (std::size_t idx = 0; idx < pivcols.size(); ++idx)
            x[pivcols[idx]] = -m.at(static_cast<int>(idx), f);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<std::vector<Scalar>> nullspace_row_action(const Mat& a) {
    Mat m = a;
    std::vector<int> pivrows = col_reduce_right(m, m.rows());
    std::vector<std::vector<Scalar>> out;
    Scalar z = Scalar::zero(a.domain());
    for (int f = 0; f < a.rows(); ++f) {
        if (contains_index(pivrows, f)) continue;
        std::vector<Scalar> x(static_cast<std::size_t>(a.rows()), z);
        x[f] = Scalar::one(a.domain());
        for (std::size_t idx = 0; idx < pivrows.size(); ++idx)
            x[pivrows[idx]] = -m.at(f, static_cast<int>(idx));
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve_col_action(const Mat& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw space_mismatch("rhs length mismatch");
    Mat m = Mat::zero(a.rows(), a.cols() + 1, a.domain());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        m.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivcols = row_reduce_left(m, a.cols());
    for (int i = static_cast<int>(pivcols.size()); i < a.rows(); ++i)
        if (!m.at(i, a.cols()).is_zero()) return std::nullopt;
    std::vector<Scalar> x(static_cast<std::size_t>(a.cols()), Scalar::zero(a.domain()));
    for (std::size_t idx = 0; idx < pivcols.size(); ++idx)
        x[pivcols[idx]] = m.at(static_cast<int>(idx), a.cols());
    return x;
}

std::optional<std::vector<Scalar>> solve_row_action(const Mat& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.cols()) throw space_mismatch("rhs length mismatch");
    Mat m = Mat::zero(a.rows() + 1, a.cols(), a.domain());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < a.cols(); ++j) m.at(a.rows(), j) = b[j];
    std::vector<int> pivrows = col_reduce_right(m, a.rows());
    for (int j = static_cast<int>(pivrows.size()); j < a.cols(); ++j)
        if (!m.at(a.rows(), j).is_zero()) return std::nullopt;
    std::vector<Scalar> x(static_cast<std::size_t>(a.rows()), Scalar::zero(a.domain()));
    for (std::size_t idx = 0; idx < pivrows.size(); ++idx)
        x[pivrows[idx]] = m.at(a.rows(), static_cast<int>(idx));
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw space_mismatch("inverse of a nonsquare matrix");
    int n = a.rows();
    Mat m = Mat::zero(n, 2 * n, a.domain());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n + i) = Scalar::one(a.domain());
    }
    std::vector<int> pivcols = row_reduce_left(m, n);
    if (static_cast<int>(pivcols.size()) < n) return std::nullopt;
    Mat inv = Mat::zero(n, n, a.domain());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = m.at(i, n + j);
    return inv;
}

int mat_rank(const Mat& a) {
    Mat m = a;
    return static_cast<int>(row_reduce_left(m, m.cols()).size());
}

}  // namespace skewlin
