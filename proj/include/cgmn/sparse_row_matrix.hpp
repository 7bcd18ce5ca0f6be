#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cgmn {

/// Row-accessible sparse matrix with cached squared row norms.
///
/// Rows are stored CSR-style. Entries are real; complex right-hand sides are
/// handled by the sweep templates. The squared row norms ||a_i||_2^2 are
/// computed once at finalization -- every row projection reads the cache.
class SparseRowMatrix {
public:
    struct Entry {
        int col;
        double value;
    };

    explicit SparseRowMatrix(int dimension)
        : dim_(dimension), row_ptr_(static_cast<std::size_t>(dimension) + 1, 0) {
        if (dimension <= 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    int dimension() const { return dim_; }

    /// Append an entry to the row currently under construction. Rows must be
    /// pushed in non-decreasing order; columns within a row may come in any
    /// order.
    void push_entry(int row, int col, double value) {
        if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
            throw std::out_of_range("entry index outside matrix");
        if (row < open_row_)
            throw std::logic_error("rows must be filled in ascending order");
        while (open_row_ < row) row_ptr_[static_cast<std::size_t>(++open_row_)] = entries_.size();
        entries_.push_back({col, value});
    }

    /// Compute and cache row norms; rejects empty (all-zero) rows.
    void finalize() {
        while (open_row_ < dim_) row_ptr_[static_cast<std::size_t>(++open_row_)] = entries_.size();
        row_norms_sq_.assign(static_cast<std::size_t>(dim_), 0.0);
        for (int i = 0; i < dim_; ++i) {
            double acc = 0.0;
            for (const Entry& e : row(i)) acc += e.value * e.value;
            if (acc <= 0.0) throw std::invalid_argument("matrix has an all-zero row");
            row_norms_sq_[static_cast<std::size_t>(i)] = acc;
        }
        finalized_ = true;
    }

    bool finalized() const { return finalized_; }

    std::span<const Entry> row(int i) const {
        const std::size_t b = row_ptr_[static_cast<std::size_t>(i)];
        const std::size_t e = row_ptr_[static_cast<std::size_t>(i) + 1];
        return {entries_.data() + b, e - b};
    }

    double row_norm_sq(int i) const { return row_norms_sq_[static_cast<std::size_t>(i)]; }

    const std::vector<double>& row_norms_sq() const { return row_norms_sq_; }

    std::size_t nonzeros() const { return entries_.size(); }

    /// y = A x (generic over the vector scalar; matrix entries are real).
    template <typename Scalar>
    void multiply(const std::vector<Scalar>& x, std::vector<Scalar>& y) const {
        y.assign(static_cast<std::size_t>(dim_), Scalar{});
        for (int i = 0; i < dim_; ++i) {
            Scalar acc{};
            for (const Entry& e : row(i)) acc += x[static_cast<std::size_t>(e.col)] * e.value;
            y[static_cast<std::size_t>(i)] = acc;
        }
    }

    template <typename Scalar>
    std::vector<Scalar> multiply(const std::vector<Scalar>& x) const {
        std::vector<Scalar> y;
        multiply(x, y);
        return y;
    }

private:
    int dim_;
    int open_row_ = 0;
    bool finalized_ = false;
    std::vector<Entry> entries_;
    std::vector<std::size_t> row_ptr_;
    std::vector<double> row_norms_sq_;
};

}  // namespace cgmn
