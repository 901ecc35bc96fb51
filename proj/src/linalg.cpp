#include "drinfeld/linalg.hpp"

namespace drinfeld {

FqMatrix::FqMatrix(FqField const & F, std::size_t rows, std::size_t cols)
    : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, FqElem{0})
{
}

std::vector<std::size_t> FqMatrix::rref()
{
    FqField const & F = *F_;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && (*this)(piv, col).v == 0)
            ++piv;
        if (piv == rows_)
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(piv, j), (*this)(row, j));
        FqElem const inv = F.inv((*this)(row, col));
        for (std::size_t j = col; j < cols_; ++j)
            (*this)(row, j) = F.mul((*this)(row, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row)
                continue;
            FqElem const f = (*this)(i, col);
            if (f.v == 0)
                continue;
            for (std::size_t j = col; j < cols_; ++j)
                (*this)(i, j) = F.sub((*this)(i, j), F.mul(f, (*this)(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t FqMatrix::rank() const
{
    FqMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<FqElem>> FqMatrix::nullspace() const
{
    FqMatrix R = *this;
    auto const pivots = R.rref();
    std::vector<bool> isPivot(cols_, false);
    for (auto c : pivots)
        isPivot[c] = true;
    std::vector<std::vector<FqElem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (isPivot[free])
            continue;
        std::vector<FqElem> v(cols_, FqElem{0});
        v[free] = F_->one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F_->neg(R(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FqElem>> FqMatrix::solve(std::vector<FqElem> const & b) const
{
    FqMatrix aug(*F_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    auto const pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    std::vector<FqElem> x(cols_, FqElem{0});
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, cols_);
    return x;
}

} // namespace drinfeld
