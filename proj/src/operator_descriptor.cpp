#include "aqc/operator_descriptor.hpp"

#include <stdexcept>

namespace aqc {

OperatorDescriptor OperatorDescriptor::make(
    int d, int k, int N, int m,
    const std::vector<std::pair<MultiIndex, RationalMatrix>>& terms) {
    if (d < 1 || N < 1 || m < 1 || k < 0)
        throw std::invalid_argument("operator: bad signature");
    OperatorDescriptor op(d, k, N, m);
    for (const auto& [alpha, matrix] : terms) {
        if (static_cast<int>(alpha.size()) != d)
            throw std::invalid_argument("operator: multi-index dimension mismatch");
        if (multiindex_order(alpha) != k)
            throw std::invalid_argument("operator: term order differs from k");
        if (matrix.rows != m || matrix.cols != N)
            throw std::invalid_argument("operator: coefficient matrix shape mismatch");
        if (matrix.is_zero()) continue;
        const std::uint64_t key = MultiPoly::pack(alpha);
        if (op.terms_.count(key)) throw std::invalid_argument("operator: duplicate multi-index");
        op.terms_.emplace(key, matrix);
    }
    if (op.terms_.empty()) throw std::invalid_argument("operator: all coefficient matrices are zero");
    return op;
}

OperatorDescriptor OperatorDescriptor::zero(int d, int k, int N, int m) {
    if (d < 1 || N < 1 || m < 1 || k < 0)
        throw std::invalid_argument("operator: bad signature");
    return OperatorDescriptor(d, k, N, m);
}

OperatorDescriptor OperatorDescriptor::from_symbol(const PolyMatrix& symbol, int k) {
    if (!symbol.is_homogeneous(k) && !symbol.is_zero())
        throw std::invalid_argument("operator: symbol not homogeneous of the stated order");
    OperatorDescriptor op(symbol.dim(), k, symbol.cols(), symbol.rows());
    for (int i = 0; i < symbol.rows(); ++i)
        for (int j = 0; j < symbol.cols(); ++j)
            for (const MultiPoly::Term& t : symbol.at(i, j).terms()) {
                auto [it, inserted] = op.terms_.try_emplace(t.key, RationalMatrix(op.m_, op.N_));
                it->second(i, j) = t.coeff;
                (void)inserted;
            }
    return op;
}

std::vector<std::pair<MultiIndex, RationalMatrix>> OperatorDescriptor::terms() const {
    std::vector<std::pair<MultiIndex, RationalMatrix>> out;
    out.reserve(terms_.size());
    for (const auto& [key, matrix] : terms_)
        out.emplace_back(MultiPoly::unpack(key, d_), matrix);
    return out;
}

RationalMatrix OperatorDescriptor::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(MultiPoly::pack(alpha));
    if (it == terms_.end()) return RationalMatrix(m_, N_);
    return it->second;
}

PolyMatrix OperatorDescriptor::symbol() const {
    PolyMatrix sym(m_, N_, d_);
    for (const auto& [key, matrix] : terms_) {
        const MultiIndex alpha = MultiPoly::unpack(key, d_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < N_; ++j)
                if (!is_zero(matrix(i, j))) sym.at(i, j).add_term(alpha, matrix(i, j));
    }
    return sym;
}

std::vector<MultiPoly> OperatorDescriptor::apply_to_polynomials(
    const std::vector<MultiPoly>& field) const {
    if (static_cast<int>(field.size()) != N_)
        throw std::invalid_argument("operator: field fiber dimension mismatch");
    std::vector<MultiPoly> out(m_, MultiPoly(d_));
    for (const auto& [key, matrix] : terms_) {
        const MultiIndex alpha = MultiPoly::unpack(key, d_);
        for (int j = 0; j < N_; ++j) {
            if (field[j].is_zero()) continue;
            const MultiPoly dfield = field[j].derivative(alpha);
            if (dfield.is_zero()) continue;
            for (int i = 0; i < m_; ++i)
                if (!is_zero(matrix(i, j))) out[i] += dfield.scaled(matrix(i, j));
        }
    }
    return out;
}

PolyMatrix symbol_of(const OperatorDescriptor& op) { return op.symbol(); }

}  // namespace aqc
