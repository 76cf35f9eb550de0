#include "aqc/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace aqc {

int multiindex_order(const MultiIndex& alpha) {
    int total = 0;
    for (int e : alpha) {
        if (e < 0) throw std::invalid_argument("multi-index: negative exponent");
        total += e;
    }
    return total;
}

std::uint64_t MultiPoly::pack(const MultiIndex& alpha) {
    const int d = static_cast<int>(alpha.size());
    if (d > kMaxDim) throw std::invalid_argument("multi-index: dimension > 7");
    int total = 0;
    std::uint64_t key = 0;
    for (int i = 0; i < d; ++i) {
        if (alpha[i] < 0 || alpha[i] > kMaxExponent)
            throw std::invalid_argument("multi-index: exponent out of range");
        total += alpha[i];
        key |= static_cast<std::uint64_t>(alpha[i]) << (8 * (kMaxDim - 1 - i));
    }
    if (total > kMaxExponent) throw std::invalid_argument("multi-index: total degree out of range");
    key |= static_cast<std::uint64_t>(total) << 56;
    return key;
}

MultiIndex MultiPoly::unpack(std::uint64_t key, int dim) {
    MultiIndex alpha(dim);
    for (int i = 0; i < dim; ++i)
        alpha[i] = static_cast<int>((key >> (8 * (kMaxDim - 1 - i))) & 0xff);
    return alpha;
}

MultiPoly::MultiPoly(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("polynomial: bad dimension");
}

MultiPoly MultiPoly::constant(int dim, Rational value) {
    MultiPoly p(dim);
    if (!aqc::is_zero(value)) p.terms_.push_back({0, std::move(value)});
    return p;
}

MultiPoly MultiPoly::variable(int dim, int axis) {
    if (axis < 0 || axis >= dim) throw std::invalid_argument("polynomial: bad axis");
    MultiIndex alpha(dim, 0);
    alpha[axis] = 1;
    return monomial(alpha, Rational(1));
}

MultiPoly MultiPoly::monomial(const MultiIndex& alpha, Rational coeff) {
    MultiPoly p(static_cast<int>(alpha.size()));
    if (!aqc::is_zero(coeff)) p.terms_.push_back({pack(alpha), std::move(coeff)});
    return p;
}

void MultiPoly::add_term(const MultiIndex& alpha, const Rational& coeff) {
    if (static_cast<int>(alpha.size()) != dim_)
        throw std::invalid_argument("polynomial: dimension mismatch");
    if (aqc::is_zero(coeff)) return;
    const std::uint64_t key = pack(alpha);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) {
        it->coeff += coeff;
        if (aqc::is_zero(it->coeff)) terms_.erase(it);
    } else {
        terms_.insert(it, {key, coeff});
    }
}

Rational MultiPoly::coeff_of(const MultiIndex& alpha) const {
    const std::uint64_t key = pack(alpha);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) return it->coeff;
    return Rational(0);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(dim_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.key, -t.coeff});
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
    MultiPoly out(dim_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (a->key < b->key) {
            out.terms_.push_back(*a++);
        } else if (b->key < a->key) {
            out.terms_.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (!aqc::is_zero(c)) out.terms_.push_back({a->key, std::move(c)});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, other.terms_.end());
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + (-other); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    *this = *this + other;
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    *this = *this - other;
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
    MultiPoly out(dim_);
    if (terms_.empty() || other.terms_.empty()) return out;
    // Packed keys add componentwise as long as no per-axis exponent
    // overflows 255; pack() bounds inputs and the guard below catches the
    // product side.
    const int dprod = degree() + other.degree();
    if (dprod > kMaxExponent) throw std::overflow_error("polynomial: product degree too large");
    std::map<std::uint64_t, Rational> acc;
    for (const Term& a : terms_)
        for (const Term& b : other.terms_) {
            Rational p = a.coeff * b.coeff;
            auto [it, inserted] = acc.try_emplace(a.key + b.key, p);
            if (!inserted) it->second += p;
        }
    out.terms_.reserve(acc.size());
    for (auto& [key, coeff] : acc)
        if (!aqc::is_zero(coeff)) out.terms_.push_back({key, std::move(coeff)});
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    if (dim_ != other.dim_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].key != other.terms_[i].key || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
    MultiPoly out(dim_);
    if (aqc::is_zero(factor)) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.key, t.coeff * factor});
    return out;
}

MultiPoly MultiPoly::derivative(int axis) const {
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("polynomial: bad axis");
    MultiPoly out(dim_);
    out.terms_.reserve(terms_.size());
    const int shift = 8 * (kMaxDim - 1 - axis);
    for (const Term& t : terms_) {
        const int e = static_cast<int>((t.key >> shift) & 0xff);
        if (e == 0) continue;
        // drop one from the axis exponent and from the grade byte
        const std::uint64_t key = t.key - (std::uint64_t(1) << shift) - (std::uint64_t(1) << 56);
        out.terms_.push_back({key, t.coeff * e});
    }
    return out;
}

MultiPoly MultiPoly::derivative(const MultiIndex& beta) const {
    MultiPoly out = *this;
    for (int axis = 0; axis < static_cast<int>(beta.size()); ++axis)
        for (int rep = 0; rep < beta[axis]; ++rep) out = out.derivative(axis);
    return out;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.back().key >> 56);
}

bool MultiPoly::is_homogeneous(int q) const {
    for (const Term& t : terms_)
        if (static_cast<int>(t.key >> 56) != q) return false;
    return true;
}

int MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    const int q = degree();
    if (!is_homogeneous(q)) throw std::logic_error("polynomial: not homogeneous");
    return q;
}

namespace {

template <typename Scalar>
Scalar eval_impl(const std::vector<MultiPoly::Term>& terms, int dim, std::span<const Scalar> point,
                 int max_degree) {
    // power tables per axis
    std::vector<std::vector<Scalar>> pow_table(dim);
    for (int i = 0; i < dim; ++i) {
        pow_table[i].resize(max_degree + 1);
        pow_table[i][0] = Scalar(1);
        for (int e = 1; e <= max_degree; ++e) pow_table[i][e] = pow_table[i][e - 1] * point[i];
    }
    Scalar acc(0);
    for (const auto& t : terms) {
        Scalar m;
        if constexpr (std::is_same_v<Scalar, Rational>)
            m = t.coeff;
        else
            m = Scalar(t.coeff.get_d());
        for (int i = 0; i < dim; ++i) {
            const int e = static_cast<int>((t.key >> (8 * (MultiPoly::kMaxDim - 1 - i))) & 0xff);
            if (e) m *= pow_table[i][e];
        }
        acc += m;
    }
    return acc;
}

}  // namespace

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("polynomial: evaluation point dimension mismatch");
    if (terms_.empty()) return Rational(0);
    return eval_impl<Rational>(terms_, dim_, point, degree());
}

double MultiPoly::eval(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("polynomial: evaluation point dimension mismatch");
    if (terms_.empty()) return 0.0;
    return eval_impl<double>(terms_, dim_, point, degree());
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(t.coeff);
        const MultiIndex alpha = unpack(t.key, dim_);
        for (int i = 0; i < dim_; ++i) {
            if (alpha[i] == 0) continue;
            os << "*x" << (i + 1);
            if (alpha[i] > 1) os << "^" << alpha[i];
        }
    }
    return os.str();
}

void MultiPoly::prune_zeros() {
    std::erase_if(terms_, [](const Term& t) { return aqc::is_zero(t.coeff); });
}

}  // namespace aqc
