#include "aqc/charpoly.hpp"

#include <stdexcept>

namespace aqc {

namespace {

MultiPoly trace_of_product(const PolyMatrix& a, const PolyMatrix& b) {
    // tr(a b) without forming the product matrix
    MultiPoly acc(a.dim());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const MultiPoly& x = a.at(i, k);
            const MultiPoly& y = b.at(k, i);
            if (x.is_zero() || y.is_zero()) continue;
            acc += x * y;
        }
    return acc;
}

PolyMatrix add_scalar_diag(PolyMatrix m, const MultiPoly& c) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) += c;
    return m;
}

struct FaddeevResult {
    CharPolyData char_data;
    // ms[k] = M_{k+1} = sum_{i<=k} a_i B^{k-i}; only filled up to index n-1
    std::vector<PolyMatrix> ms;
};

// M_1 = Id, a_k = -tr(B M_k)/k, M_{k+1} = B M_k + a_k Id. The last step
// only needs the trace, so B M_n is never formed.
FaddeevResult faddeev_leverrier(const PolyMatrix& b) {
    if (b.rows() != b.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const int n = b.rows();
    const int dim = b.dim();

    FaddeevResult out;
    out.char_data.coefficients.push_back(MultiPoly::constant(dim, Rational(1)));

    PolyMatrix mk = PolyMatrix::identity(n, dim);
    for (int k = 1; k <= n; ++k) {
        out.ms.push_back(mk);
        MultiPoly ak = trace_of_product(b, mk).scaled(Rational(-1, k));
        out.char_data.coefficients.push_back(ak);
        if (k < n) mk = add_scalar_diag(b * mk, ak);
    }
    for (int j = n; j >= 0; --j)
        if (!out.char_data.coefficients[j].is_zero()) {
            out.char_data.r = j;
            break;
        }
    return out;
}

}  // namespace

MultiPoly CharPolyData::positive_a_r() const {
    const MultiPoly& ar = coefficients.at(r);
    return (r % 2 == 0) ? ar : -ar;
}

CharPolyData char_poly(const PolyMatrix& b) { return faddeev_leverrier(b).char_data; }

bool penrose_identities_hold(const PolyMatrix& m, const ScaledPseudoInverse& pinv,
                             std::span<const Rational> point) {
    const RationalMatrix mv = m.eval(point);
    const Rational sv = pinv.denominator.eval(point);
    if (is_zero(sv)) throw std::invalid_argument("penrose check: denominator vanishes at point");
    RationalMatrix xv = pinv.numerator.eval(point);
    for (Rational& q : xv.data) q /= sv;

    const RationalMatrix mx = mv * xv;
    const RationalMatrix xm = xv * mv;
    return (mx * mv - mv).is_zero() && (xm * xv - xv).is_zero() &&
           (mx.transpose() - mx).is_zero() && (xm.transpose() - xm).is_zero();
}

ScaledPseudoInverse decell_pinv(const PolyMatrix& m, std::uint64_t validation_seed) {
    const int dim = m.dim();
    const FaddeevResult fl = faddeev_leverrier(m * m.transpose());
    const int r = fl.char_data.r;

    if (r == 0) {
        // M M* nilpotent means M = 0 over the reals: pseudo-inverse is 0.
        return ScaledPseudoInverse(PolyMatrix::zero(m.cols(), m.rows(), dim),
                                   MultiPoly::constant(dim, Rational(1)), fl.char_data);
    }

    // M^dagger = -a_r^{-1} M* [a_0 B^{r-1} + ... + a_{r-1} Id]; the bracket
    // is the Faddeev-LeVerrier matrix M_r. Store the denominator as
    // (-1)^r a_r so it is positive wherever rank M[xi] = r, and fold the
    // compensating sign into the numerator.
    MultiPoly denom = fl.char_data.positive_a_r();
    PolyMatrix numer = m.transpose() * fl.ms.at(r - 1);
    if (r % 2 == 0) numer = -numer;

    ScaledPseudoInverse pinv(std::move(numer), std::move(denom), fl.char_data);

    // Convention safety net: validate the Penrose identities at one random
    // rational point with s != 0 and flip the global sign if they fail.
    Rng rng(validation_seed);
    std::vector<Rational> point;
    do {
        point = rng.lattice_point(dim);
    } while (is_zero(pinv.denominator.eval(point)));
    if (!penrose_identities_hold(m, pinv, point)) {
        pinv.numerator = -pinv.numerator;
        if (!penrose_identities_hold(m, pinv, point))
            throw std::logic_error("decell_pinv: Penrose identities fail under both signs");
    }
    return pinv;
}

}  // namespace aqc
