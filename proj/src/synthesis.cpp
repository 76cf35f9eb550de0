#include "aqc/synthesis.hpp"

#include <sstream>

namespace aqc {

namespace {

struct SynthesisStep {
    OperatorDescriptor op;
    PolyMatrix symbol;
    ScaledPseudoInverse pinv;  // of the INPUT symbol
    Rational content;          // positive factor divided out of the raw symbol
};

// Shared construction:  s(xi) Id - P(xi) M(xi)  =  s [Id - M^dagger M],
// content-normalized. Input must have constant rank; r = 0 (zero symbol)
// is rejected.
SynthesisStep build_kernel_projector_operator(const OperatorDescriptor& input, int samples,
                                              std::uint64_t seed, const char* label) {
    const PolyMatrix sym = input.symbol();
    const RankProfile profile = rank_profile(sym, samples, seed);
    if (!profile.constant_rank) {
        std::ostringstream os;
        os << label << ": symbol does not have constant rank (observed ranks:";
        for (int r : profile.observed_ranks) os << ' ' << r;
        os << ")";
        throw NonConstantRankError(os.str());
    }

    ScaledPseudoInverse pinv = decell_pinv(sym, seed ^ 0x9e3779b97f4a7c15ull);
    const int r = pinv.char_data.r;
    if (r == 0) throw ZeroOperatorError(std::string(label) + ": zero symbol (r = 0)");

    PolyMatrix raw = PolyMatrix::identity(input.N(), input.d()).scaled(pinv.denominator) -
                     pinv.numerator * sym;
    const int order = 2 * input.k() * r;
    if (!raw.is_homogeneous(order))
        throw std::logic_error(std::string(label) + ": synthesized symbol has unexpected degree");

    Rational content = raw.content();
    OperatorDescriptor op = OperatorDescriptor::from_symbol(raw.content_normalized(), order);
    if (is_zero(content)) content = 1;
    return SynthesisStep{std::move(op), std::move(sym), std::move(pinv), std::move(content)};
}

}  // namespace

OperatorDescriptor potential_operator(const OperatorDescriptor& a, int samples,
                                      std::uint64_t seed) {
    return build_kernel_projector_operator(a, samples, seed, "potential_operator").op;
}

OperatorDescriptor annihilator_operator(const OperatorDescriptor& l, int samples,
                                        std::uint64_t seed) {
    return build_kernel_projector_operator(l, samples, seed, "annihilator_operator").op;
}

PotentialTriple synthesize_triple(const OperatorDescriptor& a, int samples, std::uint64_t seed) {
    PotentialTriple t{
        .A = a,
        .L = OperatorDescriptor::zero(a.d(), 0, a.N(), a.N()),
        .G = OperatorDescriptor::zero(a.d(), 0, a.N(), a.N()),
        .symbol_a = a.symbol(),
        .symbol_l = PolyMatrix::zero(a.N(), a.N(), a.d()),
        .symbol_g = PolyMatrix::zero(a.N(), a.N(), a.d()),
        .k = a.k(),
    };

    SynthesisStep step_a = build_kernel_projector_operator(a, samples, seed, "potential_operator");
    t.char_a = step_a.pinv.char_data;
    t.pinv_a = std::move(step_a.pinv);
    t.L = std::move(step_a.op);
    t.symbol_l = t.L.symbol();
    t.content_l = step_a.content;
    t.l = 2 * a.k() * t.char_a.r;

    if (t.L.is_zero()) {
        // injective symbol: trivial kernel, nothing to annihilate
        t.g_symmetric = true;
        return t;
    }

    SynthesisStep step_l =
        build_kernel_projector_operator(t.L, samples, seed + 1, "annihilator_operator");
    t.char_l = step_l.pinv.char_data;
    t.pinv_l = std::move(step_l.pinv);
    t.G = std::move(step_l.op);
    t.symbol_g = t.G.symbol();
    t.content_g = step_l.content;
    t.degree_g = 2 * t.l * t.char_l.r;
    t.g_symmetric = t.symbol_g == t.symbol_g.transpose();
    return t;
}

void ensure_pseudo_inverses(PotentialTriple& triple) {
    if (!triple.pinv_a) triple.pinv_a = decell_pinv(triple.symbol_a);
    if (!triple.pinv_l && !triple.L.is_zero()) triple.pinv_l = decell_pinv(triple.symbol_l);
}

ExactnessReport verify_exactness(const PotentialTriple& triple, int samples, std::uint64_t seed) {
    ExactnessReport report;
    report.samples = samples;
    report.al_zero = (triple.symbol_a * triple.symbol_l).is_zero();
    report.lg_zero = triple.G.is_zero() || (triple.symbol_l * triple.symbol_g).is_zero();
    report.g_symmetric = triple.symbol_g == triple.symbol_g.transpose();

    report.degrees_ok = triple.l == 2 * triple.k * triple.char_a.r &&
                        (triple.G.is_zero() || triple.degree_g == 2 * triple.l * triple.char_l.r);

    report.ranks_ok = true;
    Rng rng(seed);
    const int n_fiber = triple.A.N();
    for (int s = 0; s < samples && report.ranks_ok; ++s) {
        const std::vector<Rational> point = rng.lattice_point(triple.A.d());
        const int rank_a = exact_rank(triple.symbol_a.eval(point));
        const int rank_l = exact_rank(triple.symbol_l.eval(point));
        const int rank_g = exact_rank(triple.symbol_g.eval(point));
        if (rank_a + rank_l != n_fiber || rank_l + rank_g != n_fiber) {
            report.ranks_ok = false;
            std::ostringstream os;
            os << "xi = (";
            for (std::size_t i = 0; i < point.size(); ++i)
                os << (i ? "," : "") << format_rational(point[i]);
            os << "): rank A = " << rank_a << ", rank L = " << rank_l << ", rank G = " << rank_g;
            report.witness = os.str();
        }
    }
    return report;
}

ExpansionReport expand_g_in_a(const PotentialTriple& triple) {
    if (!triple.pinv_a) throw std::logic_error("expand_g_in_a: pseudo-inverses not computed");
    ExpansionReport report;

    const PolyMatrix& l_sym = triple.symbol_l;
    const PolyMatrix& g_sym = triple.symbol_g;
    const int n = l_sym.rows();
    const int dim = l_sym.dim();

    if (triple.G.is_zero()) {
        // full-rank L: Id - L^dagger L vanishes, both sides of the expansion
        // are the zero matrix
        if (!triple.pinv_l) throw std::logic_error("expand_g_in_a: pseudo-inverses not computed");
        const PolyMatrix lhs = triple.pinv_l->numerator * l_sym;
        const PolyMatrix rhs =
            PolyMatrix::identity(n, dim).scaled(triple.pinv_l->denominator);
        report.both_sides_zero = lhs == rhs;
        report.identity_holds = report.both_sides_zero;
        report.intermediate_holds = report.both_sides_zero;
        if (!report.identity_holds) report.mismatch = "L^dagger L != Id for zero G";
        return report;
    }

    const MultiPoly& s_a = triple.pinv_a->denominator;
    const PolyMatrix& p_a = triple.pinv_a->numerator;
    // s_a Id - P_A A = s_a [Id - A^dagger A], polynomial form of the projector
    const PolyMatrix proj_scaled =
        PolyMatrix::identity(n, dim).scaled(s_a) - p_a * triple.symbol_a;

    // L = mu [Id - A^dagger A] with mu = tr L / rank of the projector
    const int rho = triple.char_l.r;
    MultiPoly mu(dim);
    for (int i = 0; i < n; ++i) mu += l_sym.at(i, i);
    mu = mu.scaled(Rational(1, rho));
    const MultiPoly mu2 = mu * mu;

    // intermediate identity: s_a (L L*) == mu^2 (s_a Id - P_A A)
    report.intermediate_holds =
        (l_sym * l_sym.transpose()).scaled(s_a) == proj_scaled.scaled(mu2);

    // G = sigma^l Id + (-1)^rho [sum_{j<rho} a^l_j mu^{2(rho-j)}] [Id - A^dagger A]
    MultiPoly weight(dim);
    MultiPoly mu2_power = mu2;  // mu^{2(rho-j)} built from j = rho-1 downward
    for (int j = rho - 1; j >= 0; --j) {
        weight += triple.char_l.a(j) * mu2_power;
        if (j > 0) mu2_power = mu2_power * mu2;
    }
    if (rho % 2 != 0) weight = -weight;

    const MultiPoly sigma_l = triple.char_l.positive_a_r();
    const PolyMatrix rhs =
        PolyMatrix::identity(n, dim).scaled(sigma_l * s_a) + proj_scaled.scaled(weight);
    const PolyMatrix lhs = g_sym.scaled(triple.content_g).scaled(s_a);

    report.identity_holds = lhs == rhs;
    if (!report.identity_holds) {
        for (int i = 0; i < n && report.mismatch.empty(); ++i)
            for (int j = 0; j < n; ++j)
                if (!(lhs.at(i, j) == rhs.at(i, j))) {
                    std::ostringstream os;
                    os << "entry (" << i << "," << j << ")";
                    report.mismatch = os.str();
                    break;
                }
    }
    return report;
}

Rational multiindex_binomial(const MultiIndex& gamma, const MultiIndex& beta) {
    Rational out(1);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), gamma[i], beta[i]);
        out *= Rational(b);
    }
    return out;
}

namespace {

void enumerate_sub_indices(const MultiIndex& gamma, MultiIndex& beta, std::size_t axis,
                           const std::function<void(const MultiIndex&)>& visit) {
    if (axis == gamma.size()) {
        visit(beta);
        return;
    }
    for (int e = 0; e <= gamma[axis]; ++e) {
        beta[axis] = e;
        enumerate_sub_indices(gamma, beta, axis + 1, visit);
    }
}

}  // namespace

LeibnizTable leibniz_table(const OperatorDescriptor& l_op) {
    LeibnizTable table;
    table.d = l_op.d();
    table.l = l_op.k();
    table.rows = l_op.m();
    table.cols = l_op.N();
    for (const auto& [gamma, coeff] : l_op.terms()) {
        MultiIndex beta(gamma.size(), 0);
        enumerate_sub_indices(gamma, beta, 0, [&](const MultiIndex& b) {
            MultiIndex alpha(gamma.size());
            for (std::size_t i = 0; i < gamma.size(); ++i) alpha[i] = gamma[i] - b[i];
            const Rational factor = multiindex_binomial(gamma, b);
            auto key = std::make_pair(MultiPoly::pack(alpha), MultiPoly::pack(b));
            auto [it, inserted] = table.entries.try_emplace(key, RationalMatrix(table.rows, table.cols));
            (void)inserted;
            for (int r = 0; r < table.rows; ++r)
                for (int c = 0; c < table.cols; ++c) it->second(r, c) += factor * coeff(r, c);
        });
    }
    return table;
}

const RationalMatrix* LeibnizTable::find(const MultiIndex& alpha, const MultiIndex& beta) const {
    auto it = entries.find({MultiPoly::pack(alpha), MultiPoly::pack(beta)});
    return it == entries.end() ? nullptr : &it->second;
}

std::vector<MultiPoly> LeibnizTable::apply_to_product(const std::vector<MultiPoly>& phi,
                                                      const MultiPoly& chi) const {
    if (static_cast<int>(phi.size()) != cols)
        throw std::invalid_argument("leibniz: field fiber dimension mismatch");
    std::vector<MultiPoly> out(rows, MultiPoly(d));
    for (const auto& [key, matrix] : entries) {
        const MultiIndex alpha = MultiPoly::unpack(key.first, d);
        const MultiIndex beta = MultiPoly::unpack(key.second, d);
        const MultiPoly dchi = chi.derivative(beta);
        if (dchi.is_zero()) continue;
        for (int c = 0; c < cols; ++c) {
            if (phi[c].is_zero()) continue;
            const MultiPoly dphi = phi[c].derivative(alpha);
            if (dphi.is_zero()) continue;
            const MultiPoly product = dphi * dchi;
            for (int r = 0; r < rows; ++r)
                if (!is_zero(matrix(r, c))) out[r] += product.scaled(matrix(r, c));
        }
    }
    return out;
}

}  // namespace aqc
