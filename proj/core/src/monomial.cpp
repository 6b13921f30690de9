#include "qclrs/monomial.hpp"

#include <stdexcept>

namespace qclrs {

namespace {

void check_d(std::uint32_t q, std::uint32_t d) {
    if (d < 1 || d > q - 1)
        throw std::invalid_argument("degree bound d must be in [1, q-1]");
}

// coeffs of p(x) * c * x^e, folded mod x^q - x.
std::vector<felem> shift_scale(const FieldContext& ctx,
                               const std::vector<felem>& p,
                               felem c, std::uint32_t e) {
    std::vector<felem> out(ctx.q(), 0);
    for (std::uint32_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const std::uint32_t idx = mod_star(static_cast<std::uint64_t>(k) + e, ctx.q());
        out[idx] = ctx.add(out[idx], ctx.mul(p[k], c));
    }
    return out;
}

std::vector<felem> poly_mul_fold(const FieldContext& ctx,
                                 const std::vector<felem>& p,
                                 const std::vector<felem>& s) {
    std::vector<felem> out(ctx.q(), 0);
    for (std::uint32_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        for (std::uint32_t n = 0; n < s.size(); ++n) {
            if (s[n] == 0) continue;
            const std::uint32_t idx =
                mod_star(static_cast<std::uint64_t>(k) + n, ctx.q());
            out[idx] = ctx.add(out[idx], ctx.mul(p[k], s[n]));
        }
    }
    return out;
}

}  // namespace

std::uint32_t mod_star(std::uint64_t a, std::uint32_t q) {
    if (a <= q - 1) return static_cast<std::uint32_t>(a);
    const std::uint64_t m = a % (q - 1);
    return m == 0 ? q - 1 : static_cast<std::uint32_t>(m);
}

bool is_qc_good(Monomial m, std::uint32_t q, std::uint32_t d) {
    check_d(q, d);
    const std::uint32_t b = m.b;
    // Submasks descending for early exit; the criterion is a universal
    // quantifier over all (i, j) with i <=_2 b, j <=_2 b XOR i.
    for (std::uint32_t i = b;; i = (i - 1) & b) {
        const std::uint32_t rest = b ^ i;
        for (std::uint32_t j = rest;; j = (j - 1) & rest) {
            if (mod_star(2ull * i + j + m.a, q) >= d) return false;
            if (j == 0) break;
        }
        if (i == 0) break;
    }
    return true;
}

bool is_lrs_good(Monomial m, std::uint32_t q, std::uint32_t d) {
    check_d(q, d);
    if (m.b >= d) return false;  // vertical lines
    for (std::uint32_t i = m.b;; i = (i - 1) & m.b) {
        if (mod_star(static_cast<std::uint64_t>(m.a) + i, q) >= d) return false;
        if (i == 0) break;
    }
    return true;
}

std::vector<felem> restrict_to_curve(const FieldContext& ctx, Monomial m, Curve c) {
    const std::uint32_t q = ctx.q();
    // substitution polynomial alpha*x^2 + beta*x + gamma
    std::vector<felem> subst(q, 0);
    subst[0] = ctx.add(subst[0], c.gamma);
    subst[1] = ctx.add(subst[1], c.beta);
    const std::uint32_t sq = mod_star(2, q);
    subst[sq] = ctx.add(subst[sq], c.alpha);

    std::vector<felem> acc(q, 0);
    acc[0] = 1;
    for (std::uint32_t k = 0; k < m.b; ++k) acc = poly_mul_fold(ctx, acc, subst);
    return shift_scale(ctx, acc, 1, m.a);
}

std::vector<felem> restrict_to_line(const FieldContext& ctx, Monomial m, Line l) {
    const std::uint32_t q = ctx.q();
    if (l.vertical) {
        // x = gamma: the restriction is gamma^a * y^b, a polynomial in y.
        std::vector<felem> out(q, 0);
        out[m.b] = ctx.pow(l.gamma, m.a);
        return out;
    }
    std::vector<felem> subst(q, 0);
    subst[0] = ctx.add(subst[0], l.beta);
    subst[1] = ctx.add(subst[1], l.alpha);

    std::vector<felem> acc(q, 0);
    acc[0] = 1;
    for (std::uint32_t k = 0; k < m.b; ++k) acc = poly_mul_fold(ctx, acc, subst);
    return shift_scale(ctx, acc, 1, m.a);
}

int poly_degree(const std::vector<felem>& coeffs) {
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (coeffs[k] != 0) return static_cast<int>(k);
    return -1;
}

}  // namespace qclrs
