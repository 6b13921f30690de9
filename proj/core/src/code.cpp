#include "qclrs/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qclrs/rng.hpp"

namespace qclrs {

std::string family_name(Family f) {
    return f == Family::QcLrs ? "qclrs" : "lrs";
}

namespace {

void check_spec(const CodeSpec& spec) {
    if (spec.ell < 1 || spec.ell > 16)
        throw std::invalid_argument("CodeSpec: ell must be in [1, 16]");
    if (spec.d < 1 || spec.d > spec.q() - 1)
        throw std::invalid_argument("CodeSpec: d must be in [1, q-1]");
}

bool good_for(const CodeSpec& spec, Monomial m) {
    return spec.family == Family::QcLrs ? is_qc_good(m, spec.q(), spec.d)
                                        : is_lrs_good(m, spec.q(), spec.d);
}

}  // namespace

CodeInstance::CodeInstance(CodeSpec spec) : spec_(spec), ctx_(spec.ell) {
    check_spec(spec_);
    const std::uint32_t q = spec_.q();
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            if (good_for(spec_, {a, b})) basis_.push_back({a, b});
    std::sort(basis_.begin(), basis_.end(), [](const Monomial& u, const Monomial& v) {
        if (u.a + u.b != v.a + v.b) return u.a + u.b < v.a + v.b;
        return u.a < v.a;
    });

    generator_.reserve(basis_.size());
    for (const Monomial& m : basis_) {
        std::vector<felem> row(q * q);
        for (std::uint32_t x = 0; x < q; ++x) {
            const felem xa = ctx_.pow(static_cast<felem>(x), m.a);
            for (std::uint32_t y = 0; y < q; ++y)
                row[x * q + y] = ctx_.mul(xa, ctx_.pow(static_cast<felem>(y), m.b));
        }
        generator_.push_back(std::move(row));
    }
}

const std::vector<felem>& CodeInstance::generator_row(std::uint32_t row) const {
    return generator_.at(row);
}

Codeword CodeInstance::encode(std::span<const felem> message) const {
    if (message.size() != basis_.size())
        throw std::invalid_argument("encode: message length must equal k");
    Codeword word(n(), 0);
    for (std::uint32_t row = 0; row < k(); ++row) {
        const felem c = message[row];
        if (c == 0) continue;
        const std::vector<felem>& g = generator_[row];
        for (std::uint32_t col = 0; col < word.size(); ++col)
            word[col] = ctx_.add(word[col], ctx_.mul(c, g[col]));
    }
    return word;
}

CodeInstance build_code(CodeSpec spec) { return CodeInstance(spec); }

std::vector<felem> lagrange_interpolate(const FieldContext& ctx,
                                        std::span<const felem> xs,
                                        std::span<const felem> ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n)
        throw std::invalid_argument("lagrange_interpolate: size mismatch");

    // master(x) = prod (x + x_m); characteristic 2, so subtraction is XOR
    std::vector<felem> master(n + 1, 0);
    master[0] = 1;
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = m + 1; k-- > 0;) {
            master[k + 1] = ctx.add(master[k + 1], master[k]);
            master[k] = ctx.mul(master[k], xs[m]);
        }
    }

    std::vector<felem> coeffs(n, 0);
    std::vector<felem> basis(n);
    for (std::size_t m = 0; m < n; ++m) {
        if (ys[m] == 0) continue;
        // basis = master / (x + x_m) by synthetic division
        felem carry = master[n];
        for (std::size_t k = n; k-- > 0;) {
            basis[k] = carry;
            carry = ctx.add(master[k], ctx.mul(carry, xs[m]));
        }
        felem denom = 1;
        for (std::size_t t = 0; t < n; ++t)
            if (t != m) denom = ctx.mul(denom, ctx.add(xs[m], xs[t]));
        const felem scale = ctx.mul(ys[m], ctx.inv(denom));
        for (std::size_t k = 0; k < n; ++k)
            coeffs[k] = ctx.add(coeffs[k], ctx.mul(scale, basis[k]));
    }
    return coeffs;
}

bool is_member(const CodeSpec& spec, const Codeword& word) {
    check_spec(spec);
    const std::uint32_t q = spec.q();
    if (word.size() != static_cast<std::size_t>(q) * q)
        throw std::invalid_argument("is_member: word length must be q^2");
    const FieldContext ctx(spec.ell);

    std::vector<felem> xs(q), ys(q);
    for (std::uint32_t x = 0; x < q; ++x) xs[x] = static_cast<felem>(x);

    auto restriction_ok = [&](auto&& y_of_x) {
        for (std::uint32_t x = 0; x < q; ++x)
            ys[x] = word[x * q + y_of_x(static_cast<felem>(x))];
        const std::vector<felem> coeffs = lagrange_interpolate(ctx, xs, ys);
        return poly_degree(coeffs) < static_cast<int>(spec.d);
    };

    if (spec.family == Family::QcLrs) {
        for (std::uint32_t al = 0; al < q; ++al)
            for (std::uint32_t be = 0; be < q; ++be)
                for (std::uint32_t ga = 0; ga < q; ++ga) {
                    const Curve c{static_cast<felem>(al), static_cast<felem>(be),
                                  static_cast<felem>(ga)};
                    if (!restriction_ok([&](felem x) {
                            return ctx.add(ctx.mul(c.alpha, ctx.mul(x, x)),
                                           ctx.add(ctx.mul(c.beta, x), c.gamma));
                        }))
                        return false;
                }
        return true;
    }

    for (std::uint32_t al = 0; al < q; ++al)
        for (std::uint32_t be = 0; be < q; ++be) {
            const felem alpha = static_cast<felem>(al), beta = static_cast<felem>(be);
            if (!restriction_ok([&](felem x) {
                    return ctx.add(ctx.mul(alpha, x), beta);
                }))
                return false;
        }
    // vertical lines: restriction is a polynomial in y
    for (std::uint32_t ga = 0; ga < q; ++ga) {
        for (std::uint32_t y = 0; y < q; ++y) ys[y] = word[ga * q + y];
        const std::vector<felem> coeffs = lagrange_interpolate(ctx, xs, ys);
        if (poly_degree(coeffs) >= static_cast<int>(spec.d)) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> verify_dimension(const CodeSpec& spec) {
    const CodeInstance inst = build_code(spec);
    const FieldContext& ctx = inst.ctx();
    const std::uint32_t k = inst.k();
    const std::uint32_t n = inst.n();

    std::vector<std::vector<felem>> rows;
    rows.reserve(k);
    for (std::uint32_t r = 0; r < k; ++r) rows.push_back(inst.generator_row(r));

    // Gaussian elimination over the field.
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < n && rank < k; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < k && rows[pivot][col] == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(rows[rank], rows[pivot]);
        const felem inv = ctx.inv(rows[rank][col]);
        for (std::uint32_t c = col; c < n; ++c)
            rows[rank][c] = ctx.mul(rows[rank][c], inv);
        for (std::uint32_t r = 0; r < k; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const felem f = rows[r][col];
            for (std::uint32_t c = col; c < n; ++c)
                rows[r][c] = ctx.add(rows[r][c], ctx.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    return {k, rank};
}

Codeword distance_witness(const CodeSpec& spec) {
    check_spec(spec);
    if (spec.family != Family::QcLrs)
        throw std::invalid_argument("distance_witness: QC-LRS family only");
    const std::uint32_t q = spec.q();
    const std::uint32_t r = spec.r();
    const FieldContext ctx(spec.ell);
    // f(x, y) = prod_{alpha in A} (x - alpha), |A| = q - r - 1
    Codeword word(q * q);
    for (std::uint32_t x = 0; x < q; ++x) {
        felem v = 1;
        for (std::uint32_t alpha = 0; alpha + r + 1 < q; ++alpha)
            v = ctx.mul(v, ctx.add(static_cast<felem>(x), static_cast<felem>(alpha)));
        for (std::uint32_t y = 0; y < q; ++y) word[x * q + y] = v;
    }
    return word;
}

std::uint64_t hamming_weight(const Codeword& word) {
    std::uint64_t w = 0;
    for (const felem v : word) w += v != 0;
    return w;
}

std::uint64_t sample_min_weight(const CodeInstance& inst, std::uint64_t trials,
                                std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sample_min_weight: trials >= 1");
    const std::uint32_t q = inst.spec().q();
    std::uint64_t best = inst.n() + 1;
    std::vector<felem> msg(inst.k());
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(seed, t);
        bool nonzero = false;
        for (felem& m : msg) {
            m = static_cast<felem>(rng.next_below(q));
            nonzero |= m != 0;
        }
        if (!nonzero) msg[rng.next_below(msg.size())] = 1;
        best = std::min(best, hamming_weight(inst.encode(msg)));
    }
    return best;
}

void write_matrix_csv(std::ostream& os, const CodeSpec& spec,
                      const std::vector<std::vector<felem>>& rows) {
    os << "family,ell,d\n"
       << family_name(spec.family) << ',' << spec.ell << ',' << spec.d << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << row[c];
        }
        os << '\n';
    }
}

std::pair<CodeSpec, std::vector<std::vector<felem>>> read_matrix_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "family,ell,d")
        throw std::runtime_error("read_matrix_csv: bad header");
    if (!std::getline(is, line))
        throw std::runtime_error("read_matrix_csv: missing spec row");
    CodeSpec spec;
    {
        std::stringstream ss(line);
        std::string fam, tok;
        std::getline(ss, fam, ',');
        if (fam == "qclrs") spec.family = Family::QcLrs;
        else if (fam == "lrs") spec.family = Family::Lrs;
        else throw std::runtime_error("read_matrix_csv: unknown family " + fam);
        std::getline(ss, tok, ',');
        spec.ell = static_cast<unsigned>(std::stoul(tok));
        std::getline(ss, tok, ',');
        spec.d = static_cast<std::uint32_t>(std::stoul(tok));
    }
    std::vector<std::vector<felem>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<felem> row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ','))
            row.push_back(static_cast<felem>(std::stoul(tok)));
        rows.push_back(std::move(row));
    }
    return {spec, std::move(rows)};
}

}  // namespace qclrs
