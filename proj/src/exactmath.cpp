#include <cctype>
#include <sstream>

#include "simcore/bipoly.hpp"
#include "simcore/linsolve.hpp"
#include "simcore/qpoly.hpp"
#include "simcore/series.hpp"

namespace simcore {

namespace {

/* Shared term renderer: coefficient plus a pre-rendered monomial string. */
void append_term(std::string& out, const Rational& c, const std::string& mono) {
    Rational a = c;
    if (out.empty()) {
        if (a.sign() < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += (a.sign() < 0) ? " - " : " + ";
        if (a.sign() < 0) a = -a;
    }
    if (mono.empty()) {
        out += a.to_string();
    } else if (a == Rational(1)) {
        out += mono;
    } else {
        out += a.to_string() + "*" + mono;
    }
}

std::string power_text(const std::string& var, long long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::string product_text(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

}  // namespace

std::string QPolynomial::render_text(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) append_term(out, c, power_text(var, e));
    return out;
}

std::string QWPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_)
        append_term(out, c, product_text(power_text("q", k.first), power_text("w", k.second)));
    return out;
}

std::string BivariatePolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_)
        append_term(out, c, product_text(power_text("s", k.first), power_text("t", k.second)));
    return out;
}

std::string PowerSeries::to_text(const std::string& var) const {
    std::string out;
    for (int n = 0; n <= order(); ++n)
        if (!coeffs_[n].is_zero()) append_term(out, coeffs_[n], power_text(var, n));
    if (out.empty()) out = "0";
    std::ostringstream os;
    os << out << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
}

BivariatePolynomial BivariatePolynomial::parse(const std::string& text) {
    // Strip whitespace; fold "**" into "^".
    std::string src;
    src.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
    std::string norm;
    norm.reserve(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
        if (src[i] == '*' && i + 1 < src.size() && src[i + 1] == '*') {
            norm += '^';
            ++i;
        } else {
            norm += src[i];
        }
    }

    BivariatePolynomial out;
    size_t i = 0;
    const size_t n = norm.size();
    if (n == 0) throw std::invalid_argument("BivariatePolynomial: empty input");
    while (i < n) {
        int sign = 1;
        while (i < n && (norm[i] == '+' || norm[i] == '-')) {
            if (norm[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= n) throw std::invalid_argument("BivariatePolynomial: trailing sign");
        Integer num = 1, den = 1;
        bool saw_digits = false;
        auto read_uint = [&](Integer& dst) {
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(norm[i]))) ++i;
            if (i == start) throw std::invalid_argument("BivariatePolynomial: number expected");
            dst = Integer(norm.substr(start, i - start));
        };
        if (i < n && std::isdigit(static_cast<unsigned char>(norm[i]))) {
            read_uint(num);
            saw_digits = true;
            if (i < n && norm[i] == '/') {
                ++i;
                read_uint(den);
            }
        }
        long long sd = 0, td = 0;
        bool saw_var = false;
        while (i < n && (norm[i] == '*' || norm[i] == 's' || norm[i] == 't')) {
            if (norm[i] == '*') {
                ++i;
                continue;
            }
            char var = norm[i++];
            long long e = 1;
            if (i < n && norm[i] == '^') {
                ++i;
                Integer ei;
                read_uint(ei);
                e = ei.get_si();
            }
            (var == 's' ? sd : td) += e;
            saw_var = true;
        }
        if (!saw_digits && !saw_var)
            throw std::invalid_argument("BivariatePolynomial: malformed term near index " +
                                        std::to_string(i));
        out.add_term(sd, td, Rational(num, den) * Rational(sign));
    }
    return out;
}

LinearSolveResult solve_linear_exact(std::vector<std::vector<Rational>> rows,
                                     std::vector<Rational> rhs) {
    const std::size_t m = rows.size();
    if (rhs.size() != m) throw std::invalid_argument("solve_linear_exact: shape mismatch");
    const std::size_t ncols = m == 0 ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("solve_linear_exact: ragged matrix");
    if (m < ncols)
        throw std::domain_error("solve_linear_exact: underdetermined (fewer rows than columns)");

    std::vector<std::size_t> origin(m);
    for (std::size_t i = 0; i < m; ++i) origin[i] = i;

    auto bit_size = [](const Rational& x) {
        return mpz_sizeinbase(x.numerator().get_mpz_t(), 2) +
               mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
    };

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of_col(ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t best = m;  // row index of the smallest nonzero candidate
        std::size_t best_sz = 0;
        for (std::size_t r = pivot_row; r < m; ++r) {
            if (rows[r][col].is_zero()) continue;
            std::size_t sz = bit_size(rows[r][col]);
            if (best == m || sz < best_sz) {
                best = r;
                best_sz = sz;
            }
        }
        if (best == m)
            throw std::domain_error(
                "solve_linear_exact: underdetermined (rank-deficient column " +
                std::to_string(col) + ")");
        std::swap(rows[best], rows[pivot_row]);
        std::swap(rhs[best], rhs[pivot_row]);
        std::swap(origin[best], origin[pivot_row]);
        const Rational piv = rows[pivot_row][col];
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col] / piv;
            for (std::size_t c2 = col; c2 < ncols; ++c2)
                rows[r][c2] -= f * rows[pivot_row][c2];
            rhs[r] -= f * rhs[pivot_row];
        }
        pivot_of_col[col] = pivot_row;
        ++pivot_row;
    }

    LinearSolveResult out;
    out.solution.assign(ncols, Rational(0));
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t r = pivot_of_col[col];
        out.solution[col] = rhs[r] / rows[r][col];
    }
    // Rows beyond the pivot set were fully eliminated; a nonzero residual
    // there means the overdetermined system is inconsistent.
    for (std::size_t r = pivot_row; r < m; ++r) {
        if (!rhs[r].is_zero()) {
            out.status = LinearSolveResult::Status::Inconsistent;
            out.violated_row = origin[r];
            return out;
        }
    }
    return out;
}

}  // namespace simcore
