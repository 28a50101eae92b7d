#include "jkres/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace jkres {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void kahan_add(double x, double& sum, double& comp) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
}

} // namespace

TruncatedSum lattice_sum(const Arrangement& arr, const RationalFunction& f,
                         const std::vector<Rational>& t,
                         const std::vector<std::complex<double>>& z, long radius) {
    validate_function(arr, f);
    const int r = arr.rank();
    if (static_cast<int>(t.size()) != r)
        throw validation_error("t", "point length differs from rank");
    if (static_cast<int>(z.size()) != r)
        throw validation_error("z", "point length differs from rank");
    if (radius < 1) throw validation_error("radius", "radius must be positive");

    if (f.numerator.is_zero()) return {{0.0, 0.0}, radius, 0.0};

    const bool z_zero =
        std::all_of(z.begin(), z.end(), [](std::complex<double> c) { return c == 0.0; });

    std::complex<double> const_exp{1.0, 0.0};
    {
        std::complex<double> tz{};
        for (int c = 0; c < r; ++c) tz += to_complex(t[c]) * z[c];
        const_exp = std::exp(tz);
    }

    double sum_re = 0, comp_re = 0, sum_im = 0, comp_im = 0;
    double shell_abs = 0;

    std::vector<long> n(r, -radius);
    std::vector<std::complex<double>> w(r);
    for (;;) {
        bool skip = false;
        if (z_zero) {
            for (const auto& [i, m] : f.denominator) {
                long d = 0;
                for (int c = 0; c < r; ++c) d += arr.form(i).coords[c] * n[c];
                if (d == 0) {
                    skip = true;
                    break;
                }
            }
        }
        if (!skip) {
            for (int c = 0; c < r; ++c)
                w[c] = z[c] + std::complex<double>(0.0, kTwoPi * static_cast<double>(n[c]));
            std::complex<double> val = f.numerator.eval(w);
            bool singular = false;
            for (const auto& [i, m] : f.denominator) {
                std::complex<double> d{};
                for (int c = 0; c < r; ++c) d += w[c] * static_cast<double>(arr.form(i).coords[c]);
                if (d == 0.0) {
                    singular = true;
                    break;
                }
                for (int p = 0; p < m; ++p) val /= d;
            }
            if (!singular) {
                // Exact phase: 2*pi*<t,n> reduced mod 1 before rounding.
                double frac = dot(t, n).fractional_part().to_double();
                double angle = kTwoPi * frac;
                std::complex<double> term =
                    const_exp * std::complex<double>(std::cos(angle), std::sin(angle)) * val;
                kahan_add(term.real(), sum_re, comp_re);
                kahan_add(term.imag(), sum_im, comp_im);
                long linf = 0;
                for (long x : n) linf = std::max(linf, std::abs(x));
                if (linf == radius) shell_abs += std::abs(term);
            }
        }
        int j = r - 1;
        while (j >= 0 && n[j] == radius) {
            n[j] = -radius;
            --j;
        }
        if (j < 0) break;
        ++n[j];
    }

    // Shells beyond the cutoff decay at least like a p-series with
    // exponent p - r + 1, p = total multiplicity minus numerator
    // degree; bound their sum by a conservative multiple of the
    // outermost computed shell.
    long p = f.denominator_degree() - std::max(0, f.numerator.total_degree());
    double tail;
    if (p <= r)
        tail = std::numeric_limits<double>::infinity();
    else
        tail = 4.0 * shell_abs * static_cast<double>(radius) / static_cast<double>(p - r);
    return {{sum_re, sum_im}, radius, tail};
}

} // namespace jkres
