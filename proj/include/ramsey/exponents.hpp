#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ramsey {

// x log x with the continuous limit 0 at x = 0.
double xlogx(double x);

// Parameter bundle for the first-moment exponent functions: graph-size
// ratio c, degree d, colour count r, and the normalized per-n densities
// a, b, s, t of the counted configurations.
struct ExponentSpec {
    double c = 0;
    double d = 0;
    int r = 2;
    double a = 0, b = 0, s = 0, t = 0;
};

// Range checks: c > 2 (two-colour regimes) or c > 2^r - 1 when multicolour
// is set, d >= 1, 0 <= a <= (c-2)/4, 0 <= t <= min((c-2)/2 - a - b, 2).
void validate_exponent_spec(const ExponentSpec& spec, bool multicolour = false);

// Closed-form evaluations at the spec's point.
double evaluate_one_hole(const ExponentSpec& spec);   // f_one_hole(a, c, d)
double evaluate_two_holes(const ExponentSpec& spec);  // f_two_holes_regular(a, t, c, d)

// log of the number of perfect matchings on i points, i!/((i/2)! 2^(i/2)).
// Requires i even and non-negative.
double log_perfect_matchings(long long i);

// Continuous extensions used to assemble exact expectation logs from
// log-Gamma; the real-valued arguments need not be integers.
double log_matchings_real(double x);
double log_binomial_real(double n, double k);

// Per-vertex exponent of the expected number of disjoint set pairs of size
// n(c-2)/4 with no crossing edge and a*d*n edges leaving the first set, in a
// random d-regular multigraph of order cn (pairing model). Defined for
// 0 <= a <= (c-2)/4.
double f_one_hole(double a, double c, double d);

// Stationary point a0 = c/2 - sqrt(2c^2+8)/4 of f_one_hole in a.
double one_hole_stationary_a(double c);

// Envelope g(c,d) = f(a0, c, d), the maximum of f_one_hole over a. If the
// stationary point ever fell outside [0, (c-2)/4] the nearest boundary is
// used and *clamped is set.
double g_one_hole(double c, double d, bool* clamped = nullptr);

// Density lower bound on the edge constant achievable through the
// empty-pair condition, via the complement's forbidden complete bipartite
// pair: f(c) = (c/2) (log(alpha)/log(1-alpha) - 1) with alpha = (c-2)/(4c).
double f_kst(double c);

// Exponent bound for the two-hole condition in the binomial model:
// c log c + (c-2) log(c-2) - 2 log 2 - 2(c-2) log((c-2)/2) - d(c-2)^2/8.
double f_binomial_two_holes(double c, double d);

// Per-vertex exponent of the expected number of two-hole quadruples in the
// d-regular pairing model, reduced to equal split sizes s=(c-2)/4 and equal
// inner edge densities a=b; t is the outward edge density.
double f_two_holes_regular(double a, double t, double c, double d);

// Root t0 of t^2 - (c-4a)t + (c-2-4a) = 0 picked by the minus branch; throws
// std::domain_error when the discriminant is negative.
double two_holes_stationary_t(double a, double c);

// Envelope over t: g(a) = f(a, t0).
double g_two_holes_regular(double a, double c, double d);

struct OptResult {
    std::vector<double> arg;
    double value = 0.0;
    double tolerance = 0.0;
    long iterations = 0;
};

// Golden-section minimum of a smooth univariate function on [lo, hi].
OptResult minimize_golden(const std::function<double(double)>& fn, double lo, double hi,
                          double tol = 1e-8);

// Minimum of f_kst over c > 2.
OptResult kst_minimum();

// Maximum of g_two_holes_regular over a in [0, (c-2)/4].
OptResult max_g_two_holes(double c, double d);

struct OneHoleOptimum {
    double c = 0.0;
    int d = 0;
    double edge_constant = 0.0; // c*d/2
};

// Smallest c*d/2 over integer d in [d_lo, d_hi] subject to g_one_hole <= 0,
// with c found by bisection for each d.
OneHoleOptimum optimal_one_hole_constants(int d_lo = 3, int d_hi = 60);

// Exact per-vertex log of the expected pair count at finite n (log-Gamma
// assembly of every binomial and matching factor); converges to f_one_hole
// at rate O(log n / n).
double exact_log_expected_pairs_one_hole(double a, double c, double d, double n);

// Exact log of the expected quadruple count at finite n for the two-hole
// condition, with free split size s and densities a, b, t.
double exact_log_expected_quads(double s, double a, double b, double t, double c, double d,
                                double n);

struct MaxLocation {
    double s = 0, a = 0, b = 0, t = 0;
    double value = 0;
    double step_s = 0, step_ab = 0, step_t = 0;
};

// Grid search of exact_log_expected_quads/n over (s, a, b, t); the maximiser
// is expected at s = (c-2)/4 and a = b. grid_intervals must be even so the
// midpoint s = (c-2)/4 lies on the grid.
MaxLocation verify_max_location(double c, double d, int grid_intervals = 12, double ref_n = 1e4);

struct MulticolourConstants {
    int r = 0;
    long long c = 0;             // 2^(r+1)
    long long d = 0;             // 8r
    long long cross_check = 0;   // d*c / 2^(r+2), equals 4r
    unsigned long long edge_constant = 0; // c^2 d = 32 r 4^r
    unsigned long long bound = 0;         // 33 r 4^r
};

MulticolourConstants multicolour_constants(int r);

// Binomial concentration bound 2 exp(-eps^2 mean / 3), valid for 0<eps<3/2.
double chernoff_bound(double mean, double eps);

// One reproduced constant with its check.
struct ConstantRow {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    enum class Check { below, abs_tol, exact_int } check = Check::abs_tol;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

// Every reproduced constant with pass/fail at its tolerance (scaled by
// tolerance_scale, < 1 tightens).
std::vector<ConstantRow> constants_table(double tolerance_scale = 1.0);

} // namespace ramsey
