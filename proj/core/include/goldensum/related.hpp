#ifndef GOLDENSUM_RELATED_HPP
#define GOLDENSUM_RELATED_HPP

// Satellite limiting objects of the cot sums:
//   - the monotone csc^2 graph S_{[x q_n]}(y/q_n)/q_n^2 (positive kernel),
//   - the period-6 attractor of the sec sums (sec has period 2, and the
//     continued fraction of alpha/2 advances every third Fibonacci index,
//     so the renormalization returns after 6 levels),
//   - the log-kernel boundedness check |S_m(G)| / log m,
//   - the Hecke difference functions f_n(x) = S_{[x q_n]}(rot p_{n+1}/q_{n+1})
//     - S_{[x q_n]}(rot p_n/q_n) whose sawtooth variant obeys the exact
//     quadratic law |f| -> (1+alpha^2) pi/sqrt(5) * x^2 = pi*alpha*x^2,
//   - the modular check R(a) = theta(a)^2 for R = 1 + 2 sum sec(pi k a).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "goldensum/birkhoff.hpp"

namespace goldensum {

struct AttractorFamily {
    struct Branch {
        std::vector<unsigned> levels;       // same residue mod period
        std::vector<GraphSamples> graphs;   // one per level, ascending
        double contraction = 0.0;           // sup-dist of last two graphs
        double nearest_pole = 1.0;          // min distance of orbit to 1/2
    };
    std::map<unsigned, Branch> branches;    // residue -> branch
    unsigned period = 6;
    double separation = 0.0;                // min pairwise sup-dist, latest graphs

    std::string to_json() const;
};

// S_{[x q_level]}(y/q_level)/q_level^2 for the positive kernel csc^2(pi x);
// monotone nondecreasing in x. (The derivative kernel is -pi csc^2; the
// positive-summand convention keeps the graph increasing.)
GraphSamples csc2_graph(double y, unsigned level, std::size_t grid_points,
                        const PolePolicy& pp = {});

struct Csc2SelfSimilarity {
    double residual_alpha = 0.0;   // |s'(ax) - a   s'(x)| max
    double residual_alpha2 = 0.0;  // |s'(ax) - a^2 s'(x)| max
};
Csc2SelfSimilarity csc2_self_similarity(unsigned level, std::size_t grid_points);

// sec-sum graphs (1/q_n) sum_{k<=[x q_n]} sec(pi k alpha) over a level
// range, grouped by level mod 6.
AttractorFamily sec_attractor(unsigned level_lo, unsigned level_hi,
                              std::size_t grid_points, const PolePolicy& pp = {});

struct LogBoundReport {
    double max_ratio = 0.0;          // max over m of |S_m(G)|/log m
    double slope_per_decade = 0.0;   // linear fit of running max vs log10 m
    std::vector<double> checkpoints_m;
    std::vector<double> running_max;
};

LogBoundReport log_bound_check(double theta, std::uint64_t m_max,
                               const RotationSpec& rot = RotationSpec::golden(),
                               const PolePolicy& pp = {});

enum class HeckeKernel { Sawtooth, Log };

// Difference of the two convergent-rotation sums at level n. Sawtooth runs
// the 2*pi*(x-[x]-1/2) kernel (the quadratic-law normalization); Log runs
// the unscaled log(2-2cos(2 pi x)).
GraphSamples hecke_difference(std::size_t grid_points, unsigned level, HeckeKernel kernel,
                              const PolePolicy& pp = {});

struct QuadraticFit {
    double c = 0.0;   // least-squares f(x) ~ c x^2
    double r2 = 0.0;
};
QuadraticFit fit_quadratic(const GraphSamples& g);

struct ModularReading {
    std::string name;
    std::complex<double> value;
    double residual_vs_theta2 = 0.0;
    bool converged = true;
};

struct ModularReport {
    std::complex<double> theta;
    std::complex<double> theta_squared;
    std::vector<ModularReading> readings;
    double periodicity_residual = 0.0; // |R(alpha+2) - R(alpha)| for the sec reading
    const ModularReading* best() const;
};

// Compares theta(alpha)^2 against the candidate cot/sec sum forms.
ModularReport modular_check(std::complex<double> alpha, int K);

} // namespace goldensum

#endif
