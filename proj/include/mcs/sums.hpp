#pragma once

#include <cstdint>
#include <vector>

#include "mcs/charcore.hpp"
#include "mcs/common.hpp"

namespace mcs {

// F_chi(alpha, beta; theta) = sum_{alpha p < n <= beta p} chi(n) e(n theta)
struct SumSpec {
    DirichletCharacter chi;
    double alpha;
    double beta;

    SumSpec(DirichletCharacter c, double a, double b);

    std::int64_t n_lo() const;  // smallest n in range
    std::int64_t n_hi() const;  // largest n in range
    std::int64_t degree_bound() const;  // N = ceil(beta p)
};

struct CoefficientVector {
    std::int64_t offset = 0;  // frequency of coeffs[0]
    std::vector<cd> coeffs;
    std::int64_t degree_bound = 0;  // >= largest frequency present
};

CoefficientVector coefficients(const SumSpec& s);

cd direct_sum(const SumSpec& s, double theta, Exec exec = Exec::parallel);

struct GridEvaluation {
    std::size_t M = 0;
    std::vector<cd> values;  // values[j] = F(t/p + j/M)
    std::int64_t degree_bound = 0;
};

enum class GridKernel { pow2, chirp };

// v_j = sum_n c_n e(n t / p) e(n j / M). With the pow2 kernel M must be a
// power of two; the chirp kernel accepts any M (used for exact length-p
// grids theta = (k+t)/p).
GridEvaluation grid_evaluate(const SumSpec& s, double t, std::size_t M,
                             GridKernel kernel = GridKernel::pow2);

// Same kernel on a raw coefficient vector, with per-index twist
// e(n * twist); shared by maxsearch and the random models.
std::vector<cd> grid_values(const CoefficientVector& c, double twist, std::size_t M,
                            GridKernel kernel = GridKernel::pow2);

// K-truncated main term of the incomplete-sum formula at theta = (k+t)/p.
cd truncated_approx(const SumSpec& s, std::int64_t k, double t, std::int64_t K);

// |F_{chi,k} - F~_{chi,k}| for every k in [0, p-1].
std::vector<double> residual_profile(const SumSpec& s, double t, std::int64_t K,
                                     Exec exec = Exec::parallel);

}  // namespace mcs
