// Prints φ1..φ4 next to their quadrature oracles across λ.

#include <fracbound/bounds.hpp>

#include <algorithm>
#include <cstdio>

int main() {
    namespace bd = fracbound::bounds;
    const double kappa = 1.5, alpha = 0.5, p = 2.0;
    std::printf("%6s %14s %14s %14s %14s %10s\n", "lambda", "phi1", "phi2", "phi3", "phi4", "max|err|");
    for (int i = 0; i <= 10; ++i) {
        const double lam = i / 10.0;
        const double v[4] = {bd::phi1(kappa, lam), bd::phi2(kappa, lam, alpha), bd::phi3(kappa, lam, alpha),
                             bd::phi4(kappa, lam, p)};
        const double o[4] = {bd::phi_oracle(1, kappa, lam), bd::phi_oracle(2, kappa, lam, alpha),
                             bd::phi_oracle(3, kappa, lam, alpha), bd::phi_oracle(4, kappa, lam, p)};
        double err = 0.0;
        for (int k = 0; k < 4; ++k) err = std::max(err, v[k] > o[k] ? v[k] - o[k] : o[k] - v[k]);
        std::printf("%6.2f %14.10f %14.10f %14.10f %14.10f %10.2e\n", lam, v[0], v[1], v[2], v[3], err);
    }
}
