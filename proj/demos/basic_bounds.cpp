// Evaluates both theorems and the identity at one point for e^x.

#include <fracbound/fracbound.hpp>

#include <iostream>

int main() {
    namespace fb = fracbound;
    const auto& fn = fb::amconvex::find("exp").fn;

    fb::identity::Params p;
    p.a = 0.0;
    p.b = 1.0;
    p.m = 1.0;
    p.x = 0.3;
    p.lambda = 0.8;
    p.kappa = 0.5;
    p.alpha = 1.0;
    p.q = 2.0;

    const auto chk = fb::identity::identity_residual(p, fn);
    std::cout << "I_f = " << chk.lhs << " (kernel form " << chk.rhs << ", residual " << chk.residual << ")\n";

    for (const auto& rep : {fb::bounds::bound_thm211(p, fn), fb::bounds::bound_thm22(p, fn)})
        std::cout << rep.which << ": |I_f| = " << rep.lhs << " <= " << rep.rhs << "  tightness " << rep.tightness
                  << (rep.holds ? "" : "  VIOLATED") << '\n';
}
