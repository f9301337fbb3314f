#include "buchiff/bounds.hpp"

#include "buchiff/errors.hpp"

namespace buchiff {

Int bound_M(long n, long g) {
    if (n < 2) throw DomainError("bound requires n >= 2");
    if (g < 0) throw DomainError("genus must be >= 0");
    Int N(n), G(g);
    return 2 * N * (N + 1) * (G + N * binomial(3 * n - 1, n));
}

Int bound_lemma_linear(long g) {
    if (g < 0) throw DomainError("genus must be >= 0");
    return Int(4) + Int(4) * Int(g);
}

Int bound_disc_zeros(long v, long d) {
    if (v < 2) throw DomainError("bound requires degree >= 2");
    if (d < 0) throw DomainError("height must be >= 0");
    return binomial(3 * v - 1, v) * Int(2 * v - 2) * Int(d);
}

Int bound_E(long v, long d) {
    return bound_disc_zeros(v, d) + Int(2) * Int(d);
}

bool check_final_inequality(long m, long mu, long n, long g, const Int& card) {
    if (mu < 1 || m < 0 || m > mu) throw DomainError("need 0 <= m <= mu, mu >= 1");
    if (n < 2 || g < 0) throw DomainError("need n >= 2, g >= 0");
    Rational lhs(card, Int(1));
    Rational rhs = Rational(card * Int(m), Int(mu)) +
                   Rational(Int(2) * Int(n) * Int(g), Int(1)) +
                   Rational(Int(2) * Int(n) * Int(n) * binomial(3 * n - 1, n), Int(1));
    return lhs < rhs;
}

} // namespace buchiff
