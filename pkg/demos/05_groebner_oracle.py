"""The exact Groebner oracle, cross-checking the combinatorics.

Everything runs over F_p with deterministic reduced bases and hard budgets
on S-pair processing.  The oracle is for desk-scale validation: the
certificate machinery never depends on it, but on small instances the two
must agree, and that agreement is part of the acceptance suite.
"""

from beicert import (
    OracleIdeal,
    PrimeFieldPolynomial,
    binomial_edge_ideal,
    canonical_witness,
    colon,
    enumerate_minimal_primes,
    expand,
    format_polynomial,
    frobenius_bracket,
    groebner_basis,
    ideal_power,
    ideals_equal,
    intersect,
    minimal_prime_ideal,
    order_lower_bound,
    path_graph,
    power_membership_order,
)

p = 2
g = path_graph(3)

print("== reduced basis of a binomial edge ideal ==")
J = binomial_edge_ideal(g, p)
for f in groebner_basis(J):
    print("  ", format_polynomial(f))

print()
print("== radicality, verified ==")
acc = None
for prime in enumerate_minimal_primes(g):
    ideal = minimal_prime_ideal(prime, p)
    acc = ideal if acc is None else intersect(acc, ideal)
print("  J equals the intersection of its minimal primes:", ideals_equal(J, acc))

print()
print("== witness order vs the combinatorial bound ==")
w = canonical_witness(3)
f = expand(w, p)
for prime in enumerate_minimal_primes(g):
    bound = order_lower_bound(w, prime)
    order = power_membership_order(f, minimal_prime_ideal(prime, p), max_n=bound + 1)
    print(f"  S = {set(prime.cut_set) or '{}'}: bound {bound}, oracle order {order}")

print()
print("== colon identity on the symbolic powers ==")
qs = [minimal_prime_ideal(q, p) for q in enumerate_minimal_primes(g)]
sym = qs[0]
for q in qs[1:]:
    sym = intersect(sym, q)
lhs = colon(frobenius_bracket(sym), sym)
rhs = None
for q in qs:
    piece = colon(frobenius_bracket(q), q)
    rhs = piece if rhs is None else intersect(rhs, piece)
print("  (J^[p] : J) computed directly and prime by prime agree:", ideals_equal(lhs, rhs))

print()
print("== plain ideal arithmetic ==")
x = PrimeFieldPolynomial.variable(p, 2, 0)
y = PrimeFieldPolynomial.variable(p, 2, 1)
ix, iy = OracleIdeal(p, 2, [x]), OracleIdeal(p, 2, [y])
inter = intersect(ix, iy)
print("  (x) intersect (y) =", ", ".join(format_polynomial(h, ["x", "y"]) for h in inter.generators))
m2 = ideal_power(OracleIdeal(p, 2, [x, y]), 2)
print("  (x,y)^2 generator count:", len(m2.generators))
