"""Tour of the exact polynomial ring.

Every identity in this package lives in Z[a[i,j], lambda, beta]: sparse
polynomials with arbitrary-precision integer coefficients.  There is no
floating point anywhere, so "equal" always means literally equal.
"""

from tracedet import BETA, LAMBDA, Polynomial, entry

lam = Polynomial.of_var(LAMBDA)
beta = Polynomial.of_var(BETA)


def a(i, j):
    return Polynomial.of_var(entry(i, j))


# Arithmetic is plain operator syntax; results are always canonical.
p = (a(1, 0) + a(0, 1)) * (a(1, 0) - a(0, 1))
print("difference of squares:", p)

q = lam * a(0, 1) * a(1, 0) - 2 * a(1, 1)
print("a mixed polynomial:   ", q)

# The canonical text form is deterministic and round-trips.
text = q.to_text()
print("serialized:           ", text)
print("parses back equal:    ", Polynomial.from_text(text) == q)

# Substitution is a ring homomorphism.  Setting lambda = 1 is how the
# abstract identities specialize to the SL(2) trace world.
print("q at lambda=1:        ", q.substitute({LAMBDA: 1}))

# The constraint a[2,1] = beta*a[1,2] is a substitution too.
print("a[2,1] constrained:   ", a(2, 1).substitute({entry(2, 1): beta * a(1, 2)}))

# Coefficient extraction in one variable.
r = lam ** 2 * a(1, 1) + lam * a(1, 2) + a(1, 3)
for k in range(3):
    print(f"coeff of lambda^{k} in {r}:", r.coeff_in_var(LAMBDA, k))
