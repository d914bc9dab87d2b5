# Infinite products prod (1 - x^n)^e(n) expanded directly and by the
# logarithmic-derivative recursion.
#
# Run with:  python demos/04_product_expansions.py
from taupart import apostol_recursion, product_expansion

N = 30
euler = product_expansion(lambda n: 1, N)
print("prod (1-x^n)      :", euler.coefficients)

partitions = product_expansion(lambda n: -1, N)
print("prod (1-x^n)^-1   :", partitions.coefficients)

delta = product_expansion(lambda n: 24, 10)
print("prod (1-x^n)^24   :", delta.coefficients, "(tau(1..11))")

# The recursion only needs the divisor sums of f(n) = n e(n).
rec = apostol_recursion(lambda n: -n, N, integral=True)
print("recursion matches :", rec == list(partitions.coefficients))

# A mixed exponent sequence.
e = lambda n: 2 if n % 2 else -3
print("mixed exponents   :", product_expansion(e, 12).coefficients)
print("as JSON           :", product_expansion(e, 5).to_json())
