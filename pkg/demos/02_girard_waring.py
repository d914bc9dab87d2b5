# Newton-type recursions n r(n) = sum_k F(k) r(n-k) solved three ways.
#
# Run with:  python demos/02_girard_waring.py
from taupart import RecursionProblem, determinant_solve, partition_sum_solve, recursion_solve, sigma
from taupart.newton import newton_matrix, partition_sum_terms

# F = sigma gives the partition numbers p(n).
for n in range(1, 11):
    prob = RecursionProblem(sigma, n)
    print(n, recursion_solve(prob), partition_sum_solve(prob), determinant_solve(prob))

# The closed form spells out one term per partition. For tau(4) it is F = -24 sigma at n = 3:
print("\nterms of tau(4):")
for lam, term in partition_sum_terms(RecursionProblem(lambda k: -24 * sigma(k), 3)):
    print(f"  {str(lam):>6}  {term}")

# F = 1 gives Sylvester's identity: the reciprocals of z sum to one.
print("\nsum of 1/z over partitions of 12:", partition_sum_solve(RecursionProblem(lambda k: 1, 12)))

# Non-integral F values give rational answers; all three routes still agree exactly.
F = lambda k: [3, -7, 11, 0, 5][k - 1]
prob = RecursionProblem(F, 5)
print("\nF = 3,-7,11,0,5 at n=5:", recursion_solve(prob), partition_sum_solve(prob), determinant_solve(prob))
print("matrix:")
for row in newton_matrix([F(k) for k in range(1, 6)]):
    print("  ", row)
