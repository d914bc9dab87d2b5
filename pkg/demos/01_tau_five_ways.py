# Ramanujan's tau function computed five independent ways.
#
# Run with:  python demos/01_tau_five_ways.py
import time

from taupart import METHODS, tau_cross_check, tau_sequence

# Each method takes n and returns tau(n) as a Python int.
for name, fn in METHODS.items():
    print(f"{name:>14}: tau(2..8) =", [fn(n) for n in range(2, 9)])

# The cross-check runs every method over a range and stops at the first mismatch.
report = tau_cross_check(25)
print("\nall five methods agree up to 25:", report.ok)

# tau is multiplicative on coprime arguments ...
t = [None] + tau_sequence(40)
print("tau(6)  == tau(2)*tau(3):", t[6] == t[2] * t[3])
print("tau(35) == tau(5)*tau(7):", t[35] == t[5] * t[7])
# ... but not in general: 4 = 2*2 shares a factor.
print("tau(4)  == tau(2)**2    :", t[4] == t[2] ** 2)

# The recursion is the fast path. Values outgrow 64-bit ints quickly.
start = time.perf_counter()
big = tau_sequence(2000)
print(f"\ntau(2000) = {big[-1]}  ({len(str(abs(big[-1])))} digits, "
      f"{time.perf_counter() - start:.2f}s for the whole sequence)")
