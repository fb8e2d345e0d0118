"""Walk through the corpus and the shape test that gates every bound.

Run: python demos/01_corpus_and_shapes.py
"""

from hhcert import corpus, exact_integral, fn_by_id
from hhcert.analysis import classify_shape, derivative_power_shape
from hhcert.funcs import Interval

# Each corpus member carries f, f' and an antiderivative, plus a default
# interval on which it is well behaved.
for fn in corpus():
    iv = fn.test_interval
    print(f"{fn.id:10s} on [{iv.a:g}, {iv.b:g}]  integral = {exact_integral(fn, iv):.12f}")

# Which bounds apply depends on the shape of |f'|^q.  The test looks for a
# midpoint counterexample; finding none gives Convex or Concave.  A negative
# worst violation is the margin by which the closest pair passed.
print()
for fn_id in ("pow:3", "sqrt_cube", "linear", "sin"):
    fn = fn_by_id(fn_id)
    for q in (1.0, 2.0):
        rep = derivative_power_shape(fn, fn.test_interval, q)
        print(f"|{fn_id}'|^{q:g}: {rep.verdict:8s} worst violation {rep.worst_violation:.2e}")

# sin' = cos changes sign on [0, 3], so |cos| has a kink at pi/2 and a
# concave stretch on either side: neither test survives.
rep = classify_shape(lambda u: abs(fn_by_id("sin").df(u)), Interval(0, 3))
print(f"\n|cos| on [0, 3] -> {rep.verdict} after {rep.samples} midpoint checks")
