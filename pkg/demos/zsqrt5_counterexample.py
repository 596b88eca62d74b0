"""
Equal discriminants, different algebras
=======================================

Over a ring where 2 is not invertible the discriminant does not decide
isomorphism. Z[sqrt5] gives a small witness.
"""
from rank2moduli import discriminant, iso_quadint, zsqrt5_counterexample

src, dst, decision = zsqrt5_counterexample()
R = src.ring
print("source     ", R.format(src.a), R.format(src.b), "disc", R.format(discriminant(src)))
print("target     ", R.format(dst.a), R.format(dst.b), "disc", R.format(discriminant(dst)))
print("verdict    ", decision.verdict.value)
print("certificate", decision.certificate)

###############################################################################
# Why it fails
# ------------
# An isomorphism x -> w y + v forces w^2 = 1, so w = 1 or -1, and then
# 2v = c w - a. Neither sqrt5 - 1 nor -sqrt5 - 1 is divisible by 2.

two = R.from_int(2)
for w in decision.candidates:
    num = R.sub(R.mul(dst.a, w), src.a)
    print(f"w={R.format(w):>2}: c*w - a = {R.format(num)}, divisible by 2: {R.divides(two, num)}")

###############################################################################
# A pair that does work
# ---------------------
# x^2 - 1 and x^2 + 2x have the same discriminant 4 and the shift x -> y + 1
# carries one to the other.

from rank2moduli import point

d = iso_quadint(point(R, 0, -1), point(R, 2, 0))
print(d.verdict.value, d.certificate)
