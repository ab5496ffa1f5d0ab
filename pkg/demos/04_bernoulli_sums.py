"""Power sums, sums with rational upper bounds, and the nested functional f_d."""

from fractions import Fraction

from ehrhart_lf.bernoulli import bernoulli_poly, extended_sum, f_d, g_d, nested_sum_signed, power_sum_poly
from ehrhart_lf.exactmath import UniPoly

for k in range(5):
    print(f"B_{k}(x) = {bernoulli_poly(k)}".replace("m", "x"))

p3 = power_sum_poly(3)
print(f"\nP_3(x) = {p3}".replace("m", "x"))
print(f"P_3(10) = {p3(10)} = {sum(i**3 for i in range(11))}")

s = UniPoly.x()
print(f"\nsum_(s=1)^4 s = {extended_sum(s, 4)}")
print(f"sum_(s=1)^(-3) s = {extended_sum(s, -3)}  (the polynomial keeps going past zero)")
print(f"sum_(s=1)^(5/2) 1 = {extended_sum(UniPoly([1]), Fraction(5, 2))}")

# f_3(2, 1, 5) = sum_{s1<=2} sum_{s2<=s1} sum_{s3<=5 s2} 1
print(f"\nf_3(2, 1, 5) = {f_d([2, 1, 5])}, nested loop count {nested_sum_signed([2, 1, 5])}")
# with a negative ratio the closed form picks up a sign, and the loop bounds use x -> -x-1
b = [2, -4, 8]
print(f"g_3{tuple(b)} = {g_d(b)}")
