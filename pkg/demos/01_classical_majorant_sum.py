"""The classical coefficient majorant sum and its 1/3 radius.

For a holomorphic self-map g of the unit disc, the majorant sum
|a0| + sum |c_n| r^n stays at most 1 up to r = 1/3 and no further.  This
script evaluates the sum on the disc-automorphism family
g(t) = (lam + t)/(1 + lam t), where it admits the closed form
lam + (1 - lam^2) r / (1 - lam r), and shows both sides of the radius.
"""

from polybohr import FunctionalSpec, PolydiscSlice, closed_form_radius, eval_functional, mobius_series

spec = FunctionalSpec.classical()
radius = closed_form_radius(spec)
print(f"classical majorant-sum radius: {radius:.12g}\n")

print("At r = 1/3 the sum stays at 1 or below for every parameter:")
print(f"{'lam':>8} {'truncated sum':>16} {'closed form':>14}")
for lam in (0.0, 0.25, 0.5, 0.75, 0.95, 0.999):
    s = PolydiscSlice.from_components([mobius_series(lam, "plus", 64)])
    value = eval_functional(s, spec, radius)
    closed = lam + (1.0 - lam * lam) / (3.0 - lam)
    print(f"{lam:8.3f} {value.truncated:16.12f} {closed:14.12f}")

print("\nJust past the radius the family escapes (lam near 1 is enough):")
for r in (radius, radius + 0.01, radius + 0.05):
    s = PolydiscSlice.from_components([mobius_series(1.0 - 1e-3, "plus", 64)])
    value = eval_functional(s, spec, r)
    flag = "<= 1" if value.lower <= 1.0 else "> 1   <-- radius cannot grow"
    print(f"  r = {r:.4f}: sum = {value.lower:.8f}  {flag}")

print("\nEvery evaluation carries a truncation budget; here it is invisible:")
s = PolydiscSlice.from_components([mobius_series(0.9, "plus", 64)])
value = eval_functional(s, spec, 1.0 / 3.0)
print(f"  value in [{value.lower:.15f}, {value.upper:.15f}] (tail {value.tail:.2e})")
