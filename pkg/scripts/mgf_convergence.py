"""Relative gap between the truncated MGF product and (t/2)/sin(t/2) as K grows."""

from laplace_series import mgf_closed, mgf_product

for t in (1.0, 2.0, 3.0, 5.0, 6.0):
    closed = mgf_closed(t)
    gaps = [abs(mgf_product(t, k) - closed) / closed for k in (10, 100, 1000, 10**4, 10**5, 10**6)]
    print(f"t={t:4.1f}  " + "  ".join(f"{g:.2e}" for g in gaps))
