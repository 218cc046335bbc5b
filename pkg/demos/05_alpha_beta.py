"""Certified enclosures of the constants alpha and beta.

alpha is the unique root of ell*x^(ell+1) - (ell+1)*x + 1 in (0,1); the
packing density of q_ell is beta = ell*alpha*(1-alpha)^(ell-1).  Bisection
with exact rational arithmetic gives enclosures whose endpoints carry exact
sign certificates, so every verdict derived from them is rigorous.
"""

from fractions import Fraction

from packdense import Enclosures, Verdict, check_beta_identity, f_ell_at

print("ell   alpha                 beta")
for ell in (2, 3, 4, 5):
    enc = Enclosures(ell)
    alpha = enc.alpha(Fraction(1, 10**12))
    beta = enc.beta(Fraction(1, 10**12))
    print(f"{ell:<5} {float(alpha.midpoint):<21.12f} {float(beta.midpoint):.12f}")
print()

# the enclosure endpoints really do bracket the root
enc = Enclosures(2)
iv = enc.alpha(Fraction(1, 10**6))
print(f"alpha_2 in [{iv.lo}, {iv.hi}]")
print(f"sign certificate: f(lo) = {float(f_ell_at(2, iv.lo)):.3e} > 0 > "
      f"f(hi) = {float(f_ell_at(2, iv.hi)):.3e}")
print()

# beta satisfies beta = beta*alpha^ell + (1-alpha)^ell; the enclosures of
# both sides must overlap at any tolerance
for ell in (2, 3, 5):
    verdict = check_beta_identity(ell, Fraction(1, 10**10))
    print(f"beta identity self-test at ell={ell}: {verdict}")
assert check_beta_identity(2) is Verdict.PASS

# for ell = 2 there is a closed form: beta = 4*alpha - 1 = 2*sqrt(3) - 3
beta = Enclosures(2).beta(Fraction(1, 10**12))
print(f"\nell=2 closed form check: (beta+3)^2 = {float((beta.midpoint + 3) ** 2):.12f} (should be 12)")
