"""
A length spectrum that reproduces a Dedekind zeta
=================================================

Give each prime ideal of norm p^f a closed geodesic of length f log p.
With the factor (1 - exp(-s l))^-1 the product over the spectrum is the
Dedekind zeta function, truncated at the same prime bound.
"""

from lfunc_lab import artin, galois
from lfunc_lab.dirichlet import evaluate
from lfunc_lab.selberg import compare_spectra, selberg_zeta, selberg_zeta_literal, spectrum_from_field

qi = galois.gaussian_field()
spec = spectrum_from_field(qi, 10_000)
print(len(spec), "lengths; first few:", [(float(l), m) for l, m in spec.entries[:4]])

for s in (2, 3):
    sel = selberg_zeta(spec, s)
    ded = evaluate(artin.dedekind_handle(qi, 10_000), s, 10_000)
    print(s, sel.value, ded.value, "diff", abs(sel.value - ded.value))

# reading the factor as (1 - l^-s)^-1 gives something else entirely
print("power-law reading at s=2:", selberg_zeta_literal(spec, 2))

# inert primes of Q(i) show up as lengths 2 log p that Q itself lacks
q = spectrum_from_field(galois.rational_field(), 50)
diff = compare_spectra(q, spectrum_from_field(qi, 50), 1e-9)
print([float(l) for l, _ in diff.unmatched_b])
