"""
Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest,
where the lines are repeated in the terminal summary.
"""

import math
import time
from fractions import Fraction

import numpy as np

from clifford_bargmann import bargmann as sb
from clifford_bargmann.clifford import Multivector, bar, blade_mask, dagger, norm0, product_arrays, bar_signs
from clifford_bargmann.hermite import (
    HermiteFunction,
    basis_indices,
    gamma,
    gram_matrix,
    hermite_poly,
    l2_inner,
    l2_norm,
    phi,
    random_combination,
)
from clifford_bargmann.monogenics import build_basis, monogenic_dimension, sphere_pairing
from clifford_bargmann.polynomial import CliffordPolynomial, multi_indices

RESULTS = []


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def _exact_batch(rng, size, m):
    num = rng.integers(-9, 10, size=(size, 1 << m))
    den = rng.integers(1, 6, size=(size, 1 << m))
    out = np.empty(num.shape, dtype=object)
    for i in np.ndindex(num.shape):
        out[i] = Fraction(int(num[i]), int(den[i]))
    return out


# ---------------------------------------------------------------------------
# 1. algebra axioms


def test_criterion_01_algebra_axioms():
    rng = np.random.default_rng(1)
    worst_float = 0.0
    exact_ok = True
    start = time.perf_counter()
    for m in range(2, 7):
        n = 1 << m
        signs = bar_signs(m)
        # exact: batched over the 1000 triples
        a, b, c = (_exact_batch(rng, 1000, m) for _ in range(3))
        ab = product_arrays(a, b, m)
        bc = product_arrays(b, c, m)
        exact_ok &= bool(np.all(product_arrays(ab, c, m) == product_arrays(a, bc, m)))
        osg = signs.astype(object)
        exact_ok &= bool(np.all(ab * osg == product_arrays(b * osg, a * osg, m)))
        exact_ok &= bool(np.all((a * osg) * osg == a))
        # float, complex coefficients
        fa, fb, fc = (rng.uniform(-1, 1, (1000, n)) + 1j * rng.uniform(-1, 1, (1000, n)) for _ in range(3))
        fab = product_arrays(fa, fb, m)
        worst_float = max(worst_float, np.max(np.abs(product_arrays(fab, fc, m) - product_arrays(fa, product_arrays(fb, fc, m), m))))
        dag = lambda x: np.conj(x) * signs
        worst_float = max(worst_float, np.max(np.abs(dag(fab) - product_arrays(dag(fb), dag(fa), m))))
        worst_float = max(worst_float, np.max(np.abs(dag(dag(fa)) - fa)))
        # generators: e_j^2 = -1, e_i e_j = -e_j e_i
        for i in range(1, m + 1):
            ei = Multivector.blade(m, blade_mask(i), exact=True)
            exact_ok &= ei * ei == Multivector.scalar(m, -1, exact=True)
            for j in range(i + 1, m + 1):
                ej = Multivector.blade(m, blade_mask(j), exact=True)
                exact_ok &= ei * ej == -(ej * ei)
    ok = exact_ok and worst_float <= 1e-12
    report(1, ok, f"exact laws hold: {exact_ok}; worst float residual {worst_float:.2e} (tol 1e-12); "
                  f"{time.perf_counter() - start:.1f}s")
    assert ok


# ---------------------------------------------------------------------------
# 2. monogenic dimensions


def test_criterion_02_monogenic_dimensions():
    bad = []
    worst = 0.0
    for m in (2, 3, 4):
        for k in range(5):
            basis = build_basis(m, k)
            if len(basis) != math.comb(m + k - 2, k) or len(basis) != monogenic_dimension(m, k):
                bad.append((m, k, "count"))
            if not basis.dirac_exact_zero():
                bad.append((m, k, "dirac"))
            worst = max(worst, max(norm0(sphere_pairing(P, P) - 1.0) for P in basis))
    ok = not bad
    report(2, ok, f"counts C(m+k-2,k) and exact D(generators)=0 for m<=4, k<=4; failures {bad}; "
                  f"self-pairing deviation {worst:.1e}")
    assert ok


# ---------------------------------------------------------------------------
# 3. gamma orthogonality


def test_criterion_03_gamma_orthogonality():
    worst = 0.0
    for m in (2, 3):
        funcs = []
        for l in range(4):
            for k in range(3):
                for j, P in enumerate(build_basis(m, k), 1):
                    funcs.append(((l, k, j), HermiteFunction(hermite_poly(l, P))))
        for (l, k, j), f in funcs:
            for (t, k2, j2), g in funcs:
                val = l2_inner(f, g)
                target = gamma(l, k, m) if (l, k, j) == (t, k2, j2) else 0.0
                scale = math.sqrt(gamma(l, k, m) * gamma(t, k2, m))
                worst = max(worst, norm0(val - target) / scale)
    spots = [gamma(0, 0, 2) / math.pi, gamma(1, 0, 2) / math.pi, gamma(2, 0, 2) / math.pi]
    spot_ok = all(abs(s - e) <= 1e-12 * e for s, e in zip(spots, (2, 4, 8)))
    ok = worst <= 1e-10 and spot_ok
    report(3, ok, f"max rel deviation {worst:.2e} (tol 1e-10); gamma_00,10,20 / pi at m=2 = "
                  f"{spots[0]:.15g}, {spots[1]:.15g}, {spots[2]:.15g}")
    assert ok


# ---------------------------------------------------------------------------
# 4. Gram identity


def test_criterion_04_gram_identity():
    out = []
    for m, L, K in [(2, 3, 2), (3, 2, 2)]:
        idx, G = gram_matrix(m, L, K)
        out.append((m, L, K, len(idx), float(np.max(np.abs(G - np.eye(len(idx)))))))
    ok = all(r[-1] <= 1e-10 for r in out)
    report(4, ok, "; ".join(f"(m={m},L={L},K={K}) size {n} dev {d:.1e}" for m, L, K, n, d in out))
    assert ok


# ---------------------------------------------------------------------------
# 5. basis images


def test_criterion_05_basis_image():
    rng = np.random.default_rng(5)
    worst, count = 0.0, 0
    for m in (2, 3):
        for idx in basis_indices(m, 4, 4):
            if idx.l + idx.k > 4:
                continue
            f = phi(idx, m)
            psi = sb.transform_exact(idx, m)
            for _ in range(20):
                z = rng.uniform(-1, 1, m) + 1j * rng.uniform(-1, 1, m)
                exact = psi(z)
                worst = max(worst, norm0(sb.transform_numeric(f, z) - exact) / max(norm0(exact), 1e-300))
                count += 1
    ok = worst <= 1e-9
    report(5, ok, f"{count} evaluations (l+k<=4, m in 2,3); max rel error {worst:.2e} (tol 1e-9)")
    assert ok


# ---------------------------------------------------------------------------
# 6. isometry constant


def test_criterion_06_isometry():
    rng = np.random.default_rng(6)
    worst = 0.0
    for m in (2, 3):
        for _ in range(200):
            f = random_combination(m, 2, 2, rng)
            g = random_combination(m, 2, 2, rng)
            worst = max(worst, sb.isometry_check(f, g)[2])
    ok = worst <= 1e-9
    report(6, ok, f"200 pairs per m in (2,3); max |<Bf,Bg> - (2pi)^(-m/2)<f,g>|_0 = {worst:.2e} (tol 1e-9)")
    assert ok


# ---------------------------------------------------------------------------
# 7. STFT identity


def test_criterion_07_stft():
    rng = np.random.default_rng(7)
    worst = 0.0
    m = 2
    for _ in range(10):
        f = random_combination(m, 2, 2, rng)
        for _ in range(50):
            t, w = rng.uniform(-1, 1, m), rng.uniform(-1, 1, m)
            worst = max(worst, sb.stft_bargmann_check(f, t, w)[2])
    ok = worst <= 1e-9
    report(7, ok, f"10 span elements x 50 (t,omega), m=2; max residual {worst:.2e} (tol 1e-9)")
    assert ok


# ---------------------------------------------------------------------------
# 8. Fock norms


def test_criterion_08_fock_norms():
    worst = 0.0
    for m in (2, 3, 4):
        zv = CliffordPolynomial.vector_variable(m, "z", exact=False)
        for l in range(5):
            for k in range(4):
                for P in build_basis(m, k):
                    val = sb.fock_norm_homogeneous(zv ** l * P.with_kind("z"))
                    target = gamma(l, k, m) * (2 * math.pi) ** (-m / 2)
                    worst = max(worst, abs(val - target) / target)
    spot = []
    for m in (2, 3, 4, 5):
        zv = CliffordPolynomial.vector_variable(m, "z", exact=False)
        spot.append(abs(sb.fock_norm_homogeneous(zv) - m) + abs(sb.fock_norm_homogeneous(zv * zv) - 2 * m))
    rng = np.random.default_rng(8)
    violations = 0
    for _ in range(500):
        m = int(rng.integers(2, 5))
        s = int(rng.integers(0, 6))
        terms = {a: Multivector(m, rng.standard_normal(1 << m) + 1j * rng.standard_normal(1 << m))
                 for a in multi_indices(m, s) if rng.random() < 0.7}
        if not terms:
            terms = {multi_indices(m, s)[0]: Multivector.scalar(m, 1.0)}
        P = CliffordPolynomial(m, terms, "z")
        z = rng.uniform(-1.5, 1.5, m) + 1j * rng.uniform(-1.5, 1.5, m)
        lhs, rhs = sb.pointwise_bound_check(P, z)
        violations += lhs > rhs * (1 + 1e-12)
    ok = worst <= 1e-10 and max(spot) <= 1e-12 and violations == 0
    report(8, ok, f"max rel norm deviation {worst:.1e} (tol 1e-10); spot values m, 2m dev {max(spot):.1e}; "
                  f"pointwise bound violations {violations}/500")
    assert ok


# ---------------------------------------------------------------------------
# 9. kernel convergence


def test_criterion_09_kernel_convergence():
    rng = np.random.default_rng(9)
    m = 2
    schedule = [(2 * q, q) for q in range(5)]  # ends at caps (8, 4)
    monotone, finals, diag = True, [], []
    for _ in range(10):
        x = rng.uniform(-1, 1, m)
        z = rng.uniform(-1, 1, m) + 1j * rng.uniform(-1, 1, m)
        z = z / max(1.0, float(np.linalg.norm(z)))
        closed = Multivector.scalar(m, sb.kernel_closed(x, z))
        errs = [norm0(sb.kernel_series(x, z, L, K) - closed) for L, K in schedule]
        monotone &= all(b <= a + 1e-12 for a, b in zip(errs, errs[1:]))
        finals.append(errs[-1])
        # diagnostic only: same top degree, truncated by l + k instead of the box
        diag.append(norm0(sb.kernel_series(x, z, 12, 12, max_total=12) - closed))
    # tail bound versus truncated dictionary sums
    dominated, ratio = True, 0.0
    for _ in range(10):
        f = random_combination(m, 3, 3, rng)
        z = rng.uniform(-1, 1, m) + 1j * rng.uniform(-1, 1, m)
        z = z / max(1.0, float(np.linalg.norm(z)))
        for L, K in schedule:
            e = sb.expand(f, L, K)
            val = norm0(e(z))
            bound = e.tail_bound(z)
            dominated &= val <= bound
            ratio = max(ratio, val / bound)
    converged = max(finals) <= 1e-6
    ok = monotone and converged and dominated
    report(9, ok, f"monotone {monotone}; max error at caps (8,4) {max(finals):.2e} (tol 1e-6), "
                  f"median {float(np.median(finals)):.2e}; [diagnostic: l+k<=12 gives {max(diag):.2e}]; tail bound dominates {dominated} (max ratio {ratio:.2e})")
    assert ok


# ---------------------------------------------------------------------------
# 10. inner-product axioms and the 2^m bound


def _random_exact_poly(rng, m, degree):
    terms = {}
    for s in range(degree + 1):
        for a in multi_indices(m, s):
            vals = [Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3))) for _ in range(1 << m)]
            terms[a] = Multivector(m, np.array(vals, dtype=object))
    return CliffordPolynomial(m, terms)


def _random_exact_mv(rng, m):
    return Multivector(m, np.array([Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))
                                    for _ in range(1 << m)], dtype=object))


def test_criterion_10_inner_product_axioms():
    rng = np.random.default_rng(10)
    best_const, cs_ok = 0.0, True
    for i in range(1000):
        m = 2 + i % 2
        f = random_combination(m, 2, 1, rng)
        g = random_combination(m, 2, 1, rng)
        lhs = norm0(l2_inner(f, g))
        nf, ng = l2_norm(f), l2_norm(g)
        cs_ok &= lhs <= 2 ** m * nf * ng
        best_const = max(best_const, lhs / (nf * ng))

    one = Multivector.scalar
    # axiom (v) is tracked per dimension: random a, and unit blades a = e_A
    v_random = {2: 0, 3: 0}
    v_blade = 0
    trials = 10
    # exact: module action and the sphere pairing on rational polynomials
    exact_ok = True
    for m in (2, 3):
        for _ in range(trials):
            f, g, h = (_random_exact_poly(rng, m, 2) for _ in range(3))
            a, b = _random_exact_mv(rng, m), _random_exact_mv(rng, m)
            exact_ok &= f * (a + b) == f * a + f * b
            exact_ok &= f * (a * b) == (f * a) * b
            exact_ok &= (f + g) * a == f * a + g * a
            exact_ok &= f * one(m, 1, exact=True) == f
            exact_ok &= sphere_pairing(f, g + h) == sphere_pairing(f, g) + sphere_pairing(f, h)
            exact_ok &= sphere_pairing(f, g * a) == sphere_pairing(f, g) * a
            exact_ok &= sphere_pairing(f, g) == dagger(sphere_pairing(g, f))
            ff = sphere_pairing(f, f).scalar_part()
            exact_ok &= ff > 0
            v_random[m] += sphere_pairing(f * a, f * a).scalar_part() > sum(c * c for c in a.coeffs) * ff
            for A in range(1 << m):
                e = Multivector.blade(m, A, exact=True)
                v_blade += sphere_pairing(f * e, f * e).scalar_part() != ff

    # float: the L2 module
    worst = 0.0
    for m in (2, 3):
        for _ in range(trials):
            F, G, H = (random_combination(m, 2, 1, rng).function() for _ in range(3))
            a = Multivector(m, rng.standard_normal(1 << m))
            worst = max(worst, norm0(l2_inner(F, G + H) - l2_inner(F, G) - l2_inner(F, H)))
            worst = max(worst, norm0(l2_inner(F, G * a) - l2_inner(F, G) * a))
            worst = max(worst, norm0(l2_inner(F, G) - bar(l2_inner(G, F))))
            ff = l2_inner(F, F).scalar_part()
            if ff <= 0:
                worst = max(worst, 1.0)
            excess = l2_inner(F * a, F * a).scalar_part() - norm0(a) ** 2 * ff
            v_random[m] += excess > 1e-12 * ff
    v_ok = v_random[2] == 0 and v_random[3] == 0 and v_blade == 0
    ok = cs_ok and exact_ok and worst <= 1e-12 and v_ok
    report(10, ok, f"|<f,g>|_0 <= 2^m ||f|| ||g|| on 1000 pairs: {cs_ok} (best constant {best_const:.3f}); "
                   f"module action and inner-product (i)-(iv) exact: {exact_ok}, float residual {worst:.1e} "
                   f"(tol 1e-12); (v) with unit blades: {v_blade} violations; (v) with random a: "
                   f"{v_random[2]}/{2 * trials} violations at m=2, {v_random[3]}/{2 * trials} at m=3")
    assert ok


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
