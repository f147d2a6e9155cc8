"""The seven acceptance criteria, each checked exactly.

Every criterion records one PASS/FAIL line in ``RESULTS``; ``conftest.py``
prints them at the end of the session.  Running this file directly
(``python3 tests/test_acceptance.py``) prints the same lines.
"""

import time
from itertools import product

from superjack.combinatorics import Composition, Superpartition, all_superpartitions, conjugate, format_star
from superjack.identities import configurations, extended, recurrences, triangular
from superjack.jack import c_min_closed, c_min_via_expansion, verify_lemma2, verify_sector_norms
from superjack.nonsym import E

SP = Superpartition.parse
RESULTS = {}


def record(number, title, ok, detail=""):
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    RESULTS[number] = line
    return ok


def criterion_1():
    from superjack.algebra import AlphaRational
    from superjack.cli import main

    t0 = time.perf_counter()
    sp = SP("(3,1,0;4,2,1)")
    # 1/((3a+5)(2a+3)(a+2)(a+1)(a+3)) multiplied out by hand
    want = AlphaRational((1,), (90, 279, 335, 195, 55, 6))
    closed = c_min_closed(sp)
    conf = configurations.c_min_via_configurations(sp)
    code = main(["jack", "cmin", str(sp), "--out", "/dev/null"])
    elapsed = time.perf_counter() - t0
    ok = closed == want and conf == want and code == 0 and elapsed < 10
    return record(1, "worked c_min example", ok, f"closed={closed}, configurations={conf}, {elapsed:.2f}s")


def criterion_2():
    sps = all_superpartitions(5)
    # direct=True sums K_w over every w in S_N rather than counting orbits
    bad = [sp for sp in sps if c_min_via_expansion(sp, direct=True) != c_min_closed(sp)]
    return record(2, "c_min by S_N symmetrization, |Lambda| <= 5", not bad, f"{len(sps)} superpartitions, failures {[str(b) for b in bad[:3]]}")


def criterion_3():
    bad = []
    count = 0
    for m in range(1, 6):
        for g in triangular.all_gammas(m):
            count += 1
            if not triangular.identity2_check(g)[0]:
                bad.append(triangular.gamma_str(g) or "(empty)")
    return record(3, "Identity 2, m <= 5", not bad, f"{count} gamma vectors, failures {bad[:3]}")


def criterion_4():
    bad = []
    count = 0
    for m in range(1, 6):
        for g in triangular.all_gammas(m):
            count += 1
            det_ok = triangular.det_check(g)[0]
            inv_ok = triangular.lgv_involution_check(g)[0]
            if not (det_ok and inv_ok):
                bad.append(triangular.gamma_str(g) or "(empty)")
    return record(4, "LGV lemma and involution, m <= 5", not bad, f"{count} gamma vectors, failures {bad[:3]}")


def criterion_5():
    rec_ok, rec_bad = recurrences.recurrence_check(3, 7)
    int_ok, int_bad = recurrences.interp_check(3, 7)
    stair_ok = recurrences.staircase_check(7)
    app_ok, app_bad, n_app = extended.double_count_suite(3, 7)
    iota_bad = []
    for m in range(2, 6):
        for g in triangular.all_gammas(m):
            if any(g) and not triangular.iota_check(g)[0]:
                iota_bad.append(triangular.gamma_str(g))
    ok = rec_ok and int_ok and stair_ok and app_ok and not iota_bad
    detail = (
        f"recurrences {'ok' if rec_ok else rec_bad[:2]}, interpolation {'ok' if int_ok else int_bad[:2]}, "
        f"staircase {'ok' if stair_ok else 'fail'}, appendix {n_app} triples {'ok' if app_ok else app_bad[:1]}, "
        f"iota {'ok' if not iota_bad else iota_bad[:2]}"
    )
    return record(5, "recurrences, relation (A), Psi/Theta/iota", ok, detail)


def criterion_6():
    # the formula exactly as stated, without the (-1)^{m(m-1)/2} of the pairing
    mismatches = []
    for n in range(5):
        for m in range(5):
            if m * (m - 1) // 2 > n:
                continue
            mismatches += verify_sector_norms(n, m)
    offdiag = [x for x in mismatches if x[0] != x[1]]
    sample = [f"{a}: got {g}, formula {w}" for a, b, g, w in mismatches[:2]]
    detail = f"{len(mismatches)} mismatches ({len(offdiag)} off-diagonal)"
    if sample:
        detail += "; e.g. " + "; ".join(sample)
    return record(6, "norm and orthogonality, n <= 4", not mismatches, detail)


def criterion_7():
    sp = SP("(3,1,0;5,3,2)")
    fixtures = format_star(sp) == "(5,3,3,2,1,0)" and str(conjugate(sp)) == "(5,4,1;3,1)"
    lead_bad = []
    count = 0
    for N in range(1, 5):
        for parts in product(range(6), repeat=N):
            if sum(parts) > 5:
                continue
            count += 1
            if E(Composition(parts)).coefficient((), parts) != 1:
                lead_bad.append(parts)
    lemma_bad = [str(x) for x in all_superpartitions(5) if not verify_lemma2(x)[0]]
    ok = fixtures and not lead_bad and not lemma_bad
    detail = f"fixtures {'ok' if fixtures else 'fail'}, {count} compositions, leading failures {lead_bad[:2]}, lemma failures {lemma_bad[:2]}"
    return record(7, "structural fixtures", ok, detail)


def test_criterion_1_worked_c_min_example():
    assert criterion_1(), RESULTS[1]


def test_criterion_2_c_min_by_symmetrization():
    assert criterion_2(), RESULTS[2]


def test_criterion_3_identity_2():
    assert criterion_3(), RESULTS[3]


def test_criterion_4_lgv_lemma():
    assert criterion_4(), RESULTS[4]


def test_criterion_5_recurrences_and_bijections():
    assert criterion_5(), RESULTS[5]


def test_criterion_6_norm_formula():
    assert criterion_6(), RESULTS[6]


def test_criterion_7_structural_fixtures():
    assert criterion_7(), RESULTS[7]


if __name__ == "__main__":
    for fn in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7):
        t0 = time.perf_counter()
        fn()
        print(RESULTS[int(fn.__name__[-1])], f"[{time.perf_counter() - t0:.1f}s]", flush=True)
