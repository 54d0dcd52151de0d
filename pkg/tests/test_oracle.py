import itertools

import pytest

from yangbaxter import oracle
from yangbaxter.core import is_solution, residual
from yangbaxter.errors import BudgetError, PreconditionError
from yangbaxter.matio import parse_jordan
from yangbaxter.matrices import Matrix, jordan_matrix, nilpotent_block
from yangbaxter.unipoly import char_poly


def census(field, shorthand, commuting=False, budget=oracle.DEFAULT_BUDGET):
    spec = parse_jordan(field, shorthand)
    a = jordan_matrix(field, spec)
    if commuting:
        return oracle.enumerate_commuting_solutions(a, jordan=spec, budget=budget)
    return oracle.enumerate_solutions(a, jordan=spec, budget=budget)


def naive_solutions(a):
    """Independent oracle: plain nested-loop enumeration with exact arithmetic."""
    field, n = a.field, a.nrows
    out = []
    for entries in itertools.product(range(field.p), repeat=n * n):
        x = Matrix.from_rows(field, [list(entries[i * n:(i + 1) * n])
                                     for i in range(n)])
        if is_solution(a, x):
            out.append(x)
    return out


def test_counts_match_naive_enumeration(gf2, gf3):
    for field, shorthand in ((gf2, "0^2"), (gf2, "1^2"), (gf3, "0^2")):
        spec = parse_jordan(field, shorthand)
        a = jordan_matrix(field, spec)
        fast = oracle.enumerate_solutions(a, jordan=spec)
        assert list(fast.solutions) == naive_solutions(a)


def test_expected_counts(gf2, gf3):
    assert census(gf2, "0^2").total == 6
    assert census(gf3, "0^2").total == 15
    assert census(gf2, "1^2").total == 4
    assert census(gf2, "0^4", commuting=True).total == 8
    assert census(gf3, "0^4", commuting=True).total == 18


def test_census_is_deterministic(gf3):
    first = census(gf3, "0^2")
    second = census(gf3, "0^2")
    assert first.solutions == second.solutions
    assert first.by_rank == second.by_rank and first.by_kernel == second.by_kernel


def test_zero_and_coefficient_always_present(gf2, gf3):
    for field, shorthand in ((gf2, "0^3"), (gf3, "1^2"), (gf2, "1^2,1^2")):
        rep = census(field, shorthand)
        a = rep.coefficient
        assert Matrix.zero(field, a.nrows) in rep.solutions
        assert a in rep.solutions


def test_solutions_reverify_exactly(gf3):
    rep = census(gf3, "0^3")
    for x in rep.solutions:
        assert residual(rep.coefficient, x).is_solution


def test_commuting_census_members_commute(gf2):
    rep = census(gf2, "0^4", commuting=True)
    a = rep.coefficient
    for x in rep.solutions:
        assert a * x == x * a
    full = census(gf2, "0^4")
    commuting_subset = [x for x in full.solutions if a * x == x * a]
    assert list(rep.solutions) == commuting_subset


def test_conjugation_closure(gf3):
    rep = census(gf3, "1^2")
    a = rep.coefficient
    members = set(rep.solutions)
    centralizer_invertibles = []
    for entries in itertools.product(range(3), repeat=4):
        g = Matrix.from_rows(gf3, [list(entries[:2]), list(entries[2:])])
        if g.is_invertible() and g * a == a * g:
            centralizer_invertibles.append(g)
    assert centralizer_invertibles
    for x in members:
        for g in centralizer_invertibles:
            assert g * x * g.inverse() in members


def test_budget_guard(gf3):
    with pytest.raises(BudgetError):
        census(gf3, "0^4", budget=1000)
    with pytest.raises(BudgetError):
        census(gf3, "0^4", commuting=True, budget=10)


def test_enumeration_needs_prime_field(rat):
    with pytest.raises(PreconditionError):
        oracle.enumerate_solutions(nilpotent_block(rat, 2))


def test_classification_completeness_small_blocks(gf2, gf3):
    for field in (gf2, gf3):
        for shorthand in ("0^2", "0^3", "1^2"):
            rep = oracle.classify_against_families(census(field, shorthand))
            assert rep.unmatched == 0, (field.spec(), shorthand, rep.family_tallies)
    rep = oracle.classify_against_families(census(gf3, "2^2"))
    assert rep.unmatched == 0


def test_classification_incomplete_for_size_four(gf2):
    rep = oracle.classify_against_families(census(gf2, "0^4"))
    assert rep.unmatched > 0
    # the top-left unit matrix solves the equation but escapes the pattern
    e11 = Matrix.unit(gf2, 4, 4, 0, 0)
    assert e11 in rep.solutions
    idx = rep.solutions.index(e11)
    assert rep.family_tags[idx] == "unmatched"


def test_classification_tags_reproduce_members(gf3):
    rep = oracle.classify_against_families(census(gf3, "0^2"))
    for x, tag in zip(rep.solutions, rep.family_tags):
        assert tag.startswith("jordan2-nilpotent")


def test_two_block_distinct_eigenvalue_kernels_direct(rat):
    # the two worked instances of the kernel classification, checked directly
    from yangbaxter import core
    from yangbaxter.matrices import jordan_block

    a = jordan_matrix(rat, [(1, 2), (2, 2)])
    x = Matrix.block([
        [Matrix.from_rows(rat, [[3, 4], [-1, -1]]), Matrix.zero(rat, 2)],
        [Matrix.zero(rat, 2), Matrix.zero(rat, 2)],
    ])
    assert core.check_kernel_classification_two_blocks(a, x, (2, 2)).holds

    a22 = jordan_matrix(rat, [(2, 2), (2, 2)])
    sub = jordan_block(rat, 2, 2)
    x22 = Matrix.block([
        [Matrix.zero(rat, 2), sub.inverse()], [Matrix.zero(rat, 2), sub]])
    assert core.check_kernel_classification_two_blocks(a22, x22, (2, 2)).holds


def test_theorem_sweep_clean_on_single_blocks(gf2, gf3):
    for field, shorthand in ((gf2, "1^2"), (gf3, "1^2"), (gf2, "0^3"), (gf3, "0^2")):
        rep = census(field, shorthand)
        verdicts = oracle.verify_theorems_on_census(rep)
        assert verdicts and all(v.holds for v in verdicts)


def test_equal_eigenvalue_two_block_kernels_can_mix_blocks(gf2):
    """With both blocks at the same eigenvalue the kernel of a solution can
    be an invariant subspace that straddles the two block spans, so the
    three-way kernel classification genuinely fails there; it belongs to
    coefficients with distinct block eigenvalues."""
    rep = census(gf2, "1^2,1^2")
    assert rep.total == 138
    assert rep.by_kernel.get("other", 0) == 48
    counterexample = Matrix.from_rows(gf2, [
        [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 0]])
    assert counterexample in rep.solutions
    verdicts = oracle.verify_theorems_on_census(rep)
    kernel_fails = [v for v in verdicts
                    if v.name == "two-block-kernel-classification" and not v.holds]
    assert len(kernel_fails) == 48
    others = [v for v in verdicts
              if v.name != "two-block-kernel-classification" and not v.holds]
    assert others == []


@pytest.mark.slow
def test_two_block_distinct_eigenvalue_census_kernels(gf3):
    """Full 43M-candidate census for diag(J2(1), J2(2)) over GF(3): every
    singular nonzero solution has kernel P1, P2 or P1+P2."""
    rep = census(gf3, "1^2,2^2", budget=50_000_000)
    assert set(rep.by_kernel) <= {"P1", "P2", "P1+P2", "trivial"}
    verdicts = oracle.verify_theorems_on_census(rep)
    assert all(v.holds for v in verdicts)


def test_eigenvalue_transfer_and_eigenspace_filters_run(gf3):
    rep = census(gf3, "1^2")
    names = {v.name for v in oracle.verify_theorems_on_census(rep)}
    assert "eigenvalue-transfer" in names
    assert "annihilates-generalized-eigenspace" in names
    assert "single-block-classification" in names


def test_nonzero_solutions_similar_to_block(gf2, gf3):
    from yangbaxter.unipoly import is_similar

    for field in (gf2, gf3):
        rep = census(field, "1^2")
        a = rep.coefficient
        cands = [field.one(), field.zero()]
        for x in rep.solutions:
            if not x.is_zero:
                assert x.is_invertible()
                assert is_similar(x, a, cands)


def test_nilpotent_blocks_have_no_invertible_solution(gf2, gf3):
    for field, shorthand in ((gf2, "0^3"), (gf3, "0^3"), (gf2, "0^4")):
        rep = census(field, shorthand)
        for x in rep.solutions:
            assert not x.is_invertible()


def test_constructed_members_appear_in_census(gf5):
    from yangbaxter import families as fam

    rep = oracle.enumerate_solutions(
        jordan_matrix(gf5, parse_jordan(gf5, "1^2")),
        jordan=parse_jordan(gf5, "1^2"))
    members = set(rep.solutions)
    for a_param in (0, 1, 4):
        for branch in ("plus", "minus"):
            x = fam.family_2x2_invertible(gf5.one(), branch, gf5.scalar(a_param))
            assert x in members


def test_spectrum_statement_on_census(gf3):
    rep = census(gf3, "1^2")
    for x in rep.solutions:
        chi = char_poly(x)
        assert chi.degree == 2
