"""Normal-play solving: outcomes, order, canonical forms, Grundy values,
and the atomic-weight brackets."""

import random

import pytest

import oracles
from wildflowers import Dyadic, OutcomeClass


def _tree(engine, g, cache={}):
    """Literal tuple tree for a form, for feeding the reference solver."""
    key = (id(engine.arena), g)
    hit = cache.get(key)
    if hit is None:
        a = engine.arena
        hit = (
            tuple(_tree(engine, o) for o in a.left(g)),
            tuple(_tree(engine, o) for o in a.right(g)),
        )
        cache[key] = hit
    return hit


# ============================================================================
# Outcomes
# ============================================================================


class TestOutcomes:
    @pytest.mark.parametrize(
        "build,expected",
        [
            (lambda e: (), "P"),
            (lambda e: (e.star,), "N"),
            (lambda e: (e.number(1),), "L"),
            (lambda e: (e.number(-1),), "R"),
            (lambda e: (e.number("1/2"),), "L"),
            (lambda e: (e.arena.up(),), "L"),
            (lambda e: (e.arena.down(),), "R"),
            (lambda e: (e.sprig(1),), "N"),
            (lambda e: (e.sprig(1), e.star), "L"),
            (lambda e: (e.nimber(2), e.nimber(3)), "N"),
            (lambda e: (e.nimber(2), e.nimber(3), e.star), "P"),
        ],
    )
    def test_frozen_outcomes(self, engine, build, expected):
        assert str(engine.normal.outcome(engine.position(*build(engine)))) == expected

    def test_matches_the_reference_solver_on_a_catalog(self, engine):
        e = engine
        forms = [
            e.zero, e.star, e.nimber(2), e.number(1), e.number(-1),
            e.number("1/2"), e.arena.up(), e.sprig(1), e.sprig(-1),
            e.flower(2, 1), e.mutant({0, 2}, -1), e.mutant({2, 3}, 1),
        ]
        for i, g in enumerate(forms):
            for h in forms[i:]:
                p = e.position(g, h)
                want = oracles.outcome(
                    oracles.position(_tree(e, g), _tree(e, h)))
                assert str(e.normal.outcome(p)) == want

    def test_outcome_form_agrees_with_singleton_position(self, engine):
        g = engine.mutant({0, 2, 3}, -1)
        assert engine.normal.outcome_form(g) == engine.normal.outcome(
            engine.position(g))

    def test_win_first_sides(self, engine):
        one = engine.position(engine.number(1))
        assert engine.normal.win_first(one, 0)  # Left moves and wins
        assert not engine.normal.win_first(one, 1)


# ============================================================================
# Grundy values
# ============================================================================


class TestGrundy:
    def test_nimbers_are_fixed_points(self, engine):
        for k in (0, 1, 5, 31):
            assert engine.normal.grundy(engine.nimber(k)) == k

    def test_superstar_values_are_the_mex_of_their_indices(self, engine):
        assert engine.normal.grundy(engine.superstar({0, 2, 3})) == 1
        assert engine.normal.grundy(engine.superstar({2, 3})) == 0
        assert engine.normal.grundy(engine.superstar({0, 1, 3})) == 2

    def test_ordinal_nim_chains(self, engine):
        a = engine.arena
        assert engine.normal.grundy(a.ordinal_sum(engine.star, engine.star)) == 2
        assert engine.normal.grundy(
            a.ordinal_sum(engine.nimber(2), engine.nimber(3))) == 5

    def test_matches_the_reference_on_random_impartial_forms(self, engine):
        rng = random.Random(4)
        pool = [engine.zero]
        for _ in range(60):
            k = rng.randint(0, min(3, len(pool)))
            opts = tuple(sorted(rng.sample(pool, k)))
            pool.append(engine.arena.intern(opts, opts))
        for g in pool:
            assert engine.normal.grundy(g) == oracles.grundy(_tree(engine, g))

    def test_rejects_partizan_forms(self, engine):
        with pytest.raises(ValueError, match="impartial"):
            engine.normal.grundy(engine.number(1))

    def test_position_value_is_the_xor(self, engine):
        p = engine.position(engine.nimber(1), engine.nimber(2), engine.nimber(3))
        assert engine.normal.grundy_position(p) == 0
        q = engine.position(engine.superstar({0, 2, 3}), engine.nimber(3))
        assert engine.normal.grundy_position(q) == 1 ^ 3


# ============================================================================
# Order and equality
# ============================================================================


class TestOrder:
    def test_numbers_embed_in_order(self, engine):
        n = engine.normal
        assert n.leq(engine.number("1/2"), engine.number(1))
        assert n.leq(engine.number(-1), engine.number("-1/2"))
        assert not n.leq(engine.number(1), engine.number("1/2"))

    def test_star_is_confused_with_zero(self, engine):
        n = engine.normal
        assert not n.leq(engine.star, engine.zero)
        assert not n.leq(engine.zero, engine.star)

    def test_up_exceeds_zero_but_not_star(self, engine):
        n = engine.normal
        up = engine.arena.up()
        assert n.leq(engine.zero, up) and not n.leq(up, engine.zero)
        assert not n.leq(up, engine.star) and not n.leq(engine.star, up)

    def test_sprig_identities(self, engine):
        # *:1 is literally up-star; *:-1 is its conjugate
        n = engine.normal
        a = engine.arena
        assert n.eq(engine.sprig(1), a.sum_form(a.up(), engine.star))
        assert n.eq(engine.sprig(-1), a.sum_form(a.down(), engine.star))

    def test_position_order_and_strictness(self, engine):
        n = engine.normal
        p = engine.position(engine.number(1))
        q = engine.position(engine.number(1), engine.arena.up())
        assert n.lt_positions(p, q)
        assert not n.lt_positions(p, p)
        assert n.eq_positions(
            engine.position(engine.number(1), engine.number(-1)),
            engine.position())

    def test_leq_matches_the_reference(self, engine):
        e = engine
        forms = [e.zero, e.star, e.number(1), e.number(-1), e.arena.up(),
                 e.number("1/2"), e.sprig(1), e.nimber(2)]
        for g in forms:
            for h in forms:
                assert e.normal.leq(g, h) == oracles.leq(
                    _tree(e, g), _tree(e, h))


# ============================================================================
# Canonical forms
# ============================================================================


class TestCanonical:
    def test_star_sums_collapse_to_nimbers(self, engine):
        a = engine.arena
        n = engine.normal
        assert n.canonical(a.sum_form(engine.star, engine.nimber(2))) == engine.nimber(3)
        assert n.canonical(a.sum_form(engine.nimber(2), engine.nimber(3))) == engine.nimber(1)

    def test_number_arithmetic(self, engine):
        a = engine.arena
        n = engine.normal
        assert n.canonical(a.sum_form(engine.number(1), engine.number(1))) == engine.number(2)
        assert n.canonical(a.sum_form(engine.number(1), engine.number(-1))) == engine.zero
        assert n.canonical(
            a.sum_form(engine.number("1/2"), engine.number("1/4"))
        ) == engine.number("3/4")

    def test_conjugate_pairs_cancel(self, engine):
        a = engine.arena
        n = engine.normal
        assert n.canonical(a.sum_form(engine.sprig(1), engine.sprig(-1))) == engine.zero
        assert n.canonical(a.sum_form(a.up(), a.down())) == engine.zero

    def test_superstars_reduce_to_their_nim_value(self, engine):
        n = engine.normal
        assert n.canonical(engine.superstar({0, 2, 3})) == engine.star
        assert n.canonical(engine.superstar({1, 2})) == engine.zero

    def test_canonical_forms_are_fixed_points(self, engine):
        n = engine.normal
        for g in [engine.zero, engine.star, engine.nimber(4), engine.number("3/4"),
                  engine.arena.up(), engine.sprig(1)]:
            assert n.canonical(g) == g

    def test_canonical_is_idempotent_and_value_preserving(self, engine):
        a = engine.arena
        n = engine.normal
        samples = [
            a.sum_form(engine.sprig(1), engine.star),
            a.sum_form(engine.mutant({0, 2}, 1), engine.number(-1)),
            a.intern((engine.number(2), engine.zero), (engine.number(1),)),
            engine.mutant({2, 3}, 1),
        ]
        for g in samples:
            c = n.canonical(g)
            assert n.canonical(c) == c
            assert n.eq(c, g)
            assert a.birthday(c) <= a.birthday(g)

    def test_dominated_options_are_removed(self, engine):
        a = engine.arena
        g = a.intern((engine.zero, engine.number(1)), (engine.number(2),))
        c = engine.normal.canonical(g)
        assert a.left(c) == (engine.number(1),)

    def test_nimber_value_goes_through_canonicalization(self, engine):
        a = engine.arena
        n = engine.normal
        assert n.nimber_value(a.sum_form(engine.star, engine.nimber(2))) == 3
        assert n.nimber_value(engine.superstar({0, 2, 3})) == 1
        assert n.nimber_value(a.sum_form(engine.star, engine.star)) == 0
        assert n.nimber_value(engine.number(1)) is None
        assert n.nimber_value(engine.arena.up()) is None


# ============================================================================
# Grundy additivity over ordinal sums
# ============================================================================


class TestColonCheck:
    def test_holds_for_nimber_bases(self, engine):
        rng = random.Random(9)
        pool = [engine.zero]
        for _ in range(40):
            k = rng.randint(0, min(3, len(pool)))
            opts = tuple(sorted(rng.sample(pool, k)))
            pool.append(engine.arena.intern(opts, opts))
        for _ in range(200):
            base = engine.nimber(rng.randint(0, 5))
            top = rng.choice(pool)
            if base == engine.zero:
                continue
            assert engine.normal.colon_check(base, top)

    def test_minimal_failing_base(self, engine):
        # {*} has value 0 but no move to 0, so stacking * on it gains 2, not 1
        a = engine.arena
        base = a.intern((engine.star,), (engine.star,))
        assert engine.normal.grundy(base) == 0
        assert engine.normal.grundy(a.ordinal_sum(base, engine.star)) == 2
        assert engine.normal.colon_check(base, engine.star) is False

    def test_rejects_partizan_input(self, engine):
        with pytest.raises(ValueError, match="impartial"):
            engine.normal.colon_check(engine.star, engine.number(1))


# ============================================================================
# Atomic-weight brackets and flower counting
# ============================================================================


class TestAtomicWeight:
    def test_bracket_for_single_flowers(self, engine):
        n = engine.normal
        assert n.verify_aw_pm1(engine.sprig(1), 1, 4)
        assert n.verify_aw_pm1(engine.sprig(-1), -1, 4)
        assert n.verify_aw_pm1(engine.mutant({0, 2, 3}, 1), 1, 6)
        assert n.verify_aw_pm1(engine.mutant({0, 2, 3}, -1), -1, 7)

    def test_bracket_rejects_bad_sign(self, engine):
        with pytest.raises(ValueError, match="sign"):
            engine.normal.verify_aw_pm1(engine.sprig(1), 0, 5)

    def test_bracket_rejects_close_stars(self, engine):
        with pytest.raises(ValueError, match="too small"):
            engine.normal.verify_aw_pm1(engine.mutant({0, 2, 3}, 1), 1, 5)
        with pytest.raises(ValueError, match="too small"):
            engine.normal.verify_aw_pm1(engine.sprig(1), 1, 2)

    def test_flower_count_signs_blue_minus_red(self, engine):
        n = engine.normal
        blue, red = engine.sprig(1), engine.sprig(-1)
        assert n.flower_count_aw(engine.position(blue, blue)) == 2
        assert n.flower_count_aw(engine.position(blue, red)) == 0
        assert n.flower_count_aw(engine.position(red, engine.nimber(4))) == -1
        assert n.flower_count_aw(engine.position(engine.nimber(3))) == 0
        assert n.flower_count_aw(
            engine.position(engine.flower(2, 1), engine.mutant({0, 2, 3}, 1))) == 2

    def test_flower_count_rejects_non_wildflowers(self, engine):
        with pytest.raises(ValueError, match="not a wildflower"):
            engine.normal.flower_count_aw(engine.position(engine.arena.up()))

    def test_flower_count_rejects_colorless_tops(self, engine):
        a = engine.arena
        switch = a.intern((engine.number(1),), (engine.number(-1),))
        neutral = a.ordinal_sum(engine.star, switch)
        with pytest.raises(ValueError, match="not colorful"):
            engine.normal.flower_count_aw(engine.position(neutral))
