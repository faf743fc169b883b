import pytest

from pathcolour.core import Colouring, ExtensionContext, PathSystem, canonicalize
from pathcolour.solver import enumerate_2colourings, forced_distinct, is_uniquely_2chromatic, verify_colouring
from pathcolour.unique import (
    GuardFailed,
    NotSupported,
    PatternUnavailable,
    certify_noncritical,
    extend_unique,
    find_patterns,
    route,
    unique_pipeline,
)
from pathcolour.unique.base109 import TABLE_94, families, name, parse_paths, point, swapped_base
from pathcolour.unique.forced28 import forced28_blocks, forced28_families
from pathcolour.unique.growth import PATTERN_KIND


def test_forced28_shape(cert28):
    fam = forced28_families()
    assert len(fam["B1"]) == 12 and len(fam["B2"]) == 16
    assert len(cert28.system.blocks) == 126 and cert28.system.is_complete()
    assert verify_colouring(cert28.system, cert28.colouring).ok
    assert cert28.colouring.equitability() == "strong"
    assert (cert28.u, cert28.v) == (27, 28)


def test_forced28_pair_and_no_uniqueness(cert28):
    assert forced_distinct(cert28.system, 27, 28).answer is True
    assert forced_distinct(cert28.system, 1, 3).answer is False
    assert is_uniquely_2chromatic(cert28.system).answer is False


def test_prime_labels_round_trip():
    assert point(27, 1) == 55 and point(1, 3) == 83 and point(28) == 28
    assert [name(v) for v in (1, 28, 29, 55, 56, 109)] == ["1", "28", "1'", "27'", "1''", "27'''"]
    with pytest.raises(ValueError):
        point(28, 1)
    assert parse_paths("(27',(2*k+1)'',k,1)", k=2) == [(55, 60, 2, 1)]


def test_swap_exchanges_27_and_28():
    base = set(forced28_blocks())
    swapped = set(swapped_base())
    assert len(swapped) == 126
    assert canonicalize((27, 1, 2, 28)) in base and canonicalize((27, 1, 2, 28)) not in swapped
    assert canonicalize((28, 1, 2, 27)) in swapped


def test_109_counts(ctx109):
    fam = families()
    assert len(parse_paths(TABLE_94)) == 94
    assert sum(len(v) for v in fam.values()) == 1962
    assert len(ctx109.system.blocks) == 1962 and ctx109.system.is_complete()
    assert ctx109.colouring.class_sizes() == [53, 56]
    assert verify_colouring(ctx109.system, ctx109.colouring).ok


def test_109_unique(ctx109):
    found = enumerate_2colourings(ctx109.system, 28, 2)
    assert found == [ctx109.colouring]


def test_109_registry(ctx109):
    kinds = [p.kind for p in ctx109.noncritical]
    assert kinds == ["W2B4", "W2B4", "W1B3"]
    for pat in ctx109.noncritical:
        assert pat.canonical_blocks() <= ctx109.system.block_set and pat.matches(ctx109.colouring)


def test_registered_blocks_are_noncritical(ctx109):
    for pat in ctx109.noncritical:
        assert certify_noncritical(ctx109, pat) is True


@pytest.mark.parametrize("lemma,order", [("plus2", 111), ("plus3", 112), ("plus5", 114), ("plus6_w2b4", 115)])
def test_single_steps_from_109(ctx109, lemma, order):
    out = extend_unique(ctx109, lemma, certify=True)
    assert out.order == order and out.system.is_complete()
    assert verify_colouring(out.system, out.colouring).ok
    consumed = ctx109.patterns(PATTERN_KIND[lemma])[0].canonical_blocks()
    assert set(ctx109.system.blocks) - consumed <= set(out.system.blocks)
    assert out.colouring.restricted(ctx109.system.vertices) == ctx109.colouring
    for pat in out.noncritical:
        assert pat.canonical_blocks() <= out.system.block_set and pat.matches(out.colouring)
    assert is_uniquely_2chromatic(out.system).answer is True


def test_plus6_w3b3_after_plus5(ctx109):
    ctx114 = extend_unique(ctx109, "plus5")
    assert [p.kind for p in ctx114.noncritical][-1] == "W3B3"
    ctx120 = extend_unique(ctx114, "plus6_w3b3", certify=True)
    assert ctx120.order == 120 and ctx120.system.is_complete()
    assert is_uniquely_2chromatic(ctx120.system).answer is True


def test_guards(ctx109):
    ctx111 = extend_unique(ctx109, "plus2")
    with pytest.raises(GuardFailed, match="mod 6"):
        extend_unique(ctx111, "plus2")
    with pytest.raises(PatternUnavailable):
        extend_unique(ExtensionContext(ctx109.system, ctx109.colouring, ()), "plus5")
    with pytest.raises(NotSupported):
        extend_unique(ctx109, "plus4")


def test_plus5_size_guard():
    # the pattern class holds only two of seven points
    system = PathSystem(4, range(1, 8), [(1, 2, 3, 4), (4, 5, 2, 6)])
    col = Colouring(2, {1: 0, 2: 0, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1})
    pats = tuple(find_patterns(system, col, "W2B4"))
    assert pats
    with pytest.raises(GuardFailed, match=r"\|C_w\|"):
        extend_unique(ExtensionContext(system, col, pats), "plus5")


def test_find_patterns_recovers_registered(ctx109):
    found = find_patterns(ctx109.system, ctx109.colouring, "W2B4", limit=1)
    assert found[0].canonical_blocks() == ctx109.noncritical[0].canonical_blocks()


def test_routes():
    assert route(109) == []
    assert route(123) == ["plus2", "plus6_w2b4", "plus6_w3b3"]
    assert route(124) == ["plus3", "plus6_w2b4", "plus6_w3b3"]
    assert route(126) == ["plus5", "plus6_w3b3", "plus6_w3b3"]
    for bad in (108, 110, 113):
        with pytest.raises(NotSupported):
            route(bad)


@pytest.mark.parametrize("n", [117, 130])
def test_pipeline_orders(n):
    ctx = unique_pipeline(n)
    assert ctx.order == n and ctx.system.is_complete()
    assert verify_colouring(ctx.system, ctx.colouring).ok
