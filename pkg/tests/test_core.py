import itertools

import pytest

from pbcat.core import (
    FinSet,
    InvalidSubsetError,
    ObjectMismatchError,
    PBij,
    cancellation_oracle,
    classify,
    compose,
    enumerate_pbij,
    identity,
    inverse,
    partial_identity,
    zero_morphism,
)

from helpers import fin, pbij_count, universe


def small_objects(max_size):
    return [universe(n) for n in range(max_size + 1)]


def test_finset_rejects_duplicates():
    with pytest.raises(ValueError):
        FinSet(["a", "a"])


def test_finset_order_preserved_but_equality_is_setwise():
    a = fin("x y z")
    b = fin("z y x")
    assert a == b
    assert hash(a) == hash(b)
    assert a.elements == ("x", "y", "z")
    assert b.elements == ("z", "y", "x")


def test_finset_set_operations_keep_left_order():
    a = fin("1 2 3 4")
    assert a.difference(fin("3 1")).elements == ("2", "4")
    assert a.intersection(fin("4 2 9")).elements == ("2", "4")
    assert fin("1 2").union(fin("3 2")).elements == ("1", "2", "3")


def test_finset_subsets_count_and_determinism():
    x = fin("a b c")
    subs = list(x.subsets())
    assert len(subs) == 8
    assert subs == list(x.subsets())
    assert subs[0] == FinSet()
    assert subs[-1] == x


def test_pbij_rejects_non_functional_and_non_injective_graphs():
    X, Y = fin("1 2"), fin("a b")
    with pytest.raises(ValueError):
        PBij(X, Y, [("1", "a"), ("1", "b")])
    with pytest.raises(ValueError):
        PBij(X, Y, [("1", "a"), ("2", "a")])
    with pytest.raises(ValueError):
        PBij(X, Y, [("3", "a")])
    with pytest.raises(ValueError):
        PBij(X, Y, [("1", "c")])


def test_pbij_dom_im_follow_declaration_order():
    f = PBij(fin("3 2 1"), fin("a b"), [("1", "a"), ("3", "b")])
    assert f.dom == ("3", "1")
    assert f.im == ("a", "b")


def test_compose_pointwise_example():
    # g(f(1)) = g(a) = x, g(f(2)) = g(b) undefined
    f = PBij(fin("1 2"), fin("a b c"), [("1", "a"), ("2", "b")])
    g = PBij(fin("a b c"), fin("x y"), [("a", "x")])
    gf = compose(g, f)
    assert gf.graph == frozenset({("1", "x")})
    assert gf.dom == ("1",)
    assert gf.source == f.source
    assert gf.target == g.target


def test_compose_with_full_identity_is_neutral():
    f = PBij(fin("1 2"), fin("a b c"), [("2", "c")])
    assert compose(identity(f.target), f) == f
    assert compose(f, identity(f.source)) == f


def test_compose_disjoint_image_domain_gives_zero():
    f = PBij(fin("1"), fin("a b"), [("1", "a")])
    g = PBij(fin("a b"), fin("x"), [("b", "x")])
    assert compose(g, f) == zero_morphism(fin("1"), fin("x"))


def test_compose_object_mismatch():
    f = PBij(fin("1"), fin("a"), [("1", "a")])
    g = PBij(fin("b"), fin("x"), [])
    with pytest.raises(ObjectMismatchError):
        compose(g, f)


def test_inverse_transposes_and_round_trips():
    f = PBij(fin("1 2"), fin("a b"), [("1", "b")])
    fi = inverse(f)
    assert fi.graph == frozenset({("b", "1")})
    assert fi.source == f.target and fi.target == f.source
    assert inverse(fi) == f
    z = zero_morphism(fin("1 2"), fin("a"))
    assert inverse(z) == zero_morphism(fin("a"), fin("1 2"))


def test_inverse_composites_are_partial_identities():
    f = PBij(fin("1 2 3"), fin("a b"), [("1", "b"), ("3", "a")])
    assert compose(inverse(f), f) == partial_identity(f.source, f.dom)
    assert compose(f, inverse(f)) == partial_identity(f.target, f.im)


def test_partial_identity_requires_subset():
    X = fin("a b")
    assert partial_identity(X, fin("a")).graph == frozenset({("a", "a")})
    assert partial_identity(X, FinSet()) == zero_morphism(X, X)
    with pytest.raises(InvalidSubsetError):
        partial_identity(X, fin("c"))


def test_classify_inclusion_and_partial_identity():
    inc = PBij(fin("a"), fin("a b"), [("a", "a")])
    c = classify(inc)
    assert c.is_mono and not c.is_epi and not c.is_iso
    assert not c.is_idempotent and c.note is not None

    X = fin("a b")
    pid = partial_identity(X, fin("a"))
    c = classify(pid)
    assert c.is_idempotent and c.is_partial_identity
    assert not c.is_mono and not c.is_epi


def test_classify_iso_agrees_with_two_sided_inverse():
    for X in small_objects(3):
        for Y in small_objects(3):
            for f in enumerate_pbij(X, Y):
                c = classify(f)
                two_sided = (compose(inverse(f), f) == identity(X)
                             and compose(f, inverse(f)) == identity(Y))
                assert c.is_iso == two_sided


@pytest.mark.parametrize("n,m", [(0, 0), (1, 1), (2, 2), (3, 3), (2, 3), (3, 1), (0, 3)])
def test_enumerate_pbij_count_matches_formula(n, m):
    X, Y = universe(n), FinSet(f"t{i}" for i in range(m))
    found = list(enumerate_pbij(X, Y))
    assert len(found) == pbij_count(n, m)
    assert len(set(found)) == len(found)


def test_enumerate_small_counts():
    assert len(list(enumerate_pbij(FinSet(), FinSet()))) == 1
    assert len(list(enumerate_pbij(universe(1), universe(1)))) == 2
    assert len(list(enumerate_pbij(universe(2), universe(2)))) == 7


def test_hom_sets_with_empty_endpoint_are_singletons():
    for n in range(4):
        X = universe(n)
        assert list(enumerate_pbij(FinSet(), X)) == [zero_morphism(FinSet(), X)]
        assert list(enumerate_pbij(X, FinSet())) == [zero_morphism(X, FinSet())]


def test_composition_closed_over_small_objects():
    # closure: composites always satisfy the PBij invariants (constructor checks)
    for a, b, c in itertools.product(range(3), repeat=3):
        X, Y, Z = universe(a), universe(b), universe(c)
        for f in enumerate_pbij(X, Y):
            for g in enumerate_pbij(Y, Z):
                gf = compose(g, f)
                assert gf.source == X and gf.target == Z


def test_inverse_laws_exhaustive_size_3():
    X, Y, Z = universe(3), fin("a b c"), fin("p q")
    for f in enumerate_pbij(X, Y):
        assert compose(inverse(f), f) == partial_identity(X, f.dom)
        assert compose(f, inverse(f)) == partial_identity(Y, f.im)
        assert inverse(inverse(f)) == f
    for f in enumerate_pbij(X, Y):
        for g in enumerate_pbij(Y, Z):
            assert inverse(compose(g, f)) == compose(inverse(f), inverse(g))


def test_regularity_f_finv_f():
    for f in enumerate_pbij(universe(3), fin("a b")):
        assert compose(f, compose(inverse(f), f)) == f


def test_partial_identities_compose_by_intersection():
    X = universe(5)
    for A in X.subsets():
        for B in X.subsets():
            ab = compose(partial_identity(X, A), partial_identity(X, B))
            ba = compose(partial_identity(X, B), partial_identity(X, A))
            meet = partial_identity(X, A.intersection(B))
            assert ab == meet == ba


def test_associativity_exhaustive_size_2():
    sizes = range(3)
    for a, b, c, d in itertools.product(sizes, repeat=4):
        W, X, Y, Z = universe(a), universe(b), universe(c), universe(d)
        for f in enumerate_pbij(W, X):
            for g in enumerate_pbij(X, Y):
                for h in enumerate_pbij(Y, Z):
                    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_cancellation_oracle_matches_dom_im_criteria():
    probes = small_objects(2)
    for a in range(4):
        for b in range(4):
            X, Y = universe(a), FinSet(f"y{i}" for i in range(b))
            for f in enumerate_pbij(X, Y):
                c = classify(f)
                assert cancellation_oracle(f, "left", probes) == c.is_mono
                assert cancellation_oracle(f, "right", probes) == c.is_epi


def test_cancellation_oracle_singleton_probe_finds_witness():
    # f misses "2" in its domain; probes of size 1 already expose it
    f = PBij(fin("1 2"), fin("a"), [("1", "a")])
    assert not cancellation_oracle(f, "left", [universe(1)])
    assert cancellation_oracle(identity(fin("a b")), "left", small_objects(2))
    assert cancellation_oracle(identity(fin("a b")), "right", small_objects(2))


def test_cancellation_oracle_argument_validation():
    f = identity(fin("a"))
    with pytest.raises(ValueError):
        cancellation_oracle(f, "sideways", [fin("p")])
    with pytest.raises(ValueError):
        cancellation_oracle(f, "left", [])
