"""Poset construction, lattice recognition, identity checks, forbidden
sublattices, chain statistics and DOT export."""

import pytest

from srings.bits import mask_of
from srings.errors import NotALatticeError
from srings.lattices import (
    chain_stats,
    check_identity,
    covering_relation,
    export_hasse,
    find_forbidden_sublattice,
    forbidden_sublattices,
    lattice_from_poset,
    poset_from_family,
)
from srings.rings import product_ring, zn
from srings.substructures import ideals, s_ideals


def n5_family():
    # bottom {} , chain {0} < {0,1}, side {2}, top {0,1,2}
    return [mask_of([]), mask_of([0]), mask_of([0, 1]), mask_of([2]), mask_of([0, 1, 2])]


def m3_family():
    return [mask_of([]), mask_of([0]), mask_of([1]), mask_of([2]), mask_of([0, 1, 2])]


def chain_family(k):
    return [mask_of(range(i)) for i in range(k)]


def test_poset_bottom_top():
    p = poset_from_family(n5_family())
    assert p.nodes[p.bottom] == 0
    assert p.nodes[p.top] == mask_of([0, 1, 2])


def test_poset_requires_unique_bounds():
    with pytest.raises(ValueError):
        poset_from_family([mask_of([0]), mask_of([1])])


def test_singleton_family():
    p = poset_from_family([mask_of([0])])
    assert len(p.nodes) == 1 and p.bottom == p.top == 0


def test_not_a_lattice_witness():
    # two incomparable subsets with two maximal common lower bounds
    fam = [
        mask_of([]),
        mask_of([0]),
        mask_of([1]),
        mask_of([0, 1, 2]),
        mask_of([0, 1, 3]),
        mask_of([0, 1, 2, 3]),
    ]
    p = poset_from_family(fam)
    with pytest.raises(NotALatticeError) as err:
        lattice_from_poset(p)
    assert err.value.kind in ("meet", "join")
    assert len(err.value.pair) == 2


def test_pentagon_fixture():
    L = lattice_from_poset(poset_from_family(n5_family()))
    assert not check_identity(L, "modular").holds
    assert check_identity(L, "modular").counterexample is not None
    assert find_forbidden_sublattice(L, "pentagon") == (0, 1, 2, 3, 4)
    assert find_forbidden_sublattice(L, "diamond") is None


def test_diamond_fixture():
    L = lattice_from_poset(poset_from_family(m3_family()))
    assert check_identity(L, "modular").holds
    assert not check_identity(L, "distributive").holds
    assert find_forbidden_sublattice(L, "diamond") == (0, 1, 2, 3, 4)
    assert find_forbidden_sublattice(L, "pentagon") is None


def test_chains_are_distributive_and_n5_free():
    for k in (2, 4, 7):
        L = lattice_from_poset(poset_from_family(chain_family(k)))
        assert check_identity(L, "distributive").holds
        assert check_identity(L, "modular").holds
        assert find_forbidden_sublattice(L, "pentagon") is None
        assert find_forbidden_sublattice(L, "diamond") is None


def test_meet_join_absorption_idempotency():
    for fam in (n5_family(), m3_family(), chain_family(5)):
        L = lattice_from_poset(poset_from_family(fam))
        k = len(L.poset.nodes)
        for x in range(k):
            assert L.meet[x, x] == x and L.join[x, x] == x
            for y in range(k):
                assert L.meet[x, L.join[x, y]] == x
                assert L.join[x, L.meet[x, y]] == x
                assert L.meet[x, y] == L.meet[y, x]
                assert L.join[x, y] == L.join[y, x]


def lattice_zoo():
    """Assorted lattices: fixtures, divisor lattices, S-ideal lattices."""
    fams = [n5_family(), m3_family(), chain_family(4)]
    for n in (12, 16, 24, 30, 36, 60):
        fams.append(ideals(zn(n, validate=False)))
    fams.append([v.mask for v in s_ideals(product_ring([zn(7), zn(9)]), "I", "lax")])
    fams.append([v.mask for v in s_ideals(product_ring([zn(3), zn(12), zn(7)]), "I", "strict")])
    return fams


def test_distributive_implies_modular_and_n5_agreement():
    for fam in lattice_zoo():
        L = lattice_from_poset(poset_from_family(fam))
        modular = check_identity(L, "modular").holds
        if check_identity(L, "distributive").holds:
            assert modular
            assert find_forbidden_sublattice(L, "diamond") is None
        # no-N5 <=> modular, asserted pairwise on every analyzed lattice
        assert (find_forbidden_sublattice(L, "pentagon") is None) == modular


def test_full_ideal_lattices_are_modular():
    for n in (8, 12, 16, 24, 30, 36, 48, 60):
        L = lattice_from_poset(poset_from_family(ideals(zn(n, validate=False))))
        assert check_identity(L, "modular").holds
        assert check_identity(L, "distributive").holds  # Z_n: divisor lattice


def test_cover_lattice_pentagon():
    R = product_ring([zn(3), zn(12), zn(7)])
    fam = [v.mask for v in s_ideals(R, "I", "strict")]
    p = poset_from_family(fam)
    L = lattice_from_poset(p)
    assert len(p.nodes) == 19
    assert not check_identity(L, "modular").holds
    pents = forbidden_sublattices(L, "pentagon")
    assert pents
    # the stated witness {0, A3, A7, A15, A10} is among the pentagons found
    def pmask(s3, s12, s7):
        return mask_of(a + 3 * b + 36 * c for a in s3 for b in s12 for c in s7)

    book = frozenset(
        {
            1 << 0,
            pmask(range(3), [0, 6], [0]),
            pmask(range(3), [0, 6], range(7)),
            pmask([0], [0, 4, 8], range(7)),
            pmask(range(3), [0, 2, 4, 6, 8, 10], range(7)),
        }
    )
    assert book in {frozenset(p.nodes[i] for i in t) for t in pents}


def test_supermodular_and_quasi_distributive_on_chains():
    L = lattice_from_poset(poset_from_family(chain_family(4)))
    assert check_identity(L, "quasi_distributive").holds
    assert check_identity(L, "supermodular").holds


def test_supermodular_fails_on_diamond():
    # three incomparable atoms break the supermodular identity
    L = lattice_from_poset(poset_from_family(m3_family()))
    assert not check_identity(L, "supermodular").holds


def test_chain_stats():
    p16 = poset_from_family(ideals(zn(16)))
    assert chain_stats(p16) == (5, True)
    lax = [v.mask for v in s_ideals(product_ring([zn(7), zn(9)]), "I", "lax")]
    assert chain_stats(poset_from_family(lax)) == (4, True)
    strict = [v.mask for v in s_ideals(product_ring([zn(7), zn(9)]), "I", "strict")]
    assert chain_stats(poset_from_family(strict)) == (3, True)
    # antichain of 3 incomparable nodes plus bounds
    fam = [mask_of([]), mask_of([0]), mask_of([1]), mask_of([2]), mask_of([0, 1, 2])]
    assert chain_stats(poset_from_family(fam)) == (3, False)


def test_s_ideal_chain_z12():
    fam = [v.mask for v in s_ideals(zn(12), "I", "strict")]
    p = poset_from_family(fam)
    assert chain_stats(p) == (3, True)  # (0) in I1 in Z12


def test_export_hasse():
    p = poset_from_family(chain_family(4))
    dot = export_hasse(p)
    assert dot.count("->") == 3 and dot.count("label=") == 4
    pn5 = poset_from_family(n5_family())
    dot5 = export_hasse(pn5)
    assert dot5.count("->") == 5 and dot5.count("label=") == 5
    # deterministic output
    assert dot5 == export_hasse(pn5)


def test_export_hasse_cover_edges_match_covering_relation():
    R = product_ring([zn(3), zn(12), zn(7)])
    fam = [v.mask for v in s_ideals(R, "I", "strict")]
    p = poset_from_family(fam)
    dot = export_hasse(p, R)
    assert dot.count("->") == len(covering_relation(p))
    assert dot.count("label=") == 19
