import pytest
from hypothesis import given, settings, strategies as st

import zn_oracle
from latprim.constructors import zn_ideal_lattice
from latprim.errors import InvalidMapError, MapSpecError
from latprim.maps import (
    DELTA0, DELTA1, NONE, PHI0, PHI1, PHI2, PHIOMEGA, eval_map, is_expansion, is_reduction,
    map_leq, map_values, normalize_reduction, omega_power, parse_map_spec, phi_n, radical,
    require_expansion, require_reduction, residual, table_map,
)

CHAIN = [PHI0, PHIOMEGA, phi_n(4), phi_n(3), PHI2, PHI1, DELTA0, DELTA1]


@pytest.mark.parametrize("n", [6, 8, 9, 12, 24, 30, 36])
def test_residual_and_radical_match_ring_oracle(n):
    L = zn_ideal_lattice(n)
    I = zn_oracle.ideals(n)
    for a in L.names:
        assert L.names[radical(L, L.index(a))] == zn_oracle.name_of(n, zn_oracle.radical(n, I[a]))
        for b in L.names:
            got = L.names[residual(L, L.index(a), L.index(b))]
            assert got == zn_oracle.name_of(n, zn_oracle.residual(n, I[a], I[b]))


def test_residual_examples(z24, z8):
    g = z24.index
    assert residual(z24, g("(4)"), g("(2)")) == g("(2)")
    assert residual(z24, g("(8)"), g("(2)")) == g("(4)")
    assert residual(z24, g("(3)"), g("(2)")) == g("(3)")
    assert residual(z8, z8.index("(4)"), z8.index("(2)")) == z8.index("(2)")
    for a in z24.elements:
        assert residual(z24, a, z24.top) == a
        assert residual(z24, z24.top, a) == z24.top


def test_radical_examples(z24, z8, z30):
    assert z24.names[radical(z24, z24.index("(8)"))] == "(2)"
    assert z24.names[radical(z24, z24.index("(0)"))] == "(6)"
    assert z24.names[radical(z24, z24.index("(12)"))] == "(6)"
    assert z8.names[radical(z8, z8.index("(4)"))] == "(2)"
    # squarefree modulus: every ideal is radical
    assert all(radical(z30, a) == a for a in z30.elements)


@pytest.mark.parametrize("n", range(2, 121))
def test_galois_residuation(n):
    """xb <= a iff x <= (a:b), for every triple."""
    L = zn_ideal_lattice(n)
    le, mt, E = L.leq_table, L.mul_table, L.elements
    for a in E:
        for b in E:
            r = residual(L, a, b)
            for x in E:
                assert le[mt[x][b]][a] == le[x][r]


@pytest.mark.parametrize("n", range(2, 121))
def test_map_chain_pointwise(n):
    L = zn_ideal_lattice(n)
    for lo, hi in zip(CHAIN, CHAIN[1:]):
        assert map_leq(L, lo, hi), (n, lo, hi)


def test_power_maps_descend_up_to_six():
    for n in range(2, 121):
        L = zn_ideal_lattice(n)
        for k in range(2, 7):
            assert map_leq(L, PHIOMEGA, phi_n(k + 1))
            assert map_leq(L, phi_n(k + 1), phi_n(k))


def test_phi_omega_equals_brute_force_meet():
    for n in range(2, 121):
        L = zn_ideal_lattice(n)
        for p in L.elements:
            powers = [p]
            for _ in range(L.order):
                powers.append(L.mul(powers[-1], p))
            expected = powers[0]
            for q in powers:
                expected = L.meet([expected, q])
            assert omega_power(L, p) == expected


def test_eval_examples(z24, z8):
    g = z24.index
    assert eval_map(z24, PHIOMEGA, g("(4)")) == g("(8)")
    assert eval_map(z24, PHI2, g("(2)")) == g("(4)")
    assert eval_map(z24, phi_n(3), g("(2)")) == g("(8)")
    assert eval_map(z24, phi_n(4), g("(2)")) == g("(8)")
    assert eval_map(z24, PHI0, g("(6)")) == z24.bottom
    assert eval_map(z24, PHI1, g("(6)")) == g("(6)")
    assert eval_map(z24, DELTA1, g("(4)")) == g("(2)")
    assert eval_map(z8, PHIOMEGA, z8.index("(2)")) == z8.index("(0)")
    with pytest.raises(MapSpecError):
        map_values(z24, NONE)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=150))
def test_builtin_maps_have_their_shapes(n):
    L = zn_ideal_lattice(n)
    for d in (DELTA0, DELTA1):
        assert is_expansion(L, d)
    for f in (PHI0, PHI1, PHI2, phi_n(3), phi_n(5), PHIOMEGA):
        assert is_reduction(L, f)
    rad = [radical(L, a) for a in L.elements]
    assert all(rad[r] == r for r in rad)


def test_expansion_and_reduction_failures(z8):
    # the radical is not a reduction: (2) sits above (4)
    chk = is_reduction(z8, DELTA1)
    assert not chk and chk.witness == (z8.index("(4)"),)
    with pytest.raises(InvalidMapError):
        require_reduction(z8, DELTA1)
    # a map that shrinks is not an expansion
    with pytest.raises(InvalidMapError):
        require_expansion(z8, PHI2)
    # non-monotone table map: a <= delta(a) holds but order is broken
    g = z8.index
    bad = table_map([g("(1)"), g("(2)"), g("(4)"), g("(1)")])
    chk = is_expansion(z8, bad)
    assert not chk and "δ(a) ≤ δ(b)" in chk.condition
    with pytest.raises(MapSpecError):
        require_expansion(z8, NONE)
    require_reduction(z8, NONE)


def test_identity_table_map_is_both(z8):
    ident = table_map(z8.elements)
    assert is_expansion(z8, ident) and is_reduction(z8, ident)
    assert map_values(z8, ident) == map_values(z8, DELTA0)


def test_normalize_reduction(z24):
    norm = normalize_reduction(z24, DELTA1)
    assert is_reduction(z24, norm)
    assert map_values(z24, norm) == tuple(z24.elements)


def test_parse_map_spec_forms():
    assert parse_map_spec("delta1") is DELTA1
    assert parse_map_spec("phi_none") == NONE
    assert parse_map_spec("phi2") == PHI2
    assert parse_map_spec("phiN:2") == PHI2
    assert parse_map_spec("phiN:7") == phi_n(7)
    assert parse_map_spec("phi7").label == "phiN:7"
    assert parse_map_spec("PhiOmega") == PHIOMEGA
    for bad in ("phi", "phiN:1", "phiN:x", "gamma", "phi-2"):
        with pytest.raises(MapSpecError):
            parse_map_spec(bad)
    with pytest.raises(MapSpecError):
        parse_map_spec("@somewhere.map")


def test_table_map_file(tmp_path, z8):
    path = tmp_path / "half.map"
    path.write_text("# pull everything one step down\n(1) -> (2)\n(2) -> (4)\n(4) -> (0)\n(0) -> (0)\n")
    m = parse_map_spec(f"@{path}", z8)
    assert m.label == f"@{path}"
    assert is_reduction(z8, m)
    assert z8.names[eval_map(z8, m, z8.index("(2)"))] == "(4)"

    path.write_text("(1) -> (2)\n")
    with pytest.raises(MapSpecError, match="unmapped"):
        parse_map_spec(f"@{path}", z8)
    path.write_text("(1) -> (2)\n(1) -> (4)\n")
    with pytest.raises(MapSpecError, match="twice"):
        parse_map_spec(f"@{path}", z8)
    path.write_text("(1) => (2)\n")
    with pytest.raises(MapSpecError):
        parse_map_spec(f"@{path}", z8)
    path.write_text("(1) -> (3)\n")
    with pytest.raises(MapSpecError):
        parse_map_spec(f"@{path}", z8)
    with pytest.raises(MapSpecError):
        parse_map_spec(f"@{tmp_path / 'missing.map'}", z8)


def test_table_map_wrong_size(z8, z24):
    with pytest.raises(MapSpecError):
        map_values(z24, table_map(z8.elements))


def test_bad_map_kinds():
    from latprim.maps import MapSpec

    with pytest.raises(MapSpecError):
        MapSpec("phi9")
    with pytest.raises(MapSpecError):
        MapSpec("phiN", 1)
    with pytest.raises(MapSpecError):
        MapSpec("table")
