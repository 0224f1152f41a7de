"""Family generators: vertex/edge counts, parameter bounds, role tags."""

from __future__ import annotations

import pytest

from iasi import DomainError, FamilySpec, Graph, clique_number, generate, is_connected


def fam(name, **params):
    return generate(FamilySpec.make(name, **params))


@pytest.mark.parametrize(
    "name,params,n,m",
    [
        ("path", {"m": 1}, 2, 1),
        ("path", {"m": 5}, 6, 5),
        ("cycle", {"n": 3}, 3, 3),
        ("complete", {"n": 5}, 5, 10),
        ("complete_bipartite", {"m": 3, "n": 4}, 7, 12),
        ("wheel", {"n": 5}, 6, 10),
        ("helm", {"n": 4}, 9, 12),
        ("helm", {"n": 3}, 7, 9),
        ("friendship", {"n": 3}, 7, 9),
        ("fan", {"m": 2, "n": 3}, 5, 8),
        ("complete_split", {"r": 3, "s": 2}, 5, 9),
        ("sun", {"n": 4}, 8, 12),
        ("complete_sun", {"n": 4}, 8, 14),
        ("sunlet", {"n": 5}, 10, 10),
    ],
)
def test_orders_and_sizes(name, params, n, m):
    g = fam(name, **params)
    assert (g.n, len(g.edges)) == (n, m)


def test_path_of_one_edge_is_k2():
    assert fam("path", m=1) == Graph.make(2, [(0, 1)])


def test_generators_emit_no_isolated_vertices():
    cases = [
        ("path", {"m": 3}),
        ("cycle", {"n": 4}),
        ("complete", {"n": 3}),
        ("complete_bipartite", {"m": 2, "n": 2}),
        ("wheel", {"n": 4}),
        ("helm", {"n": 4}),
        ("friendship", {"n": 2}),
        ("fan", {"m": 2, "n": 2}),
        ("complete_split", {"r": 2, "s": 2}),
        ("sun", {"n": 3}),
        ("complete_sun", {"n": 3}),
        ("sunlet", {"n": 3}),
    ]
    for name, params in cases:
        g = fam(name, **params)
        assert all(g.degree(v) >= 1 for v in g.vertices), name
        assert is_connected(g), name


@pytest.mark.parametrize(
    "name,params",
    [
        ("path", {"m": 0}),
        ("cycle", {"n": 2}),
        ("complete", {"n": 0}),
        ("wheel", {"n": 2}),
        ("helm", {"n": 2}),
        ("friendship", {"n": 0}),
        ("fan", {"m": 0, "n": 3}),
        ("fan", {"m": 1, "n": 1}),
        ("complete_split", {"r": 0, "s": 1}),
        ("sun", {"n": 2}),
        ("complete_sun", {"n": 2}),
        ("sunlet", {"n": 2}),
    ],
)
def test_bounds_rejected_with_named_parameter(name, params):
    with pytest.raises(DomainError) as err:
        fam(name, **params)
    message = str(err.value)
    assert any(p in message for p in params), message


def test_unknown_family():
    with pytest.raises(DomainError):
        FamilySpec.make("moebius", n=5)


def test_wrong_parameters_rejected():
    with pytest.raises(DomainError):
        FamilySpec.make("cycle", m=5)
    with pytest.raises(DomainError):
        FamilySpec.make("fan", m=2)


def test_roles_tag_structure():
    helm = fam("helm", n=4)
    tags = sorted(set(helm.roles.values()))
    assert tags == ["hub", "pendant", "rim"]
    assert helm.roles[4] == "hub"
    wheel = fam("wheel", n=3)
    assert wheel.roles[3] == "hub"
    sunlet = fam("sunlet", n=3)
    assert sunlet.roles[5] == "pendant"


def test_wheel3_is_k4():
    assert clique_number(fam("wheel", n=3)) == 4


def test_sun_variants_differ_in_hull():
    cycle_hull = fam("sun", n=5)
    complete_hull = fam("complete_sun", n=5)
    assert clique_number(cycle_hull) == 3
    assert clique_number(complete_hull) == 5


def test_spec_json_round_trip():
    spec = FamilySpec.make("fan", power=2, m=3, n=4)
    data = spec.to_json()
    assert data == {"family": "fan", "params": {"m": 3, "n": 4}, "power": 2}
    assert FamilySpec.from_json(data) == spec


def test_spec_rejects_bad_power():
    with pytest.raises(DomainError):
        FamilySpec.make("cycle", power=0, n=4)
