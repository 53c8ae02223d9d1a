import pytest

from irrcolor import families as F
from irrcolor.coloring import (
    chromatic_number,
    irredundance_chromatic_number,
    is_proper,
    is_rainbow,
)
from irrcolor.errors import ParameterError, PreconditionError
from irrcolor.graphs import bipartition, component_count, mask_from
from irrcolor.irc import irc_colorability, is_irc_coloring
from irrcolor.irredundance import ir_number, is_maximal_irredundant
from irrcolor.oracle import oracle_invariant

from conftest import complete_bipartite, cycle


ALL_SMALL_INSTANCES = [
    F.gen_complete(4),
    F.gen_complete_bipartite(2, 3),
    F.gen_star(5),
    F.gen_cycle(5),
    F.gen_cycle(6),
    F.gen_path(4),
    F.gen_family_a(6, 3),
    F.gen_family_a(8, 4),
    F.gen_block_h(3, 1),
    F.gen_family_z(3, 2),
    F.gen_family_b(6, 4),
    F.gen_cut_vertex(3),
    F.gen_bridge(3, 3),
    F.gen_tilde(3),
    F.gen_star_of_cycles(4),
    F.fixture("tree7"),
    F.fixture("anchor_sample"),
    F.fixture("near_twin_sample"),
    F.fixture("two_stars"),
    F.fixture("epn_sample"),
]


@pytest.mark.parametrize("inst", ALL_SMALL_INSTANCES, ids=lambda i: i.source)
def test_instances_are_connected_with_proper_colorings(inst):
    assert component_count(inst.graph) == 1
    if inst.coloring is not None:
        assert is_proper(inst.graph, inst.coloring)
        assert inst.coloring.canonical() == inst.coloring
    if inst.labels is not None:
        assert len(inst.labels) == inst.graph.n


def test_basic_dispatch_and_errors():
    assert F.gen_basic("complete", 4).graph == F.gen_complete(4).graph
    with pytest.raises(ParameterError):
        F.gen_basic("complete")
    with pytest.raises(ParameterError):
        F.gen_basic("frob", 3)
    with pytest.raises(ParameterError):
        F.gen_cycle(2)
    with pytest.raises(ParameterError):
        F.gen_star(1)


def test_family_a_claims_small():
    for n, k in ((6, 3), (8, 3), (8, 4)):
        inst = F.gen_family_a(n, k)
        g = inst.graph
        assert g.n == n
        assert chromatic_number(g)[0] == k
        assert ir_number(g)[0] == k
        assert irredundance_chromatic_number(g)[0] == k
        # the clique is maximal irredundant and rainbow in the attached coloring
        clique = mask_from(range(k))
        assert is_maximal_irredundant(g, clique)
        assert is_rainbow(inst.coloring, clique)


def test_family_a_boundary_and_errors():
    inst = F.gen_family_a(6, 3)  # boundary n = 2k handled below
    assert F.gen_family_a(8, 4).graph.n == 8
    with pytest.raises(ParameterError):
        F.gen_family_a(5, 3)
    with pytest.raises(ParameterError):
        F.gen_family_a(4, 0)


def test_block_h_shape():
    for (k, l), n in (((3, 1), 7), ((3, 2), 8), ((4, 2), 10)):
        inst = F.gen_block_h(k, l)
        assert inst.graph.n == n
    inst = F.gen_block_h(3, 2)
    # v is adjacent to everything else in the block
    v = inst.label_index("v")
    assert inst.graph.degree(v) == inst.graph.n - 1
    with pytest.raises(ParameterError):
        F.gen_block_h(2, 1)
    with pytest.raises(ParameterError):
        F.gen_block_h(3, 0)


def test_family_z_claims():
    inst = F.gen_family_z(3, 2)
    g = inst.graph
    assert g.n == 14
    # vertex count in closed form: shared k-1 plus l copies of k+l+1 privates
    k, l = 3, 2
    assert g.n == l * (2 * k + l) - (l - 1) * (k - 1)
    assert chromatic_number(g)[0] == 3
    assert ir_number(g)[0] == 2
    assert irredundance_chromatic_number(g)[0] == 4
    # the copy centers form a minimum dominating set
    from irrcolor.irredundance import gamma_number, is_dominating

    centers = sum(1 << inst.label_index(f"v{i}") for i in (1, 2))
    assert is_dominating(g, centers)
    assert gamma_number(g)[0] == l
    z1 = F.gen_family_z(3, 1)
    assert chromatic_number(z1.graph)[0] == 3
    assert ir_number(z1.graph)[0] == 1
    assert irredundance_chromatic_number(z1.graph)[0] == 3


def test_family_b_claims():
    for n, k in ((6, 4), (5, 2), (6, 6)):
        inst = F.gen_family_b(n, k)
        assert inst.graph.n == n
        assert irredundance_chromatic_number(inst.graph)[0] == k
        assert is_proper(inst.graph, inst.coloring)
    with pytest.raises(ParameterError):
        F.gen_family_b(5, 1)
    with pytest.raises(ParameterError):
        F.gen_family_b(4, 5)


def test_irc_families_certify_their_colorings():
    for inst, classes in (
        (F.gen_cut_vertex(3), 3),
        (F.gen_bridge(3, 3), 4),
        (F.gen_tilde(3), 3),
        (F.gen_star_of_cycles(4), 4),
    ):
        assert inst.coloring.k == classes
        assert is_irc_coloring(inst.graph, inst.coloring).is_irc


def test_irc_family_shapes():
    assert F.gen_cut_vertex(3).graph.n == 31
    assert F.gen_tilde(4).graph.n == 36
    assert F.gen_tilde(3).graph.n == 27
    assert F.gen_star_of_cycles(4).graph.n == 36
    with pytest.raises(ParameterError):
        F.gen_irc_family("tilde", 2)
    with pytest.raises(ParameterError):
        F.gen_irc_family("bipartite_star_of_cycles", 5)
    with pytest.raises(ParameterError):
        F.gen_irc_family("cut_vertex", 2)


def test_gadget_union_is_bipartite():
    inst = F.gen_cut_vertex(3)
    g = inst.graph
    # dropping the hub leaves a bipartite union of gadgets
    from irrcolor.graphs import induced_subgraph

    hubless, _ = induced_subgraph(g, g.vertices & ~(1 << 30))
    assert bipartition(hubless) is not None


def test_cut_vertex_connectivity():
    from irrcolor.graphs import connectivity_profile

    prof = connectivity_profile(F.gen_cut_vertex(3).graph)
    assert prof.connected
    assert prof.cut_vertices == 1 << 30  # hub only
    assert prof.bridges == ()
    prof = connectivity_profile(F.gen_bridge(3, 3).graph)
    assert prof.bridges == ((30, 61),)


def test_fixtures():
    t = F.fixture("tree7")
    assert t.graph.n == 7
    assert irredundance_chromatic_number(t.graph)[0] == 3
    assert oracle_invariant(t.graph, "chi_i").value == 3
    e = F.fixture("epn_sample")
    assert e.graph.n == 11
    assert e.claims["chi_irc"].exact is False
    with pytest.raises(ParameterError):
        F.fixture("nope")


def test_small_exact_claims_match_engines():
    for inst in ALL_SMALL_INSTANCES:
        g = inst.graph
        for name, claim in inst.claims.items():
            if not claim.exact:
                continue
            if name == "chi" and g.n <= 16:
                assert chromatic_number(g)[0] == claim.value, inst.source
            elif name == "chi_i" and g.n <= 16:
                assert irredundance_chromatic_number(g)[0] == claim.value, inst.source
            elif name == "ir" and g.n <= 16:
                assert ir_number(g)[0] == claim.value, inst.source
            elif name == "irc_colorable" and g.n <= 12:
                assert (irc_colorability(g) is not None) == claim.value, inst.source


def test_small_exact_claims_match_oracle():
    for inst in ALL_SMALL_INSTANCES:
        g = inst.graph
        if g.n > 8:
            continue
        for name, claim in inst.claims.items():
            if claim.exact and name in (
                "chi", "ir", "gamma", "chi_i", "irc_colorable", "chi_irc",
            ):
                assert oracle_invariant(g, name).value == claim.value, (
                    inst.source,
                    name,
                )


def test_epn_rich_vertex():
    assert F.epn_rich_vertex(F.fixture("epn_sample").graph) == 0
    assert F.epn_rich_vertex(cycle(4)) is None
    assert F.epn_rich_vertex(complete_bipartite(3, 3)) is None
    with pytest.raises(PreconditionError):
        F.epn_rich_vertex(cycle(5))
