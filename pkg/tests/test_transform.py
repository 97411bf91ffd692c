import corpus
import oracles
import pytest

from igscript import (
    Level,
    LogicalOperator,
    degree_of_variability,
    expand,
    filter_level,
    parse,
    reorder_conditions,
    serialize,
)
from igscript.lexer import TokenKind, scan


def ids_of(result):
    return [a.id.render() for a in result.atoms]


def cell(atom, code):
    return [v.rendered() for v in atom.cells.get(code, ())]


def links(atom):
    return [f"{op.value}:{sid.render()}" for op, sid in atom.linkage]


def test_single_statement_keeps_bare_id():
    result = expand(parse("A(farmer) D(must) I(submit) Bdir(report)"))
    assert ids_of(result) == ["1"]
    atom = result.atoms[0]
    assert cell(atom, "A") == ["farmer"]
    assert cell(atom, "I") == ["submit"]
    assert atom.linkage == ()


def test_combination_expands_densely():
    result = expand(parse("A(farmer) D(must) I(submit [AND] "
                          "(revise [XOR] withdraw)) Bdir(application)"),
                    "650")
    assert ids_of(result) == ["650.1", "650.2", "650.3"]
    aims = [cell(a, "I") for a in result.atoms]
    assert aims == [["submit"], ["revise"], ["withdraw"]]
    assert links(result.atoms[0]) == ["AND:650.2", "AND:650.3"]
    assert links(result.atoms[1]) == ["AND:650.1", "XOR:650.3"]
    assert links(result.atoms[2]) == ["AND:650.1", "XOR:650.2"]


def test_two_combinations_multiply_leftmost_slowest():
    result = expand(parse("A(clerk [OR] deputy) I(files [XOR] sends)"))
    pairs = [(cell(a, "A")[0], cell(a, "I")[0]) for a in result.atoms]
    assert pairs == [("clerk", "files"), ("clerk", "sends"),
                     ("deputy", "files"), ("deputy", "sends")]
    # linkage only between atoms that differ in exactly one choice
    assert links(result.atoms[0]) == ["XOR:1.2", "OR:1.3"]
    assert links(result.atoms[3]) == ["OR:1.2", "XOR:1.3"]


def test_linkage_is_symmetric():
    result = expand(parse(corpus.VIOLATION_V2))
    by_id = {a.id.render(): a for a in result.atoms}
    for atom in result.atoms:
        for op, other in atom.linkage:
            assert (op, atom.id) in by_id[other.render()].linkage


def test_pair_combination_splits_statement():
    result = expand(parse(corpus.PAIR))
    assert ids_of(result) == ["1.1", "1.2"]
    first, second = result.atoms
    assert cell(first, "I") == ["investigate"]
    assert cell(first, "Bdir") == ["compliance"]
    assert cell(first, "Bind") == []
    assert cell(second, "I") == ["delegate"]
    assert cell(second, "Bind") == ["colleague"]
    # both branches share the attribute and deontic
    assert cell(first, "A") == cell(second, "A") == ["enforcer"]
    assert links(first) == ["XOR:1.2"]
    assert links(second) == ["XOR:1.1"]


def test_nested_statement_rows_follow_their_host():
    result = expand(parse("A(farmer) D(must) I(comply) "
                          "Cac{A(inspector) I(visits [XOR] calls)}"), "123")
    assert ids_of(result) == ["123.1", "{123.1}.1", "{123.1}.2"]
    host = result.atoms[0]
    assert cell(host, "Cac") == ["{123.1}.1", "{123.1}.2"]
    sub1, sub2 = result.atoms[1:]
    assert cell(sub1, "I") == ["visits"]
    assert cell(sub2, "I") == ["calls"]
    assert links(sub1) == ["XOR:{123.1}.2"]
    assert links(sub2) == ["XOR:{123.1}.1"]


def test_nested_rows_repeat_per_host_atom():
    result = expand(parse(corpus.VIOLATION_V3))
    assert ids_of(result) == ["1.1", "{1.1}.1", "{1.1}.2",
                              "1.2", "{1.2}.1", "{1.2}.2"]
    host1, host2 = result.atoms[0], result.atoms[3]
    assert cell(host1, "I") == ["fine"]
    assert cell(host2, "I") == ["report"]
    assert links(host1) == ["AND:1.2"]
    assert cell(host1, "Cac") == ["{1.1}.1", "{1.1}.2"]
    assert cell(host2, "Cac") == ["{1.2}.1", "{1.2}.2"]


def test_nested_combination_rows_are_cross_linked():
    result = expand(parse(corpus.VIOLATION_V4))
    assert ids_of(result)[:4] == ["1.1", "{1.1}.1", "{1.1}.2", "{1.1}.3"]
    sub1, sub2, sub3 = result.atoms[1:4]
    # first branch holds the XOR choice, second branch the safety check
    assert links(sub1) == ["XOR:{1.1}.2", "AND:{1.1}.3"]
    assert links(sub2) == ["XOR:{1.1}.1", "AND:{1.1}.3"]
    assert links(sub3) == ["AND:{1.1}.1", "AND:{1.1}.2"]
    assert cell(sub3, "Cex") == ["safe"]


def test_annotations_on_cells_and_statements():
    result = expand(parse(corpus.ANNOTATED_STATEMENT))
    atom = result.atoms[0]
    assert atom.statement_annotations == (
        "statement-type=consequence", "another statement-level annotation")
    values = atom.cells["A"]
    assert values[0].annotation == "role=enforcer"
    assert values[0].rendered(include_annotations=True) == \
        "officer [role=enforcer]"


def test_annotations_dropped_below_logico():
    tree = parse(corpus.ANNOTATED_STATEMENT)
    result = expand(tree, "1", Level.EXTENDED)
    for atom in result.atoms:
        assert atom.statement_annotations == ()
        for values in atom.cells.values():
            assert all(v.annotation is None for v in values)


def test_core_expansion_collapses_nesting_to_readings():
    result = expand(parse(corpus.VIOLATION_V3), "9", Level.CORE)
    assert ids_of(result) == ["9.1", "9.2"]
    assert cell(result.atoms[0], "Cac") == [
        "If officer observes violation",
        "If officer is made aware of violation",
    ]


def test_core_flatten_equals_handwritten_inline_coding():
    flattened = filter_level(parse(corpus.VIOLATION_V3), Level.CORE)
    assert flattened == parse(corpus.VIOLATION_V2)


@pytest.mark.parametrize("text,count", corpus.EXPANSION_COUNTS)
def test_expansion_counts_match_oracle(text, count):
    tree = parse(text)
    assert oracles.top_level_count(tree) == count
    top = [a for a in expand(tree).atoms if not a.id.is_nested]
    assert len(top) == count


@pytest.mark.parametrize("text", corpus.ALL)
def test_expansion_agrees_with_enumeration_oracle(text):
    tree = parse(text)
    expected = oracles.top_level_count(tree)
    for level in Level:
        top = [a for a in expand(tree, "1", level).atoms
               if not a.id.is_nested]
        assert len(top) == expected


@pytest.mark.parametrize("text", corpus.ALL)
def test_degree_of_variability_is_top_level_atom_count(text):
    tree = parse(text)
    top = [a for a in expand(tree).atoms if not a.id.is_nested]
    assert degree_of_variability(tree) == len(top)


def test_filter_level_identity_and_idempotence():
    for text in corpus.ALL:
        tree = parse(text)
        assert filter_level(tree, Level.LOGICO) == tree
        ext = filter_level(tree, Level.EXTENDED)
        core = filter_level(tree, Level.CORE)
        assert filter_level(ext, Level.EXTENDED) == ext
        assert filter_level(core, Level.CORE) == core
        # projecting in two steps equals projecting in one
        assert filter_level(ext, Level.CORE) == core


def test_extended_output_has_no_annotations():
    for text in corpus.ALL:
        rendered = serialize(filter_level(parse(text), Level.EXTENDED))
        tokens, _ = scan(rendered)
        assert all(t.kind is not TokenKind.ANNOTATION for t in tokens)


def test_core_output_has_no_braces():
    for text in corpus.ALL:
        rendered = serialize(filter_level(parse(text), Level.CORE))
        assert "{" not in rendered
        assert "}" not in rendered
        assert parse(rendered)  # still valid


def test_reorder_conditions():
    tree = parse("A(farmer) D(must) I(submit) Cac(before March) "
                 "Cac(if notified)")
    moved = reorder_conditions(tree)
    codes = [c.symbol.code for c in moved.components()]
    assert codes == ["Cac", "Cac", "A", "D", "I"]
    texts = [c.content[0] for c in moved.components()[:2]]
    assert texts == ["before March", "if notified"]
    assert reorder_conditions(moved) == moved


def test_expansion_is_deterministic():
    tree = parse(corpus.VIOLATION_V6)
    a = expand(tree, "42")
    b = expand(tree, "42")
    assert a == b
