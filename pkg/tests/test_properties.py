"""Randomized invariants over generated statements and arbitrary text."""

import random

import gen
import oracles
from hypothesis import given, settings
from hypothesis import strategies as st

from igscript import (
    Level,
    SubStatementId,
    degree_of_variability,
    expand,
    filter_level,
    parse,
    serialize,
    tokenize,
    validate,
)
from igscript.lexer import TokenKind, UnterminatedBracket, scan
from igscript.model import ID_PATTERN
from igscript.tabular import TabularOptions, to_csv


def stmt_strategy(**kwargs):
    return st.integers(0, 2**32 - 1).map(
        lambda seed: gen.statement(random.Random(seed), **kwargs))


any_stmt = stmt_strategy()
core_stmt = stmt_strategy(level=Level.CORE)


@given(st.text())
def test_scan_is_lossless_and_total(text):
    tokens, _ = scan(text)
    assert "".join(text[t.start:t.end] for t in tokens) == text
    for prev, cur in zip(tokens, tokens[1:]):
        assert prev.end == cur.start


@given(st.text())
def test_tokenize_raises_only_the_documented_error(text):
    try:
        tokenize(text)
    except UnterminatedBracket as exc:
        assert 0 <= exc.position < len(text)
        assert text[exc.position] == "["


@given(st.text())
def test_validate_never_raises(text):
    report = validate(text)
    for issue in report.issues:
        assert 0 <= issue.position <= len(text)


@given(any_stmt)
def test_generated_statements_are_valid(text):
    assert validate(text).ok


@given(any_stmt)
def test_parse_serialize_round_trip(text):
    tree = parse(text)
    assert parse(serialize(tree)) == tree


@given(any_stmt)
def test_serialize_is_idempotent(text):
    once = serialize(parse(text))
    assert serialize(parse(once)) == once


@given(any_stmt)
def test_expansion_count_matches_oracle(text):
    tree = parse(text)
    expected = oracles.top_level_count(tree)
    top = [a for a in expand(tree).atoms if not a.id.is_nested]
    assert len(top) == expected


@given(any_stmt)
def test_dov_equals_top_level_atom_count(text):
    tree = parse(text)
    top = [a for a in expand(tree).atoms if not a.id.is_nested]
    assert degree_of_variability(tree) == len(top)
    assert degree_of_variability(tree) == \
        len(expand(tree, "1", Level.CORE).atoms)


@given(any_stmt, st.sampled_from(["123", "5", "stmt7"]))
def test_ids_are_well_formed_unique_and_dense(text, base):
    atoms = expand(parse(text), base).atoms
    rendered = [a.id.render() for a in atoms]
    assert len(set(rendered)) == len(rendered)
    for rid in rendered:
        assert ID_PATTERN.match(rid)
        assert SubStatementId.parse(rid).render() == rid
    top = [a.id for a in atoms if not a.id.is_nested]
    if len(top) == 1 and len(atoms) == 1:
        assert top[0].render() == base
    else:
        assert [t.render() for t in top] == \
            [f"{base}.{k}" for k in range(1, len(top) + 1)]


@given(any_stmt)
def test_linkage_is_symmetric_and_never_self(text):
    atoms = expand(parse(text)).atoms
    by_id = {a.id.render(): a for a in atoms}
    for atom in atoms:
        for op, other in atom.linkage:
            assert other.render() != atom.id.render()
            assert (op, atom.id) in by_id[other.render()].linkage


@given(any_stmt)
def test_every_csv_row_has_nineteen_fields(text):
    result = expand(parse(text))
    out = to_csv(result, TabularOptions(include_annotations=True))
    for line in out.splitlines():
        assert len(oracles.split_row(line)) == 19


@given(any_stmt)
def test_filter_composition_law(text):
    tree = parse(text)
    ext = filter_level(tree, Level.EXTENDED)
    core = filter_level(tree, Level.CORE)
    assert filter_level(ext, Level.CORE) == core
    assert filter_level(ext, Level.EXTENDED) == ext
    assert filter_level(core, Level.CORE) == core


@given(any_stmt)
def test_extended_drops_annotations_core_drops_braces(text):
    tree = parse(text)
    ext = serialize(filter_level(tree, Level.EXTENDED))
    tokens, _ = scan(ext)
    assert all(t.kind is not TokenKind.ANNOTATION for t in tokens)
    core = serialize(filter_level(tree, Level.CORE))
    assert "{" not in core and "}" not in core
    assert validate(core).ok


@given(core_stmt)
def test_core_statements_are_level_stable(text):
    tree = parse(text)
    assert filter_level(tree, Level.CORE) == tree


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_id_render_parse_round_trip(seed):
    rng = random.Random(seed)
    sid = SubStatementId(rng.choice(["1", "650", "case9"]))
    for _ in range(rng.randint(0, 5)):
        if rng.random() < 0.5:
            sid = sid.child(rng.randint(1, 9))
        else:
            sid = sid.nested(rng.randint(1, 9))
    assert SubStatementId.parse(sid.render()) == sid
