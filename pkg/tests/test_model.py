import copy
import hashlib

import pytest

from artemus.errors import (
    DanglingReference,
    DuplicateId,
    InvalidValue,
    MalformedJson,
    MissingField,
    MissingTranslation,
    SchemaVersionMismatch,
    UnexpectedField,
)
from artemus.model import (
    COLOUR_TOKENS,
    LANGUAGES,
    LEGEND_TAGS,
    NO_ACTION,
    SCHEMA_VERSION,
    BodyCategory,
    EdgeKind,
    LocalizedText,
    canonical_json_bytes,
    graph_hash,
    graph_to_doc,
    parse_graph,
    serialize_graph,
    text_for,
)

from builders import linear_graph, mk_edge, mk_graph, mk_node


def mutated(graph, fn):
    """Serialize a graph to a plain doc, let fn mutate it, return bytes."""
    doc = copy.deepcopy(graph_to_doc(graph))
    fn(doc)
    return canonical_json_bytes(doc)


class TestRoundTrip:
    def test_parse_serialize_parse_identity(self, housing, education):
        for graph in (housing, education):
            assert parse_graph(serialize_graph(graph)) == graph

    def test_serialization_is_stable(self, housing):
        assert serialize_graph(housing) == serialize_graph(parse_graph(serialize_graph(housing)))

    def test_canonical_bytes_properties(self, housing):
        raw = serialize_graph(housing)
        assert raw.endswith(b"\n")
        assert not raw.endswith(b"\n\n")
        # UTF-8, not ASCII escapes: Welsh text must survive readably
        assert "Cymru".encode() in raw
        assert b"\\u" not in raw

    def test_content_hash_is_sha256_of_bytes(self, housing):
        assert graph_hash(housing) == hashlib.sha256(serialize_graph(housing)).hexdigest()

    def test_equal_content_equal_hash(self, housing):
        again = parse_graph(serialize_graph(housing))
        assert graph_hash(again) == graph_hash(housing)


class TestParseErrors:
    def test_malformed_json(self):
        with pytest.raises(MalformedJson):
            parse_graph(b"{nope")

    def test_top_level_must_be_object(self):
        with pytest.raises(MalformedJson):
            parse_graph(b'"just a string"')

    def test_empty_object_reports_missing_schema_version(self):
        with pytest.raises(MissingField) as err:
            parse_graph(b"{}")
        assert err.value.subject == "schemaVersion"

    def test_wrong_schema_version(self, housing):
        raw = mutated(housing, lambda d: d.update(schemaVersion="artemus-graph/0"))
        with pytest.raises(SchemaVersionMismatch):
            parse_graph(raw)

    def test_unknown_top_level_field(self, housing):
        raw = mutated(housing, lambda d: d.update(surprise=True))
        with pytest.raises(UnexpectedField):
            parse_graph(raw)

    def test_unknown_node_field(self, housing):
        raw = mutated(housing, lambda d: d["nodes"][0].update(colour="red"))
        with pytest.raises(UnexpectedField):
            parse_graph(raw)

    def test_missing_node_field(self, housing):
        raw = mutated(housing, lambda d: d["nodes"][0].pop("summary"))
        with pytest.raises(MissingField):
            parse_graph(raw)

    def test_invalid_category(self, housing):
        raw = mutated(housing, lambda d: d["nodes"][0].update(category="Quango"))
        with pytest.raises(InvalidValue):
            parse_graph(raw)

    def test_invalid_edge_kind(self, housing):
        raw = mutated(housing, lambda d: d["edges"][0].update(kind="Petition"))
        with pytest.raises(InvalidValue):
            parse_graph(raw)

    @pytest.mark.parametrize("bad", [0, -3, True, 1.5, "21"])
    def test_time_limit_must_be_positive_int(self, housing, bad):
        raw = mutated(housing, lambda d: d["edges"][0].update(timeLimitDays=bad))
        with pytest.raises(InvalidValue):
            parse_graph(raw)

    @pytest.mark.parametrize("kind", ["Appeal", "JudicialReview"])
    def test_legal_claim_edges_require_disclaimer(self, housing, kind):
        def strip_disclaimer(doc):
            for edge in doc["edges"]:
                if edge["kind"] == kind:
                    edge["disclaimerRequired"] = False
                    return
            raise AssertionError(f"dataset has no {kind} edge")

        with pytest.raises(InvalidValue):
            parse_graph(mutated(housing, strip_disclaimer))

    def test_empty_entry_points_rejected(self, housing):
        raw = mutated(housing, lambda d: d.update(entryPoints=[]))
        with pytest.raises(InvalidValue):
            parse_graph(raw)

    def test_duplicate_node_id(self, housing):
        raw = mutated(housing, lambda d: d["nodes"].append(copy.deepcopy(d["nodes"][0])))
        with pytest.raises(DuplicateId):
            parse_graph(raw)

    def test_duplicate_edge_id(self, housing):
        raw = mutated(housing, lambda d: d["edges"].append(copy.deepcopy(d["edges"][0])))
        with pytest.raises(DuplicateId):
            parse_graph(raw)

    def test_edge_to_unknown_node(self, housing):
        raw = mutated(housing, lambda d: d["edges"][0].update(to="nowhere"))
        with pytest.raises(DanglingReference):
            parse_graph(raw)

    def test_group_member_unknown(self, housing):
        raw = mutated(housing, lambda d: d["exclusionGroups"][0]["members"].append("ghost-edge"))
        with pytest.raises(DanglingReference):
            parse_graph(raw)

    def test_rule_requires_unknown_edge(self, housing):
        raw = mutated(housing, lambda d: d["prerequisiteRules"][0]["requires"].append("ghost-edge"))
        with pytest.raises(DanglingReference):
            parse_graph(raw)

    def test_entry_to_unknown_node(self, housing):
        raw = mutated(housing, lambda d: d["entryPoints"][0].update(node="nowhere"))
        with pytest.raises(DanglingReference):
            parse_graph(raw)

    def test_structurally_missing_translation(self, housing):
        raw = mutated(housing, lambda d: d["nodes"][0]["title"].pop("cy"))
        with pytest.raises(MissingTranslation):
            parse_graph(raw)

    def test_non_string_translation(self, housing):
        raw = mutated(housing, lambda d: d["nodes"][0]["title"].update(cy=42))
        with pytest.raises(MissingTranslation):
            parse_graph(raw)

    def test_blank_translation_parses(self, housing):
        # present-but-blank is a validation concern (E004), not a parse one
        raw = mutated(housing, lambda d: d["nodes"][0]["title"].update(cy=""))
        graph = parse_graph(raw)
        assert graph.nodes[0].title.cy == ""

    def test_unknown_language_in_text(self, housing):
        raw = mutated(housing, lambda d: d["nodes"][0]["title"].update(fr="Mairie"))
        with pytest.raises(UnexpectedField):
            parse_graph(raw)

    def test_edge_requiring_itself(self, housing):
        def self_require(doc):
            rule = doc["prerequisiteRules"][0]
            rule["requires"] = [rule["edge"]]

        with pytest.raises(InvalidValue):
            parse_graph(mutated(housing, self_require))

    def test_duplicate_group_members(self, housing):
        def dupe_member(doc):
            members = doc["exclusionGroups"][0]["members"]
            members.append(members[0])

        with pytest.raises(InvalidValue):
            parse_graph(mutated(housing, dupe_member))

    def test_keywords_missing_language(self, housing):
        raw = mutated(housing, lambda d: d["entryPoints"][0]["keywords"].pop("cy"))
        with pytest.raises(MissingField):
            parse_graph(raw)


class TestTextAccess:
    def test_text_for_both_languages(self):
        text = LocalizedText(en="hello", cy="helo")
        assert text_for(text, "en") == "hello"
        assert text_for(text, "cy") == "helo"

    def test_text_for_rejects_other_languages(self):
        with pytest.raises(ValueError):
            text_for(LocalizedText(en="x", cy="y"), "fr")

    def test_no_fallback_between_languages(self, housing):
        # every piece of Welsh text differs from its English counterpart
        assert all(
            text_for(node.title, "cy") != text_for(node.title, "en") for node in housing.nodes
        )


class TestGraphShape:
    def test_outgoing_preserves_declaration_order(self, housing):
        ids = [e.id for e in housing.outgoing["la-homelessness"]]
        in_file = [e.id for e in housing.edges if e.source == "la-homelessness"]
        assert ids == in_file

    def test_terminal_nodes(self):
        graph = linear_graph()
        assert graph.is_terminal("end")
        assert not graph.is_terminal("start")

    def test_dead_end_is_terminal_without_outcome_category(self):
        graph = mk_graph(
            [mk_node("a"), mk_node("b", BodyCategory.OMBUDSMAN)],
            [mk_edge("e", "a", "b")],
        )
        assert graph.is_terminal("b")

    def test_colour_tokens_cover_all_categories_injectively(self):
        assert set(COLOUR_TOKENS) == set(BodyCategory)
        assert len(set(COLOUR_TOKENS.values())) == len(BodyCategory)

    def test_legend_tags_cover_all_kinds(self):
        assert set(LEGEND_TAGS) == set(EdgeKind)
        assert LEGEND_TAGS[EdgeKind.COMPLAINT] == "green"
        assert LEGEND_TAGS[EdgeKind.APPEAL] == "red"
        assert LEGEND_TAGS[EdgeKind.JUDICIAL_REVIEW] == "purple"

    def test_constants(self):
        assert SCHEMA_VERSION == "artemus-graph/1"
        assert LANGUAGES == ("en", "cy")
        assert NO_ACTION == "NO_ACTION"
