import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artemus.errors import (
    ChoiceNotEnabled,
    GraphMismatch,
    IndexOutOfRange,
    InvalidPrefix,
    InvalidValue,
    JourneyConcluded,
    MissingField,
    SchemaVersionMismatch,
    UnexpectedField,
    UnknownEntryPoint,
    UnpublishableGraph,
)
from artemus.journey import (
    ALREADY_TAKEN_EXPLANATION,
    NO_ACTION_EXPLANATION,
    NO_ACTION_LABEL,
    current_node,
    journey_from_doc,
    journey_to_bytes,
    journey_to_doc,
    options,
    rewind,
    start,
    step,
    visited_edges,
)
from artemus.model import NO_ACTION, BodyCategory, EdgeKind
from artemus.validation import is_publishable

from builders import lt, mk_edge, mk_graph, mk_node, mk_rule, mk_group


def walk(graph, entry, lang, choices):
    journey = start(graph, entry, lang)
    for choice in choices:
        journey = step(graph, journey, choice)
    return journey


def revisit_graph(groups=()):
    """a <-> b with a separate way out; lets an edge be offered twice."""
    nodes = [mk_node("a"), mk_node("b"), mk_node("end", BodyCategory.OUTCOME)]
    edges = [
        mk_edge("e1", "a", "b"),
        mk_edge("e2", "a", "b"),
        mk_edge("back", "b", "a"),
        mk_edge("fin", "a", "end", EdgeKind.SIGNPOST),
    ]
    return mk_graph(nodes, edges, groups=groups)


class TestStart:
    def test_fresh_journey_shape(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        assert journey.graph_id == "housing"
        assert journey.graph_hash == housing.content_hash
        assert journey.language == "en"
        assert journey.entry_point_id == "homelessness-entry"
        assert journey.steps == ()
        assert not journey.concluded

    def test_welsh_journeys_start_too(self, housing):
        assert start(housing, "homelessness-entry", "cy").language == "cy"

    def test_unknown_entry(self, housing):
        with pytest.raises(UnknownEntryPoint):
            start(housing, "no-such-entry", "en")

    def test_unsupported_language(self, housing):
        with pytest.raises(InvalidValue):
            start(housing, "homelessness-entry", "fr")

    def test_unpublishable_graph_refused(self, housing):
        blanked = dataclasses.replace(
            housing,
            nodes=(dataclasses.replace(housing.nodes[0], title=lt("fine", " ")),) + housing.nodes[1:],
        )
        assert not is_publishable(blanked)
        with pytest.raises(UnpublishableGraph):
            start(blanked, "homelessness-entry", "en")


class TestOptions:
    def test_entry_options_in_declaration_order(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        produced = options(housing, journey)
        assert [(o.choice, o.enabled) for o in produced] == [
            ("reconsider", True),
            ("county-appeal-direct", False),
            ("ombudsman-complaint", True),
            ("get-advice", True),
            (NO_ACTION, True),
        ]

    def test_option_carries_edge_content(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", "county-appeal"])
        by_choice = {o.choice: o for o in options(housing, journey)}
        jr = by_choice["jr-admin-court"]
        assert jr.time_limit_days == 90
        assert jr.pre_action_protocol
        assert jr.disclaimer_required
        assert jr.label == housing.edges_by_id["jr-admin-court"].label
        assert jr.explanation == housing.edges_by_id["jr-admin-court"].explanation

    def test_no_action_option_is_synthesized(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        last = options(housing, journey)[-1]
        assert last.choice == NO_ACTION
        assert last.enabled
        assert last.reason is None
        assert last.label == NO_ACTION_LABEL
        assert last.explanation == NO_ACTION_EXPLANATION
        assert last.time_limit_days is None

    def test_prerequisite_reason(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        blocked = {o.choice: o for o in options(housing, journey)}["county-appeal-direct"]
        assert blocked.reason.code == "PrerequisiteUnmet"
        assert blocked.reason.blocking_ids == ("reconsider",)
        assert "reconsider" in blocked.reason.explanation.en

    def test_exclusion_reason_names_the_traversed_member(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", "county-appeal"])
        blocked = {o.choice: o for o in options(housing, journey)}["ombudsman-from-court"]
        assert blocked.reason.code == "ExcludedBy"
        assert blocked.reason.blocking_ids == ("county-appeal",)
        assert "usually" in blocked.reason.explanation.en

    def test_concluded_journey_has_no_options(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["get-advice"])
        assert journey.concluded
        with pytest.raises(JourneyConcluded):
            options(housing, journey)

    def test_foreign_graph_rejected(self, housing, education):
        journey = start(education, "permanent-exclusion-entry", "en")
        with pytest.raises(GraphMismatch):
            options(housing, journey)


class TestReasonPrecedence:
    def test_revisited_edge_excludes_itself(self):
        graph = revisit_graph()
        journey = walk(graph, "a-entry", "en", ["e1", "back"])
        assert current_node(graph, journey) == "a"
        blocked = {o.choice: o for o in options(graph, journey)}["e1"]
        assert blocked.reason.code == "ExcludedBy"
        assert blocked.reason.blocking_ids == ("e1",)
        assert blocked.reason.explanation == ALREADY_TAKEN_EXPLANATION

    def test_parallel_edge_unaffected_by_siblings(self):
        graph = revisit_graph()
        journey = walk(graph, "a-entry", "en", ["e1", "back"])
        assert {o.choice: o.enabled for o in options(graph, journey)}["e2"] is True

    def test_already_taken_beats_group_exclusion_on_forged_state(self):
        # a state where both reasons apply cannot be walked into (taking
        # the second group member would have been refused), but options()
        # accepts any node-coherent document, so pin the precedence anyway
        graph = revisit_graph(groups=[mk_group("g", "e1", "back")])
        from artemus.journey import JourneyDoc, Step
        from artemus.model import graph_hash

        forged = JourneyDoc(
            graph_id=graph.id,
            graph_hash=graph_hash(graph),
            language="en",
            entry_point_id="a-entry",
            steps=(Step("a", "e1"), Step("b", "back")),
            concluded=False,
        )
        blocked = {o.choice: o for o in options(graph, forged)}["e1"]
        assert blocked.reason.blocking_ids == ("e1",)
        assert blocked.reason.explanation == ALREADY_TAKEN_EXPLANATION

    def test_prerequisite_blocking_ids_in_requires_order(self):
        nodes = [mk_node("a"), mk_node("b"), mk_node("end", BodyCategory.OUTCOME)]
        edges = [
            mk_edge("e1", "a", "b"),
            mk_edge("x", "b", "a"),
            mk_edge("e2", "a", "end", EdgeKind.SIGNPOST),
        ]
        graph = mk_graph(nodes, edges, rules=[mk_rule("e2", "e1", "x")])
        journey = start(graph, "a-entry", "en")
        blocked = {o.choice: o for o in options(graph, journey)}["e2"]
        assert blocked.reason.code == "PrerequisiteUnmet"
        assert blocked.reason.blocking_ids == ("e1", "x")
        # satisfy both prerequisites and the gate opens
        journey = walk(graph, "a-entry", "en", ["e1", "x"])
        assert {o.choice: o.enabled for o in options(graph, journey)}["e2"] is True


class TestStep:
    def test_step_moves_and_records(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider"])
        assert current_node(housing, journey) == "la-review"
        assert [(s.at_node, s.chosen) for s in journey.steps] == [("la-homelessness", "reconsider")]
        assert visited_edges(journey) == {"reconsider"}

    def test_step_to_terminal_concludes(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["get-advice"])
        assert journey.concluded

    def test_no_action_concludes_anywhere(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", NO_ACTION])
        assert journey.concluded
        assert journey.steps[-1].chosen == NO_ACTION
        assert visited_edges(journey) == {"reconsider"}

    def test_disabled_choice_raises_with_reason(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        with pytest.raises(ChoiceNotEnabled) as err:
            step(housing, journey, "county-appeal-direct")
        assert err.value.reason.code == "PrerequisiteUnmet"

    def test_unknown_choice_raises_without_reason(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        with pytest.raises(ChoiceNotEnabled) as err:
            step(housing, journey, "teleport")
        assert err.value.reason is None

    def test_step_after_conclusion(self, housing):
        journey = walk(housing, "homelessness-entry", "en", [NO_ACTION])
        with pytest.raises(JourneyConcluded):
            step(housing, journey, "reconsider")

    def test_fixed_term_exclusion_cannot_reach_panel(self, education):
        journey = walk(education, "fixed-term-long-entry", "en", ["gb-review-long"])
        blocked = {o.choice: o for o in options(education, journey)}["panel-appeal"]
        assert not blocked.enabled
        assert blocked.reason.code == "PrerequisiteUnmet"
        assert blocked.reason.blocking_ids == ("gb-review-perm",)


class TestRewind:
    def test_rewind_reopens_excluded_route(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", "county-appeal"])
        enabled = {o.choice: o.enabled for o in options(housing, journey)}
        assert enabled["ombudsman-from-court"] is False
        rewound = rewind(housing, journey, 1)
        assert current_node(housing, rewound) == "la-review"
        enabled = {o.choice: o.enabled for o in options(housing, rewound)}
        assert enabled["ombudsman-from-review"] is True

    def test_rewind_zero_equals_fresh_start(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", "county-appeal"])
        assert rewind(housing, journey, 0) == start(housing, "homelessness-entry", "en")

    def test_rewind_full_length_is_identity(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", NO_ACTION])
        assert rewind(housing, journey, 2) == journey

    def test_rewind_past_no_action_reopens(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", NO_ACTION])
        rewound = rewind(housing, journey, 1)
        assert not rewound.concluded
        assert [o.choice for o in options(housing, rewound)][-1] == NO_ACTION

    @pytest.mark.parametrize("keep", [-1, 3, 99])
    def test_rewind_bounds(self, housing, keep):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", "county-appeal"])
        with pytest.raises(IndexOutOfRange):
            rewind(housing, journey, keep)


class TestReplayVerification:
    def test_current_node_rejects_wrong_at_node(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider"])
        forged = dataclasses.replace(
            journey, steps=(dataclasses.replace(journey.steps[0], at_node="county-court"),)
        )
        with pytest.raises(InvalidPrefix):
            current_node(housing, forged)

    def test_current_node_rejects_continuation_after_no_action(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider"])
        from artemus.journey import Step

        forged = dataclasses.replace(
            journey,
            steps=(Step("la-homelessness", NO_ACTION), Step("la-homelessness", "reconsider")),
        )
        with pytest.raises(InvalidPrefix):
            current_node(housing, forged)

    def test_current_node_rejects_detached_edge(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider"])
        forged = dataclasses.replace(
            journey, steps=(dataclasses.replace(journey.steps[0], chosen="coa-appeal"),)
        )
        with pytest.raises(InvalidPrefix):
            current_node(housing, forged)


class TestJourneyDocuments:
    def test_doc_round_trip(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider", "county-appeal"])
        assert journey_from_doc(housing, journey_to_doc(journey)) == journey

    def test_canonical_bytes_deterministic(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider"])
        assert journey_to_bytes(journey) == journey_to_bytes(
            journey_from_doc(housing, journey_to_doc(journey))
        )

    def test_rewind_zero_then_replay_is_byte_identical(self, housing):
        choices = ["reconsider", "county-appeal", "coa-appeal"]
        original = walk(housing, "homelessness-entry", "en", choices)
        fresh = rewind(housing, original, 0)
        for choice in choices:
            fresh = step(housing, fresh, choice)
        assert journey_to_bytes(fresh) == journey_to_bytes(original)

    def test_unknown_field_rejected(self, housing):
        journey = start(housing, "homelessness-entry", "en")
        doc = journey_to_doc(journey)
        doc["extra"] = 1
        with pytest.raises(UnexpectedField):
            journey_from_doc(housing, doc)

    def test_missing_field_rejected(self, housing):
        doc = journey_to_doc(start(housing, "homelessness-entry", "en"))
        del doc["language"]
        with pytest.raises(MissingField):
            journey_from_doc(housing, doc)

    def test_wrong_schema_version(self, housing):
        doc = journey_to_doc(start(housing, "homelessness-entry", "en"))
        doc["schemaVersion"] = "artemus-journey/0"
        with pytest.raises(SchemaVersionMismatch):
            journey_from_doc(housing, doc)

    def test_wrong_language(self, housing):
        doc = journey_to_doc(start(housing, "homelessness-entry", "en"))
        doc["language"] = "de"
        with pytest.raises(InvalidValue):
            journey_from_doc(housing, doc)

    def test_stale_hash_rejected(self, housing):
        doc = journey_to_doc(start(housing, "homelessness-entry", "en"))
        doc["graphHash"] = "0" * 64
        with pytest.raises(GraphMismatch):
            journey_from_doc(housing, doc)

    def test_forged_steps_rejected(self, housing):
        doc = journey_to_doc(start(housing, "homelessness-entry", "en"))
        doc["steps"] = [{"atNode": "la-homelessness", "chosen": "county-appeal-direct"}]
        with pytest.raises(InvalidPrefix):
            journey_from_doc(housing, doc)

    def test_forged_concluded_flag_rejected(self, housing):
        doc = journey_to_doc(start(housing, "homelessness-entry", "en"))
        doc["concluded"] = True
        with pytest.raises(InvalidPrefix):
            journey_from_doc(housing, doc)

    def test_forged_at_node_rejected(self, housing):
        journey = walk(housing, "homelessness-entry", "en", ["reconsider"])
        doc = journey_to_doc(journey)
        doc["steps"][0]["atNode"] = "county-court"
        with pytest.raises(InvalidPrefix):
            journey_from_doc(housing, doc)


ENTRY_BY_GRAPH = {
    "housing": ["homelessness-entry"],
    "education": ["permanent-exclusion-entry", "fixed-term-long-entry", "fixed-term-short-entry"],
}


class TestWalkProperties:
    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_rewind_prefix_equals_fresh_walk(self, housing, education, data):
        graph = data.draw(st.sampled_from([housing, education]), label="graph")
        entry = data.draw(st.sampled_from(ENTRY_BY_GRAPH[graph.id]), label="entry")
        journey = start(graph, entry, "en")
        chosen = []
        while not journey.concluded and len(chosen) < 6:
            enabled = [o.choice for o in options(graph, journey) if o.enabled]
            choice = data.draw(st.sampled_from(enabled), label="choice")
            journey = step(graph, journey, choice)
            chosen.append(choice)
        keep = data.draw(st.integers(min_value=0, max_value=len(journey.steps)), label="keep")
        rewound = rewind(graph, journey, keep)
        replayed = walk(graph, entry, "en", chosen[:keep])
        assert journey_to_bytes(rewound) == journey_to_bytes(replayed)

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_every_decision_point_offers_exactly_one_no_action(self, housing, education, data):
        graph = data.draw(st.sampled_from([housing, education]), label="graph")
        entry = data.draw(st.sampled_from(ENTRY_BY_GRAPH[graph.id]), label="entry")
        journey = start(graph, entry, "en")
        while not journey.concluded:
            produced = options(graph, journey)
            no_action = [o for o in produced if o.choice == NO_ACTION]
            assert len(no_action) == 1
            assert produced[-1] is no_action[0]
            assert no_action[0].enabled
            choice = data.draw(
                st.sampled_from([o.choice for o in produced if o.enabled]), label="choice"
            )
            journey = step(graph, journey, choice)
