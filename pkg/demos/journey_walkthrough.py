"""Walk the bundled housing graph the way the UI would.

Run with: python3 demos/journey_walkthrough.py

Prints each decision point, takes the review-then-court route, shows the
ombudsman door closing, then rewinds and takes it instead.
"""
from artemus import NO_ACTION, options, rewind, start, step
from artemus.datasets import load_bundled


def show(graph, journey, heading):
    print(f"\n== {heading} ==")
    trail = " -> ".join(s.chosen for s in journey.steps) or "(fresh)"
    print(f"steps so far: {trail}")
    if journey.concluded:
        print("journey has concluded")
        return
    for option in options(graph, journey):
        mark = "open  " if option.enabled else "closed"
        line = f"  [{mark}] {option.choice:24} {option.label.en}"
        if option.time_limit_days is not None:
            line += f"  ({option.time_limit_days} days)"
        print(line)
        if option.reason is not None:
            blockers = ", ".join(option.reason.blocking_ids)
            print(f"           why closed: {option.reason.code} via {blockers}")
            print(f"           {option.reason.explanation.en}")


def main():
    graph = load_bundled("housing")
    print(graph.title.en)
    print(graph.disclaimer.en)

    journey = start(graph, "homelessness-entry", "en")
    show(graph, journey, "at the local authority decision")

    journey = step(graph, journey, "reconsider")
    show(graph, journey, "after asking for a review")

    journey = step(graph, journey, "county-appeal")
    show(graph, journey, "after appealing to the county court")

    print("\nThe ombudsman option closed when the court route was taken.")
    print("Rewinding one step to keep that door open instead...")

    journey = rewind(graph, journey, 1)
    journey = step(graph, journey, "ombudsman-from-review")
    show(graph, journey, "after complaining to the ombudsman")

    print("\nThe same walk again, concluded by choosing to stop:")
    journey = start(graph, "homelessness-entry", "en")
    journey = step(graph, journey, "reconsider")
    journey = step(graph, journey, NO_ACTION)
    show(graph, journey, "stopped after the review")
    for index, done in enumerate(journey.steps):
        print(f"  block {index}: at {done.at_node}, chose {done.chosen}")


if __name__ == "__main__":
    main()
