"""Regenerate the hand-reconstructed reference models in tests/data/references.

Usage: python tools/make_reference_models.py

The published reference models exist only as pictures, so these nets are
approximations built around the order-fulfillment business net:

  R2  same flow, "Check" renamed "Verify"            (near-identical)
  R4  same flow, "Pack" replaced by "Label"          (one modified task)
  R3  parallel "Invoice" and "Notify" after Confirm  (added parallel steps)
"""

from __future__ import annotations

from pathlib import Path

from procmatch.model_io import save_net
from procmatch.petri import PetriNet

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "references"


def order_flow(name: str, labels: dict[str, str]) -> PetriNet:
    """Place, Check, then XOR between [Confirm, Pack] and [Create, Receive, Ship]."""
    net = PetriNet(name)
    for p in ("start", "ordered", "decided", "confirmed", "requested", "received", "end"):
        net.add_place(p)
    steps = [
        ("place", "start", "ordered"),
        ("check", "ordered", "decided"),
        ("confirm", "decided", "confirmed"),
        ("pack", "confirmed", "end"),
        ("create", "decided", "requested"),
        ("receive", "requested", "received"),
        ("ship", "received", "end"),
    ]
    for tid, src, dst in steps:
        net.add_transition(tid, labels.get(tid, tid.capitalize()))
        net.add_arc(src, tid)
        net.add_arc(tid, dst)
    return net


def parallel_flow(name: str) -> PetriNet:
    net = PetriNet(name)
    for p in ("start", "ordered", "decided", "to_invoice", "to_notify", "invoiced",
              "notified", "requested", "received", "end"):
        net.add_place(p)
    transitions = {
        "place": (["start"], ["ordered"]),
        "check": (["ordered"], ["decided"]),
        "confirm": (["decided"], ["to_invoice", "to_notify"]),
        "invoice": (["to_invoice"], ["invoiced"]),
        "notify": (["to_notify"], ["notified"]),
        "pack": (["invoiced", "notified"], ["end"]),
        "create": (["decided"], ["requested"]),
        "receive": (["requested"], ["received"]),
        "ship": (["received"], ["end"]),
    }
    for tid, (inputs, outputs) in transitions.items():
        net.add_transition(tid, tid.capitalize())
        for p in inputs:
            net.add_arc(p, tid)
        for p in outputs:
            net.add_arc(tid, p)
    return net


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    save_net(order_flow("R2", {"check": "Verify"}), OUT / "r2.net.json")
    save_net(parallel_flow("R3"), OUT / "r3.net.json")
    save_net(order_flow("R4", {"pack": "Label"}), OUT / "r4.net.json")


if __name__ == "__main__":
    main()
