"""Smoke tests for the python bindings."""

import os
import sys
import tempfile

import ado


def check(cond, label):
    if not cond:
        print(f"FAIL {label}")
        sys.exit(1)
    print(f"ok   {label}")


def main():
    g = ado.Graph(3, [(0, 1, 1), (1, 2, 1)])
    check(g.n == 3 and g.m == 2, "graph construction")
    check(g.edge_weight(0, 1) == 1, "edge lookup")
    check(g.edge_weight(0, 2) == ado.INF_DIST, "missing edge is infinite")

    r = ado.generate("gnm", 96, 400, seed=11)
    check(r.n == 96 and r.m > 95, "generator")

    exact0 = ado.exact_distances(r, 0)
    check(len(exact0) == 96 and exact0[0] == 0, "dijkstra")

    tz = ado.build_tz(r, 1, 5)
    check(all(tz.query(0, v) == exact0[v] for v in range(96)), "single-level is exact")

    for name, o in [
        ("tz", ado.build_tz(r, 3, 5)),
        ("warmup", ado.build_warmup(r, 2, "1/2", 5)),
        ("small-k", ado.build_small_k(r, 6, 5)),
        ("near-linear", ado.build_near_linear(r, 12, 5)),
    ]:
        check(o.kind_name == name and not o.fallback, f"{name} build")
        report = ado.audit(o, r)
        check(report.ok() and report.size_within_budget, f"{name} audit")
        check(1.0 <= report.mean_stretch <= o.certificate, f"{name} stretch window")

    fallback = ado.build_near_linear(r, 4, 5)
    check(fallback.fallback and fallback.kind_name == "small-k", "near-linear fallback")

    o = ado.build_small_k(r, 6, 5)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "o.bin")
        o.save(path)
        back = ado.load_oracle(path)
        check(
            all(back.query(0, v) == o.query(0, v) for v in range(96)),
            "serialization round-trip",
        )

    h_edges = ado.spanner_edges(r, 2, 7)
    g_edges = {(u, v): w for u, v, w in r.edges()}
    check(
        all(g_edges.get((u, v)) == w for u, v, w in h_edges),
        "spanner is a subgraph",
    )

    print("python smoke passed")


if __name__ == "__main__":
    main()
