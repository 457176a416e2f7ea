// Acceptance harness: every stated contract gets one pass/fail line and a
// short measurement summary. Exit is nonzero when any required check fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ado/audit.hpp"
#include "ado/bench.hpp"
#include "ado/composite.hpp"
#include "ado/exact.hpp"
#include "ado/generators.hpp"
#include "ado/spanner.hpp"

using namespace ado;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] %2d  %-40s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph family_graph(const std::string& family, VertexId n, std::uint64_t seed) {
    // density defaults: gnm at 4n edges, tree with n/4 chords, square grid
    return generate_family(family, n, 0, 1, 100, seed);
}

// ---- 1: single-level oracles answer exactly ---------------------------------
void criterion_exact_single_level() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t checked = 0, wrong = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        VertexId n = static_cast<VertexId>(64 + (seed * 37) % 193);  // spread over [64, 256]
        Graph g = gen_gnm(n, 4ull * n, 1, 100, seed);
        auto o = build_tz_oracle(g, 1, seed + 900);
        auto exact = exact_oracle(g);
        for (VertexId u = 0; u < g.n(); ++u)
            for (VertexId v = u; v < g.n(); ++v) {
                ++checked;
                if (o.query(u, v) != exact.at(u, v)) ++wrong;
            }
    }
    double secs = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu pairs, %llu mismatches, %.1fs",
                  (unsigned long long)checked, (unsigned long long)wrong, secs);
    report(1, "single-level oracle is exact", wrong == 0 && secs < 60.0, buf);
}

// ---- 2: multi-level stretch window -------------------------------------------
void criterion_tz_stretch() {
    std::uint64_t violations = 0, pairs = 0;
    long double worst = 0.0L;
    const char* families[] = {"gnm", "grid", "tree-chords"};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::string family = families[seed % 3];
        VertexId n = static_cast<VertexId>(96 + (seed * 53) % 161);  // up to 256
        Graph g = family_graph(family, n, seed);
        for (std::uint32_t kappa : {2u, 3u, 4u}) {
            auto o = build_tz_oracle(g, kappa, seed + 50);
            auto rep = audit_oracle(o, g, PairSample::all(g.n()));
            pairs += rep.pairs_audited;
            violations += rep.violations.size();
            worst = std::max(worst, rep.max_stretch);
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu pairs, worst stretch %.3Lf, %llu violations",
                  (unsigned long long)pairs, worst, (unsigned long long)violations);
    report(2, "multi-level stretch in [1, 2k-1]", violations == 0, buf);
}

// ---- 3: sparsified-graph distances are exact inside every ball ---------------
void criterion_sparsified_exactness() {
    std::uint64_t checked = 0, wrong = 0;
    for (std::uint64_t gseed = 1; gseed <= 5; ++gseed) {
        VertexId n = static_cast<VertexId>(64 + gseed * 12);  // up to 124
        Graph g = gen_gnm(n, 3ull * n, 1, 60, gseed);
        auto exact = exact_oracle(g);
        for (std::uint64_t sseed = 1; sseed <= 20; ++sseed) {
            auto draw = sample_vertices(g, Rational(1, 2), sseed * 77 + gseed);
            const auto& sa = draw.assignment;
            Graph gs = build_sparsified(g, sa);
            for (VertexId u = 0; u < g.n(); ++u) {
                auto row = dijkstra(gs, u);
                for (VertexId v : ball_B_S(g, sa, u)) {
                    ++checked;
                    if (row.dist[v] != exact.at(u, v)) ++wrong;
                }
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "5 graphs x 20 samples, %llu ball pairs, %llu mismatches",
                  (unsigned long long)checked, (unsigned long long)wrong);
    report(3, "ball distances survive sparsification", wrong == 0 && checked > 0, buf);
}

// ---- 4: spanner stretch and expected size ------------------------------------
void criterion_spanner() {
    std::uint64_t violations = 0, pairs = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        VertexId n = static_cast<VertexId>(64 + (seed * 29) % 193);  // up to 256
        Graph g = gen_gnm(n, 5ull * n, 1, 100, seed + 10);
        auto dg = exact_oracle(g);
        for (std::uint32_t kp : {1u, 2u, 3u}) {
            auto h = build_spanner(g, kp, seed + 400);
            auto dh = exact_oracle(h.graph);
            for (VertexId u = 0; u < g.n(); ++u)
                for (VertexId v = u + 1; v < g.n(); ++v) {
                    ++pairs;
                    if (dh.at(u, v) < dg.at(u, v) ||
                        dh.at(u, v) > h.stretch() * dg.at(u, v))
                        ++violations;
                }
        }
    }

    // size: mean edge count over 50 seeds against 10 k' n^(1+1/k')
    bool size_ok = true;
    long double worst_ratio = 0.0L;
    const VertexId n = 128;
    for (std::uint32_t kp : {1u, 2u, 3u}) {
        long double total = 0.0L;
        for (std::uint64_t seed = 1; seed <= 50; ++seed)
            total += static_cast<long double>(
                build_spanner(gen_gnm(n, 8ull * n, 1, 100, seed), kp, seed).graph.m());
        long double mean = total / 50.0L;
        long double budget =
            10.0L * kp * std::pow((long double)n, 1.0L + 1.0L / kp);
        worst_ratio = std::max(worst_ratio, mean / budget);
        if (mean > budget) size_ok = false;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%llu pairs, %llu violations, worst size ratio %.3Lf",
                  (unsigned long long)pairs, (unsigned long long)violations, worst_ratio);
    report(4, "spanner stretch and mean size", violations == 0 && size_ok, buf);
}

// ---- 5: small-k composite stretch, all pairs ---------------------------------
void criterion_small_k() {
    std::uint64_t violations = 0, pairs = 0;
    const char* families[] = {"gnm", "grid", "tree-chords"};
    for (std::uint32_t k : {3u, 6u, 7u, 8u}) {
        for (const char* family : families) {
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                VertexId n = static_cast<VertexId>(128 + (seed * 41 + k * 13) % 385);  // <= 512
                Graph g = family_graph(family, n, seed * 31 + k);
                auto o = build_small_k(g, k, seed + 600);
                auto rep = audit_oracle(o, g, PairSample::all(g.n()));
                pairs += rep.pairs_audited;
                violations += rep.violations.size();
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "k in {3,6,7,8}, %llu pairs, %llu violations",
                  (unsigned long long)pairs, (unsigned long long)violations);
    report(5, "small-k composite within 2k-1 all-pairs", violations == 0, buf);
}

// ---- 6: near-linear composite stretch ----------------------------------------
void criterion_near_linear() {
    std::uint64_t violations = 0, pairs = 0;
    bool cert_ok = true;
    for (std::uint32_t k : {3u, 100u}) {  // smallest feasible split and a deep one
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            VertexId n = static_cast<VertexId>(512 + (seed * 301) % 1537);  // up to 2048
            Graph g = gen_gnm(n, 4ull * n, 1, 100, seed * 7 + k);
            auto o = build_near_linear(g, k, seed + 800);
            if (o.fallback) cert_ok = false;  // both k values must build natively
            if (k == 100 && (o.certificate != 191 || o.far_kappa != 11 || o.k_prime != 2))
                cert_ok = false;
            auto rep = audit_oracle(o, g, PairSample::random(g.n(), 100000, seed));
            pairs += rep.pairs_audited;
            violations += rep.violations.size();
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "k in {3,100}, %llu pairs, %llu violations",
                  (unsigned long long)pairs, (unsigned long long)violations);
    report(6, "near-linear composite within 2k-1", violations == 0 && cert_ok, buf);
}

// ---- 7: storage budgets --------------------------------------------------------
void criterion_size_budgets() {
    bool ok = true;
    long double worst = 0.0L;
    struct Cell { const char* kind; std::uint32_t k; };
    for (Cell cell : {Cell{"tz", 3}, Cell{"warmup", 2}, Cell{"small-k", 6},
                      Cell{"near-linear", 16}}) {
        const VertexId n = 256;
        long double total = 0.0L;
        bool within_all = true;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            Graph g = gen_gnm(n, 4ull * n, 1, 100, seed + 5);
            CompositeOracle o;
            std::string kind = cell.kind;
            if (kind == "tz") o = build_tz_oracle(g, cell.k, seed);
            else if (kind == "warmup") o = build_warmup(g, cell.k, Rational(1, 2), seed);
            else if (kind == "small-k") o = build_small_k(g, cell.k, seed);
            else o = build_near_linear(g, cell.k, seed);
            total += static_cast<long double>(o.stored_entries());
            AuditReport rep;
            audit_size(o, rep);  // folds in the restricted far-side budget
            within_all = within_all && rep.size_within_budget;
        }
        long double mean = total / 50.0L;
        long double budget =
            10.0L * cell.k * std::pow((long double)n, 1.0L + 1.0L / cell.k);
        worst = std::max(worst, mean / budget);
        if (mean > budget || !within_all) ok = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst mean/budget ratio %.3Lf over 50 seeds/kind", worst);
    report(7, "stored entries within 10 k n^(1+1/k)", ok, buf);
}

// ---- 8: sampling acceptance converges fast ------------------------------------
void criterion_sampling_rounds() {
    std::vector<std::uint32_t> rounds;
    bool all_accepted = true;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = gen_gnm(256, 1024, 1, 100, seed + 90);
        auto draw = sample_vertices(g, Rational(1, 2), seed);
        rounds.push_back(draw.rounds);
        all_accepted = all_accepted && draw.accepted;
    }
    std::sort(rounds.begin(), rounds.end());
    std::uint32_t median = rounds[rounds.size() / 2];
    char buf[128];
    std::snprintf(buf, sizeof buf, "median %u rounds, max %u, accepted=%s", median,
                  rounds.back(), all_accepted ? "all" : "NOT ALL");
    report(8, "sample window accepted quickly", median <= 4 && all_accepted, buf);
}

// ---- 9: determinism and serialization round-trip -------------------------------
void criterion_determinism() {
    Graph g = gen_gnm(300, 1500, 1, 100, 424);
    auto a = build_small_k(g, 6, 31);
    auto b = build_small_k(g, 6, 31);
    bool same_bytes = serialize(a) == serialize(b);

    save_oracle(a, "acceptance_roundtrip.oracle");
    auto c = load_oracle("acceptance_roundtrip.oracle");
    bool queries_match = true;
    std::mt19937_64 engine(99);
    for (int i = 0; i < 10000; ++i) {
        auto u = static_cast<VertexId>(engine() % g.n());
        auto v = static_cast<VertexId>(engine() % g.n());
        if (a.query(u, v) != c.query(u, v)) queries_match = false;
    }
    bool stable = serialize(c) == serialize(a);
    char buf[128];
    std::snprintf(buf, sizeof buf, "rebuild bytes equal=%d, 10000 queries equal=%d, restable=%d",
                  same_bytes, queries_match, stable);
    report(9, "deterministic build and round-trip", same_bytes && queries_match && stable, buf);
}

// ---- 10: build-time scaling via the bench harness (informational) -------------
void criterion_scaling() {
    // m ~ n^1.5 cells from 2^10 to 2^14; asymptotic constants are not
    // observable at these sizes, so only the fitted exponents are reported
    std::string scenario = R"({"pairs": 64, "cells": [)";
    bool first = true;
    for (int p = 10; p <= 14; ++p) {
        auto n = 1ull << p;
        auto m = static_cast<std::uint64_t>(std::pow((double)n, 1.5));
        for (const char* kind : {"tz", "small-k"}) {
            if (!first) scenario += ",";
            first = false;
            scenario += "{\"family\":\"gnm\",\"n\":" + std::to_string(n) +
                        ",\"aux\":" + std::to_string(m) + ",\"kind\":\"" + kind +
                        "\",\"k\":8,\"seed\":7}";
        }
    }
    scenario += "]}";
    auto out = bench_run(scenario);

    // pull the fitted exponents out of the summary for the one-line report
    // (keys inside each fit object are alphabetical: exponent before kind)
    std::string fits;
    std::size_t pos = 0;
    while ((pos = out.json_summary.find("\"exponent\":", pos)) != std::string::npos) {
        auto exp_start = pos + 12;
        auto exp_end = out.json_summary.find_first_of(",\n", exp_start);
        auto kind_pos = out.json_summary.find("\"kind\":", exp_end);
        auto kind_start = out.json_summary.find('"', kind_pos + 7) + 1;
        auto kind_end = out.json_summary.find('"', kind_start);
        if (!fits.empty()) fits += ", ";
        fits += out.json_summary.substr(kind_start, kind_end - kind_start) + " " +
                out.json_summary.substr(exp_start, exp_end - exp_start);
        pos = kind_end;
    }
    char buf[192];
    std::snprintf(buf, sizeof buf, "fitted build exponents (informational): %s", fits.c_str());
    report(10, "build-time growth comparison", out.ok, buf);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion_exact_single_level();
    criterion_tz_stretch();
    criterion_sparsified_exactness();
    criterion_spanner();
    criterion_small_k();
    criterion_near_linear();
    criterion_size_budgets();
    criterion_sampling_rounds();
    criterion_determinism();
    criterion_scaling();
    std::printf("%d criterion(s) failed, total %.1fs\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
