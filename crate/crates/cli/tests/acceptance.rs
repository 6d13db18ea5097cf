//! Acceptance suite. Run with `cargo test -p mixcage-cli --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use mixcage::construction::{bipartition_side, build_h};
use mixcage::corpus::{cross_check, oracle_corpus, DEFAULT_SEED};
use mixcage::field::{FieldContext, FieldElement, PrimePower};
use mixcage::geometry::{all_parts, build_projective_incidence_graph, build_semiplane_l, part_of};
use mixcage::graph::{
    directed_girth, girth_oracle, is_mixed_cycle, mixed_girth, shortest_cycle, Girth,
};
use serde_json::Value;

const TABLE_Q: [u64; 8] = [7, 8, 9, 11, 13, 16, 17, 19];
const ORDERS: [u64; 8] = [192, 252, 320, 480, 672, 1020, 1152, 1440];
const Z_R: [(u64, u64); 8] = [
    (1, 7),
    (2, 8),
    (2, 9),
    (2, 11),
    (3, 13),
    (4, 16),
    (4, 17),
    (4, 19),
];
/// Directed girth of every part, measured on the odd orders 7, 9, 11, 13, 17, 19.
const ODD_PART_GIRTHS: [(u64, usize); 6] = [(7, 12), (9, 6), (11, 8), (13, 6), (17, 6), (19, 6)];

fn pp(n: u64) -> PrimePower {
    PrimePower::new(n).unwrap()
}

fn cli(args: &[&str]) -> (i32, Vec<u8>, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mixcage").chain(args.iter().copied());
    let code = mixcage_cli::run(argv, &mut out, &mut err);
    (code, out, String::from_utf8(err).unwrap())
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !($cond) {
            return Err(format!($($fmt)+));
        }
    };
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    for ((&q, &order), &(z, r)) in TABLE_Q.iter().zip(&ORDERS).zip(&Z_R) {
        let (code, out, err) = cli(&["verify", "--q", &q.to_string(), "--json"]);
        ensure!(code == 0, "verify --q {q} exited {code}: {err}");
        let report: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
        let got_order = report["graph"]["order"].as_u64();
        let got_zr = (report["z"].as_u64(), report["r"].as_u64());
        ensure!(
            got_order == Some(order),
            "q={q}: order {got_order:?}, want {order}"
        );
        ensure!(
            got_zr == (Some(z), Some(r)),
            "q={q}: (z,r) = {got_zr:?}, want ({z},{r})"
        );
        let regular = &report["graph"]["regularity"];
        ensure!(
            regular["status"] == "regular" && regular["z"] == z && regular["r"] == r,
            "q={q}: regularity {regular}"
        );
        ensure!(report["claims_pass"] == true, "q={q}: claims failed");
    }
    let secs = start.elapsed().as_secs_f64();
    let within_budget = secs < 60.0;
    ensure!(within_budget, "took {secs:.1}s sequentially");
    Ok(format!(
        "8 orders and (z,r) pairs exact, {secs:.1}s sequential"
    ))
}

fn girth_equality() -> Outcome {
    for q in TABLE_Q {
        let c = build_h(pp(q), false).map_err(|e| e.to_string())?;
        let cycle = shortest_cycle(&c.graph, Some(7)).ok_or(format!("q={q}: no cycle up to 7"))?;
        ensure!(
            cycle.len() == 6,
            "q={q}: shortest cycle has length {}",
            cycle.len()
        );
        ensure!(
            is_mixed_cycle(&c.graph, &cycle),
            "q={q}: witness is not a mixed cycle"
        );
        ensure!(
            mixed_girth(&c.graph, Some(5)) == Girth::Acyclic,
            "q={q}: a cycle of length <= 5 exists"
        );
    }
    Ok("6-cycle exhibited and no cycle of length <= 5 for all 8 orders".into())
}

fn part_directed_girth() -> Outcome {
    let mut measured = Vec::new();
    for q in TABLE_Q {
        let c = build_h(pp(q), false).map_err(|e| e.to_string())?;
        let mut girths = BTreeSet::new();
        for part in all_parts(&c.ctx) {
            let sub = c.circulant_part(part).map_err(|e| e.to_string())?;
            let g = directed_girth(&sub);
            let oracle = girth_oracle(&sub.to_indexed()).map_err(|e| e.to_string())?;
            ensure!(
                g == oracle,
                "q={q} {}: bfs {g} vs oracle {oracle}",
                part.label(&c.ctx)
            );
            girths.insert(g.value().ok_or(format!("q={q}: acyclic part"))?);
        }
        ensure!(girths.len() == 1, "q={q}: parts differ {girths:?}");
        let g = *girths.first().unwrap();
        if q % 2 == 0 {
            ensure!(g == 6, "q={q}: part directed girth {g}, want exactly 6");
        } else {
            ensure!(g >= 6, "q={q}: part directed girth {g} < 6");
            let want = ODD_PART_GIRTHS.iter().find(|(o, _)| *o == q).unwrap().1;
            ensure!(
                g == want,
                "q={q}: part directed girth {g}, measured table says {want}"
            );
        }
        measured.push(format!("{q}:{g}"));
    }
    Ok(format!("part directed girths {}", measured.join(" ")))
}

fn oracle_equivalence() -> Outcome {
    let corpus = oracle_corpus(5, DEFAULT_SEED);
    let random = corpus
        .iter()
        .filter(|e| e.name.starts_with("random"))
        .count();
    ensure!(random == 50, "{random} random graphs");
    for name in ["semiplane q=4", "semiplane q=5"] {
        ensure!(corpus.iter().any(|e| e.name == name), "corpus lacks {name}");
    }
    for entry in &corpus {
        let check = cross_check(entry).map_err(|e| e.to_string())?;
        ensure!(
            check.agrees(),
            "{}: bfs {} vs oracle {}",
            check.name,
            check.bfs,
            check.oracle
        );
    }
    Ok(format!("{} graphs agree", corpus.len()))
}

fn incidence_properties() -> Outcome {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let ctx = FieldContext::for_order(q).map_err(|e| e.to_string())?;
        let n = q as usize;
        let plane = build_projective_incidence_graph(&ctx);
        ensure!(
            plane.order() == 2 * n * n + 2 * n + 2,
            "plane q={q}: order {}",
            plane.order()
        );
        ensure!(
            plane.is_totally_regular(0, n + 1).holds(),
            "plane q={q}: not regular"
        );
        ensure!(
            mixed_girth(&plane, None) == Girth::Finite(6),
            "plane q={q}: girth"
        );
        let semi = build_semiplane_l(&ctx);
        ensure!(
            semi.order() == 2 * n * n - 2,
            "semiplane q={q}: order {}",
            semi.order()
        );
        ensure!(
            semi.is_totally_regular(0, n).holds(),
            "semiplane q={q}: not regular"
        );
        ensure!(
            mixed_girth(&semi, None) == Girth::Finite(6),
            "semiplane q={q}: girth"
        );
    }
    Ok("plane and semiplane orders, degrees and girth 6 for q in 2,3,4,5,7,8,9".into())
}

fn structural_invariants() -> Outcome {
    for q in TABLE_Q {
        let c = build_h(pp(q), false).map_err(|e| e.to_string())?;
        let s = c.structure();
        ensure!(s.simple, "q={q}: simplicity");
        ensure!(
            c.graph.bipartition_check(bipartition_side),
            "q={q}: bipartition"
        );
        ensure!(s.part_matchings, "q={q}: part matchings");
        ensure!(
            s.linf_pinf_edges == 0,
            "q={q}: {} Linf-Pinf edges",
            s.linf_pinf_edges
        );
        ensure!(s.edges_within_copy, "q={q}: edge between copies");
        let arcs_local = c
            .graph
            .arcs()
            .all(|(u, v)| u.copy != v.copy && part_of(u) == part_of(v));
        ensure!(s.arcs_local && arcs_local, "q={q}: arc leaves its part");
    }
    Ok("simple, bipartite, matchings, no Linf-Pinf edges, local arcs for all 8 orders".into())
}

fn field_layer() -> Outcome {
    let mut count = 0;
    for n in 2..=64u64 {
        let Ok(ctx) = FieldContext::for_order(n) else {
            continue;
        };
        count += 1;
        let order = ctx
            .multiplicative_order(ctx.xi())
            .map_err(|e| e.to_string())?;
        ensure!(order == n as u32 - 1, "GF({n}): xi has order {order}");
        let mut logs = HashSet::new();
        for a in ctx.elements().filter(|a| !a.is_zero()) {
            let e = ctx.log(a).map_err(|e| e.to_string())?;
            ensure!(ctx.exp(e) == a, "GF({n}): exp(log a) != a");
            logs.insert(e);
        }
        ensure!(logs.len() == n as usize - 1, "GF({n}): logs not distinct");
    }
    let gf8 = FieldContext::for_order(8).map_err(|e| e.to_string())?;
    ensure!(
        gf8.modulus().to_string() == "x^3 + x + 1",
        "GF(8) modulus {}",
        gf8.modulus()
    );
    let alpha = gf8.from_coefficients(&[0, 1]).map_err(|e| e.to_string())?;
    ensure!(gf8.xi() == alpha, "GF(8) xi is {}", gf8.render(gf8.xi()));
    ensure!(alpha != FieldElement::ONE, "alpha collapsed to 1");
    Ok(format!(
        "{count} fields up to 64 verified, GF(8) = Z2[x]/(x^3 + x + 1) with alpha primitive"
    ))
}

fn determinism() -> Outcome {
    let (c1, a, _) = cli(&["construct", "--q", "13", "--format", "json"]);
    let (c2, b, _) = cli(&["construct", "--q", "13", "--format", "json"]);
    ensure!(c1 == 0 && c2 == 0, "construct exited {c1}/{c2}");
    ensure!(!a.is_empty() && a == b, "outputs differ");
    Ok(format!("two runs byte-identical ({} bytes)", a.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("table reproduction", table_reproduction),
        ("girth equality", girth_equality),
        ("part directed girth", part_directed_girth),
        ("oracle equivalence", oracle_equivalence),
        ("incidence graph properties", incidence_properties),
        ("structural invariants", structural_invariants),
        ("field layer", field_layer),
        ("determinism", determinism),
    ];
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {} {name}: {detail}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
