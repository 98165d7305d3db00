//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any failed. Set `APEXION_EXTENDED=1` to add the order-10
//! table row.

mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use apexion::apex::{apex_vertices, classify_apex};
use apexion::canon::canonical_form;
use apexion::enumerate::{enumerate_all, for_each_graph, random_graph, EnumSpec};
use apexion::graph6;
use apexion::minor::{has_k6_minor, has_minor, minor_oracle, BranchDecomposition};
use apexion::mmna::{is_mmna, mmna_filter};
use apexion::named;
use apexion::pipeline::{audit::audit_sample, k6_audit, Cascade, CascadeConfig};
use apexion::planarity::is_planar;
use apexion::transforms::{dy_closure, ClosureCaps};
use apexion::SmallGraph;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sets_of(model: &BranchDecomposition) -> Vec<Vec<usize>> {
    model.sets.iter().map(|s| s.iter().collect()).collect()
}

fn table_row(graphs: &[SmallGraph], n: usize) -> BTreeMap<usize, u64> {
    let mut row = BTreeMap::new();
    for g in graphs.iter().filter(|g| g.order() == n) {
        *row.entry(g.size()).or_default() += 1;
    }
    row
}

fn cascade_row(n: usize) -> Result<Vec<SmallGraph>, String> {
    let max_size = (4 * n - 10).max(15);
    let spec = EnumSpec::new(n)
        .sizes((3 * n).div_ceil(2), max_size)
        .min_degree(3);
    let mut cascade = Cascade::new(CascadeConfig::default()).map_err(|e| e.to_string())?;
    for_each_graph(&spec, |g| cascade.add_seed(&g)).map_err(|e| e.to_string())?;
    let report = cascade.run().map_err(|e| e.to_string())?;
    ensure(report.complete, || format!("n={n}: cascade incomplete"))?;
    Ok(report.mmna)
}

fn petersen_family(emitted: &mut Vec<SmallGraph>) -> Outcome {
    let family = dy_closure(&[named::complete(6)], ClosureCaps::default());
    ensure(family.len() == 7, || {
        format!("{} graphs, expected 7", family.len())
    })?;
    ensure(family.iter().all(|g| g.size() == 15), || {
        "size other than 15".into()
    })?;
    let mut orders: Vec<usize> = family.iter().map(|g| g.order()).collect();
    orders.sort_unstable();
    ensure(orders == [6, 7, 7, 8, 8, 9, 10], || {
        format!("orders {orders:?}")
    })?;
    ensure(
        family
            .iter()
            .any(|g| common::brute_isomorphic(g, &named::petersen())),
        || "Petersen graph missing".into(),
    )?;
    let split = mmna_filter(&family);
    ensure(split.mmna.len() == 7, || {
        format!("{} MMNA of 7", split.mmna.len())
    })?;
    emitted.extend(split.mmna);
    Ok("7 graphs, size 15, orders 6..10, all MMNA".into())
}

fn table_rows(emitted: &mut Vec<SmallGraph>, extended: bool) -> Outcome {
    let mut expected: Vec<(usize, Vec<(usize, u64)>)> = vec![
        (6, vec![(15, 1)]),
        (7, vec![(15, 2)]),
        (8, vec![(15, 2), (21, 1)]),
        (9, vec![(15, 1), (18, 1), (20, 2), (21, 1)]),
    ];
    if extended {
        expected.push((
            10,
            vec![
                (15, 1),
                (18, 2),
                (19, 3),
                (20, 7),
                (21, 7),
                (22, 4),
                (23, 5),
                (24, 2),
            ],
        ));
    }
    let mut summary = Vec::new();
    for (n, want) in expected {
        let mmna = cascade_row(n)?;
        let got = table_row(&mmna, n);
        let want: BTreeMap<usize, u64> = want.into_iter().collect();
        ensure(got == want, || {
            format!("n={n}: got {got:?}, expected {want:?}")
        })?;
        ensure(mmna.iter().all(|g| g.order() == n), || {
            format!("n={n}: output of another order")
        })?;
        summary.push(format!("n={n} {got:?}"));
        emitted.extend(mmna);
    }
    Ok(summary.join("; "))
}

fn cone_witness() -> Outcome {
    let g = named::cone_over_icosahedron();
    ensure((g.order(), g.size()) == (13, 42), || "wrong cone".into())?;
    let verdict = classify_apex(&g);
    ensure(verdict.is_apex() && !is_planar(&g), || {
        format!("{verdict:?}")
    })?;
    let apexes = apex_vertices(&g).map_err(|e| e.to_string())?;
    ensure(apexes.contains(12), || "cone vertex not apex".into())?;
    ensure(has_k6_minor(&g).is_none(), || "K6 minor found".into())?;
    Ok(format!(
        "{verdict:?}, apex vertices {:?}, no K6 minor",
        apexes.iter().collect::<Vec<_>>()
    ))
}

fn audit() -> Outcome {
    let k6 = named::complete(6);
    let report = k6_audit(100, 2024).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{report:?}"))?;
    // Re-check every sample and witness with the reference helpers.
    for i in 0..100 {
        let g = audit_sample(2024, i).map_err(|e| e.to_string())?;
        ensure(g.order() == 13 && (0..13).all(|v| g.degree(v) == 6), || {
            format!("sample {i} not 6-regular")
        })?;
        ensure(common::is_2_connected(&g), || {
            format!("sample {i} not 2-connected")
        })?;
        let model = has_k6_minor(&g).ok_or_else(|| format!("sample {i}: no K6 minor"))?;
        ensure(common::check_model(&g, &sets_of(&model), &k6), || {
            format!("sample {i}: invalid witness")
        })?;
    }
    Ok(format!(
        "{}/{} with valid K6 witnesses",
        report.with_k6, report.sampled
    ))
}

fn density() -> Outcome {
    let k6 = named::complete(6);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let n = rng.gen_range(6..=13);
        let g = random_graph(n, 4 * n - 9, rng.gen()).map_err(|e| e.to_string())?;
        let model = has_k6_minor(&g)
            .ok_or_else(|| format!("#{i}: {} has no K6 minor", graph6::encode(&g)))?;
        ensure(common::check_model(&g, &sets_of(&model), &k6), || {
            format!("#{i}: invalid witness")
        })?;
    }
    Ok("200/200 have K6 minors".into())
}

fn oracles() -> Outcome {
    let mut classes = Vec::new();
    for n in 1..=7 {
        classes.extend(enumerate_all(&EnumSpec::new(n)).map_err(|e| e.to_string())?);
    }
    ensure(classes.len() == 1252, || {
        format!("{} classes", classes.len())
    })?;

    // (a) planarity against the Kuratowski minor oracle.
    let (k5, k33) = (named::complete(5), named::complete_bipartite(3, 3));
    let mut planar_by_order = [0usize; 8];
    for g in &classes {
        let kuratowski = minor_oracle(g, &k5).unwrap() || minor_oracle(g, &k33).unwrap();
        ensure(is_planar(g) == !kuratowski, || {
            format!("planarity disagrees on {}", graph6::encode(g))
        })?;
        if !kuratowski {
            planar_by_order[g.order()] += 1;
        }
    }
    ensure(planar_by_order[1..] == [1, 2, 4, 11, 33, 142, 822], || {
        format!("planar counts {planar_by_order:?}")
    })?;

    // (b) minor search against the delete/contract oracle.
    let patterns = [named::complete(3), named::complete(4), k5, k33];
    for h in &patterns {
        for g in &classes {
            let found = has_minor(g, h);
            let oracle = minor_oracle(g, h).unwrap();
            ensure(found.is_some() == oracle, || {
                format!(
                    "{} in {}: search {} oracle {oracle}",
                    graph6::encode(h),
                    graph6::encode(g),
                    found.is_some()
                )
            })?;
            if let Some(m) = found {
                ensure(common::check_model(g, &sets_of(&m), h), || {
                    "bad witness".into()
                })?;
            }
        }
    }

    // (c) canonical forms against brute-force isomorphism.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut iso, mut non_iso) = (0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let e = rng.gen_range(0..=n * (n - 1) / 2);
        let a = random_graph(n, e, rng.gen()).unwrap();
        let b = if rng.gen_bool(0.5) {
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            a.permute(&perm).unwrap()
        } else {
            random_graph(n, e, rng.gen()).unwrap()
        };
        let brute = common::brute_isomorphic(&a, &b);
        ensure((canonical_form(&a) == canonical_form(&b)) == brute, || {
            format!(
                "canon disagrees on {} / {}",
                graph6::encode(&a),
                graph6::encode(&b)
            )
        })?;
        if brute {
            iso += 1;
        } else {
            non_iso += 1;
        }
    }
    Ok(format!(
        "1252 classes x (planarity + 4 patterns), 500 pairs ({iso} isomorphic, {non_iso} not)"
    ))
}

fn codec() -> Outcome {
    ensure(graph6::decode("@") == Ok(named::complete(1)), || "@".into())?;
    ensure(graph6::decode("A_") == Ok(named::complete(2)), || {
        "A_".into()
    })?;
    ensure(graph6::encode(&named::complete(1)) == "@", || "K1".into())?;
    ensure(graph6::encode(&named::complete(2)) == "A_", || "K2".into())?;
    let mut total = 0;
    for n in 1..=8 {
        for g in enumerate_all(&EnumSpec::new(n)).map_err(|e| e.to_string())? {
            let text = graph6::encode(&g);
            ensure(text == common::graph6_reference(&g), || {
                format!("encoding of {text}")
            })?;
            ensure(graph6::decode(&text) == Ok(g), || {
                format!("round trip of {text}")
            })?;
            total += 1;
        }
    }
    ensure(total == 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346, || {
        format!("{total} graphs")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0;
    for _ in 0..10_000 {
        let len = rng.gen_range(0..40);
        let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
        let verdict = panic::catch_unwind(|| graph6::decode_bytes(&bytes))
            .map_err(|_| format!("decoder panicked on {bytes:?}"))?;
        if let Ok(g) = verdict {
            ensure(graph6::encode_bytes(&g) == bytes, || {
                "accepted non-canonical bytes".into()
            })?;
            accepted += 1;
        }
    }
    Ok(format!(
        "{total} round trips, fuzz 10000 inputs ({accepted} valid), no panics"
    ))
}

fn mmna_invariants(emitted: &[SmallGraph]) -> Outcome {
    let k6 = named::complete(6);
    ensure(!emitted.is_empty(), || "no MMNA graphs collected".into())?;
    for g in emitted {
        let (n, e) = (g.order(), g.size());
        let name = graph6::encode(g);
        ensure(common::min_degree(g) >= 3, || format!("{name}: min degree"))?;
        ensure(2 * e >= 3 * n, || format!("{name}: too few edges"))?;
        ensure(e + 10 <= 4 * n || common::brute_isomorphic(g, &k6), || {
            format!("{name}: too many edges")
        })?;
        ensure(is_mmna(g).is_mmna(), || {
            format!("{name}: not MMNA in isolation")
        })?;
    }
    let two_k5 = named::complete(5)
        .disjoint_union(&named::complete(5))
        .unwrap();
    ensure((two_k5.order(), two_k5.size()) == (10, 20), || {
        "K5+K5 shape".into()
    })?;
    ensure(is_mmna(&two_k5).is_mmna(), || "K5+K5 not MMNA".into())?;
    Ok(format!(
        "{} emitted graphs checked, K5+K5 is MMNA",
        emitted.len()
    ))
}

fn main() -> ExitCode {
    let extended = std::env::var("APEXION_EXTENDED").is_ok_and(|v| v == "1");
    let mut emitted = Vec::new();
    let mut failures = 0;
    let mut run = |id: u32, name: &str, limit: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let result =
            panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = result.and_then(|msg| {
            if took <= limit {
                Ok(msg)
            } else {
                Err(format!("took {took:.1?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS {id} {name} ({took:.2?}): {msg}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL {id} {name} ({took:.2?}): {msg}");
            }
        }
    };
    run(1, "petersen-family", Duration::from_secs(10), &mut || {
        petersen_family(&mut emitted)
    });
    run(2, "table-rows", Duration::from_secs(30 * 60), &mut || {
        table_rows(&mut emitted, extended)
    });
    run(3, "cone-witness", Duration::from_secs(1), &mut cone_witness);
    run(4, "k6-audit", Duration::from_secs(5 * 60), &mut audit);
    run(5, "density", Duration::from_secs(5 * 60), &mut density);
    run(6, "oracles", Duration::from_secs(10 * 60), &mut oracles);
    run(7, "graph6", Duration::from_secs(2 * 60), &mut codec);
    run(8, "mmna-invariants", Duration::from_secs(60), &mut || {
        mmna_invariants(&emitted)
    });
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
