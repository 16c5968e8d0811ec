//! End-to-end acceptance suite. Each test prints a single PASS/FAIL line;
//! run with `cargo test -p nsgp-core --test acceptance -- --nocapture`.

mod support;

use nsgp_core::*;
use rand::prelude::*;
use support::*;

struct Criterion {
    number: u32,
    name: &'static str,
}

impl Criterion {
    fn new(number: u32, name: &'static str) -> Self {
        Criterion { number, name }
    }

    fn finish(self, failures: &[String]) {
        if failures.is_empty() {
            println!("criterion {} ({}): PASS", self.number, self.name);
        } else {
            println!(
                "criterion {} ({}): FAIL, {} failure(s), first: {}",
                self.number,
                self.name,
                failures.len(),
                failures[0]
            );
            panic!("criterion {} failed: {}", self.number, failures[0]);
        }
    }
}

#[test]
fn criterion_1_table_reproduction() {
    let c = Criterion::new(1, "d-table reproduction");
    let mut failures = Vec::new();

    let s1 = parse_semigroup("gen:3,19,20").unwrap();
    let e1 = parse_ideal(&s1, "offset:3").unwrap();
    let p1: Pattern = "3x1-x2".parse().unwrap();
    let expected1 = [
        (3, true),
        (9, true),
        (15, true),
        (19, false),
        (21, true),
        (23, false),
        (25, false),
        (27, true),
        (29, true),
    ];
    let ds1: Vec<u64> = expected1.iter().map(|&(d, _)| d).collect();
    let table1 = d_table(&e1, &p1, &ds1).unwrap();
    if table1.rows != expected1 {
        failures.push(format!("table 1 mismatch: {:?}", table1.rows));
    }

    let s2 = parse_semigroup("gen:5,8,19,22").unwrap();
    let e2 = parse_ideal(&s2, "offset:5").unwrap();
    let p2: Pattern = "4x1-x2-x3".parse().unwrap();
    let expected2 = [
        (5, false),
        (13, true),
        (15, false),
        (19, true),
        (21, false),
        (23, false),
        (25, true),
        (27, true),
        (29, true),
    ];
    let ds2: Vec<u64> = expected2.iter().map(|&(d, _)| d).collect();
    let table2 = d_table(&e2, &p2, &ds2).unwrap();
    if table2.rows != expected2 {
        failures.push(format!("table 2 mismatch: {:?}", table2.rows));
    }

    c.finish(&failures);
}

#[test]
fn criterion_2_oracle_equivalence() {
    let c = Criterion::new(2, "structural admits equals the oracle on 500 random pairs");
    let mut failures = Vec::new();
    let mut rng = rng(0x5EED_0002);
    for case in 0..500 {
        let s = random_semigroup(&mut rng, 10);
        let p = random_pattern(&mut rng, 4, 3, 0.55);
        let fast = admits(&s, &p);
        let slow = admits_oracle(&s, &p);
        if fast.admits != slow.admits || fast.counterexample != slow.counterexample {
            failures.push(format!(
                "case {case}: {s} with {p}: structural {:?} vs oracle {:?}",
                fast, slow
            ));
            continue;
        }
        if let Some(tuple) = &fast.counterexample {
            let value = eval_pattern(&p, tuple).unwrap();
            if tuple.iter().any(|&x| !s.contains(x as i64)) || s.contains(value) {
                failures.push(format!("case {case}: invalid counterexample {tuple:?}"));
            }
        }
    }
    c.finish(&failures);
}

#[test]
fn criterion_3_arf_equivalence_theorem() {
    let c = Criterion::new(3, "Arf-equivalence theorem, exhaustive at desk scale");
    let mut failures = Vec::new();

    // every pattern of length ≤ 4 with coefficients in [−3, 3] \ {0}
    let mut degree_two = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if !prefix.is_empty() {
            let p = Pattern::new(prefix.clone()).unwrap();
            if p.admissibility_degree() == AdmissibilityDegree::Finite(2) {
                degree_two.push(p);
            }
        }
        if prefix.len() < 4 {
            for a in [-3i64, -2, -1, 1, 2, 3] {
                let mut next = prefix.clone();
                next.push(a);
                stack.push(next);
            }
        }
    }

    let mut all: Vec<NumericalSemigroup> = Vec::new();
    walk_tree(&Pattern::zero(), 8, DEFAULT_GENUS_CAP, |node| {
        all.push(node.semigroup.clone());
    })
    .unwrap();
    let arf_flags: Vec<bool> = all.iter().map(NumericalSemigroup::is_arf).collect();

    for p in &degree_two {
        if is_arf_equivalent(p) {
            for (s, &arf) in all.iter().zip(&arf_flags) {
                if admits(s, p).admits != arf {
                    failures.push(format!("{p} on {s}: admits ≠ is_arf"));
                }
            }
        } else {
            let q = *p.prefix_sums().iter().max().unwrap() as u64 + 2;
            let witness = arf_witness_semigroup(q);
            if !admits_oracle(&witness, p).admits {
                failures.push(format!("witness q={q} rejects {p}"));
            }
            if witness.is_arf() {
                failures.push(format!("witness q={q} is Arf"));
            }
        }
    }
    c.finish(&failures);
}

#[test]
fn criterion_4_prefix_sum_bound() {
    let c = Criterion::new(4, "prefix sums dominate min(i, ad−1) on 10^4 random patterns");
    let mut failures = Vec::new();
    let mut rng = rng(0x5EED_0004);
    for case in 0..10_000 {
        let p = random_pattern(&mut rng, 6, 4, 0.7);
        let b = p.prefix_sums();
        let k = match p.admissibility_degree() {
            AdmissibilityDegree::Finite(0) => continue, // no degree bound to test
            AdmissibilityDegree::Finite(ad) => (ad - 1) as i64,
            AdmissibilityDegree::Infinite => p.len() as i64,
        };
        for (i, &bi) in b.iter().enumerate() {
            let floor = (i as i64 + 1).min(k);
            if bi < floor {
                failures.push(format!("case {case}: {p}: b_{} = {bi} < {floor}", i + 1));
            }
        }
    }
    c.finish(&failures);
}

#[test]
fn criterion_5_duplication_algebra() {
    let c = Criterion::new(5, "duplication conductor formula and quotient recovery, 200 cases");
    let mut failures = Vec::new();
    let mut rng = rng(0x5EED_0005);
    for case in 0..200 {
        let s = random_semigroup(&mut rng, 8);
        let e = random_ideal(&mut rng, &s);
        let d = odd_member_from(&s, rng.gen_range(1..=40));
        let dup = e.duplication(d).unwrap();
        if dup.conductor() != 2 * e.conductor() + d - 1 {
            failures.push(format!(
                "case {case}: conductor {} ≠ 2·{} + {d} − 1",
                dup.conductor(),
                e.conductor()
            ));
        }
        if dup.quotient(2) != s {
            failures.push(format!("case {case}: halving the duplication lost {s}"));
        }
    }
    c.finish(&failures);
}

#[test]
fn criterion_6_eventual_admission_consistency() {
    let c = Criterion::new(6, "eventual verdicts agree with per-d admission");
    let mut failures = Vec::new();
    let mut rng = rng(0x5EED_0006);

    for case in 0..100 {
        let s = random_semigroup(&mut rng, 5);
        let e = random_ideal(&mut rng, &s);
        let p = random_monic_pattern(&mut rng, 4, 3);
        let decision = eventually_admits(&e, &p).unwrap();
        let base = decision.threshold_d.unwrap_or_else(|| eventual_threshold(&e));
        let mut d = base;
        let mut window = Vec::new();
        for _ in 0..5 {
            window.push(admits_for_d(&e, &p, d).unwrap().admits);
            d = odd_member_from(&s, d + 1);
        }
        if decision.eventually_admits && !window.iter().all(|&a| a) {
            failures.push(format!(
                "case {case}: {s}, E min {}, {p}: verdict true but window {window:?} from d = {base}",
                e.min()
            ));
        }
        if !decision.eventually_admits && window.iter().all(|&a| a) {
            failures.push(format!(
                "case {case}: {s}, E min {}, {p}: verdict false but window all-admitting from d = {base}",
                e.min()
            ));
        }
    }

    // non-monic patterns of degree ≥ 3 are always eventually admitted
    let mut checked = 0;
    while checked < 25 {
        let s = random_semigroup(&mut rng, 5);
        let e = random_ideal(&mut rng, &s);
        let p = random_admissible_pattern(&mut rng, 3, 3);
        if p.is_monic() || !p.admissibility_degree().at_least(3) || !admits(&s, &p).admits {
            continue;
        }
        checked += 1;
        match nonmonic_eventual(&e, &p).unwrap() {
            NonmonicEventual::Decided(decision) => {
                if !decision.eventually_admits {
                    failures.push(format!("non-monic {p} on {s}: verdict false"));
                    continue;
                }
                let mut d = decision.threshold_d.unwrap();
                for _ in 0..5 {
                    if !admits_for_d(&e, &p, d).unwrap().admits {
                        failures.push(format!("non-monic {p} on {s}: fails at d = {d}"));
                    }
                    d = odd_member_from(&s, d + 1);
                }
            }
            other => failures.push(format!("non-monic {p} on {s}: unexpected {other:?}")),
        }
    }
    c.finish(&failures);
}

#[test]
fn criterion_7_variety_counts() {
    let c = Criterion::new(7, "Arf tree counts match the exhaustive gap-set filter, genus ≤ 6");
    let mut failures = Vec::new();
    let tree_counts = enumerate_by_genus(&Pattern::arf(), 6).unwrap();
    for genus in 0..=6u64 {
        let filtered = semigroups_by_gap_subsets(genus)
            .iter()
            .filter(|s| s.is_arf())
            .count() as u64;
        if tree_counts[genus as usize] != filtered {
            failures.push(format!(
                "genus {genus}: tree {} vs filter {filtered}",
                tree_counts[genus as usize]
            ));
        }
    }
    c.finish(&failures);
}

#[test]
fn criterion_8_arf_induces_strongly_admissible() {
    let c = Criterion::new(8, "every Arf semigroup of genus ≤ 8 admits 100 random strongly admissible patterns");
    let mut failures = Vec::new();
    let mut rng = rng(0x5EED_0008);
    let mut arf_semigroups = Vec::new();
    walk_tree(&Pattern::arf(), 8, DEFAULT_GENUS_CAP, |node| {
        arf_semigroups.push(node.semigroup.clone());
    })
    .unwrap();
    let panel: Vec<Pattern> = (0..100)
        .map(|_| random_strongly_admissible_pattern(&mut rng, 4, 3))
        .collect();
    for s in &arf_semigroups {
        for p in &panel {
            if !admits(s, p).admits {
                failures.push(format!("Arf semigroup {s} rejects {p}"));
            }
        }
    }
    c.finish(&failures);
}
