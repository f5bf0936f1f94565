//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod oracles;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use depthzero::branching::{branch, expand_in_standard_basis, generic_branching};
use depthzero::hecke::{
    bruhat_leq, distinguished_reps, is_distinguished, DeodharCase, InducedModule, KlTable,
};
use depthzero::multiseg::{
    partition_p, poset, zelevinsky_dual, DecompositionNumbers, DEFAULT_POSET_CAP as CAP,
};
use depthzero::partition::{kostka_sign_multiplicities, kostka_ssyt, sign_induction_multiplicities};
use depthzero::symgroup::{decompose, induce_from_young, Factor};
use depthzero::{IntPolynomial, Multisegment, Partition, PartitionVector, Segment, WeylElement};
use oracles::{compositions, multisegments, multisegments_up_to, RKl};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sign_factors(lengths: &[usize]) -> Vec<Factor> {
    vec![Factor::Sign; lengths.len()]
}

fn kostka_pieri_equivalence() -> Check {
    let mut count = 0;
    for n in 1..=8 {
        for lengths in compositions(n) {
            let pieri = sign_induction_multiplicities(&lengths);
            ensure(pieri == kostka_sign_multiplicities(&lengths), || format!("Pieri vs Kostka at {lengths:?}"))?;
            let chars = decompose(&induce_from_young(&lengths, &sign_factors(&lengths))).map_err(|e| e.to_string())?;
            ensure(pieri == chars, || format!("Pieri vs characters at {lengths:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} length tuples"))
}

fn support_law() -> Check {
    let mut pairs = 0;
    for n in 1..=8 {
        for lam in Partition::all(n) {
            let c = sign_induction_multiplicities(lam.conjugate().parts());
            ensure(c.get(&lam) == 1, || format!("c_λ ≠ 1 at {lam}"))?;
            for tau in Partition::all(n) {
                ensure((c.get(&tau) != 0) == lam.dominates(&tau).unwrap(), || format!("support at τ={tau}, λ={lam}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn hecke_relations() -> Check {
    let mut modules = 0;
    for n in 1..=4 {
        for lengths in compositions(n) {
            for mask in 0..1usize << lengths.len() {
                let factors: Vec<Factor> = (0..lengths.len())
                    .map(|k| if mask >> k & 1 == 1 { Factor::Sign } else { Factor::Trivial })
                    .collect();
                let m = InducedModule::from_blocks(&lengths, &factors).map_err(|e| e.to_string())?;
                ensure(m.relations_hold().unwrap(), || format!("relations fail on {lengths:?} {factors:?}"))?;
                modules += 1;
            }
        }
    }
    let mut cases = 0;
    for n in 2..=5 {
        for mask in 0..1usize << (n - 1) {
            let j: Vec<usize> = (1..n).filter(|s| mask >> (s - 1) & 1 == 1).collect();
            for x in distinguished_reps(n, &j).unwrap() {
                for s in 1..n {
                    let sx = x.left_mul_simple(s);
                    let rep = is_distinguished(&sx, &j);
                    let up = rep && sx.length() == x.length() + 1;
                    let down = rep && sx.length() + 1 == x.length();
                    let folds = j.iter().filter(|&&u| x.right_mul_simple(u) == sx).count();
                    ensure(up as usize + down as usize + folds == 1, || format!("trichotomy at x={x}, s={s}, J={j:?}"))?;
                    let agrees = match depthzero::hecke::deodhar_case(&x, s, &j).unwrap() {
                        DeodharCase::Up(y) => up && y == sx,
                        DeodharCase::Down(y) => down && y == sx,
                        DeodharCase::Fold(u) => x.right_mul_simple(u) == sx,
                    };
                    ensure(agrees, || format!("classification at x={x}, s={s}, J={j:?}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{modules} modules, {cases} Deodhar cases"))
}

fn q_one_specialization() -> Check {
    let mut count = 0;
    for n in 1..=6 {
        for lengths in compositions(n) {
            let m = InducedModule::from_blocks(&lengths, &sign_factors(&lengths)).map_err(|e| e.to_string())?;
            let got = m.specialize_q1_decompose().map_err(|e| e.to_string())?;
            ensure(got == sign_induction_multiplicities(&lengths), || format!("mismatch at {lengths:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} length tuples"))
}

fn kl_sanity() -> Check {
    let mut pairs = 0;
    for n in [4, 5] {
        let mut table = KlTable::new(n);
        let all = WeylElement::all(n);
        for w in &all {
            for x in &all {
                let p = table.polynomial(x, w).unwrap();
                if x == w {
                    ensure(p == IntPolynomial::one(), || format!("P_ww ≠ 1 at {w}"))?;
                } else if !bruhat_leq(x, w).unwrap() {
                    ensure(p.is_zero(), || format!("P ≠ 0 off the order at ({x},{w})"))?;
                } else {
                    ensure(p.coeffs().iter().all(|&c| c >= 0), || format!("negative coefficient at ({x},{w})"))?;
                    let bound = w.length() - x.length();
                    ensure(2 * p.degree().unwrap_or(0) < bound, || format!("degree bound at ({x},{w})"))?;
                }
                pairs += 1;
            }
        }
    }
    let x = WeylElement::simple(4, 2).unwrap();
    let w = WeylElement::from_word(4, &[2, 1, 3, 2]).unwrap();
    let first = depthzero::hecke::kl_polynomial(&x, &w).unwrap();
    let zb = |e: &WeylElement| e.one_line().iter().map(|v| v - 1).collect::<Vec<usize>>();
    let second = RKl::new().column(&zb(&w)).get(&zb(&x)).cloned().unwrap_or_default();
    ensure(first == IntPolynomial::new(vec![1, 1]), || format!("μ-recursion gives {first}"))?;
    ensure(second == vec![1, 1], || format!("R-polynomial coding gives {second:?}"))?;
    Ok(format!("{pairs} pairs, P = {first} by both codings"))
}

fn decomposition_support() -> Check {
    let mut dn = DecompositionNumbers::new();
    let mut count = 0;
    for a in multisegments_up_to(5) {
        let p = poset(&a, CAP).map_err(|e| e.to_string())?;
        let nodes: BTreeSet<&Multisegment> = p.nodes.iter().collect();
        ensure(dn.m(&a, &a).unwrap() == 1, || format!("m(a;a) ≠ 1 at {a}"))?;
        for b in multisegments(a.degree()).iter().filter(|b| b.support() == a.support()) {
            let v = dn.m(b, &a).unwrap();
            ensure((v != 0) == nodes.contains(b), || format!("m({b};{a}) = {v}"))?;
        }
        for (i, c) in p.nodes.iter().enumerate() {
            for (j, b) in p.nodes.iter().enumerate() {
                let v = dn.m(b, c).unwrap();
                let ok = if i == j { v == 1 } else { j > i || v == 0 };
                ensure(ok, || format!("not unitriangular at m({b};{c})"))?;
            }
        }
        count += 1;
    }
    Ok(format!("{count} multisegments"))
}

fn generic_law() -> Check {
    let mut tuples = 0;
    for n in 1..=8 {
        for lengths in compositions(n) {
            let r = generic_branching(&lengths).map_err(|e| e.to_string())?;
            let lam = Partition::from_lengths(&lengths).conjugate();
            let mut expected = PartitionVector::zero(n);
            for mu in Partition::all(n) {
                if lam.dominates(&mu).unwrap() {
                    expected.add(mu.clone(), kostka_ssyt(&mu.conjugate(), &lam.conjugate()).unwrap() as i64);
                }
            }
            ensure(r.multiplicities == expected, || format!("Kostka law at {lengths:?}"))?;
            let chars = decompose(&induce_from_young(&lengths, &sign_factors(&lengths))).unwrap();
            ensure(r.multiplicities == chars, || format!("character oracle at {lengths:?}"))?;
            tuples += 1;
        }
    }
    let mut unlinked = 0;
    for a in multisegments_up_to(6).into_iter().filter(Multisegment::is_unlinked) {
        let b = branch(&a, CAP).map_err(|e| e.to_string())?;
        ensure(b == generic_branching(&a.lengths()).unwrap(), || format!("branch ≠ generic at {a}"))?;
        unlinked += 1;
    }
    Ok(format!("{tuples} length tuples, {unlinked} unlinked multisegments"))
}

fn end_to_end() -> Check {
    let mut count = 0;
    let mut max_mult = 0;
    for a in multisegments_up_to(6) {
        let r = branch(&a, CAP).map_err(|e| format!("{a}: {e}"))?;
        let top = partition_p(&a).unwrap();
        ensure(r.multiplicities.get(&top) == 1, || format!("top multiplicity at {a}"))?;
        for (mu, c) in r.multiplicities.iter() {
            ensure(c >= 0, || format!("negative multiplicity at {a}"))?;
            ensure(top.dominates(mu).unwrap(), || format!("{mu} not below P(a) at {a}"))?;
            max_mult = max_mult.max(c);
        }
        count += 1;
    }
    for n in 1..=6 {
        let seg = Multisegment::new(vec![Segment::new(0, n as i64 - 1).unwrap()]);
        let r = branch(&seg, CAP).unwrap().multiplicities;
        ensure(r == PartitionVector::singleton(Partition::column(n), 1), || format!("single segment of length {n}"))?;
    }
    let two: Multisegment = "[0,0]+[1,1]".parse().unwrap();
    let r = branch(&two, CAP).unwrap().multiplicities;
    ensure(r == PartitionVector::singleton(Partition::row(2), 1), || format!("two points give {r:?}"))?;
    let c = expand_in_standard_basis(&two, CAP).unwrap();
    ensure(c == vec![(two.clone(), 1), ("[0,1]".parse().unwrap(), -1)], || format!("expansion {c:?}"))?;
    Ok(format!("{count} multisegments, largest multiplicity {max_mult}"))
}

fn duality_remark() -> Check {
    let mut count = 0;
    let mut strict_minimum = 0;
    for a in multisegments_up_to(5) {
        let d = zelevinsky_dual(&a);
        ensure(zelevinsky_dual(&d) == a, || format!("not an involution at {a}"))?;
        ensure(d.support() == a.support(), || format!("support changed at {a}"))?;
        let low = partition_p(&d).unwrap().conjugate();
        let r = branch(&a, CAP).unwrap().multiplicities;
        let mult = r.get(&low);
        ensure(mult > 0, || format!("P(dual(a))' = {low} absent at {a}"))?;
        if r.support().all(|mu| mu.dominates(&low).unwrap()) && mult == 1 {
            strict_minimum += 1;
        }
        count += 1;
    }
    for n in 1..=6 {
        let seg = Multisegment::new(vec![Segment::new(0, n - 1).unwrap()]);
        let split = Multisegment::new((0..n).map(Segment::point).collect());
        ensure(zelevinsky_dual(&seg) == split, || format!("single segment of length {n}"))?;
    }
    Ok(format!(
        "{count} multisegments; P(dual(a))' is the dominance minimum with multiplicity 1 in {strict_minimum}"
    ))
}

fn cli_golden() -> Check {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&[&str], &str); 3] = [
        (&["branch", "[0,2]"], "branch_segment.txt"),
        (&["generic", "2,1"], "generic_2_1.txt"),
        (&["m", "[0,1]", "[0,0]+[1,1]"], "m_adjacent_points.txt"),
    ];
    for (args, file) in cases {
        let expected = std::fs::read_to_string(dir.join(file)).map_err(|e| e.to_string())?;
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let out = Command::new(env!("CARGO_BIN_EXE_depthzero"))
                .args(args)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{args:?} exited with {}", out.status))?;
            outputs.push(String::from_utf8(out.stdout).map_err(|e| e.to_string())?);
        }
        ensure(outputs[0] == outputs[1], || format!("{args:?} not byte-stable"))?;
        ensure(outputs[0] == expected, || format!("{args:?} differs from {file}"))?;
        for row in outputs[0].lines() {
            let lit = row.split_once(" : ").map_or(row, |(l, _)| l);
            if lit.parse::<u64>().is_ok() {
                continue;
            }
            let p: Partition = lit.parse().map_err(|e| format!("{lit}: {e}"))?;
            ensure(p.to_string() == lit, || format!("{lit} does not re-print"))?;
        }
    }
    Ok("3 commands".to_string())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 10] = [
        ("Kostka/Pieri equivalence", Duration::from_secs(60), kostka_pieri_equivalence),
        ("support law of sign induction", Duration::from_secs(60), support_law),
        ("Hecke relations and Deodhar trichotomy", Duration::from_secs(120), hecke_relations),
        ("q=1 specialization", Duration::from_secs(60), q_one_specialization),
        ("Kazhdan-Lusztig sanity", Duration::from_secs(600), kl_sanity),
        ("decomposition numbers on the poset", Duration::from_secs(120), decomposition_support),
        ("generic branching law", Duration::from_secs(120), generic_law),
        ("branching end to end", Duration::from_secs(300), end_to_end),
        ("duality and the minimal constituent", Duration::from_secs(120), duality_remark),
        ("CLI golden files", Duration::from_secs(5), cli_golden),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|d| {
            if elapsed > budget {
                Err(format!("{d}; took {elapsed:.2?}, budget {budget:?}"))
            } else {
                Ok(d)
            }
        });
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {reason} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
