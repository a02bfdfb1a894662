//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the report is always printed; exits non-zero on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use multisplit::engine::is_tropical_plucker;
use multisplit::multisplit::{
    cells_from_inequalities, count_multisplits_formula, enumerate_multisplits, symmetry_classes, DEFAULT_MAX_N,
};
use multisplit::stiefel::{matroid_cells, stiefel_lift, verify_stiefel_roundtrip};
use multisplit::{
    corank_subdivision, is_matroid, regular_subdivision, secondary_linearity_dimension, subdivisions_equal,
    verify_corank_covering, Lifting, Matroid, MultiSplit, PointConfiguration, ProductLifting, Rational, Subdivision,
    Subset,
};

use common::*;

type Outcome = Result<String, String>;

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_multisplits(max_n: usize) -> Vec<MultiSplit> {
    valid_triples(max_n)
        .into_iter()
        .flat_map(|(d, n, k)| enumerate_multisplits(d, n, k, DEFAULT_MAX_N).unwrap())
        .collect()
}

fn split_counts_d2() -> Outcome {
    let got: Vec<u128> = (4..=10).map(|n| count_multisplits_formula(2, n, 2).unwrap()).collect();
    let want = vec![3, 10, 25, 56, 119, 246, 501];
    ensure(got == want, || format!("got {got:?}, want {want:?}"))?;
    Ok(format!("{got:?}"))
}

fn delta_3_6_total() -> Outcome {
    let a = count_multisplits_formula(3, 6, 2).unwrap();
    let b = count_multisplits_formula(3, 6, 3).unwrap();
    ensure((a, b, a + b) == (35, 30, 65), || format!("{a} + {b} = {}", a + b))?;
    Ok(format!("{a} + {b} = {}", a + b))
}

fn half_integral() -> Outcome {
    let mut out = Vec::new();
    for k in 2..=4u128 {
        let fact: u128 = (1..k).product();
        let dfact: u128 = (1..2 * k).step_by(2).product();
        let got = count_multisplits_formula(k as usize, 2 * k as usize, k as usize).unwrap();
        ensure(got == fact * dfact, || format!("k = {k}: {got} ≠ {}", fact * dfact))?;
        out.push(got);
    }
    Ok(format!("{out:?}"))
}

fn oracle_equivalence() -> Outcome {
    let triples = valid_triples(8);
    for &(d, n, k) in &triples {
        let formula = count_multisplits_formula(d, n, k).unwrap();
        let brute = enumerate_multisplits(d, n, k, DEFAULT_MAX_N).unwrap().len() as u128;
        ensure(formula == brute, || format!("({d},{n},{k}): formula {formula}, enumeration {brute}"))?;
    }
    Ok(format!("{} parameter triples", triples.len()))
}

fn structure_suite() -> Outcome {
    let splits = all_multisplits(6);
    let mut cells_checked = 0;
    for ms in &splits {
        let cells = ms.cells();
        let expected = matroid_cells(ms);
        for (t, m) in cells.maximal.iter().enumerate() {
            ensure(is_matroid(ms.n(), ms.d(), m.bases()).unwrap(), || format!("{ms:?}: cell {t} fails exchange"))?;
            let rot = ms.partition().rotated(t);
            let chain = rot.cumulative_chain();
            let mut want: Vec<(Subset, usize)> = vec![(Subset::empty(ms.n()), 0)];
            want.extend(chain.flats().iter().copied().zip(chain.ranks().iter().copied()));
            want.sort_by_key(|(f, _)| (f.len(), f.bits()));
            let got = m.cyclic_flats();
            ensure(got.len() == ms.k() + 1 && got == want, || format!("{ms:?}: cell {t} cyclic flats {got:?}"))?;
            ensure(cells_from_inequalities(&rot) == *m, || format!("{ms:?}: inequality route differs at {t}"))?;
            let sub: Subdivision<Rational> = corank_subdivision(m).unwrap();
            ensure(sub.cells() == expected.as_slice(), || format!("{ms:?}: corank of cell {t} gives {:?}", sub.cells()))?;
            cells_checked += 1;
        }
        let mut common: Vec<Subset> = cells.maximal[0].bases().to_vec();
        for m in &cells.maximal[1..] {
            common.retain(|b| m.is_basis(*b));
        }
        ensure(common == cells.common.bases(), || format!("{ms:?}: intersection is not the common cell"))?;
    }
    Ok(format!("{} multi-splits, {cells_checked} maximal cells", splits.len()))
}

fn stiefel_roundtrip() -> Outcome {
    let splits = all_multisplits(6);
    let mut runs = 0;
    for ms in &splits {
        let common = ms.common_cell();
        for t in 0..ms.k() {
            let rot = ms.rotated(t);
            for &b in common.bases() {
                let ok = verify_stiefel_roundtrip(&rot, b).map_err(|e| format!("{ms:?}, base {b}: {e}"))?;
                ensure(ok, || format!("{ms:?}, rotation {t}, base {b}: round trip differs"))?;
                runs += 1;
            }
        }
    }
    Ok(format!("{} multi-splits, {runs} (rotation, base) pairs", splits.len()))
}

fn coarseness() -> Outcome {
    let splits = all_multisplits(6);
    for ms in &splits {
        let pc = PointConfiguration::<Rational>::hypersimplex(ms.d(), ms.n()).unwrap();
        let s = regular_subdivision(&pc, &Lifting::corank(&ms.maximal_cells()[0])).unwrap();
        let lin = secondary_linearity_dimension(&pc, &s).unwrap();
        ensure(lin.dim == ms.n() + 1 && lin.is_coarsest, || format!("{ms:?}: dim W = {}", lin.dim))?;
    }
    let mut trivial = 0;
    for n in 2..=6 {
        for d in 1..n {
            let pc = PointConfiguration::<Rational>::hypersimplex(d, n).unwrap();
            let s = regular_subdivision(&pc, &Lifting::zero(pc.len())).unwrap();
            let lin = secondary_linearity_dimension(&pc, &s).unwrap();
            ensure(lin.dim == n && !lin.is_coarsest, || format!("trivial Δ({d},{n}): dim W = {}", lin.dim))?;
            trivial += 1;
        }
    }
    Ok(format!("{} multi-splits at n + 1, {trivial} trivial subdivisions at n", splits.len()))
}

fn symmetry() -> Outcome {
    let row: Vec<usize> = (4..=10).map(|n| symmetry_classes(2, n, 2, DEFAULT_MAX_N).unwrap().len()).collect();
    ensure(row == [1, 1, 2, 2, 3, 3, 4], || format!("Δ(2,n) classes {row:?}"))?;
    let d36: usize = (2..=3).map(|k| symmetry_classes(3, 6, k, DEFAULT_MAX_N).unwrap().len()).sum();
    ensure(d36 == 3, || format!("Δ(3,6) has {d36} classes"))?;
    Ok(format!("Δ(2,n): {row:?}; Δ(3,6): {d36}"))
}

fn corank_lifting(m: &Matroid) -> Lifting<Rational> {
    Lifting::corank(m)
}

fn dressian() -> Outcome {
    let mut matroids = 0;
    for n in 1..=7 {
        let uniform = (0..=n).map(|d| Matroid::uniform(d, n).unwrap());
        let partition = general_partition_matroids(n).into_iter();
        let nested = labeled_nested_chains(n).into_iter().map(|c| Matroid::nested(&c));
        for m in uniform.chain(partition).chain(nested) {
            let ok = is_tropical_plucker(m.d(), m.n(), &corank_lifting(&m)).unwrap();
            ensure(ok, || format!("corank of {:?} fails", m.bases()))?;
            matroids += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut lifts = 0;
    for d in 1..=3 {
        for n in d + 1..=7 {
            for _ in 0..100 {
                let elems: Vec<usize> = rand::seq::index::sample(&mut rng, n, d).into_iter().map(|e| e + 1).collect();
                let base = Subset::from_elements(n, &elems).unwrap();
                let pl = ProductLifting::from_fn(base, |_, _| {
                    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
                });
                let p = stiefel_lift(&pl);
                ensure(is_tropical_plucker(d, n, &p).unwrap(), || format!("Stiefel lift of {pl:?} fails"))?;
                lifts += 1;
            }
        }
    }
    Ok(format!("{matroids} corank vectors, {lifts} random Stiefel lifts"))
}

fn covering() -> Outcome {
    // covering is invariant under relabelling: all labelled nested matroids up
    // to n = 6, one per isomorphism class at n = 7
    let mut count = 0;
    for n in 1..=7 {
        let chains = if n <= 6 { labeled_nested_chains(n) } else { nested_chain_classes(n) };
        for c in chains {
            let m = Matroid::nested(&c);
            ensure(verify_corank_covering(&m).unwrap(), || format!("{c:?} is not covered"))?;
            count += 1;
        }
    }
    Ok(format!("{count} nested matroids"))
}

fn five_point_corpus() -> Outcome {
    let pc = PointConfiguration::new(five_points()).unwrap();
    let mut subs = Vec::new();
    for case in &FIVE_POINT_CASES {
        let h = Lifting::new(case.heights.iter().map(|&v| q(v)).collect());
        let s = regular_subdivision(&pc, &h).unwrap();
        let want: Vec<Vec<usize>> = case.cells.iter().map(|c| c.to_vec()).collect();
        ensure(s.cells() == want.as_slice(), || format!("{}: got {:?}", case.name, s.cells()))?;
        s.verify_witnesses(&pc, &h).map_err(|e| format!("{}: {e}", case.name))?;
        let negligible = s.cells().iter().any(|c| c.contains(&4))
            && s.cells().iter().filter(|c| c.contains(&4)).all(|c| {
                let others: Vec<&Vec<Rational>> = c.iter().filter(|&&i| i != 4).map(|&i| &pc.points()[i]).collect();
                in_hull_2d(&pc.points()[4], &others)
            });
        ensure(negligible == case.negligible, || format!("{}: interior point negligible = {negligible}", case.name))?;
        subs.push(s);
    }
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            ensure(!subdivisions_equal(&subs[i], &subs[j]).unwrap(), || {
                format!("{} equals {}", FIVE_POINT_CASES[i].name, FIVE_POINT_CASES[j].name)
            })?;
        }
    }
    Ok("9 pairwise distinct subdivisions".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "split counts for Δ(2,n), n = 4..10", budget: Duration::from_secs(1), run: split_counts_d2 },
        Criterion { id: 2, name: "Δ(3,6) multi-split total", budget: Duration::from_secs(1), run: delta_3_6_total },
        Criterion { id: 3, name: "half-integral family (k−1)!·(2k−1)!!", budget: Duration::from_secs(1), run: half_integral },
        Criterion { id: 4, name: "formula equals enumeration, n ≤ 8", budget: Duration::from_secs(60), run: oracle_equivalence },
        Criterion { id: 5, name: "cell structure of every multi-split, n ≤ 6", budget: Duration::from_secs(300), run: structure_suite },
        Criterion { id: 6, name: "Stiefel round trip, n ≤ 6", budget: Duration::from_secs(600), run: stiefel_roundtrip },
        Criterion { id: 7, name: "coarseness by linearity dimension", budget: Duration::from_secs(300), run: coarseness },
        Criterion { id: 8, name: "symmetry classes", budget: Duration::from_secs(1), run: symmetry },
        Criterion { id: 9, name: "tropical Plücker relations", budget: Duration::from_secs(120), run: dressian },
        Criterion { id: 10, name: "corank covering of nested matroids, n ≤ 7", budget: Duration::from_secs(120), run: covering },
        Criterion { id: 11, name: "five-point configuration corpus", budget: Duration::from_secs(1), run: five_point_corpus },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > c.budget => ("FAIL", format!("over budget {:?}", c.budget)),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} [{:>8.3}s / {:>4}s] {}: {detail}", c.id, elapsed.as_secs_f64(), c.budget.as_secs(), c.name);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
