use std::path::Path;
use std::thread;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde_json::Value;

use multisplit::io::{Catalog, MatroidJson, MultiSplitJson};
use multisplit::multisplit::cells_from_inequalities;
use multisplit::stiefel::{matroid_cells, verify_stiefel_roundtrip};
use multisplit::{
    corank_subdivision, is_matroid_subdivision, plucker_violation, secondary_linearity_dimension,
    verify_corank_covering, Lifting, Matroid, MultiSplit, PointConfiguration, Rational, Subdivision, Subset,
    Weight,
};

use crate::{read_text, CHECK_FAILED};

/// Worker count for catalog verification; 1 when unset.
const THREADS_VAR: &str = "MULTISPLIT_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    /// Maximal cells are the connected nested matroids of the rotations.
    Cells,
    /// Every cell satisfies the basis exchange axiom.
    Exchange,
    /// The corank vector of a maximal cell induces the whole subdivision.
    Corank,
    /// Stiefel image of the induced product lifting gives the same cells.
    Stiefel,
    /// The subdivision spans a ray of the secondary fan.
    Coarse,
    /// Corank vectors satisfy the tropical Plücker relations.
    Plucker,
    /// Corank cells meeting the matroid cover every vertex.
    Covering,
}

const ALL: [Check; 7] = [
    Check::Cells,
    Check::Exchange,
    Check::Corank,
    Check::Stiefel,
    Check::Coarse,
    Check::Plucker,
    Check::Covering,
];

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Cells => "cells",
            Check::Exchange => "exchange",
            Check::Corank => "corank",
            Check::Stiefel => "stiefel",
            Check::Coarse => "coarse",
            Check::Plucker => "plucker",
            Check::Covering => "covering",
        }
    }
}

/// `Ok(detail)` or `Err(counterexample)`; `None` when the check does not apply.
type Outcome = Option<Result<String, String>>;

pub fn run(path: &Path, checks: &[Check], all_bases: bool) -> Result<u8> {
    let mut checks = if checks.is_empty() { ALL.to_vec() } else { checks.to_vec() };
    checks.sort();
    checks.dedup();
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let kind = |key: &str| value.get(key).is_some();
    let reports = if kind("header") && kind("records") {
        let catalog: Catalog = from_value(value, path)?;
        let splits = match catalog.validate() {
            Ok(s) => s,
            Err(e) => return Ok(fail_input(&format!("catalog: {e}"))),
        };
        let per_record = verify_all(&splits, &checks, all_bases)?;
        aggregate(&checks, &per_record)
    } else if kind("blocks") {
        match from_value::<MultiSplitJson>(value, path)?.to_multisplit() {
            Ok(ms) => checks.iter().map(|&c| (c, check_multisplit(&ms, c, all_bases))).collect(),
            Err(e) => return Ok(fail_input(&e.to_string())),
        }
    } else if kind("bases") {
        let mj: MatroidJson = from_value(value, path)?;
        match mj.to_matroid() {
            Ok(m) => checks.iter().map(|&c| (c, check_matroid(&m, c))).collect(),
            Err(e) => {
                println!("exchange FAIL: {e}");
                return Ok(CHECK_FAILED);
            }
        }
    } else {
        bail!("{}: expected a catalog, a multi-split or a matroid", path.display());
    };
    let mut failed = false;
    for (check, outcome) in reports {
        match outcome {
            Some(Ok(detail)) => println!("{} PASS: {detail}", check.name()),
            Some(Err(why)) => {
                println!("{} FAIL: {why}", check.name());
                failed = true;
            }
            None => println!("{} SKIP: needs a multi-split", check.name()),
        }
    }
    Ok(if failed { CHECK_FAILED } else { 0 })
}

fn from_value<T: serde::de::DeserializeOwned>(value: Value, path: &Path) -> Result<T> {
    serde_json::from_value(value).with_context(|| format!("parsing {}", path.display()))
}

fn fail_input(why: &str) -> u8 {
    println!("valid FAIL: {why}");
    CHECK_FAILED
}

fn thread_count() -> Result<usize> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => bail!("{THREADS_VAR} must be a positive integer, got `{v}`"),
        },
    }
}

/// One row of outcomes per record, in record order whatever the thread count.
fn verify_all(splits: &[MultiSplit], checks: &[Check], all_bases: bool) -> Result<Vec<Vec<Outcome>>> {
    let run_one = |ms: &MultiSplit| checks.iter().map(|&c| check_multisplit(ms, c, all_bases)).collect::<Vec<_>>();
    let threads = thread_count()?;
    if threads == 1 || splits.len() < 2 {
        return Ok(splits.iter().map(run_one).collect());
    }
    let chunk = splits.len().div_ceil(threads);
    Ok(thread::scope(|s| {
        let handles: Vec<_> = splits
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(run_one).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verification worker panicked"))
            .collect()
    }))
}

/// Per check: pass with the record count, or the first failing record.
fn aggregate(checks: &[Check], rows: &[Vec<Outcome>]) -> Vec<(Check, Outcome)> {
    checks
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let failures: Vec<(usize, &String)> = rows
                .iter()
                .enumerate()
                .filter_map(|(r, row)| match &row[i] {
                    Some(Err(why)) => Some((r, why)),
                    _ => None,
                })
                .collect();
            let outcome = match failures.first() {
                Some((r, why)) => Err(format!("{} of {} records, first is record {r}: {why}", failures.len(), rows.len())),
                None => Ok(format!("{} records", rows.len())),
            };
            (c, Some(outcome))
        })
        .collect()
}

fn describe(ms: &MultiSplit) -> String {
    let p = ms.partition();
    let blocks: Vec<String> = p.blocks().iter().zip(p.ranks()).map(|(b, r)| format!("{b}:{r}")).collect();
    format!("Δ({}, {}) split [{}]", ms.d(), ms.n(), blocks.join(" "))
}

fn check_multisplit(ms: &MultiSplit, check: Check, all_bases: bool) -> Outcome {
    let k = ms.k();
    let maximal = ms.maximal_cells();
    let outcome = match check {
        Check::Cells => (|| {
            for (t, m) in maximal.iter().enumerate() {
                let rot = ms.partition().rotated(t);
                let chain = rot.cumulative_chain();
                let mut want: Vec<(Subset, usize)> = vec![(Subset::empty(ms.n()), 0)];
                want.extend(chain.flats().iter().copied().zip(chain.ranks().iter().copied()));
                let got = m.cyclic_flats();
                if got != want {
                    return Err(format!("{}: cell {t} has cyclic flats {got:?}, expected {want:?}", describe(ms)));
                }
                if !m.is_connected().map_err(|e| e.to_string())? {
                    return Err(format!("{}: cell {t} is disconnected", describe(ms)));
                }
                if cells_from_inequalities(&rot) != *m {
                    return Err(format!("{}: cell {t} differs from its inequality description", describe(ms)));
                }
            }
            let common = ms.common_cell();
            let mut meet: Vec<Subset> = maximal[0].bases().to_vec();
            for m in &maximal[1..] {
                meet.retain(|b| m.is_basis(*b));
            }
            if meet != common.bases() {
                return Err(format!("{}: maximal cells meet in {} vertices, common cell has {}", describe(ms), meet.len(), common.bases().len()));
            }
            Ok(format!("{k} connected nested cells with {} cyclic flats each", k + 1))
        })(),
        Check::Exchange => (|| {
            let common = ms.common_cell();
            for (name, m) in maximal.iter().enumerate().map(|(t, m)| (format!("cell {t}"), m)).chain([("common cell".to_string(), &common)]) {
                Matroid::new(m.n(), m.d(), m.bases().to_vec()).map_err(|e| format!("{}: {name}: {e}", describe(ms)))?;
            }
            Ok(format!("{} cells", k + 1))
        })(),
        Check::Corank => (|| {
            let expected = matroid_cells(ms);
            for (t, m) in maximal.iter().enumerate() {
                let s: Subdivision<Rational> = corank_subdivision(m).map_err(|e| e.to_string())?;
                if s.cells() != expected.as_slice() {
                    return Err(format!("{}: corank of cell {t} gives {} cells, expected {k}", describe(ms), s.cells().len()));
                }
            }
            Ok(format!("each of {k} corank vectors induces the {k}-split"))
        })(),
        Check::Stiefel => (|| {
            let common = ms.common_cell();
            let bases = if all_bases { common.bases() } else { &common.bases()[..1] };
            for t in 0..k {
                let rot = ms.rotated(t);
                for &b in bases {
                    if !verify_stiefel_roundtrip(&rot, b).map_err(|e| e.to_string())? {
                        return Err(format!("{}: rotation {t}, base {b} gives different cells", describe(ms)));
                    }
                }
            }
            Ok(format!("{} (rotation, base) pairs", k * bases.len()))
        })(),
        Check::Coarse => (|| {
            let pc = PointConfiguration::<Rational>::hypersimplex(ms.d(), ms.n()).map_err(|e| e.to_string())?;
            let s = corank_subdivision(&maximal[0]).map_err(|e| e.to_string())?;
            let lin = secondary_linearity_dimension(&pc, &s).map_err(|e| e.to_string())?;
            if !lin.is_coarsest {
                return Err(format!("{}: dim W = {}, a ray needs {}", describe(ms), lin.dim, lin.affine_dim + 2));
            }
            Ok(format!("dim W = {}", lin.dim))
        })(),
        Check::Plucker => maximal
            .iter()
            .enumerate()
            .try_for_each(|(t, m)| plucker(m).map_err(|e| format!("{}: cell {t}: {e}", describe(ms))))
            .map(|()| format!("{k} corank vectors")),
        Check::Covering => maximal
            .iter()
            .enumerate()
            .try_for_each(|(t, m)| match verify_corank_covering(m) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("{}: cell {t} leaves a vertex uncovered", describe(ms))),
                Err(e) => Err(e.to_string()),
            })
            .map(|()| format!("{k} maximal cells")),
    };
    Some(outcome)
}

fn check_matroid(m: &Matroid, check: Check) -> Outcome {
    let outcome = match check {
        Check::Cells | Check::Stiefel | Check::Coarse => return None,
        Check::Exchange => Ok(format!("{} bases", m.bases().len())),
        Check::Corank => (|| {
            let s: Subdivision<Rational> = corank_subdivision(m).map_err(|e| e.to_string())?;
            if !is_matroid_subdivision(&s, m.d(), m.n()).map_err(|e| e.to_string())? {
                return Err("corank subdivision has a cell that is not a matroid polytope".into());
            }
            let mut own: Vec<usize> = m.bases().iter().map(|b| b.colex_rank()).collect();
            own.sort_unstable();
            let connected = m.is_connected().map_err(|e| e.to_string())?;
            let found = if connected {
                s.cells().contains(&own)
            } else {
                s.cells().iter().any(|c| own.iter().all(|v| c.binary_search(v).is_ok()))
            };
            if !found {
                return Err("the matroid polytope is not a face of its corank subdivision".into());
            }
            Ok(format!("{} matroid cells", s.cells().len()))
        })(),
        Check::Plucker => plucker(m).map(|()| "corank vector".to_string()),
        Check::Covering => match verify_corank_covering(m) {
            Ok(true) => Ok("every vertex covered".into()),
            Ok(false) => Err("a vertex lies in no corank cell meeting the matroid".into()),
            Err(e) => Err(e.to_string()),
        },
    };
    Some(outcome)
}

fn plucker(m: &Matroid) -> Result<(), String> {
    let p = Lifting::<Rational>::corank(m);
    match plucker_violation(m.d(), m.n(), &p) {
        Ok(None) => Ok(()),
        Ok(Some(_)) => Err(plucker_violation_text(m.d(), m.n(), &p)),
        Err(e) => Err(e.to_string()),
    }
}

/// The first violated three-term relation, spelled out.
pub fn plucker_violation_text<T: Weight>(d: usize, n: usize, p: &Lifting<T>) -> String {
    match plucker_violation(d, n, p) {
        Ok(Some((s, [i, j, k, l]))) => {
            let at = |x: usize, y: usize| p.at(s.with(x).with(y)).clone();
            let terms = [
                at(i, j) + at(k, l),
                at(i, k) + at(j, l),
                at(i, l) + at(j, k),
            ];
            let shown: Vec<String> = terms.iter().map(|t| t.to_exact_string()).collect();
            format!("S = {s}, (i, j, k, l) = ({i}, {j}, {k}, {l}): terms {} have a unique minimum", shown.join(", "))
        }
        Ok(None) => "no violated relation".into(),
        Err(e) => e.to_string(),
    }
}
