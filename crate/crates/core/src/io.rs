//! JSON schemas for matroids, multi-splits, product liftings, subdivisions
//! and multi-split catalogs.
//!
//! Reading is two-staged: `serde` checks the shape (a [`Error::Parse`] on
//! failure), then the `to_*` conversions validate the mathematics and report
//! the violated invariant with the library's other error variants.
//! Rationals are always written as `"num/den"`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::engine::{Lifting, PointConfiguration, Subdivision};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankedPartition};
use crate::multisplit::{MultiSplit, SymmetryClass};
use crate::scalar::{Field, Weight};
use crate::stiefel::ProductLifting;
use crate::subset::{binomial, Subset, MAX_GROUND};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed with a trailing newline; the byte-stable form of every file.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("schema types always serialize");
    s.push('\n');
    s
}

/// An exact rational: written as `"num/den"`, read from a string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "ExactIn")]
pub struct Exact(pub String);

#[derive(Deserialize)]
#[serde(untagged)]
enum ExactIn {
    Str(String),
    Int(i64),
}

impl From<ExactIn> for Exact {
    fn from(v: ExactIn) -> Self {
        match v {
            ExactIn::Str(s) => Exact(s),
            ExactIn::Int(i) => Exact(i.to_string()),
        }
    }
}

impl Exact {
    pub fn from_value<T: Weight>(v: &T) -> Self {
        Exact(v.to_exact_string())
    }

    pub fn value<T: Weight>(&self) -> Result<T> {
        T::parse_exact(&self.0)
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::Range(format!("n = {n} exceeds {MAX_GROUND}")));
    }
    Ok(())
}

/// 1-based, strictly increasing.
fn strict_subset(n: usize, elements: &[usize]) -> Result<Subset> {
    if elements.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Subset(format!("{elements:?} is not strictly increasing")));
    }
    Subset::from_elements(n, elements)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidJson {
    pub n: usize,
    pub d: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidJson {
    /// Bases in colex order.
    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidJson {
            n: m.n(),
            d: m.d(),
            bases: m.bases().iter().map(|b| b.to_vec()).collect(),
        }
    }

    /// Also checks the exchange axiom.
    pub fn to_matroid(&self) -> Result<Matroid> {
        check_ground(self.n)?;
        let bases = self
            .bases
            .iter()
            .map(|b| strict_subset(self.n, b))
            .collect::<Result<Vec<_>>>()?;
        Matroid::new(self.n, self.d, bases)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    pub elements: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiSplitJson {
    pub n: usize,
    pub d: usize,
    pub blocks: Vec<BlockJson>,
}

impl MultiSplitJson {
    /// Writes the canonical rotation.
    pub fn from_multisplit(ms: &MultiSplit) -> Self {
        let c = ms.canonicalized();
        let p = c.partition();
        MultiSplitJson {
            n: p.n(),
            d: p.d(),
            blocks: p
                .blocks()
                .iter()
                .zip(p.ranks())
                .map(|(b, &r)| BlockJson {
                    elements: b.to_vec(),
                    rank: r,
                })
                .collect(),
        }
    }

    /// Keeps the block order as written.
    pub fn to_multisplit(&self) -> Result<MultiSplit> {
        check_ground(self.n)?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| strict_subset(self.n, &b.elements))
            .collect::<Result<Vec<_>>>()?;
        let ranks = self.blocks.iter().map(|b| b.rank).collect();
        let p = RankedPartition::new(self.n, blocks, ranks)?;
        if p.d() != self.d {
            return Err(Error::Partition(format!("ranks sum to {}, header says d = {}", p.d(), self.d)));
        }
        MultiSplit::new(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaEntry {
    pub i: usize,
    pub j: usize,
    pub h: Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductLiftingJson {
    pub n: usize,
    pub base: Vec<usize>,
    pub lambda: Vec<LambdaEntry>,
}

impl ProductLiftingJson {
    pub fn from_lifting<T: Weight>(pl: &ProductLifting<T>) -> Self {
        ProductLiftingJson {
            n: pl.n(),
            base: pl.base().to_vec(),
            lambda: pl
                .entries()
                .map(|(i, j, h)| LambdaEntry { i, j, h: Exact::from_value(h) })
                .collect(),
        }
    }

    pub fn to_lifting<T: Weight>(&self) -> Result<ProductLifting<T>> {
        check_ground(self.n)?;
        let base = strict_subset(self.n, &self.base)?;
        let entries = self
            .lambda
            .iter()
            .map(|e| Ok((e.i, e.j, e.h.value::<T>()?)))
            .collect::<Result<Vec<_>>>()?;
        ProductLifting::from_entries(base, entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConfigJson {
    /// Only `"hypersimplex"` is accepted.
    Named(String),
    Explicit(PointsJson),
}

/// Also the input format for point files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsJson {
    pub points: Vec<Vec<Exact>>,
}

impl PointsJson {
    pub fn from_configuration<T: Field>(pc: &PointConfiguration<T>) -> Self {
        PointsJson {
            points: pc
                .points()
                .iter()
                .map(|p| p.iter().map(Exact::from_value).collect())
                .collect(),
        }
    }

    pub fn to_configuration<T: Field>(&self) -> Result<PointConfiguration<T>> {
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(Exact::value).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(points)
    }
}

pub fn heights_to_json<T: Weight>(h: &Lifting<T>) -> Vec<Exact> {
    h.heights().iter().map(Exact::from_value).collect()
}

pub fn heights_from_json<T: Weight>(h: &[Exact]) -> Result<Lifting<T>> {
    Ok(Lifting::new(h.iter().map(Exact::value).collect::<Result<_>>()?))
}

/// Heights on the vertices of `Δ(d, n)` in colex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftingJson {
    pub d: usize,
    pub n: usize,
    pub heights: Vec<Exact>,
}

impl LiftingJson {
    pub fn from_lifting<T: Weight>(d: usize, n: usize, h: &Lifting<T>) -> Self {
        LiftingJson { d, n, heights: heights_to_json(h) }
    }

    pub fn to_lifting<T: Weight>(&self) -> Result<Lifting<T>> {
        check_ground(self.n)?;
        if self.d > self.n || self.heights.len() != binomial(self.n, self.d) {
            return Err(Error::SizeMismatch(format!(
                "{} heights for Δ({}, {})",
                self.heights.len(),
                self.d,
                self.n
            )));
        }
        heights_from_json(&self.heights)
    }
}

/// A heights file: a bare list, or a [`LiftingJson`] object.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum HeightsInput {
    List(Vec<Exact>),
    Lifting(LiftingJson),
}

impl HeightsInput {
    pub fn heights(&self) -> &[Exact] {
        match self {
            HeightsInput::List(h) => h,
            HeightsInput::Lifting(l) => &l.heights,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubdivisionJson {
    pub config: ConfigJson,
    /// Present for hypersimplex configurations only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub heights: Vec<Exact>,
    pub cells: Vec<Vec<usize>>,
}

impl SubdivisionJson {
    pub fn new<T: Field>(pc: &PointConfiguration<T>, lifting: &Lifting<T>, s: &Subdivision<T>) -> Self {
        let (config, n, d) = match pc.kind() {
            crate::engine::ConfigKind::Hypersimplex { d, n } => (ConfigJson::Named("hypersimplex".into()), Some(n), Some(d)),
            _ => (ConfigJson::Explicit(PointsJson::from_configuration(pc)), None, None),
        };
        SubdivisionJson {
            config,
            n,
            d,
            heights: heights_to_json(lifting),
            cells: s.cells().to_vec(),
        }
    }

    pub fn configuration<T: Field>(&self) -> Result<PointConfiguration<T>> {
        match &self.config {
            ConfigJson::Named(name) if name == "hypersimplex" => match (self.d, self.n) {
                (Some(d), Some(n)) => PointConfiguration::hypersimplex(d, n),
                _ => Err(Error::Parse("hypersimplex subdivision needs `n` and `d`".into())),
            },
            ConfigJson::Named(name) => Err(Error::Parse(format!("unknown configuration `{name}`"))),
            ConfigJson::Explicit(p) => p.to_configuration(),
        }
    }

    pub fn lifting<T: Field>(&self) -> Result<Lifting<T>> {
        heights_from_json(&self.heights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogHeader {
    pub d: usize,
    pub n: usize,
    /// `None` when the catalog holds every admissible `k`.
    pub k: Option<usize>,
    pub count: usize,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    pub representative: MultiSplitJson,
    pub orbit_size: usize,
    pub signature: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub header: CatalogHeader,
    pub records: Vec<MultiSplitJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassJson>>,
}

/// Records sort by `k`, then by their block lists.
fn record_key(r: &MultiSplitJson) -> (usize, &[BlockJson]) {
    (r.blocks.len(), &r.blocks)
}

impl Catalog {
    pub fn new(d: usize, n: usize, k: Option<usize>, splits: &[MultiSplit], classes: Option<&[SymmetryClass]>) -> Self {
        let mut records: Vec<MultiSplitJson> = splits.iter().map(MultiSplitJson::from_multisplit).collect();
        records.sort_by(|a, b| record_key(a).cmp(&record_key(b)));
        Catalog {
            header: CatalogHeader {
                d,
                n,
                k,
                count: records.len(),
                version: TOOL_VERSION.into(),
            },
            records,
            classes: classes.map(|cs| {
                cs.iter()
                    .map(|c| ClassJson {
                        representative: MultiSplitJson::from_multisplit(&c.representative),
                        orbit_size: c.orbit_size,
                        signature: c.signature.clone(),
                    })
                    .collect()
            }),
        }
    }

    /// Check the header against the records and the canonical form of each record.
    pub fn validate(&self) -> Result<Vec<MultiSplit>> {
        let h = &self.header;
        if h.count != self.records.len() {
            return Err(Error::Inconsistent(format!(
                "header count {} but {} records",
                h.count,
                self.records.len()
            )));
        }
        let mut out = Vec::with_capacity(self.records.len());
        for (idx, r) in self.records.iter().enumerate() {
            let ms = r.to_multisplit().map_err(|e| Error::Inconsistent(format!("record {idx}: {e}")))?;
            if ms.d() != h.d || ms.n() != h.n || h.k.is_some_and(|k| k != ms.k()) {
                return Err(Error::Inconsistent(format!("record {idx} does not match the header")));
            }
            if !ms.canonical_rotation_applied() {
                return Err(Error::Inconsistent(format!("record {idx} is not in canonical rotation")));
            }
            out.push(ms);
        }
        if self.records.windows(2).any(|w| record_key(&w[0]) >= record_key(&w[1])) {
            return Err(Error::Inconsistent("records are not in canonical order".into()));
        }
        if let Some(classes) = &self.classes {
            let total: usize = classes.iter().map(|c| c.orbit_size).sum();
            if total != h.count {
                return Err(Error::Inconsistent(format!("orbit sizes sum to {total}, header count is {}", h.count)));
            }
            for c in classes {
                let rep = c.representative.to_multisplit()?;
                if rep.shape_signature() != c.signature {
                    return Err(Error::Inconsistent(format!("class signature {:?} does not match its representative", c.signature)));
                }
            }
        }
        Ok(out)
    }
}
