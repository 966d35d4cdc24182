//! Partitions, `r`-multipartitions and bipartitions, their Young diagrams,
//! transposes, orders and standard tableau counts.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::combinat::{multinomial, set_compositions};
use crate::{Error, Flavor, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, e.g. from a list of letter frequencies.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-based, with `0` past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn diagram(&self) -> Diagram {
        Diagram(
            self.0
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
                .collect(),
        )
    }

    /// Parses `"3,2"`; the empty string and `"∅"` give the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }

    fn fmt_bare(&self) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("∅")
        } else {
            f.write_str(&self.fmt_bare())
        }
    }
}

/// A sequence of `r` partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(MultiPartition(components))
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    pub fn transpose(&self) -> MultiPartition {
        MultiPartition(self.0.iter().map(Partition::transpose).collect())
    }

    pub fn diagram(&self) -> Vec<Diagram> {
        self.0.iter().map(Partition::diagram).collect()
    }

    /// Parses `"2,1|2|1,1"`; blank components are empty.
    pub fn parse(text: &str, r: usize) -> Result<Self> {
        let comps = text
            .split('|')
            .map(Partition::parse)
            .collect::<Result<Vec<_>>>()?;
        if comps.len() != r {
            return Err(Error::Parse(format!(
                "expected {r} components in {text:?}, found {}",
                comps.len()
            )));
        }
        MultiPartition::new(comps)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(Partition::to_json).collect())
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Partition::fmt_bare).collect();
        f.write_str(&s.join("|"))
    }
}

/// A pair of partitions whose transpose swaps the components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPartition {
    pub zero: Partition,
    pub one: Partition,
}

impl BiPartition {
    pub fn new(zero: Partition, one: Partition) -> Self {
        BiPartition { zero, one }
    }

    pub fn size(&self) -> usize {
        self.zero.size() + self.one.size()
    }

    pub fn transpose(&self) -> BiPartition {
        BiPartition {
            zero: self.one.transpose(),
            one: self.zero.transpose(),
        }
    }

    /// The 2x2 bidiagram; the Young diagrams sit off the diagonal.
    pub fn diagram(&self) -> [[Diagram; 2]; 2] {
        [
            [Diagram::default(), self.zero.diagram()],
            [self.one.diagram(), Diagram::default()],
        ]
    }

    /// Sort key: size of the first component, then each component lexicographically.
    pub fn order_key(&self) -> (usize, Partition, Partition) {
        (self.zero.size(), self.zero.clone(), self.one.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let m = MultiPartition::parse(text, 2)?;
        Ok(BiPartition {
            zero: m.0[0].clone(),
            one: m.0[1].clone(),
        })
    }

    /// The compact dotted form, e.g. `11.1` for `((1,1),(1))`.
    pub fn dotted(&self) -> String {
        let squash = |p: &Partition| p.parts().iter().map(|x| x.to_string()).collect::<String>();
        format!("{}.{}", squash(&self.zero), squash(&self.one))
    }

    pub fn to_json(&self) -> Value {
        json!([self.zero.to_json(), self.one.to_json()])
    }
}

impl PartialOrd for BiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BiPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.zero.fmt_bare(), self.one.fmt_bare())
    }
}

pub fn bipartition_order_key(b: &BiPartition) -> (usize, Partition, Partition) {
    b.order_key()
}

/// A finite set of 1-based (row, column) cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagram(pub BTreeSet<(usize, usize)>);

impl Diagram {
    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.0
    }

    pub fn transpose(&self) -> Diagram {
        Diagram(self.0.iter().map(|&(i, j)| (j, i)).collect())
    }
}

/// Any of the three shape kinds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Plain(Partition),
    Multi(MultiPartition),
    Bi(BiPartition),
}

impl Shape {
    pub fn flavor(&self) -> Flavor {
        match self {
            Shape::Plain(_) => Flavor::Plain,
            Shape::Multi(m) => Flavor::RWord(m.r() as u32),
            Shape::Bi(_) => Flavor::BiWord,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Plain(p) => p.size(),
            Shape::Multi(m) => m.size(),
            Shape::Bi(b) => b.size(),
        }
    }

    pub fn transpose(&self) -> Shape {
        match self {
            Shape::Plain(p) => Shape::Plain(p.transpose()),
            Shape::Multi(m) => Shape::Multi(m.transpose()),
            Shape::Bi(b) => Shape::Bi(b.transpose()),
        }
    }

    /// The components in word order: one for plain, `r` for multi, `(zero, one)` for bi.
    pub fn components(&self) -> Vec<&Partition> {
        match self {
            Shape::Plain(p) => vec![p],
            Shape::Multi(m) => m.components().iter().collect(),
            Shape::Bi(b) => vec![&b.zero, &b.one],
        }
    }

    pub fn parse(text: &str, flavor: Flavor) -> Result<Self> {
        match flavor {
            Flavor::Plain => Partition::parse(text).map(Shape::Plain),
            Flavor::RWord(r) => MultiPartition::parse(text, r as usize).map(Shape::Multi),
            Flavor::BiWord => BiPartition::parse(text).map(Shape::Bi),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Shape::Plain(p) => p.to_json(),
            Shape::Multi(m) => m.to_json(),
            Shape::Bi(b) => b.to_json(),
        }
    }

    pub fn from_json(value: &Value, flavor: Flavor) -> Result<Self> {
        let bad = || Error::Parse(format!("bad shape JSON {value}"));
        let part = |v: &Value| -> Result<Partition> {
            let parts = v
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?;
            Partition::new(parts)
        };
        match flavor {
            Flavor::Plain => part(value).map(Shape::Plain),
            _ => {
                let comps = value
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(part)
                    .collect::<Result<Vec<_>>>()?;
                if comps.len() != flavor.r() as usize {
                    return Err(bad());
                }
                match flavor {
                    Flavor::BiWord => Ok(Shape::Bi(BiPartition::new(
                        comps[0].clone(),
                        comps[1].clone(),
                    ))),
                    _ => MultiPartition::new(comps).map(Shape::Multi),
                }
            }
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Plain(p) => p.fmt(f),
            Shape::Multi(m) => m.fmt(f),
            Shape::Bi(b) => b.fmt(f),
        }
    }
}

/// All partitions of `n`, lexicographically ascending.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in 1..=rest.min(max) {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into `r` parts, lexicographically ascending.
pub fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if r == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut tail in compositions(n - first, r - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// All `r`-multipartitions of `n`.
///
/// Order: by the size vector `(|l0|, ..., |l(r-1)|)` lexicographically (so
/// the one with everything in the first component comes last), then by the
/// components lexicographically. For `r = 2` this agrees with the
/// bipartition order.
pub fn multipartitions_of(n: usize, r: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for sizes in compositions(n, r) {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&k| partitions_of(k)).collect();
        let mut idx = vec![0usize; r];
        loop {
            out.push(MultiPartition(
                idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect(),
            ));
            let mut k = r;
            let exhausted = loop {
                if k == 0 {
                    break true;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < lists[k].len() {
                    break false;
                }
                idx[k] = 0;
            };
            if exhausted {
                break;
            }
        }
    }
    out
}

/// All bipartitions of `n` in the bipartition order.
pub fn bipartitions_of(n: usize) -> Vec<BiPartition> {
    let mut out: Vec<BiPartition> = multipartitions_of(n, 2)
        .into_iter()
        .map(|m| BiPartition::new(m.0[0].clone(), m.0[1].clone()))
        .collect();
    out.sort();
    out
}

/// All shapes of total size `n` for a flavor, in the documented order.
pub fn shapes_of(n: usize, flavor: Flavor) -> Vec<Shape> {
    match flavor {
        Flavor::Plain => partitions_of(n).into_iter().map(Shape::Plain).collect(),
        Flavor::RWord(r) => multipartitions_of(n, r as usize)
            .into_iter()
            .map(Shape::Multi)
            .collect(),
        Flavor::BiWord => bipartitions_of(n).into_iter().map(Shape::Bi).collect(),
    }
}

/// A tableau given by its rows; entries are arbitrary labels.
pub type Rows = Vec<Vec<usize>>;

/// All standard Young tableaux of shape `p` filled with `1..=|p|`, built by
/// placing `1, 2, ...` in turn into every admissible cell.
pub fn standard_tableaux(p: &Partition) -> Vec<Rows> {
    fn rec(p: &Partition, next: usize, rows: &mut Rows, out: &mut Vec<Rows>) {
        if next > p.size() {
            out.push(rows.clone());
            return;
        }
        for i in 0..p.len() {
            let len = rows[i].len();
            let fits = len < p.parts()[i] && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(next);
                rec(p, next + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(p, 1, &mut vec![Vec::new(); p.len()], &mut out);
    out
}

/// Standard multitableaux: every split of `1..=n` among the components,
/// combined with a standard tableau on each component. Each entry of the
/// result lists the component tableaux in order.
pub fn standard_multitableaux(components: &[&Partition]) -> Vec<Vec<Rows>> {
    let sizes: Vec<usize> = components.iter().map(|p| p.size()).collect();
    let per_comp: Vec<Vec<Rows>> = components.iter().map(|p| standard_tableaux(p)).collect();
    let mut out = Vec::new();
    for split in set_compositions(&sizes) {
        let mut acc: Vec<Vec<Rows>> = vec![Vec::new()];
        for (k, values) in split.iter().enumerate() {
            let relabeled: Vec<Rows> = per_comp[k]
                .iter()
                .map(|t| {
                    t.iter()
                        .map(|row| row.iter().map(|&e| values[e - 1]).collect())
                        .collect()
                })
                .collect();
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    relabeled.iter().map(move |t| {
                        let mut v = prefix.clone();
                        v.push(t.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

/// The number of standard (multi/bi)tableaux of a shape.
pub fn count_standard(shape: &Shape) -> u128 {
    match shape {
        Shape::Plain(p) => standard_tableaux(p).len() as u128,
        _ => {
            let comps = shape.components();
            let sizes: Vec<usize> = comps.iter().map(|p| p.size()).collect();
            comps.iter().fold(multinomial(&sizes), |acc, p| {
                acc * standard_tableaux(p).len() as u128
            })
        }
    }
}
