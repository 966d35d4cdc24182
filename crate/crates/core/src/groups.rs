//! Elements of `S_n`, `S^(r)_n` and `H_n`.
//!
//! Everything composes left to right: `x.(ab) = (x.a).b`. Internally points
//! are 0-based; all text and JSON forms are 1-based.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use crate::combinat::{factorial, next_permutation};
use crate::shapes::{multipartitions_of, MultiPartition, Partition};
use crate::{Caps, Error, Flavor, Result};

/// A permutation of `{1..n}` in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Invalid(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation, e.g. `[2,1,4,3]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid(format!("{images:?} contains 0")));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// The product, left to right, of 1-based cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..n).collect();
            let mut seen = vec![false; n];
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n || seen[point - 1] {
                    return Err(Error::Invalid(format!("bad cycle {cycle:?} on {n} points")));
                }
                seen[point - 1] = true;
                images[point - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            acc = acc.compose(&Permutation { images });
        }
        Ok(acc)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// `x.(self other) = (x.self).other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different degree"
        );
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Parity of the inversion count.
    pub fn sign(&self) -> i8 {
        let mut inversions = 0usize;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// 0-based cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_multiset(self.cycles().iter().map(Vec::len).collect())
    }

    /// Parses cycle notation `(1,2)(3,4)`, one-line `[2,1,4,3]`, or `()` / empty for the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() {
            return Ok(Permutation::identity(n));
        }
        if t.starts_with('[') {
            let vals = parse_list(t, '[', ']')?;
            let vals: Vec<usize> = vals
                .into_iter()
                .map(|v| {
                    usize::try_from(v).map_err(|_| Error::Parse(format!("negative entry in {t:?}")))
                })
                .collect::<Result<_>>()?;
            if vals.len() != n {
                return Err(Error::Parse(format!(
                    "{t:?} has length {} but n = {n}",
                    vals.len()
                )));
            }
            return Permutation::from_one_line(&vals);
        }
        let cycles = parse_cycles(t)?;
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                format!(
                    "({})",
                    c.iter()
                        .map(|i| (i + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        if cycles.is_empty() {
            f.write_str("()")
        } else {
            f.write_str(&cycles.concat())
        }
    }
}

fn parse_list(t: &str, open: char, close: char) -> Result<Vec<i64>> {
    let inner = t
        .strip_prefix(open)
        .and_then(|s| s.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("expected {open}...{close} in {t:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.replace('−', "-")
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad number {s:?} in {t:?}")))
        })
        .collect()
}

fn parse_cycles(t: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = t.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        }
        let end = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {t:?}")))?;
        let vals = parse_list(&rest[..=end], '(', ')')?;
        let cycle = vals
            .into_iter()
            .map(|v| {
                usize::try_from(v).map_err(|_| Error::Parse(format!("negative point in {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            out.push(cycle);
        }
        rest = rest[end + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == '*');
    }
    Ok(out)
}

/// An element of `S^(r)_n`: the monomial matrix `diag(w^phases) * P(perm)`.
///
/// Row `i` carries the entry `w^phases[i]` in column `i.perm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialElement {
    r: u32,
    phases: Vec<u32>,
    perm: Permutation,
}

impl MonomialElement {
    pub fn new(r: u32, phases: Vec<u32>, perm: Permutation) -> Result<Self> {
        if r == 0 {
            return Err(Error::Invalid("r must be positive".into()));
        }
        if phases.len() != perm.n() {
            return Err(Error::Invalid(
                "phase vector and permutation differ in length".into(),
            ));
        }
        if phases.iter().any(|&k| k >= r) {
            return Err(Error::Invalid(format!(
                "phases {phases:?} not reduced mod {r}"
            )));
        }
        Ok(MonomialElement { r, phases, perm })
    }

    pub fn identity(n: usize, r: u32) -> Self {
        MonomialElement {
            r,
            phases: vec![0; n],
            perm: Permutation::identity(n),
        }
    }

    pub fn from_perm(perm: Permutation, r: u32) -> Self {
        MonomialElement {
            r,
            phases: vec![0; perm.n()],
            perm,
        }
    }

    /// `t_j`: the diagonal matrix with `w` in position `j` (1-based).
    pub fn t(n: usize, r: u32, j: usize) -> Self {
        let mut phases = vec![0; n];
        phases[j - 1] = 1 % r;
        MonomialElement {
            r,
            phases,
            perm: Permutation::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn phases(&self) -> &[u32] {
        &self.phases
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn compose(&self, other: &MonomialElement) -> MonomialElement {
        assert_eq!(
            (self.n(), self.r),
            (other.n(), other.r),
            "composing elements of different groups"
        );
        let phases = (0..self.n())
            .map(|i| (self.phases[i] + other.phases[self.perm.image(i)]) % self.r)
            .collect();
        MonomialElement {
            r: self.r,
            phases,
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> MonomialElement {
        let mut phases = vec![0; self.n()];
        for i in 0..self.n() {
            phases[self.perm.image(i)] = (self.r - self.phases[i]) % self.r;
        }
        MonomialElement {
            r: self.r,
            phases,
            perm: self.perm.inverse(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.phases.iter().all(|&k| k == 0)
    }

    /// Cycle lengths of the permutation part, bucketed by the exponent of the cycle product.
    pub fn cycle_type(&self) -> MultiPartition {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); self.r as usize];
        for cycle in self.perm.cycles() {
            let k = cycle.iter().map(|&i| self.phases[i]).sum::<u32>() % self.r;
            buckets[k as usize].push(cycle.len());
        }
        MultiPartition::new(buckets.into_iter().map(Partition::from_multiset).collect())
            .expect("r >= 1 components")
    }

    /// Parses `"t1^2 t3 (1,2,3)"`, `"t1*t3*(1,2)"`, `"[2,1,3]"`, `"t1"` or `"()"`.
    pub fn parse(text: &str, n: usize, r: u32) -> Result<Self> {
        let (phases, rest) = parse_phase_prefix(text, n, r)?;
        let perm = Permutation::parse(rest, n)?;
        MonomialElement::new(r, phases, perm)
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n(), "r": self.r, "phases": self.phases, "perm": self.perm.one_line() })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad element JSON {value}"));
        let r = value.get("r").and_then(Value::as_u64).ok_or_else(bad)? as u32;
        let n = value.get("n").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let nums = |key: &str| -> Result<Vec<u64>> {
            value
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|v| v.as_u64().ok_or_else(bad))
                .collect()
        };
        let phases: Vec<u32> = nums("phases")?.into_iter().map(|k| k as u32).collect();
        let perm: Vec<usize> = nums("perm")?.into_iter().map(|k| k as usize).collect();
        if perm.len() != n {
            return Err(bad());
        }
        MonomialElement::new(r, phases, Permutation::from_one_line(&perm)?)
    }
}

fn parse_phase_prefix(text: &str, n: usize, r: u32) -> Result<(Vec<u32>, &str)> {
    let mut phases = vec![0i64; n];
    let mut rest = text.trim();
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == '*');
        let Some(after_t) = rest.strip_prefix('t') else {
            break;
        };
        let digits = after_t.chars().take_while(char::is_ascii_digit).count();
        let j: usize = after_t[..digits]
            .parse()
            .map_err(|_| Error::Parse(format!("bad factor in {text:?}")))?;
        if j == 0 || j > n {
            return Err(Error::Parse(format!("t{j} out of range for n = {n}")));
        }
        rest = &after_t[digits..];
        let mut k = 1i64;
        if let Some(after_hat) = rest.strip_prefix('^') {
            let len = after_hat
                .char_indices()
                .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
                .count();
            k = after_hat[..len]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {text:?}")))?;
            rest = &after_hat[len..];
        }
        phases[j - 1] += k;
    }
    let phases = phases
        .into_iter()
        .map(|k| k.rem_euclid(r as i64) as u32)
        .collect();
    Ok((phases, rest))
}

impl fmt::Display for MonomialElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .phases
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(j, &k)| {
                if k == 1 {
                    format!("t{}", j + 1)
                } else {
                    format!("t{}^{k}", j + 1)
                }
            })
            .collect();
        if !self.perm.is_identity() || parts.is_empty() {
            parts.push(self.perm.to_string());
        }
        f.write_str(&parts.join(" "))
    }
}

/// A signed permutation: `i -> i.sigma` in `+-[n]` for `i` in `[n]`, extended by `(-i).sigma = -(i.sigma)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// From 1-based signed images, e.g. `[-2, 3, 1]`.
    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let abs: Vec<usize> = images.iter().map(|&i| i.unsigned_abs() as usize).collect();
        Permutation::from_one_line(&abs)?;
        Ok(SignedPermutation { images })
    }

    /// The sign change `t_j` (1-based).
    pub fn t(n: usize, j: usize) -> Self {
        let mut s = Self::identity(n);
        s.images[j - 1] = -s.images[j - 1];
        s
    }

    pub fn from_perm(perm: &Permutation) -> Self {
        SignedPermutation {
            images: perm.one_line().into_iter().map(|i| i as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// 0-based target of 0-based `i`, and whether the sign flips.
    pub fn image(&self, i: usize) -> (usize, bool) {
        let v = self.images[i];
        (v.unsigned_abs() as usize - 1, v < 0)
    }

    /// Image of a signed 1-based point.
    pub fn apply(&self, point: i32) -> i32 {
        let v = self.images[point.unsigned_abs() as usize - 1];
        if point < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing signed permutations of different degree"
        );
        SignedPermutation {
            images: self.images.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            let target = v.unsigned_abs() as usize - 1;
            images[target] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn underlying(&self) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| v.unsigned_abs() as usize - 1)
                .collect(),
        }
    }

    /// Determinant of the monomial matrix: sign of the underlying permutation times `(-1)^#negatives`.
    pub fn sign(&self) -> i8 {
        let negatives = self.images.iter().filter(|&&v| v < 0).count();
        let s = self.underlying().sign();
        if negatives % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn to_monomial(&self) -> MonomialElement {
        MonomialElement {
            r: 2,
            phases: self.images.iter().map(|&v| u32::from(v < 0)).collect(),
            perm: self.underlying(),
        }
    }

    pub fn from_monomial(m: &MonomialElement) -> Result<Self> {
        if m.r != 2 {
            return Err(Error::Incompatible(format!(
                "signed permutations need r = 2, got r = {}",
                m.r
            )));
        }
        Ok(SignedPermutation {
            images: (0..m.n())
                .map(|i| {
                    let v = m.perm.image(i) as i32 + 1;
                    if m.phases[i] == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
        })
    }

    pub fn cycle_type(&self) -> MultiPartition {
        self.to_monomial().cycle_type()
    }

    /// Accepts the monomial text form (`"t1 (1,2,3)"`) or signed one-line notation (`"[-2,3,1]"`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let vals = parse_list(t, '[', ']')?;
            if vals.len() != n {
                return Err(Error::Parse(format!(
                    "{t:?} has length {} but n = {n}",
                    vals.len()
                )));
            }
            return Self::from_images(vals.into_iter().map(|v| v as i32).collect());
        }
        Self::from_monomial(&MonomialElement::parse(t, n, 2)?)
    }

    pub fn one_line_string(&self) -> String {
        format!(
            "[{}]",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_monomial().fmt(f)
    }
}

/// A group element of whichever family a flavor acts with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Perm(Permutation),
    Monomial(MonomialElement),
    Signed(SignedPermutation),
}

impl Element {
    pub fn n(&self) -> usize {
        match self {
            Element::Perm(p) => p.n(),
            Element::Monomial(m) => m.n(),
            Element::Signed(s) => s.n(),
        }
    }

    pub fn identity(n: usize, flavor: Flavor) -> Element {
        match flavor {
            Flavor::Plain => Element::Perm(Permutation::identity(n)),
            Flavor::RWord(r) => Element::Monomial(MonomialElement::identity(n, r)),
            Flavor::BiWord => Element::Signed(SignedPermutation::identity(n)),
        }
    }

    /// The element of the flavor's group corresponding to a monomial matrix
    /// (`r = 1` for plain, `r = 2` for biword).
    pub fn from_monomial(m: MonomialElement, flavor: Flavor) -> Result<Element> {
        match flavor {
            Flavor::Plain if m.r() == 1 => Ok(Element::Perm(m.perm)),
            Flavor::RWord(r) if m.r() == r => Ok(Element::Monomial(m)),
            Flavor::BiWord => SignedPermutation::from_monomial(&m).map(Element::Signed),
            _ => Err(Error::Incompatible(format!(
                "element of S^({})_n used with {flavor}",
                m.r()
            ))),
        }
    }

    /// Checks that the element belongs to the flavor's group; a bare
    /// permutation is accepted everywhere via the embedding of `S_n`.
    pub fn coerce(&self, flavor: Flavor) -> Result<Element> {
        match (flavor, self) {
            (Flavor::Plain, Element::Perm(_)) => Ok(self.clone()),
            (Flavor::Plain, Element::Monomial(m)) if m.r() == 1 => {
                Ok(Element::Perm(m.perm.clone()))
            }
            (Flavor::RWord(r), Element::Perm(p)) => {
                Ok(Element::Monomial(MonomialElement::from_perm(p.clone(), r)))
            }
            (Flavor::RWord(r), Element::Monomial(m)) if m.r() == r => Ok(self.clone()),
            (Flavor::BiWord, Element::Perm(p)) => {
                Ok(Element::Signed(SignedPermutation::from_perm(p)))
            }
            (Flavor::BiWord, Element::Signed(_)) => Ok(self.clone()),
            _ => Err(Error::Incompatible(format!(
                "{self} is not an element of the {flavor} group"
            ))),
        }
    }

    pub fn compose(&self, other: &Element) -> Result<Element> {
        if self.n() != other.n() {
            return Err(Error::Incompatible(format!(
                "degrees {} and {} differ",
                self.n(),
                other.n()
            )));
        }
        match (self, other) {
            (Element::Perm(a), Element::Perm(b)) => Ok(Element::Perm(a.compose(b))),
            (Element::Monomial(a), Element::Monomial(b)) if a.r() == b.r() => {
                Ok(Element::Monomial(a.compose(b)))
            }
            (Element::Signed(a), Element::Signed(b)) => Ok(Element::Signed(a.compose(b))),
            _ => Err(Error::Incompatible(format!(
                "cannot compose {self} with {other}"
            ))),
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Perm(p) => Element::Perm(p.inverse()),
            Element::Monomial(m) => Element::Monomial(m.inverse()),
            Element::Signed(s) => Element::Signed(s.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Perm(p) => p.is_identity(),
            Element::Monomial(m) => m.is_identity(),
            Element::Signed(s) => s.is_identity(),
        }
    }

    /// Sign for permutations and signed permutations; `None` for a general monomial element.
    pub fn sign(&self) -> Option<i8> {
        match self {
            Element::Perm(p) => Some(p.sign()),
            Element::Signed(s) => Some(s.sign()),
            Element::Monomial(m) if m.r() == 1 => Some(m.perm().sign()),
            Element::Monomial(_) => None,
        }
    }

    pub fn to_monomial(&self) -> MonomialElement {
        match self {
            Element::Perm(p) => MonomialElement::from_perm(p.clone(), 1),
            Element::Monomial(m) => m.clone(),
            Element::Signed(s) => s.to_monomial(),
        }
    }

    pub fn cycle_type(&self) -> MultiPartition {
        self.to_monomial().cycle_type()
    }

    pub fn parse(text: &str, n: usize, flavor: Flavor) -> Result<Element> {
        match flavor {
            Flavor::Plain => {
                if text.trim_start().starts_with('t') {
                    return Err(Error::Parse(
                        "sign/phase factors t_j are not elements of S_n".into(),
                    ));
                }
                Permutation::parse(text, n).map(Element::Perm)
            }
            Flavor::RWord(r) => MonomialElement::parse(text, n, r).map(Element::Monomial),
            Flavor::BiWord => SignedPermutation::parse(text, n).map(Element::Signed),
        }
    }

    pub fn to_json(&self) -> Value {
        self.to_monomial().to_json()
    }

    pub fn from_json(value: &Value, flavor: Flavor) -> Result<Element> {
        Element::from_monomial(MonomialElement::from_json(value)?, flavor)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => p.fmt(f),
            Element::Monomial(m) => m.fmt(f),
            Element::Signed(s) => s.fmt(f),
        }
    }
}

/// `r^n * n!`.
pub fn group_order(n: usize, r: u32) -> u128 {
    (r as u128)
        .checked_pow(n as u32)
        .and_then(|p| p.checked_mul(factorial(n)))
        .unwrap_or(u128::MAX)
}

/// Every element of `S^(r)_n` exactly once: permutations in lexicographic
/// one-line order, and within each, phase vectors as an odometer (last position fastest).
pub struct GroupIter {
    r: u32,
    perm: Vec<usize>,
    phases: Vec<u32>,
    done: bool,
}

impl Iterator for GroupIter {
    type Item = MonomialElement;

    fn next(&mut self) -> Option<MonomialElement> {
        if self.done {
            return None;
        }
        let item = MonomialElement {
            r: self.r,
            phases: self.phases.clone(),
            perm: Permutation {
                images: self.perm.clone(),
            },
        };
        let mut k = self.phases.len();
        let wrapped = loop {
            if k == 0 {
                break true;
            }
            k -= 1;
            self.phases[k] += 1;
            if self.phases[k] < self.r {
                break false;
            }
            self.phases[k] = 0;
        };
        if wrapped && !next_permutation(&mut self.perm) {
            self.done = true;
        }
        Some(item)
    }
}

pub fn enumerate_group(n: usize, r: u32, caps: &Caps) -> Result<GroupIter> {
    if r == 0 {
        return Err(Error::Invalid("r must be positive".into()));
    }
    Caps::check(&format!("S^({r})_{n}"), group_order(n, r), caps.group)?;
    Ok(GroupIter {
        r,
        perm: (0..n).collect(),
        phases: vec![0; n],
        done: false,
    })
}

/// Every element of the flavor's group, in the order of [`enumerate_group`].
pub fn enumerate_flavor(n: usize, flavor: Flavor, caps: &Caps) -> Result<Vec<Element>> {
    enumerate_group(n, flavor.r(), caps)?
        .map(|m| Element::from_monomial(m, flavor))
        .collect()
}

/// One conjugacy class of `S^(r)_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: MultiPartition,
    pub representative: MonomialElement,
    pub size: u128,
}

/// The canonical element of a cycle type: for each part `l` of component `k`,
/// an `l`-cycle on the next `l` unused points with phase `k` on its first point.
pub fn canonical_representative(cycle_type: &MultiPartition) -> MonomialElement {
    let n = cycle_type.size();
    let r = cycle_type.r() as u32;
    let mut phases = vec![0; n];
    let mut cycles = Vec::new();
    let mut next = 1;
    for (k, comp) in cycle_type.components().iter().enumerate() {
        for &len in comp.parts() {
            phases[next - 1] = k as u32;
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
    }
    let perm = Permutation::from_cycles(n, &cycles).expect("disjoint cycles");
    MonomialElement { r, phases, perm }
}

/// One representative per cycle type, in multipartition order, with class
/// sizes counted over the full enumeration.
pub fn class_representatives(n: usize, r: u32, caps: &Caps) -> Result<Vec<ConjugacyClass>> {
    let mut sizes: BTreeMap<MultiPartition, u128> = BTreeMap::new();
    for g in enumerate_group(n, r, caps)? {
        *sizes.entry(g.cycle_type()).or_default() += 1;
    }
    multipartitions_of(n, r as usize)
        .into_iter()
        .map(|ct| {
            let size = sizes.get(&ct).copied().unwrap_or(0);
            if size == 0 {
                return Err(Error::Internal(format!("no element of cycle type {ct}")));
            }
            Ok(ConjugacyClass {
                representative: canonical_representative(&ct),
                cycle_type: ct,
                size,
            })
        })
        .collect()
}

/// `t_1` (when `r > 1`), `(1,2)` (when `n > 1`) and `(1,2,...,n)`, without repeats.
pub fn standard_generators(n: usize, r: u32) -> Vec<MonomialElement> {
    let mut out = Vec::new();
    if r > 1 && n >= 1 {
        out.push(MonomialElement::t(n, r, 1));
    }
    if n > 1 {
        let swap = Permutation::from_cycles(n, &[vec![1, 2]]).expect("valid");
        out.push(MonomialElement::from_perm(swap, r));
    }
    let long = Permutation::from_cycles(n, &[(1..=n).collect()]).expect("valid");
    let long = MonomialElement::from_perm(long, r);
    if !out.contains(&long) {
        out.push(long);
    }
    out
}

pub fn random_monomial<R: Rng + ?Sized>(n: usize, r: u32, rng: &mut R) -> MonomialElement {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    let phases = (0..n).map(|_| rng.gen_range(0..r)).collect();
    MonomialElement {
        r,
        phases,
        perm: Permutation { images },
    }
}

pub fn random_element<R: Rng + ?Sized>(n: usize, flavor: Flavor, rng: &mut R) -> Element {
    Element::from_monomial(random_monomial(n, flavor.r(), rng), flavor).expect("matching r")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn cyc(n: usize, text: &str) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let ab = cyc(3, "(1,2)").compose(&cyc(3, "(2,3)"));
        // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
        assert_eq!(ab.one_line(), vec![3, 1, 2]);
        assert_eq!(ab, cyc(3, "(1,3,2)"));
        let s = cyc(4, "(1,3)(2,4)");
        assert_eq!(s.compose(&Permutation::identity(4)), s);
    }

    #[test]
    fn inverses() {
        assert_eq!(cyc(3, "(1,2,3)").inverse(), cyc(3, "(1,3,2)"));
        assert!(Permutation::identity(4).inverse().is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_monomial(5, 3, &mut rng);
            assert!(g.compose(&g.inverse()).is_identity());
            assert!(g.inverse().compose(&g).is_identity());
        }
    }

    #[test]
    fn t_squared_is_identity_at_r2() {
        let t1 = MonomialElement::t(3, 2, 1);
        assert!(t1.compose(&t1).is_identity());
    }

    #[test]
    fn signs() {
        assert_eq!(
            Permutation::from_one_line(&[1, 4, 3, 2]).unwrap().sign(),
            -1
        );
        assert_eq!(Permutation::identity(5).sign(), 1);
        assert_eq!(
            SignedPermutation::from_images(vec![-1, 2, 3])
                .unwrap()
                .sign(),
            -1
        );
        // cycle-count parity agrees with inversion parity
        for g in enumerate_group(4, 1, &Caps::default()).unwrap() {
            let p = g.perm();
            let by_cycles = if (p.n() - p.cycles().len()) % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(p.sign(), by_cycles);
        }
    }

    #[test]
    fn cycle_types() {
        let id = MonomialElement::identity(4, 3);
        assert_eq!(id.cycle_type().to_string(), "1,1,1,1||");
        let g = MonomialElement::parse("t1 (1,2,3)", 3, 3).unwrap();
        assert_eq!(g.phases(), &[1, 0, 0]);
        assert_eq!(g.cycle_type().to_string(), "|3|");
    }

    #[test]
    fn cycle_type_is_a_class_function() {
        for (n, r) in [(3, 1), (3, 2), (2, 3), (3, 3)] {
            let all: Vec<_> = enumerate_group(n, r, &Caps::default()).unwrap().collect();
            for a in &all {
                for g in all.iter().step_by(5) {
                    let conj = g.inverse().compose(a).compose(g);
                    assert_eq!(conj.cycle_type(), a.cycle_type());
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let caps = Caps::default();
        assert_eq!(enumerate_group(3, 1, &caps).unwrap().count(), 6);
        assert_eq!(enumerate_group(3, 2, &caps).unwrap().count(), 48);
        let all: Vec<_> = enumerate_group(4, 3, &caps).unwrap().collect();
        assert_eq!(all.len(), 1944);
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), 1944);
        assert_eq!(all[0], MonomialElement::identity(4, 3));
        assert_eq!(all[1].phases(), &[0, 0, 0, 1]);
        assert_eq!(enumerate_group(0, 2, &caps).unwrap().count(), 1);
        let small = Caps { group: 100, ..caps };
        let err = enumerate_group(4, 3, &small).err().unwrap();
        assert!(err.to_string().contains("1944"));
    }

    #[test]
    fn classes() {
        let caps = Caps::default();
        let c = class_representatives(2, 1, &caps).unwrap();
        assert_eq!(c.iter().map(|c| c.size).collect::<Vec<_>>(), vec![1, 1]);
        let c = class_representatives(3, 1, &caps).unwrap();
        let sizes: Vec<(String, u128)> = c
            .iter()
            .map(|c| (c.cycle_type.to_string(), c.size))
            .collect();
        assert_eq!(
            sizes,
            vec![("1,1,1".into(), 1), ("2,1".into(), 3), ("3".into(), 2)]
        );
        let c = class_representatives(2, 2, &caps).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.iter().map(|c| c.size).sum::<u128>(), 8);
        for (n, r) in [(4, 1), (3, 2), (4, 2), (3, 3), (2, 4)] {
            let c = class_representatives(n, r, &caps).unwrap();
            assert_eq!(c.iter().map(|c| c.size).sum::<u128>(), group_order(n, r));
            for class in &c {
                assert_eq!(class.representative.cycle_type(), class.cycle_type);
            }
            let distinct: BTreeSet<_> = enumerate_group(n, r, &caps)
                .unwrap()
                .map(|g| g.cycle_type())
                .collect();
            assert_eq!(distinct.len(), multipartitions_of(n, r as usize).len());
        }
    }

    #[test]
    fn generators() {
        let g = standard_generators(5, 1);
        assert_eq!(
            g.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            ["(1,2)", "(1,2,3,4,5)"]
        );
        let g = standard_generators(5, 3);
        assert_eq!(g[0], MonomialElement::t(5, 3, 1));
        assert_eq!(g.len(), 3);
        let g = standard_generators(1, 1);
        assert_eq!(g.len(), 1);
        assert!(g[0].is_identity());
    }

    #[test]
    fn text_forms() {
        for text in ["t1^2 (1,2,3)", "t2 t3", "(1,3)", "()"] {
            let g = MonomialElement::parse(text, 3, 3).unwrap();
            assert_eq!(g.to_string(), text);
        }
        let a = MonomialElement::parse("t1*t3*(1,2)", 3, 3).unwrap();
        assert_eq!(a.phases(), &[1, 0, 1]);
        assert_eq!(
            MonomialElement::parse("[2,1,3]", 3, 2).unwrap().perm(),
            &cyc(3, "(1,2)")
        );
        assert!(MonomialElement::parse("t4", 3, 2).is_err());
        assert!(Permutation::parse("(1,1)", 3).is_err());
        assert!(Permutation::parse("[1,1,2]", 3).is_err());
        let s = SignedPermutation::parse("[-2,3,1]", 3).unwrap();
        assert_eq!(SignedPermutation::parse(&s.to_string(), 3).unwrap(), s);
        assert!(Element::parse("t1", 3, Flavor::Plain).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for flavor in [Flavor::Plain, Flavor::RWord(3), Flavor::BiWord] {
            for _ in 0..20 {
                let g = random_element(4, flavor, &mut rng);
                assert_eq!(Element::from_json(&g.to_json(), flavor).unwrap(), g);
            }
        }
    }

    #[test]
    fn signed_and_monomial_agree() {
        let caps = Caps::default();
        let all: Vec<MonomialElement> = enumerate_group(3, 2, &caps).unwrap().collect();
        for a in &all {
            let sa = SignedPermutation::from_monomial(a).unwrap();
            assert_eq!(sa.to_monomial(), *a);
            for b in all.iter().step_by(3) {
                let sb = SignedPermutation::from_monomial(b).unwrap();
                assert_eq!(sa.compose(&sb).to_monomial(), a.compose(b));
                assert_eq!(sa.compose(&sb).sign(), sa.sign() * sb.sign());
            }
        }
        let t =
            SignedPermutation::t(3, 1).compose(&SignedPermutation::from_perm(&cyc(3, "(1,2,3)")));
        assert_eq!(t.images(), &[-2, 3, 1]);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap())
    }

    fn arb_mono(n: usize, r: u32) -> impl Strategy<Value = MonomialElement> {
        (arb_perm(n), prop::collection::vec(0..r, n))
            .prop_map(move |(p, ph)| MonomialElement::new(r, ph, p).unwrap())
    }

    proptest! {
        #[test]
        fn monomial_group_laws(a in arb_mono(5, 3), b in arb_mono(5, 3), c in arb_mono(5, 3)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert_eq!(a.compose(&MonomialElement::identity(5, 3)), a.clone());
            prop_assert!(a.compose(&a.inverse()).is_identity());
        }

        #[test]
        fn sign_is_multiplicative(a in arb_perm(6), b in arb_perm(6)) {
            prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        }

        #[test]
        fn signed_sign_is_multiplicative(a in arb_mono(5, 2), b in arb_mono(5, 2)) {
            let sa = SignedPermutation::from_monomial(&a).unwrap();
            let sb = SignedPermutation::from_monomial(&b).unwrap();
            prop_assert_eq!(sa.compose(&sb).sign(), sa.sign() * sb.sign());
            prop_assert!(sa.compose(&sa.inverse()).is_identity());
        }
    }
}
