//! Representing matrices `[g]_B = (M [g]_X)^heart (M^heart)^-1`, characters
//! and character tables.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::cyclo::CycloInt;
use crate::groups::{class_representatives, ConjugacyClass, Element};
use crate::linalg::{self, CycloMatrix};
use crate::shapes::{shapes_of, Shape};
use crate::specht::{specht_entry, Heart};
use crate::words::{orbit, Word};
use crate::{Caps, Error, Flavor, Result};

/// `x.g = c * x'`: the basis word `x'` and the scalar `c` (a root of unity
/// for r-words, 1 otherwise).
pub fn column_action(x: &Word, g: &Element) -> Result<(Word, CycloInt)> {
    let flavor = x.flavor();
    let g = g.coerce(flavor)?;
    let order = flavor.scalar_order();
    let scalar = match &g {
        Element::Monomial(m) => {
            let k: i64 = m
                .phases()
                .iter()
                .zip(x.letters())
                .map(|(&d, l)| i64::from(d) * i64::from(l.phase))
                .sum();
            CycloInt::root_power(order, k)
        }
        _ => CycloInt::one(order),
    };
    Ok((x.act(&g)?, scalar))
}

/// The unique `x` and scalar `c` with `x.g = c * target`.
fn preimage(target: &Word, g: &Element) -> Result<(Word, CycloInt)> {
    let x = target.act(&g.inverse())?;
    let (image, c) = column_action(&x, g)?;
    if image != *target {
        return Err(Error::Internal(format!(
            "{x}.{g} = {image}, expected {target}"
        )));
    }
    Ok((x, c))
}

/// The monomial matrix of `g` on the permutation module with basis `X_lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermModuleMatrix {
    pub shape: Shape,
    pub element: Element,
    pub basis: Vec<Word>,
    /// For each basis row, the column of its single nonzero entry and that entry.
    pub entries: Vec<(usize, CycloInt)>,
}

impl PermModuleMatrix {
    pub fn new(shape: &Shape, g: &Element, caps: &Caps) -> Result<Self> {
        let basis = orbit(shape, caps)?;
        let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let entries = basis
            .iter()
            .map(|x| {
                let (image, c) = column_action(x, g)?;
                let j = *index
                    .get(&image)
                    .ok_or_else(|| Error::Internal(format!("{image} left the orbit X_{shape}")))?;
                Ok((j, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PermModuleMatrix {
            shape: shape.clone(),
            element: g.clone(),
            basis,
            entries,
        })
    }

    /// `[v]_X [g]_X` for a row vector `v`.
    pub fn apply(&self, v: &[CycloInt]) -> Vec<CycloInt> {
        let order = self.shape.flavor().scalar_order();
        let mut out = vec![CycloInt::zero(order); v.len()];
        for (i, (j, c)) in self.entries.iter().enumerate() {
            if !v[i].is_zero() {
                out[*j] = &out[*j] + &(&v[i] * c);
            }
        }
        out
    }
}

/// The irreducible module `S^lambda` with its standard basis; holds the heart
/// so that many representing matrices can share it.
#[derive(Debug, Clone)]
pub struct SpechtModule {
    shape: Shape,
    heart: Heart,
}

impl SpechtModule {
    pub fn new(shape: &Shape) -> Result<Self> {
        Ok(SpechtModule {
            shape: shape.clone(),
            heart: Heart::new(shape)?,
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn heart(&self) -> &Heart {
        &self.heart
    }

    pub fn dimension(&self) -> usize {
        self.heart.size()
    }

    pub fn flavor(&self) -> Flavor {
        self.shape.flavor()
    }

    /// `[g]_B`, computed column by column from single Specht entries and a
    /// triangular solve against the heart.
    pub fn rep_matrix(&self, g: &Element) -> Result<RepMatrix> {
        let flavor = self.flavor();
        if g.n() != self.shape.size() {
            return Err(Error::Incompatible(format!(
                "{g} does not act on words of length {}",
                self.shape.size()
            )));
        }
        let g = g.coerce(flavor)?;
        let order = flavor.scalar_order();
        let f = self.dimension();
        let heart = &self.heart;
        let mut n_mat: CycloMatrix = vec![Vec::with_capacity(f); f];
        for target in &heart.cols {
            let (x, c) = preimage(target, &g)?;
            for (i, y) in heart.rows.iter().enumerate() {
                let m = specht_entry(y, &x);
                n_mat[i].push(c.scale(i64::from(m)));
            }
        }
        let u = &heart.entries;
        let mut r: CycloMatrix = vec![vec![CycloInt::zero(order); f]; f];
        for i in 0..f {
            for j in 0..f {
                let mut acc = n_mat[i][j].clone();
                for k in 0..j {
                    if u[k][j] != 0 && !r[i][k].is_zero() {
                        acc = &acc - &r[i][k].scale(i64::from(u[k][j]));
                    }
                }
                r[i][j] = acc.scale(i64::from(u[j][j]));
            }
        }
        Ok(RepMatrix {
            flavor,
            shape: self.shape.clone(),
            element: g,
            matrix: r,
        })
    }

    pub fn character(&self, g: &Element) -> Result<CycloInt> {
        let m = self.rep_matrix(g)?;
        Ok(linalg::trace(&m.matrix, self.flavor().scalar_order()))
    }
}

/// A representing matrix `[g]_B` of the irreducible module for `shape`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    pub flavor: Flavor,
    pub shape: Shape,
    pub element: Element,
    pub matrix: CycloMatrix,
}

impl RepMatrix {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn trace(&self) -> CycloInt {
        linalg::trace(&self.matrix, self.flavor.scalar_order())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity(self.size(), self.flavor.scalar_order())
    }

    /// Entries as integers, when all of them are rational.
    pub fn as_integers(&self) -> Option<Vec<Vec<i64>>> {
        self.matrix
            .iter()
            .map(|row| row.iter().map(CycloInt::as_integer).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "flavor": self.flavor.to_string(),
            "lambda": self.shape.to_json(),
            "element": self.element.to_json(),
            "matrix": self.matrix.iter().map(|row| row.iter().map(CycloInt::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad representing matrix JSON {value}"));
        let flavor: Flavor = value
            .get("flavor")
            .and_then(Value::as_str)
            .ok_or_else(bad)?
            .parse()?;
        let shape = Shape::from_json(value.get("lambda").ok_or_else(bad)?, flavor)?;
        let element = Element::from_json(value.get("element").ok_or_else(bad)?, flavor)?;
        let order = flavor.scalar_order();
        let matrix = value
            .get("matrix")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| CycloInt::from_json(e, order).map_err(Error::from))
                    .collect()
            })
            .collect::<Result<CycloMatrix>>()?;
        Ok(RepMatrix {
            flavor,
            shape,
            element,
            matrix,
        })
    }
}

impl fmt::Display for RepMatrix {
    /// Right-aligned grid, one matrix row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        f.write_str(&grid(&cells))
    }
}

fn grid(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            cells
                .iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{}{s}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// `[g]_B` for a single shape; builds the heart on the fly.
pub fn rep_matrix(shape: &Shape, g: &Element) -> Result<RepMatrix> {
    SpechtModule::new(shape)?.rep_matrix(g)
}

pub fn character(shape: &Shape, g: &Element) -> Result<CycloInt> {
    SpechtModule::new(shape)?.character(g)
}

/// Characters of every irreducible module on every conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub flavor: Flavor,
    pub n: usize,
    pub shapes: Vec<Shape>,
    pub classes: Vec<ConjugacyClass>,
    /// `values[s][c]`: character of `shapes[s]` on `classes[c]`.
    pub values: Vec<Vec<CycloInt>>,
}

impl CharacterTable {
    pub fn new(n: usize, flavor: Flavor, caps: &Caps) -> Result<Self> {
        let shapes = shapes_of(n, flavor);
        let classes = class_representatives(n, flavor.r(), caps)?;
        let reps: Vec<Element> = classes
            .iter()
            .map(|c| Element::from_monomial(c.representative.clone(), flavor))
            .collect::<Result<_>>()?;
        let values = shapes
            .iter()
            .map(|s| {
                let module = SpechtModule::new(s)?;
                reps.iter()
                    .map(|g| module.character(g))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            flavor,
            n,
            shapes,
            classes,
            values,
        })
    }

    pub fn group_order(&self) -> u128 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "flavor": self.flavor.to_string(),
            "n": self.n,
            "shapes": self.shapes.iter().map(Shape::to_json).collect::<Vec<_>>(),
            "classes": self.classes.iter().map(|c| json!({
                "cycle_type": c.cycle_type.to_json(),
                "representative": c.representative.to_json(),
                "size": c.size as u64,
            })).collect::<Vec<_>>(),
            "values": self.values.iter().map(|r| r.iter().map(CycloInt::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    /// Shapes down the side, classes (by cycle type) across the top, class sizes in the second line.
    pub fn to_text(&self) -> String {
        let mut cells = vec![Vec::new(), Vec::new()];
        cells[0].push(String::new());
        cells[1].push("size".to_string());
        for c in &self.classes {
            let label = match self.flavor {
                Flavor::Plain => c.cycle_type.components()[0].to_string(),
                _ => c.cycle_type.to_string(),
            };
            cells[0].push(label);
            cells[1].push(c.size.to_string());
        }
        for (s, row) in self.shapes.iter().zip(&self.values) {
            let mut line = vec![s.to_string()];
            line.extend(row.iter().map(CycloInt::to_string));
            cells.push(line);
        }
        grid(&cells)
    }
}
