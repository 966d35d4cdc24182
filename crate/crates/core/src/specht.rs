//! Pairs of words, free pairs and their tableaux, Specht matrices and the
//! heart submatrix spanned by standard pairs.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::groups::{Element, Permutation, SignedPermutation};
use crate::shapes::{standard_multitableaux, Diagram, Rows, Shape};
use crate::words::{orbit, orbit_size, Letter, Word};
use crate::{Caps, Error, Flavor, Result};

/// Where a position of a pair lands: the tableau component (phase for
/// r-words, block `(01)` = 0 / `(10)` = 1 for biwords), the cell
/// `(x radius, y radius)`, and the sign it carries in `+-[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Slot {
    block: u32,
    row: u32,
    col: u32,
    sign: i8,
}

fn slot(flavor: Flavor, x: Letter, y: Letter) -> Option<Slot> {
    match flavor {
        Flavor::Plain => Some(Slot {
            block: 0,
            row: x.radius,
            col: y.radius,
            sign: 1,
        }),
        Flavor::RWord(_) => (x.phase == y.phase).then_some(Slot {
            block: x.phase as u32,
            row: x.radius,
            col: y.radius,
            sign: 1,
        }),
        Flavor::BiWord => match (x.phase, y.phase) {
            (0, e) if e != 0 => Some(Slot {
                block: 0,
                row: x.radius,
                col: y.radius,
                sign: e as i8,
            }),
            (e, 0) if e != 0 => Some(Slot {
                block: 1,
                row: x.radius,
                col: y.radius,
                sign: e as i8,
            }),
            _ => None,
        },
    }
}

/// Reads the slots of all positions in tableau order. `None` when a
/// position violates the pair invariant or two positions share a cell.
fn flat_slots(x: &Word, y: &Word) -> Option<Vec<(Slot, usize)>> {
    let flavor = x.flavor();
    let mut slots = Vec::with_capacity(x.len());
    for (i, (&a, &b)) in x.letters().iter().zip(y.letters()).enumerate() {
        slots.push((slot(flavor, a, b)?, i));
    }
    slots.sort_unstable();
    let clash = slots.windows(2).any(|w| {
        let (s, t) = (w[0].0, w[1].0);
        (s.block, s.row, s.col) == (t.block, t.row, t.col)
    });
    (!clash).then_some(slots)
}

/// The sign of `<x,y>^flat`, or 0 when the pair is not free (or violates the pair invariant).
pub fn specht_entry(y: &Word, x: &Word) -> i8 {
    debug_assert_eq!(x.len(), y.len());
    let Some(slots) = flat_slots(x, y) else {
        return 0;
    };
    let mut positions: Vec<usize> = slots.iter().map(|&(_, i)| i).collect();
    let negatives = slots.iter().filter(|(s, _)| s.sign < 0).count();
    let mut sign = if negatives % 2 == 0 { 1 } else { -1 };
    // parity of the position list by cycle sort
    for i in 0..positions.len() {
        while positions[i] != i {
            let j = positions[i];
            positions.swap(i, j);
            sign = -sign;
        }
    }
    sign
}

/// A tableau read off a free pair: per component, rows of signed 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub components: Vec<Vec<Vec<i32>>>,
}

impl Tableau {
    /// Concatenation of the rows, component by component.
    pub fn flat(&self) -> Vec<i32> {
        self.components
            .iter()
            .flatten()
            .flatten()
            .copied()
            .collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|rows| {
                rows.iter()
                    .map(|row| row.iter().map(i32::to_string).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join("/")
            })
            .collect();
        f.write_str(&comps.join(" | "))
    }
}

/// A pair of words `<x, y>` of the same system and length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordPair {
    pub x: Word,
    pub y: Word,
}

impl WordPair {
    pub fn new(x: Word, y: Word) -> Result<Self> {
        if x.flavor() != y.flavor() || x.len() != y.len() {
            return Err(Error::Incompatible(format!("cannot pair {x} with {y}")));
        }
        Ok(WordPair { x, y })
    }

    pub fn flavor(&self) -> Flavor {
        self.x.flavor()
    }

    /// Equal phases for r-words; exactly one phase 0 per position for biwords.
    pub fn satisfies_invariant(&self) -> bool {
        let f = self.flavor();
        self.x
            .letters()
            .iter()
            .zip(self.y.letters())
            .all(|(&a, &b)| slot(f, a, b).is_some())
    }

    /// Whether the stabilizer of the pair in the acting group is trivial.
    pub fn is_free(&self) -> bool {
        flat_slots(&self.x, &self.y).is_some()
    }

    /// Cells `(x radius, y radius)` that occur, one diagram per tableau component.
    pub fn diagram(&self) -> Result<Vec<Diagram>> {
        let flavor = self.flavor();
        let blocks = match flavor {
            Flavor::Plain => 1,
            Flavor::RWord(r) => r as usize,
            Flavor::BiWord => 2,
        };
        let mut out = vec![Diagram(BTreeSet::new()); blocks];
        for (&a, &b) in self.x.letters().iter().zip(self.y.letters()) {
            let s = slot(flavor, a, b)
                .ok_or_else(|| Error::Invalid(format!("{self} violates the pair invariant")))?;
            out[s.block as usize]
                .0
                .insert((s.row as usize, s.col as usize));
        }
        Ok(out)
    }

    /// The tableau `<x,y>*` of a free pair whose components have Young diagrams.
    pub fn tableau(&self) -> Result<Tableau> {
        let slots = flat_slots(&self.x, &self.y).ok_or_else(|| Error::NotFree(self.to_string()))?;
        let blocks = match self.flavor() {
            Flavor::Plain => 1,
            Flavor::RWord(r) => r as usize,
            Flavor::BiWord => 2,
        };
        let mut components: Vec<Vec<Vec<i32>>> = vec![Vec::new(); blocks];
        for (s, i) in slots {
            let rows = &mut components[s.block as usize];
            let (row, col) = (s.row as usize, s.col as usize);
            if rows.len() < row {
                rows.resize(row, Vec::new());
            }
            if rows[row - 1].len() + 1 != col {
                return Err(Error::Incompatible(format!(
                    "{self} does not have a Young diagram"
                )));
            }
            rows[row - 1].push(i32::from(s.sign) * (i as i32 + 1));
        }
        for rows in &components {
            let ok = rows.windows(2).all(|w| w[0].len() >= w[1].len())
                && rows.iter().all(|r| !r.is_empty());
            if !ok {
                return Err(Error::Incompatible(format!(
                    "{self} does not have a Young diagram"
                )));
            }
        }
        Ok(Tableau { components })
    }

    /// `T^flat` as a group element (a permutation, or a signed permutation
    /// for biwords) together with its sign.
    pub fn flatten(&self) -> Result<(Element, i8)> {
        let flat = self.tableau()?.flat();
        if self.flavor() == Flavor::BiWord {
            let s = SignedPermutation::from_images(flat)?;
            let sign = s.sign();
            Ok((Element::Signed(s), sign))
        } else {
            let images: Vec<usize> = flat.iter().map(|&i| i as usize).collect();
            let p = Permutation::from_one_line(&images)?;
            let sign = p.sign();
            Ok((Element::Perm(p), sign))
        }
    }

    /// The pair read as a word over letter pairs, in the order used to sort standard pairs.
    pub fn order_key(&self) -> Vec<((u32, u32), (u32, u32))> {
        self.x
            .sort_key()
            .into_iter()
            .zip(self.y.sort_key())
            .collect()
    }

    /// `<x.g, y.g>`.
    pub fn act(&self, g: &Element) -> Result<WordPair> {
        Ok(WordPair {
            x: self.x.act(g)?,
            y: self.y.act(g)?,
        })
    }
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.x, self.y)
    }
}

/// Generators of the stabilizer of a word: transpositions inside fibers, and
/// sign changes at phase-0 positions of biwords.
fn stabilizer_generators(w: &Word) -> Vec<Element> {
    let n = w.len();
    let flavor = w.flavor();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w.letters()[i] == w.letters()[j] {
                let p = Permutation::from_cycles(n, &[vec![i + 1, j + 1]])
                    .expect("valid transposition");
                out.push(Element::Perm(p).coerce(flavor).expect("S_n embeds"));
            }
        }
        if flavor == Flavor::BiWord && w.letters()[i].phase == 0 {
            out.push(Element::Signed(SignedPermutation::t(n, i + 1)));
        }
    }
    out
}

/// All standard pairs of shape `lambda`, sorted by [`WordPair::order_key`].
/// Each is checked to be strictly smaller than its images under the
/// stabilizer generators of `x` and of `y`.
pub fn standard_pairs(shape: &Shape) -> Result<Vec<WordPair>> {
    let flavor = shape.flavor();
    let n = shape.size();
    let comps = shape.components();
    let tableaux: Vec<Vec<Rows>> = standard_multitableaux(&comps);
    let mut pairs = Vec::with_capacity(tableaux.len());
    for t in tableaux {
        let mut x = vec![Letter::new(0, 0); n];
        let mut y = vec![Letter::new(0, 0); n];
        for (k, rows) in t.iter().enumerate() {
            let (xp, yp) = match flavor {
                Flavor::Plain => (0, 0),
                Flavor::RWord(_) => (k as i32, k as i32),
                Flavor::BiWord => {
                    if k == 0 {
                        (0, 1)
                    } else {
                        (1, 0)
                    }
                }
            };
            for (a, row) in rows.iter().enumerate() {
                for (b, &i) in row.iter().enumerate() {
                    x[i - 1] = Letter::new(a as u32 + 1, xp);
                    y[i - 1] = Letter::new(b as u32 + 1, yp);
                }
            }
        }
        pairs.push(WordPair {
            x: Word::new(flavor, x)?,
            y: Word::new(flavor, y)?,
        });
    }
    pairs.sort_by_key(WordPair::order_key);
    for p in &pairs {
        let key = p.order_key();
        for g in stabilizer_generators(&p.x)
            .iter()
            .chain(&stabilizer_generators(&p.y))
        {
            if p.act(g)?.order_key() <= key {
                return Err(Error::Internal(format!(
                    "standard pair {p} is not minimal under {g}"
                )));
            }
        }
    }
    Ok(pairs)
}

/// A block of rows of `M_lambda`: rows labelled by words of shape `lambda^t`,
/// columns by `X_lambda`, entries in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtMatrix {
    pub shape: Shape,
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub entries: Vec<Vec<i8>>,
}

impl SpechtMatrix {
    /// The full matrix `M_lambda`, refused when it would exceed the matrix cap.
    pub fn full(shape: &Shape, caps: &Caps) -> Result<Self> {
        let size = orbit_size(shape).saturating_mul(orbit_size(&shape.transpose()));
        Caps::check(&format!("Specht matrix M_{shape}"), size, caps.matrix)?;
        let rows = orbit(&shape.transpose(), caps)?;
        Self::rows(shape, rows, caps)
    }

    /// The given rows of `M_lambda` over all columns `X_lambda`.
    pub fn rows(shape: &Shape, rows: Vec<Word>, caps: &Caps) -> Result<Self> {
        let t = shape.transpose();
        for y in &rows {
            if !y.in_orbit_of(&t) {
                return Err(Error::Invalid(format!("row label {y} is not in X_{t}")));
            }
        }
        let size = orbit_size(shape).saturating_mul(rows.len() as u128);
        Caps::check(&format!("Specht matrix M_{shape}"), size, caps.matrix)?;
        let cols = orbit(shape, caps)?;
        let entries = rows
            .iter()
            .map(|y| cols.iter().map(|x| specht_entry(y, x)).collect())
            .collect();
        Ok(SpechtMatrix {
            shape: shape.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.shape.to_json(),
            "rows": self.rows.iter().map(Word::to_string).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(Word::to_string).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }

    pub fn from_json(value: &Value, flavor: Flavor) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Specht matrix JSON {value}"));
        let shape = Shape::from_json(value.get("lambda").ok_or_else(bad)?, flavor)?;
        let labels = |key: &str| -> Result<Vec<Word>> {
            value
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|v| Word::parse(v.as_str().ok_or_else(bad)?, flavor))
                .collect()
        };
        let entries = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| {
                        e.as_i64()
                            .filter(|e| (-1..=1).contains(e))
                            .map(|e| e as i8)
                            .ok_or_else(bad)
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<i8>>>>()?;
        Ok(SpechtMatrix {
            shape,
            rows: labels("rows")?,
            cols: labels("cols")?,
            entries,
        })
    }

    /// `+`, `-` and `.` under a header of column labels.
    pub fn to_text(&self) -> String {
        render_table(&self.rows, &self.cols, &self.entries)
    }
}

fn render_table(rows: &[Word], cols: &[Word], entries: &[Vec<i8>]) -> String {
    let row_labels: Vec<String> = rows.iter().map(Word::to_string).collect();
    let col_labels: Vec<String> = cols.iter().map(Word::to_string).collect();
    let lw = row_labels
        .iter()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0);
    let widths: Vec<usize> = col_labels.iter().map(|s| s.chars().count()).collect();
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut out = String::new();
    let mut header = vec![pad("", lw)];
    header.extend(col_labels.iter().map(|s| s.to_string()));
    out.push_str(header.join(" ").trim_end());
    out.push('\n');
    for (label, row) in row_labels.iter().zip(entries) {
        let mut line = vec![pad(label, lw)];
        for (e, &w) in row.iter().zip(&widths) {
            let sym = match e {
                1 => "+",
                -1 => "-",
                _ => ".",
            };
            line.push(pad(sym, w));
        }
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// The square submatrix `M_lambda^heart` on the projections of the standard
/// pairs; rows are the `y`s and columns the `x`s, both in standard-pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heart {
    pub shape: Shape,
    pub pairs: Vec<WordPair>,
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub entries: Vec<Vec<i8>>,
}

impl Heart {
    /// Builds the heart and checks that it is upper unitriangular up to signs.
    pub fn new(shape: &Shape) -> Result<Self> {
        let pairs = standard_pairs(shape)?;
        let rows: Vec<Word> = pairs.iter().map(|p| p.y.clone()).collect();
        let cols: Vec<Word> = pairs.iter().map(|p| p.x.clone()).collect();
        let entries: Vec<Vec<i8>> = rows
            .iter()
            .map(|y| cols.iter().map(|x| specht_entry(y, x)).collect())
            .collect();
        for (i, row) in entries.iter().enumerate() {
            if row[i] == 0 || row[..i].iter().any(|&e| e != 0) {
                return Err(Error::Internal(format!(
                    "heart of {shape} is not unitriangular up to sign at row {}",
                    rows[i]
                )));
            }
        }
        Ok(Heart {
            shape: shape.clone(),
            pairs,
            rows,
            cols,
            entries,
        })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn to_text(&self) -> String {
        render_table(&self.rows, &self.cols, &self.entries)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.shape.to_json(),
            "rows": self.rows.iter().map(Word::to_string).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(Word::to_string).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::random_element;
    use crate::shapes::{count_standard, shapes_of, Partition};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn plain(parts: &[usize]) -> Shape {
        Shape::Plain(Partition::new(parts.to_vec()).unwrap())
    }

    fn pair(x: &str, y: &str) -> WordPair {
        WordPair::new(
            Word::parse(x, Flavor::Plain).unwrap(),
            Word::parse(y, Flavor::Plain).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn freeness_and_diagrams() {
        assert!(!pair("1123", "1112").is_free());
        assert!(pair("1321", "1112").is_free());
        assert!(pair("1234", "1234").is_free());
        let d = pair("1321", "1112").diagram().unwrap();
        assert_eq!(d[0], Partition::new(vec![2, 1, 1]).unwrap().diagram());
        let d = pair("1123", "1112").diagram().unwrap();
        assert_eq!(
            d[0].cells().iter().copied().collect::<Vec<_>>(),
            [(1, 1), (2, 1), (3, 2)]
        );
    }

    #[test]
    fn flattening() {
        let p = pair("1321", "1112");
        assert_eq!(
            p.tableau().unwrap().components[0],
            vec![vec![1, 4], vec![3], vec![2]]
        );
        let (g, sign) = p.flatten().unwrap();
        assert_eq!(
            g,
            Element::Perm(Permutation::from_one_line(&[1, 4, 3, 2]).unwrap())
        );
        assert_eq!(sign, -1);
        assert_eq!(pair("1231", "1112").flatten().unwrap().1, 1);
        let (g, sign) = pair("111", "123").flatten().unwrap();
        assert!(g.is_identity());
        assert_eq!(sign, 1);
        assert!(matches!(
            pair("1123", "1112").flatten(),
            Err(Error::NotFree(_))
        ));
    }

    #[test]
    fn entries_by_definition() {
        let w = |s| Word::parse(s, Flavor::Plain).unwrap();
        assert_eq!(specht_entry(&w("1112"), &w("1231")), 1);
        assert_eq!(specht_entry(&w("1112"), &w("1123")), 0);
        assert_eq!(specht_entry(&w("2111"), &w("1123")), -1);
    }

    #[test]
    fn full_matrix_for_211() {
        let m = SpechtMatrix::full(&plain(&[2, 1, 1]), &Caps::default()).unwrap();
        let expected: [[i8; 12]; 4] = [
            [0, 0, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1],
            [0, 0, -1, 0, 1, 0, 1, 0, -1, -1, 0, 1],
            [1, -1, 0, 0, 0, 0, -1, 1, 0, 1, -1, 0],
            [-1, 1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0],
        ];
        assert_eq!(
            m.entries,
            expected.iter().map(|r| r.to_vec()).collect::<Vec<_>>()
        );
        assert!(m
            .entries
            .iter()
            .all(|r| r.iter().filter(|&&e| e != 0).count() == 6));
        let back = SpechtMatrix::from_json(&m.to_json(), Flavor::Plain).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn single_row_shape() {
        let m = SpechtMatrix::full(&plain(&[3]), &Caps::default()).unwrap();
        assert_eq!(m.cols.len(), 1);
        for (y, row) in m.rows.iter().zip(&m.entries) {
            let images: Vec<usize> = y.letters().iter().map(|l| l.radius as usize).collect();
            let pos = Permutation::from_one_line(&images).unwrap().inverse();
            assert_eq!(row[0], pos.sign());
        }
    }

    #[test]
    fn standard_pairs_for_32() {
        let pairs = standard_pairs(&plain(&[3, 2])).unwrap();
        let text: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            text,
            [
                "<11122,12312>",
                "<11212,12132>",
                "<11221,12123>",
                "<12112,11232>",
                "<12121,11223>"
            ]
        );
        assert_eq!(standard_pairs(&plain(&[4])).unwrap().len(), 1);
    }

    #[test]
    fn standard_pair_counts() {
        for n in 0..=5 {
            for shape in shapes_of(n, Flavor::Plain) {
                assert_eq!(
                    standard_pairs(&shape).unwrap().len() as u128,
                    count_standard(&shape)
                );
            }
        }
        for n in 0..=4 {
            for flavor in [Flavor::BiWord, Flavor::RWord(3)] {
                for shape in shapes_of(n, flavor) {
                    let pairs = standard_pairs(&shape).unwrap();
                    assert_eq!(pairs.len() as u128, count_standard(&shape));
                    for p in &pairs {
                        assert!(p.x.in_orbit_of(&shape) && p.y.in_orbit_of(&shape.transpose()));
                        assert!(p.is_free());
                    }
                }
            }
        }
    }

    #[test]
    fn heart_for_32() {
        let h = Heart::new(&plain(&[3, 2])).unwrap();
        let expected: [[i8; 5]; 5] = [
            [1, 0, 0, 0, -1],
            [0, -1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, -1],
        ];
        assert_eq!(
            h.entries,
            expected.iter().map(|r| r.to_vec()).collect::<Vec<_>>()
        );
        assert_eq!(h.rows[0].to_string(), "12312");
        assert_eq!(h.cols[4].to_string(), "12121");
        let h1 = Heart::new(&plain(&[1, 1, 1])).unwrap();
        assert_eq!(h1.size(), 1);
        assert_eq!(h1.entries[0][0].abs(), 1);
    }

    #[test]
    fn hearts_are_triangular_everywhere() {
        for n in 0..=5 {
            for shape in shapes_of(n, Flavor::Plain) {
                Heart::new(&shape).unwrap();
            }
        }
        for n in 0..=4 {
            for flavor in [Flavor::RWord(2), Flavor::RWord(3), Flavor::BiWord] {
                for shape in shapes_of(n, flavor) {
                    Heart::new(&shape).unwrap();
                }
            }
        }
    }

    #[test]
    fn sign_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, flavor) in [
            (4, Flavor::Plain),
            (4, Flavor::RWord(2)),
            (3, Flavor::RWord(3)),
            (3, Flavor::BiWord),
        ] {
            for shape in shapes_of(n, flavor) {
                let m = SpechtMatrix::full(&shape, &Caps::default()).unwrap();
                for k in 0..40 {
                    let y = &m.rows[k % m.rows.len()];
                    let x = &m.cols[(k * 7) % m.cols.len()];
                    let g = match flavor {
                        Flavor::RWord(_) => Element::Perm(
                            random_element(n, Flavor::Plain, &mut rng)
                                .to_monomial()
                                .perm()
                                .clone(),
                        ),
                        _ => random_element(n, flavor, &mut rng),
                    };
                    let s = g.sign().unwrap();
                    let moved = specht_entry(&y.act(&g).unwrap(), &x.act(&g).unwrap());
                    assert_eq!(specht_entry(y, x), s * moved, "{shape} {y} {x} {g}");
                }
            }
        }
    }

    #[test]
    fn biword_flatten_is_signed() {
        let shape = Shape::parse("1|1", Flavor::BiWord).unwrap();
        let x = Word::parse("1°,-1", Flavor::BiWord).unwrap();
        let y = Word::parse("1,1°", Flavor::BiWord).unwrap();
        let (g, sign) = WordPair::new(x, y).unwrap().flatten().unwrap();
        // block (01) holds position 1 with sign +, block (10) position 2 with sign -
        assert_eq!(
            g,
            Element::Signed(SignedPermutation::from_images(vec![1, -2]).unwrap())
        );
        assert_eq!(sign, -1);
        assert_eq!(shape.transpose().to_string(), "1|1");
    }
}
