//! Plain words, r-words and biwords: canonical words, orbits `X_lambda`,
//! the group actions, inverse images and shapes.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::combinat::{factorial, multinomial, next_permutation};
use crate::groups::{Element, Permutation, SignedPermutation};
use crate::shapes::{BiPartition, MultiPartition, Partition, Shape};
use crate::{Caps, Error, Flavor, Result};

/// A letter: a radius in `1..=n` and a phase (0 for plain words, an exponent
/// in `0..r` for r-words, one of `-1, 0, +1` for biwords).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub radius: u32,
    pub phase: i32,
}

impl Letter {
    pub fn new(radius: u32, phase: i32) -> Self {
        Letter { radius, phase }
    }

    pub fn bar(self) -> Letter {
        Letter {
            radius: self.radius,
            phase: -self.phase,
        }
    }

    /// Sort key under the flavor's letter order.
    pub fn key(self, flavor: Flavor) -> (u32, u32) {
        match flavor {
            Flavor::Plain => (0, self.radius),
            Flavor::RWord(_) => (self.phase as u32, self.radius),
            Flavor::BiWord => {
                let rank = match self.phase {
                    0 => 0,
                    1 => 1,
                    _ => 2,
                };
                (self.radius, rank)
            }
        }
    }

    fn render(self, flavor: Flavor) -> String {
        match flavor {
            Flavor::Plain => self.radius.to_string(),
            Flavor::RWord(_) => match (self.radius, self.phase) {
                (a, 0) => a.to_string(),
                (1, k) => format!("w{k}"),
                (a, k) => format!("{a}w{k}"),
            },
            Flavor::BiWord => match self.phase {
                0 => format!("{}°", self.radius),
                1 => self.radius.to_string(),
                _ => format!("-{}", self.radius),
            },
        }
    }

    fn parse(token: &str, flavor: Flavor) -> Result<Letter> {
        let bad = || Error::Parse(format!("bad {} letter {token:?}", flavor.name()));
        let t = token.trim();
        match flavor {
            Flavor::Plain => t.parse().map(|a| Letter::new(a, 0)).map_err(|_| bad()),
            Flavor::RWord(r) => {
                let (radius, phase) = match t.split_once('w') {
                    Some((a, k)) => {
                        let a = if a.is_empty() {
                            1
                        } else {
                            a.parse().map_err(|_| bad())?
                        };
                        (a, k.parse::<u32>().map_err(|_| bad())?)
                    }
                    None => (t.parse().map_err(|_| bad())?, 0),
                };
                if phase >= r {
                    return Err(bad());
                }
                Ok(Letter::new(radius, phase as i32))
            }
            Flavor::BiWord => {
                let t = t.replace('−', "-");
                if let Some(a) = t.strip_suffix('°') {
                    return a.parse().map(|a| Letter::new(a, 0)).map_err(|_| bad());
                }
                if let Some(a) = t.strip_prefix('-') {
                    return a.parse().map(|a| Letter::new(a, -1)).map_err(|_| bad());
                }
                t.trim_start_matches('+')
                    .parse()
                    .map(|a| Letter::new(a, 1))
                    .map_err(|_| bad())
            }
        }
    }
}

/// A word of length `n` in one of the three systems. Biwords are stored on
/// positions `1..=n` only; `-i` reads as the bar of position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    flavor: Flavor,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(flavor: Flavor, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            let ok = l.radius >= 1
                && match flavor {
                    Flavor::Plain => l.phase == 0,
                    Flavor::RWord(r) => l.phase >= 0 && (l.phase as u32) < r,
                    Flavor::BiWord => (-1..=1).contains(&l.phase),
                };
            if !ok {
                return Err(Error::Invalid(format!("{l:?} is not a {flavor} letter")));
            }
        }
        Ok(Word { flavor, letters })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `i`; for biwords `-i` gives the barred letter.
    pub fn at(&self, i: i32) -> Letter {
        let l = self.letters[i.unsigned_abs() as usize - 1];
        if i < 0 {
            l.bar()
        } else {
            l
        }
    }

    pub fn sort_key(&self) -> Vec<(u32, u32)> {
        self.letters.iter().map(|l| l.key(self.flavor)).collect()
    }

    /// `w_lambda`: component `k` contributes `1^{l_1} 2^{l_2} ...` with the component's phase.
    pub fn canonical(shape: &Shape) -> Word {
        let flavor = shape.flavor();
        let mut letters = Vec::with_capacity(shape.size());
        for (k, comp) in shape.components().into_iter().enumerate() {
            let phase = match flavor {
                Flavor::Plain => 0,
                Flavor::RWord(_) => k as i32,
                Flavor::BiWord => k as i32,
            };
            for (a, &len) in comp.parts().iter().enumerate() {
                letters.extend(std::iter::repeat_n(Letter::new(a as u32 + 1, phase), len));
            }
        }
        Word { flavor, letters }
    }

    /// The word `w.pi` for a permutation: the letter at `i` moves to `i.pi`.
    pub fn act_perm(&self, pi: &Permutation) -> Word {
        assert_eq!(pi.n(), self.len(), "permutation and word differ in length");
        let mut letters = self.letters.clone();
        for (i, &l) in self.letters.iter().enumerate() {
            letters[pi.image(i)] = l;
        }
        Word {
            flavor: self.flavor,
            letters,
        }
    }

    /// `w.sigma` for a signed permutation: if `i.sigma = -m` the letter at `i` lands barred at `m`.
    pub fn act_signed(&self, sigma: &SignedPermutation) -> Word {
        assert_eq!(
            sigma.n(),
            self.len(),
            "signed permutation and word differ in length"
        );
        let mut letters = self.letters.clone();
        for (i, &l) in self.letters.iter().enumerate() {
            let (m, flip) = sigma.image(i);
            letters[m] = if flip { l.bar() } else { l };
        }
        Word {
            flavor: self.flavor,
            letters,
        }
    }

    /// The word part of the action. For r-words the diagonal part of a
    /// monomial element only contributes a scalar, which this ignores.
    pub fn act(&self, g: &Element) -> Result<Word> {
        if g.n() != self.len() {
            return Err(Error::Incompatible(format!(
                "element on {} points, word of length {}",
                g.n(),
                self.len()
            )));
        }
        Ok(match g.coerce(self.flavor)? {
            Element::Perm(p) => self.act_perm(&p),
            Element::Monomial(m) => self.act_perm(m.perm()),
            Element::Signed(s) => self.act_signed(&s),
        })
    }

    /// Fibers of the word as sets of 1-based positions; for biwords the
    /// fibers live in `+-[n]`.
    pub fn inverse_image(&self) -> BTreeMap<Letter, BTreeSet<i32>> {
        let mut out: BTreeMap<Letter, BTreeSet<i32>> = BTreeMap::new();
        for (i, &l) in self.letters.iter().enumerate() {
            let pos = i as i32 + 1;
            out.entry(l).or_default().insert(pos);
            if self.flavor == Flavor::BiWord {
                out.entry(l.bar()).or_default().insert(-pos);
            }
        }
        out
    }

    /// Letter frequencies per phase class, as a shape.
    pub fn shape(&self) -> Shape {
        let classes = match self.flavor {
            Flavor::Plain => 1,
            Flavor::RWord(r) => r as usize,
            Flavor::BiWord => 2,
        };
        let mut counts: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); classes];
        for l in &self.letters {
            let class = match self.flavor {
                Flavor::BiWord => usize::from(l.phase != 0),
                _ => l.phase as usize,
            };
            *counts[class].entry(l.radius).or_default() += 1;
        }
        let mut comps: Vec<Partition> = counts
            .into_iter()
            .map(|c| Partition::from_multiset(c.into_values().collect()))
            .collect();
        match self.flavor {
            Flavor::Plain => Shape::Plain(comps.remove(0)),
            Flavor::RWord(_) => {
                Shape::Multi(MultiPartition::new(comps).expect("at least one component"))
            }
            Flavor::BiWord => Shape::Bi(BiPartition::new(comps[0].clone(), comps[1].clone())),
        }
    }

    /// Whether the word lies in `X_lambda`, i.e. is a (signed) rearrangement of the canonical word.
    pub fn in_orbit_of(&self, shape: &Shape) -> bool {
        if shape.flavor() != self.flavor || shape.size() != self.len() {
            return false;
        }
        let mut a = self.letters.clone();
        let mut b = Word::canonical(shape).letters;
        if self.flavor == Flavor::BiWord {
            for l in a.iter_mut().chain(b.iter_mut()) {
                l.phase = l.phase.abs();
            }
        }
        a.sort();
        b.sort();
        a == b
    }

    /// Order of the stabilizer of the word in the acting group: the product of
    /// the fiber factorials, with biword fibers taken in `+-[n]`.
    pub fn stabilizer_order(&self) -> u128 {
        let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
        for &l in &self.letters {
            let l = if self.flavor == Flavor::BiWord {
                Letter::new(l.radius, l.phase.abs())
            } else {
                l
            };
            *counts.entry(l).or_default() += 1;
        }
        let perms: u128 = counts.values().map(|&c| factorial(c)).product();
        if self.flavor == Flavor::BiWord {
            let zeros = self.letters.iter().filter(|l| l.phase == 0).count();
            perms << zeros
        } else {
            perms
        }
    }

    pub fn parse(text: &str, flavor: Flavor) -> Result<Word> {
        let t = text.trim();
        let letters = if flavor == Flavor::Plain && !t.contains(',') {
            t.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| Letter::parse(&c.to_string(), flavor))
                .collect::<Result<Vec<_>>>()?
        } else if t.is_empty() {
            Vec::new()
        } else {
            t.split(',')
                .map(|tok| Letter::parse(tok, flavor))
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(flavor, letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.flavor
            .cmp(&other.flavor)
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// Plain words with single-digit radii print as `1123`; everything else is comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.flavor == Flavor::Plain && self.letters.iter().all(|l| l.radius < 10);
        let sep = if compact { "" } else { "," };
        let parts: Vec<String> = self.letters.iter().map(|l| l.render(self.flavor)).collect();
        f.write_str(&parts.join(sep))
    }
}

/// `|X_lambda|`.
pub fn orbit_size(shape: &Shape) -> u128 {
    let mut fibers = Vec::new();
    for comp in shape.components() {
        fibers.extend_from_slice(comp.parts());
    }
    let base = multinomial(&fibers);
    match shape {
        Shape::Bi(b) => base << b.one.size(),
        _ => base,
    }
}

/// `X_lambda` in ascending letter order, refusing orbits larger than the cap.
pub fn orbit(shape: &Shape, caps: &Caps) -> Result<Vec<Word>> {
    Caps::check(&format!("orbit X_{shape}"), orbit_size(shape), caps.orbit)?;
    let flavor = shape.flavor();
    let canonical = Word::canonical(shape);
    let mut letters = canonical.letters.clone();
    letters.sort_by_key(|l| l.key(flavor));
    let mut keyed: Vec<((u32, u32), Letter)> =
        letters.iter().map(|&l| (l.key(flavor), l)).collect();
    let mut out = Vec::with_capacity(orbit_size(shape) as usize);
    loop {
        let base = Word {
            flavor,
            letters: keyed.iter().map(|&(_, l)| l).collect(),
        };
        if flavor == Flavor::BiWord {
            let signed: Vec<usize> = (0..base.len())
                .filter(|&i| base.letters[i].phase != 0)
                .collect();
            for mask in 0u64..(1u64 << signed.len()) {
                let mut w = base.clone();
                for (bit, &i) in signed.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        w.letters[i] = w.letters[i].bar();
                    }
                }
                out.push(w);
            }
        } else {
            out.push(base);
        }
        if !next_permutation(&mut keyed) {
            break;
        }
    }
    if flavor == Flavor::BiWord {
        out.sort();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_flavor, random_element};
    use crate::shapes::shapes_of;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn plain(parts: &[usize]) -> Shape {
        Shape::Plain(Partition::new(parts.to_vec()).unwrap())
    }

    fn word(text: &str, flavor: Flavor) -> Word {
        Word::parse(text, flavor).unwrap()
    }

    #[test]
    fn canonical_words() {
        assert_eq!(Word::canonical(&plain(&[2, 1, 1])).to_string(), "1123");
        let lam = Shape::parse("2,1|2|1,1", Flavor::RWord(3)).unwrap();
        let w = Word::canonical(&lam);
        assert_eq!(w.to_string(), "1,1,2,w1,w1,w2,2w2");
        assert_eq!(
            w.letters().iter().map(|l| l.radius).collect::<Vec<_>>(),
            [1, 1, 2, 1, 1, 1, 2]
        );
        assert_eq!(
            w.letters().iter().map(|l| l.phase).collect::<Vec<_>>(),
            [0, 0, 0, 1, 1, 2, 2]
        );
        let b = Word::canonical(&Shape::parse("|3,2", Flavor::BiWord).unwrap());
        assert_eq!(b.to_string(), "1,1,1,2,2");
        assert!(b.letters().iter().all(|l| l.phase == 1));
    }

    #[test]
    fn plain_orbits_match_table_labels() {
        let caps = Caps::default();
        let cols: Vec<String> = orbit(&plain(&[2, 1, 1]), &caps)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            cols,
            [
                "1123", "1132", "1213", "1231", "1312", "1321", "2113", "2131", "2311", "3112",
                "3121", "3211"
            ]
        );
        let rows: Vec<String> = orbit(&plain(&[3, 1]), &caps)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(rows, ["1112", "1121", "1211", "2111"]);
    }

    #[test]
    fn biword_orbit() {
        let lam = Shape::parse("1|1", Flavor::BiWord).unwrap();
        let xs = orbit(&lam, &Caps::default()).unwrap();
        assert_eq!(xs.len(), 4);
        assert_eq!(orbit_size(&lam), 4);
        let labels: Vec<String> = xs.iter().map(|w| w.to_string()).collect();
        assert_eq!(labels, ["1°,1", "1°,-1", "1,1°", "-1,1°"]);
    }

    #[test]
    fn orbit_refusal() {
        let caps = Caps {
            orbit: 10,
            ..Caps::default()
        };
        let err = orbit(&plain(&[2, 1, 1]), &caps).unwrap_err();
        assert!(err.to_string().contains("12"));
    }

    #[test]
    fn shapes_and_fibers() {
        assert_eq!(word("1123", Flavor::Plain).shape(), plain(&[2, 1, 1]));
        let w = word("1,w1,w2,2,2w2,w1,1", Flavor::RWord(3));
        assert_eq!(w.shape().to_string(), "2,1|2|1,1");
        let fib = w.inverse_image();
        let get = |a, k| fib[&Letter::new(a, k)].iter().copied().collect::<Vec<_>>();
        assert_eq!(get(1, 0), [1, 7]);
        assert_eq!(get(2, 0), [4]);
        assert_eq!(get(1, 1), [2, 6]);
        assert_eq!(get(1, 2), [3]);
        assert_eq!(get(2, 2), [5]);
        let p = word("1123", Flavor::Plain).inverse_image();
        assert_eq!(
            p[&Letter::new(1, 0)].iter().copied().collect::<Vec<_>>(),
            [1, 2]
        );
        let b = word("1°,-2,2", Flavor::BiWord).inverse_image();
        assert_eq!(
            b[&Letter::new(1, 0)].iter().copied().collect::<Vec<_>>(),
            [-1, 1]
        );
        assert_eq!(
            b[&Letter::new(2, 1)].iter().copied().collect::<Vec<_>>(),
            [-2, 3]
        );
        assert_eq!(
            b[&Letter::new(2, -1)].iter().copied().collect::<Vec<_>>(),
            [-3, 2]
        );
    }

    #[test]
    fn sign_change_on_biwords() {
        let w = word("1°,2,-1", Flavor::BiWord);
        let t = |j| Element::Signed(SignedPermutation::t(3, j));
        assert_eq!(w.act(&t(1)).unwrap(), w);
        assert_eq!(w.act(&t(2)).unwrap().to_string(), "1°,-2,-1");
        assert_eq!(w.act(&t(3)).unwrap().to_string(), "1°,2,1");
    }

    #[test]
    fn action_is_a_right_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for shape in [
            plain(&[2, 1, 1]),
            Shape::parse("1|2,1", Flavor::RWord(2)).unwrap(),
            Shape::parse("1|1,1", Flavor::BiWord).unwrap(),
        ] {
            let xs = orbit(&shape, &Caps::default()).unwrap();
            let flavor = shape.flavor();
            let n = shape.size();
            for k in 0..200 {
                let w = &xs[k % xs.len()];
                let s = random_element(n, flavor, &mut rng);
                let t = random_element(n, flavor, &mut rng);
                let lhs = w.act(&s).unwrap().act(&t).unwrap();
                let rhs = w.act(&s.compose(&t).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(lhs.shape(), shape);
                assert!(lhs.in_orbit_of(&shape));
            }
        }
    }

    #[test]
    fn inverse_image_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for flavor in [Flavor::Plain, Flavor::RWord(3), Flavor::BiWord] {
            for shape in shapes_of(4, flavor) {
                let w = Word::canonical(&shape);
                let g = random_element(4, flavor, &mut rng);
                let signed = match g.coerce(Flavor::BiWord) {
                    Ok(Element::Signed(s)) if flavor == Flavor::BiWord => s,
                    _ => SignedPermutation::from_perm(g.to_monomial().perm()),
                };
                let moved: BTreeMap<Letter, BTreeSet<i32>> = w
                    .inverse_image()
                    .into_iter()
                    .map(|(l, set)| (l, set.into_iter().map(|i| signed.apply(i)).collect()))
                    .collect();
                assert_eq!(w.act(&g).unwrap().inverse_image(), moved);
            }
        }
    }

    fn closure(shape: &Shape) -> BTreeSet<Word> {
        let w = Word::canonical(shape);
        enumerate_flavor(shape.size(), shape.flavor(), &Caps::default())
            .unwrap()
            .iter()
            .map(|g| w.act(g).unwrap())
            .collect()
    }

    #[test]
    fn orbits_agree_with_closure() {
        for n in 0..=4 {
            for flavor in [
                Flavor::Plain,
                Flavor::RWord(2),
                Flavor::RWord(3),
                Flavor::BiWord,
            ] {
                if flavor == Flavor::RWord(3) && n > 3 {
                    continue;
                }
                for shape in shapes_of(n, flavor) {
                    let listed = orbit(&shape, &Caps::default()).unwrap();
                    assert!(listed.windows(2).all(|p| p[0] < p[1]), "{shape} not sorted");
                    assert_eq!(listed.len() as u128, orbit_size(&shape));
                    let set: BTreeSet<Word> = listed.iter().cloned().collect();
                    assert_eq!(set, closure(&shape), "{flavor} {shape}");
                    let group = crate::groups::group_order(
                        n,
                        if flavor == Flavor::Plain {
                            1
                        } else {
                            flavor.r()
                        },
                    );
                    let acting = if matches!(flavor, Flavor::RWord(_)) {
                        factorial(n)
                    } else {
                        group
                    };
                    assert_eq!(listed[0].stabilizer_order() * listed.len() as u128, acting);
                    // Under the biword letter order (radius first) the canonical
                    // biword is in general not the least element of its orbit.
                    if flavor != Flavor::BiWord {
                        assert_eq!(listed[0], Word::canonical(&shape));
                    }
                }
            }
        }
    }

    #[test]
    fn stabilizer_orders_by_brute_force() {
        for flavor in [Flavor::Plain, Flavor::BiWord] {
            let group = enumerate_flavor(3, flavor, &Caps::default()).unwrap();
            for w in [
                word(
                    if flavor == Flavor::Plain {
                        "112"
                    } else {
                        "1°,1°,2"
                    },
                    flavor,
                ),
                word(
                    if flavor == Flavor::Plain {
                        "121"
                    } else {
                        "1,-1,2°"
                    },
                    flavor,
                ),
            ] {
                let fixed = group.iter().filter(|g| w.act(g).unwrap() == w).count() as u128;
                assert_eq!(fixed, w.stabilizer_order());
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for (text, flavor) in [
            ("1123", Flavor::Plain),
            ("1,1,2,w1,w1,w2,2w2", Flavor::RWord(3)),
            ("1,1°,-2", Flavor::BiWord),
        ] {
            assert_eq!(word(text, flavor).to_string(), text);
        }
        assert_eq!(
            word("1,1°,−2", Flavor::BiWord),
            word("1,1°,-2", Flavor::BiWord)
        );
        assert_eq!(word("1w1", Flavor::RWord(2)), word("w1", Flavor::RWord(2)));
        assert!(Word::parse("1w3", Flavor::RWord(3)).is_err());
        assert!(Word::parse("1x", Flavor::Plain).is_err());
    }

    #[test]
    fn letter_orders() {
        let b = [(1, 0), (1, 1), (1, -1), (2, 0), (2, 1), (2, -1)]
            .map(|(a, e)| Letter::new(a, e).key(Flavor::BiWord));
        assert!(b.windows(2).all(|p| p[0] < p[1]));
        let r =
            [(1, 0), (2, 0), (1, 1), (2, 1)].map(|(a, k)| Letter::new(a, k).key(Flavor::RWord(2)));
        assert!(r.windows(2).all(|p| p[0] < p[1]));
    }
}
