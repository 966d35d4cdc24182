//! Verification suites: each runs a family of exact checks and reports every
//! failure with a witness.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cyclo::CycloInt;
use crate::groups::{
    enumerate_flavor, group_order, random_element, standard_generators, Element, Permutation,
    SignedPermutation,
};
use crate::linalg::{self, CycloMatrix};
use crate::repmod::{CharacterTable, PermModuleMatrix, SpechtModule};
use crate::shapes::{count_standard, shapes_of, Diagram, Shape};
use crate::specht::{specht_entry, Heart, SpechtMatrix, WordPair};
use crate::words::orbit;
use crate::{Caps, Error, Flavor, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Homomorphism,
    Dimension,
    Orthogonality,
    Triangular,
    FreeOrbit,
    Rank,
    CrossR2,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Homomorphism,
        Suite::Dimension,
        Suite::Orthogonality,
        Suite::Triangular,
        Suite::FreeOrbit,
        Suite::Rank,
        Suite::CrossR2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Homomorphism => "homomorphism",
            Suite::Dimension => "dimension",
            Suite::Orthogonality => "orthogonality",
            Suite::Triangular => "triangular",
            Suite::FreeOrbit => "free-orbit",
            Suite::Rank => "rank",
            Suite::CrossR2 => "cross-r2",
        }
    }

    /// Parses one suite name, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        if text == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        text.split(',').map(|s| s.trim().parse()).collect()
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub message: String,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(
        &mut self,
        ok: bool,
        message: impl FnOnce() -> String,
        witness: impl FnOnce() -> Value,
    ) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                message: message(),
                witness: witness(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    /// `PASS (7 suites, 0 failures)` or `FAIL (...)`.
    pub fn summary(&self) -> String {
        let n = self.suites.len();
        let f = self.failure_count();
        format!(
            "{} ({n} suite{}, {f} failure{})",
            if f == 0 { "PASS" } else { "FAIL" },
            if n == 1 { "" } else { "s" },
            if f == 1 { "" } else { "s" }
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            out.push_str(&format!(
                "{:<14} {status} ({} checks, {} failures)\n",
                s.suite.name(),
                s.checks,
                s.failures.len()
            ));
            for f in &s.failures {
                out.push_str(&format!("  {}: {}\n", f.message, f.witness));
            }
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "summary": self.summary(),
            "suites": self.suites.iter().map(|s| json!({
                "suite": s.suite.name(),
                "checks": s.checks,
                "failures": s.failures.iter().map(|f| json!({"message": f.message, "witness": f.witness})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: usize,
    pub flavor: Flavor,
    pub caps: Caps,
    pub seed: u64,
    pub random_pairs: usize,
}

impl VerifyConfig {
    pub fn new(n: usize, flavor: Flavor) -> Self {
        VerifyConfig {
            n,
            flavor,
            caps: Caps::default(),
            seed: 0,
            random_pairs: 100,
        }
    }
}

pub fn run(config: &VerifyConfig, suites: &[Suite]) -> Result<Report> {
    let suites = suites
        .iter()
        .map(|&suite| match suite {
            Suite::Homomorphism => homomorphism(config),
            Suite::Dimension => dimension(config),
            Suite::Orthogonality => orthogonality(config),
            Suite::Triangular => triangular(config),
            Suite::FreeOrbit => free_orbit(config),
            Suite::Rank => rank(config),
            Suite::CrossR2 => cross_r2(config),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report { suites })
}

/// Order of the group acting on Specht matrices and representing matrices.
fn flavor_group_order(n: usize, flavor: Flavor) -> u128 {
    group_order(n, flavor.r())
}

/// Standard generators of the flavor's group.
pub fn generators(n: usize, flavor: Flavor) -> Vec<Element> {
    standard_generators(n, flavor.r())
        .into_iter()
        .map(|g| Element::from_monomial(g, flavor).expect("generator of the right group"))
        .collect()
}

fn witness_pair(shape: &Shape, g: &Element, h: &Element) -> Value {
    json!({"lambda": shape.to_string(), "sigma": g.to_string(), "tau": h.to_string()})
}

/// `[gh] = [g][h]`, `[1] = I`, integrality, and that `[g]_B` describes the
/// action on the rows `v_y` of the Specht matrix.
pub fn homomorphism(config: &VerifyConfig) -> Result<SuiteReport> {
    let (n, flavor) = (config.n, config.flavor);
    let order = flavor.scalar_order();
    let mut report = SuiteReport::new(Suite::Homomorphism);
    let gens = generators(n, flavor);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let randoms: Vec<(Element, Element)> = (0..config.random_pairs)
        .map(|_| {
            (
                random_element(n, flavor, &mut rng),
                random_element(n, flavor, &mut rng),
            )
        })
        .collect();
    for shape in shapes_of(n, flavor) {
        let module = SpechtModule::new(&shape)?;
        let id = Element::identity(n, flavor);
        report.check(
            module.rep_matrix(&id)?.is_identity(),
            || "identity is not represented by I".into(),
            || json!({"lambda": shape.to_string()}),
        );
        let mut pairs: Vec<(Element, Element)> = Vec::new();
        for g in &gens {
            for h in &gens {
                pairs.push((g.clone(), h.clone()));
            }
        }
        pairs.extend(randoms.iter().cloned());
        for (g, h) in &pairs {
            let gh = g.compose(h)?;
            let lhs = module.rep_matrix(&gh)?;
            let rg = module.rep_matrix(g)?;
            let rh = module.rep_matrix(h)?;
            let rhs = linalg::mat_mul(&rg.matrix, &rh.matrix, order);
            report.check(
                lhs.matrix == rhs,
                || "[gh] != [g][h]".into(),
                || witness_pair(&shape, g, h),
            );
            if flavor != Flavor::RWord(order) || order <= 2 {
                report.check(
                    lhs.as_integers().is_some(),
                    || "non-integral entry".into(),
                    || json!({"lambda": shape.to_string(), "sigma": gh.to_string()}),
                );
            }
        }
        let samples: Vec<Element> = gens
            .iter()
            .cloned()
            .chain(randoms.iter().take(10).map(|p| p.0.clone()))
            .collect();
        module_action(&mut report, &module, &samples, &config.caps)?;
    }
    Ok(report)
}

/// `v_{y_i}.g = sum_k [g]_B[i][k] v_{y_k}` in `X_lambda` coordinates.
fn module_action(
    report: &mut SuiteReport,
    module: &SpechtModule,
    elements: &[Element],
    caps: &Caps,
) -> Result<()> {
    let shape = module.shape();
    let order = shape.flavor().scalar_order();
    let rows = SpechtMatrix::rows(shape, module.heart().rows.clone(), caps)?;
    let vectors: CycloMatrix = linalg::from_integers(&rows.entries, order);
    for g in elements {
        let pm = PermModuleMatrix::new(shape, g, caps)?;
        let rep = module.rep_matrix(g)?;
        let expected = linalg::mat_mul(&rep.matrix, &vectors, order);
        for (i, v) in vectors.iter().enumerate() {
            report.check(
                pm.apply(v) == expected[i],
                || "representing matrix does not describe the module action".into(),
                || json!({"lambda": shape.to_string(), "sigma": g.to_string(), "row": rows.rows[i].to_string()}),
            );
        }
    }
    Ok(())
}

/// `sum f_lambda^2 = |G|`, and each module has dimension `f_lambda`.
pub fn dimension(config: &VerifyConfig) -> Result<SuiteReport> {
    let (n, flavor) = (config.n, config.flavor);
    let mut report = SuiteReport::new(Suite::Dimension);
    let shapes = shapes_of(n, flavor);
    let sum: u128 = shapes.iter().map(|s| count_standard(s).pow(2)).sum();
    let expected = flavor_group_order(n, flavor);
    report.check(
        sum == expected,
        || format!("sum of squares {sum} != {expected}"),
        || json!({"n": n, "flavor": flavor.to_string()}),
    );
    let id = Element::identity(n, flavor);
    for shape in &shapes {
        let module = SpechtModule::new(shape)?;
        let f = count_standard(shape);
        let chi = module.character(&id)?;
        report.check(
            module.dimension() as u128 == f
                && chi == CycloInt::from_int(flavor.scalar_order(), f as i64),
            || format!("module dimension differs from f = {f}"),
            || json!({"lambda": shape.to_string()}),
        );
    }
    Ok(report)
}

/// Exact first orthogonality by summing over the whole group, and second
/// orthogonality over the character table's classes.
pub fn orthogonality(config: &VerifyConfig) -> Result<SuiteReport> {
    let (n, flavor) = (config.n, config.flavor);
    let order = flavor.scalar_order();
    let mut report = SuiteReport::new(Suite::Orthogonality);
    let group = enumerate_flavor(n, flavor, &config.caps)?;
    let size = group.len() as i64;
    let shapes = shapes_of(n, flavor);
    let modules = shapes
        .iter()
        .map(SpechtModule::new)
        .collect::<Result<Vec<_>>>()?;
    let chars: Vec<Vec<CycloInt>> = modules
        .iter()
        .map(|m| {
            group
                .iter()
                .map(|g| m.character(g))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for (a, ca) in chars.iter().enumerate() {
        for (b, cb) in chars.iter().enumerate() {
            let sum = ca
                .iter()
                .zip(cb)
                .fold(CycloInt::zero(order), |acc, (x, y)| {
                    &acc + &(x * &y.conjugate())
                });
            let inner = sum.div_exact_int(size);
            let delta = CycloInt::from_int(order, i64::from(a == b));
            report.check(
                inner.as_ref() == Some(&delta),
                || format!("<chi, chi'> = {sum} / {size}"),
                || json!({"lambda": shapes[a].to_string(), "mu": shapes[b].to_string()}),
            );
        }
    }
    let table = CharacterTable::new(n, flavor, &config.caps)?;
    for (c, cc) in table.classes.iter().enumerate() {
        for (d, cd) in table.classes.iter().enumerate() {
            let sum = table.values.iter().fold(CycloInt::zero(order), |acc, row| {
                &acc + &(&row[c] * &row[d].conjugate())
            });
            let expected = if c == d {
                CycloInt::from_int(order, (group_order(n, flavor.r()) / cc.size) as i64)
            } else {
                CycloInt::zero(order)
            };
            report.check(
                sum == expected,
                || format!("column product {sum}, expected {expected}"),
                || json!({"class": cc.cycle_type.to_string(), "other": cd.cycle_type.to_string()}),
            );
        }
    }
    Ok(report)
}

/// Every heart is upper unitriangular up to signs (checked on construction)
/// and has determinant `+-1`.
pub fn triangular(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Triangular);
    for shape in shapes_of(config.n, config.flavor) {
        match Heart::new(&shape) {
            Ok(h) => {
                let det = linalg::determinant(&h.entries)?;
                report.check(
                    det.abs() == 1 && h.size() as u128 == count_standard(&shape),
                    || format!("heart determinant {det}"),
                    || json!({"lambda": shape.to_string()}),
                );
            }
            Err(e) => report.check(
                false,
                || e.to_string(),
                || json!({"lambda": shape.to_string()}),
            ),
        }
    }
    Ok(report)
}

/// Generators of the group acting on pairs: `S_n` for plain words and
/// r-words, `H_n` for biwords.
fn pair_group_generators(n: usize, flavor: Flavor) -> Vec<Element> {
    let acting = if flavor == Flavor::BiWord {
        Flavor::BiWord
    } else {
        Flavor::Plain
    };
    generators(n, acting)
        .into_iter()
        .map(|g| g.coerce(flavor).expect("S_n embeds"))
        .collect()
}

fn expected_diagrams(shape: &Shape) -> Vec<Diagram> {
    shape
        .components()
        .into_iter()
        .map(|p| p.diagram())
        .collect()
}

/// Free components of `X_lambda x X_eta` (with the pair invariant), split into orbits.
pub fn free_orbit(config: &VerifyConfig) -> Result<SuiteReport> {
    let (n, flavor) = (config.n, config.flavor);
    let mut report = SuiteReport::new(Suite::FreeOrbit);
    let acting_order = if flavor == Flavor::BiWord {
        group_order(n, 2)
    } else {
        group_order(n, 1)
    };
    let gens = pair_group_generators(n, flavor);
    let shapes = shapes_of(n, flavor);
    let orbits: Vec<_> = shapes
        .iter()
        .map(|s| orbit(s, &config.caps))
        .collect::<Result<_>>()?;
    for (a, lambda) in shapes.iter().enumerate() {
        for (b, eta) in shapes.iter().enumerate() {
            let mut free: Vec<WordPair> = Vec::new();
            for x in &orbits[a] {
                for y in &orbits[b] {
                    let p = WordPair {
                        x: x.clone(),
                        y: y.clone(),
                    };
                    if p.satisfies_invariant() && p.is_free() {
                        free.push(p);
                    }
                }
            }
            let sizes = orbit_sizes(&free, &gens)?;
            let witness = || json!({"lambda": lambda.to_string(), "eta": eta.to_string(), "orbits": sizes.clone()});
            if *eta == lambda.transpose() {
                report.check(
                    sizes.len() == 1 && sizes[0] as u128 == acting_order,
                    || "free component is not a single free orbit".into(),
                    witness,
                );
                let expected = expected_diagrams(lambda);
                let mut flats = HashSet::new();
                for p in &free {
                    let diagram = p.diagram()?;
                    report.check(
                        diagram == expected,
                        || format!("diagram of {p} is not D(lambda)"),
                        || json!({"pair": p.to_string()}),
                    );
                    let (g, sign) = p.flatten()?;
                    report.check(
                        sign == specht_entry(&p.y, &p.x),
                        || format!("flatten sign of {p} differs from the Specht entry"),
                        || json!({"pair": p.to_string()}),
                    );
                    flats.insert(g);
                }
                report.check(
                    flats.len() as u128 == acting_order,
                    || {
                        format!(
                            "flattening hits {} of {acting_order} group elements",
                            flats.len()
                        )
                    },
                    || json!({"lambda": lambda.to_string()}),
                );
            } else {
                report.check(
                    !(sizes.len() == 1 && sizes[0] as u128 == acting_order),
                    || "free component is one full free orbit although eta != lambda^t".into(),
                    witness,
                );
            }
        }
    }
    Ok(report)
}

fn orbit_sizes(pairs: &[WordPair], gens: &[Element]) -> Result<Vec<usize>> {
    let index: HashMap<&WordPair, usize> = pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; pairs.len()];
    let mut sizes = Vec::new();
    for start in 0..pairs.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut size = 0;
        while let Some(i) = queue.pop_front() {
            size += 1;
            for g in gens {
                let q = pairs[i].act(g)?;
                let j = *index
                    .get(&q)
                    .ok_or_else(|| Error::Internal(format!("{q} left the free component")))?;
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        sizes.push(size);
    }
    Ok(sizes)
}

/// `rank M_lambda = f_lambda` and `det M^heart = +-1`.
pub fn rank(config: &VerifyConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Rank);
    for shape in shapes_of(config.n, config.flavor) {
        let m = SpechtMatrix::full(&shape, &config.caps)?;
        let r = linalg::rank(&m.entries)?;
        let f = count_standard(&shape);
        report.check(
            r as u128 == f,
            || format!("rank {r} != f = {f}"),
            || json!({"lambda": shape.to_string()}),
        );
        let det = linalg::determinant(&Heart::new(&shape)?.entries)?;
        report.check(
            det.abs() == 1,
            || format!("heart determinant {det}"),
            || json!({"lambda": shape.to_string()}),
        );
    }
    Ok(report)
}

/// The r-word construction at `r = 2` and the biword construction give the
/// same multiset of characters on classes matched by cycle type.
pub fn cross_r2(config: &VerifyConfig) -> Result<SuiteReport> {
    let n = config.n;
    let mut report = SuiteReport::new(Suite::CrossR2);
    let a = CharacterTable::new(n, Flavor::RWord(2), &config.caps)?;
    let b = CharacterTable::new(n, Flavor::BiWord, &config.caps)?;
    let rows = |t: &CharacterTable| -> Result<BTreeMap<Vec<i64>, usize>> {
        let keyed: BTreeMap<_, usize> = t
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.cycle_type.clone(), i))
            .collect();
        let mut out = BTreeMap::new();
        for row in &t.values {
            let values = keyed
                .values()
                .map(|&i| {
                    row[i].as_integer().ok_or_else(|| {
                        Error::Internal(format!("irrational character value {}", row[i]))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            *out.entry(values).or_insert(0) += 1;
        }
        Ok(out)
    };
    let classes_a: Vec<_> = a.classes.iter().map(|c| (&c.cycle_type, c.size)).collect();
    let classes_b: Vec<_> = b.classes.iter().map(|c| (&c.cycle_type, c.size)).collect();
    report.check(
        classes_a == classes_b,
        || "class lists differ".into(),
        || json!({"n": n}),
    );
    let (ra, rb) = (rows(&a)?, rows(&b)?);
    report.check(
        ra == rb,
        || "character multisets differ".into(),
        || json!({"n": n, "rword": format!("{ra:?}"), "biword": format!("{rb:?}")}),
    );
    Ok(report)
}

/// Equivariance of the Specht rows that the module structure rests on:
/// `v_y.g = sgn(g) v_{y.g}` for `g` in `S_n` (and `H_n` for biwords), and
/// `v_y.t_j = w^{phase(y_j)} v_y` for r-words.
pub fn row_equivariance(shape: &Shape, g: &Element, caps: &Caps) -> Result<bool> {
    let flavor = shape.flavor();
    let order = flavor.scalar_order();
    let t = shape.transpose();
    let ys = orbit(&t, caps)?;
    let pm = PermModuleMatrix::new(shape, g, caps)?;
    let m = SpechtMatrix::rows(shape, ys.clone(), caps)?;
    let vectors = linalg::from_integers(&m.entries, order);
    let index: HashMap<_, _> = ys.iter().enumerate().map(|(i, y)| (y.clone(), i)).collect();
    for (i, y) in ys.iter().enumerate() {
        let lhs = pm.apply(&vectors[i]);
        let rhs: Vec<CycloInt> = match g {
            Element::Monomial(mono) if mono.perm().is_identity() => {
                let k: i64 = mono
                    .phases()
                    .iter()
                    .zip(y.letters())
                    .map(|(&d, l)| i64::from(d) * i64::from(l.phase))
                    .sum();
                let c = CycloInt::root_power(order, k);
                vectors[i].iter().map(|e| e * &c).collect()
            }
            Element::Monomial(mono) if mono.phases().iter().any(|&d| d != 0) => {
                return Err(Error::Invalid(
                    "pass a permutation or a diagonal element".into(),
                ));
            }
            _ => {
                let s = g
                    .sign()
                    .or_else(|| Some(g.to_monomial().perm().sign()))
                    .expect("sign");
                let j = index[&y.act(g)?];
                vectors[j].iter().map(|e| e.scale(i64::from(s))).collect()
            }
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutations and signed permutations used by tests as typical elements.
pub fn sample_elements(n: usize, flavor: Flavor) -> Vec<Element> {
    let mut out = vec![];
    if n >= 2 {
        let p = Permutation::from_cycles(n, &[vec![1, 2]]).expect("valid");
        out.push(Element::Perm(p).coerce(flavor).expect("S_n embeds"));
    }
    let long = Permutation::from_cycles(n, &[(1..=n).collect()]).expect("valid");
    out.push(Element::Perm(long).coerce(flavor).expect("S_n embeds"));
    if flavor == Flavor::BiWord && n >= 1 {
        out.push(Element::Signed(SignedPermutation::t(n, 1)));
    }
    out
}
