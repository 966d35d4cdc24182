//! Acceptance criteria 1-7. Each prints one PASS/FAIL line; the test fails if
//! any criterion fails or exceeds its time budget.

use std::io::{self, Write};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use specht_core::groups::{group_order, SignedPermutation};
use specht_core::linalg;
use specht_core::shapes::{bipartitions_of, count_standard, partitions_of, shapes_of, BiPartition};
use specht_core::specht::standard_pairs;
use specht_core::verify::{self, Suite, VerifyConfig};
use specht_core::{
    Caps, CycloInt, Element, Flavor, Heart, MonomialElement, Partition, Permutation, Shape,
    SpechtMatrix,
};

fn plain(parts: &[usize]) -> Shape {
    Shape::Plain(Partition::new(parts.to_vec()).unwrap())
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn rows_i8<const N: usize>(rows: &[[i8; N]]) -> Vec<Vec<i8>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn ints(shape: &Shape, g: &Element) -> Vec<Vec<i64>> {
    specht_core::repmod::rep_matrix(shape, g)
        .unwrap()
        .as_integers()
        .unwrap()
}

fn run_suite(n: usize, flavor: Flavor, suite: Suite) {
    let config = VerifyConfig::new(n, flavor);
    let report = verify::run(&config, &[suite]).unwrap();
    assert!(
        report.passed(),
        "{suite} n={n} {flavor}:\n{}",
        report.to_text()
    );
}

/// Hook length formula, independent of the tableau enumeration.
fn hook_count(p: &Partition) -> u128 {
    let parts = p.parts();
    let conj = p.transpose();
    let mut hooks = 1u128;
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            hooks *= (len - j + conj.parts()[j] - i - 1) as u128;
        }
    }
    (1..=p.size() as u128).product::<u128>() / hooks
}

fn hook_count_shape(shape: &Shape) -> u128 {
    let comps = shape.components();
    let n = shape.size() as u128;
    let mut total: u128 = (1..=n).product();
    for c in comps {
        total = total / (1..=c.size() as u128).product::<u128>() * hook_count(c);
    }
    total
}

fn criterion_1() {
    // (a)
    assert_eq!(
        strings(&partitions_of(5)),
        ["1,1,1,1,1", "2,1,1,1", "2,2,1", "3,1,1", "3,2", "4,1", "5"]
    );
    // (b)
    let m = SpechtMatrix::full(&plain(&[2, 1, 1]), &Caps::default()).unwrap();
    assert_eq!(strings(&m.rows), ["1112", "1121", "1211", "2111"]);
    assert_eq!(
        strings(&m.cols),
        [
            "1123", "1132", "1213", "1231", "1312", "1321", "2113", "2131", "2311", "3112", "3121",
            "3211"
        ]
    );
    let table: [[i8; 12]; 4] = [
        [0, 0, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1],
        [0, 0, -1, 0, 1, 0, 1, 0, -1, -1, 0, 1],
        [1, -1, 0, 0, 0, 0, -1, 1, 0, 1, -1, 0],
        [-1, 1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0],
    ];
    assert_eq!(m.entries, rows_i8(&table));
    // (c)
    let syt = standard_pairs(&plain(&[3, 2])).unwrap();
    assert_eq!(
        strings(&syt),
        [
            "<11122,12312>",
            "<11212,12132>",
            "<11221,12123>",
            "<12112,11232>",
            "<12121,11223>"
        ]
    );
    // (d)
    let h = Heart::new(&plain(&[3, 2])).unwrap();
    assert_eq!(
        strings(&h.cols),
        ["11122", "11212", "11221", "12112", "12121"]
    );
    assert_eq!(
        strings(&h.rows),
        ["12312", "12132", "12123", "11232", "11223"]
    );
    let heart: [[i8; 5]; 5] = [
        [1, 0, 0, 0, -1],
        [0, -1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, -1],
    ];
    assert_eq!(h.entries, rows_i8(&heart));
    // (e)
    let s = plain(&[3, 2]);
    let swap = [
        [1, 0, 0, -1, -1],
        [0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1],
        [0, 0, 0, -1, 0],
        [0, 0, 0, 0, -1],
    ];
    let cycle = [
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [1, 0, -1, -1, -1],
        [0, 0, -1, 0, -1],
        [0, 1, 1, 1, 1],
    ];
    assert_eq!(
        ints(&s, &Element::Perm(Permutation::parse("(1,2)", 5).unwrap())),
        swap
    );
    assert_eq!(
        ints(
            &s,
            &Element::Perm(Permutation::parse("(1,2,3,4,5)", 5).unwrap())
        ),
        cycle
    );
    // (f)
    let s = Shape::parse("|3,2|", Flavor::RWord(3)).unwrap();
    let w = CycloInt::root_power(3, 1);
    let scaled = |m: &[[i64; 5]; 5]| -> Vec<Vec<CycloInt>> {
        m.iter()
            .map(|r| r.iter().map(|&e| w.scale(e)).collect())
            .collect()
    };
    let id5 = [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ];
    let t1 = Element::Monomial(MonomialElement::t(5, 3, 1));
    assert_eq!(
        specht_core::repmod::rep_matrix(&s, &t1).unwrap().matrix,
        scaled(&id5)
    );
    let g = Element::Monomial(MonomialElement::parse("t1 (1,2,3,4,5)", 5, 3).unwrap());
    assert_eq!(
        specht_core::repmod::rep_matrix(&s, &g).unwrap().matrix,
        scaled(&cycle)
    );
    // (g)
    let s = Shape::parse("|3,2", Flavor::BiWord).unwrap();
    let minus: Vec<Vec<i64>> = id5.iter().map(|r| r.iter().map(|e| -e).collect()).collect();
    assert_eq!(
        ints(&s, &Element::Signed(SignedPermutation::t(5, 1))),
        minus
    );
    let g = Element::Signed(SignedPermutation::parse("t1 (1,2,3,4,5)", 5).unwrap());
    let expected = [
        [0, -1, 0, 0, 0],
        [0, 0, -1, 0, 0],
        [-1, 0, 1, 1, 1],
        [0, 0, 1, 0, 1],
        [0, -1, -1, -1, -1],
    ];
    assert_eq!(ints(&s, &g), expected);
    // (h)
    let chain: Vec<String> = bipartitions_of(3).iter().map(BiPartition::dotted).collect();
    assert_eq!(
        chain,
        [".111", ".21", ".3", "1.11", "1.2", "11.1", "2.1", "111.", "21.", "3."]
    );
}

fn criterion_2() {
    let mut cases: Vec<(usize, Flavor)> = (1..=6).map(|n| (n, Flavor::Plain)).collect();
    cases.extend((1..=4).map(|n| (n, Flavor::RWord(2))));
    cases.extend((1..=3).map(|n| (n, Flavor::RWord(3))));
    cases.extend((1..=2).map(|n| (n, Flavor::RWord(4))));
    cases.extend((1..=4).map(|n| (n, Flavor::BiWord)));
    for (n, flavor) in cases {
        let shapes = shapes_of(n, flavor);
        let order = group_order(n, flavor.r());
        let by_enumeration: u128 = shapes.iter().map(|s| count_standard(s).pow(2)).sum();
        let by_hooks: u128 = shapes.iter().map(|s| hook_count_shape(s).pow(2)).sum();
        assert_eq!(by_enumeration, order, "n={n} {flavor}");
        assert_eq!(by_hooks, order, "n={n} {flavor}");
        if n <= 4 {
            run_suite(n, flavor, Suite::Dimension);
        }
    }
}

fn criterion_3() {
    let mut cases: Vec<(usize, Flavor)> = (1..=4).map(|n| (n, Flavor::Plain)).collect();
    for r in 1..=3 {
        cases.extend((1..=3).map(|n| (n, Flavor::RWord(r))));
    }
    cases.extend((1..=3).map(|n| (n, Flavor::BiWord)));
    for (n, flavor) in cases {
        run_suite(n, flavor, Suite::Homomorphism);
    }
}

fn criterion_4() {
    for (n, flavor) in [
        (4, Flavor::Plain),
        (5, Flavor::Plain),
        (3, Flavor::RWord(2)),
        (3, Flavor::RWord(3)),
        (3, Flavor::BiWord),
    ] {
        run_suite(n, flavor, Suite::Orthogonality);
    }
}

fn criterion_5() {
    for flavor in [
        Flavor::Plain,
        Flavor::RWord(2),
        Flavor::RWord(3),
        Flavor::BiWord,
    ] {
        for n in 1..=4 {
            run_suite(n, flavor, Suite::FreeOrbit);
        }
    }
}

fn criterion_6() {
    let mut cases: Vec<(usize, Flavor)> = (1..=5).map(|n| (n, Flavor::Plain)).collect();
    for r in 2..=3 {
        cases.extend((1..=3).map(|n| (n, Flavor::RWord(r))));
    }
    cases.extend((1..=3).map(|n| (n, Flavor::BiWord)));
    for (n, flavor) in cases {
        run_suite(n, flavor, Suite::Rank);
        for shape in shapes_of(n, flavor) {
            let det = linalg::determinant(&Heart::new(&shape).unwrap().entries).unwrap();
            assert_eq!(det.abs(), 1, "{shape}");
        }
    }
}

fn criterion_7() {
    for n in 1..=3 {
        run_suite(n, Flavor::RWord(2), Suite::CrossR2);
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn(), u64); 7] = [
        ("1 golden tables and matrices", criterion_1, 5),
        ("2 dimension identities", criterion_2, 10),
        ("3 homomorphism suite", criterion_3, 60),
        ("4 orthogonality of character tables", criterion_4, 120),
        ("5 free-component propositions", criterion_5, 60),
        (
            "6 rank of Specht matrices and heart determinants",
            criterion_6,
            60,
        ),
        ("7 cross-construction equivalence at r = 2", criterion_7, 10),
    ];
    let mut failed = Vec::new();
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let status = if outcome.is_ok() && in_time {
            "PASS"
        } else {
            "FAIL"
        };
        let note = if in_time {
            String::new()
        } else {
            format!(" (over the {budget} s budget)")
        };
        writeln!(
            io::stdout().lock(),
            "{status} criterion {name} [{:.2} s]{note}",
            elapsed.as_secs_f64()
        )
        .unwrap();
        if status == "FAIL" {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
