//! Shared corpus of completely regular codes across the generated families,
//! with additive structure where the ambient graph is a Hamming graph.
//!
//! Building graphs and classifying every code is not free, so both are done
//! once per test binary behind `OnceLock`s.

#![allow(dead_code)]

use std::sync::OnceLock;

use drcodes::classify::{classify, Classification, ClassificationReport};
use drcodes::code::Code;
use drcodes::coset::{rifa_zinoviev, AdditiveCode};
use drcodes::graph::{Family, Graph};
use drcodes::spectral::IntersectionArray;
use drcodes::Tolerances;

pub struct Entry {
    pub name: String,
    pub graph: Graph,
    pub array: IntersectionArray,
    pub code: Code,
    /// Present when the code is a subgroup of the ambient word space.
    pub additive: Option<AdditiveCode>,
}

/// Codewords of the one-error-correcting code of length 7: supports whose
/// syndrome (XOR of 1-based positions) vanishes.
pub fn hamming74_words() -> Vec<u32> {
    (0u32..128)
        .filter(|x| {
            (0..7)
                .filter(|i| x >> i & 1 == 1)
                .fold(0u32, |s, i| s ^ (i + 1))
                == 0
        })
        .collect()
}

fn family_entry(name: String, fam: Family, vertices: Vec<u32>, additive: Option<AdditiveCode>) -> Entry {
    let graph = fam.generate().unwrap();
    let array = fam.intersection_array().unwrap();
    let code = Code::new(&graph, vertices).unwrap();
    Entry { name, graph, array, code, additive }
}

fn label_entry(name: String, fam: Family, labels: &[&str]) -> Entry {
    let graph = fam.generate().unwrap();
    let array = fam.intersection_array().unwrap();
    let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let code = Code::from_labels(&graph, &owned).unwrap();
    Entry { name, graph, array, code, additive: None }
}

/// One antipodal pair: a vertex with its unique partner at maximal distance.
fn pair_entry(name: String, fam: Family) -> Entry {
    let graph = fam.generate().unwrap();
    let array = fam.intersection_array().unwrap();
    let d = array.diameter() as u32;
    let partner = graph.antipodal_partner(0, d).unwrap();
    let code = Code::new(&graph, vec![0, partner]).unwrap();
    Entry { name, graph, array, code, additive: None }
}

/// One part of a bipartition: the vertices at even distance from 0.
fn even_part_entry(name: String, fam: Family) -> Entry {
    let graph = fam.generate().unwrap();
    let array = fam.intersection_array().unwrap();
    let dist = graph.bfs_distances(0);
    let vertices: Vec<u32> = (0..graph.n() as u32)
        .filter(|&v| dist[v as usize] % 2 == 0)
        .collect();
    let code = Code::new(&graph, vertices).unwrap();
    Entry { name, graph, array, code, additive: None }
}

fn build() -> Vec<Entry> {
    let mut out = Vec::new();

    // Singletons: covering radius equals the diameter and S* is everything.
    for fam in [
        Family::Hamming { n: 2, q: 2 },
        Family::Hamming { n: 4, q: 2 },
        Family::Hamming { n: 7, q: 2 },
        Family::Johnson { v: 5, k: 2 },
        Family::HalvedCube { m: 4 },
        Family::DoubledOdd { k: 3 },
        Family::Cycle { n: 6 },
        Family::FoldedCube { m: 4 },
    ] {
        let additive = match &fam {
            Family::Hamming { n, q } => Some(AdditiveCode::from_generators(*q, *n, &[]).unwrap()),
            _ => None,
        };
        out.push(family_entry(format!("singleton {fam}"), fam, vec![0], additive));
    }

    for n in 2..=8u32 {
        let fam = Family::Hamming { n, q: 2 };
        let all_ones = (1u32 << n) - 1;
        let additive = AdditiveCode::from_generators(2, n, &[all_ones]).unwrap();
        out.push(family_entry(
            format!("repetition hamming {n} 2"),
            fam,
            vec![0, all_ones],
            Some(additive),
        ));
    }

    for n in 2..=8u32 {
        let fam = Family::Hamming { n, q: 2 };
        let words: Vec<u32> = (0..1u32 << n).filter(|w| w.count_ones() % 2 == 0).collect();
        let additive = AdditiveCode::from_words(2, n, &words).unwrap();
        out.push(family_entry(
            format!("even weight hamming {n} 2"),
            fam,
            words,
            Some(additive),
        ));
    }

    for m in 4..=6u32 {
        let additive = rifa_zinoviev(m, 2).unwrap();
        let fam = Family::Hamming { n: additive.n(), q: 2 };
        let graph = fam.generate().unwrap();
        let array = fam.intersection_array().unwrap();
        let code = additive.to_code(&graph).unwrap();
        out.push(Entry {
            name: format!("rifa-zinoviev {m} 2"),
            graph,
            array,
            code,
            additive: Some(additive),
        });
    }

    let h74 = hamming74_words();
    let additive = AdditiveCode::from_words(2, 7, &h74).unwrap();
    out.push(family_entry(
        "perfect hamming 7 4".into(),
        Family::Hamming { n: 7, q: 2 },
        h74,
        Some(additive),
    ));

    // Perfect ternary code of length 4, generated by 2210 and 2101.
    let additive = AdditiveCode::from_generators(3, 4, &[17, 32]).unwrap();
    let fam = Family::Hamming { n: 4, q: 3 };
    let graph = fam.generate().unwrap();
    let array = fam.intersection_array().unwrap();
    let code = additive.to_code(&graph).unwrap();
    out.push(Entry {
        name: "perfect ternary 4 2".into(),
        graph,
        array,
        code,
        additive: Some(additive),
    });

    out.push(label_entry(
        "johnson 5 2 inside fixed 4-set".into(),
        Family::Johnson { v: 5, k: 2 },
        &["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"],
    ));
    out.push(label_entry(
        "johnson 5 2 star".into(),
        Family::Johnson { v: 5, k: 2 },
        &["1,2", "1,3", "1,4", "1,5"],
    ));

    let containing: Vec<String> = (2..=6)
        .flat_map(|a| ((a + 1)..=6).map(move |b| format!("1,{a},{b}")))
        .collect();
    let avoiding: Vec<String> = (2..=6)
        .flat_map(|a| {
            ((a + 1)..=6).flat_map(move |b| ((b + 1)..=6).map(move |c| format!("{a},{b},{c}")))
        })
        .collect();
    for (name, labels) in [
        ("johnson 6 3 through a point", containing),
        ("johnson 6 3 avoiding a point", avoiding),
    ] {
        let graph = Family::Johnson { v: 6, k: 3 }.generate().unwrap();
        let array = Family::Johnson { v: 6, k: 3 }.intersection_array().unwrap();
        let code = Code::from_labels(&graph, &labels).unwrap();
        out.push(Entry {
            name: name.into(),
            graph,
            array,
            code,
            additive: None,
        });
    }

    out.push(pair_entry(
        "antipodal pair doubled-odd 3".into(),
        Family::DoubledOdd { k: 3 },
    ));
    out.push(pair_entry(
        "antipodal pair halved-cube 6".into(),
        Family::HalvedCube { m: 6 },
    ));
    out.push(even_part_entry(
        "half folded-cube 4".into(),
        Family::FoldedCube { m: 4 },
    ));
    out.push(even_part_entry(
        "even part folded-cube 6".into(),
        Family::FoldedCube { m: 6 },
    ));

    out
}

pub fn corpus() -> &'static [Entry] {
    static CORPUS: OnceLock<Vec<Entry>> = OnceLock::new();
    CORPUS.get_or_init(build)
}

/// Classification of every corpus entry, aligned by index. Everything in the
/// corpus is completely regular, so a witness here is a test failure.
pub fn reports() -> &'static [ClassificationReport] {
    static REPORTS: OnceLock<Vec<ClassificationReport>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        corpus()
            .iter()
            .map(|e| {
                match classify(&e.graph, &e.array, &e.code, &Tolerances::default())
                    .unwrap_or_else(|err| panic!("{}: {err}", e.name))
                {
                    Classification::Report(r) => *r,
                    Classification::NotCompletelyRegular(w) => {
                        panic!("{} should be completely regular: {w}", e.name)
                    }
                }
            })
            .collect()
    })
}

pub fn entry(name: &str) -> (&'static Entry, &'static ClassificationReport) {
    let idx = corpus()
        .iter()
        .position(|e| e.name == name)
        .unwrap_or_else(|| panic!("no corpus entry named '{name}'"));
    (&corpus()[idx], &reports()[idx])
}
