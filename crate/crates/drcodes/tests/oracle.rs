//! Independent cross-checks of the closed-form spectra: every family's
//! parameter-level eigenvalues and multiplicities against a dense
//! eigendecomposition of the explicitly generated graph, plus frozen
//! integer tables for the named members. The Hamming family gets the
//! same treatment (and more) in the acceptance suite.

use nalgebra::DMatrix;

use drcodes::graph::Family;
use drcodes::scalar::Scalar;
use drcodes::Tolerances;

fn dense_check(fam: Family) {
    let tol = Tolerances::default();
    let graph = fam.generate().unwrap();
    let spec = fam.intersection_array().unwrap().spectrum(&tol).unwrap();
    let thetas: Vec<f64> = spec.thetas.iter().map(Scalar::to_f64).collect();
    let n = graph.n();

    let mut a: DMatrix<f64> = DMatrix::zeros(n, n);
    for u in 0..n as u32 {
        for &v in graph.neighbors(u) {
            a[(u as usize, v as usize)] = 1.0;
        }
    }
    let mut counts = vec![0usize; thetas.len()];
    for &lam in a.symmetric_eigen().eigenvalues.iter() {
        let (j, dist) = thetas
            .iter()
            .enumerate()
            .map(|(j, t)| (j, (t - lam).abs()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        assert!(
            dist <= 1e-8,
            "{fam}: eigenvalue {lam} matches no parameter value"
        );
        counts[j] += 1;
    }
    assert!(spec.integral_multiplicities, "{fam}");
    for (j, c) in counts.iter().enumerate() {
        // Irrational eigenvalues make the sum-rule multiplicities
        // approximate, so compare up to rounding.
        assert!(
            (spec.multiplicities[j].to_f64() - *c as f64).abs() < 1e-6,
            "{fam}: multiplicity of {} is {}, dense count {c}",
            spec.thetas[j],
            spec.multiplicities[j]
        );
    }
}

#[test]
fn johnson_spectra() {
    dense_check(Family::Johnson { v: 5, k: 2 });
    dense_check(Family::Johnson { v: 6, k: 2 });
    dense_check(Family::Johnson { v: 6, k: 3 });
    dense_check(Family::Johnson { v: 7, k: 3 });
}

#[test]
fn halved_cube_spectra() {
    for m in 4..=7 {
        dense_check(Family::HalvedCube { m });
    }
}

#[test]
fn folded_cube_spectra() {
    for m in 4..=7 {
        dense_check(Family::FoldedCube { m });
    }
}

#[test]
fn doubled_odd_spectra() {
    dense_check(Family::DoubledOdd { k: 3 });
    dense_check(Family::DoubledOdd { k: 4 });
}

/// Odd cycles have irrational eigenvalues, so this also exercises the
/// bisection path end to end.
#[test]
fn cycle_spectra_including_irrational() {
    for n in 5..=9 {
        dense_check(Family::Cycle { n });
    }
}

#[test]
fn ternary_hamming_spectrum() {
    dense_check(Family::Hamming { n: 4, q: 3 });
}

fn ints(vals: &[i64]) -> Vec<Scalar> {
    vals.iter().copied().map(Scalar::from_int).collect()
}

#[test]
fn frozen_integer_tables() {
    let tol = Tolerances::default();
    let cases: Vec<(Family, &[i64], &[i64])> = vec![
        (Family::Johnson { v: 5, k: 2 }, &[6, 1, -2], &[1, 4, 5]),
        (Family::Johnson { v: 6, k: 3 }, &[9, 3, -1, -3], &[1, 5, 9, 5]),
        (Family::HalvedCube { m: 4 }, &[6, 0, -2], &[1, 4, 3]),
        (Family::HalvedCube { m: 5 }, &[10, 2, -2], &[1, 5, 10]),
        (Family::HalvedCube { m: 6 }, &[15, 5, -1, -3], &[1, 6, 15, 10]),
        (Family::FoldedCube { m: 4 }, &[4, 0, -4], &[1, 6, 1]),
        (Family::FoldedCube { m: 5 }, &[5, 1, -3], &[1, 10, 5]),
        (Family::FoldedCube { m: 6 }, &[6, 2, -2, -6], &[1, 15, 15, 1]),
        (Family::FoldedCube { m: 7 }, &[7, 3, -1, -5], &[1, 21, 35, 7]),
        (
            Family::DoubledOdd { k: 3 },
            &[3, 2, 1, -1, -2, -3],
            &[1, 4, 5, 5, 4, 1],
        ),
        (
            Family::Hamming { n: 4, q: 3 },
            &[8, 5, 2, -1, -4],
            &[1, 8, 24, 32, 16],
        ),
    ];
    for (fam, thetas, mults) in cases {
        let spec = fam.intersection_array().unwrap().spectrum(&tol).unwrap();
        assert_eq!(spec.thetas, ints(thetas), "{fam}");
        assert_eq!(spec.multiplicities, ints(mults), "{fam}");
    }
}
