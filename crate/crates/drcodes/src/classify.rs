//! End-to-end classification pipeline: complete regularity, code spectrum,
//! the Q-polynomial and Leonard verdicts with their cross-check, harmonic
//! and arithmetic structure, and the feasibility filters.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::code::{
    code_spectrum, distance_partition, is_completely_regular, strength, Code, CodeSpectrum,
    CrWitness, QuotientMatrix,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::leonard::{
    antipodal_parity_filter, arithmetic_test, expansions, gap_filter, harmonic_test,
    is_nondegenerate, leonard_test, qpoly_test, EigenExpansion, LeonardResult, QpolyResult,
};
use crate::scalar::Scalar;
use crate::spectral::{IntersectionArray, KreinTensor};
use crate::Tolerances;

/// Outcomes of the feasibility filters. `lloyd` records that every quotient
/// eigenvalue was located in the graph spectrum (always true once a report
/// exists); `parity` is absent when the graph is not an antipodal 2-cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filters {
    pub lloyd: bool,
    pub gap: bool,
    pub parity: Option<bool>,
}

/// Everything the pipeline derives about one completely regular code.
#[derive(Debug)]
pub struct ClassificationReport {
    pub quotient: QuotientMatrix,
    pub cell_sizes: Vec<usize>,
    pub spectrum: CodeSpectrum,
    /// Strength with respect to the natural descending graph ordering.
    pub strength: usize,
    pub qpoly: QpolyResult,
    /// One Leonard verdict per nontrivial code eigenvalue, in spectrum
    /// order.
    pub leonard: Vec<LeonardResult>,
    pub harmonic_t: Option<usize>,
    pub arithmetic_t: Option<Scalar>,
    /// Non-degeneracy of each code standard eigenvector, aligned with the
    /// spectrum. The principal vector is constant, so its flag is false
    /// whenever the covering radius is positive; the flags of the
    /// nontrivial eigenvalues are the ones reconstruction cares about.
    pub nondegenerate: Vec<bool>,
    /// Absent for codes with covering radius 0.
    pub expansions: Option<EigenExpansion>,
    pub filters: Filters,
    /// Q-polynomial orderings of the ambient graph (natural-only beyond
    /// diameter 9).
    pub graph_orderings: Vec<Vec<usize>>,
}

impl ClassificationReport {
    pub fn rho(&self) -> usize {
        self.quotient.rho()
    }

    pub fn is_qpoly(&self) -> bool {
        self.qpoly.is_qpoly()
    }

    pub fn is_leonard(&self) -> bool {
        self.rho() == 0 || self.leonard.iter().any(|l| l.is_leonard())
    }

    /// Indices into the code spectrum of the eigenvalues witnessing the
    /// Leonard property.
    pub fn leonard_thetas(&self) -> Vec<usize> {
        self.leonard
            .iter()
            .filter(|l| l.is_leonard())
            .map(|l| l.theta_index)
            .collect()
    }
}

/// Verdict of [`classify`]: either a witness of failed complete regularity
/// or the full report.
#[derive(Debug)]
pub enum Classification {
    NotCompletelyRegular(CrWitness),
    Report(Box<ClassificationReport>),
}

/// Q-polynomial orderings of a graph from its Krein tensor. Up to diameter
/// 9 the search is exhaustive; beyond that only the natural descending
/// ordering is checked, which suffices for the families this library
/// generates.
pub fn graph_qpoly_orderings(kt: &KreinTensor) -> Result<Vec<Vec<usize>>> {
    let d = kt.dim() - 1;
    if d <= 9 {
        kt.qpoly_orderings()
    } else if kt.natural_ordering_valid() {
        Ok(vec![(1..=d).collect()])
    } else {
        Ok(Vec::new())
    }
}

/// Runs the whole pipeline for a code in a distance-regular graph whose
/// intersection array is already known (generated families carry theirs;
/// explicit graphs should pass through
/// [`Graph::is_distance_regular`](crate::graph::Graph::is_distance_regular)
/// first).
///
/// Panics if the exhaustive Q-polynomial and Leonard verdicts disagree;
/// that equivalence is load-bearing and a violation means a numerical or
/// logic fault, not a mathematical possibility.
pub fn classify(
    g: &Graph,
    ia: &IntersectionArray,
    c: &Code,
    tol: &Tolerances,
) -> Result<Classification> {
    assert_eq!(
        BigRational::from_integer(BigInt::from(g.n())),
        ia.vertex_count(),
        "graph size does not match the intersection array"
    );
    assert_eq!(g.degree(0) as i64, ia.k(), "graph valency mismatch");

    let spec = ia.spectrum(tol)?;
    let kt = spec.krein_parameters(tol);
    let graph_orderings = graph_qpoly_orderings(&kt)?;

    let u = match is_completely_regular(g, c) {
        Ok(u) => u,
        Err(w) => return Ok(Classification::NotCompletelyRegular(w)),
    };
    let dp = distance_partition(g, c);
    let cs = code_spectrum(&u, &spec, tol)?;
    let rho = u.rho();
    assert_eq!(cs.sstar.len(), rho, "matched eigenvalue count is off");
    if rho >= 1 {
        assert!(
            cs.sturm_property(),
            "second eigenvector of a completely regular code must decrease"
        );
    }

    let natural: Vec<usize> = (1..=ia.diameter()).collect();
    let strength = strength(&cs, &natural);
    let exp = if rho >= 1 {
        Some(expansions(&cs, tol)?)
    } else {
        None
    };

    let qpoly = qpoly_test(&cs, tol)?;
    let leonard: Vec<LeonardResult> = (1..=rho)
        .map(|j| leonard_test(&cs, &cs.etas[j].clone(), tol))
        .collect::<Result<_>>()?;
    if rho >= 1 {
        let mut union: Vec<Vec<usize>> = leonard
            .iter()
            .flat_map(|l| l.orderings.iter().cloned())
            .collect();
        union.sort();
        union.dedup();
        let mut q_sorted = qpoly.orderings.clone();
        q_sorted.sort();
        assert_eq!(
            union, q_sorted,
            "Q-polynomial orderings and Leonard witnesses must coincide"
        );
    }

    let nondegenerate = cs
        .stdvecs
        .iter()
        .map(|v| is_nondegenerate(v, tol.eigen))
        .collect();
    let harmonic_t = graph_orderings
        .iter()
        .find_map(|o| harmonic_test(&cs, o));
    let arithmetic_t = arithmetic_test(&cs, tol);

    let antipodal = ia.valencies().last() == Some(&BigRational::from_integer(BigInt::from(1)));
    let parity = if antipodal {
        let d = ia.diameter() as u32;
        Some(antipodal_parity_filter(
            &cs.sstar,
            |x| g.antipodal_partner(x, d),
            c,
            &dp,
        )?)
    } else {
        None
    };
    let filters = Filters {
        lloyd: true,
        gap: gap_filter(&cs.sstar),
        parity,
    };

    Ok(Classification::Report(Box::new(ClassificationReport {
        quotient: u,
        cell_sizes: dp.cell_sizes(),
        spectrum: cs,
        strength,
        qpoly,
        leonard,
        harmonic_t,
        arithmetic_t,
        nondegenerate,
        expansions: exp,
        filters,
        graph_orderings,
    })))
}
