//! Code-level analytics inside an explicit graph: distance partitions,
//! minimum distance, complete regularity, quotient matrices, outer
//! distribution matrices, and code spectra.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly;
use crate::scalar::Scalar;
use crate::spectral::Spectrum;
use crate::Tolerances;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::collections::{HashSet, VecDeque};

/// A nonempty vertex subset of a fixed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    vertices: Vec<u32>,
    trivial: bool,
}

impl Code {
    /// Sorts, deduplicates, and validates the vertex list. Codes with at most
    /// one vertex or covering the whole graph are flagged trivial but still
    /// constructed.
    pub fn new(g: &Graph, mut vertices: Vec<u32>) -> Result<Code> {
        if vertices.is_empty() {
            return Err(Error::TrivialCode("empty vertex set".into()));
        }
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.last() {
            if v as usize >= g.n() {
                return Err(Error::InvalidParameters(format!(
                    "vertex {v} out of range for a graph on {} vertices",
                    g.n()
                )));
            }
        }
        let trivial = vertices.len() <= 1 || vertices.len() == g.n();
        Ok(Code { vertices, trivial })
    }

    pub fn from_labels(g: &Graph, labels: &[String]) -> Result<Code> {
        let vs = labels
            .iter()
            .map(|s| g.vertex_by_label(s))
            .collect::<Result<Vec<_>>>()?;
        Code::new(g, vs)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// The distance partition `C = C_0, C_1, ..., C_rho` of a code.
#[derive(Clone, Debug)]
pub struct DistancePartition {
    pub cells: Vec<Vec<u32>>,
    /// Cell index per vertex.
    pub cell_of: Vec<u32>,
}

impl DistancePartition {
    /// Covering radius.
    pub fn rho(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }
}

/// Multi-source BFS layering by distance to the code.
pub fn distance_partition(g: &Graph, c: &Code) -> DistancePartition {
    let mut dist = vec![u32::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &v in c.vertices() {
        dist[v as usize] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        for &v in g.neighbors(u) {
            if dist[v as usize] == u32::MAX {
                dist[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
    let rho = *dist.iter().max().unwrap() as usize;
    let mut cells = vec![Vec::new(); rho + 1];
    for (v, &d) in dist.iter().enumerate() {
        cells[d as usize].push(v as u32);
    }
    DistancePartition {
        cells,
        cell_of: dist,
    }
}

/// Minimum pairwise distance within the code.
///
/// # Errors
/// `TrivialCode` when the code has fewer than two vertices.
pub fn minimum_distance(g: &Graph, c: &Code) -> Result<u32> {
    if c.len() < 2 {
        return Err(Error::TrivialCode(
            "minimum distance needs at least two vertices".into(),
        ));
    }
    // BFS from each codeword, stopping at the first other codeword; the
    // minimum over sources is the minimum distance.
    let nearest = |&src: &u32| -> u32 {
        let mut dist = vec![u32::MAX; g.n()];
        let mut queue = VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in g.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    if c.contains(v) {
                        return du + 1;
                    }
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        u32::MAX
    };
    #[cfg(feature = "parallel")]
    let best = c.vertices().par_iter().map(nearest).min().unwrap();
    #[cfg(not(feature = "parallel"))]
    let best = c.vertices().iter().map(nearest).min().unwrap();
    Ok(best)
}

/// Tridiagonal quotient matrix of an equitable distance partition: row i is
/// `(gamma_i, alpha_i, beta_i)`, the neighbor counts toward `C_{i-1}`, `C_i`,
/// `C_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub gamma: Vec<i64>,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl QuotientMatrix {
    /// Validates shape, nonnegativity, constant row sums, and irreducibility
    /// (`gamma_i > 0` for `i >= 1`, `beta_i > 0` for `i < rho`).
    pub fn new(gamma: Vec<i64>, alpha: Vec<i64>, beta: Vec<i64>) -> Result<QuotientMatrix> {
        let r = gamma.len();
        if r == 0 || alpha.len() != r || beta.len() != r {
            return Err(Error::InvalidParameters(
                "quotient matrix rows must align".into(),
            ));
        }
        if gamma[0] != 0 || beta[r - 1] != 0 {
            return Err(Error::InvalidParameters(
                "quotient matrix needs gamma_0 = 0 and beta_rho = 0".into(),
            ));
        }
        if gamma.iter().chain(&alpha).chain(&beta).any(|&x| x < 0) {
            return Err(Error::InvalidParameters(
                "quotient matrix entries must be nonnegative".into(),
            ));
        }
        let k = gamma[0] + alpha[0] + beta[0];
        for i in 0..r {
            if gamma[i] + alpha[i] + beta[i] != k {
                return Err(Error::InvalidParameters(format!(
                    "row {i} sums to {}, expected {k}",
                    gamma[i] + alpha[i] + beta[i]
                )));
            }
            if i >= 1 && gamma[i] == 0 {
                return Err(Error::InvalidParameters(format!("gamma_{i} must be positive")));
            }
            if i + 1 < r && beta[i] == 0 {
                return Err(Error::InvalidParameters(format!("beta_{i} must be positive")));
            }
        }
        Ok(QuotientMatrix { gamma, alpha, beta })
    }

    /// Covering radius implied by the matrix.
    pub fn rho(&self) -> usize {
        self.gamma.len() - 1
    }

    pub fn k(&self) -> i64 {
        self.alpha[0] + self.beta[0]
    }

    /// Distinct eigenvalues, descending. Always `rho + 1` of them: the
    /// off-diagonal products are positive, so the matrix has simple spectrum.
    pub fn eigenvalues(&self, tol: &Tolerances) -> Result<Vec<Scalar>> {
        if self.rho() == 0 {
            return Ok(vec![Scalar::from_int(self.k())]);
        }
        poly::tridiagonal_eigenvalues(
            &self.gamma[1..],
            &self.alpha,
            &self.beta[..self.rho()],
            self.k() + 1,
            tol.bisect_width,
        )
    }

    /// Rows as triples, the shape used in reports.
    pub fn rows(&self) -> Vec<[i64; 3]> {
        (0..=self.rho())
            .map(|i| [self.gamma[i], self.alpha[i], self.beta[i]])
            .collect()
    }
}

impl std::fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{},{},{}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Two vertices of the same cell with different neighbor profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrWitness {
    pub x_ref: u32,
    pub x: u32,
    pub cell: u32,
    /// `(gamma, alpha, beta)` at `x`.
    pub found: (i64, i64, i64),
    /// Profile of `x_ref`, the first vertex of the cell.
    pub expected: (i64, i64, i64),
}

impl std::fmt::Display for CrWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cell {} is not equitable: vertex {} counts {:?}, vertex {} counts {:?}",
            self.cell, self.x, self.found, self.x_ref, self.expected
        )
    }
}

pub type CrVerdict = std::result::Result<QuotientMatrix, CrWitness>;

fn profile(g: &Graph, cell_of: &[u32], x: u32) -> (i64, i64, i64) {
    let cx = cell_of[x as usize];
    let (mut gamma, mut alpha, mut beta) = (0i64, 0i64, 0i64);
    for &y in g.neighbors(x) {
        let cy = cell_of[y as usize];
        if cy + 1 == cx {
            gamma += 1;
        } else if cy == cx {
            alpha += 1;
        } else {
            beta += 1;
        }
    }
    (gamma, alpha, beta)
}

fn equitability(g: &Graph, dp: &DistancePartition) -> CrVerdict {
    let baseline: Vec<(u32, (i64, i64, i64))> = dp
        .cells
        .iter()
        .map(|cell| (cell[0], profile(g, &dp.cell_of, cell[0])))
        .collect();
    let check = |x: u32| -> Option<CrWitness> {
        let cell = dp.cell_of[x as usize];
        let found = profile(g, &dp.cell_of, x);
        let (x_ref, expected) = baseline[cell as usize];
        (found != expected).then_some(CrWitness {
            x_ref,
            x,
            cell,
            found,
            expected,
        })
    };
    #[cfg(feature = "parallel")]
    let witness = (0..g.n() as u32).into_par_iter().find_map_first(check);
    #[cfg(not(feature = "parallel"))]
    let witness = (0..g.n() as u32).find_map(check);
    match witness {
        Some(w) => Err(w),
        None => {
            let gamma = baseline.iter().map(|b| b.1 .0).collect();
            let alpha = baseline.iter().map(|b| b.1 .1).collect();
            let beta = baseline.iter().map(|b| b.1 .2).collect();
            // Equitable distance partitions always pass validation.
            Ok(QuotientMatrix::new(gamma, alpha, beta).expect("equitable partition"))
        }
    }
}

/// Complete regularity: the distance partition must be equitable. The verdict
/// is cross-checked against the outer distribution criterion (exactly
/// `rho + 1` distinct rows); the two must agree.
pub fn is_completely_regular(g: &Graph, c: &Code) -> CrVerdict {
    let dp = distance_partition(g, c);
    let verdict = equitability(g, &dp);
    let b = outer_distribution_matrix(g, c);
    let distinct: HashSet<&Vec<i64>> = b.iter().collect();
    assert_eq!(
        verdict.is_ok(),
        distinct.len() == dp.rho() + 1,
        "equitability and outer-distribution verdicts disagree"
    );
    verdict
}

/// Sequential variant of [`is_completely_regular`].
pub fn is_completely_regular_seq(g: &Graph, c: &Code) -> CrVerdict {
    let dp = distance_partition(g, c);
    let baseline: Vec<(u32, (i64, i64, i64))> = dp
        .cells
        .iter()
        .map(|cell| (cell[0], profile(g, &dp.cell_of, cell[0])))
        .collect();
    let witness = (0..g.n() as u32).find_map(|x| {
        let cell = dp.cell_of[x as usize];
        let found = profile(g, &dp.cell_of, x);
        let (x_ref, expected) = baseline[cell as usize];
        (found != expected).then_some(CrWitness {
            x_ref,
            x,
            cell,
            found,
            expected,
        })
    });
    let verdict = match witness {
        Some(w) => Err(w),
        None => {
            let gamma = baseline.iter().map(|b| b.1 .0).collect();
            let alpha = baseline.iter().map(|b| b.1 .1).collect();
            let beta = baseline.iter().map(|b| b.1 .2).collect();
            Ok(QuotientMatrix::new(gamma, alpha, beta).expect("equitable partition"))
        }
    };
    let b = outer_distribution_matrix_seq(g, c);
    let distinct: HashSet<&Vec<i64>> = b.iter().collect();
    assert_eq!(
        verdict.is_ok(),
        distinct.len() == dp.rho() + 1,
        "equitability and outer-distribution verdicts disagree"
    );
    verdict
}

#[cfg(feature = "parallel")]
fn merge_outer(mut a: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    for (ra, rb) in a.iter_mut().zip(b) {
        if rb.len() > ra.len() {
            ra.resize(rb.len(), 0);
        }
        for (i, v) in rb.into_iter().enumerate() {
            ra[i] += v;
        }
    }
    a
}

fn outer_chunk(g: &Graph, chunk: &[u32]) -> Vec<Vec<i64>> {
    let mut local = vec![Vec::new(); g.n()];
    for &cw in chunk {
        let dist = g.bfs_distances(cw);
        for (x, &d) in dist.iter().enumerate() {
            let d = d as usize;
            if local[x].len() <= d {
                local[x].resize(d + 1, 0);
            }
            local[x][d] += 1;
        }
    }
    local
}

fn pad_outer(mut b: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let width = b.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in &mut b {
        r.resize(width, 0);
    }
    b
}

/// Outer distribution matrix `B[x][i] = |Gamma_i(x) ∩ C|`, an n×(D+1)
/// integer matrix whose row sums all equal `|C|`.
pub fn outer_distribution_matrix(g: &Graph, c: &Code) -> Vec<Vec<i64>> {
    #[cfg(feature = "parallel")]
    let b = c
        .vertices()
        .par_chunks(32)
        .map(|chunk| outer_chunk(g, chunk))
        .reduce(|| vec![Vec::new(); g.n()], merge_outer);
    #[cfg(not(feature = "parallel"))]
    let b = outer_chunk(g, c.vertices());
    pad_outer(b)
}

/// Sequential variant of [`outer_distribution_matrix`].
pub fn outer_distribution_matrix_seq(g: &Graph, c: &Code) -> Vec<Vec<i64>> {
    pad_outer(outer_chunk(g, c.vertices()))
}

/// Spectral data of a completely regular code: the eigenvalues of its
/// quotient matrix located inside the graph spectrum, and the code standard
/// eigenvectors.
#[derive(Clone, Debug)]
pub struct CodeSpectrum {
    /// Distinct eigenvalues of U, descending; `etas[0] = k`.
    pub etas: Vec<Scalar>,
    /// Natural spectrum indices of the nontrivial eigenvalues, ascending:
    /// `etas[j] = theta_{sstar[j-1]}` for `j >= 1`.
    pub sstar: Vec<usize>,
    /// `stdvecs[j][i] = u_i(eta_j)` per the quotient-matrix recurrence.
    pub stdvecs: Vec<Vec<Scalar>>,
}

impl CodeSpectrum {
    pub fn rho(&self) -> usize {
        self.etas.len() - 1
    }

    /// Natural index of `etas[j]` in the graph spectrum.
    pub fn natural_index(&self, j: usize) -> usize {
        if j == 0 {
            0
        } else {
            self.sstar[j - 1]
        }
    }

    /// Sturm property of the second largest eigenvalue: its standard
    /// eigenvector must be strictly decreasing.
    pub fn sturm_property(&self) -> bool {
        self.rho() == 0
            || self.stdvecs[1]
                .windows(2)
                .all(|w| w[0].cmp_value(&w[1]) == std::cmp::Ordering::Greater)
    }
}

/// Code standard eigenvector for one eigenvalue of U: `u_0 = 1`,
/// `u_1 = (eta - alpha_0)/beta_0`, then
/// `gamma_i u_{i-1} + alpha_i u_i + beta_i u_{i+1} = eta u_i`.
pub fn code_stdvec(u: &QuotientMatrix, eta: &Scalar) -> Vec<Scalar> {
    let rho = u.rho();
    let mut v = Vec::with_capacity(rho + 1);
    v.push(Scalar::one());
    if rho == 0 {
        return v;
    }
    v.push(&(eta - &Scalar::from_int(u.alpha[0])) / &Scalar::from_int(u.beta[0]));
    for i in 1..rho {
        let t = &(&(eta - &Scalar::from_int(u.alpha[i])) * &v[i])
            - &(&Scalar::from_int(u.gamma[i]) * &v[i - 1]);
        v.push(&t / &Scalar::from_int(u.beta[i]));
    }
    v
}

/// Locates the spectrum of U inside the graph spectrum (Lloyd's condition)
/// and builds the code standard eigenvectors.
///
/// # Errors
/// `LloydViolation` when an eigenvalue of U matches no graph eigenvalue:
/// the partition cannot come from a completely regular code in this graph.
/// Usable standalone as a feasibility rejection.
pub fn code_spectrum(u: &QuotientMatrix, spec: &Spectrum, tol: &Tolerances) -> Result<CodeSpectrum> {
    let etas = u.eigenvalues(tol)?;
    let mut sstar = Vec::new();
    for (j, eta) in etas.iter().enumerate() {
        match spec.match_eigenvalue(eta, tol.eigen) {
            Some(idx) if j == 0 => debug_assert_eq!(idx, 0),
            Some(idx) => sstar.push(idx),
            None => {
                return Err(Error::LloydViolation(format!(
                    "eigenvalue {eta} of the quotient matrix"
                )))
            }
        }
    }
    let stdvecs: Vec<Vec<Scalar>> = etas.iter().map(|eta| code_stdvec(u, eta)).collect();
    // Terminal identity of the recurrence; exact for rational spectra.
    let rho = u.rho();
    for (eta, v) in etas.iter().zip(&stdvecs) {
        if rho == 0 {
            break;
        }
        let res = &(&(&Scalar::from_int(u.gamma[rho]) * &v[rho - 1])
            + &(&Scalar::from_int(u.alpha[rho]) * &v[rho]))
            - &(eta * &v[rho]);
        debug_assert!(
            res.is_zero(tol.residual_rel * spec.n_f64()),
            "terminal residual for eta = {eta}"
        );
    }
    Ok(CodeSpectrum {
        etas,
        sstar,
        stdvecs,
    })
}

/// Strength of the code under a Q-polynomial ordering of the graph: one less
/// than the first position whose eigenvalue lies in `Spec*(C)`.
pub fn strength(cs: &CodeSpectrum, ordering: &[usize]) -> usize {
    for (pos, &natural) in ordering.iter().enumerate() {
        if cs.sstar.contains(&natural) {
            return pos;
        }
    }
    // Spec* is empty only for trivial rho = 0 codes.
    ordering.len()
}
