//! Algebraic classification of completely regular codes: eigenbasis
//! expansions, the Q-polynomial and Leonard tests, harmonic and arithmetic
//! predicates, feasibility filters, and parameter reconstruction from
//! expansion data.
//!
//! Everything here operates on the quotient matrix and code spectrum; no
//! vertex-level data is touched.

use crate::code::{Code, CodeSpectrum, DistancePartition, QuotientMatrix};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::spectral::KreinTensor;
use crate::Tolerances;

const MAX_RHO: usize = 8;

/// Coefficients of the entrywise square and cube of `u(eta_1)` in the basis
/// of code standard eigenvectors; indexed like the code spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenExpansion {
    pub lambdas: Vec<Scalar>,
    pub taus: Vec<Scalar>,
}

fn hadamard_power(v: &[Scalar], p: u32) -> Vec<Scalar> {
    v.iter().map(|x| x.pow(p)).collect()
}

/// Expands the entrywise `power`-th power of the standard eigenvector of
/// `eta1` over the basis of all code standard eigenvectors. The coefficients
/// are exact for rational spectra and always sum to 1.
///
/// # Errors
/// `NotAnEigenvalue` when `eta1` is not a nontrivial code eigenvalue.
pub fn expand_in_eigenbasis(
    cs: &CodeSpectrum,
    eta1: &Scalar,
    power: u32,
    tol: &Tolerances,
) -> Result<Vec<Scalar>> {
    let j = cs
        .etas
        .iter()
        .position(|e| e.approx_eq(eta1, tol.eigen))
        .filter(|&j| j > 0)
        .ok_or_else(|| Error::NotAnEigenvalue(format!("{eta1} (must lie in Spec*)")))?;
    let target = hadamard_power(&cs.stdvecs[j], power);
    let coeffs = linalg::expand_in_basis(&cs.stdvecs, &target, tol.eigen)
        .expect("standard eigenvectors of distinct eigenvalues are independent");
    let total = Scalar::sum(coeffs.iter());
    assert!(
        (&total - &Scalar::one()).is_zero(tol.eigen),
        "expansion coefficients sum to {total}, expected 1"
    );
    Ok(coeffs)
}

/// Both expansions at once, with `eta_1` the second largest code eigenvalue
/// (the first nontrivial one in the natural ordering).
pub fn expansions(cs: &CodeSpectrum, tol: &Tolerances) -> Result<EigenExpansion> {
    let eta1 = cs.etas[1].clone();
    Ok(EigenExpansion {
        lambdas: expand_in_eigenbasis(cs, &eta1, 2, tol)?,
        taus: expand_in_eigenbasis(cs, &eta1, 3, tol)?,
    })
}

/// Non-degeneracy of a standard eigenvector: consecutive entries differ, and
/// entries two apart differ.
pub fn is_nondegenerate(stdvec: &[Scalar], eps: f64) -> bool {
    let distinct = |a: &Scalar, b: &Scalar| !(a - b).is_zero(eps);
    stdvec.windows(2).all(|w| distinct(&w[0], &w[1]))
        && stdvec.windows(3).all(|w| distinct(&w[0], &w[2]))
}

/// Result of the Q-polynomial ordering search over `Spec*(C)`.
#[derive(Clone, Debug)]
pub struct QpolyResult {
    /// Valid orderings, each a permutation of the eta indices `1..rho`
    /// giving the eigenvalue placed at positions `1..rho`. Lexicographic
    /// order, so the natural ordering comes first when valid.
    pub orderings: Vec<Vec<usize>>,
}

impl QpolyResult {
    pub fn is_qpoly(&self) -> bool {
        !self.orderings.is_empty()
    }
}

/// Q-polynomial test for a completely regular code.
///
/// An ordering `eta_{i_1}, ..., eta_{i_rho}` is accepted when, for every p,
/// the expansion of the entrywise p-th power of `u(eta_{i_1})` has zero
/// coefficient on every eigenvector placed after position p and a nonzero
/// coefficient at position p itself. The nonzero half makes the spanned
/// filtration climb strictly, which is what lets each power reach the next
/// eigenspace and keeps this test equivalent to the Leonard test.
///
/// The exhaustive search over permutations is cross-checked against a
/// deterministic chain-following pass; disagreement panics.
///
/// # Errors
/// `SearchSpaceTooLarge` when `rho > 8`.
pub fn qpoly_test(cs: &CodeSpectrum, tol: &Tolerances) -> Result<QpolyResult> {
    let rho = cs.rho();
    if rho > MAX_RHO {
        return Err(Error::SearchSpaceTooLarge(rho, MAX_RHO));
    }
    if rho == 0 {
        return Ok(QpolyResult {
            orderings: vec![vec![]],
        });
    }
    // Expansions of the powers of each candidate first eigenvalue:
    // expansion[f][p] = coefficients of u(eta_f)^p over the eigenbasis.
    let mut expansion = vec![Vec::new(); rho + 1];
    let mut max_abs = 0f64;
    for f in 1..=rho {
        for p in 0..=rho as u32 {
            let target = hadamard_power(&cs.stdvecs[f], p);
            let coeffs = linalg::expand_in_basis(&cs.stdvecs, &target, tol.eigen)
                .expect("standard eigenvectors of distinct eigenvalues are independent");
            for c in &coeffs {
                max_abs = max_abs.max(c.to_f64().abs());
            }
            expansion[f].push(coeffs);
        }
    }
    let eps = tol.krein_zero_rel * max_abs.max(1.0);

    let mut orderings = Vec::new();
    let mut order = vec![0usize; rho + 1];
    let mut used = vec![false; rho + 1];
    // The coefficient at a fixed eta index is constrained by exactly one
    // position, so the permutation search can check each placement locally:
    // placing index `cand` at position p needs a nonzero p-th power
    // coefficient there and zero coefficients from all earlier powers.
    fn place(
        pos: usize,
        rho: usize,
        expansion: &[Vec<Vec<Scalar>>],
        eps: f64,
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos > rho {
            out.push(order[1..].to_vec());
            return;
        }
        for cand in 1..=rho {
            if used[cand] {
                continue;
            }
            let first = if pos == 1 { cand } else { order[1] };
            let e = &expansion[first];
            let ok = !e[pos][cand].is_zero(eps)
                && (0..pos).all(|p| e[p][cand].is_zero(eps));
            if ok {
                order[pos] = cand;
                used[cand] = true;
                place(pos + 1, rho, expansion, eps, order, used, out);
                used[cand] = false;
            }
        }
    }
    place(1, rho, &expansion, eps, &mut order, &mut used, &mut orderings);

    // Chain-following pass: with the first eigenvalue fixed, each next index
    // is forced as the unique new member of the support of the next power.
    let mut chained = Vec::new();
    'first: for f in 1..=rho {
        let e = &expansion[f];
        let mut order = vec![0usize, f];
        for p in 2..=rho {
            let mut fresh = None;
            for idx in 1..=rho {
                if order.contains(&idx) || e[p][idx].is_zero(eps) {
                    continue;
                }
                if fresh.is_some() {
                    continue 'first;
                }
                fresh = Some(idx);
            }
            match fresh {
                Some(idx) => order.push(idx),
                None => continue 'first,
            }
        }
        // The chain fixes the order; the full condition set still applies.
        let ok = (0..=rho).all(|p| {
            !e[p][order[p]].is_zero(eps)
                && (p + 1..=rho).all(|l| e[p][order[l]].is_zero(eps))
        });
        if ok {
            chained.push(order[1..].to_vec());
        }
    }
    let mut sorted = orderings.clone();
    sorted.sort();
    chained.sort();
    assert_eq!(
        sorted, chained,
        "exhaustive and chain-following searches disagree"
    );

    Ok(QpolyResult { orderings })
}

/// Result of the Leonard test for one eigenvalue.
#[derive(Clone, Debug)]
pub struct LeonardResult {
    /// Index of theta in the code spectrum.
    pub theta_index: usize,
    /// Orderings of the eta indices `1..rho` under which the coefficient
    /// matrix is irreducible tridiagonal; theta itself is always first.
    pub orderings: Vec<Vec<usize>>,
    /// `matrix[l][j]` = coefficient of `u(eta_l)` in the expansion of
    /// `u(theta)∘u(eta_j)`, in natural index order.
    pub matrix: Vec<Vec<Scalar>>,
}

impl LeonardResult {
    pub fn is_leonard(&self) -> bool {
        !self.orderings.is_empty()
    }

    /// The coefficient matrix permuted into the given ordering (position 0
    /// stays the principal eigenvalue).
    pub fn matrix_in(&self, ordering: &[usize]) -> Vec<Vec<Scalar>> {
        let mut sigma = vec![0usize];
        sigma.extend_from_slice(ordering);
        sigma
            .iter()
            .map(|&l| sigma.iter().map(|&j| self.matrix[l][j].clone()).collect())
            .collect()
    }
}

/// Leonard test with respect to one nontrivial eigenvalue: the matrix of
/// expansion coefficients of `u(theta)∘u(eta_j)` must become irreducible
/// tridiagonal under some reordering that keeps the principal eigenvalue
/// first. As in [`qpoly_test`], an exhaustive permutation search is checked
/// against chain-following.
///
/// # Errors
/// `NotAnEigenvalue` when theta is not in `Spec*`; `SearchSpaceTooLarge`
/// when `rho > 8`.
pub fn leonard_test(cs: &CodeSpectrum, theta: &Scalar, tol: &Tolerances) -> Result<LeonardResult> {
    let rho = cs.rho();
    if rho > MAX_RHO {
        return Err(Error::SearchSpaceTooLarge(rho, MAX_RHO));
    }
    let t = cs
        .etas
        .iter()
        .position(|e| e.approx_eq(theta, tol.eigen))
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::NotAnEigenvalue(format!("{theta} (must lie in Spec*)")))?;

    // Column j: expansion of u(theta) ∘ u(eta_j).
    let mut matrix = vec![vec![Scalar::zero(); rho + 1]; rho + 1];
    let mut max_abs = 0f64;
    for j in 0..=rho {
        let target: Vec<Scalar> = cs.stdvecs[t]
            .iter()
            .zip(&cs.stdvecs[j])
            .map(|(a, b)| a * b)
            .collect();
        let coeffs = linalg::expand_in_basis(&cs.stdvecs, &target, tol.eigen)
            .expect("standard eigenvectors of distinct eigenvalues are independent");
        for (l, c) in coeffs.into_iter().enumerate() {
            max_abs = max_abs.max(c.to_f64().abs());
            matrix[l][j] = c;
        }
    }
    let eps = tol.krein_zero_rel * max_abs.max(1.0);

    let zero = |l: usize, j: usize| matrix[l][j].is_zero(eps);
    let mut orderings = Vec::new();
    let mut sigma = vec![0usize; rho + 1];
    let mut used = vec![false; rho + 1];
    fn place(
        pos: usize,
        rho: usize,
        zero: &dyn Fn(usize, usize) -> bool,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos > rho {
            out.push(sigma[1..].to_vec());
            return;
        }
        for cand in 1..=rho {
            if used[cand] {
                continue;
            }
            // Both entries adjacent to the previous position must be
            // nonzero; everything farther back must vanish, both ways.
            let prev = sigma[pos - 1];
            let ok = !zero(cand, prev)
                && !zero(prev, cand)
                && (0..pos.saturating_sub(1))
                    .all(|q| zero(cand, sigma[q]) && zero(sigma[q], cand));
            if ok {
                sigma[pos] = cand;
                used[cand] = true;
                place(pos + 1, rho, zero, sigma, used, out);
                used[cand] = false;
            }
        }
    }
    if rho > 0 {
        place(1, rho, &zero, &mut sigma, &mut used, &mut orderings);
    }

    // Chain-following: position 1 is forced to theta by the first column
    // (u(theta)∘1 = u(theta)); after that each column's support pins the
    // next index.
    let mut chained = Vec::new();
    'chain: {
        if rho == 0 {
            break 'chain;
        }
        if zero(t, 0) {
            break 'chain;
        }
        let mut order = vec![0usize, t];
        for _ in 2..=rho {
            let cur = *order.last().unwrap();
            let mut fresh = None;
            for idx in 1..=rho {
                if order.contains(&idx) || (zero(idx, cur) && zero(cur, idx)) {
                    continue;
                }
                if fresh.is_some() {
                    break 'chain;
                }
                fresh = Some(idx);
            }
            match fresh {
                Some(idx) => order.push(idx),
                None => break 'chain,
            }
        }
        let full_ok = (0..=rho).all(|p| {
            (0..=rho).all(|q| {
                let (l, j) = (order[p], order[q]);
                match p.abs_diff(q) {
                    0 => true,
                    1 => !zero(l, j),
                    _ => zero(l, j),
                }
            })
        });
        if full_ok {
            chained.push(order[1..].to_vec());
        }
    }
    let mut sorted = orderings.clone();
    sorted.sort();
    assert_eq!(
        sorted, chained,
        "exhaustive and chain-following Leonard searches disagree"
    );

    Ok(LeonardResult {
        theta_index: t,
        orderings,
        matrix,
    })
}

/// Harmonic test: the positions of `Spec*(C)` inside the given Q-polynomial
/// ordering of the graph must be `t, 2t, ..., rho*t`; returns that `t`.
pub fn harmonic_test(cs: &CodeSpectrum, ordering: &[usize]) -> Option<usize> {
    let rho = cs.rho();
    if rho == 0 {
        return None;
    }
    let mut positions: Vec<usize> = cs
        .sstar
        .iter()
        .map(|idx| ordering.iter().position(|o| o == idx).map(|p| p + 1))
        .collect::<Option<_>>()?;
    positions.sort_unstable();
    let t = positions[0];
    positions
        .iter()
        .enumerate()
        .all(|(j, &p)| p == (j + 1) * t)
        .then_some(t)
}

/// Arithmetic test: the code eigenvalues must form a descending arithmetic
/// progression `k, k-t, k-2t, ...`; returns the common difference.
pub fn arithmetic_test(cs: &CodeSpectrum, tol: &Tolerances) -> Option<Scalar> {
    if cs.rho() == 0 {
        return None;
    }
    let t = &cs.etas[0] - &cs.etas[1];
    cs.etas
        .windows(2)
        .all(|w| (&(&w[0] - &w[1]) - &t).is_zero(tol.eigen))
        .then_some(t)
}

/// Gap condition on `S*(C)` in the natural descending ordering: with 0
/// prepended, consecutive gaps may not exceed the first index.
pub fn gap_filter(sstar: &[usize]) -> bool {
    if sstar.is_empty() {
        return true;
    }
    let i1 = sstar[0];
    let mut prev = 0;
    for &i in sstar {
        if i - prev > i1 {
            return false;
        }
        prev = i;
    }
    true
}

/// Parity condition on `S*(C)` in an antipodal 2-cover: the antipodal image
/// of the code is either the code itself (then every index is even) or the
/// outermost cell (then index parities alternate). `partner` maps a codeword
/// to its unique diameter-distant vertex.
///
/// # Errors
/// `LemmaViolation` when the image is neither, or a partner is missing;
/// either contradicts the 2-cover structure.
pub fn antipodal_parity_filter(
    sstar: &[usize],
    partner: impl Fn(u32) -> Option<u32>,
    c: &Code,
    dp: &DistancePartition,
) -> Result<bool> {
    let rho = dp.rho();
    let mut in_code = 0usize;
    let mut in_last = 0usize;
    for &x in c.vertices() {
        let p = partner(x).ok_or_else(|| {
            Error::LemmaViolation(format!("vertex {x} has no unique antipode"))
        })?;
        if c.contains(p) {
            in_code += 1;
        }
        if dp.cell_of[p as usize] as usize == rho {
            in_last += 1;
        }
    }
    if in_code == c.len() {
        // pi(C) = C: every index of S* must be even.
        Ok(sstar.iter().all(|i| i % 2 == 0))
    } else if in_last == c.len() && c.len() == dp.cells[rho].len() {
        // pi(C) = C_rho: index j of S* has parity j.
        Ok(sstar.iter().enumerate().all(|(j, i)| i % 2 == (j + 1) % 2))
    } else {
        Err(Error::LemmaViolation(
            "antipodal image of the code is neither C nor the outermost cell".into(),
        ))
    }
}

/// Krein support condition implied by the expansions: a nonzero lambda_j
/// forces `q_{i1,i1}^{ij} != 0`, and a nonzero tau_j forces a two-step
/// connection through some index of the code. `indices` is `S*(C)` in the
/// relevant ordering with 0 prepended.
pub fn krein_support_check(
    exp: &EigenExpansion,
    kt: &KreinTensor,
    indices: &[usize],
) -> bool {
    let i1 = indices[1];
    for (j, l) in exp.lambdas.iter().enumerate() {
        if !l.is_zero(kt.zero_tolerance) && kt.is_zero_at(i1, i1, indices[j]) {
            return false;
        }
    }
    for (j, t) in exp.taus.iter().enumerate() {
        if t.is_zero(kt.zero_tolerance) {
            continue;
        }
        let reachable = indices.iter().any(|&il| {
            !kt.is_zero_at(i1, i1, il) && !kt.is_zero_at(il, i1, indices[j])
        });
        if !reachable {
            return false;
        }
    }
    true
}

/// Reconstruction engine shared by [`reconstruct_parameters`] and
/// [`reconstruct_from_qpoly_data`].
///
/// `etas[0]` must be the valency, `etas[1]` the distinguished eigenvalue the
/// expansions refer to. Runs the induction row by row: each step either
/// produces the next `(gamma, alpha, beta)` row or hits the terminal 0/0 in
/// the `u_{m+2}` update, in which case the last row is solved under the
/// hypothesis `beta = 0` and every remaining identity is verified.
fn reconstruct_engine(
    etas: &[Scalar],
    lambdas: &[Scalar],
    taus: &[Scalar],
    rho_cap: usize,
    tol: &Tolerances,
) -> Result<QuotientMatrix> {
    let k = &etas[0];
    let kf = k.to_f64().abs().max(1.0);
    let eps = tol.eigen * kf;
    let m = etas.len();
    if lambdas.len() != m || taus.len() != m {
        return Err(Error::InvalidParameters(
            "expansion coefficients must align with the eigenvalue list".into(),
        ));
    }
    for i in 0..m {
        for j in i + 1..m {
            if (&etas[i] - &etas[j]).is_zero(eps) {
                return Err(Error::InconsistentData(format!(
                    "eigenvalues {} and {} coincide",
                    etas[i], etas[j]
                )));
            }
        }
    }
    for (name, v) in [("lambda", lambdas), ("tau", taus)] {
        let s = Scalar::sum(v.iter());
        if !(&s - &Scalar::one()).is_zero(eps) {
            return Err(Error::InconsistentData(format!(
                "{name} coefficients sum to {s}, expected 1"
            )));
        }
    }

    let eta1 = &etas[1];
    // Step 0: from alpha_0 + beta_0 = k, the affine form of u_1, and the
    // square expansion at cell 1, u_1(eta_1) = (S - eta_1)/(eta_1 - k) with
    // S the lambda-weighted eigenvalue sum.
    let s: Scalar = Scalar::sum(
        lambdas
            .iter()
            .zip(etas)
            .map(|(l, e)| l * e)
            .collect::<Vec<_>>()
            .iter(),
    );
    let u1_eta1 = &(&s - eta1) / &(eta1 - k);
    if (&u1_eta1 - &Scalar::one()).is_zero(eps) {
        return Err(Error::DegenerateEigenvector(0));
    }
    let beta0 = &(eta1 - k) / &(&u1_eta1 - &Scalar::one());
    let alpha0 = k - &beta0;

    // u[i] collects u_j(eta_i) for the rows built so far.
    let mut u: Vec<Vec<Scalar>> = etas
        .iter()
        .map(|e| vec![Scalar::one(), &(e - &alpha0) / &beta0])
        .collect();
    let mut gamma = vec![Scalar::zero()];
    let mut alpha = vec![alpha0];
    let mut beta = vec![beta0];

    // Expansion identities at one cell: the square and cube of u_j(eta_1)
    // must match the lambda and tau combinations.
    let check_cell = |u: &[Vec<Scalar>], j: usize| -> Result<()> {
        for (name, coeffs, p) in [("lambda", lambdas, 2u32), ("tau", taus, 3)] {
            let lhs = u[1][j].pow(p);
            let rhs = Scalar::sum(
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &u[i][j])
                    .collect::<Vec<_>>()
                    .iter(),
            );
            if !(&lhs - &rhs).is_zero(tol.residual_rel * kf) {
                return Err(Error::InconsistentData(format!(
                    "{name} expansion identity fails at cell {j}"
                )));
            }
        }
        Ok(())
    };
    check_cell(&u, 1)?;

    let bound = 2 * rho_cap;
    let mut terminated = false;
    for step in 0..=bound {
        if step == bound {
            return Err(Error::NonTermination(bound));
        }
        let row = u[0].len() - 1; // highest cell filled so far, = m+1
        let um = u[1][row - 1].clone();
        let um1 = u[1][row].clone();
        let r_lambda = Scalar::sum(
            (0..m)
                .map(|i| &(&lambdas[i] * &etas[i]) * &u[i][row])
                .collect::<Vec<_>>()
                .iter(),
        );
        let r_tau = Scalar::sum(
            (0..m)
                .map(|i| &(&taus[i] * &etas[i]) * &u[i][row])
                .collect::<Vec<_>>()
                .iter(),
        );
        let denom = &(&r_lambda + &(&(k * &um1) * &um))
            - &(&(eta1 * &um1) * &(&um1 + &um));
        if denom.is_zero(eps) {
            // Terminal row: beta vanishes, gamma and alpha come from the row
            // sum and the recurrence at eta_1.
            let d = &um - &um1;
            if d.is_zero(eps) {
                return Err(Error::DegenerateEigenvector(row));
            }
            let g = &(&um1 * &(eta1 - k)) / &d;
            let a = k - &g;
            for i in 0..m {
                let res = &(&(&g * &u[i][row - 1]) + &(&a * &u[i][row]))
                    - &(&etas[i] * &u[i][row]);
                if !res.is_zero(tol.residual_rel * kf) {
                    return Err(Error::InconsistentData(format!(
                        "terminal row fails the recurrence at eigenvalue {}",
                        etas[i]
                    )));
                }
            }
            gamma.push(g);
            alpha.push(a);
            beta.push(Scalar::zero());
            terminated = true;
            break;
        }
        let num = &(&r_tau - &(&r_lambda * &(&um1 + &um)))
            + &(&(&(eta1 * &um1) * &um1) * &um);
        let um2 = &num / &denom;
        let d_gamma = &(&um - &um2) * &(&um - &um1);
        let d_alpha = &(&um1 - &um2) * &(&um1 - &um);
        let d_beta = &(&um2 - &um1) * &(&um2 - &um);
        if d_gamma.is_zero(eps) || d_alpha.is_zero(eps) || d_beta.is_zero(eps) {
            return Err(Error::DegenerateEigenvector(row));
        }
        let g = &(&(&r_lambda + &(&(k * &um2) * &um1))
            - &(&(eta1 * &um1) * &(&um2 + &um1)))
            / &d_gamma;
        let a = &(&(&r_lambda + &(&(k * &um2) * &um))
            - &(&(eta1 * &um1) * &(&um2 + &um)))
            / &d_alpha;
        let b = &denom / &d_beta;
        let rowsum = &(&g + &a) + &b;
        if !(&rowsum - k).is_zero(tol.residual_rel * kf) {
            return Err(Error::InconsistentData(format!(
                "row {} sums to {rowsum}, expected {k}",
                row
            )));
        }
        gamma.push(g.clone());
        alpha.push(a.clone());
        beta.push(b.clone());
        // Extend every eigenvector by one cell and recheck the expansions.
        for i in 0..m {
            let next = &(&(&(&etas[i] - &a) * &u[i][row]) - &(&g * &u[i][row - 1])) / &b;
            u[i].push(next);
        }
        check_cell(&u, row + 1)?;
    }
    debug_assert!(terminated);

    let to_int = |v: &Scalar| -> Result<i64> {
        match v {
            Scalar::Exact(r) => {
                if r.is_integer() {
                    use num_traits::ToPrimitive;
                    r.to_integer().to_i64().ok_or_else(|| {
                        Error::InconsistentData(format!("entry {v} out of range"))
                    })
                } else {
                    Err(Error::InconsistentData(format!(
                        "quotient matrix entry {v} is not an integer"
                    )))
                }
            }
            Scalar::Approx(x) => {
                if (x - x.round()).abs() <= 1e-6 {
                    Ok(x.round() as i64)
                } else {
                    Err(Error::InconsistentData(format!(
                        "quotient matrix entry {v} is not an integer"
                    )))
                }
            }
        }
    };
    let gamma = gamma.iter().map(&to_int).collect::<Result<Vec<_>>>()?;
    let alpha = alpha.iter().map(&to_int).collect::<Result<Vec<_>>>()?;
    let beta = beta.iter().map(&to_int).collect::<Result<Vec<_>>>()?;
    QuotientMatrix::new(gamma, alpha, beta)
        .map_err(|e| Error::InconsistentData(format!("reconstructed matrix invalid: {e}")))
}

/// Reconstructs the quotient matrix of a completely regular code from its
/// valency, full eigenvalue list (valency first, the distinguished
/// eigenvalue second), and both eigenbasis expansions.
///
/// # Errors
/// `DegenerateEigenvector` when an induction denominator vanishes,
/// `NonTermination` past twice the expected covering radius,
/// `InconsistentData` when a residual or the final validation fails.
pub fn reconstruct_parameters(
    k: i64,
    etas: &[Scalar],
    exp: &EigenExpansion,
    tol: &Tolerances,
) -> Result<QuotientMatrix> {
    if etas.len() < 2 {
        return Err(Error::InvalidParameters(
            "need at least two eigenvalues".into(),
        ));
    }
    if !etas[0].approx_eq(&Scalar::from_int(k), tol.eigen) {
        return Err(Error::InvalidParameters(format!(
            "leading eigenvalue {} must equal the valency {k}",
            etas[0]
        )));
    }
    let rho = etas.len() - 1;
    let u = reconstruct_engine(etas, &exp.lambdas, &exp.taus, rho, tol)?;
    if u.rho() != rho {
        return Err(Error::InconsistentData(format!(
            "reconstruction terminated at covering radius {}, expected {rho}",
            u.rho()
        )));
    }
    // The spectrum of the result must reproduce the input list.
    let spec = u.eigenvalues(tol)?;
    for e in etas {
        if !spec.iter().any(|s| s.approx_eq(e, tol.eigen)) {
            return Err(Error::InconsistentData(format!(
                "reconstructed matrix misses eigenvalue {e}"
            )));
        }
    }
    Ok(u)
}

/// Reconstructs a Q-polynomial code's quotient matrix from the fingerprint
/// `(k, eta_1, eta_2, lambda_0, lambda_1, tau_1, tau_2)`.
///
/// The remaining data is forced: `lambda_2 = 1 - lambda_0 - lambda_1`,
/// `tau_0 = lambda_0 lambda_1`, `tau_3 = 1 - tau_0 - tau_1 - tau_2`, and
/// `eta_3` (when `tau_3 != 0`) solves the cube expansion at cell 1. The
/// covering radius is discovered from the terminal row, and may exceed 3
/// only through the padded zero coefficients.
pub fn reconstruct_from_qpoly_data(
    k: i64,
    eta1: &Scalar,
    eta2: &Scalar,
    l0: &Scalar,
    l1: &Scalar,
    t1: &Scalar,
    t2: &Scalar,
    tol: &Tolerances,
) -> Result<QuotientMatrix> {
    let kk = Scalar::from_int(k);
    let eps = tol.eigen * (k.unsigned_abs() as f64).max(1.0);
    let l2 = &(&Scalar::one() - l0) - l1;
    let t0 = l0 * l1;
    let t3 = &(&(&Scalar::one() - &t0) - t1) - t2;

    // Step-0 scalars, needed to express u_1 as an affine map of eta.
    let s = &(&(l0 * &kk) + &(l1 * eta1)) + &(&l2 * eta2);
    let u1_eta1 = &(&s - eta1) / &(eta1 - &kk);
    if (&u1_eta1 - &Scalar::one()).is_zero(eps) {
        return Err(Error::DegenerateEigenvector(0));
    }
    let beta0 = &(eta1 - &kk) / &(&u1_eta1 - &Scalar::one());
    let alpha0 = &kk - &beta0;
    let u1 = |eta: &Scalar| &(eta - &alpha0) / &beta0;

    let mut etas = vec![kk.clone(), eta1.clone()];
    let mut lambdas = vec![l0.clone(), l1.clone()];
    let mut taus = vec![t0.clone(), t1.clone()];
    if !l2.is_zero(eps) || !t2.is_zero(eps) {
        etas.push(eta2.clone());
        lambdas.push(l2);
        taus.push(t2.clone());
    }
    if !t3.is_zero(eps) {
        // Cube expansion at cell 1 is linear in u_1(eta_3).
        let partial = &(&t0 + &(t1 * &u1_eta1)) + &(t2 * &u1(eta2));
        let u1_eta3 = &(&u1_eta1.pow(3) - &partial) / &t3;
        let eta3 = &alpha0 + &(&beta0 * &u1_eta3);
        if etas.iter().any(|e| (&eta3 - e).is_zero(eps)) {
            return Err(Error::InconsistentData(format!(
                "derived fourth eigenvalue {eta3} collides with the given ones"
            )));
        }
        etas.push(eta3);
        lambdas.push(Scalar::zero());
        taus.push(t3);
    }

    let u = reconstruct_engine(&etas, &lambdas, &taus, 64, tol)?;
    // All participating eigenvalues must survive into the result.
    let spec = u.eigenvalues(tol)?;
    for e in &etas {
        if !spec.iter().any(|s| s.approx_eq(e, tol.eigen)) {
            return Err(Error::InconsistentData(format!(
                "reconstructed matrix misses eigenvalue {e}"
            )));
        }
    }
    Ok(u)
}
