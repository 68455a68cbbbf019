//! Parameter-level machinery for distance-regular graphs.
//!
//! Everything in this module works from an intersection array alone, with no
//! vertex-level data: the tridiagonal matrix, its eigenvalues, standard
//! eigenvectors, valencies, multiplicities, Krein parameters, and the search
//! for Q-polynomial orderings.

use crate::error::{Error, Result};
use crate::poly;
use crate::scalar::{rat_int, Rat, Scalar};
use crate::Tolerances;
use num_traits::{One, ToPrimitive};
use std::fmt;

/// Intersection array `{b_0,...,b_{D-1}; c_1,...,c_D}` of a distance-regular
/// graph.
///
/// Stores the two defining sequences; `k = b_0` and `a_i = k - b_i - c_i` are
/// derived. Construction enforces `c_1 = 1`, positivity, `a_i >= 0`, and the
/// standing assumptions `k >= 2`, `D >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidParameters(format!(
                "b has {} entries but c has {}",
                b.len(),
                c.len()
            )));
        }
        if b.len() < 2 {
            return Err(Error::InvalidParameters(
                "diameter must be at least 2".into(),
            ));
        }
        if b[0] < 2 {
            return Err(Error::InvalidParameters("valency must be at least 2".into()));
        }
        if c[0] != 1 {
            return Err(Error::InvalidParameters("c_1 must equal 1".into()));
        }
        if b.iter().any(|&x| x <= 0) || c.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidParameters(
                "all b_i and c_i must be positive".into(),
            ));
        }
        let ia = IntersectionArray { b, c };
        for i in 0..=ia.diameter() {
            if ia.a(i) < 0 {
                return Err(Error::InvalidParameters(format!(
                    "a_{} = {} is negative",
                    i,
                    ia.a(i)
                )));
            }
        }
        Ok(ia)
    }

    /// Parses the textual form `{b0,b1,...;c1,c2,...}`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("intersection array must be braced: {s}")))?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' separator: {s}")))?;
        let nums = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(|x| {
                    x.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad integer '{x}' in {s}")))
                })
                .collect()
        };
        IntersectionArray::new(nums(bs)?, nums(cs)?)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> i64 {
        self.b[0]
    }

    /// `b_i`, with the convention `b_D = 0`.
    pub fn b(&self, i: usize) -> i64 {
        if i < self.b.len() {
            self.b[i]
        } else {
            0
        }
    }

    /// `c_i`, with the convention `c_0 = 0`.
    pub fn c(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> i64 {
        self.k() - self.b(i) - self.c(i)
    }

    /// The matrix L with subdiagonal `c_i`, diagonal `a_i`, superdiagonal
    /// `b_i`; its eigenvalues are the distinct eigenvalues of the graph.
    pub fn tridiagonal_matrix(&self) -> Vec<Vec<i64>> {
        let d = self.diameter();
        let mut m = vec![vec![0i64; d + 1]; d + 1];
        for i in 0..=d {
            m[i][i] = self.a(i);
            if i > 0 {
                m[i][i - 1] = self.c(i);
            }
            if i < d {
                m[i][i + 1] = self.b(i);
            }
        }
        m
    }

    /// Distinct eigenvalues, strictly descending, `theta_0 = k`.
    pub fn eigenvalues(&self, tol: &Tolerances) -> Result<Vec<Scalar>> {
        let d = self.diameter();
        let sub: Vec<i64> = (1..=d).map(|i| self.c(i)).collect();
        let diag: Vec<i64> = (0..=d).map(|i| self.a(i)).collect();
        let sup: Vec<i64> = (0..d).map(|i| self.b(i)).collect();
        let eigs = poly::tridiagonal_eigenvalues(&sub, &diag, &sup, self.k() + 1, tol.bisect_width)?;
        debug_assert_eq!(eigs[0], Scalar::from_int(self.k()));
        Ok(eigs)
    }

    /// Valencies `k_i = k_{i-1} b_{i-1} / c_i`, exact; `k_0 = 1`.
    pub fn valencies(&self) -> Vec<Rat> {
        let mut ks = vec![Rat::one()];
        for i in 1..=self.diameter() {
            let prev = ks[i - 1].clone();
            ks.push(prev * rat_int(self.b(i - 1)) / rat_int(self.c(i)));
        }
        ks
    }

    /// Vertex count implied by the array, `n = sum k_i`.
    pub fn vertex_count(&self) -> Rat {
        self.valencies().iter().sum()
    }

    pub fn spectrum(&self, tol: &Tolerances) -> Result<Spectrum> {
        Spectrum::of(self, tol)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Runs the three-term recurrence `u_0 = 1`, `u_1 = theta/k`,
/// `c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i` without any eigenvalue
/// check; also returns the terminal residual `c_D u_{D-1} + a_D u_D - theta u_D`.
fn stdvec_recurrence(ia: &IntersectionArray, theta: &Scalar) -> (Vec<Scalar>, Scalar) {
    let d = ia.diameter();
    let mut u = Vec::with_capacity(d + 1);
    u.push(Scalar::one());
    u.push(theta / &Scalar::from_int(ia.k()));
    for i in 1..d {
        let t = &(&(theta - &Scalar::from_int(ia.a(i))) * &u[i])
            - &(&Scalar::from_int(ia.c(i)) * &u[i - 1]);
        u.push(&t / &Scalar::from_int(ia.b(i)));
    }
    let residual = &(&(&Scalar::from_int(ia.c(d)) * &u[d - 1])
        + &(&Scalar::from_int(ia.a(d)) * &u[d]))
        - &(theta * &u[d]);
    (u, residual)
}

/// Standard eigenvector `(u_0(theta), ..., u_D(theta))` for an eigenvalue of
/// the graph.
///
/// The scalar is matched against the spectrum within `tol.eigen` and replaced
/// by the matched (exact where possible) eigenvalue before the recurrence
/// runs, so rational spectra give exact eigenvectors.
///
/// # Errors
/// `NotAnEigenvalue` if no eigenvalue matches, or if the terminal identity
/// `c_D u_{D-1} + a_D u_D = theta u_D` fails the residual tolerance.
pub fn standard_eigenvector(
    ia: &IntersectionArray,
    theta: &Scalar,
    tol: &Tolerances,
) -> Result<Vec<Scalar>> {
    let eigs = ia.eigenvalues(tol)?;
    let matched = eigs
        .iter()
        .find(|e| e.approx_eq(theta, tol.eigen))
        .ok_or_else(|| Error::NotAnEigenvalue(theta.to_string()))?;
    let (u, residual) = stdvec_recurrence(ia, matched);
    let n = ia.vertex_count().to_f64().unwrap_or(f64::INFINITY);
    if !residual.is_zero(tol.residual_rel * n) {
        return Err(Error::NotAnEigenvalue(theta.to_string()));
    }
    Ok(u)
}

/// Full spectral data of an intersection array: eigenvalues, valencies,
/// multiplicities, and the table of standard eigenvectors.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Distinct eigenvalues, strictly descending; `thetas[0] = k`.
    pub thetas: Vec<Scalar>,
    /// `k_i`, exact.
    pub valencies: Vec<Rat>,
    /// `m_j = n / sum_i k_i u_i(theta_j)^2`.
    pub multiplicities: Vec<Scalar>,
    /// True when every multiplicity is within 1e-6 of an integer.
    pub integral_multiplicities: bool,
    /// `stdvecs[j][i] = u_i(theta_j)`.
    pub stdvecs: Vec<Vec<Scalar>>,
    /// Vertex count implied by the array.
    pub n: Rat,
}

impl Spectrum {
    fn of(ia: &IntersectionArray, tol: &Tolerances) -> Result<Spectrum> {
        let thetas = ia.eigenvalues(tol)?;
        let valencies = ia.valencies();
        let n = ia.vertex_count();
        let n_scalar = Scalar::from_rat(n.clone());
        let mut stdvecs = Vec::with_capacity(thetas.len());
        let mut mults = Vec::with_capacity(thetas.len());
        for theta in &thetas {
            let (u, _) = stdvec_recurrence(ia, theta);
            let norm = Scalar::sum(
                u.iter()
                    .zip(&valencies)
                    .map(|(ui, ki)| &(ui * ui) * &Scalar::from_rat(ki.clone()))
                    .collect::<Vec<_>>()
                    .iter(),
            );
            mults.push(&n_scalar / &norm);
            stdvecs.push(u);
        }
        let integral = mults.iter().all(|m| match m {
            Scalar::Exact(r) => r.is_integer(),
            Scalar::Approx(v) => (v - v.round()).abs() < 1e-6,
        });
        Ok(Spectrum {
            thetas,
            valencies,
            multiplicities: mults,
            integral_multiplicities: integral,
            stdvecs,
            n,
        })
    }

    pub fn diameter(&self) -> usize {
        self.thetas.len() - 1
    }

    pub fn k(&self) -> i64 {
        self.thetas[0].to_f64() as i64
    }

    pub fn n_f64(&self) -> f64 {
        self.n.to_f64().unwrap_or(f64::INFINITY)
    }

    /// Index of the eigenvalue matching `v` within `tol`, if any.
    pub fn match_eigenvalue(&self, v: &Scalar, tol: f64) -> Option<usize> {
        self.thetas.iter().position(|t| t.approx_eq(v, tol))
    }

    /// Largest off-diagonal weighted inner product
    /// `|sum_i k_i u_i(theta_j) u_i(theta_j')|`, which should vanish.
    pub fn orthogonality_residual(&self) -> f64 {
        let d = self.diameter();
        let mut worst = 0f64;
        for j in 0..=d {
            for jp in (j + 1)..=d {
                let ip = Scalar::sum(
                    (0..=d)
                        .map(|i| {
                            &(&self.stdvecs[j][i] * &self.stdvecs[jp][i])
                                * &Scalar::from_rat(self.valencies[i].clone())
                        })
                        .collect::<Vec<_>>()
                        .iter(),
                );
                worst = worst.max(ip.to_f64().abs());
            }
        }
        worst
    }

    /// Krein parameters
    /// `q_ij^l = (m_i m_j / n) sum_h k_h u_h(theta_i) u_h(theta_j) u_h(theta_l)`.
    pub fn krein_parameters(&self, tol: &Tolerances) -> KreinTensor {
        let d = self.diameter();
        let n_scalar = Scalar::from_rat(self.n.clone());
        let kh: Vec<Scalar> = self
            .valencies
            .iter()
            .map(|k| Scalar::from_rat(k.clone()))
            .collect();
        let mut q = vec![vec![vec![Scalar::zero(); d + 1]; d + 1]; d + 1];
        for i in 0..=d {
            for j in i..=d {
                let scale = &(&self.multiplicities[i] * &self.multiplicities[j]) / &n_scalar;
                for l in 0..=d {
                    let s = Scalar::sum(
                        (0..=d)
                            .map(|h| {
                                &(&(&kh[h] * &self.stdvecs[i][h]) * &self.stdvecs[j][h])
                                    * &self.stdvecs[l][h]
                            })
                            .collect::<Vec<_>>()
                            .iter(),
                    );
                    let v = &scale * &s;
                    q[i][j][l] = v.clone();
                    q[j][i][l] = v;
                }
            }
        }
        let max_abs = q
            .iter()
            .flatten()
            .flatten()
            .map(|v| v.to_f64().abs())
            .fold(0f64, f64::max);
        KreinTensor {
            q,
            zero_tolerance: tol.krein_zero_rel * max_abs.max(1.0),
        }
    }

    /// Largest residual of the defining relation
    /// `m_i m_j u_h(theta_i) u_h(theta_j) = sum_l q_ij^l m_l u_h(theta_l)`.
    pub fn krein_residual(&self, kt: &KreinTensor) -> f64 {
        let d = self.diameter();
        let mut worst = 0f64;
        for h in 0..=d {
            for i in 0..=d {
                for j in 0..=d {
                    let lhs = &(&(&self.multiplicities[i] * &self.multiplicities[j])
                        * &self.stdvecs[i][h])
                        * &self.stdvecs[j][h];
                    let rhs = Scalar::sum(
                        (0..=d)
                            .map(|l| {
                                &(&kt.q[i][j][l] * &self.multiplicities[l]) * &self.stdvecs[l][h]
                            })
                            .collect::<Vec<_>>()
                            .iter(),
                    );
                    worst = worst.max((&lhs - &rhs).to_f64().abs());
                }
            }
        }
        worst
    }
}

/// The `(D+1)^3` tensor of Krein parameters together with the zero threshold
/// used for its approximate entries.
#[derive(Clone, Debug)]
pub struct KreinTensor {
    /// `q[i][j][l]` indexed by natural (descending-eigenvalue) positions.
    pub q: Vec<Vec<Vec<Scalar>>>,
    pub zero_tolerance: f64,
}

impl KreinTensor {
    pub fn dim(&self) -> usize {
        self.q.len()
    }

    /// Zero test honoring the scalar kind: exact entries exactly, approximate
    /// entries against `zero_tolerance`.
    pub fn is_zero_at(&self, i: usize, j: usize, l: usize) -> bool {
        self.q[i][j][l].is_zero(self.zero_tolerance)
    }

    /// Checks the two Q-polynomial conditions for the ordering that puts the
    /// eigenvalue with natural index `order[p]` at position `p`.
    fn ordering_valid(&self, order: &[usize]) -> bool {
        let d = order.len() - 1;
        for i in 0..=d {
            for j in i..=d {
                for l in 0..=d {
                    if !self.position_ok(order, i, j, l) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Condition at one position triple; `i <= j` assumed by symmetry.
    fn position_ok(&self, order: &[usize], i: usize, j: usize, l: usize) -> bool {
        let d = order.len() - 1;
        let zero = self.is_zero_at(order[i], order[j], order[l]);
        if l < j - i || l > i + j {
            zero
        } else if l == j - i || (l == i + j && i + j <= d) {
            !zero
        } else {
            true
        }
    }

    /// All Q-polynomial orderings of `E_1..E_D` (position 0 always the
    /// principal idempotent), each reported as the natural indices placed at
    /// positions `1..D`. The natural ordering `[1,2,...,D]`, when valid, is
    /// first. Empty means the graph is not Q-polynomial.
    ///
    /// # Errors
    /// `SearchSpaceTooLarge` when `D > 9`; use
    /// [`natural_ordering_valid`](Self::natural_ordering_valid) for larger
    /// diameters.
    pub fn qpoly_orderings(&self) -> Result<Vec<Vec<usize>>> {
        let d = self.dim() - 1;
        const MAX_D: usize = 9;
        if d > MAX_D {
            return Err(Error::SearchSpaceTooLarge(d, MAX_D));
        }
        let mut order = vec![0usize; d + 1];
        let mut used = vec![false; d + 1];
        used[0] = true;
        let mut found = Vec::new();
        self.search(&mut order, &mut used, 1, &mut found);
        Ok(found)
    }

    fn search(
        &self,
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        pos: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        let d = order.len() - 1;
        if pos > d {
            found.push(order[1..].to_vec());
            return;
        }
        // Candidates tried in ascending natural index, so the identity
        // permutation (the natural ordering) surfaces first.
        for cand in 1..=d {
            if used[cand] {
                continue;
            }
            order[pos] = cand;
            // Check every condition whose largest position is `pos`; earlier
            // triples were verified when their positions were placed.
            let ok = (0..=pos).all(|i| {
                (i..=pos).all(|j| {
                    (0..=pos).all(|l| {
                        if i.max(j).max(l) < pos {
                            true
                        } else {
                            self.position_ok(order, i, j, l)
                        }
                    })
                })
            });
            if ok {
                used[cand] = true;
                self.search(order, used, pos + 1, found);
                used[cand] = false;
            }
        }
    }

    /// Checks only the natural descending ordering; no diameter bound.
    pub fn natural_ordering_valid(&self) -> bool {
        let order: Vec<usize> = (0..self.dim()).collect();
        self.ordering_valid(&order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn triangular_t5() -> IntersectionArray {
        IntersectionArray::parse("{6,2;1,4}").unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let ia = triangular_t5();
        assert_eq!(ia.to_string(), "{6,2;1,4}");
        assert_eq!(IntersectionArray::parse(" { 6 , 2 ; 1 , 4 } ").unwrap(), ia);
        assert_eq!(ia.diameter(), 2);
        assert_eq!(ia.k(), 6);
        assert_eq!(ia.a(1), 3);
        assert_eq!(ia.a(2), 2);
    }

    #[test]
    fn construction_rejects_bad_arrays() {
        assert!(IntersectionArray::new(vec![2], vec![1]).is_err());
        assert!(IntersectionArray::new(vec![2, 1], vec![2, 2]).is_err());
        assert!(IntersectionArray::new(vec![3, 3], vec![1, 1]).is_err());
        assert!(IntersectionArray::new(vec![1, 1], vec![1, 1]).is_err());
        assert!(IntersectionArray::parse("{6,2;1}").is_err());
        assert!(IntersectionArray::parse("6,2;1,4").is_err());
    }

    #[test]
    fn tridiagonal_matrix_of_quadrangle() {
        let ia = IntersectionArray::parse("{2,1;1,2}").unwrap();
        assert_eq!(
            ia.tridiagonal_matrix(),
            vec![vec![0, 2, 0], vec![1, 0, 1], vec![0, 2, 0]]
        );
    }

    #[test]
    fn triangular_graph_spectrum() {
        let s = triangular_t5().spectrum(&tol()).unwrap();
        let want: Vec<Scalar> = [6, 1, -2].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(s.thetas, want);
        assert_eq!(s.valencies, vec![rat(1, 1), rat(6, 1), rat(3, 1)]);
        let mults: Vec<Scalar> = [1, 4, 5].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(s.multiplicities, mults);
        assert!(s.integral_multiplicities);
        assert_eq!(s.n, rat(10, 1));
        assert_eq!(
            s.stdvecs[1],
            vec![
                Scalar::one(),
                Scalar::from_rat(rat(1, 6)),
                Scalar::from_rat(rat(-2, 3))
            ]
        );
        assert_eq!(
            s.stdvecs[2],
            vec![
                Scalar::one(),
                Scalar::from_rat(rat(-1, 3)),
                Scalar::from_rat(rat(1, 3))
            ]
        );
        assert_eq!(s.orthogonality_residual(), 0.0);
    }

    #[test]
    fn standard_eigenvector_checks_membership() {
        let ia = IntersectionArray::parse("{2,1;1,2}").unwrap();
        let u = standard_eigenvector(&ia, &Scalar::zero(), &tol()).unwrap();
        assert_eq!(
            u,
            vec![Scalar::one(), Scalar::zero(), Scalar::from_int(-1)]
        );
        let ones = standard_eigenvector(&ia, &Scalar::from_int(2), &tol()).unwrap();
        assert!(ones.iter().all(|v| *v == Scalar::one()));
        // -4 is not an eigenvalue of the triangular graph T(5).
        let err = standard_eigenvector(&triangular_t5(), &Scalar::from_int(-4), &tol());
        assert!(matches!(err, Err(Error::NotAnEigenvalue(_))));
    }

    #[test]
    fn seven_cube_closed_forms() {
        let b: Vec<i64> = (0..7).map(|i| 7 - i).collect();
        let c: Vec<i64> = (1..=7).collect();
        let s = IntersectionArray::new(b, c).unwrap().spectrum(&tol()).unwrap();
        let want: Vec<Scalar> = (0..=7).map(|j| Scalar::from_int(7 - 2 * j)).collect();
        assert_eq!(s.thetas, want);
        let binom = [1i64, 7, 21, 35, 35, 21, 7, 1];
        for j in 0..=7 {
            assert_eq!(s.multiplicities[j], Scalar::from_int(binom[j]));
            assert_eq!(s.valencies[j], rat(binom[j], 1));
        }
    }

    #[test]
    fn krein_parameters_of_quadrangle() {
        let ia = IntersectionArray::parse("{2,1;1,2}").unwrap();
        let s = ia.spectrum(&tol()).unwrap();
        let kt = s.krein_parameters(&tol());
        assert_eq!(kt.q[1][1][2], Scalar::from_int(2));
        assert_eq!(kt.q[1][1][1], Scalar::zero());
        assert_eq!(kt.q[0][1][1], Scalar::one());
        assert_eq!(kt.q[0][1][2], Scalar::zero());
        assert_eq!(s.krein_residual(&kt), 0.0);
    }

    #[test]
    fn krein_parameters_of_triangular_graph() {
        let s = triangular_t5().spectrum(&tol()).unwrap();
        let kt = s.krein_parameters(&tol());
        assert_eq!(kt.q[1][1][2], Scalar::from_rat(rat(20, 9)));
        assert_eq!(kt.q[1][2][1], Scalar::from_rat(rat(25, 9)));
        assert_eq!(kt.q[2][2][1], Scalar::from_rat(rat(20, 9)));
        assert_eq!(kt.q[2][2][2], Scalar::from_rat(rat(20, 9)));
        // Symmetry and the principal column, across the whole tensor.
        for i in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    assert_eq!(kt.q[i][j][l], kt.q[j][i][l]);
                }
                let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(kt.q[0][i][j], if i == j { expect } else { Scalar::zero() });
            }
        }
        assert_eq!(s.krein_residual(&kt), 0.0);
    }

    #[test]
    fn qpoly_orderings_found() {
        // Quadrangle: only the natural ordering.
        let s = IntersectionArray::parse("{2,1;1,2}")
            .unwrap()
            .spectrum(&tol())
            .unwrap();
        assert_eq!(
            s.krein_parameters(&tol()).qpoly_orderings().unwrap(),
            vec![vec![1, 2]]
        );
        // T(5): both orderings, natural first.
        let s = triangular_t5().spectrum(&tol()).unwrap();
        assert_eq!(
            s.krein_parameters(&tol()).qpoly_orderings().unwrap(),
            vec![vec![1, 2], vec![2, 1]]
        );
    }

    #[test]
    fn doubled_odd_graph_is_not_qpoly() {
        let s = IntersectionArray::parse("{3,2,2,1,1;1,1,2,2,3}")
            .unwrap()
            .spectrum(&tol())
            .unwrap();
        let want: Vec<Scalar> = [3, 2, 1, -1, -2, -3]
            .iter()
            .map(|&v| Scalar::from_int(v))
            .collect();
        assert_eq!(s.thetas, want);
        let mults: Vec<Scalar> = [1, 4, 5, 5, 4, 1]
            .iter()
            .map(|&v| Scalar::from_int(v))
            .collect();
        assert_eq!(s.multiplicities, mults);
        let kt = s.krein_parameters(&tol());
        assert!(kt.qpoly_orderings().unwrap().is_empty());
        assert!(!kt.natural_ordering_valid());
    }

    #[test]
    fn seven_cube_natural_ordering_first() {
        let b: Vec<i64> = (0..7).map(|i| 7 - i).collect();
        let c: Vec<i64> = (1..=7).collect();
        let s = IntersectionArray::new(b, c).unwrap().spectrum(&tol()).unwrap();
        let kt = s.krein_parameters(&tol());
        assert!(kt.natural_ordering_valid());
        let orderings = kt.qpoly_orderings().unwrap();
        assert_eq!(orderings[0], vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn pentagon_irrational_spectrum() {
        let s = IntersectionArray::parse("{2,1;1,1}")
            .unwrap()
            .spectrum(&tol())
            .unwrap();
        assert_eq!(s.thetas[0], Scalar::from_int(2));
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((s.thetas[1].to_f64() - golden).abs() < 1e-12);
        assert!((s.multiplicities[1].to_f64() - 2.0).abs() < 1e-9);
        assert!((s.multiplicities[2].to_f64() - 2.0).abs() < 1e-9);
        assert!(s.integral_multiplicities);
        assert!(s.orthogonality_residual() < 1e-9);
    }
}
