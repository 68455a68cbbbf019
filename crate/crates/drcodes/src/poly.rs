//! Exact root isolation for integer tridiagonal matrices.
//!
//! Intersection arrays and quotient matrices both give rise to tridiagonal
//! integer matrices whose distinct real eigenvalues drive everything else.
//! The characteristic polynomial is computed exactly over `BigInt` by the
//! leading-principal-minor recurrence, roots are isolated with a Sturm chain
//! over rationals, integer roots are recovered exactly, and the remaining
//! irrational ones are refined by sign bisection.

use crate::error::{Error, Result};
use crate::scalar::{rat_int, Rat, Scalar};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Characteristic polynomial `det(xI - T)` of the tridiagonal matrix with
/// the given diagonals, as ascending monic integer coefficients.
///
/// `diag` holds the n diagonal entries, `sub` and `sup` the n-1 entries
/// immediately below and above it.
pub fn tridiagonal_char_poly(sub: &[i64], diag: &[i64], sup: &[i64]) -> Vec<BigInt> {
    assert_eq!(sub.len() + 1, diag.len());
    assert_eq!(sup.len() + 1, diag.len());
    // Minor recurrence: p_{i+1}(x) = (x - diag_i) p_i(x) - sub_{i-1} sup_{i-1} p_{i-1}(x).
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    let mut cur: Vec<BigInt> = vec![BigInt::from(-diag[0]), BigInt::from(1)];
    for i in 1..diag.len() {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= BigInt::from(diag[i]) * c;
        }
        let off = BigInt::from(sub[i - 1]) * BigInt::from(sup[i - 1]);
        for (j, c) in prev.iter().enumerate() {
            next[j] -= &off * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn eval_int(poly: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn eval_rat(poly: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return vec![Rat::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat_int(i as i64))
        .collect()
}

/// Remainder of polynomial division `a mod b` over the rationals.
fn poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let factor = r.last().unwrap() / &lead;
        for j in 0..=db {
            let t = &b[j] * &factor;
            r[dr - db + j] = &r[dr - db + j] - &t;
        }
        r = trim(r);
        if dr == db {
            break;
        }
    }
    r
}

struct SturmChain {
    seq: Vec<Vec<Rat>>,
}

impl SturmChain {
    fn new(poly: &[BigInt]) -> Self {
        let p0: Vec<Rat> = poly.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let p1 = derivative(&p0);
        let mut seq = vec![trim(p0), trim(p1)];
        loop {
            let n = seq.len();
            let r = poly_rem(&seq[n - 2], &seq[n - 1]);
            if r.len() == 1 && r[0].is_zero() {
                break;
            }
            seq.push(r.iter().map(|c| -c).collect());
            if seq.last().unwrap().len() == 1 {
                break;
            }
        }
        SturmChain { seq }
    }

    /// True when gcd(p, p') is constant, i.e. all roots are simple.
    fn squarefree(&self) -> bool {
        self.seq.last().map(|p| p.len() == 1).unwrap_or(false)
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.seq {
            let v = eval_rat(p, x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if let Some(l) = last {
                if l != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    fn count_in(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }
}

/// All real roots of a squarefree monic integer polynomial inside
/// `[-bound, bound]`, in descending order. Integer roots come back exact;
/// irrational ones are bisected until the bracket is narrower than `width`.
pub fn real_roots(poly: &[BigInt], bound: i64, width: f64) -> Result<Vec<Scalar>> {
    let chain = SturmChain::new(poly);
    if !chain.squarefree() {
        return Err(Error::EigenFailure(
            "characteristic polynomial has a repeated root".into(),
        ));
    }
    let lo = rat_int(-bound);
    let hi = rat_int(bound);
    // The lower endpoint is excluded by the half-open convention; widen by one
    // so a root exactly at -bound is still seen.
    let lo = lo - rat_int(1);
    let total = chain.count_in(&lo, &hi);

    let mut intervals = vec![(lo, hi, total)];
    let mut roots: Vec<Scalar> = Vec::new();
    while let Some((a, b, n)) = intervals.pop() {
        match n {
            0 => {}
            1 => roots.push(refine_root(poly, &chain, a, b, width)),
            _ => {
                let mid = (&a + &b) / rat_int(2);
                let left = chain.count_in(&a, &mid);
                intervals.push((a, mid.clone(), left));
                intervals.push((mid, b, n - left));
            }
        }
    }
    roots.sort_by(|x, y| y.cmp_value(x));
    Ok(roots)
}

/// Pins down the single root guaranteed to lie in `(a, b]`.
fn refine_root(poly: &[BigInt], chain: &SturmChain, a: Rat, b: Rat, width: f64) -> Scalar {
    // A rational root of a monic integer polynomial is an integer, so exact
    // recovery only has to scan the integers in the bracket.
    let first = (a.to_f64().unwrap_or(f64::NEG_INFINITY)).floor() as i64;
    let last = (b.to_f64().unwrap_or(f64::INFINITY)).ceil() as i64;
    for n in first..=last {
        let nr = rat_int(n);
        if nr > a && nr <= b && eval_int(poly, &BigInt::from(n)).is_zero() {
            return Scalar::Exact(nr);
        }
    }
    // Irrational root: all bisection midpoints are non-roots, so plain sign
    // bisection applies once the bracket shows a sign change.
    let rp: Vec<Rat> = poly.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let (mut a, mut b) = (a, b);
    // Shrink via Sturm counts until the endpoint signs differ (the root is
    // interior, so this happens after finitely many splits).
    while !(eval_rat(&rp, &a).is_positive() != eval_rat(&rp, &b).is_positive()) {
        let mid = (&a + &b) / rat_int(2);
        if chain.count_in(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    let span = |a: &Rat, b: &Rat| (b - a).to_f64().unwrap_or(f64::INFINITY);
    while span(&a, &b) > width {
        let mid = (&a + &b) / rat_int(2);
        let vm = eval_rat(&rp, &mid);
        if vm.is_zero() {
            return Scalar::Exact(mid);
        }
        if vm.is_positive() == eval_rat(&rp, &a).is_positive() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Scalar::Approx(((&a + &b) / rat_int(2)).to_f64().unwrap_or(f64::NAN))
}

/// Distinct eigenvalues of an integer tridiagonal matrix, descending.
///
/// Fails if the characteristic polynomial has repeated roots or if fewer
/// real roots than the matrix dimension are found in `[-bound, bound]`.
pub fn tridiagonal_eigenvalues(
    sub: &[i64],
    diag: &[i64],
    sup: &[i64],
    bound: i64,
    width: f64,
) -> Result<Vec<Scalar>> {
    let poly = tridiagonal_char_poly(sub, diag, sup);
    let roots = real_roots(&poly, bound, width)?;
    if roots.len() != diag.len() {
        return Err(Error::EigenFailure(format!(
            "expected {} distinct real eigenvalues, isolated {}",
            diag.len(),
            roots.len()
        )));
    }
    Ok(roots)
}
