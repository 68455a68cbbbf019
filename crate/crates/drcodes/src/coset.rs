//! Additive codes in Hamming graphs: coset partitions, completely regular
//! partitions, coset graphs, the quotient-matrix relation, and the
//! Rifa-Zinoviev construction.
//!
//! Words are vertex indices of `hamming(n, q)`: digit `i` of the base-q
//! expansion is coordinate `i`, so word arithmetic and graph indexing agree
//! without translation.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::code::{is_completely_regular, Code, QuotientMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly;
use crate::scalar::Scalar;
use crate::Tolerances;

/// Largest ambient space `q^n` an additive code may live in.
const MAX_AMBIENT: u64 = 1 << 20;

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn word_add(a: u32, b: u32, n: u32, q: u32) -> u32 {
    if q == 2 {
        return a ^ b;
    }
    let mut out = 0u32;
    let mut pw = 1u32;
    let (mut a, mut b) = (a, b);
    for _ in 0..n {
        out += (a % q + b % q) % q * pw;
        a /= q;
        b /= q;
        pw *= q;
    }
    out
}

fn word_neg(a: u32, n: u32, q: u32) -> u32 {
    if q == 2 {
        return a;
    }
    let mut out = 0u32;
    let mut pw = 1u32;
    let mut a = a;
    for _ in 0..n {
        out += (q - a % q) % q * pw;
        a /= q;
        pw *= q;
    }
    out
}

fn word_digits(a: u32, n: u32, q: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(n as usize);
    let mut a = a;
    for _ in 0..n {
        d.push(a % q);
        a /= q;
    }
    d
}

fn digits_word(d: &[u32], q: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * q + x)
}

/// A subgroup of `Z_q^n` (q prime) presented by generators, with its full
/// codeword set materialized.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    q: u32,
    n: u32,
    generators: Vec<u32>,
    closure: Vec<u32>,
}

impl AdditiveCode {
    /// Span of the given generator words.
    pub fn from_generators(q: u32, n: u32, generators: &[u32]) -> Result<AdditiveCode> {
        let size = Self::ambient_checked(q, n)?;
        let mut span: HashSet<u32> = HashSet::from([0]);
        for &g in generators {
            if g as u64 >= size {
                return Err(Error::InvalidParameters(format!(
                    "generator {g} out of range for {q}^{n} words"
                )));
            }
            if span.contains(&g) {
                continue;
            }
            let mut next = HashSet::with_capacity(span.len() * q as usize);
            for &s in &span {
                let mut t = s;
                for _ in 0..q {
                    next.insert(t);
                    t = word_add(t, g, n, q);
                }
            }
            span = next;
        }
        let mut closure: Vec<u32> = span.into_iter().collect();
        closure.sort_unstable();
        Ok(AdditiveCode {
            q,
            n,
            generators: generators.to_vec(),
            closure,
        })
    }

    /// Checks that an explicit word set is a subgroup and derives a basis
    /// for it.
    ///
    /// # Errors
    /// `NotAdditive` when the set misses zero or is not closed under
    /// addition or negation.
    pub fn from_words(q: u32, n: u32, words: &[u32]) -> Result<AdditiveCode> {
        let size = Self::ambient_checked(q, n)?;
        let set: BTreeSet<u32> = words.iter().copied().collect();
        if set.iter().any(|&w| w as u64 >= size) {
            return Err(Error::InvalidParameters(format!(
                "word out of range for {q}^{n} words"
            )));
        }
        if !set.contains(&0) {
            return Err(Error::NotAdditive("zero word missing".into()));
        }
        for &a in &set {
            if !set.contains(&word_neg(a, n, q)) {
                return Err(Error::NotAdditive(format!("negation of {a} missing")));
            }
            for &b in &set {
                let s = word_add(a, b, n, q);
                if !set.contains(&s) {
                    return Err(Error::NotAdditive(format!("{a} + {b} = {s} missing")));
                }
            }
        }
        let closure: Vec<u32> = set.into_iter().collect();
        let generators = echelon_basis(&closure, n, q);
        Ok(AdditiveCode {
            q,
            n,
            generators,
            closure,
        })
    }

    fn ambient_checked(q: u32, n: u32) -> Result<u64> {
        if !is_prime(q) {
            return Err(Error::InvalidParameters(format!(
                "alphabet size {q} is not prime"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParameters("length must be positive".into()));
        }
        let size = (q as u64).checked_pow(n).filter(|&s| s <= MAX_AMBIENT);
        size.ok_or_else(|| {
            Error::AmbientTooLarge(format!("{q}^{n} exceeds {MAX_AMBIENT} words"))
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ambient_size(&self) -> u64 {
        (self.q as u64).pow(self.n)
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// All codewords, sorted ascending.
    pub fn closure(&self) -> &[u32] {
        &self.closure
    }

    pub fn len(&self) -> usize {
        self.closure.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `log_q |C|`; exact because the closure is a vector space.
    pub fn dimension(&self) -> u32 {
        let mut d = 0;
        let mut s = 1u64;
        while s < self.closure.len() as u64 {
            s *= self.q as u64;
            d += 1;
        }
        debug_assert_eq!(s, self.closure.len() as u64);
        d
    }

    /// The same codewords as a vertex-level code of the ambient graph.
    pub fn to_code(&self, g: &Graph) -> Result<Code> {
        if g.n() as u64 != self.ambient_size() {
            return Err(Error::InvalidParameters(format!(
                "graph has {} vertices, expected {}^{}",
                g.n(),
                self.q,
                self.n
            )));
        }
        Code::new(g, self.closure.clone())
    }

    /// One generator word per line, digits over the alphabet.
    pub fn generator_matrix(&self) -> String {
        let mut out = String::new();
        for &g in &self.generators {
            let row = word_digits(g, self.n, self.q)
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(if self.q > 10 { "," } else { "" });
            out.push_str(&row);
            out.push('\n');
        }
        out
    }

    /// Parses a generator matrix in the [`generator_matrix`] format.
    ///
    /// [`generator_matrix`]: AdditiveCode::generator_matrix
    pub fn parse_generators(q: u32, n: u32, text: &str) -> Result<AdditiveCode> {
        let mut gens = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let digits: Vec<u32> = if line.contains(',') {
                line.split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("line {}: bad digit", no + 1)))?
            } else {
                line.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .ok_or_else(|| Error::Parse(format!("line {}: bad digit", no + 1)))
                    })
                    .collect::<Result<_>>()?
            };
            if digits.len() != n as usize {
                return Err(Error::Parse(format!(
                    "line {}: expected {} digits, found {}",
                    no + 1,
                    n,
                    digits.len()
                )));
            }
            if digits.iter().any(|&d| d >= q) {
                return Err(Error::Parse(format!(
                    "line {}: digit out of alphabet range",
                    no + 1
                )));
            }
            gens.push(digits_word(&digits, q));
        }
        AdditiveCode::from_generators(q, n, &gens)
    }
}

/// Row echelon basis of a subgroup of `Z_q^n`, as words.
fn echelon_basis(words: &[u32], n: u32, q: u32) -> Vec<u32> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &w in words {
        let mut d = word_digits(w, n, q);
        for row in &rows {
            let lead = row.iter().position(|&x| x != 0).unwrap();
            if d[lead] != 0 {
                // d -= d[lead]/row[lead] * row; leading entries are 1.
                let f = d[lead];
                for (a, b) in d.iter_mut().zip(row) {
                    *a = (*a + (q - f) * b % q) % q;
                }
            }
        }
        if let Some(lead) = d.iter().position(|&x| x != 0) {
            // Normalize the leading digit to 1 (q is prime).
            let inv = (1..q).find(|i| i * d[lead] % q == 1).unwrap();
            for a in d.iter_mut() {
                *a = *a * inv % q;
            }
            rows.push(d);
            rows.sort_by_key(|r| r.iter().position(|&x| x != 0));
        }
    }
    rows.iter().map(|r| digits_word(r, q)).collect()
}

/// The partition of `Z_q^n` into translates of the code. Cell 0 is the code
/// itself; later cells appear in order of their smallest word.
#[derive(Clone, Debug)]
pub struct CosetPartition {
    pub cells: Vec<Vec<u32>>,
    pub coset_of: Vec<u32>,
}

pub fn coset_partition(c: &AdditiveCode) -> CosetPartition {
    let size = c.ambient_size() as usize;
    let mut coset_of = vec![u32::MAX; size];
    let mut cells = Vec::new();
    for x in 0..size as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = cells.len() as u32;
        let mut cell: Vec<u32> = c
            .closure()
            .iter()
            .map(|&w| word_add(w, x, c.n, c.q))
            .collect();
        cell.sort_unstable();
        for &v in &cell {
            debug_assert_eq!(coset_of[v as usize], u32::MAX);
            coset_of[v as usize] = id;
        }
        cells.push(cell);
    }
    CosetPartition { cells, coset_of }
}

/// Whether every cell is a completely regular code and all cells share one
/// quotient matrix.
///
/// # Errors
/// `InvalidParameters` when the cells do not partition the vertex set.
pub fn is_completely_regular_partition(g: &Graph, cells: &[Vec<u32>]) -> Result<bool> {
    let mut seen = vec![false; g.n()];
    for cell in cells {
        for &v in cell {
            if v as usize >= g.n() || seen[v as usize] {
                return Err(Error::InvalidParameters(format!(
                    "cell entry {v} repeated or out of range"
                )));
            }
            seen[v as usize] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidParameters(
            "cells do not cover the vertex set".into(),
        ));
    }
    let mut shared: Option<QuotientMatrix> = None;
    for cell in cells {
        let code = Code::new(g, cell.clone())?;
        let u = match is_completely_regular(g, &code) {
            Ok(u) => u,
            Err(_) => return Ok(false),
        };
        match &shared {
            None => shared = Some(u),
            Some(s) if *s != u => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// The coset graph and the uniform edge multiplicity behind each of its
/// edges, when one exists.
#[derive(Debug)]
pub struct CosetGraph {
    pub graph: Graph,
    /// Neighbors each vertex of a coset has in any fixed adjacent coset;
    /// `None` when that count is not uniform (the code is then not
    /// completely regular) or the graph has no edges.
    pub multiplicity: Option<i64>,
}

/// Collapses the ambient graph along the coset partition: cosets are the
/// vertices, adjacent when some ambient edge crosses between them.
pub fn coset_graph(g: &Graph, c: &AdditiveCode) -> Result<CosetGraph> {
    if g.n() as u64 != c.ambient_size() {
        return Err(Error::InvalidParameters(format!(
            "graph has {} vertices, expected {}^{}",
            g.n(),
            c.q,
            c.n
        )));
    }
    let part = coset_partition(c);
    let mut edges = BTreeSet::new();
    let mut uniform: Option<i64> = None;
    let mut is_uniform = true;
    let mut counts: HashMap<u32, i64> = HashMap::new();
    for v in 0..g.n() as u32 {
        let cv = part.coset_of[v as usize];
        counts.clear();
        for &w in g.neighbors(v) {
            let cw = part.coset_of[w as usize];
            if cw != cv {
                edges.insert((cv.min(cw), cv.max(cw)));
                *counts.entry(cw).or_insert(0) += 1;
            }
        }
        for &m in counts.values() {
            match uniform {
                None => uniform = Some(m),
                Some(u) if u != m => is_uniform = false,
                _ => {}
            }
        }
    }
    let edges: Vec<(u32, u32)> = edges.into_iter().collect();
    let graph = Graph::from_edges(part.cells.len(), &edges)?;
    Ok(CosetGraph {
        graph,
        multiplicity: if is_uniform { uniform } else { None },
    })
}

/// Exact check that the quotient graph's intersection numbers are the
/// quotient matrix rescaled: `c_i γ_1 = γ_i`, `a_i γ_1 = α_i − α_0`,
/// `b_i γ_1 = β_i`. A false return means the claimed correspondence between
/// the code and the quotient fails.
pub fn quotient_relation_check(u: &QuotientMatrix, quotient: &Graph) -> bool {
    let (b, c) = match quotient.distance_regular_counts() {
        Ok(counts) => counts,
        Err(_) => return false,
    };
    let d = b.len();
    if d != u.rho() {
        return false;
    }
    if d == 0 {
        return true;
    }
    let k = b[0];
    let g1 = u.gamma[1];
    for i in 0..=d {
        let bi = if i < d { b[i] } else { 0 };
        let ci = if i > 0 { c[i - 1] } else { 0 };
        let ai = k - bi - ci;
        if ci * g1 != u.gamma[i] || ai * g1 != u.alpha[i] - u.alpha[0] || bi * g1 != u.beta[i] {
            return false;
        }
    }
    true
}

/// Eigenvalues of the quotient graph's tridiagonal intersection matrix,
/// descending. Works for any diameter, including complete graphs.
pub fn quotient_spectrum(quotient: &Graph, tol: &Tolerances) -> Result<Vec<Scalar>> {
    let (b, c) = quotient
        .distance_regular_counts()
        .map_err(|w| Error::InvalidParameters(format!("quotient not distance-regular: {w}")))?;
    let d = b.len();
    if d == 0 {
        return Ok(vec![Scalar::zero()]);
    }
    let k = b[0];
    let diag: Vec<i64> = (0..=d)
        .map(|i| {
            let bi = if i < d { b[i] } else { 0 };
            let ci = if i > 0 { c[i - 1] } else { 0 };
            k - bi - ci
        })
        .collect();
    let sup: Vec<i64> = b.clone();
    let sub: Vec<i64> = c.clone();
    poly::tridiagonal_eigenvalues(&sub, &diag, &sup, k + 1, tol.bisect_width)
}

/// The binary code whose parity checks are all weight-`l` words of length
/// `m`: columns of the check matrix enumerate those words by increasing
/// value, and the code is the GF(2) null space.
pub fn rifa_zinoviev(m: u32, l: u32) -> Result<AdditiveCode> {
    if m < 3 || l < 2 || l >= m {
        return Err(Error::InvalidParameters(format!(
            "need m >= 3 and 2 <= l < m, got m = {m}, l = {l}"
        )));
    }
    let columns: Vec<u32> = (0u32..1 << m).filter(|w| w.count_ones() == l).collect();
    let len = columns.len() as u32;
    if len > MAX_AMBIENT.trailing_zeros() {
        return Err(Error::AmbientTooLarge(format!(
            "2^C({m},{l}) = 2^{len} words exceed {MAX_AMBIENT}"
        )));
    }
    // Check matrix rows as bitmasks over the code coordinates.
    let rows: Vec<u32> = (0..m)
        .map(|r| {
            columns
                .iter()
                .enumerate()
                .filter(|&(_, col)| col >> r & 1 == 1)
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    // Row reduce; record the pivot column of each surviving row.
    let mut reduced: Vec<(u32, u32)> = Vec::new(); // (pivot, row)
    for mut row in rows {
        for &(p, r) in &reduced {
            if row >> p & 1 == 1 {
                row ^= r;
            }
        }
        if row != 0 {
            let p = row.trailing_zeros();
            for (_, r) in reduced.iter_mut() {
                if *r >> p & 1 == 1 {
                    *r ^= row;
                }
            }
            reduced.push((p, row));
        }
    }
    let pivots: BTreeSet<u32> = reduced.iter().map(|&(p, _)| p).collect();
    // One basis word per free coordinate.
    let mut generators = Vec::new();
    for f in 0..len {
        if pivots.contains(&f) {
            continue;
        }
        let mut word = 1u32 << f;
        for &(p, r) in &reduced {
            if r >> f & 1 == 1 {
                word |= 1 << p;
            }
        }
        generators.push(word);
    }
    AdditiveCode::from_generators(2, len, &generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn hamming_7_4() -> AdditiveCode {
        let words: Vec<u32> = (0u32..128)
            .filter(|w| {
                let mut syn = 0u32;
                for i in 0..7 {
                    if w >> i & 1 == 1 {
                        syn ^= i + 1;
                    }
                }
                syn == 0
            })
            .collect();
        AdditiveCode::from_words(2, 7, &words).unwrap()
    }

    #[test]
    fn closure_and_dimension() {
        let c = hamming_7_4();
        assert_eq!(c.len(), 16);
        assert_eq!(c.dimension(), 4);
        assert_eq!(c.generators().len(), 4);
        // The generators span the same set.
        let again = AdditiveCode::from_generators(2, 7, c.generators()).unwrap();
        assert_eq!(again.closure(), c.closure());
    }

    #[test]
    fn non_additive_sets_are_rejected() {
        let err = AdditiveCode::from_words(2, 2, &[0, 1, 2]);
        assert!(matches!(err, Err(Error::NotAdditive(_))));
        let err = AdditiveCode::from_words(2, 2, &[1, 2]);
        assert!(matches!(err, Err(Error::NotAdditive(_))));
    }

    #[test]
    fn ternary_closure() {
        // <(1,1)> in Z_3^2: words 0, 4, 8 (digit pairs 00, 11, 22).
        let c = AdditiveCode::from_generators(3, 2, &[4]).unwrap();
        assert_eq!(c.closure(), &[0, 4, 8]);
        let again = AdditiveCode::from_words(3, 2, &[0, 4, 8]).unwrap();
        assert_eq!(again.dimension(), 1);
    }

    #[test]
    fn coset_partition_of_hamming_code() {
        let c = hamming_7_4();
        let part = coset_partition(&c);
        assert_eq!(part.cells.len(), 8);
        assert!(part.cells.iter().all(|cell| cell.len() == 16));
        assert_eq!(part.cells[0], c.closure());
    }

    #[test]
    fn full_space_has_one_coset() {
        let c = AdditiveCode::from_generators(2, 2, &[1, 2]).unwrap();
        assert_eq!(c.len(), 4);
        let part = coset_partition(&c);
        assert_eq!(part.cells.len(), 1);
    }

    #[test]
    fn hamming_coset_graph_is_complete() {
        let g = Family::Hamming { n: 7, q: 2 }.generate().unwrap();
        let c = hamming_7_4();
        let cg = coset_graph(&g, &c).unwrap();
        assert_eq!(cg.graph.n(), 8);
        assert_eq!(cg.graph.edge_count(), 28);
        assert_eq!(cg.multiplicity, Some(1));
        let code = c.to_code(&g).unwrap();
        let u = is_completely_regular(&g, &code).unwrap();
        assert!(quotient_relation_check(&u, &cg.graph));
        let spec = quotient_spectrum(&cg.graph, &tol()).unwrap();
        assert_eq!(spec, vec![Scalar::from_int(7), Scalar::from_int(-1)]);
    }

    #[test]
    fn repetition_pair_quotient() {
        let g = Family::Hamming { n: 2, q: 2 }.generate().unwrap();
        let c = AdditiveCode::from_words(2, 2, &[0, 3]).unwrap();
        let cg = coset_graph(&g, &c).unwrap();
        assert_eq!(cg.graph.n(), 2);
        assert_eq!(cg.multiplicity, Some(2));
        let u = is_completely_regular(&g, &c.to_code(&g).unwrap()).unwrap();
        assert_eq!(u.rows(), vec![[0, 0, 2], [2, 0, 0]]);
        assert!(quotient_relation_check(&u, &cg.graph));
    }

    #[test]
    fn completely_regular_partition_verdicts() {
        let g = Family::Hamming { n: 7, q: 2 }.generate().unwrap();
        let part = coset_partition(&hamming_7_4());
        assert!(is_completely_regular_partition(&g, &part.cells).unwrap());

        let g2 = Family::Hamming { n: 2, q: 2 }.generate().unwrap();
        let unbalanced = vec![vec![0u32], vec![1, 2, 3]];
        assert!(!is_completely_regular_partition(&g2, &unbalanced).unwrap());
        let err = is_completely_regular_partition(&g2, &[vec![0, 1]]);
        assert!(err.is_err());
    }

    #[test]
    fn rifa_zinoviev_4_2() {
        let c = rifa_zinoviev(4, 2).unwrap();
        assert_eq!(c.n(), 6);
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.len(), 8);

        let g = Family::Hamming { n: 6, q: 2 }.generate().unwrap();
        let code = c.to_code(&g).unwrap();
        let u = is_completely_regular(&g, &code).unwrap();
        assert_eq!(u.rows(), vec![[0, 0, 6], [1, 4, 1], [6, 0, 0]]);

        let cg = coset_graph(&g, &c).unwrap();
        assert_eq!(cg.graph.n(), 8);
        let ia = cg.graph.is_distance_regular().unwrap().unwrap();
        let halved = Family::HalvedCube { m: 4 }.intersection_array().unwrap();
        assert_eq!(ia, halved);
        assert!(quotient_relation_check(&u, &cg.graph));

        let part = coset_partition(&c);
        assert!(is_completely_regular_partition(&g, &part.cells).unwrap());
    }

    #[test]
    fn rifa_zinoviev_5_2() {
        let c = rifa_zinoviev(5, 2).unwrap();
        assert_eq!(c.n(), 10);
        assert_eq!(c.dimension(), 6);

        let g = Family::Hamming { n: 10, q: 2 }.generate().unwrap();
        let cg = coset_graph(&g, &c).unwrap();
        assert_eq!(cg.graph.n(), 16);
        let ia = cg.graph.is_distance_regular().unwrap().unwrap();
        let halved = Family::HalvedCube { m: 5 }.intersection_array().unwrap();
        assert_eq!(ia, halved);
    }

    #[test]
    fn rifa_zinoviev_6_2_dimension() {
        let c = rifa_zinoviev(6, 2).unwrap();
        assert_eq!(c.n(), 15);
        assert_eq!(c.dimension(), 10);
        assert_eq!(c.len(), 1024);
    }

    #[test]
    fn rifa_zinoviev_bounds() {
        assert!(rifa_zinoviev(2, 2).is_err());
        assert!(rifa_zinoviev(4, 1).is_err());
        assert!(rifa_zinoviev(4, 4).is_err());
        // C(7,3) = 35 coordinates would need 2^35 words.
        assert!(matches!(
            rifa_zinoviev(7, 3),
            Err(Error::AmbientTooLarge(_))
        ));
    }

    #[test]
    fn generator_matrix_round_trip() {
        let c = hamming_7_4();
        let text = c.generator_matrix();
        let back = AdditiveCode::parse_generators(2, 7, &text).unwrap();
        assert_eq!(back.closure(), c.closure());

        let t = AdditiveCode::from_generators(3, 2, &[4]).unwrap();
        let back = AdditiveCode::parse_generators(3, 2, &t.generator_matrix()).unwrap();
        assert_eq!(back.closure(), t.closure());
    }
}
