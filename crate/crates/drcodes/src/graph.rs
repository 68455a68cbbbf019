//! Explicit graphs: family generators, BFS distances, distance-regularity
//! verification, and antipodal partners.
//!
//! Vertices are dense `u32` indices. Hamming vertices encode words in base q
//! (coordinate i is digit i, least significant first), subset-type vertices
//! carry bitmasks, so hashing and canonical order are O(1).

use crate::error::{Error, Result};
use crate::spectral::IntersectionArray;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

const MAX_VERTICES: u64 = 1_000_000;

/// Named graph families with their parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Words of length n over an alphabet of size q, adjacent when they
    /// differ in exactly one coordinate.
    Hamming { n: u32, q: u32 },
    /// k-subsets of a v-set, adjacent when the intersection has size k-1.
    Johnson { v: u32, k: u32 },
    /// Even-weight binary m-words, adjacent at Hamming distance 2.
    HalvedCube { m: u32 },
    /// Antipodal pairs of binary m-words, adjacent when representatives are
    /// at distance 1 or m-1.
    FoldedCube { m: u32 },
    /// (k-1)- and k-subsets of a (2k-1)-set, adjacent by inclusion.
    DoubledOdd { k: u32 },
    Cycle { n: u32 },
}

impl Family {
    /// The closed-form intersection array of the family.
    pub fn intersection_array(&self) -> Result<IntersectionArray> {
        let (b, c): (Vec<i64>, Vec<i64>) = match *self {
            Family::Hamming { n, q } => {
                let (n, q) = (n as i64, q as i64);
                (
                    (0..n).map(|i| (n - i) * (q - 1)).collect(),
                    (1..=n).collect(),
                )
            }
            Family::Johnson { v, k } => {
                let (v, k) = (v as i64, k as i64);
                let d = k.min(v - k);
                (
                    (0..d).map(|i| (k - i) * (v - k - i)).collect(),
                    (1..=d).map(|i| i * i).collect(),
                )
            }
            Family::HalvedCube { m } => {
                let m = m as i64;
                let d = m / 2;
                (
                    (0..d).map(|i| (m - 2 * i) * (m - 2 * i - 1) / 2).collect(),
                    (1..=d).map(|i| i * (2 * i - 1)).collect(),
                )
            }
            Family::FoldedCube { m } => {
                let m = m as i64;
                let d = m / 2;
                (
                    (0..d).map(|i| m - i).collect(),
                    (1..=d).map(|i| if m % 2 == 0 && i == d { 2 * d } else { i }).collect(),
                )
            }
            Family::DoubledOdd { k } => {
                let k = k as i64;
                let d = 2 * k - 1;
                (
                    (0..d).map(|i| k - (i + 1) / 2).collect(),
                    (1..=d).map(|i| if i == d { k } else { i / 2 + i % 2 }).collect(),
                )
            }
            Family::Cycle { n } => {
                let n = n as i64;
                let d = n / 2;
                let mut b = vec![1i64; d as usize];
                b[0] = 2;
                let mut c = vec![1i64; d as usize];
                if n % 2 == 0 {
                    c[d as usize - 1] = 2;
                }
                (b, c)
            }
        };
        IntersectionArray::new(b, c)
    }

    /// Builds the graph. Vertex count is capped at one million.
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Hamming { n, q } => hamming(n, q),
            Family::Johnson { v, k } => johnson(v, k),
            Family::HalvedCube { m } => halved_cube(m),
            Family::FoldedCube { m } => folded_cube(m),
            Family::DoubledOdd { k } => doubled_odd(k),
            Family::Cycle { n } => cycle(n),
        }
    }

    /// Parses a family spec like `hamming 7 2` or `halved-cube 6`.
    ///
    /// The format is the family name followed by its whitespace-separated
    /// parameters, matching what `Display` prints.
    pub fn parse(text: &str) -> Result<Family> {
        let mut it = text.split_whitespace();
        let name = it
            .next()
            .ok_or_else(|| Error::Parse("empty graph spec".into()))?;
        let mut arg = || -> Result<u32> {
            let tok = it.next().ok_or_else(|| {
                Error::Parse(format!("{name}: missing parameter"))
            })?;
            tok.parse()
                .map_err(|_| Error::Parse(format!("{name}: bad parameter '{tok}'")))
        };
        let fam = match name {
            "hamming" => Family::Hamming { n: arg()?, q: arg()? },
            "johnson" => Family::Johnson { v: arg()?, k: arg()? },
            "halved-cube" => Family::HalvedCube { m: arg()? },
            "folded-cube" => Family::FoldedCube { m: arg()? },
            "doubled-odd" => Family::DoubledOdd { k: arg()? },
            "cycle" => Family::Cycle { n: arg()? },
            other => {
                return Err(Error::Parse(format!("unknown graph family '{other}'")))
            }
        };
        if let Some(extra) = it.next() {
            return Err(Error::Parse(format!(
                "{name}: unexpected trailing token '{extra}'"
            )));
        }
        Ok(fam)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Family::Hamming { n, q } => write!(f, "hamming {n} {q}"),
            Family::Johnson { v, k } => write!(f, "johnson {v} {k}"),
            Family::HalvedCube { m } => write!(f, "halved-cube {m}"),
            Family::FoldedCube { m } => write!(f, "folded-cube {m}"),
            Family::DoubledOdd { k } => write!(f, "doubled-odd {k}"),
            Family::Cycle { n } => write!(f, "cycle {n}"),
        }
    }
}

/// How vertex indices map to printable labels.
#[derive(Clone, Debug)]
pub enum VertexKind {
    /// Labels are the decimal indices themselves.
    Plain,
    /// Base-q words; index = sum of digit_i * q^i.
    Words { len: u32, q: u32 },
    /// Binary words from an explicit mask list (halved and folded cubes).
    BinaryWords { len: u32, index: HashMap<u64, u32> },
    /// Subsets of {1..ground} from an explicit mask list.
    Subsets { ground: u32, index: HashMap<u64, u32> },
}

/// Undirected connected graph with sorted adjacency lists.
pub struct Graph {
    adj: Vec<Vec<u32>>,
    kind: VertexKind,
    /// Masks per vertex for the mask-backed kinds, empty otherwise.
    masks: Vec<u64>,
    dist_cache: RwLock<HashMap<u32, Arc<Vec<u32>>>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

impl Graph {
    /// Builds from an edge list; rejects loops, duplicate edges, and
    /// disconnected input.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        Self::from_edges_kind(n, edges, VertexKind::Plain, Vec::new())
    }

    fn from_edges_kind(
        n: usize,
        edges: &[(u32, u32)],
        kind: VertexKind,
        masks: Vec<u64>,
    ) -> Result<Graph> {
        if n as u64 > MAX_VERTICES {
            return Err(Error::InvalidParameters(format!(
                "vertex count {n} exceeds the bound {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameters(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        let g = Graph {
            adj,
            kind,
            masks,
            dist_cache: RwLock::new(HashMap::new()),
        };
        if g.n() > 0 {
            let d = g.bfs_distances(0);
            if let Some(v) = d.iter().position(|&x| x == u32::MAX) {
                return Err(Error::InvalidParameters(format!(
                    "graph is disconnected: vertex {v} unreachable from 0"
                )));
            }
        }
        Ok(g)
    }

    /// Parses the explicit format: line 1 `n m`, then m lines `u v`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad edge count".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?;
            let v: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, &edges)
    }

    /// Emits the same explicit format `parse` accepts.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n(), self.edge_count());
        for u in 0..self.n() as u32 {
            for &v in self.neighbors(u) {
                if u < v {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn is_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn kind(&self) -> &VertexKind {
        &self.kind
    }

    /// Plain BFS from one source; no caching.
    pub fn bfs_distances(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in self.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Cached distances from `src`; fills idempotently, so concurrent readers
    /// are fine.
    pub fn distances_from(&self, src: u32) -> Arc<Vec<u32>> {
        if let Some(d) = self.dist_cache.read().unwrap().get(&src) {
            return Arc::clone(d);
        }
        let d = Arc::new(self.bfs_distances(src));
        self.dist_cache
            .write()
            .unwrap()
            .entry(src)
            .or_insert(d)
            .clone()
    }

    pub fn distance(&self, u: u32, v: u32) -> u32 {
        self.distances_from(u)[v as usize]
    }

    /// The unique vertex at distance `d` from `x`, if unique.
    pub fn antipodal_partner(&self, x: u32, d: u32) -> Option<u32> {
        let dist = self.bfs_distances(x);
        let mut found = None;
        for (v, &dv) in dist.iter().enumerate() {
            if dv == d {
                if found.is_some() {
                    return None;
                }
                found = Some(v as u32);
            }
        }
        found
    }

    /// The full antipodal involution at diameter `d`: every vertex must have a
    /// unique partner, and the map must be an involution.
    pub fn antipodal_map(&self, d: u32) -> Option<Vec<u32>> {
        let pi: Option<Vec<u32>> = (0..self.n() as u32)
            .map(|x| self.antipodal_partner(x, d))
            .collect();
        let pi = pi?;
        let involution = (0..self.n()).all(|x| pi[pi[x] as usize] as usize == x);
        involution.then_some(pi)
    }

    /// Per-distance counts `(b_i, c_i)` of one source, used as the baseline.
    fn source_counts(&self, src: u32) -> (Vec<i64>, Vec<i64>, Vec<u32>) {
        let dist = self.bfs_distances(src);
        let ecc = *dist.iter().max().unwrap();
        let mut b = vec![-1i64; ecc as usize + 1];
        let mut c = vec![-1i64; ecc as usize + 1];
        for y in 0..self.n() as u32 {
            let d = dist[y as usize] as usize;
            if b[d] >= 0 {
                continue;
            }
            let (cy, _, by) = self.pair_counts(&dist, y);
            b[d] = by;
            c[d] = cy;
        }
        (b, c, dist)
    }

    /// Neighbors of `y` at distance d-1, d, d+1 from the source whose BFS
    /// table is `dist`, where d = dist[y].
    fn pair_counts(&self, dist: &[u32], y: u32) -> (i64, i64, i64) {
        let d = dist[y as usize];
        let (mut c, mut a, mut b) = (0i64, 0i64, 0i64);
        for &z in self.neighbors(y) {
            let dz = dist[z as usize];
            if dz + 1 == d {
                c += 1;
            } else if dz == d {
                a += 1;
            } else {
                b += 1;
            }
        }
        (c, a, b)
    }

    fn check_source(&self, x: u32, b: &[i64], c: &[i64]) -> Option<DrgWitness> {
        let dist = self.bfs_distances(x);
        for y in 0..self.n() as u32 {
            let d = dist[y as usize] as usize;
            let (cy, _, by) = self.pair_counts(&dist, y);
            let (be, ce) = if d < b.len() { (b[d], c[d]) } else { (0, 0) };
            if d >= b.len() || by != be || cy != ce {
                return Some(DrgWitness {
                    x,
                    y,
                    distance: d as u32,
                    found: (cy, by),
                    expected: (ce, be),
                });
            }
        }
        None
    }

    /// Raw distance-regularity check: per-distance counts `(b_0..b_{D-1},
    /// c_1..c_D)` when every source sees the same ones, otherwise the first
    /// violating pair in vertex order. Valid for any diameter, including
    /// complete graphs.
    pub fn distance_regular_counts(&self) -> std::result::Result<(Vec<i64>, Vec<i64>), DrgWitness> {
        let (b, c, _) = self.source_counts(0);
        #[cfg(feature = "parallel")]
        let witness = (0..self.n() as u32)
            .into_par_iter()
            .find_map_first(|x| self.check_source(x, &b, &c));
        #[cfg(not(feature = "parallel"))]
        let witness = (0..self.n() as u32).find_map(|x| self.check_source(x, &b, &c));
        match witness {
            Some(w) => Err(w),
            None => {
                let d = b.len() - 1;
                Ok((b[..d].to_vec(), c[1..].to_vec()))
            }
        }
    }

    /// Sequential variant of [`distance_regular_counts`](Self::distance_regular_counts).
    pub fn distance_regular_counts_seq(
        &self,
    ) -> std::result::Result<(Vec<i64>, Vec<i64>), DrgWitness> {
        let (b, c, _) = self.source_counts(0);
        match (0..self.n() as u32).find_map(|x| self.check_source(x, &b, &c)) {
            Some(w) => Err(w),
            None => {
                let d = b.len() - 1;
                Ok((b[..d].to_vec(), c[1..].to_vec()))
            }
        }
    }

    /// Distance-regularity verdict. `Ok(Err(witness))` means the graph is not
    /// distance-regular; the outer error fires only when the graph is
    /// distance-regular but falls outside the standing assumptions (diameter
    /// or valency below 2).
    pub fn is_distance_regular(&self) -> Result<std::result::Result<IntersectionArray, DrgWitness>> {
        match self.distance_regular_counts() {
            Err(w) => Ok(Err(w)),
            Ok((b, c)) => IntersectionArray::new(b, c).map(Ok),
        }
    }

    /// Label for a vertex index, per the graph's vertex kind.
    pub fn label_of(&self, v: u32) -> String {
        match &self.kind {
            VertexKind::Plain => v.to_string(),
            VertexKind::Words { len, q } => {
                let mut s = String::new();
                let mut rest = v;
                for _ in 0..*len {
                    let digit = rest % q;
                    if *q > 10 {
                        if !s.is_empty() {
                            s.push(',');
                        }
                        let _ = write!(s, "{digit}");
                    } else {
                        s.push(char::from_digit(digit, 10).unwrap());
                    }
                    rest /= q;
                }
                s
            }
            VertexKind::BinaryWords { len, .. } => {
                let mask = self.masks[v as usize];
                (0..*len)
                    .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            }
            VertexKind::Subsets { ground, .. } => {
                let mask = self.masks[v as usize];
                let elems: Vec<String> = (0..*ground)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                elems.join(",")
            }
        }
    }

    /// Inverse of [`label_of`](Self::label_of); also accepts a bare bitmask
    /// for subset vertices and either member of an antipodal pair for folded
    /// cubes.
    pub fn vertex_by_label(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        let bad = || Error::Parse(format!("no vertex labelled '{s}'"));
        match &self.kind {
            VertexKind::Plain => {
                let v: u32 = s.parse().map_err(|_| bad())?;
                if (v as usize) < self.n() {
                    Ok(v)
                } else {
                    Err(bad())
                }
            }
            VertexKind::Words { len, q } => {
                let digits: Vec<u32> = if s.contains(',') {
                    s.split(',')
                        .map(|t| t.trim().parse().map_err(|_| bad()))
                        .collect::<Result<_>>()?
                } else {
                    s.chars()
                        .map(|ch| ch.to_digit(10).ok_or_else(bad))
                        .collect::<Result<_>>()?
                };
                if digits.len() != *len as usize || digits.iter().any(|d| d >= q) {
                    return Err(bad());
                }
                let mut v = 0u32;
                for (i, d) in digits.iter().enumerate() {
                    v += d * q.pow(i as u32);
                }
                Ok(v)
            }
            VertexKind::BinaryWords { len, index } => {
                let mut mask = 0u64;
                if s.len() != *len as usize {
                    return Err(bad());
                }
                for (i, ch) in s.chars().enumerate() {
                    match ch {
                        '1' => mask |= 1 << i,
                        '0' => {}
                        _ => return Err(bad()),
                    }
                }
                if let Some(&v) = index.get(&mask) {
                    return Ok(v);
                }
                // Folded-cube labels: fall back to the antipodal representative.
                let full = (1u64 << len) - 1;
                index.get(&(mask ^ full)).copied().ok_or_else(bad)
            }
            VertexKind::Subsets { ground, index } => {
                let mask = if s.contains(',') {
                    let mut m = 0u64;
                    for t in s.split(',') {
                        let e: u32 = t.trim().parse().map_err(|_| bad())?;
                        if e < 1 || e > *ground {
                            return Err(bad());
                        }
                        m |= 1 << (e - 1);
                    }
                    m
                } else {
                    s.parse::<u64>().map_err(|_| bad())?
                };
                index.get(&mask).copied().ok_or_else(bad)
            }
        }
    }
}

/// First pair violating distance-regularity: vertex `y` at the given distance
/// from `x` saw neighbor counts `found = (c, b)` against the baseline
/// `expected`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrgWitness {
    pub x: u32,
    pub y: u32,
    pub distance: u32,
    pub found: (i64, i64),
    pub expected: (i64, i64),
}

impl std::fmt::Display for DrgWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "vertex {} at distance {} from {} has (c,b) = {:?}, expected {:?}",
            self.y, self.distance, self.x, self.found, self.expected
        )
    }
}

fn check_size(n: u64) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::InvalidParameters(format!(
            "vertex count {n} exceeds the bound {MAX_VERTICES}"
        )))
    } else {
        Ok(())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn hamming(n: u32, q: u32) -> Result<Graph> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameters(
            "hamming graph needs n >= 1 and q >= 2".into(),
        ));
    }
    let size = (q as u64).checked_pow(n).filter(|&s| s <= MAX_VERTICES);
    let size = size.ok_or_else(|| {
        Error::InvalidParameters(format!("hamming({n},{q}) exceeds the vertex bound"))
    })?;
    let mut edges = Vec::new();
    for v in 0..size as u32 {
        for pos in 0..n {
            let p = q.pow(pos);
            let digit = v / p % q;
            for s in digit + 1..q {
                edges.push((v, v + (s - digit) * p));
            }
        }
    }
    Graph::from_edges_kind(size as usize, &edges, VertexKind::Words { len: n, q }, Vec::new())
}

/// All masks over `ground` bits with popcount in `sizes`, sorted ascending.
fn masks_by_weight(ground: u32, sizes: &[u32]) -> Vec<u64> {
    (0u64..1 << ground)
        .filter(|m| sizes.contains(&m.count_ones()))
        .collect()
}

fn mask_graph(
    masks: Vec<u64>,
    kind_of: impl Fn(HashMap<u64, u32>) -> VertexKind,
    adjacent: impl Fn(u64, u64) -> bool,
) -> Result<Graph> {
    check_size(masks.len() as u64)?;
    let index: HashMap<u64, u32> = masks
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i as u32))
        .collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if adjacent(masks[i], masks[j]) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges_kind(masks.len(), &edges, kind_of(index), masks)
}

fn johnson(v: u32, k: u32) -> Result<Graph> {
    if v < 2 || k == 0 || k >= v || v > 63 {
        return Err(Error::InvalidParameters(format!(
            "johnson({v},{k}) needs 0 < k < v <= 63"
        )));
    }
    check_size(binomial(v as u64, k as u64))?;
    let masks = masks_by_weight(v, &[k]);
    mask_graph(
        masks,
        |index| VertexKind::Subsets { ground: v, index },
        |a, b| (a & b).count_ones() == k - 1,
    )
}

fn halved_cube(m: u32) -> Result<Graph> {
    if m < 2 || m > 20 {
        return Err(Error::InvalidParameters(format!(
            "halved_cube({m}) needs 2 <= m <= 20"
        )));
    }
    let sizes: Vec<u32> = (0..=m).filter(|s| s % 2 == 0).collect();
    let masks = masks_by_weight(m, &sizes);
    mask_graph(
        masks,
        |index| VertexKind::BinaryWords { len: m, index },
        |a, b| (a ^ b).count_ones() == 2,
    )
}

fn folded_cube(m: u32) -> Result<Graph> {
    if m < 3 || m > 20 {
        return Err(Error::InvalidParameters(format!(
            "folded_cube({m}) needs 3 <= m <= 20"
        )));
    }
    // Representatives: words with the top coordinate clear.
    let masks: Vec<u64> = (0u64..1 << (m - 1)).collect();
    mask_graph(
        masks,
        |index| VertexKind::BinaryWords { len: m, index },
        |a, b| {
            let d = (a ^ b).count_ones();
            d == 1 || d == m - 1
        },
    )
}

fn doubled_odd(k: u32) -> Result<Graph> {
    if k < 2 || 2 * k - 1 > 31 {
        return Err(Error::InvalidParameters(format!(
            "doubled_odd({k}) needs 2 <= k <= 16"
        )));
    }
    let ground = 2 * k - 1;
    check_size(2 * binomial(ground as u64, k as u64))?;
    let masks = masks_by_weight(ground, &[k - 1, k]);
    mask_graph(
        masks,
        |index| VertexKind::Subsets { ground, index },
        |a, b| {
            let (small, large) = if a.count_ones() < b.count_ones() { (a, b) } else { (b, a) };
            small & large == small && large.count_ones() == small.count_ones() + 1
        },
    )
}

fn cycle(n: u32) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters("cycle needs n >= 3".into()));
    }
    check_size(n as u64)?;
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n as usize, &edges)
}
