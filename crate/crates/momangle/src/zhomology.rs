//! Exact integer homology: Smith normal form over arbitrary-precision
//! integers, simplicial boundary matrices (with the empty face as the
//! degree -1 generator, so homology is reduced), and Betti numbers over
//! the rationals or a prime field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scomplex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        debug_assert!(rows.iter().all(|row| row.len() == c));
        let entries = rows
            .into_iter()
            .flatten()
            .map(BigInt::from)
            .collect();
        IntegerMatrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    /// Matrix product, for composition checks like boundary-of-boundary.
    pub fn matmul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntegerMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += c * row[b]
    fn add_row(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(a, j) + c * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// col[a] += c * col[b]
    fn add_col(&mut self, a: usize, b: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, a) + c * self.get(i, b);
            self.set(i, a, v);
        }
    }

    /// (row[a], row[b]) := (x*row[a] + y*row[b], u*row[a] + v*row[b])
    fn combine_rows(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, u: &BigInt, v: &BigInt) {
        for j in 0..self.cols {
            let ra = self.get(a, j).clone();
            let rb = self.get(b, j).clone();
            self.set(a, j, x * &ra + y * &rb);
            self.set(b, j, u * &ra + v * &rb);
        }
    }

    /// (col[a], col[b]) := (x*col[a] + y*col[b], u*col[a] + v*col[b])
    fn combine_cols(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, u: &BigInt, v: &BigInt) {
        for i in 0..self.rows {
            let ca = self.get(i, a).clone();
            let cb = self.get(i, b).clone();
            self.set(i, a, x * &ca + y * &cb);
            self.set(i, b, u * &ca + v * &cb);
        }
    }
}

/// Diagonal of a Smith normal form: nonneg integers d_1 | d_2 | ... with
/// exactly `rank` nonzero entries (listed first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Diagonal entries exceeding 1: the torsion coefficients of the
    /// cokernel restricted to its finite part.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| d.abs() > BigInt::one())
            .cloned()
            .collect()
    }
}

/// Smith normal form by exact integer row/column reduction. The matrix is
/// consumed; the result lists the invariant factors d_1 | d_2 | ....
pub fn smith_normal_form(mut m: IntegerMatrix) -> SnfResult {
    let bound = m.rows.min(m.cols);
    let mut t = 0;
    'stage: while t < bound {
        // Pick the smallest-magnitude nonzero entry of the lower-right
        // submatrix as pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if m.get(i, j).is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if m.get(i, j).abs() < m.get(pi, pj).abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);

        // Clear column t below and row t right of the pivot. Divisible
        // entries go in one exact subtraction; the rest are absorbed by a
        // single unimodular extended-gcd transform that replaces the pivot
        // with a proper divisor of itself, so the number of passes is
        // bounded by a divisor chain and entries cannot blow up through
        // repeated remainder shuffling.
        loop {
            let mut touched = false;
            for i in (t + 1)..m.rows {
                let a = m.get(i, t).clone();
                if a.is_zero() {
                    continue;
                }
                touched = true;
                let b = m.get(t, t).clone();
                if (&a % &b).is_zero() {
                    m.add_row(i, t, &(-(&a / &b)));
                } else {
                    let e = b.extended_gcd(&a);
                    m.combine_rows(t, i, &e.x, &e.y, &(-&a / &e.gcd), &(&b / &e.gcd));
                }
            }
            for j in (t + 1)..m.cols {
                let a = m.get(t, j).clone();
                if a.is_zero() {
                    continue;
                }
                touched = true;
                let b = m.get(t, t).clone();
                if (&a % &b).is_zero() {
                    m.add_col(j, t, &(-(&a / &b)));
                } else {
                    // The column transform refills column t below the
                    // pivot, which the next pass clears again.
                    let e = b.extended_gcd(&a);
                    m.combine_cols(t, j, &e.x, &e.y, &(-&a / &e.gcd), &(&b / &e.gcd));
                }
            }
            if !touched {
                break;
            }
        }

        // Divisibility sweep: fold any non-divisible entry into row t and
        // redo the stage with a smaller pivot.
        for i in (t + 1)..m.rows {
            for j in (t + 1)..m.cols {
                if !m.get(i, j).mod_floor(m.get(t, t)).is_zero() {
                    let one = BigInt::one();
                    m.add_row(t, i, &one);
                    continue 'stage;
                }
            }
        }
        t += 1;
    }

    let mut diagonal: Vec<BigInt> = (0..bound).map(|i| m.get(i, i).abs()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    diagonal.truncate(rank);
    SnfResult { diagonal, rank }
}

/// Boundary matrix from d-faces to (d-1)-faces in lexicographic bases,
/// with alternating signs; d = 0 maps vertices to the empty face, which
/// generates the augmentation degree -1.
pub fn boundary_matrix(k: &SimplicialComplex, d: i32) -> IntegerMatrix {
    let cols_faces = k.faces(Some(d));
    let rows_faces = k.faces(Some(d - 1));
    let index: BTreeMap<Simplex, usize> = rows_faces
        .iter()
        .enumerate()
        .map(|(i, s)| (*s, i))
        .collect();
    let mut m = IntegerMatrix::zero(rows_faces.len(), cols_faces.len());
    for (j, f) in cols_faces.iter().enumerate() {
        for (pos, v) in f.iter().enumerate() {
            let sub = f.without(v);
            let i = index[&sub];
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            m.set(i, j, BigInt::from(sign));
        }
    }
    m
}

/// Reduced homology of one degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: u64,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced integral homology by degree, degrees -1 through dim. Degrees
/// with trivial group are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologySummary {
    pub groups: BTreeMap<i32, HomologyGroup>,
}

impl HomologySummary {
    pub fn rank(&self, d: i32) -> u64 {
        self.groups.get(&d).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, d: i32) -> &[BigInt] {
        self.groups.get(&d).map_or(&[], |g| &g.torsion)
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.torsion.is_empty())
    }
}

/// Reduced integral homology of the complex. The empty complex {empty}
/// has one group: rank 1 in degree -1.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologySummary {
    let dim = k.dim();
    let mut snf_by_degree: BTreeMap<i32, SnfResult> = BTreeMap::new();
    for d in 0..=(dim + 1) {
        snf_by_degree.insert(d, smith_normal_form(boundary_matrix(k, d)));
    }
    let mut groups = BTreeMap::new();
    for d in -1..=dim {
        let chains = k.faces(Some(d)).len() as u64;
        let rank_out = if d >= 0 {
            snf_by_degree[&d].rank as u64
        } else {
            0
        };
        let rank_in = snf_by_degree.get(&(d + 1)).map_or(0, |s| s.rank as u64);
        let rank = chains - rank_out - rank_in;
        let torsion = snf_by_degree
            .get(&(d + 1))
            .map_or_else(Vec::new, |s| s.torsion());
        let g = HomologyGroup { rank, torsion };
        if !g.is_trivial() {
            groups.insert(d, g);
        }
    }
    HomologySummary { groups }
}

/// Coefficient field for Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced cohomology dimensions over the field, by degree; zero entries
/// are omitted. Over F_p the universal coefficient count adds one for each
/// p-divisible torsion coefficient in degrees d and d-1.
pub fn cohomology_dims(k: &SimplicialComplex, field: Field) -> Result<BTreeMap<i32, u64>> {
    let h = reduced_homology(k);
    let mut out = BTreeMap::new();
    match field {
        Field::Rationals => {
            for (&d, g) in &h.groups {
                if g.rank > 0 {
                    out.insert(d, g.rank);
                }
            }
        }
        Field::Fp(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let big_p = BigInt::from(p);
            let t = |d: i32| -> u64 {
                h.torsion(d)
                    .iter()
                    .filter(|c| c.mod_floor(&big_p).is_zero())
                    .count() as u64
            };
            let dim = k.dim();
            for d in -1..=dim {
                let v = h.rank(d) + t(d) + t(d - 1);
                if v > 0 {
                    out.insert(d, v);
                }
            }
        }
    }
    Ok(out)
}
