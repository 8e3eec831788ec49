//! Symbolic wedge summands of the form (iterated suspension) of a smash of
//! looped spheres, indexed by a suspension degree and a vertex support set,
//! with the wedge algebra: suspension, smash, join, half-smash with a
//! torus factor, and sphere realization.

use std::collections::BTreeMap;
use std::fmt;

use crate::scomplex::{binomial, Simplex};
use crate::series::IntPolynomial;
use crate::{Error, Result};

/// A formal wedge of summands Sigma^s Omega(I): suspension degree s >= 1
/// and nonempty vertex support I, with multiplicities. Realizing a summand
/// with loop dimension l gives the sphere S^(s + l * |I|).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicWedge {
    summands: BTreeMap<(u32, Simplex), u64>,
}

/// Shortfall report from `checked_sub`: the minuend lacks copies of one
/// summand class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeDeficit {
    pub s: u32,
    pub index_set: Simplex,
    pub needed: u64,
    pub available: u64,
}

impl SymbolicWedge {
    pub fn empty() -> Self {
        SymbolicWedge::default()
    }

    /// One summand class with a multiplicity; zero multiplicity is dropped.
    pub fn summand(s: u32, index_set: Simplex, mult: u64) -> Self {
        debug_assert!(s >= 1 && !index_set.is_empty());
        let mut w = SymbolicWedge::default();
        w.add(s, index_set, mult);
        w
    }

    pub fn add(&mut self, s: u32, index_set: Simplex, mult: u64) {
        debug_assert!(s >= 1 && !index_set.is_empty());
        if mult > 0 {
            *self.summands.entry((s, index_set)).or_insert(0) += mult;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Summands in (s, I) order: ((s, index set), multiplicity).
    pub fn summands(&self) -> impl Iterator<Item = (&(u32, Simplex), &u64)> {
        self.summands.iter()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn multiplicity(&self, s: u32, index_set: Simplex) -> u64 {
        self.summands.get(&(s, index_set)).copied().unwrap_or(0)
    }

    /// Union of all summand supports.
    pub fn support(&self) -> Simplex {
        self.summands
            .keys()
            .fold(Simplex::EMPTY, |acc, (_, i)| acc.union(i))
    }

    /// Wedge sum: multiplicities add.
    pub fn wedge(&self, other: &SymbolicWedge) -> SymbolicWedge {
        let mut out = self.clone();
        for (&(s, i), &m) in &other.summands {
            out.add(s, i, m);
        }
        out
    }

    /// Suspend k times: each (s, I) becomes (s + k, I).
    pub fn suspend(&self, k: u32) -> SymbolicWedge {
        let mut out = SymbolicWedge::default();
        for (&(s, i), &m) in &self.summands {
            out.add(s + k, i, m);
        }
        out
    }

    /// Smash product, defined when the supports of the two wedges are
    /// disjoint: summand pairs combine to (s1 + s2, I1 union I2) with
    /// multiplied multiplicities.
    pub fn smash(&self, other: &SymbolicWedge) -> Result<SymbolicWedge> {
        let (sl, sr) = (self.support(), other.support());
        if !sl.intersect(&sr).is_empty() {
            return Err(Error::OverlappingSupports {
                left: sl,
                right: sr,
            });
        }
        let mut out = SymbolicWedge::default();
        for (&(s1, i1), &m1) in &self.summands {
            for (&(s2, i2), &m2) in &other.summands {
                out.add(s1 + s2, i1.union(&i2), m1 * m2);
            }
        }
        Ok(out)
    }

    /// Join: suspension of the smash product.
    pub fn join(&self, other: &SymbolicWedge) -> Result<SymbolicWedge> {
        Ok(self.smash(other)?.suspend(1))
    }

    /// Subtract the other wedge summand-wise, failing with the first
    /// deficit in (s, I) order.
    pub fn checked_sub(&self, other: &SymbolicWedge) -> std::result::Result<SymbolicWedge, WedgeDeficit> {
        let mut out = self.clone();
        for (&(s, i), &needed) in &other.summands {
            let available = out.multiplicity(s, i);
            if available < needed {
                return Err(WedgeDeficit {
                    s,
                    index_set: i,
                    needed,
                    available,
                });
            }
            if available == needed {
                out.summands.remove(&(s, i));
            } else {
                out.summands.insert((s, i), available - needed);
            }
        }
        Ok(out)
    }

    /// Rename support vertices through an injective map covering every
    /// support vertex.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<SymbolicWedge> {
        let mut out = SymbolicWedge::default();
        for (&(s, i), &m) in &self.summands {
            let mut verts = Vec::with_capacity(i.size() as usize);
            for v in i.iter() {
                let &w = map.get(&v).ok_or_else(|| {
                    Error::BadParameter(format!("vertex {v} has no relabeling"))
                })?;
                verts.push(w);
            }
            out.add(s, Simplex::new(&verts)?, m);
        }
        Ok(out)
    }

    /// Realize each summand as a sphere, with every looped factor a loop
    /// space of a sphere of dimension loop_dim + 1. Only loop_dim 1 and 3
    /// keep looped spheres indistinguishable from their bottom cells in
    /// this bookkeeping, so other values are rejected.
    pub fn realize(&self, loop_dim: u32) -> Result<SphereWedge> {
        if loop_dim != 1 && loop_dim != 3 {
            return Err(Error::BadParameter(format!(
                "loop dimension must be 1 or 3, got {loop_dim}"
            )));
        }
        let mut dims = BTreeMap::new();
        for (&(s, i), &m) in &self.summands {
            let d = s + loop_dim * i.size();
            *dims.entry(d).or_insert(0) += m;
        }
        Ok(SphereWedge { dims })
    }
}

impl fmt::Display for SymbolicWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "*");
        }
        for (k, (&(s, i), &m)) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "Sigma^{s} Omega{i}")?;
            if m != 1 {
                write!(f, " x{m}")?;
            }
        }
        Ok(())
    }
}

/// A finite wedge of spheres, recorded as dimension -> count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SphereWedge {
    dims: BTreeMap<u32, u64>,
}

impl SphereWedge {
    pub fn empty() -> Self {
        SphereWedge::default()
    }

    pub fn add(&mut self, dim: u32, count: u64) {
        if count > 0 {
            *self.dims.entry(dim).or_insert(0) += count;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// (dimension, count) pairs in increasing dimension.
    pub fn dims(&self) -> impl Iterator<Item = (&u32, &u64)> {
        self.dims.iter()
    }

    pub fn count(&self, dim: u32) -> u64 {
        self.dims.get(&dim).copied().unwrap_or(0)
    }

    pub fn union(&self, other: &SphereWedge) -> SphereWedge {
        let mut out = self.clone();
        for (&d, &c) in &other.dims {
            out.add(d, c);
        }
        out
    }

    /// Generating polynomial: sum of count * t^dim.
    pub fn poincare(&self) -> IntPolynomial {
        let mut p = IntPolynomial::zero();
        for (&d, &c) in &self.dims {
            p = p.add(&IntPolynomial::monomial(c as i64, d as usize));
        }
        p
    }
}

impl fmt::Display for SphereWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "point");
        }
        for (k, (&d, &c)) in self.dims.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "S^{d} x{c}")?;
        }
        Ok(())
    }
}

/// Smash the wedge with the looped-sphere torus factor over the vertex set
/// J (disjoint from the wedge's support): each summand (s, I) spreads over
/// the nonempty subsets U of J as (s, I union U).
pub fn smash_with_torus(w: &SymbolicWedge, j: &Simplex) -> Result<SymbolicWedge> {
    if !w.support().intersect(j).is_empty() {
        return Err(Error::OverlappingSupports {
            left: w.support(),
            right: *j,
        });
    }
    let mut out = SymbolicWedge::default();
    for (&(s, i), &m) in &w.summands {
        for u in j.subsets() {
            if !u.is_empty() {
                out.add(s, i.union(&u), m);
            }
        }
    }
    Ok(out)
}

/// Right half-smash with the torus factor over J: the wedge itself plus
/// its torus spread.
pub fn half_smash_right(w: &SymbolicWedge, j: &Simplex) -> Result<SymbolicWedge> {
    Ok(w.wedge(&smash_with_torus(w, j)?))
}

/// Left half-smash: same decomposition with the torus factor on the left.
pub fn half_smash_left(j: &Simplex, w: &SymbolicWedge) -> Result<SymbolicWedge> {
    half_smash_right(w, j)
}

/// Join of the torus factors over two disjoint vertex sets: one summand
/// (1, U union V) for each pair of nonempty U in J1, V in J2.
pub fn torus_join_torus(j1: &Simplex, j2: &Simplex) -> Result<SymbolicWedge> {
    if !j1.intersect(j2).is_empty() {
        return Err(Error::OverlappingSupports {
            left: *j1,
            right: *j2,
        });
    }
    let mut out = SymbolicWedge::default();
    for u in j1.subsets() {
        if u.is_empty() {
            continue;
        }
        for v in j2.subsets() {
            if !v.is_empty() {
                out.add(1, u.union(&v), 1);
            }
        }
    }
    Ok(out)
}

/// Homotopy fibre of the inclusion of the q-skeletal coordinate subspace
/// complement, on the ground set {1..n} with q = k: summands
/// (n - k, I, C(|I| - 1, n - k)) over supports I with
/// n - k + 1 <= |I| <= n. Requires 1 <= k <= n - 1.
pub fn porter_fibre(n: u32, k: u32) -> Result<SymbolicWedge> {
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::BadParameter(format!(
            "fibre parameters need 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    porter_fibre_on(&Simplex::full_range(n), k)
}

/// Same fibre wedge over an arbitrary ground set of size n.
pub fn porter_fibre_on(ground: &Simplex, k: u32) -> Result<SymbolicWedge> {
    let n = ground.size();
    if n < 2 || k < 1 || k > n - 1 {
        return Err(Error::BadParameter(format!(
            "fibre parameters need 1 <= k <= n - 1, got n = {n}, k = {k}"
        )));
    }
    let s = n - k;
    let mut out = SymbolicWedge::default();
    for i in ground.subsets() {
        let sz = i.size();
        if sz >= s + 1 {
            out.add(s, i, binomial(sz - 1, s));
        }
    }
    Ok(out)
}
