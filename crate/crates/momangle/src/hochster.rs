//! Cohomology oracle for the moment-angle complex over K: reduced
//! cohomology of every full subcomplex K_sigma, assembled into bigraded
//! Betti numbers with torsion flags, plus the resulting Poincare
//! polynomial and sphere-wedge candidate.
//!
//! The bigraded table is ground truth: the reduced cohomology of the
//! moment-angle complex in degree d is the direct sum over vertex subsets
//! sigma of the reduced cohomology of K_sigma in degree d - |sigma| - 1.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::scomplex::{Simplex, SimplicialComplex};
use crate::series::IntPolynomial;
use crate::wedge::SphereWedge;
use crate::zhomology::reduced_homology;
use crate::{Error, Result};

/// Subset enumeration is 2^n; refuse beyond this many vertices.
pub const ORACLE_VERTEX_CAP: u32 = 20;

/// Bigraded Betti numbers of the moment-angle complex: rational rank per
/// (vertex subset, total degree), plus flags marking integral torsion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedBetti {
    entries: BTreeMap<(Simplex, u32), u64>,
    torsion_flags: BTreeSet<(Simplex, u32)>,
}

impl BigradedBetti {
    /// Ranks keyed by (sigma, degree), nonzero entries only, sorted.
    pub fn entries(&self) -> impl Iterator<Item = (&(Simplex, u32), &u64)> {
        self.entries.iter()
    }

    pub fn rank(&self, sigma: Simplex, d: u32) -> u64 {
        self.entries.get(&(sigma, d)).copied().unwrap_or(0)
    }

    /// (sigma, degree) keys where the integral cohomology has torsion.
    pub fn torsion_flags(&self) -> impl Iterator<Item = &(Simplex, u32)> {
        self.torsion_flags.iter()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion_flags.is_empty()
    }

    /// Total rank per degree, summed over subsets.
    pub fn rank_by_degree(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (&(_, d), &r) in &self.entries {
            *out.entry(d).or_insert(0) += r;
        }
        out
    }

    /// Sum of t^degree weighted by total rank.
    pub fn poincare(&self) -> IntPolynomial {
        let mut p = IntPolynomial::zero();
        for (d, r) in self.rank_by_degree() {
            p = p.add(&IntPolynomial::monomial(r as i64, d as usize));
        }
        p
    }
}

fn subset_contribution(k: &SimplicialComplex, sigma: Simplex) -> (Vec<(Simplex, u32, u64)>, Vec<(Simplex, u32)>) {
    let restricted = k
        .restrict(&sigma)
        .expect("sigma is a subset of the ground set");
    let h = reduced_homology(&restricted);
    let shift = sigma.size();
    let mut ranks = Vec::new();
    let mut torsion = Vec::new();
    for (&i, g) in &h.groups {
        // Degree i homology contributes rank in cohomology degree i and,
        // through universal coefficients, torsion in degree i + 1.
        if g.rank > 0 {
            ranks.push((sigma, (i + 1 + shift as i32) as u32, g.rank));
        }
        if !g.torsion.is_empty() {
            torsion.push((sigma, (i + 2 + shift as i32) as u32));
        }
    }
    (ranks, torsion)
}

/// Bigraded Betti table over all nonempty vertex subsets. The empty
/// subset carries only the unit class and is omitted. Subsets are
/// processed in parallel and merged in key order, so the result is
/// independent of scheduling.
pub fn bigraded_betti(k: &SimplicialComplex) -> Result<BigradedBetti> {
    let n = k.n();
    if n > ORACLE_VERTEX_CAP {
        return Err(Error::SizeLimit {
            what: "oracle ground set vertices",
            limit: ORACLE_VERTEX_CAP as u64,
            got: n as u64,
        });
    }
    let ground: Vec<u32> = k.ground().vertices();
    let total = 1u64 << n;
    let per_subset: Vec<_> = (1..total)
        .into_par_iter()
        .map(|bits| {
            let mut sigma = Simplex::EMPTY;
            for (pos, &v) in ground.iter().enumerate() {
                if bits & (1 << pos) != 0 {
                    sigma = sigma.with(v);
                }
            }
            subset_contribution(k, sigma)
        })
        .collect();

    let mut entries = BTreeMap::new();
    let mut torsion_flags = BTreeSet::new();
    for (ranks, torsion) in per_subset {
        for (sigma, d, r) in ranks {
            *entries.entry((sigma, d)).or_insert(0) += r;
        }
        for key in torsion {
            torsion_flags.insert(key);
        }
    }
    Ok(BigradedBetti {
        entries,
        torsion_flags,
    })
}

/// Summary of the oracle for one complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZkProfile {
    /// Reduced Poincare polynomial of the moment-angle complex.
    pub poincare: IntPolynomial,
    /// No integral torsion over any full subcomplex.
    pub torsion_free: bool,
    /// When torsion-free: the only sphere wedge with matching cohomology.
    /// A necessary condition for wedge type, not a proof of it.
    pub sphere_candidate: Option<SphereWedge>,
}

/// Compute the oracle profile: Poincare polynomial, torsion verdict,
/// and (when torsion-free) the candidate wedge of spheres.
pub fn zk_profile(k: &SimplicialComplex) -> Result<ZkProfile> {
    let betti = bigraded_betti(k)?;
    let torsion_free = betti.is_torsion_free();
    let sphere_candidate = torsion_free.then(|| {
        let mut w = SphereWedge::empty();
        for (d, r) in betti.rank_by_degree() {
            w.add(d, r);
        }
        w
    });
    Ok(ZkProfile {
        poincare: betti.poincare(),
        torsion_free,
        sphere_candidate,
    })
}
