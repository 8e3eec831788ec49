//! Wedge decomposition of the moment-angle complex over a shifted
//! complex: regular sequences of coordinate-subspace adjunctions, the
//! fibre transformation of each step, the null/retract split of the link
//! fibre, and the recursive decomposition itself.

use std::collections::BTreeMap;
use std::fmt;

use crate::scomplex::{interval, ShiftMode, ShiftWitness, Simplex, SimplicialComplex};
use crate::wedge::{
    half_smash_left, half_smash_right, porter_fibre_on, smash_with_torus, torus_join_torus,
    SymbolicWedge,
};
use crate::{Error, Result};

/// Where a regular-sequence step comes from: edges at the base vertex, the
/// vertex-free preparation face, or the face itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepPhase {
    Iteration1,
    Iteration2Pre,
    Iteration2Main,
}

impl fmt::Display for StepPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepPhase::Iteration1 => write!(f, "iteration1"),
            StepPhase::Iteration2Pre => write!(f, "iteration2_pre"),
            StepPhase::Iteration2Main => write!(f, "iteration2_main"),
        }
    }
}

/// One adjunction step: the face being adjoined (vertex set I), the
/// ground vertices preceding all of I (S, the product coordinates of the
/// partial subspace), and the remaining vertices (T). I, S, T partition
/// the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularStep {
    pub simplex: Simplex,
    pub s_set: Simplex,
    pub t_set: Simplex,
    pub phase: StepPhase,
}

/// Fibre bookkeeping for one step: the newly created wedge C, the retracted
/// wedge D, the surviving part E = F_before minus D, and
/// F_after = (suspension of C) wedge E.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    pub step: RegularStep,
    pub c: SymbolicWedge,
    pub d: SymbolicWedge,
    pub e: SymbolicWedge,
    pub f_before: SymbolicWedge,
    pub f_after: SymbolicWedge,
}

/// The full fibre history of a regular sequence: the starting fibre of the
/// vertex-only complex, every step trace, and the final fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreTrace {
    pub initial: SymbolicWedge,
    pub steps: Vec<StepTrace>,
    pub fibre: SymbolicWedge,
}

/// Partition of the link fibre: summands on which the comparison map is
/// null homotopic versus summands that retract off the deleted-vertex
/// fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSplit {
    pub trivial_part: SymbolicWedge,
    pub retract_part: SymbolicWedge,
}

fn validate(k: &SimplicialComplex) -> Result<()> {
    if let Some(g) = k.ghost_vertices().min_vertex() {
        return Err(Error::GhostVertex { vertex: g });
    }
    let verdict = k.is_shifted(ShiftMode::GivenOrder)?;
    if let ShiftWitness::Violation { face, v, v_prime } = verdict.witness {
        return Err(Error::NotShifted { face, v, v_prime });
    }
    Ok(())
}

/// Add a singleton face for every ghost vertex, leaving other faces alone.
fn pad_isolated(k: &SimplicialComplex) -> SimplicialComplex {
    let ghosts = k.ghost_vertices();
    if ghosts.is_empty() {
        return k.clone();
    }
    let mut faces: Vec<Simplex> = k.maximal_faces().to_vec();
    for g in ghosts.iter() {
        faces.push(Simplex::single(g));
    }
    SimplicialComplex::from_parts(k.ground(), faces)
}

fn adjoin(partial: &SimplicialComplex, face: Simplex) -> SimplicialComplex {
    let mut faces = partial.maximal_faces().to_vec();
    faces.push(face);
    SimplicialComplex::from_parts(partial.ground(), faces)
}

fn make_step(ground: Simplex, face: Simplex, phase: StepPhase) -> RegularStep {
    // S holds every ground vertex smaller than all of the adjoined face:
    // earlier steps have already filled in those coordinates (directly for
    // the base vertex, recursively for the ones after it), so the partial
    // subspace is a product over them. Using the literal cone vertices of
    // the partial complex instead can under-count S and makes the fibre
    // subtraction in construction_step fail on shifted input as small as
    // the cone over the edge graph of a tetrahedron.
    let first = face.min_vertex().unwrap_or(1);
    let s_set = ground.intersect(&interval(1, first.saturating_sub(1)));
    let t_set = ground.difference(&face).difference(&s_set);
    RegularStep {
        simplex: face,
        s_set,
        t_set,
        phase,
    }
}

/// The sequence of coordinate-subspace adjunctions carrying the vertex-only
/// complex to the closed star of the least vertex v0: first the edges at
/// v0 in increasing order, then each larger face of the star ordered by
/// size then lexicographically, preceded by its v0-free companion when
/// that is not yet present. Each step records its S/T split of the
/// vertices outside the adjoined face.
pub fn build_regular_sequence(k: &SimplicialComplex) -> Result<Vec<RegularStep>> {
    validate(k)?;
    let ground = k.ground();
    let Some(v0) = ground.min_vertex() else {
        return Ok(vec![]);
    };
    let mut partial =
        SimplicialComplex::from_parts(ground, ground.iter().map(Simplex::single).collect());
    let mut steps = Vec::new();
    for j in ground.iter() {
        if j == v0 {
            continue;
        }
        let edge = Simplex::single(v0).with(j);
        if !k.contains(&edge) {
            continue;
        }
        steps.push(make_step(ground, edge, StepPhase::Iteration1));
        partial = adjoin(&partial, edge);
    }
    let star = k.star(&Simplex::single(v0))?;
    let mut faces: Vec<Simplex> = star
        .faces(None)
        .into_iter()
        .filter(|f| f.contains(v0) && f.size() >= 3)
        .collect();
    faces.sort_by_key(|f| (f.size(), *f));
    for f in faces {
        let pre = f.without(v0);
        if !partial.contains(&pre) {
            steps.push(make_step(ground, pre, StepPhase::Iteration2Pre));
            partial = adjoin(&partial, pre);
        }
        if !partial.contains(&f) {
            steps.push(make_step(ground, f, StepPhase::Iteration2Main));
            partial = adjoin(&partial, f);
        }
    }
    Ok(steps)
}

/// Transform the fibre across one adjunction. With Y the summand for the
/// joined loop spaces over I (suspension degree |I| - 1):
/// C spreads Y over a nonempty subset of S and any subset of T,
/// D = Y spread over subsets of T only, E = F_before minus D, and
/// F_after = (suspension of C) wedge E. A missing copy of D in F_before
/// means the step was not regular and is reported as an error.
pub fn construction_step(f_before: &SymbolicWedge, step: &RegularStep) -> Result<StepTrace> {
    let i = step.simplex;
    if i.size() < 2 {
        return Err(Error::BadParameter(format!(
            "adjoined face needs at least 2 vertices, got {i}"
        )));
    }
    let y = SymbolicWedge::summand(i.size() - 1, i, 1);
    let c = if step.s_set.is_empty() {
        SymbolicWedge::empty()
    } else {
        let spread = smash_with_torus(&y, &step.s_set)?;
        half_smash_right(&spread, &step.t_set)?
    };
    let d = half_smash_right(&y, &step.t_set)?;
    let e = f_before.checked_sub(&d).map_err(|deficit| Error::NonRegularStep {
        face: i,
        missing: format!(
            "fibre holds {} of Sigma^{} Omega{} but the step retracts {}",
            deficit.available, deficit.s, deficit.index_set, deficit.needed
        ),
    })?;
    let f_after = c.suspend(1).wedge(&e);
    Ok(StepTrace {
        step: step.clone(),
        c,
        d,
        e,
        f_before: f_before.clone(),
        f_after,
    })
}

/// Run the whole regular sequence, starting from the fibre of the
/// vertex-only complex, and keep every step's bookkeeping.
pub fn star_fibre_trace(k: &SimplicialComplex) -> Result<FibreTrace> {
    let steps = build_regular_sequence(k)?;
    let n = k.n();
    let initial = if n >= 2 {
        porter_fibre_on(&k.ground(), n - 1)?
    } else {
        SymbolicWedge::empty()
    };
    let mut fibre = initial.clone();
    let mut traces = Vec::with_capacity(steps.len());
    for step in &steps {
        let trace = construction_step(&fibre, step)?;
        fibre = trace.f_after.clone();
        traces.push(trace);
    }
    Ok(FibreTrace {
        initial,
        steps: traces,
        fibre,
    })
}

/// Witness count for the wedge class (s, I'): faces sigma of the link
/// complex with |sigma| = s, sigma inside I' avoiding w = min I', whose
/// extension by w leaves the link. Each witness is classed trivial when
/// the extension is a face of the ambient complex, else retract.
fn witness_split(
    k: &SimplicialComplex,
    link: &SimplicialComplex,
) -> (SymbolicWedge, SymbolicWedge) {
    let mut trivial = SymbolicWedge::empty();
    let mut retract = SymbolicWedge::empty();
    for iprime in link.ground().subsets() {
        if iprime.size() < 2 {
            continue;
        }
        let w = iprime.min_vertex().unwrap();
        for sigma in iprime.without(w).subsets() {
            if sigma.is_empty() || !link.contains(&sigma) || link.contains(&sigma.with(w)) {
                continue;
            }
            if k.contains(&sigma.with(w)) {
                trivial.add(sigma.size(), iprime, 1);
            } else {
                retract.add(sigma.size(), iprime, 1);
            }
        }
    }
    (trivial, retract)
}

/// Split the link fibre of the least vertex into its null part and its
/// retracting part. The two parts always recombine to the decomposition
/// of the (ghost-padded) link.
pub fn split_theta(k: &SimplicialComplex) -> Result<ThetaSplit> {
    validate(k)?;
    let ground = k.ground();
    let Some(v0) = ground.min_vertex() else {
        return Ok(ThetaSplit {
            trivial_part: SymbolicWedge::empty(),
            retract_part: SymbolicWedge::empty(),
        });
    };
    let link = pad_isolated(&k.link(&Simplex::single(v0))?);
    let (trivial_part, retract_part) = witness_split(k, &link);
    let mut memo = BTreeMap::new();
    let link_wedge = decompose_inner(&link, &mut memo)?;
    if trivial_part.wedge(&retract_part) != link_wedge {
        return Err(Error::Internal(format!(
            "fibre split [{trivial_part}] + [{retract_part}] does not recombine to [{link_wedge}]"
        )));
    }
    Ok(ThetaSplit {
        trivial_part,
        retract_part,
    })
}

type MemoKey = (u64, Vec<u64>);

fn memo_key(k: &SimplicialComplex) -> MemoKey {
    (
        k.ground().mask(),
        k.maximal_faces().iter().map(|m| m.mask()).collect(),
    )
}

fn decompose_inner(
    k: &SimplicialComplex,
    memo: &mut BTreeMap<MemoKey, SymbolicWedge>,
) -> Result<SymbolicWedge> {
    let key = memo_key(k);
    if let Some(w) = memo.get(&key) {
        return Ok(w.clone());
    }
    let out = decompose_uncached(k, memo)?;
    memo.insert(key, out.clone());
    Ok(out)
}

fn decompose_uncached(
    k: &SimplicialComplex,
    memo: &mut BTreeMap<MemoKey, SymbolicWedge>,
) -> Result<SymbolicWedge> {
    if k.is_full_simplex() {
        return Ok(SymbolicWedge::empty());
    }
    let ground = k.ground();
    let iso = k.isolated_vertices();
    if !iso.is_empty() {
        // Disjoint union of a head complex and trailing isolated points.
        let (head, tail) = if iso == ground {
            let v0 = ground.min_vertex().unwrap();
            (Simplex::single(v0), ground.without(v0))
        } else {
            (ground.difference(&iso), iso)
        };
        let w_head = decompose_inner(&k.restrict(&head)?, memo)?;
        let w_tail = decompose_inner(&k.restrict(&tail)?, memo)?;
        let joined = torus_join_torus(&head, &tail)?;
        let from_head = half_smash_right(&w_head, &tail)?;
        let from_tail = half_smash_left(&head, &w_tail)?;
        return Ok(joined.wedge(&from_head).wedge(&from_tail));
    }

    // Connected: recurse on the least vertex through the deleted complex
    // and the link.
    let v0 = ground.min_vertex().expect("nonempty ground");
    let rest = k.restrict(&ground.without(v0))?;
    let w_rest = decompose_inner(&rest, memo)?;
    let link = pad_isolated(&k.link(&Simplex::single(v0))?);
    let w_link = decompose_inner(&link, memo)?;
    let (trivial, retract) = witness_split(k, &link);
    if trivial.wedge(&retract) != w_link {
        return Err(Error::Internal(format!(
            "fibre split [{trivial}] + [{retract}] does not recombine to [{w_link}]"
        )));
    }
    // The retracting part embeds in the deleted-complex wedge; the
    // remainder G survives unsuspended with v0 added to its support, while
    // the null part suspends once and gains v0.
    let g = w_rest.checked_sub(&retract).map_err(|deficit| {
        Error::Internal(format!(
            "retract part wants {} of Sigma^{} Omega{} but the deleted complex offers {}",
            deficit.needed, deficit.s, deficit.index_set, deficit.available
        ))
    })?;
    let mut out = w_rest.clone();
    for (&(s, i), &m) in g.summands() {
        out.add(s, i.with(v0), m);
    }
    for (&(s, i), &m) in trivial.summands() {
        out.add(s + 1, i.with(v0), m);
    }
    Ok(out)
}

/// The wedge decomposition of the moment-angle complex over K. K must be
/// shifted in its given vertex order and have no ghost vertices. Every
/// summand multiplicity matches the oracle rank at the same support and
/// degree.
pub fn decompose(k: &SimplicialComplex) -> Result<SymbolicWedge> {
    validate(k)?;
    decompose_inner(k, &mut BTreeMap::new())
}
