//! Closure operations on complexes with known sphere-wedge data: disjoint
//! union, gluing along a common face, and join, each transforming the
//! wedge data of the inputs and tracking the suspension certificate level
//! t (the result is certified a wedge after t suspensions).

use crate::decomposer::decompose;
use crate::scomplex::{binomial, CombineLayout, Simplex, SimplicialComplex};
use crate::series::IntPolynomial;
use crate::wedge::{
    half_smash_left, half_smash_right, torus_join_torus, SphereWedge, SymbolicWedge,
};
use crate::Result;

/// Sphere data of a moment-angle complex: either the support-indexed
/// symbolic form or plain virtual sphere dimensions (the symbolic form
/// realized with circle factors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyWedge {
    Symbolic(SymbolicWedge),
    Virtual(SphereWedge),
}

impl FamilyWedge {
    /// Sphere dimensions with every looped factor a loop space of a
    /// 2-sphere (the realization used for oracle comparison).
    pub fn virtual_dims(&self) -> SphereWedge {
        match self {
            FamilyWedge::Symbolic(w) => w.realize(1).expect("loop dimension 1 is valid"),
            FamilyWedge::Virtual(d) => d.clone(),
        }
    }

    pub fn poincare(&self) -> IntPolynomial {
        self.virtual_dims().poincare()
    }

    pub fn is_empty(&self) -> bool {
        match self {
            FamilyWedge::Symbolic(w) => w.is_empty(),
            FamilyWedge::Virtual(d) => d.is_empty(),
        }
    }
}

/// A complex together with sphere-wedge data for its moment-angle complex,
/// certified to hold after t suspensions (t = 0 means an honest wedge
/// decomposition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyElement {
    pub t: u32,
    pub complex: SimplicialComplex,
    pub wedge: FamilyWedge,
}

impl FamilyElement {
    /// Enter the family at level t = 0 by decomposing a shifted complex.
    pub fn from_shifted(k: &SimplicialComplex) -> Result<Self> {
        let w = decompose(k)?;
        Ok(FamilyElement {
            t: 0,
            complex: k.clone(),
            wedge: FamilyWedge::Symbolic(w),
        })
    }
}

/// Spread every sphere over the nonempty subsets of a torus block of the
/// given size: (d, c) contributes (d + u, c * C(size, u)) for u = 1..size.
fn virtual_smash_torus(d: &SphereWedge, size: u32) -> SphereWedge {
    let mut out = SphereWedge::empty();
    for (&dim, &c) in d.dims() {
        for u in 1..=size {
            out.add(dim + u, c * binomial(size, u));
        }
    }
    out
}

/// Virtual dimensions of the join of two torus blocks: spheres of
/// dimension 1 + u + v with multiplicity C(m, u) * C(n, v).
fn virtual_torus_join(m: u32, n: u32) -> SphereWedge {
    let mut out = SphereWedge::empty();
    for u in 1..=m {
        for v in 1..=n {
            out.add(1 + u + v, binomial(m, u) * binomial(n, v));
        }
    }
    out
}

fn relabeled_symbolic(
    w: &FamilyWedge,
    map: &std::collections::BTreeMap<u32, u32>,
) -> Option<SymbolicWedge> {
    match w {
        FamilyWedge::Symbolic(sw) => Some(sw.relabel(map).expect("layout maps cover the ground")),
        FamilyWedge::Virtual(_) => None,
    }
}

fn glued_wedge(
    e1: &FamilyElement,
    e2: &FamilyElement,
    layout: &CombineLayout,
) -> Result<FamilyWedge> {
    let j_m: Simplex = layout.left_only;
    let j_n: Simplex = layout.right_only;
    match (
        relabeled_symbolic(&e1.wedge, &layout.map1),
        relabeled_symbolic(&e2.wedge, &layout.map2),
    ) {
        (Some(w1), Some(w2)) => {
            let joined = torus_join_torus(&j_m, &j_n)?;
            let from_right = half_smash_left(&j_m, &w2)?;
            let from_left = half_smash_right(&w1, &j_n)?;
            Ok(FamilyWedge::Symbolic(
                joined.wedge(&from_right).wedge(&from_left),
            ))
        }
        _ => {
            let d1 = e1.wedge.virtual_dims();
            let d2 = e2.wedge.virtual_dims();
            let mut out = virtual_torus_join(j_m.size(), j_n.size());
            out = out.union(&d2).union(&virtual_smash_torus(&d2, j_m.size()));
            out = out.union(&d1).union(&virtual_smash_torus(&d1, j_n.size()));
            Ok(FamilyWedge::Virtual(out))
        }
    }
}

/// Glue along a common face given as (left vertex, right vertex) pairs;
/// empty pairs mean disjoint union. The certificate level is the maximum
/// of the input levels; the wedge combines the torus join of the two
/// private vertex blocks with each input wedge half-smashed against the
/// other side's block.
pub fn op_glue(
    e1: &FamilyElement,
    e2: &FamilyElement,
    pairs: &[(u32, u32)],
) -> Result<FamilyElement> {
    let (complex, layout) = SimplicialComplex::glue_with_layout(&e1.complex, &e2.complex, pairs)?;
    let wedge = glued_wedge(e1, e2, &layout)?;
    Ok(FamilyElement {
        t: e1.t.max(e2.t),
        complex,
        wedge,
    })
}

/// Disjoint union: gluing along the empty face.
pub fn op_disjoint_union(e1: &FamilyElement, e2: &FamilyElement) -> Result<FamilyElement> {
    op_glue(e1, e2, &[])
}

/// Join: the moment-angle complex becomes a product, so one suspension
/// splits it as W1 wedge W2 wedge their smash; the certificate level is
/// max + 1.
pub fn op_join(e1: &FamilyElement, e2: &FamilyElement) -> Result<FamilyElement> {
    let (complex, layout) = SimplicialComplex::join_with_layout(&e1.complex, &e2.complex)?;
    let wedge = match (
        relabeled_symbolic(&e1.wedge, &layout.map1),
        relabeled_symbolic(&e2.wedge, &layout.map2),
    ) {
        (Some(w1), Some(w2)) => {
            let cross = w1.smash(&w2)?;
            FamilyWedge::Symbolic(w1.wedge(&w2).wedge(&cross))
        }
        _ => {
            let d1 = e1.wedge.virtual_dims();
            let d2 = e2.wedge.virtual_dims();
            let mut out = d1.union(&d2);
            for (&a, &ca) in d1.dims() {
                for (&b, &cb) in d2.dims() {
                    out.add(a + b, ca * cb);
                }
            }
            FamilyWedge::Virtual(out)
        }
    };
    Ok(FamilyElement {
        t: e1.t.max(e2.t) + 1,
        complex,
        wedge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochster::zk_profile;

    fn k(n: u32, faces: &[&[u32]]) -> SimplicialComplex {
        let v: Vec<Vec<u32>> = faces.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::construct(n, &v).unwrap()
    }

    fn sx(verts: &[u32]) -> Simplex {
        Simplex::new(verts).unwrap()
    }

    fn sym(e: &FamilyElement) -> &SymbolicWedge {
        match &e.wedge {
            FamilyWedge::Symbolic(w) => w,
            FamilyWedge::Virtual(_) => panic!("expected symbolic data"),
        }
    }

    #[test]
    fn glue_triangles_along_edge() {
        let tri = FamilyElement::from_shifted(&k(3, &[&[1, 2, 3]])).unwrap();
        let out = op_glue(&tri, &tri, &[(2, 1), (3, 2)]).unwrap();
        assert_eq!(out.t, 0);
        assert_eq!(out.complex, k(4, &[&[1, 2, 3], &[2, 3, 4]]));
        let w = sym(&out);
        assert_eq!(w.multiplicity(1, sx(&[1, 4])), 1);
        assert_eq!(w.total_multiplicity(), 1);
        assert_eq!(out.wedge.poincare(), zk_profile(&out.complex).unwrap().poincare);
    }

    #[test]
    fn union_edge_and_point() {
        let edge = FamilyElement::from_shifted(&k(2, &[&[1, 2]])).unwrap();
        let point = FamilyElement::from_shifted(&k(1, &[&[1]])).unwrap();
        let out = op_disjoint_union(&edge, &point).unwrap();
        let w = sym(&out);
        assert_eq!(w.multiplicity(1, sx(&[1, 3])), 1);
        assert_eq!(w.multiplicity(1, sx(&[2, 3])), 1);
        assert_eq!(w.multiplicity(1, sx(&[1, 2, 3])), 1);
        assert_eq!(w.total_multiplicity(), 3);
        // Same wedge the direct decomposition produces.
        assert_eq!(w, &decompose(&out.complex).unwrap());
    }

    #[test]
    fn union_point_point() {
        let point = FamilyElement::from_shifted(&k(1, &[&[1]])).unwrap();
        let out = op_disjoint_union(&point, &point).unwrap();
        let w = sym(&out);
        assert_eq!(w.multiplicity(1, sx(&[1, 2])), 1);
        assert_eq!(w.total_multiplicity(), 1);
    }

    #[test]
    fn union_with_empty_complex_is_identity() {
        let edge = FamilyElement::from_shifted(&k(2, &[&[1, 2]])).unwrap();
        let nothing = FamilyElement::from_shifted(&SimplicialComplex::construct(0, &[]).unwrap())
            .unwrap();
        let out = op_disjoint_union(&edge, &nothing).unwrap();
        assert_eq!(out.complex, edge.complex);
        assert_eq!(out.wedge, edge.wedge);
    }

    #[test]
    fn glue_face_into_containing_complex() {
        // Gluing a bare edge onto an edge of the path changes nothing but
        // labels.
        let path = FamilyElement::from_shifted(&k(3, &[&[1, 2], &[1, 3]])).unwrap();
        let edge = FamilyElement::from_shifted(&k(2, &[&[1, 2]])).unwrap();
        let out = op_glue(&path, &edge, &[(1, 1), (2, 2)]).unwrap();
        let w = sym(&out);
        assert_eq!(w.total_multiplicity(), 1);
        assert_eq!(
            out.wedge.poincare(),
            zk_profile(&out.complex).unwrap().poincare
        );
    }

    #[test]
    fn join_two_point_pairs_is_four_cycle() {
        let pts = FamilyElement::from_shifted(&k(2, &[&[1], &[2]])).unwrap();
        let out = op_join(&pts, &pts).unwrap();
        assert_eq!(out.t, 1);
        assert_eq!(
            out.complex,
            k(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        let w = sym(&out);
        assert_eq!(w.multiplicity(1, sx(&[1, 2])), 1);
        assert_eq!(w.multiplicity(1, sx(&[3, 4])), 1);
        assert_eq!(w.multiplicity(2, sx(&[1, 2, 3, 4])), 1);
        // The four-cycle oracle: spheres in dimensions 3, 3, 6.
        assert_eq!(
            out.wedge.poincare(),
            zk_profile(&out.complex).unwrap().poincare
        );
    }

    #[test]
    fn join_with_simplex_keeps_wedge() {
        let pts = FamilyElement::from_shifted(&k(2, &[&[1], &[2]])).unwrap();
        let simplex = FamilyElement::from_shifted(&k(2, &[&[1, 2]])).unwrap();
        let out = op_join(&pts, &simplex).unwrap();
        assert_eq!(out.t, 1);
        let w = sym(&out);
        assert_eq!(w.multiplicity(1, sx(&[1, 2])), 1);
        assert_eq!(w.total_multiplicity(), 1);
        assert_eq!(
            out.wedge.poincare(),
            zk_profile(&out.complex).unwrap().poincare
        );
    }

    #[test]
    fn kunneth_for_join() {
        let a = FamilyElement::from_shifted(&k(3, &[&[1, 2], &[3]])).unwrap();
        let b = FamilyElement::from_shifted(&k(2, &[&[1], &[2]])).unwrap();
        let out = op_join(&a, &b).unwrap();
        let one = IntPolynomial::one();
        let lhs = one.add(&out.wedge.poincare());
        let rhs = one
            .add(&a.wedge.poincare())
            .mul(&one.add(&b.wedge.poincare()));
        assert_eq!(lhs, rhs);
        assert_eq!(
            out.wedge.poincare(),
            zk_profile(&out.complex).unwrap().poincare
        );
    }

    #[test]
    fn virtual_path_matches_symbolic() {
        let edge = FamilyElement::from_shifted(&k(2, &[&[1, 2]])).unwrap();
        let pts = FamilyElement::from_shifted(&k(2, &[&[1], &[2]])).unwrap();
        let virt = FamilyElement {
            t: pts.t,
            complex: pts.complex.clone(),
            wedge: FamilyWedge::Virtual(pts.wedge.virtual_dims()),
        };

        let symbolic = op_disjoint_union(&edge, &pts).unwrap();
        let degraded = op_disjoint_union(&edge, &virt).unwrap();
        assert!(matches!(degraded.wedge, FamilyWedge::Virtual(_)));
        assert_eq!(
            symbolic.wedge.virtual_dims(),
            degraded.wedge.virtual_dims()
        );

        let symbolic = op_join(&edge, &pts).unwrap();
        let degraded = op_join(&edge, &virt).unwrap();
        assert_eq!(
            symbolic.wedge.virtual_dims(),
            degraded.wedge.virtual_dims()
        );

        let symbolic = op_glue(&pts, &pts, &[(1, 1)]).unwrap();
        let degraded = op_glue(&virt, &virt, &[(1, 1)]).unwrap();
        assert_eq!(
            symbolic.wedge.virtual_dims(),
            degraded.wedge.virtual_dims()
        );
    }

    #[test]
    fn glue_produces_three_points() {
        let pts = FamilyElement::from_shifted(&k(2, &[&[1], &[2]])).unwrap();
        let out = op_glue(&pts, &pts, &[(2, 1)]).unwrap();
        assert_eq!(out.complex, k(3, &[&[1], &[2], &[3]]));
        assert_eq!(sym(&out), &decompose(&out.complex).unwrap());
    }
}
