//! Randomized invariants: exact linear algebra, polynomial arithmetic,
//! wedge algebra, complex operators, and the decomposition against the
//! cohomology oracle.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use momangle::decomposer::{build_regular_sequence, decompose, split_theta, star_fibre_trace};
use momangle::families::{op_disjoint_union, op_glue, op_join, FamilyElement};
use momangle::hochster::{bigraded_betti, zk_profile};
use momangle::scomplex::{ShiftMode, Simplex, SimplicialComplex};
use momangle::series::{IntPolynomial, RationalFunction};
use momangle::wedge::SymbolicWedge;
use momangle::zhomology::{
    boundary_matrix, cohomology_dims, reduced_homology, smith_normal_form, Field, IntegerMatrix,
};

fn mask_to_verts(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn complex_from_masks(n: u32, masks: &[u64]) -> SimplicialComplex {
    let faces: Vec<Vec<u32>> = masks.iter().map(|&m| mask_to_verts(m)).collect();
    SimplicialComplex::construct(n, &faces).unwrap()
}

/// Smallest shifted complex (identity order) containing the generators:
/// close under vertex deletion and replacement by any smaller free vertex.
fn shifted_closure(gens: &[u64]) -> Vec<u64> {
    let mut set: BTreeSet<u64> = gens.iter().copied().collect();
    set.insert(0);
    let mut queue: Vec<u64> = set.iter().copied().collect();
    while let Some(f) = queue.pop() {
        let mut rest = f;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let without = f & !bit;
            let mut candidates = vec![without];
            for vp in 0..bit.trailing_zeros() {
                if f & (1 << vp) == 0 {
                    candidates.push(without | (1 << vp));
                }
            }
            for c in candidates {
                if set.insert(c) {
                    queue.push(c);
                }
            }
        }
    }
    set.into_iter().collect()
}

fn arb_complex(max_n: u32) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1u64 << n), 0..=6)
            .prop_map(move |masks| complex_from_masks(n, &masks))
    })
}

/// Random ghost-free shifted complex under the identity order.
fn arb_shifted(max_n: u32) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=3).prop_map(move |mut gens| {
            gens.push(1u64 << (n - 1));
            complex_from_masks(n, &shifted_closure(&gens))
        })
    })
}

fn arb_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-10i64..=10, c), r)
    })
}

fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-5i64..=5, 0..=5).prop_map(|c| IntPolynomial::from_coeffs(&c))
}

fn arb_ratfun() -> impl Strategy<Value = RationalFunction> {
    (arb_poly(), arb_poly()).prop_map(|(n, d)| {
        let den = if d.is_zero() { IntPolynomial::one() } else { d };
        RationalFunction::new(n, den).unwrap()
    })
}

fn arb_wedge(lo: u32, hi: u32) -> impl Strategy<Value = SymbolicWedge> {
    let span = hi - lo + 1;
    prop::collection::vec((1u32..=3, 1u64..(1u64 << span), 1u64..=3), 0..=4).prop_map(
        move |parts| {
            let mut w = SymbolicWedge::empty();
            for (s, mask, m) in parts {
                let verts: Vec<u32> = mask_to_verts(mask).iter().map(|v| v + lo - 1).collect();
                w.add(s, Simplex::new(&verts).unwrap(), m);
            }
            w
        },
    )
}

/// Fraction-free Gaussian elimination rank over the rationals.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..nc {
        let Some(piv) = (rank..nr).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        for i in 0..nr {
            if i == rank {
                continue;
            }
            for j in 0..nc {
                if j == col {
                    continue;
                }
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == nr {
            break;
        }
    }
    rank
}

fn wedge_as_map(w: &SymbolicWedge) -> BTreeMap<(u32, Simplex), u64> {
    w.summands().map(|(&k, &m)| (k, m)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_diagonal_divides_and_rank_matches(rows in arb_matrix(6)) {
        let snf = smith_normal_form(IntegerMatrix::from_rows(rows.clone()));
        for w in snf.diagonal.windows(2) {
            prop_assert!((&w[1] % &w[0]).bits() == 0, "chain broken: {:?}", snf.diagonal);
        }
        prop_assert_eq!(snf.rank, bareiss_rank(&rows));

        // Transposing permutes nothing in the invariant factors.
        let (r, c) = (rows.len(), rows[0].len());
        let t: Vec<Vec<i64>> = (0..c).map(|j| (0..r).map(|i| rows[i][j]).collect()).collect();
        let snf_t = smith_normal_form(IntegerMatrix::from_rows(t));
        prop_assert_eq!(snf.diagonal, snf_t.diagonal);
    }

    #[test]
    fn ratfun_ring_axioms(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn wedge_algebra(a in arb_wedge(1, 3), b in arb_wedge(1, 3), c in arb_wedge(1, 3), k in 1u32..=3) {
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));

        // Suspension shifts every realized dimension by k.
        let direct = a.realize(1).unwrap().poincare();
        let suspended = a.suspend(k).realize(1).unwrap().poincare();
        prop_assert_eq!(suspended, direct.mul(&IntPolynomial::monomial(1, k as usize)));
    }

    #[test]
    fn smash_realizes_as_dimension_sum(a in arb_wedge(1, 3), b in arb_wedge(4, 6)) {
        let s = a.smash(&b).unwrap();
        let pa = a.realize(1).unwrap().poincare();
        let pb = b.realize(1).unwrap().poincare();
        prop_assert_eq!(s.realize(1).unwrap().poincare(), pa.mul(&pb));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_boundary_euler(k in arb_complex(6)) {
        let all: BTreeSet<Simplex> = k.faces(None).into_iter().collect();
        for f in &all {
            for s in f.subsets() {
                prop_assert!(all.contains(&s));
            }
        }

        for d in 0..=(k.dim() + 1) {
            let a = boundary_matrix(&k, d - 1);
            let b = boundary_matrix(&k, d);
            prop_assert!(a.matmul(&b).is_zero());
        }

        let h = reduced_homology(&k);
        let mut chi_faces: i64 = 0;
        for d in 0..=k.dim() {
            let cnt = k.faces(Some(d)).len() as i64;
            chi_faces += if d % 2 == 0 { cnt } else { -cnt };
        }
        // The degree -1 group is nonzero exactly for the complex whose only
        // face is empty, where it cancels the leading 1.
        let mut chi_ranks: i64 = 1 - h.rank(-1) as i64;
        for d in 0..=k.dim() {
            let r = h.rank(d) as i64;
            chi_ranks += if d % 2 == 0 { r } else { -r };
        }
        prop_assert_eq!(chi_faces, chi_ranks);
    }

    #[test]
    fn field_dims_dominate_rational_dims(k in arb_complex(6), p in prop::sample::select(vec![2u64, 3, 5])) {
        let q = cohomology_dims(&k, Field::Rationals).unwrap();
        let fp = cohomology_dims(&k, Field::Fp(p)).unwrap();
        for (d, r) in q {
            prop_assert!(fp.get(&d).copied().unwrap_or(0) >= r);
        }
    }

    #[test]
    fn shifted_search_agrees_and_survives_relabeling(k in arb_shifted(6), seed in any::<u64>()) {
        prop_assert!(k.is_shifted(ShiftMode::GivenOrder).unwrap().shifted);
        prop_assert!(k.is_shifted(ShiftMode::Search).unwrap().shifted);

        // Permute labels pseudo-randomly; the search must still succeed.
        let n = k.n();
        let mut labels: Vec<u32> = (1..=n).collect();
        let mut state = seed | 1;
        for i in (1..labels.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            labels.swap(i, j);
        }
        let map: BTreeMap<u32, u32> = (1..=n).zip(labels).collect();
        let relabeled = k.relabel(&map).unwrap();
        prop_assert!(relabeled.is_shifted(ShiftMode::Search).unwrap().shifted);
    }

    #[test]
    fn decomposition_matches_oracle(k in arb_shifted(7)) {
        let w = decompose(&k).unwrap();
        let betti = bigraded_betti(&k).unwrap();
        prop_assert!(betti.is_torsion_free());

        let from_wedge: BTreeMap<(Simplex, u32), u64> = w
            .summands()
            .map(|(&(s, i), &m)| ((i, s + i.size()), m))
            .collect();
        let from_oracle: BTreeMap<(Simplex, u32), u64> =
            betti.entries().map(|(&k, &v)| (k, v)).collect();
        prop_assert_eq!(from_wedge, from_oracle);
    }

    #[test]
    fn regular_steps_follow_the_prefix_rule(k in arb_shifted(7)) {
        // S is always the set of ground vertices below the adjoined face.
        let steps = build_regular_sequence(&k).unwrap();
        let ground = k.ground();
        for step in steps {
            let min = step.simplex.min_vertex().unwrap();
            let expect: Vec<u32> = ground.iter().filter(|&j| j < min).collect();
            prop_assert_eq!(step.s_set.vertices(), expect);
            prop_assert_eq!(
                step.simplex.union(&step.s_set).union(&step.t_set),
                ground
            );
        }
    }

    #[test]
    fn fibre_fold_reaches_link_decomposition(k in arb_shifted(7)) {
        prop_assume!(k.n() >= 2 && k.isolated_vertices().is_empty());
        let trace = star_fibre_trace(&k).unwrap();
        let v0 = k.ground().min_vertex().unwrap();
        let link = k.link(&Simplex::new(&[v0]).unwrap()).unwrap();
        prop_assert!(link.ghost_vertices().is_empty());
        prop_assert_eq!(&trace.fibre, &decompose(&link).unwrap());

        // Per-step series bookkeeping: after = t * C + before - D.
        let t = IntPolynomial::monomial(1, 1);
        for st in &trace.steps {
            let p = |w: &SymbolicWedge| w.realize(1).unwrap().poincare();
            let lhs = p(&st.f_after);
            let rhs = t.mul(&p(&st.c)).add(&p(&st.f_before)).sub(&p(&st.d));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn theta_split_recombines(k in arb_shifted(7)) {
        // The split's internal recombination check must hold, and the
        // parts reassemble the parent decomposition through the recursion.
        let split = split_theta(&k).unwrap();
        let whole = decompose(&k).unwrap();
        let v0 = k.ground().min_vertex().unwrap();
        let mut lifted = SymbolicWedge::empty();
        for (&(s, i), &m) in split.trivial_part.summands() {
            lifted.add(s + 1, i.with(v0), m);
        }
        let whole_map = wedge_as_map(&whole);
        for (key, m) in wedge_as_map(&lifted) {
            prop_assert!(whole_map.get(&key).copied().unwrap_or(0) >= m);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn union_and_join_match_oracle(a in arb_shifted(5), b in arb_shifted(5)) {
        let ea = FamilyElement::from_shifted(&a).unwrap();
        let eb = FamilyElement::from_shifted(&b).unwrap();

        let u = op_disjoint_union(&ea, &eb).unwrap();
        let profile = zk_profile(&u.complex).unwrap();
        prop_assert!(profile.torsion_free);
        prop_assert_eq!(u.wedge.poincare(), profile.poincare);

        let j = op_join(&ea, &eb).unwrap();
        let profile = zk_profile(&j.complex).unwrap();
        prop_assert_eq!(j.wedge.poincare(), profile.poincare.clone());

        // Kunneth shape of the join polynomial.
        let one = IntPolynomial::one();
        let lhs = one.add(&profile.poincare);
        let rhs = one
            .add(&zk_profile(&a).unwrap().poincare)
            .mul(&one.add(&zk_profile(&b).unwrap().poincare));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn glue_matches_oracle(a in arb_shifted(5), b in arb_shifted(5), pick in any::<u64>()) {
        let ea = FamilyElement::from_shifted(&a).unwrap();
        let eb = FamilyElement::from_shifted(&b).unwrap();

        // Choose a common face: a random face of A sized so B has one too.
        let faces_a = a.faces(None);
        let sigma1 = faces_a[(pick as usize) % faces_a.len()];
        let sigma2 = b
            .faces(Some(sigma1.dim()))
            .first()
            .copied()
            .unwrap_or(Simplex::EMPTY);
        let pairs: Vec<(u32, u32)> = if sigma2.dim() == sigma1.dim() {
            sigma1.iter().zip(sigma2.iter()).collect()
        } else {
            vec![]
        };

        let g = op_glue(&ea, &eb, &pairs).unwrap();
        let profile = zk_profile(&g.complex).unwrap();
        prop_assert!(profile.torsion_free);
        prop_assert_eq!(g.wedge.poincare(), profile.poincare);
    }
}
