//! Finite abstract simplicial complexes on an ordered vertex set, stored by
//! maximal faces, with the subcomplex operators (link, star, rest, full),
//! combinators (disjoint union, glue along a face, join), skeleta, and
//! shiftedness detection.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

/// Hard cap on vertex labels: a face is a bitmask in a `u64`.
pub const MAX_VERTICES: u32 = 64;

/// A face: a finite set of vertex labels from 1..=64, stored as a bitmask.
/// The empty set is the empty face (dimension -1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex {
    mask: u64,
}

impl Simplex {
    pub const EMPTY: Simplex = Simplex { mask: 0 };

    /// Build a face from a list of vertex labels (any order).
    pub fn new(vertices: &[u32]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v < 1 || v > MAX_VERTICES {
                return Err(Error::SizeLimit {
                    what: "vertex labels",
                    limit: MAX_VERTICES as u64,
                    got: v as u64,
                });
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            mask |= bit;
        }
        Ok(Simplex { mask })
    }

    /// The face {1, ..., n}.
    pub fn full_range(n: u32) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            Simplex::EMPTY
        } else {
            Simplex {
                mask: u64::MAX >> (64 - n),
            }
        }
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Simplex { mask }
    }

    pub(crate) fn mask(&self) -> u64 {
        self.mask
    }

    pub fn single(v: u32) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        Simplex {
            mask: 1u64 << (v - 1),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Number of vertices.
    pub fn size(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Geometric dimension: size - 1; the empty face has dimension -1.
    pub fn dim(&self) -> i32 {
        self.size() as i32 - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.mask & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex {
            mask: self.mask | other.mask,
        }
    }

    pub fn intersect(&self, other: &Simplex) -> Simplex {
        Simplex {
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex {
            mask: self.mask & !other.mask,
        }
    }

    pub fn with(&self, v: u32) -> Simplex {
        self.union(&Simplex::single(v))
    }

    pub fn without(&self, v: u32) -> Simplex {
        self.difference(&Simplex::single(v))
    }

    pub fn min_vertex(&self) -> Option<u32> {
        if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() + 1)
        }
    }

    pub fn max_vertex(&self) -> Option<u32> {
        if self.mask == 0 {
            None
        } else {
            Some(64 - self.mask.leading_zeros())
        }
    }

    /// Vertices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All subsets of this face (including the empty face and itself),
    /// in increasing bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = Simplex> {
        let mask = self.mask;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == mask {
                None
            } else {
                Some(c.wrapping_sub(mask) & mask)
            };
            Some(Simplex { mask: c })
        })
    }
}

/// Left-lexicographic order on increasing vertex sequences; when one
/// sequence is a prefix of the other, the shorter comes first.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.mask, other.mask);
        while a != 0 && b != 0 {
            let (va, vb) = (a.trailing_zeros(), b.trailing_zeros());
            match va.cmp(&vb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        (a != 0).cmp(&(b != 0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which subcomplex `subcomplex` should take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcomplexKind {
    /// link(sigma): faces disjoint from sigma whose union with sigma is a face.
    Link,
    /// star(sigma): faces whose union with sigma is a face (ground set kept).
    Star,
    /// rest(S): faces contained in the vertex subset S.
    Rest,
    /// full subcomplex K_S: all faces of K contained in S (same as rest).
    Full,
}

/// How `combine` puts two complexes together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineKind {
    DisjointUnion,
    Glue,
    Join,
}

/// Verdict of a shiftedness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftVerdict {
    pub shifted: bool,
    pub witness: ShiftWitness,
}

/// Either a confirming vertex order (listed smallest role first) or a
/// violating triple: face, vertex v in it, and a smaller replacement v'
/// with (face - v) + v' not a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftWitness {
    Order(Vec<u32>),
    Violation { face: Simplex, v: u32, v_prime: u32 },
}

/// Mode for `is_shifted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMode {
    /// Check the identity labeling (increasing vertex labels).
    GivenOrder,
    /// Look for any vertex order that makes the complex shifted.
    Search,
}

/// Cap for the shifted-order search.
pub const SHIFT_SEARCH_CAP: u32 = 10;

/// Canonical relabeling data produced by glue and join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombineLayout {
    /// Old label in the left operand -> new label.
    pub map1: BTreeMap<u32, u32>,
    /// Old label in the right operand -> new label.
    pub map2: BTreeMap<u32, u32>,
    /// New labels of vertices only in the left operand.
    pub left_only: Simplex,
    /// New labels of the identified common face (empty for join/union).
    pub shared: Simplex,
    /// New labels of vertices only in the right operand.
    pub right_only: Simplex,
}

/// A simplicial complex: a ground set of vertex labels plus the set of
/// maximal faces. Every subset of a face is a face; the empty face is
/// always a member. A ground vertex need not be a face (a "ghost");
/// operations that forbid ghosts say so.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    ground: Simplex,
    maximal: Vec<Simplex>,
    closure: OnceLock<BTreeSet<Simplex>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.maximal == other.maximal
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The complex generated by the downward closure of the given faces on
    /// the ground set {1..n}. Input faces may be unsorted; they are
    /// deduplicated and reduced to the maximal ones.
    pub fn construct(n: u32, faces: &[Vec<u32>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "ground set vertices",
                limit: MAX_VERTICES as u64,
                got: n as u64,
            });
        }
        let mut gens = Vec::with_capacity(faces.len());
        for verts in faces {
            for &v in verts {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            gens.push(Simplex::new(verts)?);
        }
        Ok(Self::from_parts(Simplex::full_range(n), gens))
    }

    /// Internal constructor: faces must already lie inside `ground`.
    pub(crate) fn from_parts(ground: Simplex, faces: Vec<Simplex>) -> Self {
        debug_assert!(faces.iter().all(|f| f.is_subset(&ground)));
        let maximal = reduce_to_maximal(faces);
        SimplicialComplex {
            ground,
            maximal,
            closure: OnceLock::new(),
        }
    }

    pub fn ground(&self) -> Simplex {
        self.ground
    }

    /// Number of ground vertices.
    pub fn n(&self) -> u32 {
        self.ground.size()
    }

    /// Maximal faces in lexicographic order.
    pub fn maximal_faces(&self) -> &[Simplex] {
        &self.maximal
    }

    /// Face membership (the empty face is always a member).
    pub fn contains(&self, face: &Simplex) -> bool {
        self.maximal.iter().any(|m| face.is_subset(m))
    }

    /// Largest face dimension (-1 for the complex {empty}).
    pub fn dim(&self) -> i32 {
        self.maximal.iter().map(|m| m.dim()).max().unwrap_or(-1)
    }

    fn closure_set(&self) -> &BTreeSet<Simplex> {
        self.closure.get_or_init(|| {
            let mut set = BTreeSet::new();
            for m in &self.maximal {
                for s in m.subsets() {
                    set.insert(s);
                }
            }
            set
        })
    }

    /// All faces (or all faces of the given dimension), lexicographically
    /// sorted. Includes the empty face when `dim` is None or Some(-1).
    pub fn faces(&self, dim: Option<i32>) -> Vec<Simplex> {
        match dim {
            None => self.closure_set().iter().copied().collect(),
            Some(d) => self
                .closure_set()
                .iter()
                .copied()
                .filter(|s| s.dim() == d)
                .collect(),
        }
    }

    /// Total face count, the empty face included.
    pub fn face_count(&self) -> usize {
        self.closure_set().len()
    }

    /// Ground vertices that are not faces.
    pub fn ghost_vertices(&self) -> Simplex {
        let present = self
            .maximal
            .iter()
            .fold(Simplex::EMPTY, |acc, m| acc.union(m));
        self.ground.difference(&present)
    }

    /// Vertices contained in every maximal face (the complex is the join of
    /// such a vertex with the rest).
    pub fn cone_vertices(&self) -> Simplex {
        let mut acc = self.ground;
        for m in &self.maximal {
            acc = acc.intersect(m);
        }
        acc
    }

    /// Vertices that are faces but lie in no edge (their singleton is a
    /// maximal face).
    pub fn isolated_vertices(&self) -> Simplex {
        let mut acc = Simplex::EMPTY;
        for m in &self.maximal {
            if m.size() == 1 {
                acc = acc.union(m);
            }
        }
        acc
    }

    /// True when the complex is the full simplex on its ground set
    /// (including the single point and the complex {empty} on no vertices).
    pub fn is_full_simplex(&self) -> bool {
        self.maximal.len() == 1 && self.maximal[0] == self.ground
    }

    /// The subcomplex of the requested kind. link/rest/full are re-indexed
    /// onto their natural ground set (original labels kept); star keeps the
    /// ambient ground set.
    pub fn subcomplex(&self, kind: SubcomplexKind, arg: &Simplex) -> Result<Self> {
        match kind {
            SubcomplexKind::Link => self.link(arg),
            SubcomplexKind::Star => self.star(arg),
            SubcomplexKind::Rest | SubcomplexKind::Full => self.restrict(arg),
        }
    }

    /// link(sigma) on the ground set ground - sigma.
    pub fn link(&self, sigma: &Simplex) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace { arg: *sigma });
        }
        let faces: Vec<Simplex> = self
            .maximal
            .iter()
            .filter(|m| sigma.is_subset(m))
            .map(|m| m.difference(sigma))
            .collect();
        Ok(Self::from_parts(self.ground.difference(sigma), faces))
    }

    /// star(sigma) on the same ground set.
    pub fn star(&self, sigma: &Simplex) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::NotAFace { arg: *sigma });
        }
        let faces: Vec<Simplex> = self
            .maximal
            .iter()
            .filter(|m| sigma.is_subset(m))
            .copied()
            .collect();
        Ok(Self::from_parts(self.ground, faces))
    }

    /// Full subcomplex on the vertex subset: all faces contained in it,
    /// re-indexed onto that subset as ground.
    pub fn restrict(&self, sub: &Simplex) -> Result<Self> {
        if !sub.is_subset(&self.ground) {
            let v = sub.difference(&self.ground).min_vertex().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.ground.max_vertex().unwrap_or(0),
            });
        }
        let faces: Vec<Simplex> = self.maximal.iter().map(|m| m.intersect(sub)).collect();
        Ok(Self::from_parts(*sub, faces))
    }

    /// Rename ground vertices through an injective map. Every ground vertex
    /// must be mapped; images must be distinct labels in 1..=64.
    pub fn relabel(&self, map: &BTreeMap<u32, u32>) -> Result<Self> {
        let (ground, _) = relabel_simplex(&self.ground, map)?;
        let mut faces = Vec::with_capacity(self.maximal.len());
        for m in &self.maximal {
            faces.push(relabel_simplex(m, map)?.0);
        }
        Ok(Self::from_parts(ground, faces))
    }

    /// Combined complex on a canonically relabeled ground set; see
    /// `glue_with_layout` and `join_with_layout` for the layout details.
    /// `pairs` identifies a common face for Glue (empty means gluing along
    /// the empty face, i.e. disjoint union) and must be None for the others.
    pub fn combine(
        kind: CombineKind,
        k1: &SimplicialComplex,
        k2: &SimplicialComplex,
        pairs: Option<&[(u32, u32)]>,
    ) -> Result<Self> {
        match kind {
            CombineKind::DisjointUnion => {
                if pairs.is_some_and(|p| !p.is_empty()) {
                    return Err(Error::BadGlue(
                        "disjoint union takes no face identification".into(),
                    ));
                }
                Ok(Self::glue_with_layout(k1, k2, &[])?.0)
            }
            CombineKind::Glue => Ok(Self::glue_with_layout(k1, k2, pairs.unwrap_or(&[]))?.0),
            CombineKind::Join => {
                if pairs.is_some_and(|p| !p.is_empty()) {
                    return Err(Error::BadGlue("join takes no face identification".into()));
                }
                Ok(Self::join_with_layout(k1, k2)?.0)
            }
        }
    }

    /// Glue k1 and k2 along a common face given as (k1 vertex, k2 vertex)
    /// pairs. Vertices are relabeled so k1 occupies {1..m}, the shared face
    /// {l+1..m}, and k2 {l+1..n}. Empty `pairs` is the disjoint union.
    pub fn glue_with_layout(
        k1: &SimplicialComplex,
        k2: &SimplicialComplex,
        pairs: &[(u32, u32)],
    ) -> Result<(Self, CombineLayout)> {
        let mut sigma1 = Simplex::EMPTY;
        let mut sigma2 = Simplex::EMPTY;
        for &(a, b) in pairs {
            if !k1.ground.contains(a) {
                return Err(Error::BadGlue(format!("{a} is not a vertex of the left complex")));
            }
            if !k2.ground.contains(b) {
                return Err(Error::BadGlue(format!("{b} is not a vertex of the right complex")));
            }
            if sigma1.contains(a) {
                return Err(Error::BadGlue(format!("vertex {a} identified twice")));
            }
            if sigma2.contains(b) {
                return Err(Error::BadGlue(format!("vertex {b} identified twice")));
            }
            sigma1 = sigma1.with(a);
            sigma2 = sigma2.with(b);
        }
        if !k1.contains(&sigma1) {
            return Err(Error::NotAFace { arg: sigma1 });
        }
        if !k2.contains(&sigma2) {
            return Err(Error::NotAFace { arg: sigma2 });
        }
        let s = sigma1.size();
        let n1 = k1.n();
        let n2 = k2.n();
        let l = n1 - s;
        let m = n1;
        let n = n1 + n2 - s;
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "combined ground set vertices",
                limit: MAX_VERTICES as u64,
                got: n as u64,
            });
        }

        let mut map1 = BTreeMap::new();
        let mut next = 1u32;
        for v in k1.ground.difference(&sigma1).iter() {
            map1.insert(v, next);
            next += 1;
        }
        debug_assert_eq!(next, l + 1);
        // Shared block ordered by the k1-side label of each pair.
        let mut shared_pairs: Vec<(u32, u32)> = pairs.to_vec();
        shared_pairs.sort_unstable();
        let mut map2 = BTreeMap::new();
        for &(a, b) in &shared_pairs {
            map1.insert(a, next);
            map2.insert(b, next);
            next += 1;
        }
        debug_assert_eq!(next, m + 1);
        for v in k2.ground.difference(&sigma2).iter() {
            map2.insert(v, next);
            next += 1;
        }
        debug_assert_eq!(next, n + 1);

        let r1 = k1.relabel(&map1)?;
        let r2 = k2.relabel(&map2)?;
        let mut faces = r1.maximal.clone();
        faces.extend_from_slice(&r2.maximal);
        let combined = Self::from_parts(Simplex::full_range(n), faces);
        let layout = CombineLayout {
            map1,
            map2,
            left_only: interval(1, l),
            shared: interval(l + 1, m),
            right_only: interval(m + 1, n),
        };
        Ok((combined, layout))
    }

    /// Join of k1 and k2: faces are unions of a face of each. k1 is
    /// relabeled onto {1..m}, k2 onto {m+1..n}.
    pub fn join_with_layout(
        k1: &SimplicialComplex,
        k2: &SimplicialComplex,
    ) -> Result<(Self, CombineLayout)> {
        let n1 = k1.n();
        let n2 = k2.n();
        let n = n1 + n2;
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "combined ground set vertices",
                limit: MAX_VERTICES as u64,
                got: n as u64,
            });
        }
        let mut map1 = BTreeMap::new();
        let mut next = 1u32;
        for v in k1.ground.iter() {
            map1.insert(v, next);
            next += 1;
        }
        let mut map2 = BTreeMap::new();
        for v in k2.ground.iter() {
            map2.insert(v, next);
            next += 1;
        }
        let r1 = k1.relabel(&map1)?;
        let r2 = k2.relabel(&map2)?;
        let mut faces = Vec::with_capacity(r1.maximal.len() * r2.maximal.len());
        for a in &r1.maximal {
            for b in &r2.maximal {
                faces.push(a.union(b));
            }
        }
        let combined = Self::from_parts(Simplex::full_range(n), faces);
        let layout = CombineLayout {
            map1,
            map2,
            left_only: interval(1, n1),
            shared: Simplex::EMPTY,
            right_only: interval(n1 + 1, n),
        };
        Ok((combined, layout))
    }

    /// The complex of all subsets of {1..n} with at most q vertices.
    pub fn skeleton(n: u32, q: u32) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "ground set vertices",
                limit: MAX_VERTICES as u64,
                got: n as u64,
            });
        }
        if q > n {
            return Err(Error::BadParameter(format!(
                "skeleton face size {q} exceeds vertex count {n}"
            )));
        }
        const FACE_CAP: u64 = 1_000_000;
        let count = binomial_u128(n, q);
        if count > FACE_CAP as u128 {
            return Err(Error::SizeLimit {
                what: "skeleton maximal faces",
                limit: FACE_CAP,
                got: u64::MAX,
            });
        }
        if q == 0 {
            return Ok(Self::from_parts(Simplex::full_range(n), vec![]));
        }
        // Gosper's hack: enumerate all q-subsets of {1..n} in mask order.
        let mut faces = Vec::with_capacity(count as usize);
        let top = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut cur = (1u64 << q) - 1;
        loop {
            faces.push(Simplex::from_mask(cur));
            if cur == 0 {
                break;
            }
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r > top || r == 0 {
                break;
            }
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Ok(Self::from_parts(Simplex::full_range(n), faces))
    }

    /// Does `a` dominate `b`: can every occurrence of b in a face be
    /// replaced by a while staying in the complex? Checking maximal faces
    /// suffices by downward closure.
    fn dominates(&self, a: u32, b: u32) -> bool {
        self.maximal.iter().all(|m| {
            !(m.contains(b) && !m.contains(a)) || self.contains(&m.without(b).with(a))
        })
    }

    /// First violation of the identity-order shifted condition, scanning
    /// maximal faces lexicographically.
    fn identity_violation(&self) -> Option<(Simplex, u32, u32)> {
        for m in &self.maximal {
            for v in m.iter() {
                for v_prime in self.ground.iter() {
                    if v_prime >= v {
                        break;
                    }
                    if !m.contains(v_prime) && !self.contains(&m.without(v).with(v_prime)) {
                        return Some((*m, v, v_prime));
                    }
                }
            }
        }
        None
    }

    /// Shiftedness check. GivenOrder tests the identity labeling; Search
    /// looks for any confirming vertex order (refused above 10 vertices).
    pub fn is_shifted(&self, mode: ShiftMode) -> Result<ShiftVerdict> {
        match mode {
            ShiftMode::GivenOrder => Ok(match self.identity_violation() {
                None => ShiftVerdict {
                    shifted: true,
                    witness: ShiftWitness::Order(self.ground.vertices()),
                },
                Some((face, v, v_prime)) => ShiftVerdict {
                    shifted: false,
                    witness: ShiftWitness::Violation { face, v, v_prime },
                },
            }),
            ShiftMode::Search => {
                if self.n() > SHIFT_SEARCH_CAP {
                    return Err(Error::SizeLimit {
                        what: "shifted-order search vertices",
                        limit: SHIFT_SEARCH_CAP as u64,
                        got: self.n() as u64,
                    });
                }
                // A confirming order exists iff the domination relation
                // admits repeated elimination of a vertex dominating all
                // remaining ones; any such choice can be taken greedily.
                let mut remaining: Vec<u32> = self.ground.vertices();
                let mut order = Vec::with_capacity(remaining.len());
                while !remaining.is_empty() {
                    let pick = remaining.iter().copied().find(|&a| {
                        remaining
                            .iter()
                            .all(|&b| b == a || self.dominates(a, b))
                    });
                    match pick {
                        Some(a) => {
                            order.push(a);
                            remaining.retain(|&x| x != a);
                        }
                        None => {
                            let (face, v, v_prime) =
                                self.identity_violation().ok_or_else(|| {
                                    Error::Internal(
                                        "search failed but the identity order verifies".into(),
                                    )
                                })?;
                            return Ok(ShiftVerdict {
                                shifted: false,
                                witness: ShiftWitness::Violation { face, v, v_prime },
                            });
                        }
                    }
                }
                Ok(ShiftVerdict {
                    shifted: true,
                    witness: ShiftWitness::Order(order),
                })
            }
        }
    }
}

/// The face {a..=b} (empty when a > b).
pub(crate) fn interval(a: u32, b: u32) -> Simplex {
    let mut s = Simplex::EMPTY;
    for v in a..=b.min(MAX_VERTICES) {
        if v >= 1 {
            s = s.with(v);
        }
    }
    s
}

fn relabel_simplex(s: &Simplex, map: &BTreeMap<u32, u32>) -> Result<(Simplex, ())> {
    let mut out = Simplex::EMPTY;
    for v in s.iter() {
        let &w = map
            .get(&v)
            .ok_or_else(|| Error::BadParameter(format!("vertex {v} has no relabeling")))?;
        if w < 1 || w > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex labels",
                limit: MAX_VERTICES as u64,
                got: w as u64,
            });
        }
        if out.contains(w) {
            return Err(Error::BadParameter(format!(
                "relabeling is not injective at {w}"
            )));
        }
        out = out.with(w);
    }
    Ok((out, ()))
}

/// Drop faces contained in another face; sort; always keep at least the
/// empty face so the complex is nonempty.
fn reduce_to_maximal(mut faces: Vec<Simplex>) -> Vec<Simplex> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.size()));
    let mut maximal: Vec<Simplex> = Vec::new();
    for f in faces {
        if !maximal.iter().any(|m| f.is_subset(m)) {
            maximal.push(f);
        }
    }
    if maximal.is_empty() {
        maximal.push(Simplex::EMPTY);
    }
    maximal.sort();
    maximal
}

pub(crate) fn binomial_u128(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// C(n, k) as u64; callers stay within 64-vertex scale.
pub(crate) fn binomial(n: u32, k: u32) -> u64 {
    binomial_u128(n, k) as u64
}
